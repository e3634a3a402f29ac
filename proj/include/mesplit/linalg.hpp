#pragma once

#include <cmath>
#include <complex>
#include <numeric>
#include <string>
#include <vector>

#include "mesplit/common.hpp"

namespace mesplit {

using cd = std::complex<double>;

// Dense complex matrix, row-major. Built once and then treated as an
// immutable value: every operation returns a fresh matrix, so values can be
// shared freely across threads.
struct CMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<cd> a;

  CMatrix() = default;
  CMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  // Validating constructor: entries must be finite and match r*c.
  CMatrix(int r, int c, std::vector<cd> entries);

  static CMatrix identity(int n);

  cd& operator()(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const cd& operator()(int r, int c) const {
    return a[static_cast<size_t>(r) * cols + c];
  }

  bool square() const { return rows == cols; }
};

CMatrix operator+(const CMatrix& x, const CMatrix& y);
CMatrix operator-(const CMatrix& x, const CMatrix& y);
CMatrix operator*(const CMatrix& x, const CMatrix& y);
CMatrix operator*(cd s, const CMatrix& x);

CMatrix dagger(const CMatrix& m);
cd trace(const CMatrix& m);
double max_abs(const CMatrix& m);  // entrywise sup norm
double hermiticity_defect(const CMatrix& m);
CMatrix hermitian_part(const CMatrix& m);

// Eigendecomposition of a Hermitian matrix: eigenvalues ascending, matching
// eigenvectors in the columns of `vectors`. The solver is specialized to
// Hermitian input (tridiagonalization); it rejects anything else.
struct EighResult {
  std::vector<double> values;
  CMatrix vectors;
};
EighResult eigh(const CMatrix& m, double tol = kValidateTol);

// Smallest eigenvalue of a Hermitian matrix. Throws NotSquare, or
// NotHermitian when max |m - dagger(m)| exceeds tol.
double min_eigenvalue_hermitian(const CMatrix& m, double tol = kValidateTol);

// Unit-norm state vector; squared norm must be 1 within 1e-12.
struct PureState {
  std::vector<cd> amp;

  explicit PureState(std::vector<cd> amplitudes);
  static PureState basis(int dim, int k);

  int dim() const { return static_cast<int>(amp.size()); }
};

cd inner(const PureState& x, const PureState& y);  // <x|y>
CMatrix projector(const PureState& psi);
PureState apply(const CMatrix& u, const PureState& psi);
double trace_distance(const PureState& x, const PureState& y);

// Trace-one positive semidefinite operator. Construction validates
// hermiticity (1e-12 entrywise), spectrum (>= -1e-10) and trace (1e-10).
struct DensityOp {
  CMatrix mat;

  explicit DensityOp(CMatrix m);
  int dim() const { return mat.rows; }
};

struct Povm {
  int dim = 0;
  std::vector<CMatrix> elements;
  std::vector<std::string> labels;  // one outcome label per element
};

struct PovmReport {
  std::vector<double> element_min_eigenvalues;
  double completeness_defect = 0.0;  // max entry of |sum(M) - I|
  double tol = kPublicTol;
  bool pass = false;
};

// Checks each element for hermiticity and positivity and the family for
// completeness; `pass` iff all defects are within tol.
PovmReport validate_povm(const Povm& p, double tol = kPublicTol);

// Finite distribution over an explicit support. `checked` enforces the
// normalization (1e-12) and non-negativity (floor -1e-15) invariants.
template <class L>
struct ProbDist {
  std::vector<L> support;
  std::vector<double> weights;

  static ProbDist checked(std::vector<L> support, std::vector<double> weights) {
    if (support.size() != weights.size())
      throw DomainError("ProbDist: support/weights size mismatch");
    double sum = 0.0;
    for (double w : weights) {
      if (!(w >= -1e-15))
        throw DomainError("ProbDist: negative weight " + std::to_string(w));
      sum += w;
    }
    if (std::abs(sum - 1.0) > kValidateTol)
      throw DomainError("ProbDist: weights sum to " + std::to_string(sum));
    return ProbDist{std::move(support), std::move(weights)};
  }

  size_t size() const { return support.size(); }
};

}  // namespace mesplit

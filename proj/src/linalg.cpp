#include "mesplit/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>

namespace mesplit {

namespace {

bool all_finite(const std::vector<cd>& v) {
  for (const cd& z : v)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

Eigen::MatrixXcd to_eigen(const CMatrix& m) {
  Eigen::MatrixXcd e(m.rows, m.cols);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) e(r, c) = m(r, c);
  return e;
}

void require_same_shape(const CMatrix& x, const CMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw DimensionMismatch("matrix shapes differ");
}

}  // namespace

CMatrix::CMatrix(int r, int c, std::vector<cd> entries)
    : rows(r), cols(c), a(std::move(entries)) {
  if (rows <= 0 || cols <= 0 || a.size() != static_cast<size_t>(rows) * cols)
    throw DimensionMismatch("CMatrix: entry count does not match shape");
  if (!all_finite(a)) throw DomainError("CMatrix: non-finite entry");
}

CMatrix CMatrix::identity(int n) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix operator+(const CMatrix& x, const CMatrix& y) {
  require_same_shape(x, y);
  CMatrix out(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) out.a[i] = x.a[i] + y.a[i];
  return out;
}

CMatrix operator-(const CMatrix& x, const CMatrix& y) {
  require_same_shape(x, y);
  CMatrix out(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) out.a[i] = x.a[i] - y.a[i];
  return out;
}

CMatrix operator*(const CMatrix& x, const CMatrix& y) {
  if (x.cols != y.rows) throw DimensionMismatch("matrix product shapes");
  CMatrix out(x.rows, y.cols);
  for (int r = 0; r < x.rows; ++r)
    for (int k = 0; k < x.cols; ++k) {
      const cd xv = x(r, k);
      if (xv == cd{}) continue;
      for (int c = 0; c < y.cols; ++c) out(r, c) += xv * y(k, c);
    }
  return out;
}

CMatrix operator*(cd s, const CMatrix& x) {
  CMatrix out(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) out.a[i] = s * x.a[i];
  return out;
}

CMatrix dagger(const CMatrix& m) {
  CMatrix out(m.cols, m.rows);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) out(c, r) = std::conj(m(r, c));
  return out;
}

cd trace(const CMatrix& m) {
  if (!m.square()) throw NotSquare("trace of non-square matrix");
  cd t = 0.0;
  for (int i = 0; i < m.rows; ++i) t += m(i, i);
  return t;
}

double max_abs(const CMatrix& m) {
  double v = 0.0;
  for (const cd& z : m.a) v = std::max(v, std::abs(z));
  return v;
}

double hermiticity_defect(const CMatrix& m) {
  if (!m.square()) throw NotSquare("hermiticity defect of non-square matrix");
  double v = 0.0;
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c)
      v = std::max(v, std::abs(m(r, c) - std::conj(m(c, r))));
  return v;
}

CMatrix hermitian_part(const CMatrix& m) {
  if (!m.square()) throw NotSquare("hermitian part of non-square matrix");
  CMatrix out(m.rows, m.cols);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c)
      out(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
  return out;
}

EighResult eigh(const CMatrix& m, double tol) {
  if (!m.square()) throw NotSquare("eigh of non-square matrix");
  if (hermiticity_defect(m) > tol)
    throw NotHermitian("eigh: hermiticity defect above tolerance");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m));
  if (solver.info() != Eigen::Success)
    throw Error("eigh: eigensolver did not converge");
  EighResult out;
  out.values.resize(m.rows);
  out.vectors = CMatrix(m.rows, m.rows);
  for (int i = 0; i < m.rows; ++i) {
    out.values[i] = solver.eigenvalues()(i);
    for (int r = 0; r < m.rows; ++r) out.vectors(r, i) = solver.eigenvectors()(r, i);
  }
  return out;
}

double min_eigenvalue_hermitian(const CMatrix& m, double tol) {
  if (!m.square()) throw NotSquare("min eigenvalue of non-square matrix");
  if (hermiticity_defect(m) > tol)
    throw NotHermitian("min eigenvalue: hermiticity defect above tolerance");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m),
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw Error("min eigenvalue: eigensolver did not converge");
  return solver.eigenvalues()(0);
}

PureState::PureState(std::vector<cd> amplitudes) : amp(std::move(amplitudes)) {
  if (amp.empty()) throw DomainError("PureState: empty amplitude vector");
  if (!all_finite(amp)) throw DomainError("PureState: non-finite amplitude");
  double norm2 = 0.0;
  for (const cd& z : amp) norm2 += std::norm(z);
  if (std::abs(norm2 - 1.0) > kValidateTol)
    throw DomainError("PureState: squared norm " + std::to_string(norm2));
}

PureState PureState::basis(int dim, int k) {
  if (k < 0 || k >= dim) throw IndexOutOfRange("basis state index");
  std::vector<cd> amp(dim);
  amp[k] = 1.0;
  return PureState(std::move(amp));
}

cd inner(const PureState& x, const PureState& y) {
  if (x.dim() != y.dim()) throw DimensionMismatch("inner product dimensions");
  cd s = 0.0;
  for (int i = 0; i < x.dim(); ++i) s += std::conj(x.amp[i]) * y.amp[i];
  return s;
}

CMatrix projector(const PureState& psi) {
  const int n = psi.dim();
  CMatrix out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out(r, c) = psi.amp[r] * std::conj(psi.amp[c]);
  return out;
}

PureState apply(const CMatrix& u, const PureState& psi) {
  if (u.cols != psi.dim()) throw DimensionMismatch("operator/state dimensions");
  std::vector<cd> out(u.rows);
  for (int r = 0; r < u.rows; ++r) {
    cd s = 0.0;
    for (int c = 0; c < u.cols; ++c) s += u(r, c) * psi.amp[c];
    out[r] = s;
  }
  return PureState(std::move(out));
}

double trace_distance(const PureState& x, const PureState& y) {
  // For pure states: sqrt(1 - |<x|y>|^2).
  const double f = std::norm(inner(x, y));
  return std::sqrt(std::max(0.0, 1.0 - f));
}

DensityOp::DensityOp(CMatrix m) : mat(std::move(m)) {
  if (!mat.square()) throw NotSquare("DensityOp: non-square matrix");
  if (hermiticity_defect(mat) > kValidateTol)
    throw NotHermitian("DensityOp: hermiticity defect above 1e-12");
  if (std::abs(trace(mat).real() - 1.0) > kPsdTol ||
      std::abs(trace(mat).imag()) > kPsdTol)
    throw DomainError("DensityOp: trace differs from 1");
  if (min_eigenvalue_hermitian(mat) < -kPsdTol)
    throw DomainError("DensityOp: negative eigenvalue below -1e-10");
}

PovmReport validate_povm(const Povm& p, double tol) {
  if (p.elements.empty()) throw DimensionMismatch("POVM with no elements");
  if (p.labels.size() != p.elements.size())
    throw DimensionMismatch("POVM label count");
  PovmReport report;
  report.tol = tol;
  CMatrix sum(p.dim, p.dim);
  for (const CMatrix& el : p.elements) {
    if (!el.square() || el.rows != p.dim)
      throw DimensionMismatch("POVM element dimension");
    if (hermiticity_defect(el) > kValidateTol)
      throw NotHermitian("POVM element hermiticity defect above 1e-12");
    report.element_min_eigenvalues.push_back(min_eigenvalue_hermitian(el));
    sum = sum + el;
  }
  report.completeness_defect = max_abs(sum - CMatrix::identity(p.dim));
  report.pass = report.completeness_defect <= tol;
  for (double ev : report.element_min_eigenvalues)
    report.pass = report.pass && ev >= -tol;
  return report;
}

}  // namespace mesplit

#pragma once

#include <map>
#include <string>
#include <vector>

#include "mesplit/encoding.hpp"

namespace mesplit {

// Min-entropy in bits: -log2 of a guessing probability.
struct EntropyValue {
  double bits = 0.0;
};

EntropyValue min_entropy(double p);  // DomainError unless 0 < p <= 1

// Two-sided sandwich for the eps-smooth min-entropy of the same quantity:
// lower = -log2(p), upper = -log2(p - eps). DomainError unless 0 <= eps < p.
std::pair<EntropyValue, EntropyValue> smooth_bounds(double p, double eps);

// Optimality certificate for a guessing probability: a feasible measurement
// (primal), a dual operator, both objective values and the duality gap.
struct GuessCertificate {
  int d = 0;
  Povm povm;
  CMatrix dual_op;
  double primal_value = 0.0;
  double dual_value = 0.0;
  double gap = 0.0;  // dual - primal; weak duality keeps this >= -1e-9
  PovmReport povm_report;
  std::vector<double> dual_slack_min_eigenvalues;  // per pair, ascending pair index

  double worst_dual_slack() const;
};

std::string certificate_to_json(const GuessCertificate& c);

// Success probability of a fixed measurement: each outcome guesses the pair
// assigned by `labeling`, which must cover every outcome label.
double pguess_eval(const CodewordEnsemble& e, const Povm& m,
                   const std::map<std::string, DitPair>& labeling);

std::string pair_label(int y0, int y1);

// Matched primal/dual pair certifying that the whole string is guessed with
// probability exactly 1/d: measurement {|psi_y><psi_y| / d}, dual I/d^2.
GuessCertificate whole_string_certificate(const QuditDim& d);

// Value of the fixed basis measurement that reads dit `part` directly:
// computational basis for part 0, Fourier basis for part 1, outcome j
// guessed as j. The diagonal overlap makes this 1/2 + 1/(2 sqrt(d)) for
// every prior.
double part_basis_value(const CodewordEnsemble& e, int part);

// State-discrimination oracle output. `certified_gap` is tr(Q) - value with
// Q the Hermitian part of sum_y p_y rho_y M_y; `worst_dual_slack` the
// smallest eigenvalue of Q - p_y rho_y over y. Convergence means
// certified_gap <= tol and worst_dual_slack >= -tol.
struct DiscriminationResult {
  Povm povm;
  double value = 0.0;
  double certified_gap = 0.0;
  double worst_dual_slack = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct NoConvergence : Error {
  DiscriminationResult best;
  NoConvergence(DiscriminationResult b, const std::string& what);
};

// Independent numerical solver for minimum-error discrimination of
// `states` under `prior`. Fixed-point iteration on the optimality
// conditions; correctness is established solely by the returned dual
// certificate, never by the iteration itself.
DiscriminationResult discriminate_oracle(const ProbDist<int>& prior,
                                         const std::vector<DensityOp>& states,
                                         double tol, int max_iter);

}  // namespace mesplit

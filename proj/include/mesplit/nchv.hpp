#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mesplit/common.hpp"

namespace mesplit {

// Deterministic non-contextual hidden-variable scenario: strings (y0,y1) in
// {0..d-1}^2 are encoded as distributions over a finite hidden-variable set,
// measurements are collections of deterministic effects, and the optimal
// readout is the singleton partition of the hidden variables (any
// deterministic-effect measurement is a coarsening of it).
struct HiddenVarModel {
  int d = 2;                                      // alphabet size per part
  std::vector<std::string> lambdas;               // hidden-variable labels
  std::vector<double> prior;                      // d*d, index y0*d + y1
  std::vector<std::vector<double>> preparations;  // [pair][lambda]

  int n_lambda() const { return static_cast<int>(lambdas.size()); }
  int pairs() const { return d * d; }
  void validate() const;  // DomainError on any broken invariant

  // p(lambda) = sum_y prior(y) p(lambda | P_y)
  std::vector<double> lambda_marginal() const;
};

enum class GuessTarget { Whole, Part0, Part1 };

// Optimal guessing probability: read the hidden variable, answer the most
// likely target value (ties to the lowest value).
double pguess_classical(const HiddenVarModel& m, GuessTarget target);

// A measurement as deterministic effects: every hidden variable is assigned
// exactly one outcome.
struct DetMeasurement {
  std::vector<int> assignment;  // lambda -> outcome
};

// Guessing probability achieved by a fixed measurement followed by the Bayes
// decision rule on its outcome. Never exceeds pguess_classical.
double pguess_with_measurement(const HiddenVarModel& m,
                               const DetMeasurement& meas, GuessTarget target);

// Extension of a model over Lambda x {0_C, 1_C}. Branch b of a pair's
// preparation is a distribution over the extended set (index c*n + lambda)
// entered with weight branch_weights[pair][b]; marginalizing the extension
// coordinate must recover the base preparation exactly.
//
// asked_part[b] names the dit the pointer designates when the extension
// lands in branch b. The threshold construction bounds the posterior of the
// *first* dit on the high branch 1_C and of the second on 0_C, so split()
// produces asked_part = {1, 0}.
struct SplitModel {
  HiddenVarModel base;
  double alpha_bits = 0.0;  // min-entropy of the whole string, bits
  std::array<int, 2> asked_part{1, 0};
  std::vector<std::array<double, 2>> branch_weights;  // [pair] -> (q0, q1)
  std::vector<std::array<std::vector<double>, 2>> preparations_c;

  void validate() const;
};

// Threshold construction: with alpha = -log2 pguess(whole) and
// tau = 2^(-alpha/2), a hidden variable joins branch 1_C for pair (y0,y1)
// iff sum_{y0'} p(P_{y0'y1} | lambda) >= tau.
SplitModel split(const HiddenVarModel& m);

struct SplitReport {
  double alpha_bits = 0.0;
  double h_ycc_bits = 0.0;         // min-entropy of (Y_C, C) given E
  double h_yc_given_c_bits = 0.0;  // min-entropy of Y_C given E and C
  double theorem_slack = 0.0;      // h_ycc - alpha/2
  double corollary_slack = 0.0;    // h_yc_given_c - (alpha/2 - 1)
  bool theorem_pass = false;
  bool corollary_pass = false;
};

// Exhaustive evaluation of both entropies over the extended model.
SplitReport verify_split(const SplitModel& s, double tol = kPublicTol);

// Classical side variable Z attached to the model: a conditional
// distribution p(z | pair, lambda).
struct ZAugment {
  int alphabet = 1;
  std::vector<std::vector<std::vector<double>>> cond;  // [pair][lambda][z]

  void validate(const HiddenVarModel& m) const;
};

ZAugment constant_z(const HiddenVarModel& m, int alphabet);
ZAugment z_equals_part0(const HiddenVarModel& m);
ZAugment random_z_augment(const HiddenVarModel& m, int alphabet,
                          std::uint64_t seed);

struct EntropyIdentitiesReport {
  double h_y_e_bits = 0.0;
  double h_yz_e_bits = 0.0;
  double h_y_ez_bits = 0.0;
  double monotonicity_slack_bits = 0.0;  // H(YZ|E) - H(Y|E)
  double chain_rule_slack_bits = 0.0;    // H(Y|EZ) - (H(YZ|E) - log2 |Z|)
  bool pass = false;
};

EntropyIdentitiesReport entropy_identities_check(const HiddenVarModel& m,
                                                 const ZAugment& z,
                                                 double tol = kPublicTol);

// Model whose side information carries leak_fn(lambda) (m_bits bits) next to
// the original register. Guessing probabilities can drop the min-entropy by
// at most m_bits.
HiddenVarModel leak(const HiddenVarModel& m, const std::vector<int>& leak_fn,
                    int m_bits);

// Uniform string, side information equal to one of the two dits chosen by a
// fair coin; hidden variable = (revealed value, which coin).
HiddenVarModel coin_example(int d);

// The coin example extended with the pointer that names the dit the side
// information does not reveal; H(Y_C | E C) = log2 d.
SplitModel pointer_split_model(int d);

// Random model for property-test corpora: flat-simplex preparations and
// prior, |Lambda| = n_lambda.
HiddenVarModel random_model(int d, int n_lambda, std::uint64_t seed);

std::string model_to_json(const HiddenVarModel& m);
HiddenVarModel model_from_json(const std::string& text);
std::string split_report_to_json(const SplitReport& r);

}  // namespace mesplit

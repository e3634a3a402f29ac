#pragma once

#include <utility>
#include <vector>

#include "mesplit/linalg.hpp"
#include "mesplit/qudit.hpp"

namespace mesplit {

using DitPair = std::pair<int, int>;

inline int pair_index(int d, int y0, int y1) { return y0 * d + y1; }

// Fourier-invariant seed state (|0> + F|0>) / sqrt(2(1 + 1/sqrt(d))).
// Construction enforces ||F*state - state|| <= 1e-10.
struct FiducialState {
  QuditDim d;
  PureState state;

  FiducialState(QuditDim dim, PureState s);
};

FiducialState fiducial(const QuditDim& d);  // NotPrime for composite d

// X^y0 Z^y1 applied to the fiducial state.
PureState codeword(const QuditDim& d, int y0, int y1);

// Source ensemble: a prior over dit pairs together with all d^2 codewords.
struct CodewordEnsemble {
  QuditDim d;
  ProbDist<DitPair> prior;          // support in pair_index order
  std::vector<PureState> codewords; // index pair_index(d, y0, y1)

  const PureState& codeword_at(int y0, int y1) const;
  double prior_at(int y0, int y1) const;
};

CodewordEnsemble uniform_ensemble(const QuditDim& d);
CodewordEnsemble ensemble_with_prior(const QuditDim& d,
                                     const std::vector<double>& prior);

// Normalized mixture of the codewords whose dit at `part` equals `value`.
// ZeroMass when the conditioning value carries no prior probability.
DensityOp marginal_sigma(const CodewordEnsemble& e, int part, int value);

// Reproducibility artifact: {d, prior: [[y0,y1,p]...],
// codewords: [[y0,y1,[re,im]...]...]}. Loading re-validates the codewords
// against the Weyl-shifted fiducial state.
std::string ensemble_to_json(const CodewordEnsemble& e);
CodewordEnsemble ensemble_from_json(const std::string& text);

}  // namespace mesplit

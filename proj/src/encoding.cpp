#include "mesplit/encoding.hpp"

#include <json.hpp>

namespace mesplit {

namespace {

void require_prime(const QuditDim& d) {
  if (!d.prime_checked)
    throw NotPrime("d must be prime (got " + std::to_string(d.d) + ")");
}

double f_invariance_defect(const QuditDim& d, const PureState& s) {
  const PureState fs = apply(fourier(d), s);
  double norm2 = 0.0;
  for (int i = 0; i < s.dim(); ++i) norm2 += std::norm(fs.amp[i] - s.amp[i]);
  return std::sqrt(norm2);
}

}  // namespace

FiducialState::FiducialState(QuditDim dim, PureState s)
    : d(dim), state(std::move(s)) {
  if (state.dim() != d.d) throw DimensionMismatch("fiducial state dimension");
  if (f_invariance_defect(d, state) > 1e-10)
    throw DomainError("fiducial state is not Fourier-invariant");
}

FiducialState fiducial(const QuditDim& d) {
  require_prime(d);
  // (|0> + F|0>) has amplitudes 1 + 1/sqrt(d) at 0 and 1/sqrt(d) elsewhere.
  const double rd = 1.0 / std::sqrt(static_cast<double>(d.d));
  const double norm = 1.0 / std::sqrt(2.0 * (1.0 + rd));
  std::vector<cd> amp(d.d, norm * rd);
  amp[0] = norm * (1.0 + rd);
  return FiducialState(d, PureState(std::move(amp)));
}

PureState codeword(const QuditDim& d, int y0, int y1) {
  require_prime(d);
  if (y0 < 0 || y0 >= d.d || y1 < 0 || y1 >= d.d)
    throw IndexOutOfRange("codeword dits must lie in [0, d)");
  const PureState base = fiducial(d).state;
  // (X^y0 Z^y1 psi)_j = omega^(y1*(j-y0)) psi_(j-y0); same arithmetic as the
  // dense Weyl product, entry by entry.
  std::vector<cd> amp(d.d);
  for (int k = 0; k < d.d; ++k)
    amp[(k + y0) % d.d] = omega_pow(d, static_cast<long long>(y1) * k) * base.amp[k];
  return PureState(std::move(amp));
}

const PureState& CodewordEnsemble::codeword_at(int y0, int y1) const {
  if (y0 < 0 || y0 >= d.d || y1 < 0 || y1 >= d.d)
    throw IndexOutOfRange("codeword dits must lie in [0, d)");
  return codewords[pair_index(d.d, y0, y1)];
}

double CodewordEnsemble::prior_at(int y0, int y1) const {
  if (y0 < 0 || y0 >= d.d || y1 < 0 || y1 >= d.d)
    throw IndexOutOfRange("prior dits must lie in [0, d)");
  return prior.weights[pair_index(d.d, y0, y1)];
}

CodewordEnsemble ensemble_with_prior(const QuditDim& d,
                                     const std::vector<double>& prior) {
  require_prime(d);
  if (prior.size() != static_cast<size_t>(d.d) * d.d)
    throw DimensionMismatch("prior must have d^2 entries");
  std::vector<DitPair> support;
  support.reserve(prior.size());
  std::vector<PureState> codewords;
  codewords.reserve(prior.size());
  const PureState base = fiducial(d).state;
  for (int y0 = 0; y0 < d.d; ++y0)
    for (int y1 = 0; y1 < d.d; ++y1) {
      support.emplace_back(y0, y1);
      std::vector<cd> amp(d.d);
      for (int k = 0; k < d.d; ++k)
        amp[(k + y0) % d.d] =
            omega_pow(d, static_cast<long long>(y1) * k) * base.amp[k];
      codewords.emplace_back(std::move(amp));
    }
  return CodewordEnsemble{d, ProbDist<DitPair>::checked(std::move(support), prior),
                          std::move(codewords)};
}

CodewordEnsemble uniform_ensemble(const QuditDim& d) {
  require_prime(d);
  const double w = 1.0 / (static_cast<double>(d.d) * d.d);
  return ensemble_with_prior(d, std::vector<double>(static_cast<size_t>(d.d) * d.d, w));
}

DensityOp marginal_sigma(const CodewordEnsemble& e, int part, int value) {
  if (part != 0 && part != 1) throw IndexOutOfRange("part must be 0 or 1");
  if (value < 0 || value >= e.d.d)
    throw IndexOutOfRange("conditioning value must lie in [0, d)");
  double mass = 0.0;
  CMatrix acc(e.d.d, e.d.d);
  for (int y0 = 0; y0 < e.d.d; ++y0)
    for (int y1 = 0; y1 < e.d.d; ++y1) {
      if ((part == 0 ? y0 : y1) != value) continue;
      const double w = e.prior_at(y0, y1);
      if (w == 0.0) continue;
      mass += w;
      acc = acc + (cd(w) * projector(e.codeword_at(y0, y1)));
    }
  if (mass <= 0.0)
    throw ZeroMass("conditioning value has zero prior probability");
  return DensityOp(cd(1.0 / mass) * acc);
}

std::string ensemble_to_json(const CodewordEnsemble& e) {
  nlohmann::json j;
  j["d"] = e.d.d;
  nlohmann::json prior = nlohmann::json::array();
  nlohmann::json codewords = nlohmann::json::array();
  for (int y0 = 0; y0 < e.d.d; ++y0)
    for (int y1 = 0; y1 < e.d.d; ++y1) {
      prior.push_back({y0, y1, e.prior_at(y0, y1)});
      nlohmann::json row = {y0, y1};
      for (const cd& z : e.codeword_at(y0, y1).amp)
        row.push_back({z.real(), z.imag()});
      codewords.push_back(std::move(row));
    }
  j["prior"] = std::move(prior);
  j["codewords"] = std::move(codewords);
  return j.dump();
}

CodewordEnsemble ensemble_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  const QuditDim d = QuditDim::of(j.at("d").get<int>());
  std::vector<double> prior(static_cast<size_t>(d.d) * d.d, 0.0);
  for (const auto& row : j.at("prior"))
    prior[pair_index(d.d, row.at(0).get<int>(), row.at(1).get<int>())] =
        row.at(2).get<double>();
  CodewordEnsemble e = ensemble_with_prior(d, prior);
  for (const auto& row : j.at("codewords")) {
    const int y0 = row.at(0).get<int>();
    const int y1 = row.at(1).get<int>();
    if (row.size() != static_cast<size_t>(d.d) + 2)
      throw DomainError("ensemble JSON: codeword length mismatch");
    const PureState& expect = e.codeword_at(y0, y1);
    for (int k = 0; k < d.d; ++k) {
      const cd z(row.at(k + 2).at(0).get<double>(),
                 row.at(k + 2).at(1).get<double>());
      if (std::abs(z - expect.amp[k]) > kValidateTol)
        throw DomainError("ensemble JSON: codeword differs from encoding");
    }
  }
  return e;
}

}  // namespace mesplit

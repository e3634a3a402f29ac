#include "mesplit/guessing.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>

namespace mesplit {

EntropyValue min_entropy(double p) {
  if (!(p > 0.0) || p > 1.0)
    throw DomainError("min_entropy: probability must lie in (0, 1]");
  return EntropyValue{-std::log2(p)};
}

std::pair<EntropyValue, EntropyValue> smooth_bounds(double p, double eps) {
  if (!(p > 0.0) || p > 1.0)
    throw DomainError("smooth_bounds: probability must lie in (0, 1]");
  if (eps < 0.0 || eps >= p)
    throw DomainError("smooth_bounds: eps must lie in [0, p)");
  return {EntropyValue{-std::log2(p)}, EntropyValue{-std::log2(p - eps)}};
}

double GuessCertificate::worst_dual_slack() const {
  double worst = 0.0;
  for (size_t i = 0; i < dual_slack_min_eigenvalues.size(); ++i)
    worst = i == 0 ? dual_slack_min_eigenvalues[i]
                   : std::min(worst, dual_slack_min_eigenvalues[i]);
  return worst;
}

std::string certificate_to_json(const GuessCertificate& c) {
  nlohmann::json j;
  j["d"] = c.d;
  j["primal_value"] = c.primal_value;
  j["dual_value"] = c.dual_value;
  j["gap"] = c.gap;
  j["povm_defect"] = c.povm_report.completeness_defect;
  j["worst_dual_slack"] = c.worst_dual_slack();
  return j.dump();
}

std::string pair_label(int y0, int y1) {
  return std::to_string(y0) + "," + std::to_string(y1);
}

double pguess_eval(const CodewordEnsemble& e, const Povm& m,
                   const std::map<std::string, DitPair>& labeling) {
  if (m.dim != e.d.d) throw DimensionMismatch("POVM/ensemble dimensions");
  if (m.labels.size() != m.elements.size())
    throw DimensionMismatch("POVM label count");
  double value = 0.0;
  for (size_t k = 0; k < m.elements.size(); ++k) {
    const auto it = labeling.find(m.labels[k]);
    if (it == labeling.end())
      throw IncompleteLabeling("no guess assigned to outcome " + m.labels[k]);
    const auto [y0, y1] = it->second;
    const double w = e.prior_at(y0, y1);
    if (w == 0.0) continue;
    // tr(M |psi><psi|) = <psi| M |psi>
    const PureState& psi = e.codeword_at(y0, y1);
    cd v = 0.0;
    for (int r = 0; r < m.dim; ++r)
      for (int c = 0; c < m.dim; ++c)
        v += std::conj(psi.amp[r]) * m.elements[k](r, c) * psi.amp[c];
    value += w * v.real();
  }
  return value;
}

GuessCertificate whole_string_certificate(const QuditDim& d) {
  const CodewordEnsemble e = uniform_ensemble(d);  // NotPrime for composite d
  GuessCertificate cert;
  cert.d = d.d;
  cert.povm.dim = d.d;
  std::map<std::string, DitPair> labeling;
  const cd inv_d(1.0 / d.d);
  for (int y0 = 0; y0 < d.d; ++y0)
    for (int y1 = 0; y1 < d.d; ++y1) {
      cert.povm.elements.push_back(inv_d * projector(e.codeword_at(y0, y1)));
      cert.povm.labels.push_back(pair_label(y0, y1));
      labeling[pair_label(y0, y1)] = {y0, y1};
    }
  cert.dual_op = cd(1.0 / (static_cast<double>(d.d) * d.d)) *
                 CMatrix::identity(d.d);
  cert.primal_value = pguess_eval(e, cert.povm, labeling);
  cert.dual_value = trace(cert.dual_op).real();
  cert.gap = cert.dual_value - cert.primal_value;
  cert.povm_report = validate_povm(cert.povm);
  const double inv_d2 = 1.0 / (static_cast<double>(d.d) * d.d);
  for (int y0 = 0; y0 < d.d; ++y0)
    for (int y1 = 0; y1 < d.d; ++y1) {
      const CMatrix slack =
          cert.dual_op - (cd(inv_d2) * projector(e.codeword_at(y0, y1)));
      cert.dual_slack_min_eigenvalues.push_back(min_eigenvalue_hermitian(slack));
    }
  if (cert.gap < -kPublicTol)
    throw Error("whole_string_certificate: weak duality violated");
  if (cert.worst_dual_slack() < -kPublicTol)
    throw Error("whole_string_certificate: dual solution infeasible");
  return cert;
}

double part_basis_value(const CodewordEnsemble& e, int part) {
  if (part != 0 && part != 1) throw IndexOutOfRange("part must be 0 or 1");
  const int d = e.d.d;
  const CMatrix f_dag = dagger(fourier(e.d));
  double value = 0.0;
  for (int y0 = 0; y0 < d; ++y0)
    for (int y1 = 0; y1 < d; ++y1) {
      const double w = e.prior_at(y0, y1);
      if (w == 0.0) continue;
      const PureState& psi = e.codeword_at(y0, y1);
      if (part == 0) {
        value += w * std::norm(psi.amp[y0]);
      } else {
        cd amp = 0.0;
        for (int k = 0; k < d; ++k) amp += f_dag(y1, k) * psi.amp[k];
        value += w * std::norm(amp);
      }
    }
  return value;
}

NoConvergence::NoConvergence(DiscriminationResult b, const std::string& what)
    : Error(what), best(std::move(b)) {}

namespace {

// R^(-1/2) on the support of R; eigenvalues below a relative cutoff are
// dropped.
CMatrix pinv_sqrt(const CMatrix& r) {
  const EighResult eg = eigh(hermitian_part(r));
  const double cutoff =
      std::max(1e-300, 1e-14 * std::max(0.0, eg.values.back()));
  CMatrix out(r.rows, r.cols);
  for (int i = 0; i < r.rows; ++i) {
    if (eg.values[i] <= cutoff) continue;
    const double w = 1.0 / std::sqrt(eg.values[i]);
    for (int a = 0; a < r.rows; ++a)
      for (int b = 0; b < r.cols; ++b)
        out(a, b) += w * eg.vectors(a, i) * std::conj(eg.vectors(b, i));
  }
  return out;
}

struct Certificate {
  double value = 0.0;
  double gap = 0.0;
  double worst_slack = 0.0;
};

Certificate certify(const std::vector<CMatrix>& weighted_states,
                    const std::vector<CMatrix>& povm) {
  const int n = weighted_states.front().rows;
  Certificate c;
  CMatrix q(n, n);
  for (size_t y = 0; y < povm.size(); ++y) {
    q = q + (weighted_states[y] * povm[y]);
    c.value += trace(weighted_states[y] * povm[y]).real();
  }
  q = hermitian_part(q);
  c.gap = trace(q).real() - c.value;
  c.worst_slack = 0.0;
  for (size_t y = 0; y < povm.size(); ++y) {
    const double s = min_eigenvalue_hermitian(q - weighted_states[y]);
    c.worst_slack = y == 0 ? s : std::min(c.worst_slack, s);
  }
  return c;
}

}  // namespace

DiscriminationResult discriminate_oracle(const ProbDist<int>& prior,
                                         const std::vector<DensityOp>& states,
                                         double tol, int max_iter) {
  if (states.empty()) throw DimensionMismatch("no states to discriminate");
  if (prior.size() != states.size())
    throw DimensionMismatch("prior/state count mismatch");
  const int n = states.front().dim();
  const int count = static_cast<int>(states.size());
  std::vector<CMatrix> weighted(count);
  for (int y = 0; y < count; ++y) {
    if (states[y].dim() != n)
      throw DimensionMismatch("states of differing dimension");
    weighted[y] = cd(prior.weights[y]) * states[y].mat;
  }

  std::vector<CMatrix> povm(count, cd(1.0 / count) * CMatrix::identity(n));

  auto package = [&](const Certificate& c, int iter, bool ok) {
    DiscriminationResult res;
    res.povm.dim = n;
    res.povm.elements = povm;
    for (int y = 0; y < count; ++y) res.povm.labels.push_back(std::to_string(y));
    res.value = c.value;
    res.certified_gap = c.gap;
    res.worst_dual_slack = c.worst_slack;
    res.iterations = iter;
    res.converged = ok;
    return res;
  };

  Certificate cert = certify(weighted, povm);
  DiscriminationResult best = package(cert, 0, false);
  for (int iter = 1; iter <= max_iter; ++iter) {
    // Fixed-point update M_y <- R^(-1/2) G_y M_y G_y R^(-1/2) with
    // R = sum_y G_y M_y G_y and G_y = p_y rho_y; completeness is restored on
    // the orthogonal complement of R's support by spreading the remainder.
    CMatrix r(n, n);
    std::vector<CMatrix> gmg(count);
    for (int y = 0; y < count; ++y) {
      gmg[y] = weighted[y] * povm[y] * weighted[y];
      r = r + gmg[y];
    }
    const CMatrix s = pinv_sqrt(r);
    CMatrix total(n, n);
    for (int y = 0; y < count; ++y) {
      povm[y] = hermitian_part(s * gmg[y] * s);
      total = total + povm[y];
    }
    const CMatrix remainder = CMatrix::identity(n) - total;
    for (int y = 0; y < count; ++y)
      povm[y] = povm[y] + (cd(1.0 / count) * remainder);

    cert = certify(weighted, povm);
    if (cert.gap < best.certified_gap) best = package(cert, iter, false);
    if (cert.gap <= tol && cert.worst_slack >= -tol)
      return package(cert, iter, true);
  }
  throw NoConvergence(best, "discrimination oracle: no certificate after " +
                                std::to_string(max_iter) + " iterations (gap " +
                                std::to_string(best.certified_gap) + ")");
}

}  // namespace mesplit

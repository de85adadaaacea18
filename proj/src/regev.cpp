#include "qdp/regev.hpp"

#include <cmath>
#include <stdexcept>

namespace qdp {
namespace {

constexpr int kDegenerateRetries = 32;
constexpr int kWindowDrawCap = 100000;

struct DualWeightTerms {
  std::vector<double> numer;  // a(t) * dual_amp(t)^2
  double total = 0;           // n_0^2
  PgmSpectrum spectrum;
};

DualWeightTerms dual_weight_terms(const LinearCode& decode_code, const NoiseProfile& profile) {
  const int n = decode_code.n();
  const auto counts =
      code_weight_histogram(dual(decode_code), std::uint64_t{1} << 26);
  DualWeightTerms out{std::vector<double>(n + 1, 0.0), 0.0,
                      pgm_spectrum_fast(decode_code, profile)};
  for (int t = 0; t <= n; ++t) {
    const double a = profile.dual_amplitude(n, t);
    out.numer[t] = static_cast<double>(counts[t]) * a * a;
    out.total += out.numer[t];
  }
  return out;
}

double reject_branch_prob(const DualWeightTerms& terms) {
  const double messages = static_cast<double>(terms.spectrum.norms.size());
  const double gap = std::sqrt(terms.spectrum.p_pgm) - terms.spectrum.n0 / std::sqrt(messages);
  return gap * gap;
}

}  // namespace

ScpInstance make_scp_instance(const LinearCode& target, double omega_prime) {
  if (target.field == nullptr) throw std::invalid_argument("make_scp_instance: code has no field");
  const unsigned q = target.field->q();
  ScpInstance scp;
  scp.field = target.field;
  scp.target = target;
  scp.decode = dual(target);
  scp.omega_prime = omega_prime;
  scp.omega = omega_perp(q, omega_prime);
  scp.p_usd = usd_success_prob(q, scp.omega);
  scp.rate = static_cast<double>(scp.decode.k()) / target.n();
  return scp;
}

ScpInstance random_scp_instance(unsigned q, int n, int k_prime, double omega_prime, Rng& rng) {
  const FiniteField& f = field_cache_parse(std::to_string(q));
  LinearCode target = random_code(f, n, k_prime, rng);
  while (rank_of(f, target.gen) < k_prime) target = random_code(f, n, k_prime, rng);
  return make_scp_instance(target, omega_prime);
}

ReductionReport reduce_usd_path(const ScpInstance& scp, Rng& rng, double epsilon) {
  const FiniteField& f = *scp.field;
  const int n = scp.n();
  if (epsilon < 0) epsilon = (scp.p_usd - scp.rate) / 2;
  if (!(epsilon > 0) || !(scp.p_usd > scp.rate + epsilon))
    throw std::invalid_argument("reduce_usd_path: readout rate must exceed rate + epsilon");
  const int lo = static_cast<int>(std::ceil((scp.rate + epsilon) * n));
  const int hi = static_cast<int>(std::floor(scp.p_usd * n));
  if (lo > hi) throw std::invalid_argument("reduce_usd_path: empty revealed-size window");

  ReductionReport report;
  report.variant = ReductionVariant::UsdPath;
  for (int attempt = 0; attempt < kDegenerateRetries; ++attempt) {
    std::vector<int> kept;
    for (;;) {
      if (++report.j_draws > kWindowDrawCap)
        throw BudgetExceeded("reduce_usd_path: revealed-size window never hit");
      kept.clear();
      for (int i = 0; i < n; ++i)
        if (rng.bernoulli(scp.p_usd)) kept.push_back(i);
      const int size = static_cast<int>(kept.size());
      if (size >= lo && size <= hi) break;  // otherwise rejected, resample
    }

    const GfMat dual_gen = kernel_basis(f, puncture(scp.decode, kept).gen);
    if (dual_gen.rows() == 0) continue;  // trivial dual: redraw the revealed set

    const GfVec msg = random_vector(f, static_cast<int>(dual_gen.rows()), rng);
    const GfVec short_word = encode(LinearCode{&f, dual_gen}, msg);
    GfVec embedded = GfVec::Zero(1, n);
    for (std::size_t i = 0; i < kept.size(); ++i) embedded(kept[i]) = short_word(i);
    if (!is_zero(syndrome(scp.decode, embedded)))
      throw VerificationFailure("reduce_usd_path: emitted vector leaves the target code");

    report.j_set = std::move(kept);
    report.j_size = static_cast<int>(report.j_set.size());
    report.weight = weight(embedded);
    if (report.weight == 0) {
      report.outcome = ReductionOutcome::Zero;
    } else {
      report.outcome = ReductionOutcome::Codeword;
      report.codeword = std::move(embedded);
      report.success = report.weight <= scp.omega_prime * n;
    }
    return report;
  }
  throw DegenerateDual("reduce_usd_path: punctured dual stayed trivial");
}

WeightDistribution pgm_final_distribution(const LinearCode& decode_code,
                                          const NoiseProfile& profile) {
  const DualWeightTerms terms = dual_weight_terms(decode_code, profile);
  WeightDistribution out;
  out.p.resize(terms.numer.size());
  for (std::size_t t = 0; t < terms.numer.size(); ++t) out.p[t] = terms.numer[t] / terms.total;
  out.p_zero = out.p[0];
  out.branch_prob = terms.spectrum.p_pgm;
  return out;
}

WeightDistribution pgm_tweaked_distribution(const LinearCode& decode_code,
                                            const NoiseProfile& profile) {
  const DualWeightTerms terms = dual_weight_terms(decode_code, profile);
  double rest = 0;
  for (std::size_t t = 1; t < terms.numer.size(); ++t) rest += terms.numer[t];
  if (rest <= 0)
    throw DegenerateDual("pgm_tweaked_distribution: dual holds no nonzero words");
  WeightDistribution out;
  out.p.assign(terms.numer.size(), 0.0);
  for (std::size_t t = 1; t < terms.numer.size(); ++t) out.p[t] = terms.numer[t] / rest;
  out.p_zero = 0.0;
  out.branch_prob = reject_branch_prob(terms);
  return out;
}

ReductionReport pgm_counterexample_run(const LinearCode& decode_code,
                                       const NoiseProfile& profile) {
  const DualWeightTerms terms = dual_weight_terms(decode_code, profile);
  ReductionReport report;
  report.variant = ReductionVariant::PgmCounterexample;
  // The accepted branch projects onto the reject state: structurally no
  // codeword information survives it.
  report.outcome = ReductionOutcome::Bottom;
  report.branch_prob = reject_branch_prob(terms);
  return report;
}

PrangeComparison compare_prange(const ScpInstance& scp, Rng& rng, int trials) {
  const FiniteField& f = *scp.field;
  const int n = scp.n();
  if (prange_target_weight(f.q(), scp.decode.k()) == 0)
    throw DegenerateDual("compare_prange: short-codeword target weight is zero");

  PrangeComparison out;
  out.trials = trials;
  out.prange_hist.assign(n + 1, 0);
  out.usd_hist.assign(n + 1, 0);
  const int rounds = prange_default_rounds(n);
  for (int t = 0; t < trials; ++t) {
    const PrangeResult pr = prange_short_codeword(f, scp.decode.gen, rng, rounds);
    if (pr.hit) {
      ++out.prange_hits;
      ++out.prange_hist[pr.weight];
    }
    const ReductionReport rr = reduce_usd_path(scp, rng);
    if (rr.outcome == ReductionOutcome::Codeword) {
      ++out.usd_codewords;
      ++out.usd_hist[rr.weight];
      if (rr.success) ++out.usd_successes;
    }
  }
  return out;
}

}  // namespace qdp

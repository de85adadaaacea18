#include "qdp/solvers.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "qdp/qstate.hpp"

namespace qdp {
namespace {

constexpr std::uint64_t kUsdStream = 11;
constexpr std::uint64_t kPartialStream = 12;
constexpr std::uint64_t kPgmStream = 13;

std::uint64_t checked_pow(unsigned q, int e, std::uint64_t budget, const char* what) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > budget / q) throw BudgetExceeded(what);
    r *= q;
  }
  return r;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

QdpInstance sample_instance(unsigned q, int n, int k, double omega, Rng& rng) {
  if (k > n) throw std::invalid_argument("sample_instance: k > n");
  const FiniteField& f = field_cache_parse(std::to_string(q));
  LinearCode code = random_code(f, n, k, rng);
  GfVec m = random_vector(f, k, rng);
  GfVec c = encode(code, m);
  return QdpInstance{std::move(code), NoiseProfile(q, omega), std::move(m), std::move(c),
                     rng.next()};
}

SolveReport solve_usd(const QdpInstance& instance) {
  const Stopwatch clock;
  const FiniteField& f = *instance.code.field;
  Rng rng(instance.seed, kUsdStream);

  SolveReport report;
  std::vector<gf_t> symbols;
  for (int i = 0; i < instance.n(); ++i) {
    const UsdOutcome out = qary_usd_sample(instance.profile, instance.hidden_codeword(i), rng);
    if (out.accepted) {
      report.revealed.push_back(i);
      symbols.push_back(out.symbol);
    }
  }
  report.revealed_count = static_cast<int>(report.revealed.size());

  const LinearCode restricted = puncture(instance.code, report.revealed);
  GfVec revealed_word(1, report.revealed_count);
  for (int i = 0; i < report.revealed_count; ++i) revealed_word(i) = symbols[i];
  if (const auto m = solve_left(f, restricted.gen, revealed_word)) {
    report.rank_ok = true;
    report.candidate = encode(instance.code, *m);
    report.outcome = report.candidate == instance.hidden_codeword ? SolveOutcome::Recovered
                                                                  : SolveOutcome::WrongCodeword;
  }
  report.seconds = clock.seconds();
  return report;
}

std::pair<QdpInstance, std::vector<int>> reduce_partial_usd(const QdpInstance& instance,
                                                            double omega_prime,
                                                            double target_fraction) {
  if (instance.q() != 2)
    throw std::invalid_argument("reduce_partial_usd: binary instances only");
  const double omega = instance.profile.omega();
  const double keep = omega_perp(2, omega) / omega_perp(2, omega_prime);
  if (!(target_fraction > 0.0 && target_fraction < keep))
    throw std::invalid_argument("reduce_partial_usd: target fraction must lie below the keep rate");
  const int target = static_cast<int>(std::floor(target_fraction * instance.n()));

  Rng rng(instance.seed, kPartialStream);
  std::vector<int> kept;
  for (int i = 0; i < instance.n(); ++i) {
    // Only the keep/abort branch is consumed here: kept coordinates stay
    // unmeasured, their residual noise becomes the inner problem's noise.
    const UsdOutcome out =
        partial_usd_sample(omega, omega_prime, instance.hidden_codeword(i), rng);
    if (out.accepted) kept.push_back(i);
  }
  if (static_cast<int>(kept.size()) < target)
    throw TooFewKept("reduce_partial_usd: kept fewer coordinates than the target length");
  kept.resize(target);

  LinearCode inner_code = puncture(instance.code, kept);
  GfVec inner_word = encode(inner_code, instance.hidden_message);
  QdpInstance inner{std::move(inner_code), NoiseProfile(2, omega_prime),
                    instance.hidden_message, std::move(inner_word),
                    mix_seed(instance.seed, kPartialStream)};
  return {std::move(inner), std::move(kept)};
}

SolveReport solve_pgm_exact(const QdpInstance& instance) {
  checked_pow(instance.q(), instance.k(), std::uint64_t{1} << 20,
              "solve_pgm_exact: message space exceeds budget");
  checked_pow(instance.q(), instance.n() - instance.k(), std::uint64_t{1} << 26,
              "solve_pgm_exact: syndrome space exceeds budget");
  return solve_pgm_exact(instance, pgm_spectrum_fast(instance.code, instance.profile));
}

SolveReport solve_pgm_exact(const QdpInstance& instance, const PgmSpectrum& spectrum) {
  const Stopwatch clock;
  const FiniteField& f = *instance.code.field;
  const std::vector<double> dist = pgm_outcome_distribution(spectrum);
  CumulativeSampler sampler(dist);
  Rng rng(instance.seed, kPgmStream);
  const std::uint64_t w = sampler.draw(rng);

  SolveReport report;
  report.rank_ok = true;
  const GfVec shift = encode(instance.code, vec_of_index(instance.q(), instance.k(), w));
  report.candidate = sub_vec(f, instance.hidden_codeword, shift);
  report.outcome = is_zero(shift) ? SolveOutcome::Recovered : SolveOutcome::WrongCodeword;
  report.seconds = clock.seconds();
  return report;
}

GfVec ml_decode(const LinearCode& code, const GfVec& y) {
  const FiniteField& f = *code.field;
  const unsigned q = f.q();
  const int n = code.n();
  const int k = code.k();
  const std::uint64_t total =
      checked_pow(q, k, std::uint64_t{1} << 22, "ml_decode: message space exceeds budget");
  if (y.cols() != n) throw std::invalid_argument("ml_decode: length mismatch");

  std::vector<gf_t> digits(k, 0);
  std::vector<gf_t> cur(n, 0);
  int dist = 0;
  for (int j = 0; j < n; ++j) dist += y(j) != 0;
  auto apply = [&](int row, gf_t from, gf_t to) {
    const gf_t delta = f.sub(to, from);
    if (delta == 0) return;
    for (int j = 0; j < n; ++j) {
      const gf_t nv = f.add(cur[j], f.mul(delta, code.gen(row, j)));
      dist += (nv != y(j)) - (cur[j] != y(j));
      cur[j] = nv;
    }
  };

  int best_dist = dist;
  GfVec best = GfVec::Zero(1, n);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    int i = 0;
    while (digits[i] == q - 1) {
      apply(i, digits[i], 0);
      digits[i] = 0;
      ++i;
    }
    apply(i, digits[i], static_cast<gf_t>(digits[i] + 1));
    ++digits[i];
    if (dist < best_dist) {  // strict: earlier (lower) message index wins ties
      best_dist = dist;
      for (int j = 0; j < n; ++j) best(j) = cur[j];
    }
  }
  return best;
}

SolveReport solve_classical_ml(const QdpInstance& instance, Rng& rng) {
  const Stopwatch clock;
  const FiniteField& f = *instance.code.field;
  const GfVec error = sample_error(instance.profile, instance.n(), rng);
  const GfVec y = add_vec(f, instance.hidden_codeword, error);

  SolveReport report;
  report.rank_ok = true;
  report.revealed_count = instance.n();
  report.candidate = ml_decode(instance.code, y);
  report.outcome = report.candidate == instance.hidden_codeword ? SolveOutcome::Recovered
                                                                : SolveOutcome::WrongCodeword;
  report.seconds = clock.seconds();
  return report;
}

std::vector<SweepRow> tractability_sweep(unsigned q, int n, int k,
                                         const std::vector<double>& omega_grid, int trials,
                                         Rng& rng) {
  const FiniteField& f = field_cache_parse(std::to_string(q));
  LinearCode code = random_code(f, n, k, rng);
  while (rank_of(f, code.gen) < k) code = random_code(f, n, k, rng);

  const ThresholdSet bounds = thresholds(q, static_cast<double>(k) / n);
  std::vector<SweepRow> rows;
  rows.reserve(omega_grid.size());
  for (double omega : omega_grid) {
    const NoiseProfile profile(q, omega);
    const PgmSpectrum spectrum = pgm_spectrum_fast(code, profile);
    CumulativeSampler sampler(pgm_outcome_distribution(spectrum));
    int successes = 0;
    for (int t = 0; t < trials; ++t)
      if (sampler.draw(rng) == 0) ++successes;
    rows.push_back({omega, trials, successes, spectrum.p_pgm, bounds.easy_bound,
                    bounds.tractable_bound});
  }
  return rows;
}

}  // namespace qdp

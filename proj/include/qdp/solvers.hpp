#ifndef QDP_SOLVERS_HPP
#define QDP_SOLVERS_HPP

#include <utility>
#include <vector>

#include "qdp/measure.hpp"

namespace qdp {

// One decoding problem: a random code together with a hidden codeword whose
// noisy state the solvers may measure.  The hidden fields exist for scoring
// only; solver logic reads the generator, the noise parameters and the seed.
struct QdpInstance {
  LinearCode code;
  NoiseProfile profile;
  GfVec hidden_message;
  GfVec hidden_codeword;
  std::uint64_t seed = 0;

  int n() const { return code.n(); }
  int k() const { return code.k(); }
  unsigned q() const { return profile.q(); }
};

QdpInstance sample_instance(unsigned q, int n, int k, double omega, Rng& rng);

enum class SolveOutcome { Recovered, WrongCodeword, Abstain };

struct SolveReport {
  SolveOutcome outcome = SolveOutcome::Abstain;
  GfVec candidate;            // empty when abstaining
  std::vector<int> revealed;  // coordinates whose symbol was read out
  int revealed_count = 0;
  bool rank_ok = false;       // revealed coordinates determined the message
  double seconds = 0;
};

// Per-coordinate strict discrimination, then linear recovery from the
// revealed set; abstains when the revealed columns do not determine the
// message.  Deterministic given the instance seed.
SolveReport solve_usd(const QdpInstance& instance);

// Keeps each coordinate with probability dual(omega)/dual(omega_prime) and
// returns the decoding problem induced on the kept coordinates (noise level
// omega_prime), truncated to exactly floor(target_fraction * n) lowest
// indices, together with the kept-coordinate map.  Binary codes only;
// throws TooFewKept when not enough coordinates survive.
std::pair<QdpInstance, std::vector<int>> reduce_partial_usd(const QdpInstance& instance,
                                                            double omega_prime,
                                                            double target_fraction);

// Samples the exact outcome of the pretty good measurement via the
// character transform of the component norms.  Budgets: q^k <= 2^20 and
// q^(n-k) <= 2^26.
SolveReport solve_pgm_exact(const QdpInstance& instance);
SolveReport solve_pgm_exact(const QdpInstance& instance, const PgmSpectrum& spectrum);

// Nearest-codeword decoding of y by exhaustive search; ties break toward
// the lowest message index.  Budget: q^k <= 2^22.
GfVec ml_decode(const LinearCode& code, const GfVec& y);
// Measures the state destructively (one Bernoulli error sample), then runs
// ml_decode on the result.
SolveReport solve_classical_ml(const QdpInstance& instance, Rng& rng);

struct SweepRow {
  double omega = 0;
  int trials = 0;
  int successes = 0;
  double p_pgm = 0;
  double easy_bound = 0;
  double tractable_bound = 0;
};
// Empirical measurement-success curve of one random full-rank code across
// the omega grid, with the analytic success probability and the regime
// bounds attached to every row.
std::vector<SweepRow> tractability_sweep(unsigned q, int n, int k,
                                         const std::vector<double>& omega_grid, int trials,
                                         Rng& rng);

}  // namespace qdp

#endif  // QDP_SOLVERS_HPP

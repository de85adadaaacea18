#ifndef QDP_REGEV_HPP
#define QDP_REGEV_HPP

#include <vector>

#include "qdp/measure.hpp"

namespace qdp {

// Short-codeword problem instance.  The caller names the target code and the
// weight goal; everything the pipeline decodes internally lives on the dual
// side, with the noise level fixed by the weight goal's crossover dual.
// That convention swap is normalized here, exactly once.
struct ScpInstance {
  const FiniteField* field = nullptr;
  LinearCode target;      // the code whose short codeword is sought
  LinearCode decode;      // its dual, decoded by the pipeline
  double omega_prime = 0;  // target relative weight
  double omega = 0;        // dual crossover, the internal noise level
  double p_usd = 0;        // per-coordinate readout rate q*omega_prime/(q-1)
  double rate = 0;         // dim(decode)/n

  int n() const { return target.n(); }
  int k_prime() const { return target.k(); }
  int k() const { return decode.k(); }
};

ScpInstance make_scp_instance(const LinearCode& target, double omega_prime);
ScpInstance random_scp_instance(unsigned q, int n, int k_prime, double omega_prime, Rng& rng);

enum class ReductionVariant { UsdPath, PgmPlain, PgmTweaked, PgmCounterexample };
// Codeword: a vector of the target code was produced (see success flag).
// Zero:     the sampler landed on the zero word.
// Bottom:   the run ended in the information-free reject state.
// Abort:    no usable branch fired.
enum class ReductionOutcome { Codeword, Zero, Bottom, Abort };

struct ReductionReport {
  ReductionVariant variant = ReductionVariant::UsdPath;
  ReductionOutcome outcome = ReductionOutcome::Abort;
  GfVec codeword;           // valid when outcome == Codeword
  int weight = 0;
  bool success = false;     // nonzero target-code member of weight <= omega_prime*n
  std::vector<int> j_set;   // accepted revealed set (readout path)
  int j_size = 0;
  int j_draws = 0;          // revealed-set samples until one fit the window
  double branch_prob = 0;   // measurement paths: probability of the branch taken
};

// Readout-driven reduction: draws a revealed set with i.i.d. inclusion rate
// p_usd, accepts sizes in [(rate+epsilon)n, p_usd*n] (epsilon defaults to
// half the p_usd-rate gap), then emits a uniform element of the dual of the
// punctured decode code, embedded with zeros elsewhere.  Every emitted
// vector is verified against the target code before reporting.
ReductionReport reduce_usd_path(const ScpInstance& scp, Rng& rng, double epsilon = -1.0);

// Weight distribution of the codeword register after a measurement branch.
struct WeightDistribution {
  std::vector<double> p;  // index t = 0..n
  double p_zero = 0;
  double branch_prob = 0;  // plain: postselection rate; tweaked: success bound
};

// Plain measurement branch: p(t) proportional to a(t) |dual_amp(t)|^2 over
// the whole dual of `decode_code`, normalized to sum 1; p_zero is p(0).
WeightDistribution pgm_final_distribution(const LinearCode& decode_code,
                                          const NoiseProfile& profile);
// Zero-excluding variant: p(0) = 0 and the rest renormalized; branch_prob
// is (sqrt(P) - n_0/sqrt(q^k))^2.  Throws DegenerateDual when the dual of
// decode_code is trivial.
WeightDistribution pgm_tweaked_distribution(const LinearCode& decode_code,
                                            const NoiseProfile& profile);
// The failing variant: the accepted branch leaves the information-free
// reject state, reported as Bottom with the same branch probability.
ReductionReport pgm_counterexample_run(const LinearCode& decode_code,
                                       const NoiseProfile& profile);

// Paired weight experiment: randomized information-set search on the target
// code versus the readout reduction, both aiming at weight
// floor((q-1) dim(decode) / q).
struct PrangeComparison {
  int trials = 0;
  int prange_hits = 0;
  int usd_codewords = 0;
  int usd_successes = 0;
  std::vector<std::uint64_t> prange_hist;  // weight tallies over hits
  std::vector<std::uint64_t> usd_hist;     // weight tallies over emitted words
};
PrangeComparison compare_prange(const ScpInstance& scp, Rng& rng, int trials);

}  // namespace qdp

#endif  // QDP_REGEV_HPP

#ifndef QDP_MEASURE_HPP
#define QDP_MEASURE_HPP

#include <Eigen/Dense>
#include <vector>

#include "qdp/codes.hpp"
#include "qdp/noise.hpp"

namespace qdp {

// Outcome of an unambiguous-discrimination style measurement.  Strict
// variants never report a wrong symbol; the partial variant keeps a state
// that still carries residual noise, flagged by post_noisy.
struct UsdOutcome {
  bool accepted = false;  // false = abort / inconclusive
  gf_t symbol = 0;        // valid only when accepted
  bool post_noisy = false;
};

// Two-state discrimination success 1/2 + sqrt(1-u^2)/2 for overlap u.
double helstrom_success(double overlap);

// Binary strict discrimination: reveals b with probability 2*omega_perp.
UsdOutcome binary_usd_sample(double omega, int b, Rng& rng);

// Keeps with probability u = omega_perp/omega_prime_perp, leaving a state
// whose flip rate is omega_prime; aborts otherwise.
UsdOutcome partial_usd_sample(double omega, double omega_prime, int b, Rng& rng);

// q-ary strict discrimination at rate q*omega_perp/(q-1).
UsdOutcome qary_usd_sample(const NoiseProfile& profile, gf_t b, Rng& rng);

struct PhaseUsdParams {
  double overlap = 0;
  double usd_success = 0;
  double dual_flip_prob = 0;
};
PhaseUsdParams phase_usd_params(double t, double theta);
UsdOutcome phase_usd_sample(const BinaryPhaseProfile& profile, int b, Rng& rng);

// Norms of the per-syndrome components of a transformed noisy-codeword
// state, indexed by the packed syndrome (little-endian, coordinate 0
// fastest).  success_prob is the exact recovery probability of the pretty
// good measurement over the shifted dual cosets.
struct PgmSpectrum {
  LinearCode code;
  unsigned q = 2;
  double omega = 0;
  std::vector<double> norms;  // n_s >= 0, sum of squares = 1
  double n0 = 0;
  double p_pgm = 0;
};

// Weight-class route: n_s^2 = sum_t a_s(t) dual_amp(t)^2 over every coset.
// Enumerates the full space; q^n must fit the budget.
PgmSpectrum pgm_spectrum(const LinearCode& code, const NoiseProfile& profile,
                         std::uint64_t budget = std::uint64_t{1} << 26);
// Character-transform route over the q^k codeword weights; same output,
// cost q^k * (n + kq).  Independent of the coset enumeration.
PgmSpectrum pgm_spectrum_fast(const LinearCode& code, const NoiseProfile& profile,
                              std::uint64_t budget = std::uint64_t{1} << 20);

// Exact outcome distribution of the measurement: entry at packed message w
// is the probability of decoding c' = c - w*G when the true codeword is c
// (independent of c).  Entry 0 equals p_pgm.
std::vector<double> pgm_outcome_distribution(const PgmSpectrum& spectrum);

// Dense-matrix oracle: builds all transformed states, forms the ensemble
// density matrix and its inverse square root by eigendecomposition
// (eigenvalues below 1e-13 * max treated as null).  q^n capped at 2^12.
struct PgmDenseResult {
  double success = 0;
  std::vector<double> per_codeword;  // success for each true message index
  Eigen::MatrixXd outcome;           // outcome(r, c) = Pr[decide r | true c]
};
PgmDenseResult pgm_dense_oracle_full(const LinearCode& code, const NoiseProfile& profile);
double pgm_dense_oracle(const LinearCode& code, const NoiseProfile& profile);

}  // namespace qdp

#endif  // QDP_MEASURE_HPP

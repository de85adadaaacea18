#ifndef QDP_NOISE_HPP
#define QDP_NOISE_HPP

#include <optional>

#include "qdp/codes.hpp"
#include "qdp/rng.hpp"

namespace qdp {

// q-ary entropy h_q on [0,1]; h_q(1) uses the continuous extension
// log_q(q-1).  Throws std::domain_error outside [0,1].
double entropy_q(unsigned q, double x);
// Inverse of h_q restricted to [0,(q-1)/q]; bisection to 1e-12.
double entropy_q_inv(unsigned q, double y);

// Gilbert–Varshamov radius: smallest x with h_q(x) = 1 - rate.
double delta_min(unsigned q, double rate);
// Largest-weight counterpart: the solution of h_q(x) = rate on
// [(q-1)/q, 1], which exists only when rate >= log_q(q-1).
std::optional<double> delta_max(unsigned q, double rate);

// Fourier-dual crossover probability; involutive on [0,(q-1)/q].
double omega_perp(unsigned q, double omega);
// Per-coordinate unambiguous-discrimination success rate q*omega_perp/(q-1).
double usd_success_prob(unsigned q, double omega);

struct ThresholdSet {
  unsigned q = 2;
  double rate = 0;
  double easy_bound = 0;       // below this the problem is poly-time
  double tractable_bound = 0;  // below this the exact measurement succeeds whp
  double classical_bound = 0;  // below this classical decoding is information-theoretic
};
ThresholdSet thresholds(unsigned q, double rate);

// Bernoulli-type noise with crossover omega: each coordinate is clean with
// probability 1-omega, otherwise uniformly one of the q-1 wrong symbols.
// Amplitudes depend on the error weight only.
class NoiseProfile {
 public:
  NoiseProfile(unsigned q, double omega);

  unsigned q() const { return q_; }
  double omega() const { return omega_; }
  double dual_omega() const { return dual_; }
  NoiseProfile dual_profile() const { return NoiseProfile(q_, dual_); }

  // log of the amplitude carried by one vector of weight t out of n.
  double amplitude_log(int n, int t) const;
  double amplitude(int n, int t) const;
  double dual_amplitude_log(int n, int t) const;
  double dual_amplitude(int n, int t) const;
  // Total probability of drawing weight t: binomial(n, omega) at t.
  double weight_prob(int n, int t) const;

 private:
  unsigned q_;
  double omega_;
  double dual_;
};

// Single-coordinate flip amplitude t with relative phase theta.
class BinaryPhaseProfile {
 public:
  BinaryPhaseProfile(double t, double theta);

  double t() const { return t_; }
  double theta() const { return theta_; }
  // |<state_0|state_1>| = 2 sqrt(t(1-t)) |cos theta|.
  double overlap() const;
  // Probability of reading 1 from the phase-basis measurement.
  double prob_one() const;
  // Per-coordinate discrimination success 1 - overlap.
  double usd_success() const;

 private:
  double t_;
  double theta_;
};

GfVec sample_error(const NoiseProfile& profile, int n, Rng& rng);

enum class ChannelKind { BSC, BEC, BSEEC };
struct ChannelParams {
  double omega = 0.0;    // flip probability (BSC/BSEEC)
  double abort_p = 0.0;  // erasure probability (BEC/BSEEC)
};
// One use of the channel on bit b; nullopt encodes the erasure symbol.
std::optional<int> channel_sample(ChannelKind kind, int b, const ChannelParams& params,
                                  Rng& rng);

}  // namespace qdp

#endif  // QDP_NOISE_HPP

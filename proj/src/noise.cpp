#include "qdp/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace qdp {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void check_unit_interval(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error(std::string(what) + " must lie in [0,1]");
}

double max_omega(unsigned q) { return static_cast<double>(q - 1) / q; }

// xlog(x) with the 0 log 0 = 0 convention.
double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

double entropy_q(unsigned q, double x) {
  if (q < 2) throw std::domain_error("entropy_q: alphabet size must be >= 2");
  check_unit_interval(x, "entropy_q: x");
  double lq = std::log(static_cast<double>(q));
  return (x * std::log(static_cast<double>(q - 1)) - xlogx(x) - xlogx(1.0 - x)) / lq;
}

double entropy_q_inv(unsigned q, double y) {
  if (q < 2) throw std::domain_error("entropy_q_inv: alphabet size must be >= 2");
  check_unit_interval(y, "entropy_q_inv: y");
  // The curve is flat at its maximum, so bisection cannot pin the endpoint.
  if (y >= 1.0) return max_omega(q);
  if (y <= 0.0) return 0.0;
  double lo = 0.0, hi = max_omega(q);
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    double mid = 0.5 * (lo + hi);
    (entropy_q(q, mid) < y ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double delta_min(unsigned q, double rate) {
  check_unit_interval(rate, "delta_min: rate");
  return entropy_q_inv(q, 1.0 - rate);
}

std::optional<double> delta_max(unsigned q, double rate) {
  if (q < 2) throw std::domain_error("delta_max: alphabet size must be >= 2");
  check_unit_interval(rate, "delta_max: rate");
  // h_q decreases from 1 to log_q(q-1) on [(q-1)/q, 1]; no solution below that.
  double floor_val = std::log(static_cast<double>(q - 1)) / std::log(static_cast<double>(q));
  if (rate < floor_val) return std::nullopt;
  double lo = max_omega(q), hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    double mid = 0.5 * (lo + hi);
    (entropy_q(q, mid) > rate ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double omega_perp(unsigned q, double omega) {
  if (q < 2) throw std::domain_error("omega_perp: alphabet size must be >= 2");
  double top = max_omega(q);
  if (!(omega >= -1e-12 && omega <= top + 1e-12))
    throw std::domain_error("omega_perp: omega must lie in [0,(q-1)/q]");
  omega = std::min(std::max(omega, 0.0), top);
  double root = std::sqrt((q - 1) * (1.0 - omega)) - std::sqrt(omega);
  return root * root / q;
}

double usd_success_prob(unsigned q, double omega) {
  return q * omega_perp(q, omega) / (q - 1);
}

ThresholdSet thresholds(unsigned q, double rate) {
  check_unit_interval(rate, "thresholds: rate");
  ThresholdSet out;
  out.q = q;
  out.rate = rate;
  out.easy_bound = omega_perp(q, (q - 1) * rate / q);
  out.tractable_bound = omega_perp(q, delta_min(q, 1.0 - rate));
  out.classical_bound = delta_min(q, rate);
  return out;
}

NoiseProfile::NoiseProfile(unsigned q, double omega) : q_(q), omega_(omega) {
  if (q < 2) throw std::domain_error("NoiseProfile: alphabet size must be >= 2");
  if (!(omega >= 0.0 && omega <= max_omega(q) + 1e-12))
    throw std::domain_error("NoiseProfile: omega must lie in [0,(q-1)/q]");
  omega_ = std::min(omega, max_omega(q));
  dual_ = omega_perp(q, omega_);
}

namespace {
double weight_amplitude_log(unsigned q, double omega, int n, int t) {
  if (t < 0 || t > n) throw std::domain_error("amplitude: weight out of range");
  double acc = 0.0;
  if (t > 0) acc += 0.5 * t * (std::log(omega) - std::log(static_cast<double>(q - 1)));
  if (t < n) acc += 0.5 * (n - t) * std::log1p(-omega);
  return acc;
}
}  // namespace

double NoiseProfile::amplitude_log(int n, int t) const {
  return weight_amplitude_log(q_, omega_, n, t);
}
double NoiseProfile::amplitude(int n, int t) const { return std::exp(amplitude_log(n, t)); }
double NoiseProfile::dual_amplitude_log(int n, int t) const {
  return weight_amplitude_log(q_, dual_, n, t);
}
double NoiseProfile::dual_amplitude(int n, int t) const {
  return std::exp(dual_amplitude_log(n, t));
}

double NoiseProfile::weight_prob(int n, int t) const {
  if (t < 0 || t > n) return 0.0;
  if (omega_ == 0.0) return t == 0 ? 1.0 : 0.0;
  double log_binom = std::lgamma(n + 1.0) - std::lgamma(t + 1.0) - std::lgamma(n - t + 1.0);
  return std::exp(log_binom + t * std::log(omega_) + (n - t) * std::log1p(-omega_));
}

BinaryPhaseProfile::BinaryPhaseProfile(double t, double theta) : t_(t) {
  if (!(t >= 0.0 && t <= 0.5 + 1e-12))
    throw std::domain_error("BinaryPhaseProfile: t must lie in [0,1/2]");
  t_ = std::min(t, 0.5);
  theta_ = std::fmod(theta, 2 * kPi);
  if (theta_ < 0) theta_ += 2 * kPi;
}

double BinaryPhaseProfile::overlap() const {
  return 2.0 * std::sqrt(t_ * (1.0 - t_)) * std::abs(std::cos(theta_));
}

double BinaryPhaseProfile::prob_one() const {
  return 0.5 * (1.0 - 2.0 * std::sqrt(t_ * (1.0 - t_)) * std::cos(theta_));
}

double BinaryPhaseProfile::usd_success() const { return 1.0 - overlap(); }

GfVec sample_error(const NoiseProfile& profile, int n, Rng& rng) {
  GfVec out = GfVec::Zero(n);
  for (int i = 0; i < n; ++i)
    if (rng.bernoulli(profile.omega()))
      out(i) = static_cast<gf_t>(1 + rng.below(profile.q() - 1));
  return out;
}

std::optional<int> channel_sample(ChannelKind kind, int b, const ChannelParams& params,
                                  Rng& rng) {
  if (b != 0 && b != 1) throw std::domain_error("channel_sample: input must be a bit");
  double omega = 0.0, abort_p = 0.0;
  switch (kind) {
    case ChannelKind::BSC:
      omega = params.omega;
      break;
    case ChannelKind::BEC:
      abort_p = params.abort_p;
      break;
    case ChannelKind::BSEEC:
      omega = params.omega;
      abort_p = params.abort_p;
      break;
  }
  check_unit_interval(omega, "channel_sample: omega");
  check_unit_interval(abort_p, "channel_sample: abort probability");
  if (rng.bernoulli(abort_p)) return std::nullopt;
  return rng.bernoulli(omega) ? 1 - b : b;
}

}  // namespace qdp

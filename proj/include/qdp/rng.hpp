#ifndef QDP_RNG_HPP
#define QDP_RNG_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace qdp {

// 64-bit finalizer used to turn (seed, stream, index) tuples into engine seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b = 0,
                              std::uint64_t c = 0) {
  std::uint64_t h = splitmix64(a);
  h = splitmix64(h ^ (b + 0x9e3779b97f4a7c15ULL));
  h = splitmix64(h ^ (c + 0x94d049bb133111ebULL));
  return h;
}

// Deterministic random source.  Every experiment derives one stream per
// logical unit of work (e.g. per trial) via Rng(seed, stream, index), so
// results do not depend on scheduling or worker count.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}
  Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index = 0)
      : Rng(mix_seed(seed, stream, index)) {}

  std::uint64_t next() { return engine_(); }

  // Unbiased integer in [0, bound) by rejection from the top of the range.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
    if ((bound & (bound - 1)) == 0) return next() & (bound - 1);
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % bound;
  }

  // Uniform double in [0,1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// One-off draw from unnormalized nonnegative weights.
inline std::size_t categorical(const std::vector<double>& weights, Rng& rng) {
  double total = 0.0;
  for (double w : weights) total += w;
  if (!(total > 0.0)) throw std::invalid_argument("categorical: empty support");
  double u = rng.uniform() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (u < acc) return i;
  }
  return weights.size() - 1;
}

// Cumulative table for repeated draws from a fixed distribution.
class CumulativeSampler {
 public:
  explicit CumulativeSampler(const std::vector<double>& weights)
      : cum_(weights.size()) {
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (weights[i] < 0.0)
        throw std::invalid_argument("CumulativeSampler: negative weight");
      acc += weights[i];
      cum_[i] = acc;
    }
    if (!(acc > 0.0))
      throw std::invalid_argument("CumulativeSampler: empty support");
    total_ = acc;
  }

  std::size_t draw(Rng& rng) const {
    double u = rng.uniform() * total_;
    auto it = std::upper_bound(cum_.begin(), cum_.end(), u);
    if (it == cum_.end()) return cum_.size() - 1;
    return static_cast<std::size_t>(it - cum_.begin());
  }

  double total() const { return total_; }

 private:
  std::vector<double> cum_;
  double total_ = 0.0;
};

}  // namespace qdp

#endif  // QDP_RNG_HPP

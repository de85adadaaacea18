#ifndef QDP_GF_HPP
#define QDP_GF_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace qdp {

using gf_t = std::uint16_t;  // element index, valid range [0, q)

// Finite field F_{p^s} with table-based arithmetic, the additive characters
// chi_y(x) = exp(2*pi*i*trace(x*y)/p), and the absolute field trace.
//
// Elements are integers in [0, q).  For s == 1 the index is the residue
// mod p; for s > 1 the base-p digits of the index are the coefficients of
// the residue polynomial (digit i = coefficient of x^i).  The defining
// irreducible polynomial is the monic degree-s polynomial with the smallest
// integer encoding (same digit convention, so candidates ascend in
// lexicographic coefficient order from the top digit down).
//
// Immutable after construction; all member functions are const and
// thread-safe.
class FiniteField {
 public:
  FiniteField(unsigned p, unsigned s);

  // Accepts "p^s" (e.g. "2^1", "3^2") or a plain prime power (e.g. "9").
  static FiniteField parse(const std::string& descriptor);

  unsigned p() const { return p_; }
  unsigned s() const { return s_; }
  unsigned q() const { return q_; }
  // Serialized form, always "p^s".
  std::string descriptor() const;

  // Integer encoding of the defining polynomial (for s == 1: the encoding
  // of the monic linear polynomial x, i.e. the value p).
  unsigned modulus() const { return modulus_; }
  // Smallest multiplicative generator by element index.
  gf_t generator() const { return generator_; }

  gf_t add(gf_t a, gf_t b) const;
  gf_t sub(gf_t a, gf_t b) const;
  gf_t neg(gf_t a) const;
  gf_t mul(gf_t a, gf_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  gf_t inv(gf_t a) const;
  gf_t pow(gf_t a, std::uint64_t e) const;

  // Absolute trace, a value in the prime subfield [0, p).
  unsigned trace(gf_t a) const { return trace_[a]; }

  // Integer exponent j in [0, p) such that chi_y(x) = exp(2*pi*i*j/p).
  unsigned character_exponent(gf_t x, gf_t y) const { return trace_[mul(x, y)]; }

  // p-th root of unity raised to the given exponent (exponent taken mod p).
  std::complex<double> root_of_unity(unsigned exponent) const {
    return roots_[exponent % p_];
  }

  std::complex<double> character(gf_t x, gf_t y) const {
    return roots_[character_exponent(x, y)];
  }

  // Scalar embedding of the prime subfield: value v in [0,p) has index v.
  gf_t from_prime_subfield(unsigned v) const { return static_cast<gf_t>(v % p_); }

 private:
  unsigned p_, s_, q_;
  unsigned modulus_ = 0;
  gf_t generator_ = 0;
  std::vector<gf_t> exp_;        // size 2(q-1), doubled to skip a reduction
  std::vector<std::uint32_t> log_;  // size q, log_[0] = sentinel
  std::vector<gf_t> trace_;      // size q, values in [0, p)
  std::vector<std::complex<double>> roots_;  // p-th roots of unity

  void build_prime_tables();
  void build_extension_tables();
};

// Process-lifetime field cache; returns a stable reference.  Thread-safe.
const FiniteField& field_cache(unsigned p, unsigned s);
const FiniteField& field_cache_parse(const std::string& descriptor);

}  // namespace qdp

#endif  // QDP_GF_HPP

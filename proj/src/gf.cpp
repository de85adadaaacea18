#include "qdp/gf.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace qdp {

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Polynomials over F_p encoded as integers: base-p digit i is the
// coefficient of x^i.  Only used during construction.
unsigned poly_degree(unsigned a, unsigned p) {
  int d = -1;
  for (int i = 0; a != 0; ++i, a /= p) d = i;
  return static_cast<unsigned>(d);  // undefined for a == 0 (never queried)
}

std::vector<unsigned> poly_digits(unsigned a, unsigned p, unsigned len) {
  std::vector<unsigned> d(len, 0);
  for (unsigned i = 0; i < len && a != 0; ++i, a /= p) d[i] = a % p;
  return d;
}

unsigned poly_encode(const std::vector<unsigned>& d, unsigned p) {
  unsigned a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
  return a;
}

// Remainder of a modulo monic m, coefficients in F_p.
unsigned poly_mod(unsigned a, unsigned m, unsigned p) {
  if (a == 0) return 0;
  const unsigned dm = poly_degree(m, p);
  std::vector<unsigned> ad = poly_digits(a, p, poly_degree(a, p) + 1);
  std::vector<unsigned> md = poly_digits(m, p, dm + 1);
  for (std::size_t i = ad.size(); i-- > dm;) {
    const unsigned c = ad[i];
    if (c == 0) continue;
    for (unsigned j = 0; j <= dm; ++j) {
      unsigned& t = ad[i - dm + j];
      t = (t + c * (p - md[j])) % p;
    }
  }
  ad.resize(dm);
  return poly_encode(ad, p);
}

unsigned poly_mul_mod(unsigned a, unsigned b, unsigned m, unsigned p) {
  if (a == 0 || b == 0) return 0;
  const unsigned da = poly_degree(a, p), db = poly_degree(b, p);
  std::vector<unsigned> ad = poly_digits(a, p, da + 1);
  std::vector<unsigned> bd = poly_digits(b, p, db + 1);
  std::vector<unsigned> prod(da + db + 1, 0);
  for (unsigned i = 0; i <= da; ++i) {
    if (ad[i] == 0) continue;
    for (unsigned j = 0; j <= db; ++j)
      prod[i + j] = (prod[i + j] + ad[i] * bd[j]) % p;
  }
  return poly_mod(poly_encode(prod, p), m, p);
}

unsigned poly_pow_mod(unsigned a, std::uint64_t e, unsigned m, unsigned p) {
  unsigned r = 1;
  while (e != 0) {
    if (e & 1) r = poly_mul_mod(r, a, m, p);
    a = poly_mul_mod(a, a, m, p);
    e >>= 1;
  }
  return r;
}

bool poly_irreducible(unsigned m, unsigned s, unsigned p) {
  // A reducible monic polynomial of degree s has a monic factor of degree
  // in [1, s/2]; trial division over all of them is cheap at these sizes.
  unsigned pt = 1;
  for (unsigned t = 1; 2 * t <= s; ++t) {
    pt *= p;
    for (unsigned d = pt; d < 2 * pt; ++d)
      if (poly_mod(m, d, p) == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> fs;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

FiniteField::FiniteField(unsigned p, unsigned s) : p_(p), s_(s) {
  if (!is_prime(p)) throw std::invalid_argument("FiniteField: p must be prime");
  if (s < 1) throw std::invalid_argument("FiniteField: s must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < s; ++i) {
    q *= p;
    if (q > (1u << 16))
      throw std::invalid_argument("FiniteField: p^s exceeds 2^16");
  }
  q_ = static_cast<unsigned>(q);

  roots_.resize(p_);
  for (unsigned j = 0; j < p_; ++j) {
    const double a = 2.0 * std::numbers::pi * j / p_;
    roots_[j] = {std::cos(a), std::sin(a)};
  }

  if (s_ == 1)
    build_prime_tables();
  else
    build_extension_tables();

  // Trace table via Frobenius powers a^(p^i), summed coordinate-wise.
  trace_.assign(q_, 0);
  for (unsigned a = 1; a < q_; ++a) {
    gf_t acc = static_cast<gf_t>(a);
    gf_t frob = static_cast<gf_t>(a);
    for (unsigned i = 1; i < s_; ++i) {
      frob = pow(frob, p_);
      acc = add(acc, frob);
    }
    if (acc >= p_)
      throw std::logic_error("FiniteField: trace left the prime subfield");
    trace_[a] = acc;
  }
}

void FiniteField::build_prime_tables() {
  modulus_ = p_;  // encoding of the monic linear polynomial x
  const unsigned order = q_ - 1;
  if (q_ == 2) {
    generator_ = 1;
  } else {
    const auto fs = prime_factors(order);
    for (unsigned g = 2; g < q_; ++g) {
      bool ok = true;
      for (auto r : fs) {
        // modular exponentiation g^(order/r) mod p
        std::uint64_t e = order / r, base = g, acc = 1;
        while (e) {
          if (e & 1) acc = acc * base % p_;
          base = base * base % p_;
          e >>= 1;
        }
        if (acc == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        generator_ = static_cast<gf_t>(g);
        break;
      }
    }
  }
  exp_.assign(2 * order, 0);
  log_.assign(q_, 0xFFFFFFFFu);
  std::uint64_t v = 1;
  for (unsigned i = 0; i < order; ++i) {
    exp_[i] = static_cast<gf_t>(v);
    exp_[i + order] = exp_[i];
    log_[v] = i;
    v = v * generator_ % p_;
  }
}

void FiniteField::build_extension_tables() {
  unsigned ps = q_;  // p^s
  for (unsigned m = ps; m < 2 * ps; ++m) {
    if (poly_irreducible(m, s_, p_)) {
      modulus_ = m;
      break;
    }
  }
  if (modulus_ == 0)
    throw std::logic_error("FiniteField: no irreducible polynomial found");

  const unsigned order = q_ - 1;
  const auto fs = prime_factors(order);
  for (unsigned g = 2; g < q_; ++g) {
    bool ok = true;
    for (auto r : fs) {
      if (poly_pow_mod(g, order / r, modulus_, p_) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      generator_ = static_cast<gf_t>(g);
      break;
    }
  }
  if (generator_ == 0)
    throw std::logic_error("FiniteField: no generator found");

  exp_.assign(2 * order, 0);
  log_.assign(q_, 0xFFFFFFFFu);
  unsigned v = 1;
  for (unsigned i = 0; i < order; ++i) {
    exp_[i] = static_cast<gf_t>(v);
    exp_[i + order] = exp_[i];
    if (log_[v] != 0xFFFFFFFFu)
      throw std::logic_error("FiniteField: generator order defect");
    log_[v] = i;
    v = poly_mul_mod(v, generator_, modulus_, p_);
  }
}

gf_t FiniteField::add(gf_t a, gf_t b) const {
  if (p_ == 2) return a ^ b;
  if (s_ == 1) {
    unsigned t = static_cast<unsigned>(a) + b;
    if (t >= p_) t -= p_;
    return static_cast<gf_t>(t);
  }
  unsigned r = 0, mul = 1, x = a, y = b;
  for (unsigned i = 0; i < s_; ++i) {
    unsigned t = x % p_ + y % p_;
    if (t >= p_) t -= p_;
    r += t * mul;
    mul *= p_;
    x /= p_;
    y /= p_;
  }
  return static_cast<gf_t>(r);
}

gf_t FiniteField::neg(gf_t a) const {
  if (p_ == 2) return a;
  if (s_ == 1) return a == 0 ? 0 : static_cast<gf_t>(p_ - a);
  unsigned r = 0, mul = 1, x = a;
  for (unsigned i = 0; i < s_; ++i) {
    unsigned d = x % p_;
    r += (d == 0 ? 0 : p_ - d) * mul;
    mul *= p_;
    x /= p_;
  }
  return static_cast<gf_t>(r);
}

gf_t FiniteField::sub(gf_t a, gf_t b) const { return add(a, neg(b)); }

gf_t FiniteField::inv(gf_t a) const {
  if (a == 0) throw std::domain_error("FiniteField: inverse of zero");
  const unsigned order = q_ - 1;
  return exp_[(order - log_[a]) % order];
}

gf_t FiniteField::pow(gf_t a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  const unsigned order = q_ - 1;
  const std::uint64_t le = (log_[a] * (e % order)) % order;
  return exp_[le];
}

std::string FiniteField::descriptor() const {
  return std::to_string(p_) + "^" + std::to_string(s_);
}

FiniteField FiniteField::parse(const std::string& descriptor) {
  const auto caret = descriptor.find('^');
  try {
    if (caret != std::string::npos) {
      const unsigned p = std::stoul(descriptor.substr(0, caret));
      const unsigned s = std::stoul(descriptor.substr(caret + 1));
      return FiniteField(p, s);
    }
    const unsigned long q = std::stoul(descriptor);
    if (q < 2) throw std::invalid_argument("field order must be >= 2");
    unsigned p = 2;
    while (q % p != 0) {
      ++p;
      if (static_cast<unsigned long>(p) * p > q) {
        p = static_cast<unsigned>(q);
        break;
      }
    }
    unsigned s = 0;
    unsigned long rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++s;
    }
    if (rest != 1)
      throw std::invalid_argument("field order is not a prime power");
    return FiniteField(p, s);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("unparseable field descriptor: " + descriptor);
  }
}

const FiniteField& field_cache(unsigned p, unsigned s) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<FiniteField>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, s}];
  if (!slot) slot = std::make_unique<FiniteField>(p, s);
  return *slot;
}

const FiniteField& field_cache_parse(const std::string& descriptor) {
  const FiniteField probe = FiniteField::parse(descriptor);
  return field_cache(probe.p(), probe.s());
}

}  // namespace qdp

#include <complex>
#include <vector>

#include "doctest.h"
#include "qdp/gf.hpp"

using qdp::FiniteField;
using qdp::gf_t;

namespace {

const std::vector<std::pair<unsigned, unsigned>> kAllFields = {
    {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3},
    {3, 2}, {11, 1}, {13, 1}, {2, 4}};  // all prime powers q <= 16

}  // namespace

TEST_CASE("prime field basics") {
  const FiniteField f2(2, 1);
  CHECK(f2.q() == 2);
  CHECK(f2.trace(0) == 0);
  CHECK(f2.trace(1) == 1);
  CHECK(f2.add(1, 1) == 0);

  const FiniteField f3(3, 1);
  CHECK(f3.add(1, 2) == 0);
  CHECK(f3.mul(2, 2) == 1);
  CHECK(f3.neg(1) == 2);

  const FiniteField f5(5, 1);
  CHECK(f5.add(2, 3) == 0);
  CHECK(f5.mul(2, 3) == 1);
  CHECK(f5.inv(2) == 3);
}

TEST_CASE("GF(4) tables under x^2+x+1") {
  const FiniteField f4(2, 2);
  CHECK(f4.modulus() == 0b111);  // x^2 + x + 1 is the only irreducible choice
  // trace values {0:0, 1:0, w:1, w^2:1} where w = index 2, w^2 = index 3
  CHECK(f4.trace(0) == 0);
  CHECK(f4.trace(1) == 0);
  CHECK(f4.trace(2) == 1);
  CHECK(f4.trace(3) == 1);
  CHECK(f4.mul(2, 3) == 1);  // w * w^2 = w^3 = 1
  CHECK(f4.mul(2, 2) == 3);  // w^2
}

TEST_CASE("lowest-encoding modulus and smallest generator") {
  const FiniteField f8(2, 3);
  CHECK(f8.modulus() == 0b1011);  // x^3 + x + 1 beats x^3 + x^2 + 1
  const FiniteField f9(3, 2);
  CHECK(f9.modulus() == 10);  // x^2 + 1 encodes as 1*9 + 0*3 + 1
  CHECK(f9.generator() == 4);  // 1 + x is the smallest primitive element
  const FiniteField f16(2, 4);
  CHECK(f16.modulus() == 0b10011);  // x^4 + x + 1
}

TEST_CASE("exp/log tables mutually inverse") {
  for (auto [p, s] : kAllFields) {
    const FiniteField f(p, s);
    for (unsigned a = 1; a < f.q(); ++a) {
      const gf_t g = f.generator();
      // a = g^log(a) round-trips through pow
      gf_t acc = 1;
      bool hit = false;
      for (unsigned i = 0; i < f.q() - 1; ++i) {
        if (acc == a) {
          CHECK(f.pow(g, i) == a);
          hit = true;
          break;
        }
        acc = f.mul(acc, g);
      }
      CHECK(hit);
      CHECK(f.mul(a, f.inv(static_cast<gf_t>(a))) == 1);
    }
  }
}

TEST_CASE("field axioms on exhaustive small sweeps") {
  for (auto [p, s] : kAllFields) {
    const FiniteField f(p, s);
    if (f.q() > 9) continue;  // cubic sweeps only for the smallest fields
    for (unsigned a = 0; a < f.q(); ++a) {
      CHECK(f.add(a, f.neg(static_cast<gf_t>(a))) == 0);
      CHECK(f.mul(a, 1) == a);
      for (unsigned b = 0; b < f.q(); ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (unsigned c = 0; c < f.q(); ++c) {
          const gf_t ab_c = f.mul(f.add(a, b), static_cast<gf_t>(c));
          const gf_t ac_bc = f.add(f.mul(a, c), f.mul(b, c));
          CHECK(ab_c == ac_bc);
        }
      }
    }
  }
}

TEST_CASE("trace is F_p-linear") {
  for (auto [p, s] : kAllFields) {
    const FiniteField f(p, s);
    if (f.q() > 16) continue;
    for (unsigned a = 0; a < p; ++a) {
      for (unsigned x = 0; x < f.q(); ++x) {
        for (unsigned y = 0; y < f.q(); ++y) {
          const gf_t ax = f.mul(f.from_prime_subfield(a), static_cast<gf_t>(x));
          const unsigned lhs = f.trace(f.add(ax, static_cast<gf_t>(y)));
          const unsigned rhs = (a * f.trace(x) + f.trace(y)) % p;
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("character values") {
  const FiniteField f2(2, 1);
  CHECK(f2.character(1, 1).real() == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(f2.character(1, 1).imag() == doctest::Approx(0.0).epsilon(1e-15));
  const FiniteField f3(3, 1);
  const std::complex<double> w3 = std::polar(1.0, 2.0 * 3.14159265358979323846 / 3.0);
  CHECK(std::abs(f3.character(1, 1) - w3) < 1e-12);

  for (auto [p, s] : kAllFields) {
    const FiniteField f(p, s);
    for (unsigned x = 0; x < f.q(); ++x) {
      CHECK(f.character_exponent(0, x) == 0);  // chi_0 == 1
      for (unsigned y = 0; y < f.q(); ++y) {
        // symmetry chi_y(x) = chi_x(y)
        CHECK(f.character_exponent(x, y) == f.character_exponent(y, x));
        // homomorphism, exactly, in integer exponents
        for (unsigned x2 = 0; x2 < f.q(); ++x2) {
          const unsigned lhs =
              f.character_exponent(f.add(x, x2), static_cast<gf_t>(y));
          const unsigned rhs = (f.character_exponent(x, y) +
                                f.character_exponent(x2, y)) %
                               p;
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("character orthogonality, scalar and vector") {
  for (auto [p, s] : kAllFields) {
    const FiniteField f(p, s);
    const unsigned q = f.q();
    // Sum over y of chi_y(d) = q * [d == 0]; with the homomorphism property
    // this is equivalent to the two-argument orthogonality relation.
    for (unsigned d = 0; d < q; ++d) {
      std::complex<double> sum = 0;
      for (unsigned y = 0; y < q; ++y) sum += f.character(d, y);
      const double expect = d == 0 ? q : 0.0;
      CHECK(std::abs(sum - expect) < 1e-10);
    }
    // Literal two-argument form on n = 1.
    for (unsigned x = 0; x < q; ++x) {
      for (unsigned x2 = 0; x2 < q; ++x2) {
        std::complex<double> sum = 0;
        for (unsigned y = 0; y < q; ++y)
          sum += f.character(x, y) * std::conj(f.character(x2, y));
        const double expect = x == x2 ? q : 0.0;
        CHECK(std::abs(sum - expect) < 1e-10);
      }
    }
    // n = 2 vectors for the smaller fields.
    if (q <= 9) {
      for (unsigned d0 = 0; d0 < q; ++d0) {
        for (unsigned d1 = 0; d1 < q; ++d1) {
          std::complex<double> sum = 0;
          for (unsigned y0 = 0; y0 < q; ++y0)
            for (unsigned y1 = 0; y1 < q; ++y1)
              sum += f.root_of_unity(f.character_exponent(d0, y0) +
                                     f.character_exponent(d1, y1));
          const double expect = (d0 == 0 && d1 == 0) ? q * q : 0.0;
          CHECK(std::abs(sum - expect) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("descriptor parsing") {
  CHECK(FiniteField::parse("2^4").q() == 16);
  CHECK(FiniteField::parse("9").p() == 3);
  CHECK(FiniteField::parse("9").s() == 2);
  CHECK(FiniteField::parse("3^1").descriptor() == "3^1");
  CHECK_THROWS_AS(FiniteField::parse("6"), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField::parse("4^2"), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField(2, 17), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField(4, 1), std::invalid_argument);
}

TEST_CASE("field cache returns stable references") {
  const FiniteField& a = qdp::field_cache(2, 3);
  const FiniteField& b = qdp::field_cache_parse("2^3");
  CHECK(&a == &b);
}

#include "qdp/measure.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "qdp/qstate.hpp"

namespace qdp {
namespace {

std::uint64_t checked_pow(unsigned q, int e, std::uint64_t budget) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > budget / q) throw BudgetExceeded("measure: state family exceeds enumeration budget");
    r *= q;
  }
  return r;
}

void require_bit(int b) {
  if (b != 0 && b != 1) throw std::invalid_argument("measure: symbol must be 0 or 1");
}

// Per-message codeword weights, enumerated in packed little-endian message
// order with incremental single-digit updates.
std::vector<std::uint16_t> message_weights(const LinearCode& code, std::uint64_t total) {
  const FiniteField& f = *code.field;
  const unsigned q = f.q();
  const int n = code.n();
  const int k = code.k();
  std::vector<std::uint16_t> wts(total);
  std::vector<gf_t> digits(k, 0);
  std::vector<gf_t> cur(n, 0);
  int w = 0;
  auto apply = [&](int row, gf_t from, gf_t to) {
    const gf_t delta = f.sub(to, from);
    if (delta == 0) return;
    for (int j = 0; j < n; ++j) {
      const gf_t nv = f.add(cur[j], f.mul(delta, code.gen(row, j)));
      w += (nv != 0) - (cur[j] != 0);
      cur[j] = nv;
    }
  };
  wts[0] = 0;
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    int i = 0;
    while (digits[i] == q - 1) {
      apply(i, digits[i], 0);
      digits[i] = 0;
      ++i;
    }
    apply(i, digits[i], static_cast<gf_t>(digits[i] + 1));
    ++digits[i];
    wts[idx] = static_cast<std::uint16_t>(w);
  }
  return wts;
}

// In-place character transform over F_q^k: out[u] = sum_t chi(sign * u t) in[t]
// applied along every axis (unnormalized).
void char_transform(const FiniteField& f, int k, int sign, Eigen::VectorXcd& amp) {
  const unsigned q = f.q();
  Eigen::MatrixXcd kernel(q, q);
  for (unsigned u = 0; u < q; ++u)
    for (unsigned t = 0; t < q; ++t) {
      const unsigned e = f.character_exponent(static_cast<gf_t>(u), static_cast<gf_t>(t));
      kernel(u, t) = f.root_of_unity(sign < 0 ? (f.p() - e) % f.p() : e);
    }
  Eigen::VectorXcd scratch(q);
  std::uint64_t stride = 1;
  for (int dim = 0; dim < k; ++dim) {
    const std::uint64_t block = stride * q;
    for (std::uint64_t base = 0; base < static_cast<std::uint64_t>(amp.size()); base += block)
      for (std::uint64_t off = 0; off < stride; ++off) {
        for (unsigned t = 0; t < q; ++t) scratch(t) = amp(base + off + t * stride);
        for (unsigned u = 0; u < q; ++u) {
          std::complex<double> acc = 0;
          for (unsigned t = 0; t < q; ++t) acc += kernel(u, t) * scratch(t);
          amp(base + off + u * stride) = acc;
        }
      }
    stride = block;
  }
}

PgmSpectrum finish_spectrum(const LinearCode& code, const NoiseProfile& profile,
                            std::vector<double> sq) {
  PgmSpectrum out;
  out.code = code;
  out.q = profile.q();
  out.omega = profile.omega();
  out.norms.resize(sq.size());
  double sum = 0;
  for (std::size_t s = 0; s < sq.size(); ++s) {
    out.norms[s] = std::sqrt(std::max(sq[s], 0.0));
    sum += out.norms[s];
  }
  out.n0 = out.norms.empty() ? 0.0 : out.norms[0];
  out.p_pgm = sum * sum / static_cast<double>(sq.size());
  return out;
}

void check_field_match(const LinearCode& code, const NoiseProfile& profile) {
  if (code.field == nullptr) throw std::invalid_argument("measure: code has no field");
  if (code.field->q() != profile.q())
    throw std::invalid_argument("measure: noise profile field size mismatch");
}

}  // namespace

double helstrom_success(double overlap) {
  if (!(overlap >= 0.0 && overlap <= 1.0))
    throw std::domain_error("helstrom_success: overlap outside [0,1]");
  return 0.5 + 0.5 * std::sqrt(1.0 - overlap * overlap);
}

UsdOutcome binary_usd_sample(double omega, int b, Rng& rng) {
  require_bit(b);
  if (!(omega >= 0.0 && omega <= 0.5))
    throw std::domain_error("binary_usd_sample: omega outside [0,1/2]");
  UsdOutcome out;
  if (rng.bernoulli(usd_success_prob(2, omega))) {
    out.accepted = true;
    out.symbol = static_cast<gf_t>(b);
  }
  return out;
}

UsdOutcome partial_usd_sample(double omega, double omega_prime, int b, Rng& rng) {
  require_bit(b);
  if (!(omega >= 0.0 && omega < 0.5))
    throw std::domain_error("partial_usd_sample: omega outside [0,1/2)");
  if (!(omega_prime >= 0.0 && omega_prime <= omega))
    throw std::invalid_argument(
        "partial_usd_sample: ordering violation, need 0 <= residual <= omega");
  const double keep = omega_perp(2, omega) / omega_perp(2, omega_prime);
  UsdOutcome out;
  if (rng.bernoulli(keep)) {
    out.accepted = true;
    out.post_noisy = true;
    const bool flip = rng.bernoulli(omega_prime);
    out.symbol = static_cast<gf_t>(flip ? 1 - b : b);
  }
  return out;
}

UsdOutcome qary_usd_sample(const NoiseProfile& profile, gf_t b, Rng& rng) {
  if (b >= profile.q()) throw std::invalid_argument("qary_usd_sample: symbol out of range");
  UsdOutcome out;
  if (rng.bernoulli(usd_success_prob(profile.q(), profile.omega()))) {
    out.accepted = true;
    out.symbol = b;
  }
  return out;
}

PhaseUsdParams phase_usd_params(double t, double theta) {
  const BinaryPhaseProfile profile(t, theta);
  PhaseUsdParams out;
  out.overlap = profile.overlap();
  out.usd_success = profile.usd_success();
  out.dual_flip_prob = profile.prob_one();
  return out;
}

UsdOutcome phase_usd_sample(const BinaryPhaseProfile& profile, int b, Rng& rng) {
  require_bit(b);
  UsdOutcome out;
  if (rng.bernoulli(profile.usd_success())) {
    out.accepted = true;
    out.symbol = static_cast<gf_t>(b);
  }
  return out;
}

PgmSpectrum pgm_spectrum(const LinearCode& code, const NoiseProfile& profile,
                         std::uint64_t budget) {
  check_field_match(code, profile);
  const int n = code.n();
  const auto counts = all_coset_weights(code, budget);
  std::vector<double> amp2(n + 1);
  for (int t = 0; t <= n; ++t) {
    const double a = profile.dual_amplitude(n, t);
    amp2[t] = a * a;
  }
  std::vector<double> sq(counts.size());
  for (std::size_t s = 0; s < counts.size(); ++s) {
    double acc = 0;
    for (int t = 0; t <= n; ++t)
      if (counts[s][t]) acc += static_cast<double>(counts[s][t]) * amp2[t];
    sq[s] = acc;
  }
  return finish_spectrum(code, profile, std::move(sq));
}

PgmSpectrum pgm_spectrum_fast(const LinearCode& code, const NoiseProfile& profile,
                              std::uint64_t budget) {
  check_field_match(code, profile);
  const FiniteField& f = *code.field;
  const int n = code.n();
  const int k = code.k();
  const std::uint64_t total = checked_pow(f.q(), k, budget);
  const auto wts = message_weights(code, total);
  // Coordinate-wise character sum of the dual weight profile: value 1 on the
  // trivial frequency, 1 - q*dual_omega/(q-1) elsewhere.
  const double base = 1.0 - usd_success_prob(f.q(), profile.omega());
  std::vector<double> pow_base(n + 1);
  pow_base[0] = 1.0;
  for (int t = 1; t <= n; ++t) pow_base[t] = pow_base[t - 1] * base;
  Eigen::VectorXcd g(total);
  for (std::uint64_t v = 0; v < total; ++v) g(v) = pow_base[wts[v]];
  char_transform(f, k, -1, g);
  std::vector<double> sq(total);
  for (std::uint64_t s = 0; s < total; ++s) sq[s] = g(s).real() / static_cast<double>(total);

  // A syndrome outside the generator's column space labels an empty solution
  // set, so its norm is exactly zero.  The transform reaches those entries
  // only through cancellation, and the residue would survive the square root,
  // so for rank-deficient generators zero them by membership instead.
  const RrefResult col_space = rref(f, GfMat(code.gen.transpose()));
  if (col_space.rank < k) {
    std::vector<char> attainable(total, 0);
    attainable[0] = 1;
    const std::uint64_t reachable = checked_pow(f.q(), col_space.rank, budget);
    GfVec s = GfVec::Zero(k);
    std::vector<gf_t> digits(col_space.rank, 0);
    for (std::uint64_t i = 1; i < reachable; ++i) {
      for (int j = 0;; ++j) {
        const gf_t before = digits[j];
        digits[j] = static_cast<gf_t>((digits[j] + 1) % f.q());
        const gf_t delta = f.sub(digits[j], before);
        for (int c = 0; c < k; ++c)
          s(c) = f.add(s(c), f.mul(delta, col_space.mat(j, c)));
        if (digits[j] != 0) break;
      }
      attainable[index_of_vec(f.q(), s)] = 1;
    }
    for (std::uint64_t v = 0; v < total; ++v)
      if (!attainable[v]) sq[v] = 0.0;
  }
  return finish_spectrum(code, profile, std::move(sq));
}

std::vector<double> pgm_outcome_distribution(const PgmSpectrum& spectrum) {
  const FiniteField& f = *spectrum.code.field;
  const std::uint64_t total = spectrum.norms.size();
  Eigen::VectorXcd v(total);
  for (std::uint64_t s = 0; s < total; ++s) v(s) = spectrum.norms[s];
  char_transform(f, spectrum.code.k(), 1, v);
  std::vector<double> out(total);
  for (std::uint64_t w = 0; w < total; ++w)
    out[w] = std::norm(v(w)) / static_cast<double>(total);
  return out;
}

PgmDenseResult pgm_dense_oracle_full(const LinearCode& code, const NoiseProfile& profile) {
  check_field_match(code, profile);
  const FiniteField& f = *code.field;
  const int n = code.n();
  const int k = code.k();
  const std::uint64_t d = checked_pow(f.q(), n, std::uint64_t{1} << 12);
  const std::uint64_t m = checked_pow(f.q(), k, std::uint64_t{1} << 12);

  Eigen::MatrixXcd psi(d, m);
  for (std::uint64_t idx = 0; idx < m; ++idx) {
    const GfVec c = encode(code, vec_of_index(f.q(), k, idx));
    psi.col(idx) = qft_dense(dense_noisy_vector(f, c, profile)).amp;
  }

  // The inverse square root amplifies eigensolver noise by 1/sqrt(lambda_min),
  // which can exceed 1e-9 in double at large dimensions, so the spectral part
  // runs in extended precision.  The sandwich is assembled from the projected
  // states (d^2 * m work) to avoid any d^3 product at that precision.
  using LScalar = std::complex<long double>;
  using LMatrix = Eigen::Matrix<LScalar, Eigen::Dynamic, Eigen::Dynamic>;
  const LMatrix psi_l = psi.cast<LScalar>();
  const LMatrix rho = (psi_l * psi_l.adjoint()) / static_cast<long double>(m);
  Eigen::SelfAdjointEigenSolver<LMatrix> es(rho);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("pgm_dense_oracle: eigendecomposition failed");
  const auto& ev = es.eigenvalues();
  const long double cutoff = 1e-13L * ev.maxCoeff();
  Eigen::Matrix<long double, Eigen::Dynamic, 1> inv_sqrt_ev =
      Eigen::Matrix<long double, Eigen::Dynamic, 1>::Zero(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev(i) > cutoff) inv_sqrt_ev(i) = 1.0L / std::sqrt(ev(i));

  const LMatrix projected = es.eigenvectors().adjoint() * psi_l;
  const LMatrix sandwich =
      projected.adjoint() * inv_sqrt_ev.asDiagonal() * projected;
  PgmDenseResult out;
  out.outcome =
      (sandwich.cwiseAbs2() / static_cast<long double>(m)).cast<double>();
  out.per_codeword.resize(m);
  double acc = 0;
  for (std::uint64_t c = 0; c < m; ++c) {
    out.per_codeword[c] = out.outcome(c, c);
    acc += out.per_codeword[c];
  }
  out.success = acc / static_cast<double>(m);
  return out;
}

double pgm_dense_oracle(const LinearCode& code, const NoiseProfile& profile) {
  return pgm_dense_oracle_full(code, profile).success;
}

}  // namespace qdp

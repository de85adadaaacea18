#ifndef QDP_QSTATE_HPP
#define QDP_QSTATE_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "qdp/codes.hpp"
#include "qdp/noise.hpp"

namespace qdp {

// One q-dimensional register.
struct QuditState {
  const FiniteField* field = nullptr;
  Eigen::VectorXcd amp;  // size q
};

// Full q^n-dimensional amplitude vector.  Exists as a verification oracle
// only; production paths work with product states and weight spectra.
// Index layout is little-endian: coordinate 0 varies fastest.
struct DenseState {
  const FiniteField* field = nullptr;
  int n = 0;
  Eigen::VectorXcd amp;  // size q^n
};

// q^n with the dense-oracle budget enforced (throws BudgetExceeded past 2^22).
std::uint64_t dense_dim(unsigned q, int n);
std::uint64_t index_of_vec(unsigned q, const GfVec& x);
GfVec vec_of_index(unsigned q, int n, std::uint64_t idx);

QuditState basis_qudit(const FiniteField& f, gf_t b);
// sqrt(1-omega) on b, sqrt(omega/(q-1)) on every other symbol.
QuditState noisy_symbol_state(const FiniteField& f, const NoiseProfile& profile, gf_t b);
// sqrt(1-t)|b> + e^{i theta} sqrt(t)|1-b>  (binary).
QuditState phase_symbol_state(const BinaryPhaseProfile& profile, int b);

QuditState qft_qudit(const QuditState& st);
QuditState shift(const QuditState& st, gf_t b);
QuditState phase(const QuditState& st, gf_t b);

DenseState dense_basis(const FiniteField& f, int n, const GfVec& x);
DenseState dense_product(const FiniteField& f, const std::vector<QuditState>& coords);
// Product of per-coordinate noisy symbol states centered on `center`.
DenseState dense_noisy_vector(const FiniteField& f, const GfVec& center,
                              const NoiseProfile& profile);
// Normalized superposition of noisy codewords over the whole code.
DenseState dense_code_superposition(const LinearCode& code, const NoiseProfile& profile);

// Coordinate-wise Fourier transform (characters factor over coordinates).
DenseState qft_dense(const DenseState& st);
DenseState shift(const DenseState& st, const GfVec& b);
DenseState phase(const DenseState& st, const GfVec& b);

// Conjugate-linear in the first argument.
std::complex<double> inner_product(const QuditState& a, const QuditState& b);
std::complex<double> inner_product(const DenseState& a, const DenseState& b);

Eigen::VectorXd probabilities(const DenseState& st);
void normalize(DenseState& st);
// Born-rule draw of a basis index / coordinate vector.
std::uint64_t measure_index(const DenseState& st, Rng& rng);
GfVec measure_vector(const DenseState& st, Rng& rng);

}  // namespace qdp

#endif  // QDP_QSTATE_HPP

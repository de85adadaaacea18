#ifndef QDP_CODES_HPP
#define QDP_CODES_HPP

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <vector>

#include "qdp/errors.hpp"
#include "qdp/gf.hpp"
#include "qdp/rng.hpp"

namespace qdp {

// Dense matrices/vectors of field-element indices.  Arithmetic on them goes
// through the free functions below (element ops never use Eigen's own
// operators, which know nothing about finite fields).
using GfMat = Eigen::Matrix<gf_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using GfVec = Eigen::Matrix<gf_t, 1, Eigen::Dynamic>;

int weight(const GfVec& x);
bool is_zero(const GfVec& x);
GfVec add_vec(const FiniteField& f, const GfVec& x, const GfVec& y);
GfVec sub_vec(const FiniteField& f, const GfVec& x, const GfVec& y);
GfVec scale_vec(const FiniteField& f, gf_t a, const GfVec& x);
gf_t dot(const FiniteField& f, const GfVec& x, const GfVec& y);
// Integer exponent of the vector character: sum of coordinate exponents mod p.
unsigned character_exponent_vec(const FiniteField& f, const GfVec& x, const GfVec& y);

GfVec random_vector(const FiniteField& f, int n, Rng& rng);
GfMat random_matrix(const FiniteField& f, int rows, int cols, Rng& rng);

// Row space of `gen` over `field`.  The nominal dimension k is the number of
// generator rows; rank may be smaller (rank-deficient draws are kept).
struct LinearCode {
  const FiniteField* field = nullptr;
  GfMat gen;  // k x n

  int n() const { return static_cast<int>(gen.cols()); }
  int k() const { return static_cast<int>(gen.rows()); }
};

LinearCode random_code(const FiniteField& f, int n, int k, Rng& rng);
GfVec encode(const LinearCode& code, const GfVec& m);  // m * G
// Syndrome map of the dual-coset partition: s = G x^T, length k.
GfVec syndrome(const LinearCode& code, const GfVec& x);

// Row-reduction over the code's field.  Pivoting is deterministic: columns
// are scanned left to right and the first row (lowest index) with a nonzero
// entry is used.
struct RrefResult {
  GfMat mat;
  std::vector<int> pivot_cols;
  int rank = 0;
};
RrefResult rref(const FiniteField& f, const GfMat& a);
int rank_of(const FiniteField& f, const GfMat& a);

// Rows spanning {y : a y^T = 0}; (rows(a.cols) - rank) x a.cols matrix.
GfMat kernel_basis(const FiniteField& f, const GfMat& a);

GfMat transpose(const GfMat& a);
GfMat mat_mul(const FiniteField& f, const GfMat& a, const GfMat& b);

LinearCode dual(const LinearCode& code);
GfMat parity_check(const LinearCode& code);  // generator of the dual
// Columns of the generator restricted to J (order follows J).
LinearCode puncture(const LinearCode& code, const std::vector<int>& j);
// Codewords vanishing outside J, restricted to J.
LinearCode shorten(const LinearCode& code, const std::vector<int>& j);

// Unique x with x a = b (a is k x m); nullopt when rank(a) < k or the
// system is inconsistent.
std::optional<GfVec> solve_left(const FiniteField& f, const GfMat& a, const GfVec& b);
// Unique x with a x^T = b^T (a is r x m); nullopt when no unique solution.
std::optional<GfVec> solve_right(const FiniteField& f, const GfMat& a, const GfVec& b);

// Right inverse: m x k matrix M with a M = I_k; throws RankDeficient.
GfMat pseudo_inverse(const FiniteField& f, const GfMat& a);
// The unique codeword agreeing with c_J on the coordinates J
// (c = c_J * pinv(G_J) * G); throws RankDeficient when rank(G_J) < k.
GfVec recover_from_coordinates(const LinearCode& code, const std::vector<int>& j,
                               const GfVec& c_j);

// Weight tallies of the dual coset {x : G x^T = s}, enumerated as u_s plus
// the dual code; cost q^(n - rank), guarded by `budget`.
struct CosetSpectrum {
  GfVec syndrome_label;
  GfVec representative;                // empty when the coset is empty
  std::vector<std::uint64_t> counts;   // a_s(t) for t = 0..n
};
CosetSpectrum coset_spectrum(const LinearCode& code, const GfVec& s,
                             std::uint64_t budget = std::uint64_t{1} << 26);
// a_s(t) for every syndrome s at once (enumerates F_q^n; cost q^n <= budget).
// Outer index: syndrome packed little-endian (s_0 + s_1 q + ...).
std::vector<std::vector<std::uint64_t>> all_coset_weights(
    const LinearCode& code, std::uint64_t budget = std::uint64_t{1} << 26);
// Weight histogram of the code itself (enumerates q^k messages).
std::vector<std::uint64_t> code_weight_histogram(
    const LinearCode& code, std::uint64_t budget = std::uint64_t{1} << 20);
// Expected coset weight count S(t) = (q-1)^t binom(n,t) / q^k (log-space).
double expected_coset_count(unsigned q, int n, int k, int t);

// Randomized information-set search for a codeword of weight exactly
// floor((q-1)(n-k)/q), given the (n-k) x n parity check of the target code.
struct PrangeResult {
  bool hit = false;
  GfVec codeword;
  int weight = 0;
  int target_weight = 0;
  int rounds_used = 0;
  int singular_rounds = 0;
  std::vector<std::uint64_t> weight_histogram;  // candidates from all rounds
};
int prange_default_rounds(int n);
int prange_target_weight(unsigned q, int parity_rows);
PrangeResult prange_short_codeword(const FiniteField& f, const GfMat& parity,
                                   Rng& rng, int max_rounds);

}  // namespace qdp

#endif  // QDP_CODES_HPP

#include "qdp/codes.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <utility>

namespace qdp {
namespace {

// Overflow-guarded q^e against a budget; returns false when q^e > budget.
bool pow_within(std::uint64_t q, int e, std::uint64_t budget, std::uint64_t* out) {
  std::uint64_t v = 1;
  for (int i = 0; i < e; ++i) {
    if (v > budget / q) return false;
    v *= q;
  }
  if (v > budget) return false;
  *out = v;
  return true;
}

// ---------------------------------------------------------------------------
// Elimination backends.  Each exposes the same row-op interface so the
// reduction driver below can be shared.  Pivot search always returns the
// lowest row index with a nonzero entry in the requested column.

class BitRows {
 public:
  explicit BitRows(const GfMat& a)
      : rows_(static_cast<int>(a.rows())),
        cols_(static_cast<int>(a.cols())),
        words_((cols_ + 63) / 64),
        w_(static_cast<std::size_t>(rows_) * words_, 0) {
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c)
        if (a(r, c)) w_[idx(r) + c / 64] |= std::uint64_t{1} << (c % 64);
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const {
    return (w_[idx(r) + c / 64] >> (c % 64)) & 1u;
  }

  int find_pivot(int from, int c) const {
    for (int i = from; i < rows_; ++i)
      if (get(i, c)) return i;
    return -1;
  }

  void swap_rows(int a, int b) {
    if (a == b) return;
    std::swap_ranges(w_.begin() + idx(a), w_.begin() + idx(a) + words_,
                     w_.begin() + idx(b));
  }

  void normalize_row(int, int) {}

  void eliminate(int i, int r, int c) {
    if (!get(i, c)) return;
    std::uint64_t* d = w_.data() + idx(i);
    const std::uint64_t* s = w_.data() + idx(r);
    for (int t = 0; t < words_; ++t) d[t] ^= s[t];
  }

  GfMat to_gfmat() const {
    GfMat out = GfMat::Zero(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c)
        if (get(r, c)) out(r, c) = 1;
    return out;
  }

 private:
  std::size_t idx(int r) const { return static_cast<std::size_t>(r) * words_; }

  int rows_, cols_, words_;
  std::vector<std::uint64_t> w_;
};

// Byte rows for prime fields with p < 256; the p = 3 row ops are branchless
// so the hot ternary eliminations vectorize.
class ByteRows {
 public:
  ByteRows(const FiniteField& f, const GfMat& a)
      : f_(&f),
        p_(static_cast<int>(f.p())),
        rows_(static_cast<int>(a.rows())),
        cols_(static_cast<int>(a.cols())),
        w_(static_cast<std::size_t>(rows_) * cols_) {
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c)
        w_[idx(r) + c] = static_cast<std::uint8_t>(a(r, c));
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::uint8_t get(int r, int c) const { return w_[idx(r) + c]; }

  int find_pivot(int from, int c) const {
    for (int i = from; i < rows_; ++i)
      if (w_[idx(i) + c]) return i;
    return -1;
  }

  void swap_rows(int a, int b) {
    if (a == b) return;
    std::swap_ranges(w_.begin() + idx(a), w_.begin() + idx(a) + cols_,
                     w_.begin() + idx(b));
  }

  void normalize_row(int r, int c) {
    std::uint8_t v = get(r, c);
    if (v <= 1) return;
    int m = f_->inv(v);
    std::uint8_t* d = w_.data() + idx(r);
    if (p_ == 3) {  // the only unit besides 1 is -1
      for (int t = 0; t < cols_; ++t) {
        int x = 3 - d[t];
        d[t] = static_cast<std::uint8_t>(x >= 3 ? 0 : x);
      }
    } else {
      for (int t = 0; t < cols_; ++t)
        d[t] = static_cast<std::uint8_t>(d[t] * m % p_);
    }
  }

  void eliminate(int i, int r, int c) {
    int fv = get(i, c);
    if (fv == 0) return;
    std::uint8_t* d = w_.data() + idx(i);
    const std::uint8_t* s = w_.data() + idx(r);
    if (p_ == 3) {
      if (fv == 1) {  // d -= s
        for (int t = 0; t < cols_; ++t) {
          int x = d[t] + 3 - s[t];
          d[t] = static_cast<std::uint8_t>(x >= 3 ? x - 3 : x);
        }
      } else {  // fv == 2: d -= 2s == d += s
        for (int t = 0; t < cols_; ++t) {
          int x = d[t] + s[t];
          d[t] = static_cast<std::uint8_t>(x >= 3 ? x - 3 : x);
        }
      }
    } else {
      int mul = p_ - fv;  // d += (p - fv) * s
      for (int t = 0; t < cols_; ++t)
        d[t] = static_cast<std::uint8_t>((d[t] + mul * s[t]) % p_);
    }
  }

  GfMat to_gfmat() const {
    GfMat out(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) out(r, c) = w_[idx(r) + c];
    return out;
  }

 private:
  std::size_t idx(int r) const { return static_cast<std::size_t>(r) * cols_; }

  const FiniteField* f_;
  int p_, rows_, cols_;
  std::vector<std::uint8_t> w_;
};

// Table-driven fallback for extension fields (and any prime too wide for the
// byte path); only exercised at small sizes.
class TableRows {
 public:
  TableRows(const FiniteField& f, const GfMat& a) : f_(&f), m_(a) {}

  int rows() const { return static_cast<int>(m_.rows()); }
  int cols() const { return static_cast<int>(m_.cols()); }

  int find_pivot(int from, int c) const {
    for (int i = from; i < rows(); ++i)
      if (m_(i, c)) return i;
    return -1;
  }

  void swap_rows(int a, int b) {
    if (a != b) m_.row(a).swap(m_.row(b));
  }

  void normalize_row(int r, int c) {
    gf_t v = m_(r, c);
    if (v <= 1) return;
    gf_t m = f_->inv(v);
    for (int t = 0; t < cols(); ++t) m_(r, t) = f_->mul(m_(r, t), m);
  }

  void eliminate(int i, int r, int c) {
    gf_t fv = m_(i, c);
    if (fv == 0) return;
    for (int t = 0; t < cols(); ++t)
      m_(i, t) = f_->sub(m_(i, t), f_->mul(fv, m_(r, t)));
  }

  GfMat to_gfmat() const { return m_; }

 private:
  const FiniteField* f_;
  GfMat m_;
};

template <class M>
std::vector<int> reduce_rows(M& m) {
  std::vector<int> pivots;
  int r = 0;
  const int rows = m.rows(), cols = m.cols();
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = m.find_pivot(r, c);
    if (pr < 0) continue;
    m.swap_rows(pr, r);
    m.normalize_row(r, c);
    for (int i = 0; i < rows; ++i)
      if (i != r) m.eliminate(i, r, c);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

RrefResult rref_dispatch(const FiniteField& f, const GfMat& a) {
  RrefResult out;
  if (f.q() == 2) {
    BitRows m(a);
    out.pivot_cols = reduce_rows(m);
    out.mat = m.to_gfmat();
  } else if (f.s() == 1 && f.p() < 256) {
    ByteRows m(f, a);
    out.pivot_cols = reduce_rows(m);
    out.mat = m.to_gfmat();
  } else {
    TableRows m(f, a);
    out.pivot_cols = reduce_rows(m);
    out.mat = m.to_gfmat();
  }
  out.rank = static_cast<int>(out.pivot_cols.size());
  return out;
}

GfMat columns_of(const GfMat& a, const std::vector<int>& j) {
  GfMat out(a.rows(), static_cast<Eigen::Index>(j.size()));
  for (std::size_t t = 0; t < j.size(); ++t)
    out.col(static_cast<Eigen::Index>(t)) = a.col(j[t]);
  return out;
}

std::vector<int> complement_of(int n, const std::vector<int>& j) {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (int c : j) in[static_cast<std::size_t>(c)] = 1;
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n) - j.size());
  for (int c = 0; c < n; ++c)
    if (!in[static_cast<std::size_t>(c)]) out.push_back(c);
  return out;
}

// Mixed-radix odometer over element indices; reports each digit transition
// so callers can update incrementally.  Returns false once all q^len states
// have been visited.
struct Odometer {
  int len;
  unsigned q;
  std::vector<gf_t> digits;

  Odometer(int len_, unsigned q_) : len(len_), q(q_), digits(static_cast<std::size_t>(len_), 0) {}

  template <class F>
  bool step(F&& on_change) {
    for (int i = 0; i < len; ++i) {
      gf_t old = digits[static_cast<std::size_t>(i)];
      if (old + 1u < q) {
        digits[static_cast<std::size_t>(i)] = static_cast<gf_t>(old + 1);
        on_change(i, old, static_cast<gf_t>(old + 1));
        return true;
      }
      digits[static_cast<std::size_t>(i)] = 0;
      on_change(i, old, static_cast<gf_t>(0));
    }
    return false;
  }
};

}  // namespace

int weight(const GfVec& x) {
  int w = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (x(i)) ++w;
  return w;
}

bool is_zero(const GfVec& x) { return weight(x) == 0; }

GfVec add_vec(const FiniteField& f, const GfVec& x, const GfVec& y) {
  GfVec out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) out(i) = f.add(x(i), y(i));
  return out;
}

GfVec sub_vec(const FiniteField& f, const GfVec& x, const GfVec& y) {
  GfVec out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) out(i) = f.sub(x(i), y(i));
  return out;
}

GfVec scale_vec(const FiniteField& f, gf_t a, const GfVec& x) {
  GfVec out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) out(i) = f.mul(a, x(i));
  return out;
}

gf_t dot(const FiniteField& f, const GfVec& x, const GfVec& y) {
  gf_t acc = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    acc = f.add(acc, f.mul(x(i), y(i)));
  return acc;
}

unsigned character_exponent_vec(const FiniteField& f, const GfVec& x, const GfVec& y) {
  unsigned acc = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    acc += f.character_exponent(x(i), y(i));
  return acc % f.p();
}

GfVec random_vector(const FiniteField& f, int n, Rng& rng) {
  GfVec out(n);
  for (int i = 0; i < n; ++i)
    out(i) = static_cast<gf_t>(rng.below(f.q()));
  return out;
}

GfMat random_matrix(const FiniteField& f, int rows, int cols, Rng& rng) {
  GfMat out(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      out(r, c) = static_cast<gf_t>(rng.below(f.q()));
  return out;
}

LinearCode random_code(const FiniteField& f, int n, int k, Rng& rng) {
  return LinearCode{&f, random_matrix(f, k, n, rng)};
}

GfVec encode(const LinearCode& code, const GfVec& m) {
  const FiniteField& f = *code.field;
  GfVec out = GfVec::Zero(code.n());
  for (int i = 0; i < code.k(); ++i) {
    gf_t mi = m(i);
    if (!mi) continue;
    for (int j = 0; j < code.n(); ++j)
      out(j) = f.add(out(j), f.mul(mi, code.gen(i, j)));
  }
  return out;
}

GfVec syndrome(const LinearCode& code, const GfVec& x) {
  const FiniteField& f = *code.field;
  GfVec out(code.k());
  for (int i = 0; i < code.k(); ++i) out(i) = dot(f, code.gen.row(i), x);
  return out;
}

RrefResult rref(const FiniteField& f, const GfMat& a) { return rref_dispatch(f, a); }

int rank_of(const FiniteField& f, const GfMat& a) {
  return rref_dispatch(f, a).rank;
}

GfMat kernel_basis(const FiniteField& f, const GfMat& a) {
  const int m = static_cast<int>(a.cols());
  RrefResult r = rref_dispatch(f, a);
  std::vector<char> is_pivot(static_cast<std::size_t>(m), 0);
  for (int c : r.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = 1;
  GfMat out = GfMat::Zero(m - r.rank, m);
  int row = 0;
  for (int fc = 0; fc < m; ++fc) {
    if (is_pivot[static_cast<std::size_t>(fc)]) continue;
    out(row, fc) = 1;
    for (int i = 0; i < r.rank; ++i)
      out(row, r.pivot_cols[static_cast<std::size_t>(i)]) = f.neg(r.mat(i, fc));
    ++row;
  }
  return out;
}

GfMat transpose(const GfMat& a) { return a.transpose(); }

GfMat mat_mul(const FiniteField& f, const GfMat& a, const GfMat& b) {
  GfMat out = GfMat::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index t = 0; t < a.cols(); ++t) {
      gf_t v = a(i, t);
      if (!v) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        out(i, j) = f.add(out(i, j), f.mul(v, b(t, j)));
    }
  return out;
}

LinearCode dual(const LinearCode& code) {
  return LinearCode{code.field, kernel_basis(*code.field, code.gen)};
}

GfMat parity_check(const LinearCode& code) { return dual(code).gen; }

LinearCode puncture(const LinearCode& code, const std::vector<int>& j) {
  return LinearCode{code.field, columns_of(code.gen, j)};
}

LinearCode shorten(const LinearCode& code, const std::vector<int>& j) {
  const FiniteField& f = *code.field;
  std::vector<int> outside = complement_of(code.n(), j);
  // Messages whose codeword vanishes outside J, then restrict to J.
  GfMat away = columns_of(code.gen, outside);
  GfMat msgs = kernel_basis(f, transpose(away));
  return LinearCode{code.field, columns_of(mat_mul(f, msgs, code.gen), j)};
}

std::optional<GfVec> solve_right(const FiniteField& f, const GfMat& a, const GfVec& b) {
  const int m = static_cast<int>(a.cols());
  GfMat aug(a.rows(), m + 1);
  aug.leftCols(m) = a;
  for (Eigen::Index i = 0; i < a.rows(); ++i) aug(i, m) = b(i);
  RrefResult r = rref_dispatch(f, aug);
  if (!r.pivot_cols.empty() && r.pivot_cols.back() == m) return std::nullopt;
  if (r.rank < m) return std::nullopt;  // free columns: no unique solution
  GfVec x(m);
  for (int i = 0; i < m; ++i) x(r.pivot_cols[static_cast<std::size_t>(i)]) = r.mat(i, m);
  return x;
}

std::optional<GfVec> solve_left(const FiniteField& f, const GfMat& a, const GfVec& b) {
  return solve_right(f, transpose(a), b);
}

GfMat pseudo_inverse(const FiniteField& f, const GfMat& a) {
  const int k = static_cast<int>(a.rows());
  const int m = static_cast<int>(a.cols());
  GfMat aug(k, m + k);
  aug.leftCols(m) = a;
  aug.rightCols(k) = GfMat::Zero(k, k);
  for (int i = 0; i < k; ++i) aug(i, m + i) = 1;
  RrefResult r = rref_dispatch(f, aug);
  int lead = 0;
  for (int c : r.pivot_cols)
    if (c < m) ++lead;
  if (lead < k) throw RankDeficient("pseudo_inverse: matrix does not have full row rank");
  GfMat out = GfMat::Zero(m, k);
  for (int i = 0; i < k; ++i)
    out.row(r.pivot_cols[static_cast<std::size_t>(i)]) = r.mat.row(i).segment(m, k);
  return out;
}

GfVec recover_from_coordinates(const LinearCode& code, const std::vector<int>& j,
                               const GfVec& c_j) {
  const FiniteField& f = *code.field;
  GfMat g_j = columns_of(code.gen, j);
  GfMat pinv = pseudo_inverse(f, g_j);
  GfVec m(code.k());
  for (int t = 0; t < code.k(); ++t) m(t) = dot(f, c_j, pinv.col(t).transpose());
  return encode(code, m);
}

CosetSpectrum coset_spectrum(const LinearCode& code, const GfVec& s, std::uint64_t budget) {
  const FiniteField& f = *code.field;
  const int n = code.n();
  if (static_cast<int>(s.size()) != code.k())
    throw std::invalid_argument("coset_spectrum: syndrome length must equal k");

  CosetSpectrum out;
  out.syndrome_label = s;
  out.counts.assign(static_cast<std::size_t>(n) + 1, 0);

  // Representative via reduction of (G | s^T); empty coset <-> inconsistent.
  GfMat aug(code.k(), n + 1);
  aug.leftCols(n) = code.gen;
  for (int i = 0; i < code.k(); ++i) aug(i, n) = s(i);
  RrefResult r = rref_dispatch(f, aug);
  if (!r.pivot_cols.empty() && r.pivot_cols.back() == n) {
    out.representative = GfVec(0);
    return out;
  }
  GfVec rep = GfVec::Zero(n);
  for (int i = 0; i < r.rank; ++i)
    rep(r.pivot_cols[static_cast<std::size_t>(i)]) = r.mat(i, n);
  out.representative = rep;

  GfMat dual_gen = kernel_basis(f, code.gen);
  const int d = static_cast<int>(dual_gen.rows());
  std::uint64_t total = 0;
  if (!pow_within(f.q(), d, budget, &total))
    throw BudgetExceeded("coset_spectrum: q^(n-rank) exceeds budget");

  GfVec cur = rep;
  out.counts[static_cast<std::size_t>(weight(cur))]++;
  Odometer od(d, f.q());
  std::uint64_t visited = 1;
  while (visited < total) {
    bool more = od.step([&](int row, gf_t oldv, gf_t newv) {
      gf_t delta = f.sub(newv, oldv);
      for (int c = 0; c < n; ++c)
        cur(c) = f.add(cur(c), f.mul(delta, dual_gen(row, c)));
    });
    if (!more) break;
    out.counts[static_cast<std::size_t>(weight(cur))]++;
    ++visited;
  }
  return out;
}

std::vector<std::vector<std::uint64_t>> all_coset_weights(const LinearCode& code,
                                                          std::uint64_t budget) {
  const FiniteField& f = *code.field;
  const unsigned q = f.q();
  const int n = code.n();
  const int k = code.k();
  std::uint64_t total = 0;
  if (!pow_within(q, n, budget, &total))
    throw BudgetExceeded("all_coset_weights: q^n exceeds budget");
  std::uint64_t n_syn = 1;
  for (int i = 0; i < k; ++i) n_syn *= q;

  std::vector<std::vector<std::uint64_t>> counts(
      n_syn, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));

  // Precompute q^i offsets for the packed syndrome index.
  std::vector<std::uint64_t> pow_q(static_cast<std::size_t>(k), 1);
  for (int i = 1; i < k; ++i) pow_q[static_cast<std::size_t>(i)] = pow_q[static_cast<std::size_t>(i) - 1] * q;

  GfVec syn = GfVec::Zero(k);
  std::int64_t syn_idx = 0;
  int wt = 0;
  counts[0][0]++;  // x = 0
  Odometer od(n, q);
  for (std::uint64_t visited = 1; visited < total; ++visited) {
    bool more = od.step([&](int col, gf_t oldv, gf_t newv) {
      gf_t delta = f.sub(newv, oldv);
      for (int i = 0; i < k; ++i) {
        gf_t gi = code.gen(i, col);
        if (!gi) continue;
        gf_t before = syn(i);
        gf_t after = f.add(before, f.mul(delta, gi));
        syn(i) = after;
        syn_idx += (static_cast<std::int64_t>(after) - before) *
                   static_cast<std::int64_t>(pow_q[static_cast<std::size_t>(i)]);
      }
      wt += (newv != 0) - (oldv != 0);
    });
    if (!more) break;
    counts[static_cast<std::size_t>(syn_idx)][static_cast<std::size_t>(wt)]++;
  }
  return counts;
}

std::vector<std::uint64_t> code_weight_histogram(const LinearCode& code,
                                                 std::uint64_t budget) {
  const FiniteField& f = *code.field;
  const int n = code.n();
  const int k = code.k();
  std::uint64_t total = 0;
  if (!pow_within(f.q(), k, budget, &total))
    throw BudgetExceeded("code_weight_histogram: q^k exceeds budget");

  std::vector<std::uint64_t> hist(static_cast<std::size_t>(n) + 1, 0);
  GfVec cur = GfVec::Zero(n);
  hist[0]++;
  Odometer od(k, f.q());
  for (std::uint64_t visited = 1; visited < total; ++visited) {
    bool more = od.step([&](int row, gf_t oldv, gf_t newv) {
      gf_t delta = f.sub(newv, oldv);
      for (int c = 0; c < n; ++c)
        cur(c) = f.add(cur(c), f.mul(delta, code.gen(row, c)));
    });
    if (!more) break;
    hist[static_cast<std::size_t>(weight(cur))]++;
  }
  return hist;
}

double expected_coset_count(unsigned q, int n, int k, int t) {
  if (t < 0 || t > n) return 0.0;
  double log_val = t * std::log(static_cast<double>(q - 1)) + std::lgamma(n + 1.0) -
                   std::lgamma(t + 1.0) - std::lgamma(n - t + 1.0) -
                   k * std::log(static_cast<double>(q));
  return std::exp(log_val);
}

int prange_default_rounds(int n) {
  return 30 * static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
}

int prange_target_weight(unsigned q, int parity_rows) {
  return static_cast<int>((static_cast<std::uint64_t>(q - 1) * parity_rows) / q);
}

PrangeResult prange_short_codeword(const FiniteField& f, const GfMat& parity,
                                   Rng& rng, int max_rounds) {
  const int n = static_cast<int>(parity.cols());
  const int r = static_cast<int>(parity.rows());
  const int k = n - r;
  if (k <= 0) throw std::invalid_argument("prange: parity check must have fewer rows than columns");

  PrangeResult out;
  out.target_weight = prange_target_weight(f.q(), r);
  out.weight_histogram.assign(static_cast<std::size_t>(n) + 1, 0);

  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;

  for (int round = 0; round < max_rounds; ++round) {
    out.rounds_used = round + 1;
    // Information set J: the first k slots of a partial shuffle.
    for (int i = 0; i < k; ++i) {
      int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
      std::swap(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(j)]);
    }
    std::vector<int> in_j(all.begin(), all.begin() + k);
    std::vector<int> rest = complement_of(n, in_j);

    // Weight-1 pattern on J: one random position, one random nonzero value.
    int pos = in_j[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(k)))];
    gf_t val = static_cast<gf_t>(1 + rng.below(f.q() - 1));
    GfVec rhs(r);
    for (int i = 0; i < r; ++i) rhs(i) = f.neg(f.mul(val, parity(i, pos)));

    std::optional<GfVec> x = solve_right(f, columns_of(parity, rest), rhs);
    if (!x) {
      out.singular_rounds++;
      continue;
    }
    GfVec cand = GfVec::Zero(n);
    cand(pos) = val;
    for (int t = 0; t < r; ++t) cand(rest[static_cast<std::size_t>(t)]) = (*x)(t);
    int w = weight(cand);
    out.weight_histogram[static_cast<std::size_t>(w)]++;
    if (w == out.target_weight) {
      out.hit = true;
      out.codeword = cand;
      out.weight = w;
      return out;
    }
  }
  return out;
}

}  // namespace qdp

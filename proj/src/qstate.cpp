#include "qdp/qstate.hpp"

#include <cmath>
#include <stdexcept>

#include "qdp/errors.hpp"

namespace qdp {
namespace {

constexpr std::uint64_t kDenseBudget = std::uint64_t{1} << 22;

Eigen::MatrixXcd qft_matrix(const FiniteField& f) {
  const unsigned q = f.q();
  Eigen::MatrixXcd out(q, q);
  double scale = 1.0 / std::sqrt(static_cast<double>(q));
  for (unsigned y = 0; y < q; ++y)
    for (unsigned x = 0; x < q; ++x)
      out(y, x) = scale * f.character(static_cast<gf_t>(x), static_cast<gf_t>(y));
  return out;
}

void check_same_dims(const DenseState& a, const DenseState& b) {
  if (a.field != b.field || a.n != b.n || a.amp.size() != b.amp.size())
    throw std::invalid_argument("dense states have mismatched shapes");
}

}  // namespace

std::uint64_t dense_dim(unsigned q, int n) {
  std::uint64_t v = 1;
  for (int i = 0; i < n; ++i) {
    if (v > kDenseBudget / q)
      throw BudgetExceeded("dense state dimension q^n exceeds 2^22");
    v *= q;
  }
  return v;
}

std::uint64_t index_of_vec(unsigned q, const GfVec& x) {
  std::uint64_t idx = 0;
  for (Eigen::Index i = x.size(); i-- > 0;) idx = idx * q + x(i);
  return idx;
}

GfVec vec_of_index(unsigned q, int n, std::uint64_t idx) {
  GfVec x(n);
  for (int i = 0; i < n; ++i) {
    x(i) = static_cast<gf_t>(idx % q);
    idx /= q;
  }
  return x;
}

QuditState basis_qudit(const FiniteField& f, gf_t b) {
  QuditState st{&f, Eigen::VectorXcd::Zero(f.q())};
  st.amp(b) = 1.0;
  return st;
}

QuditState noisy_symbol_state(const FiniteField& f, const NoiseProfile& profile, gf_t b) {
  if (profile.q() != f.q())
    throw std::invalid_argument("noisy_symbol_state: profile alphabet mismatch");
  const unsigned q = f.q();
  double off = q > 1 ? std::sqrt(profile.omega() / (q - 1)) : 0.0;
  QuditState st{&f, Eigen::VectorXcd::Constant(q, off)};
  st.amp(b) = std::sqrt(1.0 - profile.omega());
  return st;
}

QuditState phase_symbol_state(const BinaryPhaseProfile& profile, int b) {
  if (b != 0 && b != 1)
    throw std::invalid_argument("phase_symbol_state: input must be a bit");
  const FiniteField& f2 = field_cache(2, 1);
  QuditState st{&f2, Eigen::VectorXcd::Zero(2)};
  st.amp(b) = std::sqrt(1.0 - profile.t());
  st.amp(1 - b) = std::polar(std::sqrt(profile.t()), profile.theta());
  return st;
}

QuditState qft_qudit(const QuditState& st) {
  return QuditState{st.field, qft_matrix(*st.field) * st.amp};
}

QuditState shift(const QuditState& st, gf_t b) {
  const FiniteField& f = *st.field;
  QuditState out{st.field, Eigen::VectorXcd(st.amp.size())};
  for (unsigned x = 0; x < f.q(); ++x)
    out.amp(f.add(static_cast<gf_t>(x), b)) = st.amp(x);
  return out;
}

QuditState phase(const QuditState& st, gf_t b) {
  const FiniteField& f = *st.field;
  QuditState out{st.field, st.amp};
  for (unsigned x = 0; x < f.q(); ++x)
    out.amp(x) *= f.character(static_cast<gf_t>(x), b);
  return out;
}

DenseState dense_basis(const FiniteField& f, int n, const GfVec& x) {
  DenseState st{&f, n, Eigen::VectorXcd::Zero(dense_dim(f.q(), n))};
  st.amp(static_cast<Eigen::Index>(index_of_vec(f.q(), x))) = 1.0;
  return st;
}

DenseState dense_product(const FiniteField& f, const std::vector<QuditState>& coords) {
  const int n = static_cast<int>(coords.size());
  const std::uint64_t dim = dense_dim(f.q(), n);
  DenseState st{&f, n, Eigen::VectorXcd::Constant(dim, 1.0)};
  const unsigned q = f.q();
  std::uint64_t stride = 1;
  for (int i = 0; i < n; ++i) {
    for (std::uint64_t idx = 0; idx < dim; ++idx)
      st.amp(static_cast<Eigen::Index>(idx)) *= coords[static_cast<std::size_t>(i)].amp((idx / stride) % q);
    stride *= q;
  }
  return st;
}

DenseState dense_noisy_vector(const FiniteField& f, const GfVec& center,
                              const NoiseProfile& profile) {
  std::vector<QuditState> coords;
  coords.reserve(static_cast<std::size_t>(center.size()));
  for (Eigen::Index i = 0; i < center.size(); ++i)
    coords.push_back(noisy_symbol_state(f, profile, center(i)));
  return dense_product(f, coords);
}

DenseState dense_code_superposition(const LinearCode& code, const NoiseProfile& profile) {
  const FiniteField& f = *code.field;
  const std::uint64_t dim = dense_dim(f.q(), code.n());
  DenseState base = dense_noisy_vector(f, GfVec::Zero(code.n()), profile);
  DenseState st{&f, code.n(), Eigen::VectorXcd::Zero(dim)};
  std::uint64_t messages = 1;
  for (int i = 0; i < code.k(); ++i) {
    if (messages > kDenseBudget / f.q())
      throw BudgetExceeded("dense_code_superposition: q^k exceeds dense budget");
    messages *= f.q();
  }
  for (std::uint64_t mi = 0; mi < messages; ++mi) {
    GfVec m = vec_of_index(f.q(), code.k(), mi);
    st.amp += shift(base, encode(code, m)).amp;
  }
  normalize(st);
  return st;
}

DenseState qft_dense(const DenseState& st) {
  const FiniteField& f = *st.field;
  const unsigned q = f.q();
  const std::uint64_t dim = static_cast<std::uint64_t>(st.amp.size());
  Eigen::MatrixXcd fm = qft_matrix(f);
  DenseState out{st.field, st.n, st.amp};
  std::vector<std::complex<double>> buf(q);
  std::uint64_t stride = 1;
  for (int coord = 0; coord < st.n; ++coord) {
    const std::uint64_t block = stride * q;
    for (std::uint64_t base = 0; base < dim; base += block) {
      for (std::uint64_t off = 0; off < stride; ++off) {
        for (unsigned y = 0; y < q; ++y) {
          std::complex<double> acc = 0;
          for (unsigned x = 0; x < q; ++x)
            acc += fm(y, x) * out.amp(static_cast<Eigen::Index>(base + off + x * stride));
          buf[y] = acc;
        }
        for (unsigned y = 0; y < q; ++y)
          out.amp(static_cast<Eigen::Index>(base + off + y * stride)) = buf[y];
      }
    }
    stride = block;
  }
  return out;
}

DenseState shift(const DenseState& st, const GfVec& b) {
  const FiniteField& f = *st.field;
  if (static_cast<int>(b.size()) != st.n)
    throw std::invalid_argument("shift: displacement length mismatch");
  DenseState out{st.field, st.n, Eigen::VectorXcd(st.amp.size())};
  const std::uint64_t dim = static_cast<std::uint64_t>(st.amp.size());
  for (std::uint64_t idx = 0; idx < dim; ++idx) {
    GfVec x = vec_of_index(f.q(), st.n, idx);
    GfVec y = add_vec(f, x, b);
    out.amp(static_cast<Eigen::Index>(index_of_vec(f.q(), y))) =
        st.amp(static_cast<Eigen::Index>(idx));
  }
  return out;
}

DenseState phase(const DenseState& st, const GfVec& b) {
  const FiniteField& f = *st.field;
  if (static_cast<int>(b.size()) != st.n)
    throw std::invalid_argument("phase: displacement length mismatch");
  DenseState out{st.field, st.n, st.amp};
  const std::uint64_t dim = static_cast<std::uint64_t>(st.amp.size());
  for (std::uint64_t idx = 0; idx < dim; ++idx) {
    GfVec x = vec_of_index(f.q(), st.n, idx);
    out.amp(static_cast<Eigen::Index>(idx)) *=
        f.root_of_unity(character_exponent_vec(f, x, b));
  }
  return out;
}

std::complex<double> inner_product(const QuditState& a, const QuditState& b) {
  if (a.amp.size() != b.amp.size())
    throw std::invalid_argument("inner_product: dimension mismatch");
  return a.amp.dot(b.amp);
}

std::complex<double> inner_product(const DenseState& a, const DenseState& b) {
  check_same_dims(a, b);
  return a.amp.dot(b.amp);
}

Eigen::VectorXd probabilities(const DenseState& st) { return st.amp.cwiseAbs2(); }

void normalize(DenseState& st) {
  double nrm = st.amp.norm();
  if (nrm < 1e-300) throw std::invalid_argument("normalize: zero state");
  st.amp /= nrm;
}

std::uint64_t measure_index(const DenseState& st, Rng& rng) {
  double u = rng.uniform() * st.amp.squaredNorm();
  double acc = 0;
  const Eigen::Index dim = st.amp.size();
  for (Eigen::Index i = 0; i < dim; ++i) {
    acc += std::norm(st.amp(i));
    if (u < acc) return static_cast<std::uint64_t>(i);
  }
  return static_cast<std::uint64_t>(dim - 1);
}

GfVec measure_vector(const DenseState& st, Rng& rng) {
  return vec_of_index(st.field->q(), st.n, measure_index(st, rng));
}

}  // namespace qdp

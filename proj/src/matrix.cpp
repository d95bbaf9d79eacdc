#include "radix/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace radix {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("IntMatrix: " + std::to_string(entries_.size()) +
                                " entries for a " + std::to_string(rows_) + "x" +
                                std::to_string(cols_) + " matrix");
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> diag) {
  IntMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

IntMatrix IntMatrix::column(std::span<const Integer> values) {
  return IntMatrix(values.size(), 1, std::vector<Integer>(values.begin(), values.end()));
}

std::vector<Integer> IntMatrix::row(std::size_t r) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Integer> IntMatrix::col(std::size_t c) const {
  std::vector<Integer> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::concat_cols(const IntMatrix& other) const {
  if (rows_ != other.rows_) throw std::invalid_argument("concat_cols: row count mismatch");
  IntMatrix out(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) out(r, cols_ + c) = other(r, c);
  }
  return out;
}

IntMatrix IntMatrix::select_rows(std::span<const std::size_t> which) const {
  IntMatrix out(which.size(), cols_);
  for (std::size_t i = 0; i < which.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(which[i], c);
  return out;
}

IntMatrix IntMatrix::select_cols(std::span<const std::size_t> which) const {
  IntMatrix out(rows_, which.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < which.size(); ++j) out(r, j) = (*this)(r, which[j]);
  return out;
}

std::vector<Integer> IntMatrix::apply(std::span<const Integer> v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: vector length mismatch");
  std::vector<Integer> out(rows_, Integer(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

Integer IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      a.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << (*this)(r, c).get_str();
    }
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

std::vector<Integer> SmithForm::invariants() const {
  const std::size_t n = std::min(diagonal.rows(), diagonal.cols());
  std::vector<Integer> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = diagonal(i, i);
  return out;
}

namespace {

// Row operations on D are mirrored on U (same op) and on U^{-1} (inverse op
// applied to columns), column operations on D are mirrored on V.
struct SmithState {
  IntMatrix d, u, u_inv, v;

  void swap_rows(std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    u.swap_rows(a, b);
    u_inv.swap_cols(a, b);
  }
  void add_row(std::size_t dst, std::size_t src, const Integer& k) {
    d.add_row_multiple(dst, src, k);
    u.add_row_multiple(dst, src, k);
    u_inv.add_col_multiple(src, dst, -k);
  }
  void negate_row(std::size_t r) {
    d.negate_row(r);
    u.negate_row(r);
    u_inv.negate_col(r);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    v.swap_cols(a, b);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& k) {
    d.add_col_multiple(dst, src, k);
    v.add_col_multiple(dst, src, k);
  }

  // Smallest nonzero |entry| in the block [t.., t..], row-major ties.
  std::optional<std::pair<std::size_t, std::size_t>> pivot(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < d.rows(); ++i)
      for (std::size_t j = t; j < d.cols(); ++j) {
        const Integer& x = d(i, j);
        if (x == 0) continue;
        Integer ax = abs(x);
        if (!best || ax < best_abs) {
          best = {i, j};
          best_abs = ax;
        }
      }
    return best;
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithState s{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.rows()),
               IntMatrix::identity(m.cols())};
  const std::size_t limit = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < limit; ++t) {
    auto p = s.pivot(t);
    if (!p) break;
    s.swap_rows(t, p->first);
    s.swap_cols(t, p->second);

    for (;;) {
      bool clean = true;
      const Integer piv = s.d(t, t);
      for (std::size_t i = t + 1; i < s.d.rows(); ++i) {
        if (s.d(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), s.d(i, t).get_mpz_t(), piv.get_mpz_t());
        s.add_row(i, t, -q);
        if (s.d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < s.d.cols(); ++j) {
        if (s.d(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), s.d(t, j).get_mpz_t(), piv.get_mpz_t());
        s.add_col(j, t, -q);
        if (s.d(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A nonzero remainder is strictly smaller than the pivot.
        auto np = s.pivot(t);
        s.swap_rows(t, np->first);
        s.swap_cols(t, np->second);
        continue;
      }
      // Enforce divisibility of the remaining block by the pivot.
      bool divisible = true;
      for (std::size_t i = t + 1; i < s.d.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < s.d.cols(); ++j) {
          if (mpz_divisible_p(s.d(i, j).get_mpz_t(), piv.get_mpz_t()) == 0) {
            s.add_row(t, i, 1);
            divisible = false;
            break;
          }
        }
      if (divisible) break;
    }
    if (s.d(t, t) < 0) s.negate_row(t);
  }
  return SmithForm{std::move(s.u), std::move(s.d), std::move(s.v), std::move(s.u_inv)};
}

std::optional<std::vector<Integer>> solve_integer_system(const IntMatrix& a,
                                                         std::span<const Integer> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_integer_system: size mismatch");
  SmithForm snf = smith_normal_form(a);
  // D (V^{-1} x) = U b
  std::vector<Integer> ub = snf.left.apply(b);
  std::vector<Integer> w(a.cols(), Integer(0));
  const std::size_t n = std::min(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Integer d = i < n ? snf.diagonal(i, i) : Integer(0);
    if (d == 0) {
      if (ub[i] != 0) return std::nullopt;
      continue;
    }
    if (mpz_divisible_p(ub[i].get_mpz_t(), d.get_mpz_t()) == 0) return std::nullopt;
    w[i] = ub[i] / d;
  }
  return snf.right.apply(w);
}

}  // namespace radix

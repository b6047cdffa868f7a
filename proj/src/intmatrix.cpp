#include "adapted/intmatrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>

namespace adapted {

namespace {

using i128 = __int128;

constexpr i64 kLimit = (i64{1} << 62);

i64 narrowed(i128 v, const char* what) {
  ensure(v < kLimit && v > -kLimit, std::string(what) + " exceeded 62-bit range");
  return static_cast<i64>(v);
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  ensure(cols_ == other.rows_, "matrix product shape mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      i64 a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        i128 v = static_cast<i128>(out.at(i, j)) + static_cast<i128>(a) * other.at(k, j);
        out.at(i, j) = narrowed(v, "matrix product entry");
      }
    }
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
  ensure(rows_ == other.rows_ && cols_ == other.cols_, "matrix difference shape mismatch");
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - other.data_[i];
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

IntMatrix IntMatrix::pow(i64 exponent) const {
  ensure(square() && exponent >= 0, "pow needs a square base and exponent >= 0");
  IntMatrix out = identity(rows_);
  for (i64 i = 0; i < exponent; ++i) out = out * *this;
  return out;
}

IntMatrix IntMatrix::negated() const {
  IntMatrix out = *this;
  for (i64& v : out.data_) v = -v;
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](i64 v) { return v == 0; });
}

bool IntMatrix::is_skew_symmetric() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (at(i, j) != -at(j, i)) return false;
  return true;
}

i64 IntMatrix::determinant() const {
  ensure(square(), "determinant of a non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  std::vector<i128> m(n * n);
  for (std::size_t i = 0; i < n * n; ++i) m[i] = data_[i];
  auto e = [&](std::size_t i, std::size_t j) -> i128& { return m[i * n + j]; };

  i128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (e(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && e(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(e(k, j), e(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        i128 v = e(i, j) * e(k, k) - e(i, k) * e(k, j);
        e(i, j) = v / prev;  // exact division in Bareiss elimination
        ensure(e(i, j) < (i128{1} << 100) && e(i, j) > -(i128{1} << 100),
               "determinant intermediate exceeded range");
      }
    prev = e(k, k);
  }
  return narrowed(sign * e(n - 1, n - 1), "determinant");
}

IntMatrix IntMatrix::inverse_unimodular() const {
  ensure(square(), "inverse of a non-square matrix");
  std::size_t n = rows_;
  IntMatrix a = *this;
  IntMatrix r = identity(n);

  auto row_sub = [&](std::size_t dst, std::size_t src, i64 q) {
    if (q == 0) return;
    a.add_row(dst, src, -q);
    r.add_row(dst, src, -q);
  };

  // reduce to upper triangular with positive diagonal via euclidean row ops
  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t i = k; i < n; ++i)
        if (a.at(i, k) != 0 && (best == n || std::abs(a.at(i, k)) < std::abs(a.at(best, k))))
          best = i;
      require(best != n, errc::not_unimodular, "matrix is singular");
      if (best != k) {
        a.swap_rows(k, best);
        r.swap_rows(k, best);
      }
      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        i64 q = a.at(i, k) / a.at(k, k);
        row_sub(i, k, q);
        if (a.at(i, k) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a.at(k, k) < 0) {
      for (std::size_t j = 0; j < n; ++j) {
        a.at(k, j) = -a.at(k, j);
        r.at(k, j) = -r.at(k, j);
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    require(a.at(k, k) == 1, errc::not_unimodular,
            "pivot " + std::to_string(a.at(k, k)) + " != 1; determinant is not +-1");
  // back substitution
  for (std::size_t k = n; k-- > 0;)
    for (std::size_t i = 0; i < k; ++i) row_sub(i, k, a.at(i, k));
  ensure(a == identity(n), "inverse reduction did not reach the identity");
  return r;
}

IntMatrix IntMatrix::permuted(const std::vector<std::size_t>& perm) const {
  ensure(square() && perm.size() == rows_, "permutation size mismatch");
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(perm[i], perm[j]);
  return out;
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, i64 factor) {
  for (std::size_t i = 0; i < rows_; ++i) {
    i128 v = static_cast<i128>(at(i, dst)) + static_cast<i128>(factor) * at(i, src);
    at(i, dst) = narrowed(v, "column operation");
  }
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, i64 factor) {
  for (std::size_t j = 0; j < cols_; ++j) {
    i128 v = static_cast<i128>(at(dst, j)) + static_cast<i128>(factor) * at(src, j);
    at(dst, j) = narrowed(v, "row operation");
  }
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

IntMatrix permutation_matrix(const std::vector<std::size_t>& perm) {
  IntMatrix q(perm.size(), perm.size());
  for (std::size_t c = 0; c < perm.size(); ++c) q.at(perm[c], c) = 1;
  return q;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m.at(i, j);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace adapted

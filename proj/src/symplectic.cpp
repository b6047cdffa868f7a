#include "adapted/symplectic.hpp"

#include <cstdlib>
#include <string>

namespace adapted {

IntMatrix paired_form(std::size_t n) {
  ensure(n % 2 == 0, "paired form needs even dimension");
  IntMatrix j(n, n);
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    j.at(k, k + 1) = 1;
    j.at(k + 1, k) = -1;
  }
  return j;
}

IntMatrix blocks_form(std::size_t n) {
  ensure(n % 2 == 0, "blocks form needs even dimension");
  IntMatrix j(n, n);
  std::size_t half = n / 2;
  for (std::size_t k = 0; k < half; ++k) {
    j.at(k, half + k) = 1;
    j.at(half + k, k) = -1;
  }
  return j;
}

std::vector<std::size_t> paired_to_blocks_permutation(std::size_t n) {
  ensure(n % 2 == 0, "permutation needs even dimension");
  std::vector<std::size_t> perm(n);
  std::size_t half = n / 2;
  for (std::size_t k = 0; k < half; ++k) {
    perm[k] = 2 * k;
    perm[half + k] = 2 * k + 1;
  }
  return perm;
}

namespace {

// floor division so remainders land in [0, d)
i64 floor_div(i64 a, i64 d) {
  i64 q = a / d;
  if ((a % d != 0) && ((a < 0) != (d < 0))) --q;
  return q;
}

struct Reduction {
  IntMatrix c, p, p_inv;

  // congruence by the elementary matrix E = I + q e_src e_dst^T
  void add(std::size_t dst, std::size_t src, i64 q) {
    if (q == 0) return;
    c.add_col(dst, src, q);
    c.add_row(dst, src, q);
    p.add_col(dst, src, q);
    p_inv.add_row(src, dst, -q);
  }

  void swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    c.swap_cols(a, b);
    c.swap_rows(a, b);
    p.swap_cols(a, b);
    p_inv.swap_rows(a, b);
  }
};

}  // namespace

SymplecticChange symplectic_basis(const IntMatrix& b) {
  require(b.square(), errc::dimension_mismatch, "form matrix must be square");
  std::size_t n = b.rows();
  require(n % 2 == 0, errc::odd_dimension, "dimension " + std::to_string(n) + " is odd");
  require(b.is_skew_symmetric(), errc::not_skew, "form matrix is not skew-symmetric");

  Reduction r{b, IntMatrix::identity(n), IntMatrix::identity(n)};

  for (std::size_t k = 0; k + 1 < n; k += 2) {
    for (;;) {
      // smallest nonzero entry above the diagonal in the active corner
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (r.c.at(i, j) != 0 &&
              (pi == n || std::abs(r.c.at(i, j)) < std::abs(r.c.at(pi, pj))))
            pi = i, pj = j;
      require(pi != n, errc::not_unimodular,
              "form is degenerate on the remaining " + std::to_string(n - k) + " dimensions");

      if (pi != k) {
        r.swap(k, pi);
        if (pj == k) pj = pi;
      }
      if (pj != k + 1) r.swap(k + 1, pj);
      if (r.c.at(k, k + 1) < 0) r.swap(k, k + 1);
      i64 d = r.c.at(k, k + 1);

      bool clean = true;
      for (std::size_t col = k + 2; col < n; ++col) {
        r.add(col, k + 1, -floor_div(r.c.at(k, col), d));
        r.add(col, k, floor_div(r.c.at(k + 1, col), d));
        if (r.c.at(k, col) != 0 || r.c.at(k + 1, col) != 0) clean = false;
      }
      if (!clean) continue;  // leftover residues are smaller than d; re-pivot
      require(d == 1, errc::not_unimodular,
              "elementary divisor " + std::to_string(d) + " != 1");
      break;
    }
  }
  ensure(r.c == paired_form(n), "congruence reduction missed the paired form");
  return {r.p, r.p_inv, r.c};
}

IntMatrix transform_action(const IntMatrix& m, const SymplecticChange& change) {
  require(m.square() && m.rows() == change.P.rows(), errc::dimension_mismatch,
          "action and change of basis have different dimensions");
  return change.P_inv * m * change.P;
}

bool is_symplectic(const IntMatrix& m, const IntMatrix& j) {
  require(m.square() && j.square(), errc::dimension_mismatch, "matrices must be square");
  require(m.rows() == j.rows(), errc::dimension_mismatch,
          "matrix and form have different dimensions");
  require(m.rows() % 2 == 0, errc::odd_dimension, "dimension is odd");
  return m.transposed() * j * m == j;
}

bool preserves_form(const IntMatrix& m, const IntMatrix& b) {
  require(m.square() && b.square() && m.rows() == b.rows(), errc::dimension_mismatch,
          "matrix and form have different dimensions");
  return m.transposed() * b * m == b;
}

}  // namespace adapted

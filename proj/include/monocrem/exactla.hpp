#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "monocrem/bigint.hpp"
#include "monocrem/error.hpp"
#include "monocrem/matrix.hpp"

namespace monocrem {

/// Diagonalization U*M*V = diag(d_1,...,d_r, 0, ...) with d_1 | d_2 | ... and
/// U, V unimodular. Delta_k(M) = d_1 * ... * d_k.
struct SmithForm {
  std::vector<BigInt> invariant_factors;  // positive, divisibility chain
  std::size_t rank = 0;
  IntMatrix u;  // rows x rows
  IntMatrix v;  // cols x cols

  /// The diagonal matrix U*M*V, rebuilt from the factors.
  IntMatrix diagonal(std::size_t rows, std::size_t cols) const {
    IntMatrix d(rows, cols);
    for (std::size_t i = 0; i < invariant_factors.size(); ++i)
      d(i, i) = invariant_factors[i];
    return d;
  }
};

/// Column-style Hermite basis: one column per pivot, pivot rows strictly
/// increasing, pivots positive, entries left of a pivot in its row reduced
/// into [0, pivot). Two matrices span the same column lattice iff their
/// Hermite bases are identical.
struct HermiteForm {
  IntMatrix basis;  // rows x rank
  std::size_t rank = 0;
};

/// Smith normal form with both transforms. Pivoting picks the smallest
/// nonzero absolute value, ties broken by (row, col), which keeps the output
/// and the transforms reproducible across runs.
inline SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  struct Pivot {
    bool found = false;
    std::size_t row = 0, col = 0;
  };
  auto find_pivot = [&](std::size_t t) -> Pivot {
    Pivot best;
    BigInt best_abs = 0;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c) {
        if (a(r, c) == 0) continue;
        BigInt v_abs = abs_val(a(r, c));
        if (!best.found || v_abs < best_abs) {
          best = {true, r, c};
          best_abs = v_abs;
        }
      }
    return best;
  };

  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    Pivot piv = find_pivot(t);
    if (!piv.found) break;
    for (;;) {
      a.swap_rows(t, piv.row);
      u.swap_rows(t, piv.row);
      a.swap_cols(t, piv.col);
      v.swap_cols(t, piv.col);
      const BigInt p = a(t, t);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a(r, t) == 0) continue;
        BigInt q = a(r, t) / p;  // truncated: remainder strictly smaller than |p|
        if (q != 0) {
          a.sub_row(r, t, q);
          u.sub_row(r, t, q);
        }
        if (a(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a(t, c) == 0) continue;
        BigInt q = a(t, c) / p;
        if (q != 0) {
          a.sub_col(c, t, q);
          v.sub_col(c, t, q);
        }
        if (a(t, c) != 0) clean = false;
      }
      if (clean) {
        // The pivot must divide the whole remaining block for the chain
        // d_1 | d_2 | ... to come out; fold an offending row in and retry.
        bool divides_all = true;
        for (std::size_t r = t + 1; r < rows && divides_all; ++r)
          for (std::size_t c = t + 1; c < cols && divides_all; ++c)
            if (a(r, c) % p != 0) {
              a.add_row(t, r);
              u.add_row(t, r);
              divides_all = false;
            }
        if (divides_all) break;
      }
      // Smaller remainders appeared somewhere; re-pick the pivot. The block
      // cannot have gone zero: the (t, t) entry survives every reduction.
      piv = find_pivot(t);
    }
  }

  SmithForm result;
  result.rank = 0;
  for (std::size_t i = 0; i < std::min(rows, cols); ++i) {
    if (a(i, i) == 0) break;
    if (a(i, i) < 0) {
      a.negate_row(i);
      u.negate_row(i);
    }
    result.invariant_factors.push_back(a(i, i));
    ++result.rank;
  }
  result.u = std::move(u);
  result.v = std::move(v);
  return result;
}

/// Column Hermite normal form via unimodular column operations only, so the
/// column lattice is preserved exactly. Zero columns are dropped; the basis
/// has exactly rank columns.
inline HermiteForm hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  const std::size_t rows = h.rows(), cols = h.cols();
  std::size_t c = 0;  // next pivot column slot
  std::vector<std::pair<std::size_t, std::size_t>> pivots;

  for (std::size_t row = 0; row < rows && c < cols; ++row) {
    // Concentrate the nonzeros of this row (among columns >= c) into one.
    for (;;) {
      std::size_t best = cols;
      BigInt best_abs = 0;
      std::size_t nonzero = 0;
      for (std::size_t j = c; j < cols; ++j) {
        if (h(row, j) == 0) continue;
        ++nonzero;
        BigInt v_abs = abs_val(h(row, j));
        if (best == cols || v_abs < best_abs) {
          best = j;
          best_abs = v_abs;
        }
      }
      if (best == cols) break;  // row is zero from column c on
      if (nonzero == 1) {
        h.swap_cols(c, best);
        if (h(row, c) < 0) h.negate_col(c);
        // Reduce the pivot row entries of the earlier pivot columns.
        for (std::size_t j = 0; j < c; ++j) {
          BigInt q = floor_div(h(row, j), h(row, c));
          if (q != 0) h.sub_col(j, c, q);
        }
        pivots.emplace_back(row, c);
        ++c;
        break;
      }
      for (std::size_t j = c; j < cols; ++j) {
        if (j == best || h(row, j) == 0) continue;
        BigInt q = h(row, j) / h(row, best);
        if (q != 0) h.sub_col(j, best, q);
      }
    }
  }

  HermiteForm result;
  result.rank = pivots.size();
  result.basis = IntMatrix(rows, result.rank);
  for (std::size_t j = 0; j < result.rank; ++j)
    for (std::size_t r = 0; r < rows; ++r) result.basis(r, j) = h(r, j);
  return result;
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
inline std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    a.swap_rows(r, piv);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

namespace detail {

/// Visit every size-subset of {0..total-1} in lexicographic order.
template <typename Fn>
void for_each_combination(std::size_t total, std::size_t size, Fn&& fn) {
  if (size > total) return;
  std::vector<std::size_t> idx(size);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (;;) {
    fn(idx);
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == total - size + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// gcd of all nonzero r x r minors by direct enumeration; 0 if all vanish.
inline BigInt minor_gcd_brute(const IntMatrix& m, std::size_t r) {
  if (r == 0) return 1;
  BigInt g = 0;
  for_each_combination(m.rows(), r, [&](const std::vector<std::size_t>& ri) {
    for_each_combination(m.cols(), r, [&](const std::vector<std::size_t>& ci) {
      BigInt d = determinant(m.submatrix(ri, ci));
      if (d != 0) g = gcd_val(g, d);
    });
  });
  return g;
}

}  // namespace detail

/// Delta_r: gcd of all nonzero r x r minors (0 when every r x r minor
/// vanishes). Computed as the product of the first r invariant factors when
/// r <= rank, by enumeration otherwise.
inline BigInt minor_gcd(const IntMatrix& m, std::size_t r) {
  if (r > std::min(m.rows(), m.cols()))
    fail(errc::bad_minor_size, "minor size exceeds matrix dimensions");
  if (r == 0) return 1;
  SmithForm snf = smith_normal_form(m);
  if (r <= snf.rank) {
    BigInt delta = 1;
    for (std::size_t i = 0; i < r; ++i) delta *= snf.invariant_factors[i];
    return delta;
  }
  return detail::minor_gcd_brute(m, r);
}

/// Column lattices coincide iff the canonical Hermite bases are identical.
inline bool lattice_equal(const IntMatrix& m1, const IntMatrix& m2) {
  if (m1.rows() != m2.rows())
    fail(errc::dimension_mismatch, "lattices live in different ambient ranks");
  auto h1 = hermite_normal_form(m1);
  auto h2 = hermite_normal_form(m2);
  return h1.basis == h2.basis;
}

/// Membership of v in the column lattice, solved greedily against the
/// Hermite basis (pivot rows are strictly increasing).
inline bool lattice_contains(const IntMatrix& m, const std::vector<BigInt>& v) {
  if (v.size() != m.rows())
    fail(errc::dimension_mismatch, "vector length differs from row count");
  HermiteForm h = hermite_normal_form(m);
  std::vector<BigInt> residual = v;
  std::size_t row = 0;
  for (std::size_t j = 0; j < h.rank; ++j) {
    std::size_t pivot_row = row;
    while (pivot_row < m.rows() && h.basis(pivot_row, j) == 0) ++pivot_row;
    if (pivot_row == m.rows()) break;  // unreachable for a well-formed basis
    for (std::size_t r = row; r < pivot_row; ++r)
      if (residual[r] != 0) return false;
    const BigInt& p = h.basis(pivot_row, j);
    if (residual[pivot_row] % p != 0) return false;
    BigInt q = residual[pivot_row] / p;
    if (q != 0)
      for (std::size_t r = pivot_row; r < m.rows(); ++r)
        residual[r] -= q * h.basis(r, j);
    row = pivot_row + 1;
  }
  return std::all_of(residual.begin(), residual.end(),
                     [](const BigInt& x) { return x == 0; });
}

inline bool lattice_contains(const IntMatrix& m, const std::vector<int>& v) {
  std::vector<BigInt> b(v.begin(), v.end());
  return lattice_contains(m, b);
}

/// Every square minor in {0, +1, -1}, checked by exhausting submatrices.
/// Guarded: the enumeration is exponential in min(rows, cols).
inline bool is_totally_unimodular(const IntMatrix& m, std::size_t bound = 8) {
  const std::size_t k = std::min(m.rows(), m.cols());
  if (k > bound)
    fail(errc::too_large, "matrix too large for exhaustive unimodularity check");
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (abs_val(m(r, c)) > 1) return false;
  bool ok = true;
  for (std::size_t s = 2; s <= k && ok; ++s) {
    detail::for_each_combination(m.rows(), s, [&](const std::vector<std::size_t>& ri) {
      if (!ok) return;
      detail::for_each_combination(m.cols(), s, [&](const std::vector<std::size_t>& ci) {
        if (!ok) return;
        if (abs_val(determinant(m.submatrix(ri, ci))) > 1) ok = false;
      });
    });
  }
  return ok;
}

/// The lexicographically least matrix reachable by permuting rows arbitrarily
/// and then sorting columns. Two log-matrices describe permutation-equivalent
/// sets iff their canonical forms are equal. Exhaustive over row
/// permutations, so guarded by a row bound.
inline IntMatrix canonical_rowcol_form(const IntMatrix& m, std::size_t bound = 9) {
  if (m.rows() > bound)
    fail(errc::too_large, "too many rows for exhaustive canonicalization");
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> perm(rows);
  std::iota(perm.begin(), perm.end(), std::size_t{0});

  std::optional<IntMatrix> best;
  do {
    // Columns of the row-permuted matrix, sorted lexicographically in
    // descending order (so the identity matrix is its own canonical form).
    std::vector<std::vector<BigInt>> columns(cols);
    for (std::size_t c = 0; c < cols; ++c) {
      columns[c].reserve(rows);
      for (std::size_t r = 0; r < rows; ++r) columns[c].push_back(m(perm[r], c));
    }
    std::sort(columns.begin(), columns.end(), std::greater<>());
    IntMatrix candidate(rows, cols);
    for (std::size_t c = 0; c < cols; ++c)
      for (std::size_t r = 0; r < rows; ++r) candidate(r, c) = columns[c][r];
    if (!best || candidate < *best) best = std::move(candidate);
  } while (std::next_permutation(perm.begin(), perm.end()));

  return best ? *best : m;
}

}  // namespace monocrem

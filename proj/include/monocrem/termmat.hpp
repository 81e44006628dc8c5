#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "monocrem/core.hpp"
#include "monocrem/error.hpp"
#include "monocrem/exactla.hpp"
#include "monocrem/matrix.hpp"

namespace monocrem {

/// A single signed monomial term c * x^alpha over the integers. The zero
/// term is canonical: coefficient 0 and an empty exponent vector.
struct Term {
  BigInt coeff;
  std::vector<int> exponents;

  Term() : coeff(0) {}
  Term(BigInt c, std::vector<int> e) : coeff(std::move(c)), exponents(std::move(e)) {
    if (coeff == 0) exponents.clear();
  }

  bool is_zero() const { return coeff == 0; }

  Term operator*(const Term& other) const {
    if (is_zero() || other.is_zero()) return Term();
    std::vector<int> e(exponents);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exponents[i];
    return Term(coeff * other.coeff, std::move(e));
  }

  bool operator==(const Term& other) const = default;
};

/// Which construction a term matrix came from. The rank shortcut through
/// specialization is only valid for these monomial-derived families, so the
/// matrix remembers its pedigree.
enum class TermFamily { Generic, Jacobian, LinearSyzygy, Taylor };

/// Matrix whose entries are single signed monomial terms in n variables.
class TermMatrix {
 public:
  TermMatrix(std::size_t rows, std::size_t cols, std::size_t n,
             TermFamily family = TermFamily::Generic)
      : rows_(rows), cols_(cols), n_(n), family_(family), entries_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t vars() const noexcept { return n_; }
  TermFamily family() const noexcept { return family_; }

  Term& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Term& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

 private:
  std::size_t rows_, cols_, n_;
  TermFamily family_;
  std::vector<Term> entries_;
};

/// One linear syzygy x_i * F_j = x_k * F_l between members j < l.
struct LinearSyzygy {
  std::size_t j, l;  // member indices, j < l
  std::size_t i, k;  // variable indices: v_j - v_l = e_k - e_i
};

/// All linear syzygies in lexicographic (j, l) order. A pair qualifies iff
/// its exponent difference has exactly one +1 and one -1.
inline std::vector<LinearSyzygy> linear_syzygies(const MonomialSet& f) {
  std::vector<LinearSyzygy> out;
  for (std::size_t j = 0; j < f.q(); ++j)
    for (std::size_t l = j + 1; l < f.q(); ++l) {
      std::size_t plus = f.n(), minus = f.n();
      bool ok = true;
      for (std::size_t t = 0; t < f.n() && ok; ++t) {
        int diff = f.member(j)[t] - f.member(l)[t];
        if (diff == 0) continue;
        if (diff == 1 && plus == f.n())
          plus = t;
        else if (diff == -1 && minus == f.n())
          minus = t;
        else
          ok = false;
      }
      if (ok && plus != f.n() && minus != f.n())
        out.push_back(LinearSyzygy{j, l, /*i=*/minus, /*k=*/plus});
    }
  return out;
}

/// q x n matrix of formal partial derivatives: entry (j, i) is
/// a_i * x^{v_j - e_i}, an integer-coefficient term independent of any field.
inline TermMatrix formal_jacobian(const MonomialSet& f) {
  TermMatrix theta(f.q(), f.n(), f.n(), TermFamily::Jacobian);
  for (std::size_t j = 0; j < f.q(); ++j)
    for (std::size_t i = 0; i < f.n(); ++i) {
      int a = f.member(j)[i];
      if (a == 0) continue;
      std::vector<int> e = f.member(j).exponents();
      e[i] -= 1;
      theta(j, i) = Term(a, std::move(e));
    }
  return theta;
}

namespace detail {

inline Term variable_term(std::size_t n, std::size_t var, int sign) {
  std::vector<int> e(n, 0);
  e[var] = 1;
  return Term(sign, std::move(e));
}

}  // namespace detail

/// q x r matrix of linear syzygies: the column for syzygy (j, l) carries
/// x_i at row j and -x_k at row l.
inline TermMatrix linear_syzygy_matrix(const MonomialSet& f) {
  auto syz = linear_syzygies(f);
  TermMatrix ls(f.q(), syz.size(), f.n(), TermFamily::LinearSyzygy);
  for (std::size_t c = 0; c < syz.size(); ++c) {
    ls(syz[c].j, c) = detail::variable_term(f.n(), syz[c].i, +1);
    ls(syz[c].l, c) = detail::variable_term(f.n(), syz[c].k, -1);
  }
  return ls;
}

/// q x C(q,2) Taylor syzygy matrix: the column for pair (j, l) carries
/// lcm/x^{v_j} at row j and -lcm/x^{v_l} at row l, pairs in lex order.
inline TermMatrix taylor_matrix(const MonomialSet& f) {
  const std::size_t q = f.q();
  const std::size_t pairs = q * (q - 1) / 2;
  TermMatrix t(q, pairs, f.n(), TermFamily::Taylor);
  std::size_t c = 0;
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t l = j + 1; l < q; ++l, ++c) {
      std::vector<int> up(f.n()), down(f.n());
      for (std::size_t i = 0; i < f.n(); ++i) {
        int lcm = std::max(f.member(j)[i], f.member(l)[i]);
        up[i] = lcm - f.member(j)[i];
        down[i] = lcm - f.member(l)[i];
      }
      t(j, c) = Term(1, std::move(up));
      t(l, c) = Term(-1, std::move(down));
    }
  return t;
}

/// Substitute x_i = 1 everywhere: keep only the coefficients.
inline IntMatrix specialize_ones(const TermMatrix& t) {
  IntMatrix m(t.rows(), t.cols());
  for (std::size_t r = 0; r < t.rows(); ++r)
    for (std::size_t c = 0; c < t.cols(); ++c) m(r, c) = t(r, c).coeff;
  return m;
}

/// Rank over the rational function field. For the Jacobian, linear syzygy
/// and Taylor families this equals the rank of the x_i = 1 specialization;
/// for a generic term matrix that shortcut is unsound and the call refuses.
inline std::size_t term_rank(const TermMatrix& t) {
  if (t.family() == TermFamily::Generic)
    fail(errc::family_required,
         "term_rank needs a monomial-derived matrix family");
  return rank(specialize_ones(t));
}

/// Exact symbolic determinant of the selected square submatrix by signed
/// permutation expansion with like-term merging (exact exponent equality).
/// Returns the terms sorted by exponent vector; an empty vector is the zero
/// polynomial.
inline std::vector<Term> term_minor(const TermMatrix& t,
                                    const std::vector<std::size_t>& row_idx,
                                    const std::vector<std::size_t>& col_idx) {
  if (row_idx.size() != col_idx.size())
    fail(errc::bad_minor_size, "minor needs equally many rows and columns");
  const std::size_t s = row_idx.size();
  if (s > 6) fail(errc::too_large, "symbolic minors limited to size 6");
  if (s == 0) return {Term(1, std::vector<int>(t.vars(), 0))};

  std::map<std::vector<int>, BigInt> acc;
  std::vector<std::size_t> perm(s);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    Term prod(1, std::vector<int>(t.vars(), 0));
    bool zero = false;
    for (std::size_t r = 0; r < s && !zero; ++r) {
      const Term& e = t(row_idx[r], col_idx[perm[r]]);
      if (e.is_zero())
        zero = true;
      else
        prod = prod * e;
    }
    if (zero) continue;
    // permutation parity
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < s; ++a)
      for (std::size_t b = a + 1; b < s; ++b)
        if (perm[a] > perm[b]) ++inversions;
    if (inversions % 2 == 1) prod.coeff = -prod.coeff;
    acc[prod.exponents] += prod.coeff;
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Term> out;
  for (auto& [e, c] : acc)
    if (c != 0) out.emplace_back(c, e);
  return out;
}

/// The difference matrix M (columns v_j - v_l = e_k - e_i, one per linear
/// syzygy, in the linear syzygy column order, so M = A*S holds on the nose)
/// together with the number of weak components of the digraph on the
/// variables induced by those differences.
struct DifferenceDigraph {
  IntMatrix m;              // n x r
  std::size_t components;   // weak components, isolated variables included
};

inline DifferenceDigraph difference_matrix_and_digraph(const MonomialSet& f) {
  auto syz = linear_syzygies(f);
  DifferenceDigraph out{IntMatrix(f.n(), syz.size()), 0};
  detail::UnionFind uf(f.n());
  for (std::size_t c = 0; c < syz.size(); ++c) {
    out.m(syz[c].k, c) = 1;
    out.m(syz[c].i, c) = -1;
    uf.unite(syz[c].i, syz[c].k);
  }
  out.components = uf.components();
  return out;
}

}  // namespace monocrem

#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "monocrem/error.hpp"
#include "monocrem/matrix.hpp"

namespace monocrem {

/// A monomial x_1^{a_1}...x_n^{a_n}, stored as its exponent vector.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents)
      : exponents_(std::move(exponents)) {
    for (int e : exponents_)
      if (e < 0) fail(errc::length_mismatch, "negative exponent");
  }

  std::size_t vars() const noexcept { return exponents_.size(); }
  int operator[](std::size_t i) const { return exponents_[i]; }
  const std::vector<int>& exponents() const noexcept { return exponents_; }

  int degree() const {
    return std::accumulate(exponents_.begin(), exponents_.end(), 0);
  }

  bool is_squarefree() const {
    return std::all_of(exponents_.begin(), exponents_.end(),
                       [](int e) { return e <= 1; });
  }

  bool divides(const Monomial& other) const {
    if (vars() != other.vars()) return false;
    for (std::size_t i = 0; i < vars(); ++i)
      if (exponents_[i] > other.exponents_[i]) return false;
    return true;
  }

  bool operator==(const Monomial& other) const = default;
  bool operator<(const Monomial& other) const {
    return exponents_ < other.exponents_;
  }

 private:
  std::vector<int> exponents_;
};

/// A finite ordered set F of q distinct monomials of common degree d in n
/// variables. Construction validates degrees and distinctness but does not
/// normalize; conic and common-factor status is kept as metadata so that the
/// decision routines can insist on normalized input.
class MonomialSet {
 public:
  MonomialSet(std::size_t n, std::vector<Monomial> members)
      : n_(n), members_(std::move(members)) {
    if (members_.empty()) fail(errc::empty_set, "a monomial set needs at least one member");
    for (const Monomial& m : members_)
      if (m.vars() != n_)
        fail(errc::length_mismatch, "exponent vector length differs from variable count");
    d_ = members_.front().degree();
    if (d_ < 1) fail(errc::degenerate_result, "common degree must be at least 1");
    for (const Monomial& m : members_)
      if (m.degree() != d_) fail(errc::mixed_degrees, "members have mixed degrees");
    std::set<Monomial> seen;
    for (const Monomial& m : members_)
      if (!seen.insert(m).second)
        fail(errc::duplicate_monomial, "duplicate monomial in set");
  }

  std::size_t n() const noexcept { return n_; }        // variable count
  int d() const noexcept { return d_; }                // common degree
  std::size_t q() const noexcept { return members_.size(); }
  const std::vector<Monomial>& members() const noexcept { return members_; }
  const Monomial& member(std::size_t j) const { return members_[j]; }

  /// True when some variable divides no member.
  bool is_conic() const {
    for (std::size_t i = 0; i < n_; ++i) {
      bool used = false;
      for (const Monomial& m : members_) used = used || m[i] > 0;
      if (!used) return true;
    }
    return false;
  }

  /// Exponent vector of gcd(F): the entrywise minimum.
  std::vector<int> common_factor() const {
    std::vector<int> g(members_.front().exponents());
    for (const Monomial& m : members_)
      for (std::size_t i = 0; i < n_; ++i) g[i] = std::min(g[i], m[i]);
    return g;
  }

  bool has_common_factor() const {
    auto g = common_factor();
    return std::any_of(g.begin(), g.end(), [](int e) { return e > 0; });
  }

  bool is_normalized() const { return !is_conic() && !has_common_factor(); }

  bool is_squarefree() const {
    return std::all_of(members_.begin(), members_.end(),
                       [](const Monomial& m) { return m.is_squarefree(); });
  }

  bool contains(const Monomial& m) const {
    return std::find(members_.begin(), members_.end(), m) != members_.end();
  }

  bool operator==(const MonomialSet& other) const {
    return n_ == other.n_ && members_ == other.members_;
  }

  /// Set equality modulo member order.
  bool same_members(const MonomialSet& other) const {
    if (n_ != other.n_ || q() != other.q()) return false;
    auto a = members_, b = other.members_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

 private:
  std::size_t n_;
  int d_ = 0;
  std::vector<Monomial> members_;
};

inline MonomialSet new_monomial_set(std::size_t n,
                                    const std::vector<std::vector<int>>& vectors) {
  std::vector<Monomial> members;
  members.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != n)
      fail(errc::length_mismatch, "exponent vector length differs from variable count");
    members.emplace_back(v);
  }
  return MonomialSet(n, std::move(members));
}

/// Divide out gcd(F) and delete variables that divide no member, keeping the
/// relative order of the surviving variables. The result is non-conic with
/// trivial common factor; its degree is d minus the degree of the gcd.
inline MonomialSet normalize(const MonomialSet& f) {
  auto g = f.common_factor();
  std::vector<std::vector<int>> reduced;
  reduced.reserve(f.q());
  for (const Monomial& m : f.members()) {
    std::vector<int> e(f.n());
    for (std::size_t i = 0; i < f.n(); ++i) e[i] = m[i] - g[i];
    reduced.push_back(std::move(e));
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < f.n(); ++i) {
    bool used = false;
    for (const auto& e : reduced) used = used || e[i] > 0;
    if (used) keep.push_back(i);
  }
  if (keep.empty())
    fail(errc::degenerate_result, "normalization leaves a degree-0 set");
  std::vector<std::vector<int>> projected;
  projected.reserve(reduced.size());
  for (const auto& e : reduced) {
    std::vector<int> p;
    p.reserve(keep.size());
    for (std::size_t i : keep) p.push_back(e[i]);
    projected.push_back(std::move(p));
  }
  return new_monomial_set(keep.size(), projected);
}

/// The n x q matrix A whose j-th column is the exponent vector of the j-th
/// member.
inline IntMatrix log_matrix(const MonomialSet& f) {
  IntMatrix a(f.n(), f.q());
  for (std::size_t j = 0; j < f.q(); ++j)
    for (std::size_t i = 0; i < f.n(); ++i) a(i, j) = f.member(j)[i];
  return a;
}

/// A with an appended all-ones row, (n+1) x q.
inline IntMatrix extended_log_matrix(const MonomialSet& f) {
  IntMatrix a(f.n() + 1, f.q());
  for (std::size_t j = 0; j < f.q(); ++j) {
    for (std::size_t i = 0; i < f.n(); ++i) a(i, j) = f.member(j)[i];
    a(f.n(), j) = 1;
  }
  return a;
}

/// Entrywise complement 1 - a_ij of a squarefree set; degree becomes n - d.
inline MonomialSet dual_complement(const MonomialSet& f) {
  if (!f.is_squarefree())
    fail(errc::not_squarefree, "dual complement requires a squarefree set");
  std::vector<std::vector<int>> comp;
  comp.reserve(f.q());
  for (const Monomial& m : f.members()) {
    std::vector<int> e(f.n());
    for (std::size_t i = 0; i < f.n(); ++i) e[i] = 1 - m[i];
    comp.push_back(std::move(e));
  }
  return new_monomial_set(f.n(), comp);
}

namespace detail {

// Plain union-find over variable indices.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }
  std::size_t components() {
    std::size_t c = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i)
      if (find(i) == i) ++c;
    return c;
  }

 private:
  std::vector<std::size_t> parent_;
};

inline UnionFind cooccurrence_components(const MonomialSet& f) {
  UnionFind uf(f.n());
  for (const Monomial& m : f.members()) {
    std::size_t first = f.n();
    for (std::size_t i = 0; i < f.n(); ++i) {
      if (m[i] == 0) continue;
      if (first == f.n())
        first = i;
      else
        uf.unite(first, i);
    }
  }
  return uf;
}

}  // namespace detail

/// True iff the graph joining two variables whenever they appear in a common
/// member is connected. A disconnected set splits F into parts on disjoint
/// variable sets, which rules out birationality for d >= 2.
inline bool is_cohesive(const MonomialSet& f) {
  auto uf = detail::cooccurrence_components(f);
  return uf.components() == 1;
}

/// The n squarefree monomials of degree n-1, each omitting one variable,
/// listed with the omitted variable running from x_n down to x_1 (so n = 3
/// gives x1*x2, x1*x3, x2*x3).
inline MonomialSet steiner_set(std::size_t n) {
  if (n < 2) fail(errc::too_few_monomials, "steiner_set needs n >= 2");
  std::vector<std::vector<int>> vectors;
  vectors.reserve(n);
  for (std::size_t omit = n; omit-- > 0;) {
    std::vector<int> e(n, 1);
    e[omit] = 0;
    vectors.push_back(std::move(e));
  }
  return new_monomial_set(n, vectors);
}

}  // namespace monocrem

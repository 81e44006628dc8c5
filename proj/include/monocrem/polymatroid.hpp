#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "monocrem/core.hpp"
#include "monocrem/error.hpp"

namespace monocrem {

/// Exchange property: for every pair u, v in F and every index i with
/// u_i > v_i there is a j with u_j < v_j such that (x_j / x_i) x^u is in F.
/// (Equal-degree distinct members are automatically a minimal generating
/// set, so no extra minimality check is needed.)
inline bool is_polymatroidal(const MonomialSet& f) {
  for (const Monomial& u : f.members())
    for (const Monomial& v : f.members()) {
      if (u == v) continue;
      for (std::size_t i = 0; i < f.n(); ++i) {
        if (u[i] <= v[i]) continue;
        bool exchanged = false;
        for (std::size_t j = 0; j < f.n() && !exchanged; ++j) {
          if (u[j] >= v[j]) continue;
          std::vector<int> e = u.exponents();
          e[i] -= 1;
          e[j] += 1;
          exchanged = f.contains(Monomial(e));
        }
        if (!exchanged) return false;
      }
    }
  return true;
}

namespace detail {

/// Reverse lexicographic comparison of same-degree exponent vectors: scan
/// from the last variable backwards; at the first difference the larger
/// entry sorts later.
inline bool revlex_less(const Monomial& a, const Monomial& b) {
  for (std::size_t i = a.vars(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace detail

/// Order F by reverse lex and check that every colon ideal
/// (x^{v_1},...,x^{v_{i-1}}) : x^{v_i} is generated by variables: compute
/// the generators lcm(v_j, v_i) - v_i, minimalize under divisibility, and
/// insist every survivor has degree 1.
inline bool has_linear_quotients_revlex(const MonomialSet& f) {
  std::vector<Monomial> ordered = f.members();
  std::sort(ordered.begin(), ordered.end(), detail::revlex_less);
  for (std::size_t i = 1; i < ordered.size(); ++i) {
    std::vector<Monomial> gens;
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<int> e(f.n());
      for (std::size_t t = 0; t < f.n(); ++t)
        e[t] = std::max(ordered[j][t] - ordered[i][t], 0);
      gens.emplace_back(e);
    }
    for (std::size_t g = 0; g < gens.size(); ++g) {
      bool redundant = false;
      for (std::size_t h = 0; h < gens.size() && !redundant; ++h) {
        if (h == g) continue;
        if (gens[h] == gens[g])
          redundant = h < g;  // keep one copy of duplicates
        else if (gens[h].divides(gens[g]))
          redundant = true;
      }
      if (!redundant && gens[g].degree() != 1) return false;
    }
  }
  return true;
}

/// All exponent vectors with total degree d inside the box 0 <= a_i <= s_i,
/// in lexicographic order.
inline MonomialSet veronese_type_set(std::size_t n, int d,
                                     const std::vector<int>& s) {
  if (s.size() != n) fail(errc::length_mismatch, "bound vector length must be n");
  long long total = 0;
  for (int b : s) {
    if (b < 0) fail(errc::length_mismatch, "negative box bound");
    total += b;
  }
  if (total < d) fail(errc::empty_result, "box bounds cannot reach the degree");

  std::vector<std::vector<int>> vectors;
  std::vector<int> current(n, 0);
  auto recurse = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i == n) {
      if (remaining == 0) vectors.push_back(current);
      return;
    }
    int cap = std::min(s[i], remaining);
    for (int a = 0; a <= cap; ++a) {
      current[i] = a;
      self(self, i + 1, remaining - a);
    }
    current[i] = 0;
  };
  recurse(recurse, 0, d);
  std::sort(vectors.begin(), vectors.end());
  return new_monomial_set(n, vectors);
}

}  // namespace monocrem

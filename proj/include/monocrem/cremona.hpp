#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "monocrem/core.hpp"
#include "monocrem/decide.hpp"
#include "monocrem/error.hpp"
#include "monocrem/exactla.hpp"
#include "monocrem/matrix.hpp"

namespace monocrem {

/// A set of n monomials in n variables with no common factor defining a
/// Cremona transformation; for square A this is |det(A)| = d.
inline bool is_cremona_set(const MonomialSet& f) {
  detail::require_normalized(f, "is_cremona_set");
  if (f.q() != f.n()) return false;
  return dpb(f).birational();
}

enum class Degree2Shape { OddUniqueCycle, TreeWithLoop, NotCremona };

inline const char* degree2_shape_name(Degree2Shape s) noexcept {
  switch (s) {
    case Degree2Shape::OddUniqueCycle: return "OddUniqueCycle";
    case Degree2Shape::TreeWithLoop: return "TreeWithLoop";
    case Degree2Shape::NotCremona: return "NotCremona";
  }
  return "Unknown";
}

/// Structural classification of a cohesive square degree-2 set: with n
/// members on n variables the graph is either unicyclic (Cremona iff the
/// unique cycle is odd) or a tree carrying exactly one loop (always
/// Cremona). Everything else has singular log-matrix.
inline Degree2Shape degree2_cremona_shape(const MonomialSet& f) {
  detail::require_normalized(f, "degree2_cremona_shape");
  if (f.d() != 2) fail(errc::wrong_degree, "degree2_cremona_shape needs degree 2");
  if (f.q() != f.n()) fail(errc::not_square, "degree2_cremona_shape needs q = n");
  if (!is_cohesive(f)) fail(errc::not_cohesive, "degree2_cremona_shape needs a cohesive set");

  GraphFacts facts = degree2_graph_facts(f);
  if (facts.loops == 0) {
    // Connected, n vertices, n edges: exactly one cycle. Find it by pruning
    // leaves; what survives is the cycle.
    std::vector<std::size_t> degree(f.n(), 0);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const Monomial& m : f.members()) {
      std::vector<std::size_t> supp;
      for (std::size_t i = 0; i < f.n(); ++i)
        if (m[i] > 0) supp.push_back(i);
      edges.emplace_back(supp[0], supp[1]);
      ++degree[supp[0]];
      ++degree[supp[1]];
    }
    std::vector<bool> alive_vertex(f.n(), true);
    std::vector<bool> alive_edge(edges.size(), true);
    bool pruned = true;
    while (pruned) {
      pruned = false;
      for (std::size_t v = 0; v < f.n(); ++v) {
        if (!alive_vertex[v] || degree[v] != 1) continue;
        for (std::size_t e = 0; e < edges.size(); ++e) {
          if (!alive_edge[e]) continue;
          if (edges[e].first == v || edges[e].second == v) {
            alive_edge[e] = false;
            --degree[edges[e].first];
            --degree[edges[e].second];
            break;
          }
        }
        alive_vertex[v] = false;
        pruned = true;
      }
    }
    std::size_t cycle_len = static_cast<std::size_t>(
        std::count(alive_edge.begin(), alive_edge.end(), true));
    return (cycle_len % 2 == 1) ? Degree2Shape::OddUniqueCycle
                                : Degree2Shape::NotCremona;
  }
  if (facts.loops == 1) return Degree2Shape::TreeWithLoop;
  return Degree2Shape::NotCremona;  // >= 2 loops cannot be cohesive with q = n
}

/// Both determinants of the duality identity
/// (n - d) det(A) = (-1)^{n-1} d det(A-hat). The identity holds for every
/// squarefree square log-matrix; a false flag here means a bug, and callers
/// treat it as one.
struct DualityCheck {
  BigInt det_a;
  BigInt det_a_hat;
  bool identity_holds = false;
};

inline DualityCheck duality_check(const MonomialSet& f) {
  if (!f.is_squarefree()) fail(errc::not_squarefree, "duality needs a squarefree set");
  if (f.q() != f.n()) fail(errc::not_square, "duality needs q = n");
  if (f.d() < 1 || f.d() > static_cast<int>(f.n()) - 1)
    fail(errc::wrong_degree, "duality needs 1 <= d <= n-1");
  IntMatrix a = log_matrix(f);
  IntMatrix a_hat(f.n(), f.n());
  for (std::size_t r = 0; r < f.n(); ++r)
    for (std::size_t c = 0; c < f.n(); ++c) a_hat(r, c) = 1 - a(r, c);
  DualityCheck check;
  check.det_a = determinant(a);
  check.det_a_hat = determinant(a_hat);
  const int n = static_cast<int>(f.n());
  BigInt lhs = BigInt(n - f.d()) * check.det_a;
  BigInt rhs = BigInt(f.d()) * check.det_a_hat;
  if ((n - 1) % 2 == 1) rhs = -rhs;
  check.identity_holds = (lhs == rhs);
  return check;
}

/// Row sums all equal to d (column sums equal d by construction).
inline bool is_doubly_stochastic(const MonomialSet& f) {
  if (f.q() != f.n()) fail(errc::not_square, "doubly stochastic needs q = n");
  for (std::size_t i = 0; i < f.n(); ++i) {
    int sum = 0;
    for (const Monomial& m : f.members()) sum += m[i];
    if (sum != f.d()) return false;
  }
  return true;
}

/// gcd(n, d) = 1 is necessary for a doubly stochastic log-matrix to have
/// |det| = d; false certifies an empty search.
inline bool db_obstruction(std::size_t n, int d) {
  return std::gcd(static_cast<long long>(n), static_cast<long long>(d)) == 1;
}

/// Divide member t by the variable assignment[t] (0-based, a permutation of
/// the variables). Returns the divided set, which is again doubly stochastic
/// squarefree of degree d-1, or nothing when some division fails or members
/// collide.
inline std::optional<MonomialSet> inductive_step(
    const MonomialSet& f, const std::vector<std::size_t>& assignment) {
  if (f.q() != f.n() || !f.is_squarefree() || !is_doubly_stochastic(f))
    fail(errc::not_db, "inductive_step needs a squarefree doubly stochastic set");
  if (assignment.size() != f.n())
    fail(errc::not_permutation, "assignment length must be n");
  std::vector<bool> seen(f.n(), false);
  for (std::size_t i : assignment) {
    if (i >= f.n() || seen[i])
      fail(errc::not_permutation, "assignment must be a permutation of the variables");
    seen[i] = true;
  }
  std::vector<std::vector<int>> divided;
  divided.reserve(f.q());
  for (std::size_t t = 0; t < f.q(); ++t) {
    if (f.member(t)[assignment[t]] == 0) return std::nullopt;  // x_{i_t} does not divide u_t
    std::vector<int> e = f.member(t).exponents();
    e[assignment[t]] -= 1;
    divided.push_back(std::move(e));
  }
  for (std::size_t x = 0; x < divided.size(); ++x)
    for (std::size_t y = x + 1; y < divided.size(); ++y)
      if (divided[x] == divided[y]) return std::nullopt;  // repeated monomials
  if (f.d() - 1 < 1) return std::nullopt;
  return new_monomial_set(f.n(), divided);
}

/// One permutability class: sets identical up to permuting variables (rows)
/// and members (columns).
struct CremonaClass {
  IntMatrix canonical_matrix;
  MonomialSet representative;
  std::size_t n;
  int d;
  bool db = false;
  bool complement_valid = false;
};

struct ClassifyOptions {
  unsigned jobs = 1;
  bool prune = true;  // classify_db only: skip degrees with gcd(n, d) != 1
};

namespace detail {

struct ClassCandidate {
  std::vector<std::size_t> combo;  // for deterministic representative choice
  MonomialSet set;
};

/// Exact Bareiss determinant in machine integers. Intermediate values are
/// minors of the input, so for the 0/1 matrices of size <= 7 scanned during
/// classification this cannot overflow.
inline long long det_small(std::vector<long long>& a, std::size_t n) {
  long long sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv * n + k] == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t c = k; c < n; ++c) std::swap(a[k * n + c], a[piv * n + c]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i * n + j] = (a[k * n + k] * a[i * n + j] - a[i * n + k] * a[k * n + j]) / prev;
      a[i * n + k] = 0;
    }
    prev = a[k * n + k];
  }
  return sign * a[n * n - 1];
}

/// All squarefree degree-d exponent vectors over n variables, lex order.
inline std::vector<std::vector<int>> squarefree_universe(std::size_t n, int d) {
  std::vector<std::vector<int>> out;
  for_each_combination(n, static_cast<std::size_t>(d),
                       [&](const std::vector<std::size_t>& support) {
                         std::vector<int> e(n, 0);
                         for (std::size_t i : support) e[i] = 1;
                         out.push_back(std::move(e));
                       });
  std::sort(out.begin(), out.end());
  return out;
}

/// Row-permutation action on column bitmasks (bit r = row r), precomputed
/// for every permutation so the canonicity filter below is table lookups.
struct MaskPermTable {
  std::size_t n;
  std::vector<std::vector<std::uint8_t>> permute;  // [perm][mask] -> mask

  explicit MaskPermTable(std::size_t vars) : n(vars) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    const std::size_t masks = std::size_t{1} << n;
    do {
      std::vector<std::uint8_t> row(masks);
      for (std::size_t m = 0; m < masks; ++m) {
        std::uint8_t out = 0;
        for (std::size_t r = 0; r < n; ++r)
          if (m & (std::size_t{1} << r)) out |= std::uint8_t(1u << perm[r]);
        row[m] = out;
      }
      permute.push_back(std::move(row));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
};

/// True iff the column-mask multiset is the lexicographic minimum of its
/// row-permutation orbit. Exactly one labeled member of each permutability
/// class passes, so classes can be collected without comparing survivors
/// against each other. Typical rejects abort after a handful of
/// permutations.
inline bool is_orbit_minimal(const std::vector<std::uint8_t>& sorted_masks,
                             const MaskPermTable& table) {
  const std::size_t n = table.n;
  std::vector<std::uint8_t> image(n);
  for (std::size_t p = 1; p < table.permute.size(); ++p) {  // 0 is the identity
    const auto& act = table.permute[p];
    for (std::size_t c = 0; c < n; ++c) image[c] = act[sorted_masks[c]];
    std::sort(image.begin(), image.end());
    if (std::lexicographical_compare(image.begin(), image.end(),
                                     sorted_masks.begin(), sorted_masks.end()))
      return false;
  }
  return true;
}

/// Enumerate the n-subsets of the universe, keep normalized sets with
/// |det(A)| = d (and doubly stochastic rows when db_only). Each class is
/// emitted exactly once, from its orbit-minimal labeling, so the output is
/// deterministic for any worker count.
inline std::map<IntMatrix, ClassCandidate> enumerate_cremona_classes(
    std::size_t n, int d, bool db_only, unsigned jobs) {
  const auto universe = squarefree_universe(n, d);
  const std::size_t u = universe.size();
  const MaskPermTable table(n);

  std::vector<std::uint8_t> universe_mask(u);
  for (std::size_t j = 0; j < u; ++j) {
    std::uint8_t m = 0;
    for (std::size_t r = 0; r < n; ++r)
      if (universe[j][r]) m |= std::uint8_t(1u << r);
    universe_mask[j] = m;
  }

  auto scan_first_index = [&](std::size_t first,
                              std::map<IntMatrix, ClassCandidate>& found) {
    if (u < n || first > u - n) return;
    std::vector<std::size_t> idx(n);
    idx[0] = first;
    std::iota(idx.begin() + 1, idx.end(), first + 1);
    std::vector<long long> scratch(n * n);
    std::vector<std::uint8_t> masks(n);
    for (;;) {
      // Cheap structural filters before any determinant.
      bool covered_ok = true, gcd_ok = true, db_ok = true;
      for (std::size_t var = 0; var < n && covered_ok && gcd_ok; ++var) {
        int row_sum = 0;
        for (std::size_t j : idx) row_sum += universe[j][var];
        if (row_sum == 0) covered_ok = false;          // conic
        if (row_sum == static_cast<int>(n)) gcd_ok = false;  // common factor
        if (db_only && row_sum != d) db_ok = false;
      }
      if (covered_ok && gcd_ok && (!db_only || db_ok)) {
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t r = 0; r < n; ++r)
            scratch[r * n + c] = universe[idx[c]][r];
        long long det = det_small(scratch, n);
        if (det == d || det == -d) {
          for (std::size_t c = 0; c < n; ++c) masks[c] = universe_mask[idx[c]];
          std::sort(masks.begin(), masks.end());
          if (is_orbit_minimal(masks, table)) {
            IntMatrix a(n, n);
            for (std::size_t c = 0; c < n; ++c)
              for (std::size_t r = 0; r < n; ++r) a(r, c) = universe[idx[c]][r];
            std::vector<std::vector<int>> vecs;
            vecs.reserve(n);
            for (std::size_t j : idx) vecs.push_back(universe[j]);
            found.emplace(canonical_rowcol_form(a),
                          ClassCandidate{idx, new_monomial_set(n, vecs)});
          }
        }
      }
      // next combination with fixed first element
      std::size_t i = n;
      while (i > 1 && idx[i - 1] == u - n + i - 1) --i;
      if (i <= 1) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
  };

  std::map<IntMatrix, ClassCandidate> merged;
  if (jobs <= 1) {
    for (std::size_t first = 0; first + n <= u; ++first)
      scan_first_index(first, merged);
    return merged;
  }

  std::mutex merge_mutex;
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      std::map<IntMatrix, ClassCandidate> local;
      for (std::size_t first = w; first + n <= u; first += jobs)
        scan_first_index(first, local);
      std::lock_guard<std::mutex> lock(merge_mutex);
      merged.merge(local);
    });
  }
  for (auto& t : workers) t.join();
  return merged;
}

inline CremonaClass make_class(const IntMatrix& canon, const MonomialSet& rep) {
  CremonaClass cls{canon, rep, rep.n(), rep.d(), false, false};
  cls.db = is_doubly_stochastic(rep);
  try {
    MonomialSet dual = dual_complement(rep);
    cls.complement_valid = true;
    (void)dual;
  } catch (const Error&) {
    cls.complement_valid = false;
  }
  return cls;
}

}  // namespace detail

/// Exhaustive classification of the squarefree Cremona sets with parameters
/// (n, d), up to permuting source variables and target monomials. Output is
/// sorted by canonical matrix and deterministic for any job count.
inline std::vector<CremonaClass> classify_squarefree_cremona(
    std::size_t n, int d, const ClassifyOptions& opts = {}) {
  if (n > 7) fail(errc::too_large, "classification guarded at n <= 7");
  if (d < 2 || d > static_cast<int>(n) - 1)
    fail(errc::wrong_degree, "classification needs 2 <= d <= n-1");
  auto found = detail::enumerate_cremona_classes(n, d, /*db_only=*/false,
                                                 std::max(1u, opts.jobs));
  std::vector<CremonaClass> classes;
  classes.reserve(found.size());
  for (const auto& [canon, cand] : found)
    classes.push_back(detail::make_class(canon, cand.set));
  return classes;
}

/// DB classification across all degrees 2..n-1. Degrees with gcd(n, d) != 1
/// cannot contribute and are skipped unless pruning is disabled.
inline std::vector<CremonaClass> classify_db_squarefree_cremona(
    std::size_t n, const ClassifyOptions& opts = {}) {
  if (n > 7) fail(errc::too_large, "classification guarded at n <= 7");
  std::vector<CremonaClass> classes;
  for (int d = 2; d <= static_cast<int>(n) - 1; ++d) {
    if (opts.prune && !db_obstruction(n, d)) continue;
    auto found = detail::enumerate_cremona_classes(n, d, /*db_only=*/true,
                                                   std::max(1u, opts.jobs));
    for (const auto& [canon, cand] : found)
      classes.push_back(detail::make_class(canon, cand.set));
  }
  return classes;
}

}  // namespace monocrem

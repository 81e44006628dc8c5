#pragma once

#include <cstddef>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "monocrem/core.hpp"
#include "monocrem/error.hpp"
#include "monocrem/exactla.hpp"
#include "monocrem/termmat.hpp"

namespace monocrem {

enum class Verdict { Birational, NotBirational };

/// Which criterion produced the verdict.
enum class Criterion { DPB, Torsion, RankM, SyzygyRank, Degree2Graph, Cohesion };

inline const char* criterion_name(Criterion c) noexcept {
  switch (c) {
    case Criterion::DPB: return "DPB";
    case Criterion::Torsion: return "Torsion";
    case Criterion::RankM: return "RankM";
    case Criterion::SyzygyRank: return "SyzygyRank";
    case Criterion::Degree2Graph: return "Degree2Graph";
    case Criterion::Cohesion: return "Cohesion";
  }
  return "Unknown";
}

struct GraphFacts {
  bool connected = false;
  bool bipartite = false;
  std::size_t loops = 0;
};

/// Everything needed to replay a verdict by hand.
struct Certificates {
  int degree = 0;                                   // d of the decided set
  std::optional<BigInt> delta_n;                    // gcd of maximal minors of A
  std::optional<std::size_t> rank_a;
  std::optional<std::size_t> rank_ls;
  std::optional<std::size_t> rank_m;
  std::optional<std::size_t> components;            // weak components of the digraph
  std::optional<std::vector<BigInt>> difference_factors;  // SNF of v_1 - v_j matrix
  std::optional<std::size_t> difference_rank;
  // column lattice of the differences equals Z{e_1 - e_k | k = 2..n}
  std::optional<bool> difference_lattice_standard;
  std::optional<GraphFacts> graph;
};

struct BirationalityReport {
  Verdict verdict = Verdict::NotBirational;
  Criterion criterion = Criterion::DPB;
  Certificates certificates;

  bool birational() const { return verdict == Verdict::Birational; }
};

namespace detail {

inline void require_normalized(const MonomialSet& f, const char* who) {
  if (!f.is_normalized())
    fail(errc::not_normalized,
         std::string(who) + " requires a normalized (non-conic, gcd-free) set");
}

}  // namespace detail

/// Determinantal principle: birational into the degree-d Veronese iff A has
/// full rank n and the gcd of its maximal minors equals d. This is the
/// reference decision every other criterion is checked against.
inline BirationalityReport dpb(const MonomialSet& f) {
  detail::require_normalized(f, "dpb");
  BirationalityReport rep;
  rep.criterion = Criterion::DPB;
  rep.certificates.degree = f.d();
  IntMatrix a = log_matrix(f);
  std::size_t rank_a = rank(a);
  rep.certificates.rank_a = rank_a;
  if (rank_a < f.n()) {
    rep.certificates.delta_n = BigInt(0);
    rep.verdict = Verdict::NotBirational;
    return rep;
  }
  BigInt delta = minor_gcd(a, f.n());
  rep.certificates.delta_n = delta;
  rep.verdict = (delta == f.d()) ? Verdict::Birational : Verdict::NotBirational;
  return rep;
}

/// Arithmetical principle for F contained in G: the subring extension is
/// birational iff the column lattices of the log-matrices agree.
inline bool apb(const MonomialSet& f, const MonomialSet& g) {
  if (f.n() != g.n())
    fail(errc::not_subset, "apb requires F and G over the same variables");
  for (const Monomial& m : f.members())
    if (!g.contains(m)) fail(errc::not_subset, "apb requires F to be a subset of G");
  return lattice_equal(log_matrix(f), log_matrix(g));
}

/// Full arithmetical characterization: form the n x (q-1) matrix of
/// differences v_1 - v_j and test that Z^n modulo its column lattice is free
/// of rank one, i.e. Smith rank n-1 with all invariant factors 1.
inline BirationalityReport birational_via_torsion(const MonomialSet& f) {
  detail::require_normalized(f, "birational_via_torsion");
  if (f.q() < 2)
    fail(errc::too_few_monomials, "torsion criterion needs at least two members");
  BirationalityReport rep;
  rep.criterion = Criterion::Torsion;
  rep.certificates.degree = f.d();
  IntMatrix diff(f.n(), f.q() - 1);
  for (std::size_t j = 1; j < f.q(); ++j)
    for (std::size_t i = 0; i < f.n(); ++i)
      diff(i, j - 1) = f.member(0)[i] - f.member(j)[i];
  SmithForm snf = smith_normal_form(diff);
  rep.certificates.difference_rank = snf.rank;
  rep.certificates.difference_factors = snf.invariant_factors;
  if (f.n() >= 2) {
    IntMatrix root_diffs(f.n(), f.n() - 1);
    for (std::size_t k = 1; k < f.n(); ++k) {
      root_diffs(0, k - 1) = 1;
      root_diffs(k, k - 1) = -1;
    }
    rep.certificates.difference_lattice_standard = lattice_equal(diff, root_diffs);
  }
  bool all_ones = std::all_of(snf.invariant_factors.begin(),
                              snf.invariant_factors.end(),
                              [](const BigInt& x) { return x == 1; });
  rep.verdict = (snf.rank == f.n() - 1 && all_ones) ? Verdict::Birational
                                                    : Verdict::NotBirational;
  return rep;
}

/// One-sided: rank(M) = n-1 certifies birationality, anything less is
/// inconclusive.
inline std::optional<BirationalityReport> sufficient_rank_m(const MonomialSet& f) {
  detail::require_normalized(f, "sufficient_rank_m");
  auto dd = difference_matrix_and_digraph(f);
  std::size_t rank_m = rank(dd.m);
  if (rank_m != f.n() - 1) return std::nullopt;
  BirationalityReport rep;
  rep.verdict = Verdict::Birational;
  rep.criterion = Criterion::RankM;
  rep.certificates.degree = f.d();
  rep.certificates.rank_m = rank_m;
  rep.certificates.components = dd.components;
  return rep;
}

/// One-sided: full log-rank plus linear syzygy rank q-1 certifies
/// birationality in every characteristic.
inline std::optional<BirationalityReport> sufficient_syzygy(const MonomialSet& f) {
  detail::require_normalized(f, "sufficient_syzygy");
  std::size_t rank_a = rank(log_matrix(f));
  std::size_t rank_ls = term_rank(linear_syzygy_matrix(f));
  if (rank_a != f.n() || rank_ls != f.q() - 1) return std::nullopt;
  BirationalityReport rep;
  rep.verdict = Verdict::Birational;
  rep.criterion = Criterion::SyzygyRank;
  rep.certificates.degree = f.d();
  rep.certificates.rank_a = rank_a;
  rep.certificates.rank_ls = rank_ls;
  return rep;
}

/// Facts about the degree-2 graph with loops: edge {i, k} per member x_i*x_k,
/// loop at i per member x_i^2. Connectivity counts a loop-only vertex through
/// its own variable, which is exactly the cohesiveness components.
inline GraphFacts degree2_graph_facts(const MonomialSet& f) {
  if (f.d() != 2) fail(errc::wrong_degree, "graph analysis needs degree 2");
  GraphFacts facts;
  facts.connected = is_cohesive(f);
  std::vector<std::vector<std::size_t>> adj(f.n());
  for (const Monomial& m : f.members()) {
    std::vector<std::size_t> supp;
    for (std::size_t i = 0; i < f.n(); ++i)
      if (m[i] > 0) supp.push_back(i);
    if (supp.size() == 1) {
      ++facts.loops;
    } else {
      adj[supp[0]].push_back(supp[1]);
      adj[supp[1]].push_back(supp[0]);
    }
  }
  // 2-color the simple graph, loops ignored; bipartite iff no odd cycle.
  std::vector<int> color(f.n(), -1);
  facts.bipartite = true;
  for (std::size_t start = 0; start < f.n() && facts.bipartite; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::queue<std::size_t> bfs;
    bfs.push(start);
    while (!bfs.empty() && facts.bipartite) {
      std::size_t v = bfs.front();
      bfs.pop();
      for (std::size_t w : adj[v]) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          bfs.push(w);
        } else if (color[w] == color[v]) {
          facts.bipartite = false;
        }
      }
    }
  }
  return facts;
}

/// Complete degree-2 decision from the graph alone: birational iff connected
/// and (non-bipartite or at least one loop). Always agrees with dpb.
inline BirationalityReport degree2_decide(const MonomialSet& f) {
  detail::require_normalized(f, "degree2_decide");
  if (f.d() != 2) fail(errc::wrong_degree, "degree2_decide needs degree 2");
  GraphFacts facts = degree2_graph_facts(f);
  BirationalityReport rep;
  rep.criterion = Criterion::Degree2Graph;
  rep.certificates.degree = 2;
  rep.certificates.graph = facts;
  rep.verdict = (facts.connected && (!facts.bipartite || facts.loops > 0))
                    ? Verdict::Birational
                    : Verdict::NotBirational;
  return rep;
}

/// Contract the edge {a, b} of a degree-2 set: substitute the larger-indexed
/// variable by the smaller everywhere (the edge becomes a loop) and drop the
/// now-unused variable.
inline MonomialSet contract_to_loop(const MonomialSet& f,
                                    std::pair<std::size_t, std::size_t> edge) {
  if (f.d() != 2) fail(errc::wrong_degree, "contract_to_loop needs degree 2");
  auto [a, b] = edge;
  if (a > b) std::swap(a, b);
  if (a == b || b >= f.n()) fail(errc::not_an_edge, "invalid variable pair");
  std::vector<int> edge_vec(f.n(), 0);
  edge_vec[a] += 1;
  edge_vec[b] += 1;
  if (!f.contains(Monomial(edge_vec)))
    fail(errc::not_an_edge, "the pair is not a member of the set");

  std::vector<std::vector<int>> substituted;
  substituted.reserve(f.q());
  for (const Monomial& m : f.members()) {
    std::vector<int> e = m.exponents();
    e[a] += e[b];
    e[b] = 0;
    substituted.push_back(std::move(e));
  }
  for (std::size_t x = 0; x < substituted.size(); ++x)
    for (std::size_t y = x + 1; y < substituted.size(); ++y)
      if (substituted[x] == substituted[y])
        fail(errc::collapse_collision, "contraction makes two members equal");
  // Delete column b; relative order of the other variables is preserved.
  std::vector<std::vector<int>> projected;
  projected.reserve(substituted.size());
  for (const auto& e : substituted) {
    std::vector<int> p;
    p.reserve(f.n() - 1);
    for (std::size_t i = 0; i < f.n(); ++i)
      if (i != b) p.push_back(e[i]);
    projected.push_back(std::move(p));
  }
  return new_monomial_set(f.n() - 1, projected);
}

struct DecideOptions {
  bool verify = false;  // cross-run the torsion criterion and insist on agreement
};

/// Summary of what decide() did to its input before deciding.
struct Decision {
  MonomialSet normalized;
  bool normalization_changed = false;
  BirationalityReport report;
};

/// Orchestrated decision: normalize, fast-fail on non-cohesive sets (valid
/// for d >= 2), use the graph characterization at d = 2, fall back to the
/// determinantal principle otherwise.
inline Decision decide(const MonomialSet& input, const DecideOptions& opts = {}) {
  MonomialSet f = input.is_normalized() ? input : normalize(input);
  Decision result{f, !(f == input), BirationalityReport{}};

  if (f.d() >= 2 && !is_cohesive(f)) {
    BirationalityReport rep;
    rep.verdict = Verdict::NotBirational;
    rep.criterion = Criterion::Cohesion;
    rep.certificates.degree = f.d();
    rep.certificates.components = detail::cooccurrence_components(f).components();
    result.report = rep;
  } else if (f.d() == 2) {
    result.report = degree2_decide(f);
  } else {
    result.report = dpb(f);
  }

  if (opts.verify && f.q() >= 2) {
    BirationalityReport torsion = birational_via_torsion(f);
    if (torsion.verdict != result.report.verdict)
      throw std::logic_error("criterion disagreement: torsion vs primary decision");
  }
  return result;
}

}  // namespace monocrem

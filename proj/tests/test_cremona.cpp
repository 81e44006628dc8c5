#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>
#include <set>

#include "generators.hpp"
#include "monocrem/monocrem.hpp"

using namespace monocrem;

namespace {

MonomialSet triangle() {
  return new_monomial_set(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
}

MonomialSet tree_with_loop() {  // x1x2, x1x3, x3^2
  return new_monomial_set(3, {{1, 1, 0}, {1, 0, 1}, {0, 0, 2}});
}

const std::vector<std::string> kCensusSets{
    "x3x4x5, x1x4x5, x1x2x5, x1x2x3, x2x3x4",
    "x3x4x5, x1x4x5, x1x2x5, x1x3x5, x1x2x4",
    "x3x4x5, x1x4x5, x1x2x5, x1x3x5, x1x3x4",
    "x3x4x5, x1x4x5, x1x2x5, x2x4x5, x1x2x3",
};

}  // namespace

TEST_CASE("cremona set predicate") {
  CHECK(is_cremona_set(tree_with_loop()));
  CHECK(is_cremona_set(steiner_set(6)));
  // birational but q != n, hence not Cremona
  auto veronese = veronese_type_set(3, 2, {2, 2, 2});
  CHECK_FALSE(is_cremona_set(veronese));
}

TEST_CASE("degree-2 cremona shapes") {
  CHECK(degree2_cremona_shape(triangle()) == Degree2Shape::OddUniqueCycle);
  CHECK(degree2_cremona_shape(tree_with_loop()) == Degree2Shape::TreeWithLoop);
  auto cycle4 = new_monomial_set(4, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1},
                                     {1, 0, 0, 1}});
  CHECK(degree2_cremona_shape(cycle4) == Degree2Shape::NotCremona);
}

TEST_CASE("degree-2 shape equals the determinant test") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  while (checked < 60) {
    auto f = testgen::random_degree2_normalized_set(rng, 6, 6);
    if (f.q() != f.n() || !is_cohesive(f)) continue;
    ++checked;
    bool shaped = degree2_cremona_shape(f) != Degree2Shape::NotCremona;
    CHECK(shaped == is_cremona_set(f));
  }
}

TEST_CASE("duality principle") {
  SECTION("triangle numbers") {
    auto check = duality_check(triangle());
    CHECK(check.det_a == -2);
    CHECK(check.det_a_hat == -1);
    CHECK(check.identity_holds);
  }
  SECTION("steiner dualizes to a permutation matrix") {
    auto check = duality_check(steiner_set(6));
    CHECK(abs_val(check.det_a) == 5);
    CHECK(abs_val(check.det_a_hat) == 1);
    CHECK(check.identity_holds);
  }
  SECTION("identity on random squarefree square sets") {
    std::mt19937_64 rng(2025);
    int done = 0;
    while (done < 100) {
      std::size_t n = 2 + rng() % 5;
      int d = 1 + static_cast<int>(rng() % (n - 1));
      auto f = testgen::random_squarefree_square_set(rng, n, d);
      if (!f) continue;
      CHECK(duality_check(*f).identity_holds);
      ++done;
    }
  }
  SECTION("cremona-ness transfers to the dual") {
    std::mt19937_64 rng(2026);
    int done = 0;
    while (done < 80) {
      std::size_t n = 3 + rng() % 4;
      int d = 1 + static_cast<int>(rng() % (n - 1));
      auto f = testgen::random_squarefree_square_set(rng, n, d);
      if (!f || !f->is_normalized()) continue;
      auto dual = dual_complement(*f);
      if (!dual.is_normalized()) continue;
      CHECK(is_cremona_set(*f) == is_cremona_set(dual));
      ++done;
    }
  }
}

TEST_CASE("doubly stochastic predicate and obstruction") {
  CHECK(is_doubly_stochastic(steiner_set(6)));
  CHECK(is_doubly_stochastic(triangle()));
  CHECK_FALSE(is_doubly_stochastic(tree_with_loop()));

  CHECK_FALSE(db_obstruction(6, 3));
  CHECK(db_obstruction(5, 3));
  CHECK(db_obstruction(7, 1));
  CHECK(db_obstruction(4, 1));
}

TEST_CASE("db cremona sets have coprime parameters") {
  for (std::size_t n = 3; n <= 6; ++n) {
    ClassifyOptions opts;
    opts.prune = false;  // search every degree, then confirm the obstruction
    for (const auto& cls : classify_db_squarefree_cremona(n, opts))
      CHECK(std::gcd(static_cast<long long>(cls.n), static_cast<long long>(cls.d)) == 1);
  }
}

TEST_CASE("inductive step") {
  SECTION("triangle divides down to the variables") {
    auto result = inductive_step(triangle(), {0, 2, 1});
    REQUIRE(result.has_value());
    CHECK(*result == new_monomial_set(3, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
    CHECK(is_doubly_stochastic(*result));
    CHECK(result->d() == 1);
  }
  SECTION("non-permutations are rejected") {
    CHECK_THROWS_MATCHES(inductive_step(triangle(), {0, 0, 1}), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.code() == errc::not_permutation;
                         }));
  }
  SECTION("failed divisibility yields no result") {
    // steiner member 0 omits x6 (index 5): dividing it by x6 must fail
    std::vector<std::size_t> assignment{5, 0, 1, 2, 3, 4};
    CHECK_FALSE(inductive_step(steiner_set(6), assignment).has_value());
  }
  SECTION("outputs are always DB squarefree of degree d-1") {
    std::mt19937_64 rng(2027);
    int done = 0;
    while (done < 300) {
      std::size_t n = 3 + rng() % 4;
      int d = 2 + static_cast<int>(rng() % (n - 2 + 1));
      auto f = testgen::random_squarefree_square_set(rng, n, d);
      if (!f || !is_doubly_stochastic(*f)) continue;
      std::vector<std::size_t> assignment(n);
      std::iota(assignment.begin(), assignment.end(), std::size_t{0});
      std::shuffle(assignment.begin(), assignment.end(), rng);
      ++done;
      auto result = inductive_step(*f, assignment);
      if (!result) continue;
      CHECK(result->is_squarefree());
      CHECK(result->d() == f->d() - 1);
      CHECK(is_doubly_stochastic(*result));
    }
  }
}

TEST_CASE("classification reproduces the five-variable census") {
  auto classes = classify_squarefree_cremona(5, 3);
  REQUIRE(classes.size() == 4);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      CHECK_FALSE(classes[i].canonical_matrix == classes[j].canonical_matrix);

  int db_count = 0;
  for (const auto& text : kCensusSets) {
    auto f = parse_monomials(text, 5);
    CHECK(is_cremona_set(f));
    auto canon = canonical_rowcol_form(log_matrix(f));
    bool matched = false;
    for (const auto& cls : classes) matched = matched || cls.canonical_matrix == canon;
    CHECK(matched);
    db_count += is_doubly_stochastic(f) ? 1 : 0;
  }
  CHECK(db_count == 1);

  for (const auto& cls : classes) {
    CHECK(cls.canonical_matrix == canonical_rowcol_form(log_matrix(cls.representative)));
    CHECK(abs_val(determinant(cls.canonical_matrix)) == cls.d);
    CHECK(cls.complement_valid);
  }
}

TEST_CASE("steiner is the unique top-degree class") {
  for (std::size_t n = 3; n <= 6; ++n) {
    auto classes = classify_squarefree_cremona(n, static_cast<int>(n) - 1);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].canonical_matrix ==
          canonical_rowcol_form(log_matrix(steiner_set(n))));
  }
}

TEST_CASE("four variables, degree two: the unicyclic class") {
  auto classes = classify_squarefree_cremona(4, 2);
  REQUIRE(classes.size() == 1);
  // triangle plus one pendant edge
  auto rep = new_monomial_set(4, {{1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 1, 0},
                                  {0, 0, 1, 1}});
  CHECK(classes[0].canonical_matrix == canonical_rowcol_form(log_matrix(rep)));
}

TEST_CASE("six variables, degree two: all odd unicyclic graphs") {
  // Connected unicyclic graphs on six vertices whose unique cycle is odd:
  // seven with a triangle core (the four rooted forests of three vertices on
  // one cycle vertex, the two 2+1 splits, and one pendant on each corner)
  // plus the pentagon with a pendant edge.
  auto classes = classify_squarefree_cremona(6, 2);
  CHECK(classes.size() == 8);
  for (const auto& cls : classes) {
    CHECK(degree2_cremona_shape(cls.representative) == Degree2Shape::OddUniqueCycle);
  }
  // and by duality the degree-4 classification has the same size
  CHECK(classify_squarefree_cremona(6, 4).size() == 8);
}

TEST_CASE("db classification") {
  SECTION("n = 6: only the steiner inversion") {
    auto classes = classify_db_squarefree_cremona(6);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].d == 5);
    CHECK(classes[0].canonical_matrix ==
          canonical_rowcol_form(log_matrix(steiner_set(6))));
    ClassifyOptions no_prune;
    no_prune.prune = false;
    auto unpruned = classify_db_squarefree_cremona(6, no_prune);
    REQUIRE(unpruned.size() == 1);
    CHECK(unpruned[0].canonical_matrix == classes[0].canonical_matrix);
  }
  SECTION("n = 5 includes the census DB class and steiner") {
    auto classes = classify_db_squarefree_cremona(5);
    bool has_d3 = false, has_d4 = false;
    for (const auto& cls : classes) {
      if (cls.d == 3) has_d3 = true;
      if (cls.d == 4) has_d4 = true;
    }
    CHECK(has_d3);
    CHECK(has_d4);
  }
  SECTION("n = 3: triangle and steiner coincide") {
    auto classes = classify_db_squarefree_cremona(3);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].d == 2);
    CHECK(classes[0].canonical_matrix ==
          canonical_rowcol_form(log_matrix(triangle())));
  }
}

TEST_CASE("classification is deterministic across job counts") {
  ClassifyOptions two_jobs;
  two_jobs.jobs = 2;
  auto serial = classify_squarefree_cremona(5, 3);
  auto parallel = classify_squarefree_cremona(5, 3, two_jobs);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].canonical_matrix == parallel[i].canonical_matrix);
    CHECK(serial[i].representative == parallel[i].representative);
  }
}

TEST_CASE("dual classification counts match") {
  // Every dual complement of a (5,3) class is a (5,2) Cremona set and the
  // induced map on classes is a bijection.
  auto high = classify_squarefree_cremona(5, 3);
  auto low = classify_squarefree_cremona(5, 2);
  CHECK(high.size() == low.size());
  std::set<IntMatrix> low_canons;
  for (const auto& cls : low) low_canons.insert(cls.canonical_matrix);
  std::set<IntMatrix> dual_canons;
  for (const auto& cls : high)
    dual_canons.insert(canonical_rowcol_form(log_matrix(dual_complement(cls.representative))));
  CHECK(dual_canons == low_canons);
}

namespace {

/// Definition-level classifier with no enumeration shortcuts: walk every
/// n-subset of the squarefree degree-d monomials, keep normalized sets with
/// |det| = d, and collect canonical forms directly.
std::set<IntMatrix> brute_force_classes(std::size_t n, int d) {
  auto universe = monocrem::detail::squarefree_universe(n, d);
  std::set<IntMatrix> canons;
  monocrem::detail::for_each_combination(
      universe.size(), n, [&](const std::vector<std::size_t>& idx) {
        std::vector<std::vector<int>> vecs;
        for (std::size_t j : idx) vecs.push_back(universe[j]);
        auto f = new_monomial_set(n, vecs);
        if (!f.is_normalized()) return;
        IntMatrix a = log_matrix(f);
        if (abs_val(determinant(a)) != d) return;
        canons.insert(canonical_rowcol_form(a));
      });
  return canons;
}

}  // namespace

TEST_CASE("classification matches the definition-level brute force") {
  const std::vector<std::pair<std::size_t, int>> instances{
      {4, 2}, {5, 2}, {5, 3}, {5, 4}, {6, 2}};
  for (auto [n, d] : instances) {
    auto classes = classify_squarefree_cremona(n, d);
    auto brute = brute_force_classes(n, d);
    REQUIRE(classes.size() == brute.size());
    for (const auto& cls : classes) CHECK(brute.count(cls.canonical_matrix) == 1);
  }
}

TEST_CASE("classification guards") {
  CHECK_THROWS_MATCHES(classify_squarefree_cremona(8, 3), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == errc::too_large;
                       }));
  CHECK_THROWS_MATCHES(classify_squarefree_cremona(5, 1), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == errc::wrong_degree;
                       }));
}

#include <catch2/catch_amalgamated.hpp>

#include "edf/hom.hpp"
#include "edf/verify.hpp"
#include "test_util.hpp"

using namespace edf;

namespace {

// Exhaustive oracle over all |V(K)|^|V(G)| assignments; only for tiny inputs.
bool hom_oracle(const SmallGraph& g, const Crg& K) {
  const int n = g.vertex_count(), k = K.vertex_count();
  std::vector<int> image(n, 0);
  for (;;) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v) {
        int a = image[u], b = image[v];
        if (g.has_edge(u, v)) {
          if (a == b)
            ok = K.vertex_color(a) == VColor::Black;
          else
            ok = K.edge_color(a, b) != EColor::White;
        } else {
          if (a == b)
            ok = K.vertex_color(a) == VColor::White;
          else
            ok = K.edge_color(a, b) != EColor::Black;
        }
      }
    if (ok) return true;
    int pos = 0;
    while (pos < n && image[pos] == k - 1) image[pos++] = 0;
    if (pos == n) return false;
    ++image[pos];
  }
}

}  // namespace

TEST_CASE("pinned embeddings") {
  CHECK(exists_hom(make_named("F1"), k_rs(1, 1)));
  CHECK(exists_hom(make_named("complete", 3), k_rs(0, 1)));
  CHECK(exists_hom(make_named("W5"), k_rs(4, 0)));
  CHECK_FALSE(exists_hom(make_named("cycle", 5), k_rs(2, 0)));
}

TEST_CASE("search agrees with the exhaustive oracle on small inputs") {
  std::vector<SmallGraph> graphs = {make_named("cycle", 5), make_named("path", 4),
                                    make_named("complete", 4), make_named("cycle", 4),
                                    complement(make_named("cycle", 5))};
  std::vector<Crg> targets = {k_rs(2, 0), k_rs(1, 1), k_rs(0, 2), path_crg(3), cycle_crg(4),
                              testutil::star_crg(2)};
  for (const auto& g : graphs)
    for (const auto& K : targets) CHECK(exists_hom(g, K) == hom_oracle(g, K));
}

TEST_CASE("monotone under taking super-CRGs") {
  testutil::Lcg rng(777);
  auto corpus = testutil::crg_corpus();
  std::vector<SmallGraph> graphs = {make_named("cycle", 5), make_named("F1p"),
                                    make_named("path", 5), make_named("complete", 3)};
  for (const auto& K : corpus) {
    if (K.vertex_count() < 2) continue;
    uint32_t full = (1u << K.vertex_count()) - 1;
    uint32_t mask = full & ~(1u << rng.below(K.vertex_count()));
    Crg sub = K.induced(mask);
    for (const auto& g : graphs)
      if (exists_hom(g, sub)) CHECK(exists_hom(g, K));
  }
}

TEST_CASE("recoloring a non-gray edge to gray preserves homomorphisms") {
  testutil::Lcg rng(13579);
  auto corpus = testutil::crg_corpus();
  std::vector<SmallGraph> graphs = {make_named("cycle", 5), make_named("F1p"),
                                    make_named("complete", 3)};
  for (const auto& K : corpus) {
    if (K.vertex_count() < 2) continue;
    int i = rng.below(K.vertex_count()), j = rng.below(K.vertex_count());
    if (i == j || K.edge_color(i, j) == EColor::Gray) continue;
    Crg relaxed = K;
    relaxed.set_edge_color(i, j, EColor::Gray);
    for (const auto& g : graphs)
      if (exists_hom(g, K)) CHECK(exists_hom(g, relaxed));
  }
}

TEST_CASE("cycle complements embed into gray cycles exactly on the halving window") {
  for (int j = 5; j <= 12; ++j) {
    SmallGraph co = complement(make_named("cycle", j));
    for (int k = 3; k <= 12; ++k) {
      bool expect = (j + 1) / 2 <= k && k <= j;
      CHECK(exists_hom(co, cycle_crg(k)) == expect);
    }
  }
}

TEST_CASE("node budget is enforced") {
  HomOptions tiny;
  tiny.node_budget = 5;
  CHECK_THROWS_AS(exists_hom(complement(make_named("cycle", 9)), path_crg(5), tiny), BudgetError);
}

TEST_CASE("admissibility reports") {
  auto word = ForbiddenFamily::word();
  CHECK(admissible(k_rs(3, 0), word).admissible);
  // all three members are 4-chromatic or split into parts that fit K(4,0)
  auto bad = admissible(k_rs(4, 0), word);
  CHECK_FALSE(bad.admissible);
  bool has_w5 = false;
  for (const auto& name : bad.witness_names) has_w5 = has_w5 || name == "W5";
  CHECK(has_w5);
  CHECK(bad.truncation_bound == 0);

  auto comp = ForbiddenFamily::comp();
  auto path5 = admissible(path_crg(5), comp);
  CHECK(path5.admissible);
  CHECK(path5.truncation_bound == 12);

  auto kw = ForbiddenFamily::kword(2);
  REQUIRE(kw.finite_members.size() == 3);
  CHECK(kw.finite_members[2].vertex_count() == 12);
  auto k20 = admissible(k_rs(2, 0), kw);
  CHECK_FALSE(k20.admissible);
  REQUIRE(k20.witness_names.size() == 1);
  CHECK(k20.witness_names[0] == "crown6");

  CHECK_THROWS_AS(ForbiddenFamily::kword(1), std::invalid_argument);
}

TEST_CASE("gray cycles are inadmissible for comp, gray paths admissible") {
  for (int k = 3; k <= 8; ++k) {
    CHECK(admissible(path_crg(k), ForbiddenFamily::comp()).admissible);
    CHECK_FALSE(admissible(cycle_crg(k), ForbiddenFamily::comp()).admissible);
  }
}

TEST_CASE("doubling family matches the full truncated family on small CRGs") {
  // family with cycle complements only at lengths 6 and 14 versus all of
  // 5..14, on CRGs with at most 6 vertices
  auto agrees = [](const Crg& K) {
    bool full = true, doubling = true;
    if (exists_hom(make_named("F1p"), K) || exists_hom(make_named("F2p"), K))
      return true;  // both families reject through the finite members
    for (int t = 5; t <= 14; ++t) {
      bool maps = exists_hom(complement(make_named("cycle", t)), K);
      if (maps) full = false;
      if (maps && (t == 6 || t == 14)) doubling = false;
    }
    return full == doubling;
  };
  for (const auto& K : testutil::crg_corpus()) {
    if (K.vertex_count() > 6) continue;
    CHECK(agrees(K));
  }
  for (int k = 3; k <= 6; ++k) {
    CHECK(agrees(path_crg(k)));
    CHECK(agrees(cycle_crg(k)));
  }
}

TEST_CASE("embeddings verification suite passes") {
  auto report = verify::embeddings();
  for (const auto& c : report.checks) {
    INFO(c.id);
    CHECK(c.pass);
  }
}

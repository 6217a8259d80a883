#include <doctest.h>

#include <random>

#include "gallnet/hierarchy.hpp"
#include "gallnet/newick.hpp"

using namespace gallnet;

namespace {

network fig1() { return parse_network("((((b)#H1,a)p1,(#H1,(c,d)w)p2)v,e)rho;"); }

cluster_system make_cs(std::vector<std::string> ground, std::vector<cluster> clusters) {
  cluster_system cs;
  cs.ground = std::move(ground);
  for (cluster& c : clusters) {
    std::sort(c.begin(), c.end());
    cs.clusters.insert(std::move(c));
  }
  return cs;
}

// Deterministic stream of small random cluster systems.
std::vector<cluster_system> random_systems(int count, int max_ground, unsigned seed) {
  std::mt19937 gen(seed);
  std::vector<std::string> pool = {"a", "b", "c", "d", "e", "f", "g", "h"};
  std::vector<cluster_system> out;
  while ((int)out.size() < count) {
    int n = 3 + (int)(gen() % (max_ground - 2));
    cluster_system cs;
    cs.ground.assign(pool.begin(), pool.begin() + n);
    int k = 1 + (int)(gen() % 10);
    for (int i = 0; i < k; ++i) {
      unsigned mask = 1 + gen() % ((1u << n) - 1);
      cluster c;
      for (int b = 0; b < n; ++b)
        if (mask >> b & 1) c.push_back(pool[b]);
      cs.clusters.insert(std::move(c));
    }
    out.push_back(std::move(cs));
  }
  return out;
}

}  // namespace

TEST_CASE("hierarchy check with witnesses") {
  CHECK(is_hierarchy(hardwired_clusters(parse_network("(((a,b),(c,d)),e);"))).ok);
  CHECK(is_hierarchy(hardwired_clusters(parse_network("(a,(b,(c,d)));"))).ok);

  hierarchy_check r = is_hierarchy(make_cs({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}));
  CHECK_FALSE(r.ok);
  REQUIRE(r.witness);
  CHECK(r.witness->c1 == cluster{"a", "b"});
  CHECK(r.witness->c2 == cluster{"b", "c"});

  hierarchy_check f = is_hierarchy(hardwired_clusters(fig1()));
  CHECK_FALSE(f.ok);
  REQUIRE(f.witness);
  CHECK(f.witness->c1 == cluster{"a", "b"});
  CHECK(f.witness->c2 == cluster{"b", "c", "d"});
}

TEST_CASE("weak hierarchy check with witnesses") {
  weak_hierarchy_check bad =
      is_weak_hierarchy(make_cs({"a", "b", "c", "d"},
                                {{"a", "b", "c"}, {"a", "b", "d"}, {"b", "c", "d"}}));
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.witness);
  CHECK(bad.witness->c1 == cluster{"a", "b", "c"});
  CHECK(bad.witness->c2 == cluster{"a", "b", "d"});
  CHECK(bad.witness->c3 == cluster{"b", "c", "d"});

  CHECK(is_weak_hierarchy(softwired_clusters(fig1())).ok);
  CHECK(is_weak_hierarchy(hardwired_clusters(fig1())).ok);
}

TEST_CASE("every hierarchy is a weak hierarchy (random systems)") {
  for (const cluster_system& cs : random_systems(150, 6, 20210831))
    if (is_hierarchy(cs).ok) CHECK(is_weak_hierarchy(cs).ok);
}

TEST_CASE("subsets of a weak hierarchy stay weak") {
  cluster_system s = softwired_clusters(fig1());
  std::mt19937 gen(7);
  for (int trial = 0; trial < 20; ++trial) {
    cluster_system sub;
    sub.ground = s.ground;
    for (const cluster& c : s.clusters)
      if (gen() % 2) sub.clusters.insert(c);
    CHECK(is_weak_hierarchy(sub).ok);
  }
}

TEST_CASE("closure") {
  cluster_system s = softwired_clusters(fig1());
  closure_result r1 = closure(s, {"c", "d"});
  CHECK(r1.value == cluster{"c", "d"});
  CHECK_FALSE(r1.from_empty_family);
  CHECK(closure(s, {"a", "c"}).value == cluster{"a", "b", "c", "d"});
  CHECK(closure(s, {"a"}).value == cluster{"a"});
  CHECK(closure(s, s.ground).value == s.ground);
  for (const cluster& c : s.clusters) CHECK(closure(s, c).value == c);

  closure_result none = closure(make_cs({"a", "b", "c"}, {{"a", "b"}, {"c"}}), {"a", "c"});
  CHECK(none.from_empty_family);
  CHECK(none.value == cluster{"a", "b", "c"});

  CHECK_THROWS_AS((void)closure(s, {}), error);
  try {
    (void)closure(s, {});
  } catch (const error& e) {
    CHECK(e.code() == errc::empty_set);
  }
  CHECK_THROWS_AS((void)closure(s, {"zz"}), error);
}

TEST_CASE("closure-pair certificate") {
  cluster_system s = softwired_clusters(fig1());
  closure_pair_certificate_result r = closure_pair_certificate(s);
  CHECK(r.ok);
  CHECK_FALSE(r.failing_subset);
  // every subset of size >= 2 gets a pair
  CHECK(r.pair_for.size() == 32 - 1 - 5);
  auto it = r.pair_for.find(cluster{"a", "c"});
  REQUIRE(it != r.pair_for.end());
  CHECK(it->second == std::pair<std::string, std::string>{"a", "c"});

  closure_pair_certificate_result bad = closure_pair_certificate(
      make_cs({"a", "b", "c", "d"}, {{"a", "b", "c"}, {"a", "b", "d"}, {"b", "c", "d"}}));
  CHECK_FALSE(bad.ok);
  CHECK(bad.failing_subset.has_value());
  CHECK(bad.pair_for.empty());

  cluster_system wide;
  for (char c = 'a'; c <= 'p'; ++c) wide.ground.push_back(std::string(1, c));
  CHECK_THROWS_AS((void)closure_pair_certificate(wide), error);
  try {
    (void)closure_pair_certificate(wide);
  } catch (const error& e) {
    CHECK(e.code() == errc::ground_set_too_large);
  }
}

TEST_CASE("certificate agrees with the triple condition (random systems)") {
  for (const cluster_system& cs : random_systems(300, 8, 4242)) {
    bool direct = is_weak_hierarchy(cs).ok;
    CHECK(direct == closure_pair_certificate(cs).ok);
    if (direct) CHECK(check_size_bound(cs));
  }
}

TEST_CASE("similarity matrix") {
  cluster_system c = hardwired_clusters(fig1());
  similarity_matrix m = similarity(c);
  auto at = [&](const std::string& x, const std::string& y) {
    auto ix = std::lower_bound(m.ground.begin(), m.ground.end(), x) - m.ground.begin();
    auto iy = std::lower_bound(m.ground.begin(), m.ground.end(), y) - m.ground.begin();
    return m.d[ix][iy];
  };
  CHECK(at("c", "d") == 4);
  CHECK(at("a", "e") == 1);
  CHECK(at("a", "a") == 4);
  CHECK(at("b", "b") == 5);
  for (size_t i = 0; i < m.ground.size(); ++i)
    for (size_t j = 0; j < m.ground.size(); ++j) CHECK(m.d[i][j] == m.d[j][i]);

  cluster_system empty;
  empty.ground = {"a", "b"};
  similarity_matrix z = similarity(empty);
  CHECK(z.d == std::vector<std::vector<int>>{{0, 0}, {0, 0}});
}

TEST_CASE("size bound") {
  CHECK(check_size_bound(softwired_clusters(fig1())));  // 10 <= 15
  CHECK(check_size_bound(make_cs({"a", "b", "c"}, {{"a"}, {"b"}, {"c"}, {"a", "b", "c"}})));

  // the full powerset of a 3-set breaks the bound and the weak Helly property
  cluster_system power = make_cs({"a", "b", "c"}, {{"a"}, {"b"}, {"c"}, {"a", "b"}, {"a", "c"},
                                                   {"b", "c"}, {"a", "b", "c"}});
  CHECK_FALSE(check_size_bound(power));
  CHECK_FALSE(is_weak_hierarchy(power).ok);
  CHECK_FALSE(closure_pair_certificate(power).ok);
}

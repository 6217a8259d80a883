#include <doctest.h>

#include <algorithm>

#include "gallnet/newick.hpp"
#include "gallnet/systems.hpp"

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

const std::set<triplet> fig1_triplets = {
    {"a", "b", "e"}, {"a", "c", "e"}, {"a", "d", "e"}, {"b", "c", "e"},
    {"b", "d", "e"}, {"c", "d", "e"}, {"c", "d", "a"}, {"c", "d", "b"},
    {"a", "b", "c"}, {"a", "b", "d"}, {"b", "c", "a"}, {"b", "d", "a"},
};

}  // namespace

TEST_CASE("a tree displays exactly itself, with identity provenance") {
  network t = parse_network("(a,(b,(c,d)));");
  std::vector<switching> sw = displayed_switchings(t);
  REQUIRE(sw.size() == 1);
  CHECK(isomorphic(sw[0].tree, t));
  for (int v = 0; v < t.vertex_count(); ++v) CHECK(sw[0].origin[v] == v);
  tree_system ts = displayed_trees(t);
  REQUIRE(ts.trees.size() == 1);
  CHECK(canonical_newick(ts.trees[0]) == canonical_newick(t));
}

TEST_CASE("the running example displays exactly two trees") {
  tree_system ts = displayed_trees(fig1());
  REQUIRE(ts.trees.size() == 2);
  std::vector<std::string> expect = {canonical_newick(parse_network("(((a,b),(c,d)),e);")),
                                     canonical_newick(parse_network("((a,(b,(c,d))),e);"))};
  std::sort(expect.begin(), expect.end());
  CHECK(tree_lines(ts) == expect[0] + "\n" + expect[1] + "\n");
}

TEST_CASE("two independent 4-blobs display four trees") {
  network n = parse_network("((((b)#H1,a),(#H1,(((d)#H2,c),(#H2,e)))),f);");
  CHECK(displayed_switchings(n).size() == 4);
  CHECK(displayed_trees(n).trees.size() == 4);
}

TEST_CASE("the reticulation cap guards the switching blowup") {
  CHECK_THROWS_AS((void)displayed_trees(fig1(), 0), error);
  try {
    (void)displayed_trees(fig1(), 0);
  } catch (const error& e) {
    CHECK(e.code() == errc::too_many_reticulations);
  }
}

TEST_CASE("hardwired clusters of the running example: exactly ten") {
  cluster_system cs = hardwired_clusters(fig1());
  cluster_system expect = make_cs(
      {"a", "b", "c", "d", "e"},
      {{"a", "b", "c", "d", "e"}, {"a"}, {"b"}, {"c"}, {"d"}, {"e"},
       {"a", "b"}, {"c", "d"}, {"b", "c", "d"}, {"a", "b", "c", "d"}});
  CHECK(cs.clusters == expect.clusters);
  CHECK(cs.ground == expect.ground);
  CHECK(hardwired_clusters(parse_network("(a,b);")).clusters ==
        make_cs({"a", "b"}, {{"a", "b"}, {"a"}, {"b"}}).clusters);
}

TEST_CASE("softwired equals hardwired on the running example") {
  network n = fig1();
  CHECK(softwired_clusters(n).clusters == hardwired_clusters(n).clusters);
}

TEST_CASE("per-vertex softwired clusters via provenance") {
  network n = fig1();
  int p1 = n.parents(n.leaf("a"))[0];
  int w = n.parents(n.leaf("c"))[0];
  int h1 = n.parents(n.leaf("b"))[0];
  int p2 = -1;
  for (int p : n.parents(h1))
    if (p != p1) p2 = p;
  REQUIRE(n.is_reticulation(h1));
  CHECK(vertex_softwired(n, p1).clusters == std::set<cluster>{{"a", "b"}});
  CHECK(vertex_softwired(n, w).clusters == std::set<cluster>{{"c", "d"}});
  CHECK(vertex_softwired(n, p2).clusters == std::set<cluster>{{"b", "c", "d"}});
  // reticulations never survive a switching: they contribute nothing
  CHECK(vertex_softwired(n, h1).clusters.empty());
  CHECK(vertex_softwired(n, n.leaf("a")).clusters == std::set<cluster>{{"a"}});
  CHECK_THROWS_AS((void)vertex_softwired(n, 99), error);
}

TEST_CASE("cluster and system triplets") {
  std::vector<std::string> X = {"a", "b", "c", "d", "e"};
  CHECK(cluster_triplets({"c", "d"}, X).triplets ==
        std::set<triplet>{{"c", "d", "a"}, {"c", "d", "b"}, {"c", "d", "e"}});
  CHECK(cluster_triplets(X, X).triplets.empty());
  CHECK(cluster_triplets({"a"}, X).triplets.empty());
  CHECK_THROWS_AS((void)cluster_triplets({}, X), error);
  CHECK_THROWS_AS((void)cluster_triplets({"zz"}, X), error);
  CHECK(system_triplets(softwired_clusters(fig1())).triplets == fig1_triplets);
}

TEST_CASE("tree triplets") {
  CHECK(tree_triplets(parse_network("(a,(b,c));")).triplets == std::set<triplet>{{"b", "c", "a"}});
  triplet_system ts = tree_triplets(parse_network("(((a,b),(c,d)),e);"));
  CHECK(ts.triplets.count({"a", "b", "c"}));
  CHECK(ts.triplets.count({"c", "d", "a"}));
  CHECK(ts.triplets.count({"a", "b", "e"}));
  CHECK(ts.triplets.size() == 10);  // one per 3-subset
  CHECK_THROWS_AS((void)tree_triplets(parse_network("(a,b);")), error);
  CHECK_THROWS_AS((void)tree_triplets(fig1()), error);  // not a tree
}

TEST_CASE("tree triplets equal the cluster-induced triplets, and are dense") {
  for (const char* s : {"(a,(b,c));", "(((a,b),(c,d)),e);", "((a,(b,(c,d))),e);",
                        "((a,b),(c,(d,e)));", "(a,(b,(c,(d,e))));"}) {
    network t = parse_network(s);
    triplet_system direct = tree_triplets(t);
    CHECK(direct.triplets == system_triplets(hardwired_clusters(t)).triplets);
    CHECK(is_dense(direct));
  }
}

TEST_CASE("softwired triplets of the running example: the twelve") {
  CHECK(softwired_triplets(fig1()).triplets == fig1_triplets);
}

TEST_CASE("both simple 3-leaf carriers of {b,c|a, a,b|c} induce exactly that system") {
  std::set<triplet> want = {{"b", "c", "a"}, {"a", "b", "c"}};
  for (const char* s : {"((a,(b,(c)#H1)),#H1);", "((a,(b)#H1),(#H1,c));", "((c,(b,(a)#H1)),#H1);"}) {
    network n = parse_network(s);
    CHECK(softwired_triplets(n).triplets == want);
    CHECK(consistent_triplets(n).triplets == want);
  }
}

TEST_CASE("path-based consistency on the running example") {
  network n = fig1();
  CHECK(triplet_consistent(n, {"a", "b", "e"}));
  CHECK(triplet_consistent(n, {"c", "d", "a"}));
  CHECK(triplet_consistent(n, {"b", "c", "a"}));
  CHECK_FALSE(triplet_consistent(n, {"b", "e", "a"}));
  CHECK_FALSE(triplet_consistent(n, {"a", "c", "b"}));
  CHECK_THROWS_AS((void)triplet_consistent(n, {"a", "b", "zz"}), error);
}

TEST_CASE("consistency agrees with the switching route at level 1") {
  for (const char* s :
       {"((((b)#H1,a)p1,(#H1,(c,d)w)p2)v,e)rho;", "(((a,b),(c,d)),e);",
        "((a,(b,(c)#H1)),#H1);", "((((b)#H1,a),(#H1,(((d)#H2,c),(#H2,e)))),f);"}) {
    network n = parse_network(s);
    triplet_system soft = softwired_triplets(n);
    triplet_system cons = consistent_triplets(n);
    CHECK(soft.triplets == cons.triplets);
    CHECK(cons.triplets == system_triplets(softwired_clusters(n)).triplets);
    CHECK(is_dense(cons));
  }
}

TEST_CASE("the path budget is a hard stop") {
  CHECK_THROWS_AS((void)triplet_consistent(fig1(), {"a", "b", "e"}, 2), error);
  try {
    (void)triplet_consistent(fig1(), {"a", "b", "e"}, 2);
  } catch (const error& e) {
    CHECK(e.code() == errc::budget_exceeded);
  }
}

TEST_CASE("density") {
  CHECK(is_dense(consistent_triplets(fig1())));
  triplet_system sparse;
  sparse.ground = {"a", "b", "c", "d"};
  sparse.triplets = {{"a", "b", "c"}};
  CHECK_FALSE(is_dense(sparse));
  triplet_system tiny;
  tiny.ground = {"a", "b"};
  CHECK(is_dense(tiny));
}

TEST_CASE("restriction") {
  triplet_system r = softwired_triplets(fig1());
  triplet_system re = restrict_triplets(r, "e");
  CHECK(re.ground == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(re.triplets == std::set<triplet>{{"c", "d", "a"},
                                         {"c", "d", "b"},
                                         {"a", "b", "c"},
                                         {"a", "b", "d"},
                                         {"b", "c", "a"},
                                         {"b", "d", "a"}});
  // restricting by a label in no triplet only shrinks the ground set
  triplet_system s2;
  s2.ground = {"a", "b", "c", "q"};
  s2.triplets = {{"a", "b", "c"}};
  CHECK(restrict_triplets(s2, "q").triplets == s2.triplets);
  CHECK(restrict_triplets(restrict_triplets(r, "a"), "b").triplets ==
        restrict_triplets(restrict_triplets(r, "b"), "a").triplets);
  CHECK_THROWS_AS((void)restrict_triplets(r, "zz"), error);
}

TEST_CASE("tree-consistency is membership in the softwired system") {
  network n = fig1();
  network t1 = parse_network("(((a,b),(c,d)),e);");
  CHECK(tree_consistent(hardwired_clusters(t1), n));
  CHECK_FALSE(tree_consistent(make_cs({"a", "b", "c", "d", "e"}, {{"a", "e"}}), n));
  CHECK_THROWS_AS((void)tree_consistent(make_cs({"a", "b"}, {{"a"}}), n), error);
}

TEST_CASE("cluster file format") {
  std::string text = cluster_lines(hardwired_clusters(fig1()));
  CHECK(text ==
        "a\nb\nc\nd\ne\n"
        "a,b\nc,d\n"
        "b,c,d\n"
        "a,b,c,d\n"
        "a,b,c,d,e\n");
  cluster_system back = parse_cluster_lines(text);
  CHECK(back.clusters == hardwired_clusters(fig1()).clusters);
  CHECK(back.ground == std::vector<std::string>{"a", "b", "c", "d", "e"});
  CHECK(parse_cluster_lines("").clusters.empty());
  CHECK_THROWS_AS((void)parse_cluster_lines("a,,b\n"), error);
  CHECK_THROWS_AS((void)parse_cluster_lines("a,a\n"), error);
  CHECK_THROWS_AS((void)parse_cluster_lines("a b\n"), error);
}

TEST_CASE("triplet file format sorts by components, not raw bytes") {
  triplet_system ts;
  ts.ground = {"a", "b", "bb", "c", "z"};
  ts.triplets = {{"a", "b", "z"}, {"a", "bb", "c"}};
  CHECK(triplet_lines(ts) == "a,b|z\na,bb|c\n");
  CHECK(triplet_lines(softwired_triplets(fig1())) ==
        "a,b|c\na,b|d\na,b|e\na,c|e\na,d|e\nb,c|a\nb,c|e\nb,d|a\nb,d|e\nc,d|a\nc,d|b\nc,d|e\n");
}

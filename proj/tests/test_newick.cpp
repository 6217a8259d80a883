#include <doctest.h>

#include <set>
#include <sstream>

#include "gallnet/network.hpp"
#include "gallnet/newick.hpp"

using namespace gallnet;

namespace {

errc code_of(const std::string& text) {
  try {
    (void)parse_network(text);
  } catch (const error& e) {
    return e.code();
  }
  FAIL("expected a parse failure for: ", text);
  return errc::bad_input;
}

}  // namespace

TEST_CASE("parser builds the running example exactly") {
  network n = parse_network("((((b)#H1,a)p1,(#H1,(c,d)w)p2)v,e)rho;");
  CHECK(n.vertex_count() == 11);
  CHECK(n.arcs().size() == 11);
  CHECK(n.leaf_labels() == std::vector<std::string>{"a", "b", "c", "d", "e"});
  CHECK(n.reticulation_count() == 1);
  int h = -1;
  for (int v = 0; v < n.vertex_count(); ++v)
    if (n.in_degree(v) == 2) h = v;
  REQUIRE(h != -1);
  CHECK(n.children(h) == std::vector<int>{n.leaf("b")});
}

TEST_CASE("parser accepts hybrid leaves (no owner subtree at one use)") {
  // the reticulation's single child can also be written inline at either use
  network n1 = parse_network("((a,(b)#H1),(#H1,c));");
  network n2 = parse_network("((a,#H1),((b)#H1,c));");
  CHECK(isomorphic(n1, n2));
}

TEST_CASE("parser error codes") {
  CHECK(code_of("") == errc::syntax);
  CHECK(code_of("(a,b") == errc::syntax);
  CHECK(code_of("(a,b);x") == errc::syntax);
  CHECK(code_of("(a:1,b);") == errc::syntax);
  CHECK(code_of("(a[c],b);") == errc::syntax);
  CHECK(code_of("((a,b));") == errc::syntax);
  CHECK(code_of("(a,());") == errc::syntax);
  CHECK(code_of("((a)#H1,b);") == errc::hybrid_tag);        // one use only
  CHECK(code_of("((a)#H1,((b)#H1,c));") == errc::hybrid_tag);  // two owners
  CHECK(code_of("(#H1,a);") == errc::hybrid_tag);           // never owned
  CHECK(code_of("(a,a);") == errc::duplicate_leaf);
  CHECK(code_of("a;") == errc::invalid_network);            // a lone leaf has no root vertex of outdegree 2
  CHECK(code_of("(a,b,c);") == errc::invalid_network);      // outdegree 3
}

TEST_CASE("parse failure messages carry a position") {
  try {
    (void)parse_network("(a,b");
  } catch (const error& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("a parsed two-owner-free tag that induces parallel arcs fails validation") {
  try {
    (void)parse_network("((a)#H1,#H1)r;");
    FAIL("expected invalid_network");
  } catch (const error& e) {
    CHECK(e.code() == errc::invalid_network);
    CHECK(std::string(e.what()).find("E_PARALLEL") != std::string::npos);
  }
}

TEST_CASE("write emits the canonical serialization; parse(write(n)) is n") {
  network n = parse_network("((((b)#H1,a)p1,(#H1,(c,d)w)p2)v,e)rho;");
  std::string out = write(n);
  CHECK(out == canonical_newick(n));
  CHECK(out.back() == ';');
  network again = parse_network(out);
  CHECK(isomorphic(n, again));
  CHECK(write(again) == out);
  // internal names are not preserved: canonical text has none
  CHECK(out.find("p1") == std::string::npos);

  network perm = parse_network("(e,((#H1,(d,c)),(a,(b)#H1)));");
  CHECK(write(perm) == out);
}

TEST_CASE("write numbers hybrid tags in first-visit order") {
  network n = parse_network(
      "((((b)#H7,a),(#H7,(((d)#H3,c),(#H3,e)))),f);");
  std::string out = write(n);
  CHECK(out.find("#H1") != std::string::npos);
  CHECK(out.find("#H2") != std::string::npos);
  CHECK(out.find("#H3") == std::string::npos);
  CHECK(isomorphic(parse_network(out), n));
}

TEST_CASE("export_dot lists every vertex and arc with shape roles") {
  network n = parse_network("((((b)#H1,a)p1,(#H1,(c,d)w)p2)v,e)rho;");
  std::string dot = export_dot(n);
  std::istringstream is(dot);
  std::string line;
  int nodes = 0, arcs = 0, diamonds = 0, boxes = 0;
  while (std::getline(is, line)) {
    if (line.find("->") != std::string::npos) ++arcs;
    else if (line.find("n") != std::string::npos && line.find("[") != std::string::npos) ++nodes;
    if (line.find("diamond") != std::string::npos) ++diamonds;
    if (line.find("box") != std::string::npos) ++boxes;
  }
  CHECK(nodes == 11);
  CHECK(arcs == 11);
  CHECK(diamonds == 1);
  CHECK(boxes == 5);
  CHECK(dot.rfind("digraph", 0) == 0);

  std::string tdot = export_dot(parse_network("(a,b);"));
  CHECK(tdot.find("diamond") == std::string::npos);
}

TEST_CASE("dot output is stable across serializations of the same network") {
  std::string d1 = export_dot(parse_network("((((b)#H1,a)p1,(#H1,(c,d)w)p2)v,e)rho;"));
  std::string d2 = export_dot(parse_network("(e,((#H1,(d,c)),(a,(b)#H1)));"));
  CHECK(d1 == d2);
}

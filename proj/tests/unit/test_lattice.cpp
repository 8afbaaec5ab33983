#include <doctest.h>

#include "guise/error.hpp"
#include "guise/lattice.hpp"
#include "guise/closure.hpp"
#include "guise/intention.hpp"
#include "support.hpp"

using namespace guise;
using testing::set_of;

TEST_CASE("System C concept lattice") {
  const GuiseModel m = testing::load_fixture("system_c.guise");
  const ConceptLattice l = build_lattice(m);
  CHECK(l.size() == 10);
  CHECK(l.elements()[l.top()] == set_of(m, "a b c d"));
  CHECK(l.elements()[l.bottom()].empty());

  const auto idx = [&](const char* s) { return *l.index_of(set_of(m, s)); };
  CHECK(l.meet(idx("a b"), idx("b c d")) == idx("b"));
  CHECK(l.join(idx("b"), idx("c")) == idx("b c d"));
  CHECK(l.join(idx("a b"), idx("c")) == idx("a b c d"));
  CHECK_FALSE(l.index_of(set_of(m, "b c")).has_value());

  const auto& edges = l.hasse_edges();
  auto has = [&](const char* lo, const char* hi) {
    return std::find(edges.begin(), edges.end(), std::pair{idx(lo), idx(hi)}) != edges.end();
  };
  CHECK(has("", "b"));
  CHECK(has("b", "a b"));
  CHECK_FALSE(has("", "a b"));
  // Covering pairs, and nothing else.
  for (std::size_t x = 0; x < l.size(); ++x) {
    for (std::size_t y = 0; y < l.size(); ++y) {
      const MarkSet ex = l.elements()[x], ey = l.elements()[y];
      bool covers = ex != ey && ex.subset_of(ey);
      for (MarkSet z : l.elements()) {
        if (z != ex && z != ey && ex.subset_of(z) && z.subset_of(ey)) covers = false;
      }
      CHECK((std::find(edges.begin(), edges.end(), std::pair{x, y}) != edges.end()) == covers);
    }
  }
}

TEST_CASE("two-element lattice") {
  const GuiseModel m = testing::load_text("marks: a\n");
  const ConceptLattice l = build_lattice(m);
  CHECK(l.size() == 2);
  CHECK(l.hasse_edges().size() == 1);
  CHECK(export_dot(l, m.universe()) ==
        "digraph concepts {\n  rankdir=BT;\n  node [shape=box];\n  n0 [label=\"{}\"];\n  n1 [label=\"{a}\"];\n"
        "  n0 -> n1;\n}\n");
}

TEST_CASE("lattice laws on System C") {
  const GuiseModel m = testing::load_fixture("system_c.guise");
  const ConceptLattice l = build_lattice(m);
  for (std::size_t x = 0; x < l.size(); ++x) {
    for (std::size_t y = 0; y < l.size(); ++y) {
      CHECK(l.meet(x, y) == l.meet(y, x));
      CHECK(l.join(x, y) == l.join(y, x));
      CHECK(l.meet(x, l.join(x, y)) == x);
      CHECK(l.join(x, l.meet(x, y)) == x);
      CHECK(l.elements()[l.join(x, y)] == close(l.elements()[x] | l.elements()[y], m.theory()));
    }
  }
}

TEST_CASE("Galois reading of the internal relation") {
  const GuiseModel c = testing::load_fixture("system_c.guise");
  const GaloisReport declared = galois_check(c);
  CHECK(declared.ok());
  CHECK(declared.pairs_checked == 25);
  CHECK(galois_check(c, GuiseDomain::AllSubsets).ok());
  CHECK(galois_check(testing::load_fixture("system_a.guise"), GuiseDomain::AllSubsets).ok());

  const GuiseModel a = testing::load_text("marks: a b\nrule: a -> b\nguise e = { }\nguise g = { a }\n");
  CHECK_FALSE(relates(MarkSet(), set_of(a, "a b"), a).holds);
  CHECK(galois_check(a).ok());
}

TEST_CASE("Galois equivalence, exhaustive on small random models") {
  const testing::SuiteResult r = testing::galois_suite(37, 3);
  for (const std::string& f : r.failures) MESSAGE(f);
  CHECK(r.violations == 0);
}

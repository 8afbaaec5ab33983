// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "guise/audit.hpp"
#include "guise/closure.hpp"
#include "guise/formula.hpp"
#include "guise/intention.hpp"
#include "guise/sat.hpp"
#include "guise/worlds.hpp"
#include "support.hpp"

using namespace guise;
using guise::testing::load_fixture;
using guise::testing::set_of;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  bool known_conflict = false;  // fails only where a worked example contradicts the definition
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [" << what << "]";
    }
  }
};

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<MarkSet> sets(const GuiseModel& m, std::initializer_list<const char*> items) {
  std::vector<MarkSet> out;
  for (const char* s : items) out.push_back(set_of(m, s));
  return out;
}

Outcome closure_table() {
  Outcome o;
  const GuiseModel m = load_fixture("system_c.guise");
  const std::pair<const char*, const char*> table[] = {{"a", "a b"}, {"b", "b"},         {"c", "c"},
                                                       {"b c", "b c d"}, {"a c", "a b c d"}, {"d", "d"}};
  std::vector<std::pair<MarkSet, MarkSet>> cases;
  for (const auto& [in, out] : table) cases.emplace_back(set_of(m, in), set_of(m, out));
  const auto start = Clock::now();
  std::vector<MarkSet> got;
  for (const auto& [in, out] : cases) got.push_back(closure(in, m.theory()).closed_set);
  const double ms = ms_since(start);
  for (std::size_t i = 0; i < cases.size(); ++i) {
    o.require(got[i] == cases[i].second, "closure of " + m.universe().format(cases[i].first));
  }
  o.require(ms < 10.0, "over 10 ms");
  o.detail << " " << ms << " ms";
  return o;
}

Outcome intention_sets_c2() {
  Outcome o;
  const GuiseModel m = load_fixture("system_c.guise");
  const std::pair<const char*, std::vector<MarkSet>> table[] = {
      {"a", sets(m, {"a", "b"})},
      {"b", sets(m, {"b"})},
      {"c", sets(m, {"c"})},
      {"b c", sets(m, {"b", "c", "d", "b c"})},
      {"a c", sets(m, {"a", "b", "c", "d", "b c"})},
  };
  for (const auto& [g, expect] : table) {
    o.require(intention_set(set_of(m, g), m).propositions() == expect, std::string("J({") + g + "})");
  }
  return o;
}

Outcome relation_fixtures() {
  Outcome o;
  const GuiseModel m = load_fixture("system_c.guise");
  const std::tuple<const char*, const char*, bool> table[] = {
      {"a", "b c", true}, {"b c", "a c", true}, {"c", "b c", true}, {"a", "b", true}, {"b", "a", false}};
  for (const auto& [g, h, expect] : table) {
    const RelationWitness r = relates(set_of(m, g), set_of(m, h), m);
    const std::string label = std::string("R({") + g + "}, {" + h + "})";
    o.require(r.holds == expect, label);
    if (r.holds) {
      o.require(r.witness && r.witness->subset_of(set_of(m, h)) && intends(set_of(m, g), *r.witness, m),
                label + " witness");
    }
  }
  return o;
}

Outcome modal_fixtures() {
  Outcome o;
  const GuiseModel m = load_fixture("system_c.guise");
  const WorldSet w = select_worlds(m);
  o.require(w.worlds == sets(m, {"b", "a b", "c", "b c d", "a b c d"}), "declared worlds");
  o.require(!eval_box(set_of(m, "b"), w), "box {b}");
  o.require(eval_diamond(set_of(m, "d"), w), "diamond {d}");
  o.require(audit_axiom(m, Axiom::BoxToDiamond).verdict == Verdict::Pass, "BoxToDiamond audit");
  return o;
}

Outcome c2_axiom_audit() {
  Outcome o;
  const GuiseModel m = load_fixture("system_c.guise");
  const auto start = Clock::now();
  const std::vector<AuditReport> reports = audit_all(m);
  const double ms = ms_since(start);
  for (Axiom a : {Axiom::CI1, Axiom::CI2, Axiom::CI3, Axiom::R1, Axiom::R2, Axiom::R3}) {
    const auto it = std::find_if(reports.begin(), reports.end(), [&](const AuditReport& r) { return r.axiom == a; });
    o.require(it != reports.end() && it->verdict == Verdict::Pass && it->counterexamples.empty(),
              std::string(axiom_name(a)));
  }
  o.require(ms < 1000.0, "over 1 s");
  o.detail << " " << ms << " ms";
  return o;
}

Outcome system_a() {
  Outcome o;
  const GuiseModel m = load_fixture("system_a.guise");
  const MarkSet a = set_of(m, "a");
  o.require(close(a, m.theory()) == set_of(m, "a b"), "κ({a})");
  for (const char* phi : {"a", "b", "a b"}) o.require(intends(a, set_of(m, phi), m), std::string("Int({a}, ") + phi + ")");
  o.require(!intends(a, set_of(m, "c"), m), "Int({a}, {c})");
  o.require(relates(a, set_of(m, "b c"), m).holds, "R({a}, {b, c})");
  o.require(!relates(set_of(m, "b"), a, m).holds, "R({b}, {a})");
  return o;
}

Outcome system_b() {
  Outcome o;
  const GuiseModel m = load_fixture("system_b.guise");
  const MarkSet g1 = m.find_guise("g1")->marks, g2 = m.find_guise("g2")->marks;
  const MarkSet b = set_of(m, "b");
  o.require(intention_set(g1, m).propositions() == sets(m, {"a", "b"}), "J(g1)");
  o.require(intention_set(g2, m).propositions() == sets(m, {"b", "c", "d", "b c"}), "J(g2)");
  const RelationWitness r12 = relates(g1, g2, m);
  o.require(r12.holds && r12.witness == b, "R(g1, g2) with witness {b}");
  const bool others_ok = o.ok;
  // The worked example also claims R(g2, g1) via {b}. With g1 = {a} no member of
  // J(g2) lies inside g1, the same shape as R({b}, {a}), which must fail.
  const RelationWitness r21 = relates(g2, g1, m);
  o.require(r21.holds, "R(g2, g1) is false: {b} is in J(g2) but {b} is not a subset of g1 = {a}");
  o.known_conflict = others_ok && !r21.holds && !relates(b, set_of(m, "a"), m).holds;
  return o;
}

Outcome property_suites() {
  Outcome o;
  const auto start = Clock::now();
  const std::vector<testing::SuiteResult> suites = {
      testing::closure_law_suite(2024, 200, 6), testing::witness_criterion_suite(2025, 25),
      testing::galois_suite(2026, 10),          testing::consequence_axiom_suite(2027, 10),
      testing::relation_axiom_suite(2028, 10),  testing::announcement_suite(2029, 10),
  };
  const double ms = ms_since(start);
  for (const testing::SuiteResult& s : suites) {
    o.require(s.violations == 0 && s.cases > 0, s.name + ": " + std::to_string(s.violations) + " violations");
    for (const std::string& f : s.failures) o.detail << "\n      " << f;
    o.detail << " " << s.name << "=" << s.cases;
  }
  o.require(ms < 30000.0, "over 30 s");
  o.detail << " total " << ms << " ms";
  return o;
}

Outcome hyperintensionality() {
  Outcome o;
  for (const char* name : {"system_a.guise", "system_b.guise", "system_c.guise", "system_c1.guise"}) {
    o.require(!is_hyperintensional(load_fixture(name)).hyperintensional, name);
  }
  std::mt19937_64 rng(99);
  std::size_t random_models = 0;
  for (int i = 0; i < 40; ++i) {
    testing::RandomModelOptions opt;
    opt.templates = i % 2 == 1;
    const GuiseModel m = testing::load_text(testing::random_model_text(rng, opt));
    o.require(!is_hyperintensional(m).hyperintensional, "random extensional model " + std::to_string(i));
    ++random_models;
  }
  const GuiseModel t = load_fixture("tagged.guise");
  const HyperintensionalityResult r = is_hyperintensional(t);
  o.require(r.hyperintensional && r.guises.has_value(), "tagged fixture");
  if (r.guises) {
    const MarkSet x = t.guises()[r.guises->first].marks, y = t.guises()[r.guises->second].marks;
    o.require(close(x, t.theory()) == close(y, t.theory()), "witness pair closures equal");
  }
  o.detail << " " << random_models << " random models";
  return o;
}

Outcome satisfiability() {
  Outcome o;
  const GuiseModel m = load_fixture("system_c.guise");
  const FormulaOptions free{.allow_free_guise_vars = true};
  o.require(sat_search(parse_formula("Int(G, {d})", m, free), m).witness == set_of(m, "d"), "Int(G, {d})");
  o.require(!sat_search(parse_formula("Int(G, {a}) and not Int(G, {b})", m, free), m).witness.has_value(),
            "UNSAT case");

  const GuiseModel five = testing::load_text(
      "marks: a b c d e\nrule: a -> b\nrule: b c -> d\nrule: d -> e\n"
      "templates: { a } { b } { c } { d } { e } { b c }\npolicy intention: templates\n");
  const auto start = Clock::now();
  const SatResult r =
      sat_search(parse_formula("forall mark x . Int(G, {x}) and not contains(G, {x})", five, free), five);
  const double ms = ms_since(start);
  o.require(!r.witness && r.candidates_checked == 32, "exhaustive over 32 candidates");
  o.require(ms < 1000.0, "over 1 s");
  o.detail << " |P|=5 " << ms << " ms";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"System C closure table", closure_table},
      {"System C intention sets (C2)", intention_sets_c2},
      {"relation fixtures", relation_fixtures},
      {"modal fixtures, declared worlds", modal_fixtures},
      {"C2 audit of CI1-CI3 and R1-R3", c2_axiom_audit},
      {"System A worked example", system_a},
      {"System B worked example", system_b},
      {"property suites", property_suites},
      {"hyperintensionality", hyperintensionality},
      {"satisfiability", satisfiability},
  };
  int failed = 0;
  int conflicts = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << index << " " << name << ":" << o.detail.str();
    if (!o.ok && o.known_conflict) {
      std::cout << " (documented conflict between the worked example and the relation's definition)";
      ++conflicts;
    } else if (!o.ok) {
      ++failed;
    }
    std::cout << "\n";
  }
  std::cout << (10 - failed - conflicts) << "/10 criteria passed, " << conflicts << " documented conflict(s), "
            << failed << " unexpected failure(s)\n";
  return failed == 0 ? 0 : 1;
}

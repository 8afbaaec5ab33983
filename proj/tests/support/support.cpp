#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "guise/audit.hpp"
#include "guise/closure.hpp"
#include "guise/document.hpp"
#include "guise/intention.hpp"
#include "guise/lattice.hpp"
#include "guise/worlds.hpp"

#ifndef GUISE_FIXTURE_DIR
#error "GUISE_FIXTURE_DIR must be defined"
#endif

namespace guise::testing {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fixture_path(const std::string& name) { return std::string(GUISE_FIXTURE_DIR) + "/" + name; }

GuiseModel load_text(const std::string& text) { return validate_model(parse_model(text)); }

GuiseModel load_fixture(const std::string& name) { return load_text(read_file(fixture_path(name))); }

MarkSet set_of(const GuiseModel& model, const std::string& marks) {
  std::istringstream in(marks);
  std::vector<std::string> names;
  for (std::string w; in >> w;) names.push_back(w);
  return normalize_proposition(names, model.universe());
}

std::vector<bool> oracle_closure(std::vector<bool> x, const std::vector<OracleRule>& rules) {
  for (bool changed = true; changed;) {
    changed = false;
    for (const OracleRule& r : rules) {
      if (r.head < 0) continue;
      const bool fires = std::all_of(r.body.begin(), r.body.end(), [&](int m) { return x[m]; });
      if (fires && !x[r.head]) {
        x[r.head] = true;
        changed = true;
      }
    }
  }
  return x;
}

std::vector<OracleRule> oracle_rules(const GuiseModel& model) {
  std::vector<OracleRule> out;
  for (const HornRule& r : model.theory().rules()) {
    OracleRule o;
    for (MarkId m : r.body.members()) o.body.push_back(static_cast<int>(m));
    o.head = r.head ? static_cast<int>(*r.head) : -1;
    out.push_back(o);
  }
  return out;
}

std::vector<bool> to_bits(MarkSet s, std::size_t n) {
  std::vector<bool> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = ((s.bits() >> i) & 1U) != 0;
  return out;
}

MarkSet from_bits(const std::vector<bool>& bits) {
  std::uint64_t b = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) b |= std::uint64_t{1} << i;
  }
  return MarkSet(b);
}

namespace {

std::string mark_name(std::size_t i) { return "p" + std::to_string(i); }

std::string braced(std::uint64_t bits, std::size_t n) {
  std::string out = "{";
  for (std::size_t i = 0; i < n; ++i) {
    if ((bits >> i) & 1U) out += " " + mark_name(i);
  }
  return out + " }";
}

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

std::string random_model_text(std::mt19937_64& rng, const RandomModelOptions& o) {
  const std::size_t n = pick(rng, o.min_marks, o.max_marks);
  std::ostringstream out;
  out << "marks:";
  for (std::size_t i = 0; i < n; ++i) out << " " << mark_name(i);
  out << "\n";

  std::vector<OracleRule> rules;
  const std::size_t k = pick(rng, 0, o.max_rules);
  for (std::size_t r = 0; r < k; ++r) {
    OracleRule rule;
    const std::size_t body = pick(rng, 1, std::min(o.max_body, n));
    std::vector<int> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<int>(i);
    std::shuffle(pool.begin(), pool.end(), rng);
    rule.body.assign(pool.begin(), pool.begin() + static_cast<long>(body));
    rule.head = (o.falsum_rules && pick(rng, 0, 5) == 0) ? -1 : static_cast<int>(pick(rng, 0, n - 1));
    out << "rule:";
    for (int m : rule.body) out << " " << mark_name(static_cast<std::size_t>(m));
    out << " -> " << (rule.head < 0 ? std::string("false") : mark_name(static_cast<std::size_t>(rule.head)))
        << "\n";
    rules.push_back(rule);
  }

  if (o.subset_guises) {
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) out << "guise s" << s << " = " << braced(s, n) << "\n";
  }

  if (o.templates) {
    std::set<std::uint64_t> base;
    const std::size_t t = pick(rng, 1, 4);
    for (std::size_t i = 0; i < t; ++i) base.insert(pick(rng, 1, (std::uint64_t{1} << n) - 1));
    // Add {p} for every mark p derived from a template until nothing changes.
    for (bool changed = true; changed;) {
      changed = false;
      for (std::uint64_t theta : std::set<std::uint64_t>(base)) {
        const MarkSet closed = from_bits(oracle_closure(to_bits(MarkSet(theta), n), rules));
        for (MarkId p : (closed - MarkSet(theta)).members()) {
          changed |= base.insert(std::uint64_t{1} << p).second;
        }
      }
    }
    out << "templates:";
    for (std::uint64_t theta : base) out << " " << braced(theta, n);
    out << "\npolicy intention: templates\n";
  }
  if (!o.world_policy.empty()) out << "policy worlds: " << o.world_policy << "\n";
  return out.str();
}

void SuiteResult::fail(std::string what) {
  ++violations;
  if (failures.size() < 5) failures.push_back(std::move(what));
}

namespace {

std::string describe(const GuiseModel& m, MarkSet s) { return m.universe().format(s); }

std::vector<MarkSet> all_subsets(const GuiseModel& m) { return subsets_of(m.universe().all()); }

template <typename Fn>
void for_sizes(std::mt19937_64& rng, std::size_t per_size, RandomModelOptions o, Fn&& fn) {
  for (std::size_t n = 1; n <= 4; ++n) {
    o.min_marks = o.max_marks = n;
    for (std::size_t i = 0; i < per_size; ++i) fn(load_text(random_model_text(rng, o)));
  }
}

}  // namespace

SuiteResult closure_law_suite(std::uint64_t seed, std::size_t theories, std::size_t max_marks) {
  SuiteResult res{"closure laws", 0, 0, {}};
  std::mt19937_64 rng(seed);
  RandomModelOptions o;
  o.max_marks = max_marks;
  o.max_rules = 8;
  o.subset_guises = false;
  o.falsum_rules = true;
  for (std::size_t t = 0; t < theories; ++t) {
    const GuiseModel m = load_text(random_model_text(rng, o));
    const std::vector<OracleRule> rules = oracle_rules(m);
    const std::size_t n = m.universe().size();
    const std::vector<MarkSet> subsets = all_subsets(m);
    for (MarkSet x : subsets) {
      ++res.cases;
      const ClosureResult c = closure(x, m.theory());
      const MarkSet expect = from_bits(oracle_closure(to_bits(x, n), rules));
      if (c.closed_set != expect) res.fail("closure of " + describe(m, x) + " differs from the fixpoint oracle");
      const std::optional<MarkSet> replayed = replay(x, c.fired, m.theory());
      if (!replayed || *replayed != c.closed_set) res.fail("trace of " + describe(m, x) + " does not replay");
    }
    const ClosureLawReport laws = verify_closure_laws(m.theory(), subsets);
    for (const LawViolation& v : laws.violations) {
      res.fail(std::string(law_name(v.law)) + " fails in a random theory");
    }
    // Direct statement of the three laws against the oracle.
    for (MarkSet x : subsets) {
      const MarkSet cx = close(x, m.theory());
      if (!x.subset_of(cx) || close(cx, m.theory()) != cx) res.fail("extensive/idempotent check at " + describe(m, x));
      for (MarkSet y : subsets) {
        if (x.subset_of(y) && !cx.subset_of(close(y, m.theory()))) res.fail("monotonicity at " + describe(m, x));
      }
    }
  }
  return res;
}

SuiteResult witness_criterion_suite(std::uint64_t seed, std::size_t per_size) {
  SuiteResult res{"witness criterion", 0, 0, {}};
  std::mt19937_64 rng(seed);
  for_sizes(rng, per_size, {}, [&](const GuiseModel& m) {
    const std::vector<MarkSet> subsets = all_subsets(m);
    const std::vector<OracleRule> rules = oracle_rules(m);
    for (MarkSet g : subsets) {
      const MarkSet kg = from_bits(oracle_closure(to_bits(g, m.universe().size()), rules));
      for (MarkSet h : subsets) {
        ++res.cases;
        bool brute = false;  // some non-empty phi within kappa(g) and h
        for (MarkSet phi : subsets) brute |= !phi.empty() && phi.subset_of(kg) && phi.subset_of(h);
        const bool shortcut = !(h & kg).empty();
        const RelationWitness r = relates(g, h, m);
        if (r.holds != brute || brute != shortcut) {
          res.fail("R(" + describe(m, g) + ", " + describe(m, h) + ") disagrees with the witness criterion");
        }
        if (r.holds && (!r.witness || !r.witness->subset_of(h) || !intends(g, *r.witness, m))) {
          res.fail("invalid witness for R(" + describe(m, g) + ", " + describe(m, h) + ")");
        }
      }
    }
  });
  return res;
}

SuiteResult galois_suite(std::uint64_t seed, std::size_t per_size) {
  SuiteResult res{"Galois equivalence", 0, 0, {}};
  std::mt19937_64 rng(seed);
  for (bool templates : {false, true}) {
    RandomModelOptions o;
    o.templates = templates;
    o.subset_guises = false;
    for_sizes(rng, per_size, o, [&](const GuiseModel& m) {
      const GaloisReport g = galois_check(m, GuiseDomain::AllSubsets);
      res.cases += g.pairs_checked;
      for (const GaloisMismatch& x : g.mismatches) {
        res.fail("Galois mismatch at g=" + describe(m, x.g) + " h=" + describe(m, x.h));
      }
      // Independent reading: materialize F(g) and U(h) here and intersect.
      const std::vector<MarkSet> subsets = all_subsets(m);
      for (MarkSet gs : subsets) {
        const MarkSet kg = close(gs, m.theory());
        std::vector<MarkSet> f;
        if (templates) {
          for (const Template& t : *m.templates()) {
            if (t.marks.subset_of(kg)) f.push_back(t.marks);
          }
        } else {
          for (MarkSet phi : subsets) {
            if (!phi.empty() && phi.subset_of(kg)) f.push_back(phi);
          }
        }
        for (MarkSet h : subsets) {
          ++res.cases;
          const bool meet = std::any_of(f.begin(), f.end(), [&](MarkSet phi) { return phi.subset_of(h); });
          if (meet != relates(gs, h, m).holds) {
            res.fail("relates disagrees with F(g) meeting U(h) at g=" + describe(m, gs) + " h=" + describe(m, h));
          }
        }
      }
    });
  }
  return res;
}

namespace {

void expect_clean(SuiteResult& res, const GuiseModel& m, Axiom a) {
  const AuditReport r = audit_axiom(m, a);
  res.cases += r.instances_checked;
  if (r.verdict == Verdict::Fail) {
    res.fail(std::string(axiom_name(a)) + " fails with " + std::to_string(r.violations) + " violations");
  }
}

}  // namespace

SuiteResult consequence_axiom_suite(std::uint64_t seed, std::size_t per_size) {
  SuiteResult res{"CI1/CI2/CI3", 0, 0, {}};
  std::mt19937_64 rng(seed);
  for (bool templates : {false, true}) {
    RandomModelOptions o;
    o.templates = templates;
    for_sizes(rng, per_size, o, [&](const GuiseModel& m) {
      for (Axiom a : {Axiom::CI1, Axiom::CI2, Axiom::CI3}) expect_clean(res, m, a);
      if (templates) expect_clean(res, m, Axiom::ThetaTClosed);
      // CI2 restated: g within h gives J(g) within J(h), over every declared pair.
      for (const Guise& g : m.guises()) {
        const IntentionSet jg = intention_set(g.marks, m);
        for (const Guise& h : m.guises()) {
          if (!g.marks.subset_of(h.marks)) continue;
          ++res.cases;
          if (!jg.included_in(intention_set(h.marks, m))) res.fail("J not monotone at " + g.name + ", " + h.name);
        }
      }
    });
  }
  return res;
}

SuiteResult relation_axiom_suite(std::uint64_t seed, std::size_t per_size) {
  SuiteResult res{"R2 and guarded R3", 0, 0, {}};
  std::mt19937_64 rng(seed);
  for (bool templates : {false, true}) {
    RandomModelOptions o;
    o.templates = templates;
    for_sizes(rng, per_size, o, [&](const GuiseModel& m) {
      expect_clean(res, m, Axiom::R2);
      expect_clean(res, m, Axiom::R3);
      // R2 restated directly: R(g, h) and h within h' gives R(g, h').
      for (const Guise& g : m.guises()) {
        for (const Guise& h : m.guises()) {
          if (!relates(g.marks, h.marks, m).holds) continue;
          for (const Guise& h2 : m.guises()) {
            if (!h.marks.subset_of(h2.marks)) continue;
            ++res.cases;
            if (!relates(g.marks, h2.marks, m).holds) res.fail("R2 at " + g.name + ", " + h.name + ", " + h2.name);
          }
        }
      }
    });
  }
  return res;
}

SuiteResult announcement_suite(std::uint64_t seed, std::size_t per_size) {
  SuiteResult res{"announcement monotonicity", 0, 0, {}};
  std::mt19937_64 rng(seed);
  for (const char* policy : {"all-nonempty", "all", "maximal"}) {
    RandomModelOptions o;
    o.subset_guises = false;
    o.world_policy = policy;
    for_sizes(rng, per_size, o, [&](const GuiseModel& m) {
      const WorldSet before = select_worlds(m);
      const std::vector<MarkSet> subsets = all_subsets(m);
      std::vector<WorldSet> after;
      for (MarkSet phi : subsets) after.push_back(select_worlds(announce(m, phi)));
      for (std::size_t i = 0; i < subsets.size(); ++i) {
        const WorldSet& w = after[i];
        for (MarkSet world : w.worlds) {
          ++res.cases;
          if (!subsets[i].subset_of(world)) res.fail("announced world lacks " + describe(m, subsets[i]));
          if (std::find(before.worlds.begin(), before.worlds.end(), world) == before.worlds.end()) {
            res.fail("announcement added a world");
          }
        }
        for (MarkSet chi : subsets) {
          ++res.cases;
          if (eval_box(chi, before) && !eval_box(chi, w)) res.fail("necessity lost after announcement");
          if (eval_diamond(chi, w) && !eval_diamond(chi, before)) res.fail("possibility gained after announcement");
        }
        // A stronger announcement keeps fewer worlds.
        for (std::size_t j = 0; j < subsets.size(); ++j) {
          if (!subsets[i].subset_of(subsets[j])) continue;
          ++res.cases;
          for (MarkSet world : after[j].worlds) {
            if (std::find(w.worlds.begin(), w.worlds.end(), world) == w.worlds.end()) {
              res.fail("restriction is not antitone in the announcement");
            }
          }
        }
      }
    });
  }
  return res;
}

}  // namespace guise::testing

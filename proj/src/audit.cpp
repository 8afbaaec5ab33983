#include "guise/audit.hpp"

#include <algorithm>
#include <array>

#include "guise/closure.hpp"
#include "guise/error.hpp"
#include "guise/intention.hpp"
#include "guise/worlds.hpp"

namespace guise {

namespace {

constexpr std::array<std::pair<Axiom, std::string_view>, 16> kAxiomNames{{
    {Axiom::CT, "CT"},
    {Axiom::LC, "LC"},
    {Axiom::IC, "IC"},
    {Axiom::CI1, "CI1"},
    {Axiom::CI2, "CI2"},
    {Axiom::CI3, "CI3"},
    {Axiom::R1, "R1"},
    {Axiom::R2, "R2"},
    {Axiom::R3, "R3"},
    {Axiom::R3Unguarded, "R3-unguarded"},
    {Axiom::M1, "M1"},
    {Axiom::M2, "M2"},
    {Axiom::M3, "M3"},
    {Axiom::BoxToDiamond, "BoxToDiamond"},
    {Axiom::IdentityByClosure, "IdentityByClosure"},
    {Axiom::ThetaTClosed, "ThetaTClosed"},
}};

// A value for a proposition variable: a bare mark set under the downset
// policy, a template (with its identity) under the template policies.
struct Content {
  MarkSet marks;
  std::optional<std::size_t> template_index;
};

class Auditor {
 public:
  Auditor(const GuiseModel& model, const AuditBounds& bounds) : model_(model), bounds_(bounds) {
    for (const Guise& g : model.guises()) {
      closures_.push_back(close(g.marks, model.theory()));
      intentions_.push_back(intention_set(g.marks, model));
    }
  }

  AuditReport run(Axiom axiom) {
    report_ = AuditReport{};
    report_.axiom = axiom;
    switch (axiom) {
      case Axiom::CT: containment_truth(); break;
      case Axiom::LC: closure_containment(); break;
      case Axiom::IC: intentional_connection(); break;
      case Axiom::CI1: consequence_closure(); break;
      case Axiom::CI2: extension_invariance(); break;
      case Axiom::CI3: commutation(); break;
      case Axiom::R1: reflexivity(); break;
      case Axiom::R2: relation_monotonicity(); break;
      case Axiom::R3: transitivity(true); break;
      case Axiom::R3Unguarded: transitivity(false); break;
      case Axiom::M1: closed_worlds(); break;
      case Axiom::M2: possibility(); break;
      case Axiom::M3: necessity(); break;
      case Axiom::BoxToDiamond: box_to_diamond(); break;
      case Axiom::IdentityByClosure: identity_by_closure(); break;
      case Axiom::ThetaTClosed: theta_closed(); break;
    }
    if (report_.verdict != Verdict::NotApplicable) {
      report_.verdict = report_.violations == 0 ? Verdict::Pass : Verdict::Fail;
    }
    return std::move(report_);
  }

 private:
  const std::vector<Content>& contents() {
    if (contents_) return *contents_;
    std::vector<Content> out;
    if (model_.intention_policy() == IntentionPolicy::CanonicalDownset) {
      require_small_universe("proposition domain");
      for (MarkSet s : nonempty_subsets_of(model_.universe().all())) out.push_back({s, std::nullopt});
    } else {
      const TemplateBase& base = *model_.templates();
      for (std::size_t i = 0; i < base.size(); ++i) out.push_back({base[i].marks, i});
    }
    contents_ = std::move(out);
    return *contents_;
  }

  // Modal schemata do not involve intention; they range over every subset of
  // P when that is small enough, otherwise over the policy universe.
  std::vector<MarkSet> modal_domain() {
    if (model_.universe().size() <= bounds_.proposition_marks) return subsets_of(model_.universe().all());
    std::vector<MarkSet> out;
    for (const Content& c : contents()) out.push_back(c.marks);
    return out;
  }

  const WorldSet& worlds() {
    if (!worlds_) worlds_ = select_worlds(model_, bounds_.world_guard);
    return *worlds_;
  }

  void require_small_universe(std::string_view what) const {
    if (model_.universe().size() > bounds_.proposition_marks) {
      throw BoundExceeded(std::string(what) + " over " + std::to_string(model_.universe().size()) +
                          " marks exceeds the bound " + std::to_string(bounds_.proposition_marks));
    }
  }

  bool holds(std::size_t g, const Content& c) const {
    if (c.template_index) return intentions_[g].contains_template(*c.template_index);
    return intentions_[g].contains(c.marks);
  }

  BoundValue guise(std::size_t i) const {
    const Guise& g = model_.guises()[i];
    return {BoundValue::Kind::Guise, g.marks, 0, g.name, i};
  }
  BoundValue content(const Content& c) const {
    if (!c.template_index) return proposition(c.marks);
    const Template& t = (*model_.templates())[*c.template_index];
    return {BoundValue::Kind::Template, t.marks, 0,
            t.tag == TemplateTag::None ? std::string{} : std::string(keyword(t.tag)), *c.template_index};
  }
  static BoundValue proposition(MarkSet s) { return {BoundValue::Kind::Proposition, s, 0, {}, 0}; }
  static BoundValue mark(MarkId m) { return {BoundValue::Kind::Mark, MarkSet::singleton(m), m, {}, 0}; }
  static BoundValue world(MarkSet w, std::size_t i) { return {BoundValue::Kind::World, w, 0, {}, i}; }

  void check(bool ok, Binding&& binding) {
    ++report_.instances_checked;
    if (ok) return;
    ++report_.violations;
    if (report_.counterexamples.size() < bounds_.max_counterexamples) {
      report_.counterexamples.push_back(std::move(binding));
    }
  }

  std::size_t guise_count() const { return model_.guises().size(); }

  // g |= phi for every phi contained in g.
  void containment_truth() {
    const auto& dom = contents();
    for (std::size_t g = 0; g < guise_count(); ++g) {
      const MarkSet bundle = model_.guises()[g].marks;
      for (const Content& c : dom) {
        if (!c.marks.subset_of(bundle)) continue;
        const bool satisfied = c.marks.subset_of(bundle);
        check(satisfied, {{{"g", guise(g)}, {"phi", content(c)}}, {}});
      }
    }
  }

  // P(g) <-> P in κ(g), the predication read through the traced closure and
  // through entailment of the singleton.
  void closure_containment() {
    report_.note = "audited world-independently: predication is containment, so the boxed form adds nothing";
    for (std::size_t g = 0; g < guise_count(); ++g) {
      const ClosureResult traced = closure(model_.guises()[g].marks, model_.theory());
      for (MarkId p = 0; p < model_.universe().size(); ++p) {
        const bool predicated = traced.closed_set.contains(p);
        const bool entailed = entails(model_.guises()[g].marks, MarkSet::singleton(p), model_.theory());
        check(predicated == entailed, {{{"g", guise(g)}, {"p", mark(p)}}, {}});
      }
    }
  }

  // R(g, h) <-> exists phi (Int(g, phi) and phi ⊆ h), with the existential
  // checked by scanning the whole proposition domain.
  void intentional_connection() {
    const auto& dom = contents();
    for (std::size_t g = 0; g < guise_count(); ++g) {
      for (std::size_t h = 0; h < guise_count(); ++h) {
        const MarkSet target = model_.guises()[h].marks;
        const RelationWitness r = relates(model_.guises()[g].marks, target, model_);
        const bool brute = std::any_of(dom.begin(), dom.end(),
                                       [&](const Content& c) { return c.marks.subset_of(target) && holds(g, c); });
        bool witness_ok = true;
        if (r.holds) {
          witness_ok = r.witness && r.witness->subset_of(target) &&
                       (r.template_index ? intentions_[g].contains_template(*r.template_index)
                                         : intentions_[g].contains(*r.witness));
        }
        check(r.holds == brute && witness_ok,
              {{{"g", guise(g)}, {"h", guise(h)}},
               r.holds == brute ? "witness is not an intended proposition inside h" : "R disagrees with IC"});
      }
    }
  }

  // Int(g, phi) and phi =>_T psi imply Int(g, psi). Under templates the
  // domain is Θ; an entailed singleton that Θ lacks is reported as well,
  // since g then cannot intend a consequence of what it intends.
  void consequence_closure() {
    const auto& dom = contents();
    const bool downset = model_.intention_policy() == IntentionPolicy::CanonicalDownset;
    for (std::size_t g = 0; g < guise_count(); ++g) {
      for (const Content& phi : dom) {
        if (!holds(g, phi)) continue;
        const MarkSet reach = close(phi.marks, model_.theory());
        if (downset) {
          for (MarkSet psi : nonempty_subsets_of(reach)) {
            check(holds(g, {psi, std::nullopt}), {{{"g", guise(g)}, {"phi", content(phi)}, {"psi", proposition(psi)}}, {}});
          }
          continue;
        }
        for (const Content& psi : dom) {
          if (!psi.marks.subset_of(reach)) continue;
          check(holds(g, psi), {{{"g", guise(g)}, {"phi", content(phi)}, {"psi", content(psi)}}, {}});
        }
        for (MarkId p : (reach - phi.marks).members()) {
          const MarkSet psi = MarkSet::singleton(p);
          const bool in_theta = std::any_of(dom.begin(), dom.end(), [&](const Content& c) { return c.marks == psi; });
          if (in_theta) continue;
          check(false, {{{"g", guise(g)}, {"phi", content(phi)}, {"psi", proposition(psi)}},
                        "entailed consequence lies outside the template base"});
        }
      }
    }
  }

  // g ⊆ h implies J(g) ⊆ J(h).
  void extension_invariance() {
    const auto& dom = contents();
    for (std::size_t g = 0; g < guise_count(); ++g) {
      for (std::size_t h = 0; h < guise_count(); ++h) {
        if (!model_.guises()[g].marks.subset_of(model_.guises()[h].marks)) continue;
        for (const Content& phi : dom) {
          check(!holds(g, phi) || holds(h, phi), {{{"g", guise(g)}, {"h", guise(h)}, {"phi", content(phi)}}, {}});
        }
      }
    }
  }

  // κ⋄(J(g)) = J(g) and J(κ(g)) = J(g).
  void commutation() {
    const PropositionUniverse universe = policy_universe(model_);
    if (universe.all_nonempty) require_small_universe("CI3 lift");
    auto same_family = [](std::vector<MarkSet> a, std::vector<MarkSet> b) {
      std::sort(a.begin(), a.end(), CanonicalLess{});
      std::sort(b.begin(), b.end(), CanonicalLess{});
      a.erase(std::unique(a.begin(), a.end()), a.end());
      b.erase(std::unique(b.begin(), b.end()), b.end());
      return a == b;
    };
    for (std::size_t g = 0; g < guise_count(); ++g) {
      const std::vector<MarkSet> members = intentions_[g].propositions(bounds_.proposition_marks);
      const std::vector<MarkSet> lifted =
          lift_closure(members, model_.theory(), universe, bounds_.proposition_marks);
      check(same_family(lifted, members), {{{"g", guise(g)}}, "lifted closure of J(g) differs from J(g)"});
      const IntentionSet of_closure = intention_set(closures_[g], model_);
      check(of_closure == intentions_[g], {{{"g", guise(g)}}, "J of the closure of g differs from J(g)"});
    }
  }

  // Self-intention gives R(g, g).
  void reflexivity() {
    const auto& dom = contents();
    for (std::size_t g = 0; g < guise_count(); ++g) {
      const MarkSet bundle = model_.guises()[g].marks;
      const bool reflexive = relates(bundle, bundle, model_).holds;
      for (const Content& phi : dom) {
        if (!(holds(g, phi) && phi.marks.subset_of(bundle))) continue;
        check(reflexive, {{{"g", guise(g)}, {"phi", content(phi)}}, {}});
      }
    }
  }

  void relation_monotonicity() {
    const std::size_t n = guise_count();
    for (std::size_t g = 0; g < n; ++g) {
      const MarkSet gm = model_.guises()[g].marks;
      for (std::size_t h = 0; h < n; ++h) {
        if (!relates(gm, model_.guises()[h].marks, model_).holds) continue;
        for (std::size_t h2 = 0; h2 < n; ++h2) {
          if (!model_.guises()[h].marks.subset_of(model_.guises()[h2].marks)) continue;
          check(relates(gm, model_.guises()[h2].marks, model_).holds,
                {{{"g", guise(g)}, {"h", guise(h)}, {"h'", guise(h2)}}, {}});
        }
      }
    }
  }

  void transitivity(bool inheritance_premise) {
    if (!inheritance_premise) report_.note = "probe without J(h) ⊆ J(g); failures show R is not transitive in general";
    const std::size_t n = guise_count();
    for (std::size_t g = 0; g < n; ++g) {
      const MarkSet gm = model_.guises()[g].marks;
      for (std::size_t h = 0; h < n; ++h) {
        if (inheritance_premise && !intentions_[h].included_in(intentions_[g])) continue;
        const MarkSet hm = model_.guises()[h].marks;
        if (!relates(gm, hm, model_).holds) continue;
        for (std::size_t u = 0; u < n; ++u) {
          const MarkSet um = model_.guises()[u].marks;
          if (!relates(hm, um, model_).holds) continue;
          check(relates(gm, um, model_).holds, {{{"g", guise(g)}, {"h", guise(h)}, {"u", guise(u)}}, {}});
        }
      }
    }
  }

  // phi ⊆ w and phi =>_T psi imply psi ⊆ w; psi = κ(phi) is the strongest
  // consequence, so it is the one checked.
  void closed_worlds() {
    const auto& ws = worlds().worlds;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      const MarkSet w = ws[i];
      auto visit = [&](MarkSet phi) {
        const MarkSet psi = close(phi, model_.theory());
        check(psi.subset_of(w), {{{"w", world(w, i)}, {"phi", proposition(phi)}, {"psi", proposition(psi)}}, {}});
        return true;
      };
      if (w.size() <= bounds_.proposition_marks) {
        for_each_subset(w, visit);
      } else {
        visit(w);
      }
    }
  }

  void possibility() {
    const WorldSet& ws = worlds();
    for (MarkSet phi : modal_domain()) {
      bool some = false;
      for (MarkSet w : ws.worlds) some = some || phi.subset_of(w);
      check(eval_diamond(phi, ws) == some, {{{"phi", proposition(phi)}}, {}});
    }
  }

  void necessity() {
    const WorldSet& ws = worlds();
    for (MarkSet phi : modal_domain()) {
      bool all = true;
      for (MarkSet w : ws.worlds) all = all && phi.subset_of(w);
      check(eval_box(phi, ws) == all, {{{"phi", proposition(phi)}}, {}});
    }
  }

  void box_to_diamond() {
    const WorldSet& ws = worlds();
    if (ws.empty()) {
      report_.verdict = Verdict::NotApplicable;
      report_.note = "world set is empty";
      return;
    }
    for (MarkSet phi : modal_domain()) {
      check(!eval_box(phi, ws) || eval_diamond(phi, ws), {{{"phi", proposition(phi)}}, {}});
    }
  }

  // Closure-equal guises agree in every extensional context: predication
  // and entailment.
  void identity_by_closure() {
    report_.note = "extensional contexts only; intentional contexts may differ";
    const auto& dom = contents();
    for (std::size_t g = 0; g < guise_count(); ++g) {
      for (std::size_t h = g + 1; h < guise_count(); ++h) {
        if (closures_[g] != closures_[h]) continue;
        const MarkSet gm = model_.guises()[g].marks;
        const MarkSet hm = model_.guises()[h].marks;
        for (MarkId p = 0; p < model_.universe().size(); ++p) {
          check(closures_[g].contains(p) == closures_[h].contains(p),
                {{{"g", guise(g)}, {"h", guise(h)}, {"p", mark(p)}}, {}});
        }
        for (const Content& phi : dom) {
          check(entails(gm, phi.marks, model_.theory()) == entails(hm, phi.marks, model_.theory()),
                {{{"g", guise(g)}, {"h", guise(h)}, {"phi", content(phi)}}, {}});
        }
      }
    }
  }

  // Every mark a template derives is itself available as a template, so the
  // consequences Int must absorb under CI1 are intendable.
  void theta_closed() {
    if (!model_.templates()) {
      report_.verdict = Verdict::NotApplicable;
      report_.note = "no template base declared";
      return;
    }
    report_.note = "closure within the base: each mark derived from a template is a singleton template";
    const auto& dom = contents();
    for (const Content& theta : dom) {
      const MarkSet derived = close(theta.marks, model_.theory()) - theta.marks;
      for (MarkId p : derived.members()) {
        const MarkSet psi = MarkSet::singleton(p);
        const bool present = std::any_of(dom.begin(), dom.end(), [&](const Content& c) { return c.marks == psi; });
        check(present, {{{"theta", content(theta)}, {"psi", proposition(psi)}}, {}});
      }
    }
  }

  const GuiseModel& model_;
  AuditBounds bounds_;
  std::vector<MarkSet> closures_;
  std::vector<IntentionSet> intentions_;
  std::optional<std::vector<Content>> contents_;
  std::optional<WorldSet> worlds_;
  AuditReport report_;
};

}  // namespace

std::string_view axiom_name(Axiom a) {
  for (const auto& [axiom, name] : kAxiomNames) {
    if (axiom == a) return name;
  }
  return "?";
}

std::optional<Axiom> axiom_from(std::string_view name) {
  for (const auto& [axiom, n] : kAxiomNames) {
    if (n == name) return axiom;
  }
  return std::nullopt;
}

const std::vector<Axiom>& standard_axioms() {
  static const std::vector<Axiom> list{Axiom::CT,  Axiom::LC, Axiom::IC, Axiom::CI1,          Axiom::CI2,
                                       Axiom::CI3, Axiom::R1, Axiom::R2, Axiom::R3,           Axiom::M1,
                                       Axiom::M2,  Axiom::M3, Axiom::BoxToDiamond, Axiom::IdentityByClosure,
                                       Axiom::ThetaTClosed};
  return list;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

const BoundValue* Binding::find(std::string_view var) const {
  for (const auto& [name, value] : vars) {
    if (name == var) return &value;
  }
  return nullptr;
}

AuditReport audit_axiom(const GuiseModel& model, Axiom axiom, const AuditBounds& bounds) {
  return Auditor(model, bounds).run(axiom);
}

std::vector<AuditReport> audit_all(const GuiseModel& model, const AuditBounds& bounds) {
  Auditor auditor(model, bounds);
  std::vector<AuditReport> out;
  for (Axiom a : standard_axioms()) out.push_back(auditor.run(a));
  return out;
}

std::optional<Binding> find_counterexample(const GuiseModel& model, Axiom axiom, const AuditBounds& bounds) {
  AuditBounds first_only = bounds;
  first_only.max_counterexamples = 1;
  AuditReport report = audit_axiom(model, axiom, first_only);
  if (report.counterexamples.empty()) return std::nullopt;
  return std::move(report.counterexamples.front());
}

}  // namespace guise

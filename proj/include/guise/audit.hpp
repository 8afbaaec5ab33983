#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "guise/mark_set.hpp"
#include "guise/model.hpp"

namespace guise {

enum class Axiom {
  CT,
  LC,
  IC,
  CI1,
  CI2,
  CI3,
  R1,
  R2,
  R3,
  R3Unguarded,  // transitivity without the inheritance premise; expected to fail
  M1,
  M2,
  M3,
  BoxToDiamond,
  IdentityByClosure,
  ThetaTClosed,
};

std::string_view axiom_name(Axiom a);
std::optional<Axiom> axiom_from(std::string_view name);

/// Every axiom `audit_all` runs, in report order. R3Unguarded is a probe and
/// only runs when asked for.
const std::vector<Axiom>& standard_axioms();

enum class Verdict { Pass, Fail, NotApplicable };
std::string_view verdict_name(Verdict v);

struct BoundValue {
  enum class Kind { Guise, Proposition, Template, Mark, World };
  Kind kind = Kind::Proposition;
  MarkSet marks;
  MarkId mark = 0;
  std::string label;      // guise name, template tag
  std::size_t index = 0;  // guise, template or world index
};

/// One variable assignment, in quantifier order.
struct Binding {
  std::vector<std::pair<std::string, BoundValue>> vars;
  std::string detail;

  const BoundValue* find(std::string_view var) const;
};

struct AuditReport {
  Axiom axiom = Axiom::CT;
  Verdict verdict = Verdict::Pass;
  std::vector<Binding> counterexamples;  // the first few violations, in enumeration order
  std::size_t violations = 0;
  std::size_t instances_checked = 0;
  std::string note;
};

struct AuditBounds {
  std::size_t proposition_marks = 12;  // |P| limit for all-subsets proposition domains
  std::size_t world_guard = 20;
  std::size_t max_counterexamples = 16;
};

/// Exhaustive check of one schema over the model's finite domains: declared
/// guises for guise variables, the policy universe for proposition
/// variables, P for marks, the selected worlds for worlds. Throws
/// BoundExceeded when an all-subsets domain would exceed the bound.
AuditReport audit_axiom(const GuiseModel& model, Axiom axiom, const AuditBounds& bounds = {});

std::vector<AuditReport> audit_all(const GuiseModel& model, const AuditBounds& bounds = {});

/// First violation in enumeration order, if any.
std::optional<Binding> find_counterexample(const GuiseModel& model, Axiom axiom, const AuditBounds& bounds = {});

}  // namespace guise

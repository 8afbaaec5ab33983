#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "guise/mark_set.hpp"
#include "guise/model.hpp"

namespace guise {

struct ClosureResult {
  MarkSet closed_set;
  bool inconsistent = false;        // some falsum rule's body was reached
  std::vector<std::size_t> fired;   // rule indices, in firing order
};

/// Least T-closed superset of `x`, by forward chaining. Rules are scanned in
/// declaration order, repeatedly, until a pass adds nothing; each rule fires
/// at most once.
ClosureResult closure(MarkSet x, const HornTheory& theory);

/// Same fixpoint as `closure`, without the trace.
MarkSet close(MarkSet x, const HornTheory& theory);

/// phi =>_T psi, i.e. psi is contained in the closure of phi.
bool entails(MarkSet phi, MarkSet psi, const HornTheory& theory);

/// No rule with body inside `x` has its head outside `x`. Falsum rules are
/// ignored here; see `is_consistent`.
bool is_closed(MarkSet x, const HornTheory& theory);

/// The closure of `x` triggers no falsum rule.
bool is_consistent(MarkSet x, const HornTheory& theory);

/// Replays a trace from `start`, checking every rule was applicable when it
/// fired. Returns the reached set, or nullopt if some step was not enabled.
std::optional<MarkSet> replay(MarkSet start, std::span<const std::size_t> fired, const HornTheory& theory);

enum class ClosureLaw { Extensivity, Monotonicity, Idempotence };

struct LawViolation {
  ClosureLaw law;
  MarkSet x;
  std::optional<MarkSet> y;  // second argument, for monotonicity
};

struct ClosureLawReport {
  std::size_t sets_checked = 0;
  std::size_t pairs_checked = 0;
  std::vector<LawViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks extensivity and idempotence on every sample and monotonicity on
/// every ordered pair of samples related by inclusion.
ClosureLawReport verify_closure_laws(const HornTheory& theory, std::span<const MarkSet> samples);

std::string_view law_name(ClosureLaw law);

}  // namespace guise

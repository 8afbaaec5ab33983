#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "guise/mark_set.hpp"
#include "guise/model.hpp"

namespace guise {

/// A mark position: a declared mark or a mark variable.
struct MarkRef {
  std::optional<MarkId> id;
  std::string var;  // non-empty for variables
};

/// A proposition literal `{ ... }`.
struct PropTerm {
  std::vector<MarkRef> marks;
};

/// A guise position: a declared guise, a guise variable, or a literal bundle.
struct GuiseTerm {
  enum class Kind { Named, Variable, Literal };
  Kind kind = Kind::Named;
  std::size_t guise_index = 0;
  std::string var;
  PropTerm literal;
};

struct Formula {
  enum class Kind {
    Contains,  // contains(g, {..}): the bundle includes the proposition
    MarkPred,  // pred(p, g): p is in the closure of g
    Int,
    R,
    Self,
    IntDeRe,
    Refers,
    Box,
    Diamond,
    Not,
    And,
    Or,
    Implies,
    ForallGuise,
    ExistsGuise,
    ForallMark,
    ExistsMark,
  };

  Kind kind = Kind::Contains;
  std::vector<GuiseTerm> guises;
  PropTerm prop;
  MarkRef mark;
  std::string var;  // bound variable of a quantifier
  std::vector<Formula> children;
};

struct FormulaOptions {
  /// Unknown names in guise positions become free guise variables instead of
  /// errors (used by satisfiability search).
  bool allow_free_guise_vars = false;
};

/// Parses and resolves a formula against `model`. Throws ParseError on bad
/// syntax and ValidationError on unknown names or rebound variables.
Formula parse_formula(std::string_view text, const GuiseModel& model, const FormulaOptions& options = {});

/// Free guise variables, in first-occurrence order.
std::vector<std::string> free_guise_variables(const Formula& f);

/// Fully parenthesised rendering that `parse_formula` accepts.
std::string to_string(const Formula& f, const GuiseModel& model);

struct TraceEntry {
  std::string atom;
  bool value = false;
  std::optional<MarkSet> witness;
  std::string note;
};

struct EvalResult {
  std::string formula;
  bool verdict = false;
  std::vector<TraceEntry> trace;
  bool trace_truncated = false;
  std::chrono::microseconds elapsed{0};
};

/// A value for a free guise variable.
struct GuiseBinding {
  std::string var;
  MarkSet marks;
  std::string label;
};

/// Evaluates by structural recursion; guise quantifiers range over declared
/// guises, mark quantifiers over P.
EvalResult eval_formula(const Formula& f, const GuiseModel& model, std::string text = {},
                        const std::vector<GuiseBinding>& free = {});

/// Verdict only, no trace.
bool holds(const Formula& f, const GuiseModel& model, const std::vector<GuiseBinding>& free = {});

}  // namespace guise

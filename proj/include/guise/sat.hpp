#pragma once

#include <optional>
#include <string>

#include "guise/formula.hpp"
#include "guise/worlds.hpp"

namespace guise {

struct SatResult {
  std::string variable;
  std::optional<MarkSet> witness;  // least satisfying bundle, canonical order
  std::size_t candidates_checked = 0;
};

/// Searches every subset of P, in canonical order, for a bundle that makes
/// `f` true when bound to its single free guise variable. Absence of a
/// witness means all 2^|P| candidates failed. Throws ValidationError unless
/// there is exactly one free guise variable, BoundExceeded past `guard`.
SatResult sat_search(const Formula& f, const GuiseModel& model, std::size_t guard = kDefaultEnumerationGuard);

}  // namespace guise

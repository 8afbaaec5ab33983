#pragma once

#include <optional>
#include <string>
#include <vector>

#include "guise/mark_set.hpp"
#include "guise/model.hpp"

namespace guise {

inline constexpr std::size_t kDefaultEnumerationGuard = 20;

struct WorldSet {
  std::vector<MarkSet> worlds;
  WorldPolicyKind policy_used = WorldPolicyKind::AllClosedNonEmpty;
  std::vector<std::string> warnings;

  bool empty() const { return worlds.empty(); }
};

/// Every consistent T-closed subset of the universe, in canonical order.
/// Throws BoundExceeded when the universe has more than `guard` marks.
std::vector<MarkSet> enumerate_closed_sets(const GuiseModel& model, std::size_t guard = kDefaultEnumerationGuard);

std::vector<MarkSet> enumerate_closed_sets(const HornTheory& theory, const Universe& universe,
                                           std::size_t guard = kDefaultEnumerationGuard);

/// Applies the model's world policy, then every announcement in order.
WorldSet select_worlds(const GuiseModel& model, std::size_t guard = kDefaultEnumerationGuard);

/// ◇phi: some world contains phi.
bool eval_diamond(MarkSet phi, const WorldSet& worlds);
/// □phi: every world contains phi (vacuously true on an empty world set).
bool eval_box(MarkSet phi, const WorldSet& worlds);

/// First world (in world-set order) containing phi.
std::optional<MarkSet> diamond_witness(MarkSet phi, const WorldSet& worlds);
/// First world (in world-set order) not containing phi.
std::optional<MarkSet> box_counterexample(MarkSet phi, const WorldSet& worlds);

/// Public announcement of phi: worlds are cut down to those containing phi.
/// Intention sets are untouched; the built-in policies already respect
/// consequence closure.
GuiseModel announce(const GuiseModel& model, MarkSet phi);

}  // namespace guise

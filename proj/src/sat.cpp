#include "guise/sat.hpp"

#include "guise/error.hpp"

namespace guise {

SatResult sat_search(const Formula& f, const GuiseModel& model, std::size_t guard) {
  const std::vector<std::string> free = free_guise_variables(f);
  if (free.size() != 1) {
    throw ValidationError("satisfiability search needs exactly one free guise variable, found " +
                          std::to_string(free.size()));
  }
  if (model.universe().size() > guard) {
    throw BoundExceeded("universe has " + std::to_string(model.universe().size()) +
                        " marks; satisfiability search is limited to " + std::to_string(guard));
  }
  SatResult result;
  result.variable = free.front();
  std::vector<GuiseBinding> binding{{result.variable, {}, {}}};
  for_each_subset(model.universe().all(), [&](MarkSet candidate) {
    ++result.candidates_checked;
    binding.front().marks = candidate;
    if (!holds(f, model, binding)) return true;
    result.witness = candidate;
    return false;
  });
  return result;
}

}  // namespace guise

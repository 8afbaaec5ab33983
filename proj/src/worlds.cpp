#include "guise/worlds.hpp"

#include <algorithm>

#include "guise/closure.hpp"
#include "guise/error.hpp"

namespace guise {

std::vector<MarkSet> enumerate_closed_sets(const HornTheory& theory, const Universe& universe, std::size_t guard) {
  if (universe.size() > guard) {
    throw BoundExceeded("universe has " + std::to_string(universe.size()) +
                        " marks; closed-set enumeration is limited to " + std::to_string(guard));
  }
  std::vector<MarkSet> out;
  const std::uint64_t limit = std::uint64_t{1} << universe.size();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    const MarkSet s(bits);
    if (is_closed(s, theory) && is_consistent(s, theory)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::vector<MarkSet> enumerate_closed_sets(const GuiseModel& model, std::size_t guard) {
  return enumerate_closed_sets(model.theory(), model.universe(), guard);
}

WorldSet select_worlds(const GuiseModel& model, std::size_t guard) {
  WorldSet ws;
  ws.policy_used = model.world_policy().kind;
  switch (ws.policy_used) {
    case WorldPolicyKind::Declared:
      for (MarkSet w : model.world_policy().declared) {
        if (!is_closed(w, model.theory())) {
          throw ValidationError("declared world " + model.universe().format(w) + " is not T-closed");
        }
        ws.worlds.push_back(w);
      }
      break;
    case WorldPolicyKind::AllClosed:
      ws.worlds = enumerate_closed_sets(model, guard);
      break;
    case WorldPolicyKind::AllClosedNonEmpty:
      ws.worlds = enumerate_closed_sets(model, guard);
      std::erase_if(ws.worlds, [](MarkSet w) { return w.empty(); });
      break;
    case WorldPolicyKind::InclusionMaximal: {
      const std::vector<MarkSet> closed = enumerate_closed_sets(model, guard);
      for (MarkSet w : closed) {
        const bool dominated = std::any_of(closed.begin(), closed.end(),
                                           [&](MarkSet v) { return v != w && w.subset_of(v); });
        if (!dominated) ws.worlds.push_back(w);
      }
      break;
    }
  }
  for (MarkSet phi : model.announcements()) {
    std::erase_if(ws.worlds, [&](MarkSet w) { return !phi.subset_of(w); });
  }
  if (ws.worlds.empty()) {
    ws.warnings.push_back("world set is empty: box is vacuously true and diamond is false");
  }
  return ws;
}

bool eval_diamond(MarkSet phi, const WorldSet& worlds) { return diamond_witness(phi, worlds).has_value(); }

bool eval_box(MarkSet phi, const WorldSet& worlds) { return !box_counterexample(phi, worlds).has_value(); }

std::optional<MarkSet> diamond_witness(MarkSet phi, const WorldSet& worlds) {
  for (MarkSet w : worlds.worlds) {
    if (phi.subset_of(w)) return w;
  }
  return std::nullopt;
}

std::optional<MarkSet> box_counterexample(MarkSet phi, const WorldSet& worlds) {
  for (MarkSet w : worlds.worlds) {
    if (!phi.subset_of(w)) return w;
  }
  return std::nullopt;
}

GuiseModel announce(const GuiseModel& model, MarkSet phi) { return with_announcement(model, phi); }

}  // namespace guise

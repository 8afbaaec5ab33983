#include "guise/intention.hpp"

#include <algorithm>

#include "guise/closure.hpp"
#include "guise/error.hpp"

namespace guise {

namespace {

constexpr std::size_t kRefersSearchLimit = 16;

std::vector<MarkSet> downset_members(MarkSet closure, std::size_t bound) {
  if (closure.size() > bound) {
    throw BoundExceeded("intention set over a closure of " + std::to_string(closure.size()) +
                        " marks exceeds the bound " + std::to_string(bound));
  }
  return nonempty_subsets_of(closure);
}

}  // namespace

IntentionSet::IntentionSet(IntentionPolicy policy, MarkSet bundle, MarkSet closure, std::vector<std::size_t> members,
                           std::vector<MarkSet> member_marks)
    : policy_(policy),
      bundle_(bundle),
      closure_(closure),
      members_(std::move(members)),
      member_marks_(std::move(member_marks)) {}

bool IntentionSet::contains(MarkSet phi) const {
  if (is_implicit()) return !phi.empty() && phi.subset_of(closure_);
  return std::find(member_marks_.begin(), member_marks_.end(), phi) != member_marks_.end();
}

bool IntentionSet::contains_template(std::size_t index) const {
  return std::find(members_.begin(), members_.end(), index) != members_.end();
}

std::vector<MarkSet> IntentionSet::propositions(std::size_t bound) const {
  if (is_implicit()) return downset_members(closure_, bound);
  return member_marks_;
}

bool IntentionSet::included_in(const IntentionSet& other) const {
  if (is_implicit() && other.is_implicit()) return closure_.empty() || closure_.subset_of(other.closure_);
  if (!is_implicit() && !other.is_implicit()) {
    return std::all_of(members_.begin(), members_.end(), [&](std::size_t i) { return other.contains_template(i); });
  }
  // Mixed policies never occur within one model; compare by marks.
  const std::vector<MarkSet> mine = propositions();
  return std::all_of(mine.begin(), mine.end(), [&](MarkSet m) { return other.contains(m); });
}

bool IntentionSet::operator==(const IntentionSet& other) const {
  return included_in(other) && other.included_in(*this);
}

bool template_admits(const Template& t, MarkSet bundle, MarkSet closure) {
  if (!t.marks.subset_of(closure)) return false;
  switch (t.tag) {
    case TemplateTag::None: return true;
    case TemplateTag::Derived: return t.marks.intersects(closure - bundle);
    case TemplateTag::Given: return t.marks.subset_of(bundle);
  }
  return false;
}

IntentionSet intention_set(MarkSet g, const GuiseModel& model) {
  const MarkSet kg = close(g, model.theory());
  std::vector<std::size_t> members;
  std::vector<MarkSet> marks;
  if (model.intention_policy() != IntentionPolicy::CanonicalDownset) {
    const TemplateBase& base = *model.templates();
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (template_admits(base[i], g, kg)) {
        members.push_back(i);
        marks.push_back(base[i].marks);
      }
    }
  }
  return IntentionSet(model.intention_policy(), g, kg, std::move(members), std::move(marks));
}

bool intends(MarkSet g, MarkSet phi, const GuiseModel& model) {
  if (phi.empty()) return false;
  const MarkSet kg = close(g, model.theory());
  if (model.intention_policy() == IntentionPolicy::CanonicalDownset) return phi.subset_of(kg);
  const TemplateBase& base = *model.templates();
  return std::any_of(base.begin(), base.end(),
                     [&](const Template& t) { return t.marks == phi && template_admits(t, g, kg); });
}

RelationWitness relates(MarkSet g, MarkSet h, const GuiseModel& model) {
  const MarkSet kg = close(g, model.theory());
  if (model.intention_policy() == IntentionPolicy::CanonicalDownset) {
    const MarkSet shared = h & kg;
    if (shared.empty()) return {};
    return {true, MarkSet::singleton(shared.members().front()), std::nullopt};
  }
  const TemplateBase& base = *model.templates();
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (base[i].marks.subset_of(h) && template_admits(base[i], g, kg)) return {true, base[i].marks, i};
  }
  return {};
}

bool self_ascribes(MarkSet g, MarkSet phi, const GuiseModel& model) {
  return phi.subset_of(g) && intends(g, phi, model);
}

RelationWitness int_de_re(MarkSet g, MarkSet h, MarkId p, const GuiseModel& model) {
  const MarkSet kg = close(g, model.theory());
  const MarkSet kh = close(h, model.theory());
  if (model.intention_policy() == IntentionPolicy::CanonicalDownset) {
    if (!kg.contains(p) || !kh.contains(p)) return {};
    return {true, MarkSet::singleton(p), std::nullopt};
  }
  const TemplateBase& base = *model.templates();
  for (std::size_t i = 0; i < base.size(); ++i) {
    const Template& t = base[i];
    if (t.marks.contains(p) && t.marks.subset_of(kh) && template_admits(t, g, kg)) return {true, t.marks, i};
  }
  return {};
}

RelationWitness refers(MarkSet g, MarkSet h, const GuiseModel& model) {
  const MarkSet kg = close(g, model.theory());
  const MarkSet kh = close(h, model.theory());
  if (model.intention_policy() == IntentionPolicy::CanonicalDownset) {
    // Any qualifying phi lies inside κ(g) ∩ κ(h); by monotonicity the whole
    // intersection qualifies iff anything does.
    const MarkSet pool = kg & kh;
    if (pool.empty() || close(pool, model.theory()) != kh) return {};
    if (pool.size() > kRefersSearchLimit) return {true, pool, std::nullopt};
    std::optional<MarkSet> least;
    for_each_subset(pool, [&](MarkSet phi) {
      if (phi.empty() || close(phi, model.theory()) != kh) return true;
      least = phi;
      return false;
    });
    return {true, least, std::nullopt};
  }
  const TemplateBase& base = *model.templates();
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (template_admits(base[i], g, kg) && close(base[i].marks, model.theory()) == kh) {
      return {true, base[i].marks, i};
    }
  }
  return {};
}

HyperintensionalityResult is_hyperintensional(const GuiseModel& model) {
  const auto& guises = model.guises();
  std::vector<IntentionSet> sets;
  sets.reserve(guises.size());
  for (const Guise& g : guises) sets.push_back(intention_set(g.marks, model));
  for (std::size_t i = 0; i < guises.size(); ++i) {
    for (std::size_t j = i + 1; j < guises.size(); ++j) {
      if (sets[i].owner_closure() == sets[j].owner_closure() && !(sets[i] == sets[j])) return {true, {{i, j}}};
    }
  }
  return {};
}

bool PropositionUniverse::contains(MarkSet phi) const {
  if (all_nonempty) return !phi.empty() && phi.subset_of(marks);
  return std::find(listed.begin(), listed.end(), phi) != listed.end();
}

PropositionUniverse policy_universe(const GuiseModel& model) {
  if (model.intention_policy() == IntentionPolicy::CanonicalDownset) {
    return PropositionUniverse::nonempty_subsets(model.universe().all());
  }
  std::vector<MarkSet> props;
  for (const Template& t : *model.templates()) {
    if (std::find(props.begin(), props.end(), t.marks) == props.end()) props.push_back(t.marks);
  }
  return PropositionUniverse::of(std::move(props));
}

std::vector<MarkSet> lift_closure(std::span<const MarkSet> family, const HornTheory& theory,
                                  const PropositionUniverse& universe, std::size_t bound) {
  if (family.empty()) return {};
  MarkSet joined;
  for (MarkSet phi : family) joined |= phi;
  const MarkSet reach = close(joined, theory);
  if (universe.all_nonempty) return downset_members(reach & universe.marks, bound);
  std::vector<MarkSet> out;
  for (MarkSet psi : universe.listed) {
    if (psi.subset_of(reach)) out.push_back(psi);
  }
  return out;
}

}  // namespace guise

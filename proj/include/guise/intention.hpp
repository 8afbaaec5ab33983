#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "guise/mark_set.hpp"
#include "guise/model.hpp"

namespace guise {

/// The family J(g) of propositions a bundle intends.
///
/// Under the canonical downset policy the family is every non-empty subset
/// of the closure, so it is kept implicit: membership is a subset test and
/// nothing is enumerated unless `propositions` is asked for. Under the
/// template policies it is the list of admitted templates, in declaration
/// order.
class IntentionSet {
 public:
  IntentionSet(IntentionPolicy policy, MarkSet bundle, MarkSet closure, std::vector<std::size_t> members,
               std::vector<MarkSet> member_marks);

  IntentionPolicy policy() const { return policy_; }
  MarkSet bundle() const { return bundle_; }
  MarkSet owner_closure() const { return closure_; }
  bool is_implicit() const { return policy_ == IntentionPolicy::CanonicalDownset; }

  bool contains(MarkSet phi) const;
  /// Membership of a template by index; always false for the downset policy.
  bool contains_template(std::size_t index) const;
  /// Template indices of the members (empty for the downset policy).
  const std::vector<std::size_t>& template_members() const { return members_; }

  /// Members as propositions. Downset members come in canonical order and
  /// throw BoundExceeded if the closure has more than `bound` marks.
  std::vector<MarkSet> propositions(std::size_t bound = 20) const;

  /// Membership-wise inclusion. For tagged templates identity is the
  /// template, not its marks.
  bool included_in(const IntentionSet& other) const;
  bool operator==(const IntentionSet& other) const;

 private:
  IntentionPolicy policy_;
  MarkSet bundle_;
  MarkSet closure_;
  std::vector<std::size_t> members_;
  std::vector<MarkSet> member_marks_;
};

struct RelationWitness {
  bool holds = false;
  std::optional<MarkSet> witness;
  std::optional<std::size_t> template_index;  // set under template policies
};

/// Whether template `t` belongs to the intention set of a bundle with the
/// given closure. Untagged templates need only sit inside the closure;
/// "derived" ones must also use a mark the bundle itself lacks, "given"
/// ones must sit inside the bundle.
bool template_admits(const Template& t, MarkSet bundle, MarkSet closure);

IntentionSet intention_set(MarkSet g, const GuiseModel& model);

/// Int(g, phi).
bool intends(MarkSet g, MarkSet phi, const GuiseModel& model);

/// R(g, h): g intends something contained in h. The witness is the least
/// qualifying proposition: least singleton of h ∩ κ(g) under the downset
/// policy, first admitted template inside h otherwise.
RelationWitness relates(MarkSet g, MarkSet h, const GuiseModel& model);

/// Self(g, phi): g intends phi and phi lies in the bundle itself.
bool self_ascribes(MarkSet g, MarkSet phi, const GuiseModel& model);

/// g intends of h that p: some intended phi inside κ(h) contains p.
RelationWitness int_de_re(MarkSet g, MarkSet h, MarkId p, const GuiseModel& model);

/// ρ(g, h): some intended phi has the same closure as h.
RelationWitness refers(MarkSet g, MarkSet h, const GuiseModel& model);

struct HyperintensionalityResult {
  bool hyperintensional = false;
  std::optional<std::pair<std::size_t, std::size_t>> guises;  // indices into model.guises()
};

/// Looks for declared guises with equal closures but different intention
/// sets; reports the first such pair in declaration order.
HyperintensionalityResult is_hyperintensional(const GuiseModel& model);

/// The range of proposition variables: every non-empty subset of some
/// marks, or an explicit list.
struct PropositionUniverse {
  bool all_nonempty = true;
  MarkSet marks;
  std::vector<MarkSet> listed;

  static PropositionUniverse nonempty_subsets(MarkSet marks) { return {true, marks, {}}; }
  static PropositionUniverse of(std::vector<MarkSet> props) { return {false, {}, std::move(props)}; }

  bool contains(MarkSet phi) const;
};

/// All non-empty subsets of P under the downset policy, the distinct
/// template mark sets (declaration order) otherwise.
PropositionUniverse policy_universe(const GuiseModel& model);

/// κ⋄(S): the members of `universe` entailed by the union of some finite
/// subfamily of S. Monotonicity of κ makes the whole of S the only subfamily
/// worth checking, so this is {psi in universe : psi ⊆ κ(∪S)}. Empty S gives
/// the empty family.
std::vector<MarkSet> lift_closure(std::span<const MarkSet> family, const HornTheory& theory,
                                  const PropositionUniverse& universe, std::size_t bound = 20);

}  // namespace guise

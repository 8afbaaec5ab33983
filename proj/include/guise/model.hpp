#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "guise/document.hpp"
#include "guise/mark_set.hpp"
#include "guise/policy.hpp"

namespace guise {

/// The declared marks of a model, in declaration order.
class Universe {
 public:
  Universe() = default;
  /// Throws ValidationError on empty, duplicate or over-long name lists.
  explicit Universe(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  MarkSet all() const { return MarkSet::first_n(names_.size()); }
  const std::string& name(MarkId m) const { return names_.at(m); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<MarkId> find(std::string_view name) const;

  /// Names of the members, in declaration order.
  std::vector<std::string> names_of(MarkSet s) const;
  /// "{a, b}" style rendering.
  std::string format(MarkSet s) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, MarkId> index_;
};

struct HornRule {
  MarkSet body;
  std::optional<MarkId> head;  // nullopt: body is inconsistent

  bool derives_falsum() const { return !head.has_value(); }
  bool operator==(const HornRule&) const = default;
};

class HornTheory {
 public:
  HornTheory() = default;
  explicit HornTheory(std::vector<HornRule> rules) : rules_(std::move(rules)) {}

  std::span<const HornRule> rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }
  bool has_falsum_rules() const;

 private:
  std::vector<HornRule> rules_;
};

struct Guise {
  std::string name;
  MarkSet marks;
};

struct Template {
  MarkSet marks;
  TemplateTag tag = TemplateTag::None;
  bool operator==(const Template&) const = default;
};

using TemplateBase = std::vector<Template>;

struct WorldPolicy {
  WorldPolicyKind kind = WorldPolicyKind::AllClosedNonEmpty;
  std::vector<MarkSet> declared;  // only for Declared
};

struct Query {
  std::string name;
  std::string text;
};

/// A validated guise model. Immutable: the only way to obtain a modified
/// model is through operations that return a fresh copy (see `announce`).
class GuiseModel {
 public:
  const std::string& name() const { return name_; }
  const Universe& universe() const { return universe_; }
  const HornTheory& theory() const { return theory_; }
  const std::vector<Guise>& guises() const { return guises_; }
  const std::optional<TemplateBase>& templates() const { return templates_; }
  IntentionPolicy intention_policy() const { return intention_policy_; }
  const WorldPolicy& world_policy() const { return world_policy_; }
  const std::vector<Query>& queries() const { return queries_; }
  /// Propositions announced so far, oldest first.
  const std::vector<MarkSet>& announcements() const { return announcements_; }

  const Guise* find_guise(std::string_view name) const;

 private:
  friend GuiseModel validate_model(const ModelDocument& doc);
  friend GuiseModel with_announcement(const GuiseModel& model, MarkSet phi);

  std::string name_;
  Universe universe_;
  HornTheory theory_;
  std::vector<Guise> guises_;
  std::optional<TemplateBase> templates_;
  IntentionPolicy intention_policy_ = IntentionPolicy::CanonicalDownset;
  WorldPolicy world_policy_;
  std::vector<Query> queries_;
  std::vector<MarkSet> announcements_;
};

/// Resolves and checks a parsed document. Throws ValidationError naming the
/// offending element: unknown marks, duplicate names, empty universe,
/// template policies without templates, declared worlds that are not closed.
GuiseModel validate_model(const ModelDocument& doc);

/// Copy of `model` with `phi` appended to its announcement history.
GuiseModel with_announcement(const GuiseModel& model, MarkSet phi);

/// Deduplicated, membership-checked proposition. Throws ValidationError on
/// a name outside the universe.
MarkSet normalize_proposition(std::span<const std::string> names, const Universe& universe);

}  // namespace guise

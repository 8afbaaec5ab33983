#pragma once

#include <optional>
#include <string_view>

namespace guise {

enum class IntentionPolicy {
  CanonicalDownset,     // J(g) = non-empty subsets of the closure of g
  TemplateRestricted,   // J(g) = templates contained in the closure of g
  DerivationSensitive,  // templates, with derived/given tags consulted
};

enum class WorldPolicyKind {
  AllClosedNonEmpty,
  AllClosed,
  InclusionMaximal,
  Declared,
};

enum class TemplateTag {
  None,
  Derived,  // needs a mark obtained by derivation, not present in the bundle
  Given,    // must lie inside the bundle itself
};

std::string_view keyword(IntentionPolicy p);
std::string_view keyword(WorldPolicyKind p);
std::string_view keyword(TemplateTag t);

std::optional<IntentionPolicy> intention_policy_from(std::string_view word);
std::optional<WorldPolicyKind> world_policy_from(std::string_view word);
std::optional<TemplateTag> template_tag_from(std::string_view word);

}  // namespace guise

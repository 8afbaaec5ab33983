#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "guise/policy.hpp"

namespace guise {

struct SourceLocation {
  int line = 0;
  int column = 0;

  // Locations are diagnostic only; they never distinguish two documents.
  bool operator==(const SourceLocation&) const { return true; }
};

struct RuleDecl {
  std::vector<std::string> body;
  std::optional<std::string> head;  // nullopt: the rule derives falsum
  SourceLocation where;
  bool operator==(const RuleDecl&) const = default;
};

struct GuiseDecl {
  std::string name;
  std::vector<std::string> marks;
  SourceLocation where;
  bool operator==(const GuiseDecl&) const = default;
};

struct TemplateDecl {
  std::vector<std::string> marks;
  TemplateTag tag = TemplateTag::None;
  SourceLocation where;
  bool operator==(const TemplateDecl&) const = default;
};

struct WorldDecl {
  std::vector<std::string> marks;
  SourceLocation where;
  bool operator==(const WorldDecl&) const = default;
};

struct QueryDecl {
  std::string name;
  std::string text;
  SourceLocation where;
  bool operator==(const QueryDecl&) const = default;
};

/// A model file as written: names are unresolved strings, sections keep
/// their source order. `validate_model` turns this into a GuiseModel.
struct ModelDocument {
  std::string name;
  std::vector<std::string> marks;
  SourceLocation marks_where;
  std::vector<RuleDecl> rules;
  std::vector<GuiseDecl> guises;
  std::vector<TemplateDecl> templates;
  std::optional<IntentionPolicy> intention_policy;
  std::optional<WorldPolicyKind> world_policy;
  std::vector<WorldDecl> worlds;
  std::vector<QueryDecl> queries;

  bool operator==(const ModelDocument&) const = default;
};

/// Parses the line-oriented model format. Throws ParseError.
ModelDocument parse_model(std::string_view text);

/// Prints a document in the format `parse_model` reads.
std::string print_model(const ModelDocument& doc);

}  // namespace guise

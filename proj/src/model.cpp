#include "guise/model.hpp"

#include <algorithm>
#include <set>

#include "guise/closure.hpp"
#include "guise/error.hpp"

namespace guise {

namespace {

std::string at(const SourceLocation& where) {
  return where.line > 0 ? " (line " + std::to_string(where.line) + ")" : std::string{};
}

MarkSet resolve(const std::vector<std::string>& names, const Universe& universe, const std::string& context,
                const SourceLocation& where) {
  MarkSet out;
  for (const std::string& n : names) {
    const auto m = universe.find(n);
    if (!m) throw ValidationError("unknown mark '" + n + "' in " + context + at(where));
    out.insert(*m);
  }
  return out;
}

}  // namespace

std::string_view keyword(IntentionPolicy p) {
  switch (p) {
    case IntentionPolicy::CanonicalDownset: return "downset";
    case IntentionPolicy::TemplateRestricted: return "templates";
    case IntentionPolicy::DerivationSensitive: return "tagged";
  }
  return "?";
}

std::string_view keyword(WorldPolicyKind p) {
  switch (p) {
    case WorldPolicyKind::AllClosedNonEmpty: return "all-nonempty";
    case WorldPolicyKind::AllClosed: return "all";
    case WorldPolicyKind::InclusionMaximal: return "maximal";
    case WorldPolicyKind::Declared: return "declared";
  }
  return "?";
}

std::string_view keyword(TemplateTag t) {
  switch (t) {
    case TemplateTag::None: return "none";
    case TemplateTag::Derived: return "derived";
    case TemplateTag::Given: return "given";
  }
  return "?";
}

std::optional<IntentionPolicy> intention_policy_from(std::string_view word) {
  for (auto p : {IntentionPolicy::CanonicalDownset, IntentionPolicy::TemplateRestricted,
                 IntentionPolicy::DerivationSensitive}) {
    if (keyword(p) == word) return p;
  }
  return std::nullopt;
}

std::optional<WorldPolicyKind> world_policy_from(std::string_view word) {
  for (auto p : {WorldPolicyKind::AllClosedNonEmpty, WorldPolicyKind::AllClosed, WorldPolicyKind::InclusionMaximal,
                 WorldPolicyKind::Declared}) {
    if (keyword(p) == word) return p;
  }
  return std::nullopt;
}

std::optional<TemplateTag> template_tag_from(std::string_view word) {
  if (word == "derived") return TemplateTag::Derived;
  if (word == "given") return TemplateTag::Given;
  return std::nullopt;
}

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw ValidationError("empty universe: at least one mark is required");
  if (names_.size() > kMaxMarks) {
    throw ValidationError("universe has " + std::to_string(names_.size()) + " marks; at most " +
                          std::to_string(kMaxMarks) + " are supported");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw ValidationError("empty mark name");
    if (!index_.emplace(names_[i], static_cast<MarkId>(i)).second) {
      throw ValidationError("duplicate mark '" + names_[i] + "'");
    }
  }
}

std::optional<MarkId> Universe::find(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> Universe::names_of(MarkSet s) const {
  std::vector<std::string> out;
  for (MarkId m : s.members()) out.push_back(names_.at(m));
  return out;
}

std::string Universe::format(MarkSet s) const {
  std::string out = "{";
  bool first = true;
  for (MarkId m : s.members()) {
    if (!first) out += ", ";
    out += names_.at(m);
    first = false;
  }
  return out + "}";
}

bool HornTheory::has_falsum_rules() const {
  return std::any_of(rules_.begin(), rules_.end(), [](const HornRule& r) { return r.derives_falsum(); });
}

const Guise* GuiseModel::find_guise(std::string_view name) const {
  for (const Guise& g : guises_) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

GuiseModel validate_model(const ModelDocument& doc) {
  GuiseModel m;
  m.name_ = doc.name;
  m.universe_ = Universe(doc.marks);
  const Universe& u = m.universe_;

  std::vector<HornRule> rules;
  for (std::size_t i = 0; i < doc.rules.size(); ++i) {
    const RuleDecl& r = doc.rules[i];
    const std::string context = "rule " + std::to_string(i + 1);
    if (r.body.empty()) throw ValidationError("empty rule body in " + context + at(r.where));
    HornRule rule{resolve(r.body, u, context, r.where), std::nullopt};
    if (r.head) rule.head = resolve({*r.head}, u, context, r.where).members().front();
    rules.push_back(rule);
  }
  m.theory_ = HornTheory(std::move(rules));

  std::set<std::string> seen;
  for (const GuiseDecl& g : doc.guises) {
    if (g.name.empty()) throw ValidationError("guise without a name" + at(g.where));
    if (!seen.insert(g.name).second) throw ValidationError("duplicate guise '" + g.name + "'" + at(g.where));
    m.guises_.push_back({g.name, resolve(g.marks, u, "guise " + g.name, g.where)});
  }

  if (!doc.templates.empty()) {
    TemplateBase base;
    for (const TemplateDecl& t : doc.templates) {
      Template tpl{resolve(t.marks, u, "template", t.where), t.tag};
      if (tpl.marks.empty()) throw ValidationError("empty template" + at(t.where));
      if (std::find(base.begin(), base.end(), tpl) != base.end()) {
        throw ValidationError("duplicate template " + u.format(tpl.marks) + at(t.where));
      }
      base.push_back(tpl);
    }
    m.templates_ = std::move(base);
  }

  m.intention_policy_ = doc.intention_policy.value_or(IntentionPolicy::CanonicalDownset);
  if (m.intention_policy_ != IntentionPolicy::CanonicalDownset && !m.templates_) {
    throw ValidationError("intention policy '" + std::string(keyword(m.intention_policy_)) +
                          "' requires a templates section");
  }
  if (m.templates_ && m.intention_policy_ != IntentionPolicy::DerivationSensitive) {
    for (const Template& t : *m.templates_) {
      if (t.tag != TemplateTag::None) {
        throw ValidationError("tagged template " + u.format(t.marks) + " requires 'policy intention: tagged'");
      }
    }
  }

  m.world_policy_.kind =
      doc.world_policy.value_or(doc.worlds.empty() ? WorldPolicyKind::AllClosedNonEmpty : WorldPolicyKind::Declared);
  if (m.world_policy_.kind == WorldPolicyKind::Declared) {
    if (doc.worlds.empty()) throw ValidationError("world policy 'declared' but no world lines");
    for (const WorldDecl& w : doc.worlds) {
      const MarkSet world = resolve(w.marks, u, "world", w.where);
      if (!is_closed(world, m.theory_)) {
        throw ValidationError("declared world " + u.format(world) + " is not T-closed (closure is " +
                              u.format(close(world, m.theory_)) + ")" + at(w.where));
      }
      if (!is_consistent(world, m.theory_)) {
        throw ValidationError("declared world " + u.format(world) + " is inconsistent" + at(w.where));
      }
      m.world_policy_.declared.push_back(world);
    }
  } else if (!doc.worlds.empty()) {
    throw ValidationError("world lines given but world policy is '" + std::string(keyword(m.world_policy_.kind)) +
                          "'");
  }

  seen.clear();
  for (const QueryDecl& q : doc.queries) {
    if (!seen.insert(q.name).second) throw ValidationError("duplicate query '" + q.name + "'" + at(q.where));
    m.queries_.push_back({q.name, q.text});
  }
  return m;
}

GuiseModel with_announcement(const GuiseModel& model, MarkSet phi) {
  GuiseModel next = model;
  next.announcements_.push_back(phi);
  return next;
}

MarkSet normalize_proposition(std::span<const std::string> names, const Universe& universe) {
  MarkSet out;
  for (const std::string& n : names) {
    const auto m = universe.find(n);
    if (!m) throw ValidationError("unknown mark '" + n + "'");
    out.insert(*m);
  }
  return out;
}

}  // namespace guise

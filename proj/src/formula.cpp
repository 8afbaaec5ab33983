#include "guise/formula.hpp"

#include <algorithm>
#include <cctype>

#include "guise/closure.hpp"
#include "guise/error.hpp"
#include "guise/intention.hpp"
#include "guise/worlds.hpp"

namespace guise {

namespace {

constexpr std::size_t kTraceLimit = 64;

struct Tok {
  enum class Kind { Name, LBrace, RBrace, LParen, RParen, Comma, Dot, Arrow, End };
  Kind kind = Kind::End;
  std::string text;
  int column = 0;
};

std::vector<Tok> lex(std::string_view s) {
  std::vector<Tok> out;
  std::size_t i = 0;
  while (true) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const int col = static_cast<int>(i) + 1;
    if (i >= s.size()) {
      out.push_back({Tok::Kind::End, "end of input", col});
      return out;
    }
    const char c = s[i];
    auto single = [&](Tok::Kind k) {
      out.push_back({k, std::string(1, c), col});
      ++i;
    };
    switch (c) {
      case '{': single(Tok::Kind::LBrace); continue;
      case '}': single(Tok::Kind::RBrace); continue;
      case '(': single(Tok::Kind::LParen); continue;
      case ')': single(Tok::Kind::RParen); continue;
      case ',': single(Tok::Kind::Comma); continue;
      case '.': single(Tok::Kind::Dot); continue;
      default: break;
    }
    if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({Tok::Kind::Arrow, "->", col});
      i += 2;
      continue;
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'') {
      const std::size_t start = i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '\'')) ++i;
      out.push_back({Tok::Kind::Name, std::string(s.substr(start, i - start)), col});
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", 1, col);
  }
}

enum class Sort { Guise, Mark };

class Parser {
 public:
  Parser(std::string_view text, const GuiseModel& model, const FormulaOptions& options)
      : toks_(lex(text)), model_(model), options_(options) {}

  Formula parse() {
    Formula f = implication();
    if (peek().kind != Tok::Kind::End) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Tok& peek() const { return toks_[pos_]; }
  bool at_name(std::string_view word) const { return peek().kind == Tok::Kind::Name && peek().text == word; }
  Tok take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, 1, peek().column); }
  Tok expect(Tok::Kind kind, std::string_view what) {
    if (peek().kind != kind) fail("expected " + std::string(what) + ", found '" + peek().text + "'");
    return take();
  }

  Formula binary(Formula::Kind kind, Formula lhs, Formula rhs) {
    Formula f;
    f.kind = kind;
    f.children.push_back(std::move(lhs));
    f.children.push_back(std::move(rhs));
    return f;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (peek().kind != Tok::Kind::Arrow) return lhs;
    take();
    return binary(Formula::Kind::Implies, std::move(lhs), implication());
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    while (at_name("or")) {
      take();
      lhs = binary(Formula::Kind::Or, std::move(lhs), conjunction());
    }
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    while (at_name("and")) {
      take();
      lhs = binary(Formula::Kind::And, std::move(lhs), unary());
    }
    return lhs;
  }

  Formula unary() {
    if (peek().kind == Tok::Kind::LParen) {
      take();
      Formula inner = implication();
      expect(Tok::Kind::RParen, "')'");
      return inner;
    }
    if (peek().kind != Tok::Kind::Name) fail("expected a formula, found '" + peek().text + "'");
    const std::string word = peek().text;
    if (word == "not") {
      take();
      Formula f;
      f.kind = Formula::Kind::Not;
      f.children.push_back(unary());
      return f;
    }
    if (word == "forall" || word == "exists") return quantifier(word == "forall");
    if (word == "box" || word == "diamond") {
      take();
      if (peek().kind != Tok::Kind::LBrace) fail("modal operator takes a proposition");
      Formula f;
      f.kind = word == "box" ? Formula::Kind::Box : Formula::Kind::Diamond;
      f.prop = prop();
      return f;
    }
    return atom();
  }

  Formula quantifier(bool universal) {
    take();
    Sort sort = Sort::Guise;
    if (at_name("mark")) {
      take();
      sort = Sort::Mark;
    }
    const Tok v = expect(Tok::Kind::Name, "a variable name");
    for (const auto& [name, s] : scope_) {
      if (name == v.text) throw ValidationError("variable '" + v.text + "' is already bound");
    }
    expect(Tok::Kind::Dot, "'.'");
    scope_.emplace_back(v.text, sort);
    Formula body = implication();
    scope_.pop_back();
    Formula f;
    if (sort == Sort::Guise) {
      f.kind = universal ? Formula::Kind::ForallGuise : Formula::Kind::ExistsGuise;
    } else {
      f.kind = universal ? Formula::Kind::ForallMark : Formula::Kind::ExistsMark;
    }
    f.var = v.text;
    f.children.push_back(std::move(body));
    return f;
  }

  Formula atom() {
    const Tok head = take();
    Formula f;
    const std::string& w = head.text;
    if (w == "Int" || w == "Self" || w == "contains") {
      f.kind = w == "Int" ? Formula::Kind::Int : w == "Self" ? Formula::Kind::Self : Formula::Kind::Contains;
      open();
      f.guises.push_back(guise_term());
      comma();
      f.prop = prop();
      close_paren();
    } else if (w == "R" || w == "Refers") {
      f.kind = w == "R" ? Formula::Kind::R : Formula::Kind::Refers;
      open();
      f.guises.push_back(guise_term());
      comma();
      f.guises.push_back(guise_term());
      close_paren();
    } else if (w == "IntDeRe") {
      f.kind = Formula::Kind::IntDeRe;
      open();
      f.guises.push_back(guise_term());
      comma();
      f.guises.push_back(guise_term());
      comma();
      f.mark = mark_ref();
      close_paren();
    } else if (w == "pred") {
      f.kind = Formula::Kind::MarkPred;
      open();
      f.mark = mark_ref();
      comma();
      f.guises.push_back(guise_term());
      close_paren();
    } else {
      throw ParseError("unknown operator '" + w + "'", 1, head.column);
    }
    return f;
  }

  void open() { expect(Tok::Kind::LParen, "'('"); }
  void comma() { expect(Tok::Kind::Comma, "','"); }
  void close_paren() { expect(Tok::Kind::RParen, "')'"); }

  std::optional<Sort> bound_sort(const std::string& name) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->first == name) return it->second;
    }
    return std::nullopt;
  }

  PropTerm prop() {
    expect(Tok::Kind::LBrace, "'{'");
    PropTerm p;
    while (peek().kind == Tok::Kind::Name) p.marks.push_back(mark_ref());
    expect(Tok::Kind::RBrace, "'}'");
    return p;
  }

  MarkRef mark_ref() {
    const Tok t = expect(Tok::Kind::Name, "a mark");
    if (const auto s = bound_sort(t.text)) {
      if (*s != Sort::Mark) throw ValidationError("'" + t.text + "' is a guise variable, not a mark");
      return {std::nullopt, t.text};
    }
    const auto id = model_.universe().find(t.text);
    if (!id) throw ValidationError("unknown mark '" + t.text + "'");
    return {id, {}};
  }

  GuiseTerm guise_term() {
    GuiseTerm g;
    if (peek().kind == Tok::Kind::LBrace) {
      g.kind = GuiseTerm::Kind::Literal;
      g.literal = prop();
      return g;
    }
    const Tok t = expect(Tok::Kind::Name, "a guise");
    if (const auto s = bound_sort(t.text)) {
      if (*s != Sort::Guise) throw ValidationError("'" + t.text + "' is a mark variable, not a guise");
      g.kind = GuiseTerm::Kind::Variable;
      g.var = t.text;
      return g;
    }
    const auto& guises = model_.guises();
    const auto it = std::find_if(guises.begin(), guises.end(), [&](const Guise& x) { return x.name == t.text; });
    if (it != guises.end()) {
      g.kind = GuiseTerm::Kind::Named;
      g.guise_index = static_cast<std::size_t>(it - guises.begin());
      return g;
    }
    if (options_.allow_free_guise_vars) {
      g.kind = GuiseTerm::Kind::Variable;
      g.var = t.text;
      return g;
    }
    throw ValidationError("unknown guise '" + t.text + "'");
  }

  std::vector<Tok> toks_;
  std::size_t pos_ = 0;
  const GuiseModel& model_;
  FormulaOptions options_;
  std::vector<std::pair<std::string, Sort>> scope_;
};

void collect_free(const Formula& f, std::vector<std::string>& bound, std::vector<std::string>& out) {
  for (const GuiseTerm& g : f.guises) {
    if (g.kind != GuiseTerm::Kind::Variable) continue;
    if (std::find(bound.begin(), bound.end(), g.var) != bound.end()) continue;
    if (std::find(out.begin(), out.end(), g.var) == out.end()) out.push_back(g.var);
  }
  const bool binds = f.kind == Formula::Kind::ForallGuise || f.kind == Formula::Kind::ExistsGuise;
  if (binds) bound.push_back(f.var);
  for (const Formula& c : f.children) collect_free(c, bound, out);
  if (binds) bound.pop_back();
}

std::string prop_text(const PropTerm& p, const GuiseModel& model) {
  std::string out = "{";
  for (const MarkRef& m : p.marks) out += " " + (m.id ? model.universe().name(*m.id) : m.var);
  return out + " }";
}

std::string guise_text(const GuiseTerm& g, const GuiseModel& model) {
  switch (g.kind) {
    case GuiseTerm::Kind::Named: return model.guises()[g.guise_index].name;
    case GuiseTerm::Kind::Variable: return g.var;
    case GuiseTerm::Kind::Literal: return prop_text(g.literal, model);
  }
  return "?";
}

std::string_view op_name(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Contains: return "contains";
    case Formula::Kind::MarkPred: return "pred";
    case Formula::Kind::Int: return "Int";
    case Formula::Kind::R: return "R";
    case Formula::Kind::Self: return "Self";
    case Formula::Kind::IntDeRe: return "IntDeRe";
    case Formula::Kind::Refers: return "Refers";
    case Formula::Kind::Box: return "box";
    case Formula::Kind::Diamond: return "diamond";
    case Formula::Kind::Not: return "not";
    case Formula::Kind::And: return "and";
    case Formula::Kind::Or: return "or";
    case Formula::Kind::Implies: return "->";
    case Formula::Kind::ForallGuise:
    case Formula::Kind::ForallMark: return "forall";
    case Formula::Kind::ExistsGuise:
    case Formula::Kind::ExistsMark: return "exists";
  }
  return "?";
}

struct GuiseValue {
  std::string var;
  MarkSet marks;
  std::string label;
};

struct MarkValue {
  std::string var;
  MarkId mark;
};

class Evaluator {
 public:
  Evaluator(const GuiseModel& model, EvalResult* record) : model_(model), record_(record) {}

  std::vector<GuiseValue> guise_env;
  std::vector<MarkValue> mark_env;

  bool eval(const Formula& f) {
    switch (f.kind) {
      case Formula::Kind::Not: return !eval(f.children[0]);
      case Formula::Kind::And: return eval(f.children[0]) && eval(f.children[1]);
      case Formula::Kind::Or: return eval(f.children[0]) || eval(f.children[1]);
      case Formula::Kind::Implies: return !eval(f.children[0]) || eval(f.children[1]);
      case Formula::Kind::ForallGuise:
      case Formula::Kind::ExistsGuise: return guise_quantifier(f);
      case Formula::Kind::ForallMark:
      case Formula::Kind::ExistsMark: return mark_quantifier(f);
      default: return atom(f);
    }
  }

 private:
  bool guise_quantifier(const Formula& f) {
    const bool universal = f.kind == Formula::Kind::ForallGuise;
    for (const Guise& g : model_.guises()) {
      guise_env.push_back({f.var, g.marks, g.name});
      const bool v = eval(f.children[0]);
      guise_env.pop_back();
      if (v != universal) {
        if (record_)
          log(std::string(op_name(f.kind)) + " " + f.var, !universal, g.marks,
            (universal ? "counterexample " : "witness ") + f.var + " = " + g.name);
        return !universal;
      }
    }
    return universal;
  }

  bool mark_quantifier(const Formula& f) {
    const bool universal = f.kind == Formula::Kind::ForallMark;
    for (MarkId p = 0; p < model_.universe().size(); ++p) {
      mark_env.push_back({f.var, p});
      const bool v = eval(f.children[0]);
      mark_env.pop_back();
      if (v != universal) {
        if (record_)
          log(std::string(op_name(f.kind)) + " mark " + f.var, !universal, MarkSet::singleton(p),
            (universal ? "counterexample " : "witness ") + f.var + " = " + model_.universe().name(p));
        return !universal;
      }
    }
    return universal;
  }

  MarkId mark_of(const MarkRef& m) const {
    if (m.id) return *m.id;
    for (auto it = mark_env.rbegin(); it != mark_env.rend(); ++it) {
      if (it->var == m.var) return it->mark;
    }
    throw ValidationError("unbound mark variable '" + m.var + "'");
  }

  MarkSet prop_of(const PropTerm& p) const {
    MarkSet out;
    for (const MarkRef& m : p.marks) out.insert(mark_of(m));
    return out;
  }

  const GuiseValue* lookup(const std::string& var) const {
    for (auto it = guise_env.rbegin(); it != guise_env.rend(); ++it) {
      if (it->var == var) return &*it;
    }
    return nullptr;
  }

  MarkSet bundle_of(const GuiseTerm& g) const {
    switch (g.kind) {
      case GuiseTerm::Kind::Named: return model_.guises()[g.guise_index].marks;
      case GuiseTerm::Kind::Literal: return prop_of(g.literal);
      case GuiseTerm::Kind::Variable:
        if (const GuiseValue* v = lookup(g.var)) return v->marks;
        throw ValidationError("unbound guise variable '" + g.var + "'");
    }
    return {};
  }

  std::string label_of(const GuiseTerm& g) const {
    switch (g.kind) {
      case GuiseTerm::Kind::Named: return model_.guises()[g.guise_index].name;
      case GuiseTerm::Kind::Literal: return model_.universe().format(prop_of(g.literal));
      case GuiseTerm::Kind::Variable:
        if (const GuiseValue* v = lookup(g.var)) return v->label;
        return g.var;
    }
    return "?";
  }

  std::string atom_label(const Formula& f) const {
    const std::string op(op_name(f.kind));
    switch (f.kind) {
      case Formula::Kind::Box:
      case Formula::Kind::Diamond: return op + " " + model_.universe().format(prop_of(f.prop));
      case Formula::Kind::MarkPred:
        return op + "(" + model_.universe().name(mark_of(f.mark)) + ", " + label_of(f.guises[0]) + ")";
      case Formula::Kind::IntDeRe:
        return op + "(" + label_of(f.guises[0]) + ", " + label_of(f.guises[1]) + ", " +
               model_.universe().name(mark_of(f.mark)) + ")";
      case Formula::Kind::R:
      case Formula::Kind::Refers: return op + "(" + label_of(f.guises[0]) + ", " + label_of(f.guises[1]) + ")";
      default: return op + "(" + label_of(f.guises[0]) + ", " + model_.universe().format(prop_of(f.prop)) + ")";
    }
  }

  const WorldSet& worlds() {
    if (!worlds_) worlds_ = select_worlds(model_);
    return *worlds_;
  }

  bool atom(const Formula& f) {
    bool value = false;
    std::optional<MarkSet> witness;
    std::string note;
    switch (f.kind) {
      case Formula::Kind::Contains: value = prop_of(f.prop).subset_of(bundle_of(f.guises[0])); break;
      case Formula::Kind::MarkPred:
        value = close(bundle_of(f.guises[0]), model_.theory()).contains(mark_of(f.mark));
        break;
      case Formula::Kind::Int: value = intends(bundle_of(f.guises[0]), prop_of(f.prop), model_); break;
      case Formula::Kind::Self: value = self_ascribes(bundle_of(f.guises[0]), prop_of(f.prop), model_); break;
      case Formula::Kind::R: {
        const RelationWitness r = relates(bundle_of(f.guises[0]), bundle_of(f.guises[1]), model_);
        value = r.holds;
        witness = r.witness;
        break;
      }
      case Formula::Kind::Refers: {
        const RelationWitness r = refers(bundle_of(f.guises[0]), bundle_of(f.guises[1]), model_);
        value = r.holds;
        witness = r.witness;
        break;
      }
      case Formula::Kind::IntDeRe: {
        const RelationWitness r = int_de_re(bundle_of(f.guises[0]), bundle_of(f.guises[1]), mark_of(f.mark), model_);
        value = r.holds;
        witness = r.witness;
        break;
      }
      case Formula::Kind::Box: {
        const WorldSet& ws = worlds();
        witness = box_counterexample(prop_of(f.prop), ws);
        value = !witness.has_value();
        if (witness) note = "world lacking the proposition";
        if (ws.empty()) note = "empty world set";
        break;
      }
      case Formula::Kind::Diamond: {
        const WorldSet& ws = worlds();
        witness = diamond_witness(prop_of(f.prop), ws);
        value = witness.has_value();
        if (witness) note = "world containing the proposition";
        if (ws.empty()) note = "empty world set";
        break;
      }
      default: throw Error("not an atom");
    }
    if (record_) log(atom_label(f), value, witness, std::move(note));
    return value;
  }

  void log(std::string atom, bool value, std::optional<MarkSet> witness, std::string note) {
    if (!record_) return;
    if (record_->trace.size() >= kTraceLimit) {
      record_->trace_truncated = true;
      return;
    }
    record_->trace.push_back({std::move(atom), value, witness, std::move(note)});
  }

  const GuiseModel& model_;
  EvalResult* record_;
  std::optional<WorldSet> worlds_;
};

}  // namespace

Formula parse_formula(std::string_view text, const GuiseModel& model, const FormulaOptions& options) {
  return Parser(text, model, options).parse();
}

std::vector<std::string> free_guise_variables(const Formula& f) {
  std::vector<std::string> bound;
  std::vector<std::string> out;
  collect_free(f, bound, out);
  return out;
}

std::string to_string(const Formula& f, const GuiseModel& model) {
  const std::string op(op_name(f.kind));
  switch (f.kind) {
    case Formula::Kind::Contains:
    case Formula::Kind::Int:
    case Formula::Kind::Self:
      return op + "(" + guise_text(f.guises[0], model) + ", " + prop_text(f.prop, model) + ")";
    case Formula::Kind::MarkPred:
      return op + "(" + (f.mark.id ? model.universe().name(*f.mark.id) : f.mark.var) + ", " +
             guise_text(f.guises[0], model) + ")";
    case Formula::Kind::R:
    case Formula::Kind::Refers:
      return op + "(" + guise_text(f.guises[0], model) + ", " + guise_text(f.guises[1], model) + ")";
    case Formula::Kind::IntDeRe:
      return op + "(" + guise_text(f.guises[0], model) + ", " + guise_text(f.guises[1], model) + ", " +
             (f.mark.id ? model.universe().name(*f.mark.id) : f.mark.var) + ")";
    case Formula::Kind::Box:
    case Formula::Kind::Diamond: return op + " " + prop_text(f.prop, model);
    case Formula::Kind::Not: return "not " + to_string(f.children[0], model);
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return "(" + to_string(f.children[0], model) + " " + op + " " + to_string(f.children[1], model) + ")";
    case Formula::Kind::ForallGuise:
    case Formula::Kind::ExistsGuise: return "(" + op + " " + f.var + ". " + to_string(f.children[0], model) + ")";
    case Formula::Kind::ForallMark:
    case Formula::Kind::ExistsMark:
      return "(" + op + " mark " + f.var + ". " + to_string(f.children[0], model) + ")";
  }
  return "?";
}

EvalResult eval_formula(const Formula& f, const GuiseModel& model, std::string text,
                        const std::vector<GuiseBinding>& free) {
  EvalResult result;
  result.formula = text.empty() ? to_string(f, model) : std::move(text);
  const auto start = std::chrono::steady_clock::now();
  Evaluator ev(model, &result);
  for (const GuiseBinding& b : free) ev.guise_env.push_back({b.var, b.marks, b.label});
  result.verdict = ev.eval(f);
  result.elapsed =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
  return result;
}

bool holds(const Formula& f, const GuiseModel& model, const std::vector<GuiseBinding>& free) {
  Evaluator ev(model, nullptr);
  for (const GuiseBinding& b : free) ev.guise_env.push_back({b.var, b.marks, b.label});
  return ev.eval(f);
}

}  // namespace guise

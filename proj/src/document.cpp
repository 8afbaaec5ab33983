#include <cctype>

#include "guise/document.hpp"
#include "guise/error.hpp"

namespace guise {

namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\'';
}

struct Token {
  enum class Kind { Name, LBrace, RBrace, Equals, Colon, Arrow, End };
  Kind kind = Kind::End;
  std::string text;
  int column = 0;
};

// Splits one (comment-stripped) line into tokens.
class LineLexer {
 public:
  LineLexer(std::string_view line, int line_no) : line_(line), line_no_(line_no) { advance(); }

  const Token& peek() const { return current_; }
  int line() const { return line_no_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  Token expect(Token::Kind kind, std::string_view what) {
    if (current_.kind != kind) fail("expected " + std::string(what));
    return take();
  }

  void expect_end() {
    if (current_.kind != Token::Kind::End) fail("unexpected '" + current_.text + "'");
  }

  /// Raw text from the current token to the end of the line, trimmed.
  std::string rest() {
    std::size_t from = static_cast<std::size_t>(current_.column > 0 ? current_.column - 1 : line_.size());
    std::string out(line_.substr(std::min(from, line_.size())));
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    pos_ = line_.size();
    current_ = {Token::Kind::End, "", static_cast<int>(line_.size()) + 1};
    return out;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_no_, current_.column); }

  std::vector<std::string> mark_list() {
    std::vector<std::string> out;
    while (current_.kind == Token::Kind::Name) out.push_back(take().text);
    return out;
  }

  std::vector<std::string> braced_set() {
    expect(Token::Kind::LBrace, "'{'");
    std::vector<std::string> marks = mark_list();
    expect(Token::Kind::RBrace, "'}'");
    return marks;
  }

 private:
  void advance() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
    const int col = static_cast<int>(pos_) + 1;
    if (pos_ >= line_.size()) {
      current_ = {Token::Kind::End, "", col};
      return;
    }
    const char c = line_[pos_];
    auto single = [&](Token::Kind k) {
      current_ = {k, std::string(1, c), col};
      ++pos_;
    };
    switch (c) {
      case '{': single(Token::Kind::LBrace); return;
      case '}': single(Token::Kind::RBrace); return;
      case '=': single(Token::Kind::Equals); return;
      case ':': single(Token::Kind::Colon); return;
      default: break;
    }
    if (c == '-' && pos_ + 1 < line_.size() && line_[pos_ + 1] == '>') {
      current_ = {Token::Kind::Arrow, "->", col};
      pos_ += 2;
      return;
    }
    if (is_name_char(c)) {
      const std::size_t start = pos_;
      while (pos_ < line_.size() && is_name_char(line_[pos_])) ++pos_;
      current_ = {Token::Kind::Name, std::string(line_.substr(start, pos_ - start)), col};
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_no_, col);
  }

  std::string_view line_;
  int line_no_;
  std::size_t pos_ = 0;
  Token current_;
};

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

void print_set(std::string& out, const std::vector<std::string>& marks) {
  out += "{";
  for (const std::string& m : marks) out += " " + m;
  out += " }";
}

}  // namespace

ModelDocument parse_model(std::string_view text) {
  ModelDocument doc;
  bool have_marks = false;
  bool have_name = false;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    start = end + 1;
    ++line_no;

    LineLexer lx(strip_comment(raw), line_no);
    if (lx.peek().kind == Token::Kind::End) continue;
    const Token head = lx.expect(Token::Kind::Name, "a section keyword");
    const SourceLocation where{line_no, head.column};

    if (head.text == "model") {
      if (have_name) throw ParseError("duplicate section 'model'", line_no, head.column);
      lx.expect(Token::Kind::Colon, "':'");
      doc.name = lx.expect(Token::Kind::Name, "a model name").text;
      lx.expect_end();
      have_name = true;
    } else if (head.text == "marks") {
      if (have_marks) throw ParseError("duplicate section 'marks'", line_no, head.column);
      lx.expect(Token::Kind::Colon, "':'");
      doc.marks = lx.mark_list();
      doc.marks_where = where;
      lx.expect_end();
      have_marks = true;
    } else if (head.text == "rule") {
      lx.expect(Token::Kind::Colon, "':'");
      RuleDecl r;
      r.where = where;
      r.body = lx.mark_list();
      lx.expect(Token::Kind::Arrow, "'->'");
      const Token h = lx.expect(Token::Kind::Name, "a head mark or 'false'");
      if (h.text != "false") r.head = h.text;
      lx.expect_end();
      doc.rules.push_back(std::move(r));
    } else if (head.text == "guise") {
      GuiseDecl g;
      g.where = where;
      g.name = lx.expect(Token::Kind::Name, "a guise name").text;
      lx.expect(Token::Kind::Equals, "'='");
      g.marks = lx.braced_set();
      lx.expect_end();
      doc.guises.push_back(std::move(g));
    } else if (head.text == "templates") {
      lx.expect(Token::Kind::Colon, "':'");
      while (lx.peek().kind == Token::Kind::LBrace) {
        const int col = lx.peek().column;
        doc.templates.push_back({lx.braced_set(), TemplateTag::None, {line_no, col}});
      }
      lx.expect_end();
    } else if (head.text == "template") {
      const Token kw = lx.expect(Token::Kind::Name, "'tagged'");
      if (kw.text != "tagged") throw ParseError("expected 'tagged'", line_no, kw.column);
      const Token tag = lx.expect(Token::Kind::Name, "a tag");
      const auto parsed = template_tag_from(tag.text);
      if (!parsed) throw ParseError("unknown template tag '" + tag.text + "'", line_no, tag.column);
      lx.expect(Token::Kind::Colon, "':'");
      doc.templates.push_back({lx.braced_set(), *parsed, where});
      lx.expect_end();
    } else if (head.text == "policy") {
      const Token which = lx.expect(Token::Kind::Name, "'intention' or 'worlds'");
      lx.expect(Token::Kind::Colon, "':'");
      const int col = lx.peek().column;
      const std::string word = lx.rest();
      if (which.text == "intention") {
        if (doc.intention_policy) throw ParseError("duplicate section 'policy intention'", line_no, head.column);
        doc.intention_policy = intention_policy_from(word);
        if (!doc.intention_policy) throw ParseError("unknown intention policy '" + word + "'", line_no, col);
      } else if (which.text == "worlds") {
        if (doc.world_policy) throw ParseError("duplicate section 'policy worlds'", line_no, head.column);
        doc.world_policy = world_policy_from(word);
        if (!doc.world_policy) throw ParseError("unknown world policy '" + word + "'", line_no, col);
      } else {
        throw ParseError("unknown policy '" + which.text + "'", line_no, which.column);
      }
    } else if (head.text == "world") {
      lx.expect(Token::Kind::Colon, "':'");
      doc.worlds.push_back({lx.braced_set(), where});
      lx.expect_end();
    } else if (head.text == "query") {
      QueryDecl q;
      q.where = where;
      q.name = lx.expect(Token::Kind::Name, "a query name").text;
      lx.expect(Token::Kind::Equals, "'='");
      q.text = lx.rest();
      if (q.text.empty()) throw ParseError("empty query", line_no, head.column);
      doc.queries.push_back(std::move(q));
    } else {
      throw ParseError("unknown keyword '" + head.text + "'", line_no, head.column);
    }
  }
  if (!have_marks) throw ParseError("missing marks section", line_no, 1);
  return doc;
}

std::string print_model(const ModelDocument& doc) {
  std::string out;
  if (!doc.name.empty()) out += "model: " + doc.name + "\n";
  out += "marks:";
  for (const std::string& m : doc.marks) out += " " + m;
  out += "\n";
  for (const RuleDecl& r : doc.rules) {
    out += "rule:";
    for (const std::string& m : r.body) out += " " + m;
    out += " -> " + r.head.value_or("false") + "\n";
  }
  for (const GuiseDecl& g : doc.guises) {
    out += "guise " + g.name + " = ";
    print_set(out, g.marks);
    out += "\n";
  }
  // Consecutive untagged templates share a line; order is preserved.
  bool open_line = false;
  for (const TemplateDecl& t : doc.templates) {
    if (t.tag == TemplateTag::None) {
      out += open_line ? " " : "templates: ";
      print_set(out, t.marks);
      open_line = true;
      continue;
    }
    if (open_line) out += "\n";
    open_line = false;
    out += "template tagged " + std::string(keyword(t.tag)) + ": ";
    print_set(out, t.marks);
    out += "\n";
  }
  if (open_line) out += "\n";
  if (doc.intention_policy) out += "policy intention: " + std::string(keyword(*doc.intention_policy)) + "\n";
  if (doc.world_policy) out += "policy worlds: " + std::string(keyword(*doc.world_policy)) + "\n";
  for (const WorldDecl& w : doc.worlds) {
    out += "world: ";
    print_set(out, w.marks);
    out += "\n";
  }
  for (const QueryDecl& q : doc.queries) out += "query " + q.name + " = " + q.text + "\n";
  return out;
}

}  // namespace guise

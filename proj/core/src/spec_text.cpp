#include "landin/spec_text.hpp"

#include <algorithm>
#include <cctype>

#include "landin/error.hpp"

namespace landin {

PathExpr PathExpr::make_atom(Symbol s) {
  PathExpr e;
  e.kind = Kind::atom;
  e.symbol = s;
  return e;
}

namespace {

// Nested same-kind nodes are flattened so parsing is canonical.
std::vector<PathExpr> flatten(PathExpr::Kind kind, std::vector<PathExpr> parts) {
  std::vector<PathExpr> out;
  for (PathExpr& p : parts) {
    if (p.kind == kind) {
      for (PathExpr& c : p.children) out.push_back(std::move(c));
    } else {
      out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace

PathExpr PathExpr::make_seq(std::vector<PathExpr> parts) {
  if (parts.size() == 1) return std::move(parts.front());
  PathExpr e;
  e.kind = Kind::seq;
  e.children = flatten(Kind::seq, std::move(parts));
  return e;
}

PathExpr PathExpr::make_choice(std::vector<PathExpr> parts) {
  if (parts.size() == 1) return std::move(parts.front());
  PathExpr e;
  e.kind = Kind::choice;
  e.children = flatten(Kind::choice, std::move(parts));
  return e;
}

PathExpr PathExpr::make_star(PathExpr inner) {
  PathExpr e;
  e.kind = Kind::star;
  e.children.push_back(std::move(inner));
  return e;
}

Symbol PathExpr::atom() const {
  if (kind != Kind::atom || !symbol) raise(Errc::invariant, "not an atom");
  return *symbol;
}

bool PathExpr::contains_star() const {
  if (kind == Kind::star) return true;
  return std::any_of(children.begin(), children.end(),
                     [](const PathExpr& c) { return c.contains_star(); });
}

std::string PathExpr::str() const {
  switch (kind) {
    case Kind::atom: return symbol->name();
    case Kind::seq: {
      std::string out;
      for (size_t i = 0; i < children.size(); ++i) {
        if (i) out += " ; ";
        const PathExpr& c = children[i];
        out += c.kind == Kind::choice ? "(" + c.str() + ")" : c.str();
      }
      return out;
    }
    case Kind::choice: {
      std::string out;
      for (size_t i = 0; i < children.size(); ++i) {
        if (i) out += " | ";
        out += children[i].str();
      }
      return out;
    }
    case Kind::star: {
      const PathExpr& c = children.front();
      return (c.kind == Kind::atom ? c.str() : "(" + c.str() + ")") + "*";
    }
  }
  return "";
}

bool PathExpr::operator==(const PathExpr& o) const {
  if (kind != o.kind) return false;
  if (kind == Kind::atom) return *symbol == *o.symbol;
  return children == o.children;
}

bool ProcessSpec::operator==(const ProcessSpec& o) const {
  return name == o.name && alphabet == o.alphabet && kind == o.kind && traces == o.traces &&
         expr == o.expr && depth == o.depth;
}

namespace {

// Words of the denoted language up to maxlen.
std::set<Trace> expand_expr(const PathExpr& e, int maxlen) {
  switch (e.kind) {
    case PathExpr::Kind::atom: {
      std::set<Trace> out;
      if (maxlen >= 1) out.insert(Trace({e.atom()}));
      return out;
    }
    case PathExpr::Kind::seq: {
      std::set<Trace> acc{Trace()};
      for (const PathExpr& c : e.children) {
        std::set<Trace> piece = expand_expr(c, maxlen);
        std::set<Trace> next;
        for (const Trace& a : acc)
          for (const Trace& b : piece)
            if (static_cast<int>(a.size() + b.size()) <= maxlen) next.insert(a.concat(b));
        acc = std::move(next);
      }
      return acc;
    }
    case PathExpr::Kind::choice: {
      std::set<Trace> out;
      for (const PathExpr& c : e.children) {
        std::set<Trace> piece = expand_expr(c, maxlen);
        out.insert(piece.begin(), piece.end());
      }
      return out;
    }
    case PathExpr::Kind::star: {
      std::set<Trace> base = expand_expr(e.children.front(), maxlen);
      std::set<Trace> acc{Trace()};
      while (true) {
        std::set<Trace> grown = acc;
        for (const Trace& a : acc)
          for (const Trace& b : base)
            if (static_cast<int>(a.size() + b.size()) <= maxlen) grown.insert(a.concat(b));
        if (grown.size() == acc.size()) break;
        acc = std::move(grown);
      }
      return acc;
    }
  }
  return {};
}

int length_bound(const PathExpr& e) {
  switch (e.kind) {
    case PathExpr::Kind::atom: return 1;
    case PathExpr::Kind::seq: {
      int sum = 0;
      for (const PathExpr& c : e.children) sum += length_bound(c);
      return sum;
    }
    case PathExpr::Kind::choice: {
      int best = 0;
      for (const PathExpr& c : e.children) best = std::max(best, length_bound(c));
      return best;
    }
    case PathExpr::Kind::star: return 0;  // unused; stars require a depth
  }
  return 0;
}

}  // namespace

PrefixLanguage ProcessSpec::expand() const {
  if (kind == Kind::explicit_traces) {
    int bound = 0;
    for (const Trace& t : traces) bound = std::max(bound, static_cast<int>(t.size()));
    return PrefixLanguage::closure_of(alphabet, traces, depth.value_or(bound));
  }
  if (!expr) raise(Errc::parse, "path process \"" + name + "\" has no expression");
  if (expr->contains_star() && !depth)
    raise(Errc::depth, "starred expression in \"" + name + "\" needs a depth");
  int bound = depth ? *depth : length_bound(*expr);
  return PrefixLanguage::closure_of(alphabet, expand_expr(*expr, bound), bound);
}

namespace {

struct Token {
  enum class Kind { ident, string, punct, end };
  Kind kind = Kind::end;
  std::string text;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token next() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& what) const {
    raise(Errc::parse, what + " at line " + std::to_string(current_.line) + ", column " +
                           std::to_string(current_.column));
  }

 private:
  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {  // comment to end of line
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        continue;
      }
      if (c == '\n') {
        ++line_;
        column_ = 1;
        ++pos_;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++column_;
        ++pos_;
        continue;
      }
      break;
    }
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= text_.size()) {
      current_.kind = Token::Kind::end;
      current_.text.clear();
      return;
    }
    char c = text_[pos_];
    static constexpr std::string_view punct = "{}[]():;,*|";
    if (punct.find(c) != std::string_view::npos) {
      current_.kind = Token::Kind::punct;
      current_.text = std::string(1, c);
      ++pos_;
      ++column_;
      return;
    }
    if (c == '"') {
      size_t start = ++pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') ++pos_;
      if (pos_ >= text_.size())
        raise(Errc::parse, "unterminated string at line " + std::to_string(line_));
      current_.kind = Token::Kind::string;
      current_.text = text_.substr(start, pos_ - start);
      column_ += static_cast<int>(pos_ - start) + 2;
      ++pos_;
      return;
    }
    size_t start = pos_;
    while (pos_ < text_.size()) {
      char d = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(d)) || d == '"' ||
          punct.find(d) != std::string_view::npos || d == '#')
        break;
      ++pos_;
    }
    if (pos_ == start) raise(Errc::parse, "stray character at line " + std::to_string(line_));
    current_.kind = Token::Kind::ident;
    current_.text = text_.substr(start, pos_ - start);
    column_ += static_cast<int>(pos_ - start);
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  Token current_;
};

class SpecParser {
 public:
  explicit SpecParser(const std::string& text) : lex_(text) {}

  std::vector<ProcessSpec> parse() {
    std::vector<ProcessSpec> specs;
    while (lex_.peek().kind != Token::Kind::end) specs.push_back(process());
    std::sort(specs.begin(), specs.end(),
              [](const ProcessSpec& a, const ProcessSpec& b) { return a.name < b.name; });
    for (size_t i = 0; i + 1 < specs.size(); ++i)
      if (specs[i].name == specs[i + 1].name)
        raise(Errc::parse, "duplicate process \"" + specs[i].name + "\"");
    return specs;
  }

 private:
  void expect_punct(const std::string& p) {
    if (lex_.peek().kind != Token::Kind::punct || lex_.peek().text != p)
      lex_.fail("expected \"" + p + "\"");
    lex_.next();
  }

  bool at_punct(const std::string& p) const {
    return lex_.peek().kind == Token::Kind::punct && lex_.peek().text == p;
  }

  std::string ident(const std::string& what) {
    if (lex_.peek().kind != Token::Kind::ident) lex_.fail("expected " + what);
    return lex_.next().text;
  }

  ProcessSpec process() {
    if (ident("\"process\"") != "process") lex_.fail("expected \"process\"");
    ProcessSpec spec;
    spec.name = ident("a process name");
    expect_punct("{");
    bool saw_alphabet = false, saw_kind = false, saw_body = false, saw_depth = false;
    while (!at_punct("}")) {
      std::string field = ident("a field name");
      expect_punct(":");
      if (field == "alphabet") {
        if (saw_alphabet) lex_.fail("duplicate alphabet");
        saw_alphabet = true;
        spec.alphabet.insert(symbol_name());
        while (at_punct(",")) {
          lex_.next();
          spec.alphabet.insert(symbol_name());
        }
      } else if (field == "kind") {
        if (saw_kind) lex_.fail("duplicate kind");
        saw_kind = true;
        std::string k = ident("explicit or path");
        if (k == "explicit")
          spec.kind = ProcessSpec::Kind::explicit_traces;
        else if (k == "path")
          spec.kind = ProcessSpec::Kind::path;
        else
          lex_.fail("kind must be explicit or path");
      } else if (field == "traces") {
        if (saw_body) lex_.fail("duplicate body");
        saw_body = true;
        if (!saw_alphabet) lex_.fail("traces must follow the alphabet");
        declared_ = &spec.alphabet;
        expect_punct("[");
        std::set<Trace> raw;
        if (!at_punct("]")) {
          raw.insert(trace_string());
          while (at_punct(",")) {
            lex_.next();
            raw.insert(trace_string());
          }
        }
        expect_punct("]");
        declared_ = nullptr;
        spec.traces = prefix_close(raw);
      } else if (field == "expr") {
        if (saw_body) lex_.fail("duplicate body");
        saw_body = true;
        if (!saw_alphabet) lex_.fail("expr must follow the alphabet");
        declared_ = &spec.alphabet;
        spec.expr = choice();
        declared_ = nullptr;
      } else if (field == "depth") {
        if (saw_depth) lex_.fail("duplicate depth");
        saw_depth = true;
        std::string digits = ident("a depth");
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) {
              return std::isdigit(c) != 0;
            }))
          lex_.fail("depth must be a nonnegative integer");
        spec.depth = std::stoi(digits);
      } else {
        lex_.fail("unknown field \"" + field + "\"");
      }
      if (at_punct(";")) lex_.next();  // the last field may omit it
    }
    expect_punct("}");
    if (!saw_alphabet) raise(Errc::parse, "process \"" + spec.name + "\" has no alphabet");
    if (spec.kind == ProcessSpec::Kind::explicit_traces) {
      if (spec.expr) lex_.fail("explicit process with a path expression");
      if (spec.traces.empty()) spec.traces.insert(Trace());
    } else if (!spec.expr) {
      raise(Errc::parse, "path process \"" + spec.name + "\" has no expr");
    }
    return spec;
  }

  Symbol symbol_name() {
    std::string name = ident("a symbol name");
    static const std::set<std::string> reserved = {"process", "alphabet", "kind",
                                                   "traces",  "expr",     "depth"};
    if (reserved.count(name)) lex_.fail("\"" + name + "\" is reserved");
    return Symbol::intern(name);
  }

  Trace trace_string() {
    if (lex_.peek().kind != Token::Kind::string) lex_.fail("expected a quoted trace");
    std::string flat = lex_.next().text;
    return trace_from_flat(flat, *declared_);
  }

  // path grammar: choice := seq ("|" seq)* ; seq := star (";" star)* ;
  // star := primary "*"* ; primary := symbol | "(" choice ")".
  // A ";" ends the sequence unless a primary follows.
  PathExpr choice() {
    std::vector<PathExpr> parts{seq()};
    while (at_punct("|")) {
      lex_.next();
      parts.push_back(seq());
    }
    return PathExpr::make_choice(std::move(parts));
  }

  PathExpr seq() {
    std::vector<PathExpr> parts{star()};
    while (at_punct(";")) {
      if (!continues_expr()) break;
      lex_.next();
      parts.push_back(star());
    }
    return PathExpr::make_seq(std::move(parts));
  }

  PathExpr star() {
    PathExpr e = primary();
    while (at_punct("*")) {
      lex_.next();
      e = PathExpr::make_star(std::move(e));
    }
    return e;
  }

  PathExpr primary() {
    if (at_punct("(")) {
      lex_.next();
      PathExpr e = choice();
      expect_punct(")");
      return e;
    }
    std::string name = ident("a symbol");
    Symbol s = Symbol::intern(name);
    if (!declared_->count(s))
      raise(Errc::symbol, "undeclared symbol \"" + name + "\" in a path expression");
    return PathExpr::make_atom(s);
  }

  // After ";", the expression continues unless a field keyword or the
  // closing brace follows. Undeclared names flow into primary(), which
  // reports them as symbol errors.
  bool continues_expr() {
    Lexer look = lex_;
    look.next();  // the ";"
    const Token& t = look.peek();
    if (t.kind == Token::Kind::punct) return t.text == "(";
    if (t.kind != Token::Kind::ident) return false;
    static const std::set<std::string> fields = {"alphabet", "kind", "traces", "expr", "depth"};
    return fields.count(t.text) == 0;
  }

  const SymbolSet* declared_ = nullptr;  // alphabet in scope for traces/expr
  Lexer lex_;
};

}  // namespace

std::vector<ProcessSpec> parse_spec(const std::string& text) {
  SpecParser parser(text);
  return parser.parse();
}

std::string emit_spec(const std::vector<ProcessSpec>& specs) {
  std::string out;
  for (const ProcessSpec& spec : specs) {
    out += "process " + spec.name + " {\n";
    out += "  alphabet: ";
    bool first = true;
    for (const Symbol& s : spec.alphabet) {
      if (!first) out += ", ";
      out += s.name();
      first = false;
    }
    out += ";\n";
    if (spec.kind == ProcessSpec::Kind::explicit_traces) {
      out += "  kind: explicit;\n  traces: [";
      first = true;
      for (const Trace& t : spec.traces) {
        if (!first) out += ", ";
        out += "\"" + t.flat() + "\"";
        first = false;
      }
      out += "];\n";
    } else {
      out += "  kind: path;\n  expr: " + spec.expr->str() + ";\n";
    }
    if (spec.depth) out += "  depth: " + std::to_string(*spec.depth) + ";\n";
    out += "}\n";
  }
  return out;
}

}  // namespace landin

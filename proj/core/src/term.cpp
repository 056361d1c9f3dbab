#include "landin/term.hpp"

#include <algorithm>
#include <cctype>

#include "landin/error.hpp"

namespace landin {

Term Term::var(int index) {
  if (index < 0) raise(Errc::var, "variable index must be nonnegative");
  Term t;
  t.is_var_ = true;
  t.var_ = index;
  return t;
}

Term Term::app(std::string op, std::vector<Term> args) {
  if (op.empty()) raise(Errc::invariant, "operator name must be nonempty");
  Term t;
  t.op_ = std::move(op);
  t.args_ = std::move(args);
  return t;
}

Term Term::spine(Term base, const Trace& t) {
  Term out = std::move(base);
  for (size_t i = 0; i < t.size(); ++i) out = app(t[i].name(), {std::move(out)});
  return out;
}

bool Term::is_ground() const {
  if (is_var_) return false;
  return std::all_of(args_.begin(), args_.end(), [](const Term& a) { return a.is_ground(); });
}

int Term::max_var() const {
  if (is_var_) return var_;
  int m = -1;
  for (const Term& a : args_) m = std::max(m, a.max_var());
  return m;
}

Term::Spine Term::spine_word() const {
  std::vector<Symbol> reversed;
  const Term* cur = this;
  while (!cur->is_var_) {
    if (cur->args_.empty()) {
      if (cur->op_ != "ε") raise(Errc::var, "not a unary spine over ε or x0: " + str());
      std::reverse(reversed.begin(), reversed.end());
      return Spine{Trace(std::move(reversed)), false};
    }
    if (cur->args_.size() != 1) raise(Errc::var, "not a unary spine: " + str());
    reversed.push_back(Symbol::intern(cur->op_));
    cur = &cur->args_[0];
  }
  if (cur->var_ != 0) raise(Errc::var, "spine base must be x0, got x" + std::to_string(cur->var_));
  std::reverse(reversed.begin(), reversed.end());
  return Spine{Trace(std::move(reversed)), true};
}

std::string Term::str() const {
  if (is_var_) return "x" + std::to_string(var_);
  if (args_.empty()) return op_;
  std::string out = "(";
  for (size_t i = 0; i < args_.size(); ++i) {
    if (i) out += ",";
    out += args_[i].str();
  }
  out += ")";
  out += op_;
  return out;
}

bool Term::operator==(const Term& o) const {
  if (is_var_ != o.is_var_) return false;
  if (is_var_) return var_ == o.var_;
  return op_ == o.op_ && args_ == o.args_;
}

namespace {

struct Parser {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_name_char() const {
    if (pos >= text.size()) return false;
    char c = text[pos];
    static constexpr std::string_view stop = "(),;\"[]{} \t\r\n";
    return stop.find(c) == std::string_view::npos;
  }

  std::string name() {
    size_t start = pos;
    while (at_name_char()) ++pos;
    if (pos == start) raise(Errc::parse, "expected a name at offset " + std::to_string(start));
    return std::string(text.substr(start, pos - start));
  }

  Term term() {
    skip_ws();
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      std::vector<Term> args;
      args.push_back(term());
      skip_ws();
      while (pos < text.size() && text[pos] == ',') {
        ++pos;
        args.push_back(term());
        skip_ws();
      }
      if (pos >= text.size() || text[pos] != ')')
        raise(Errc::parse, "expected ')' at offset " + std::to_string(pos));
      ++pos;
      skip_ws();
      // a parenthesized single term without a following operator is grouping
      if (!at_name_char() && args.size() == 1) return std::move(args.front());
      return Term::app(name(), std::move(args));
    }
    std::string n = name();
    if (n.size() >= 2 && n[0] == 'x' &&
        std::all_of(n.begin() + 1, n.end(),
                    [](unsigned char c) { return std::isdigit(c) != 0; }))
      return Term::var(std::stoi(n.substr(1)));
    return Term::constant(std::move(n));
  }
};

}  // namespace

Term Term::parse(std::string_view text) {
  Parser p{text};
  Term t = p.term();
  p.skip_ws();
  if (p.pos != text.size())
    raise(Errc::parse, "trailing input after term at offset " + std::to_string(p.pos));
  return t;
}

}  // namespace landin

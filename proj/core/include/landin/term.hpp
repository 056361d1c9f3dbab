#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "landin/trace.hpp"

namespace landin {

/// A term over a ranked signature, with variables x0, x1, ... disjoint from
/// the operator names. Application is written on the right: ((ε)a)b.
class Term {
 public:
  static Term var(int index);
  static Term app(std::string op, std::vector<Term> args);
  static Term constant(std::string op) { return app(std::move(op), {}); }
  static Term epsilon() { return constant("ε"); }

  /// The right-nested unary term spelling `t` applied to `base`:
  /// spine(ε, "ab") = ((ε)a)b, spine(x0, "bc") = ((x0)b)c.
  static Term spine(Term base, const Trace& t);

  /// Identifies Σ* with the unary word algebra: ground_spine("ab") = ((ε)a)b.
  static Term ground_spine(const Trace& t) { return spine(epsilon(), t); }

  bool is_var() const { return is_var_; }
  int var_index() const { return var_; }
  const std::string& op() const { return op_; }
  const std::vector<Term>& args() const { return args_; }
  bool is_ground() const;
  int max_var() const;  // -1 when ground

  /// For a chain of unary applications over x0 or ε: the trace spelled by
  /// the spine, plus whether the base is the variable. Errors E_VAR when the
  /// term has a different shape.
  struct Spine {
    Trace word;
    bool over_variable;
  };
  Spine spine_word() const;

  std::string str() const;
  static Term parse(std::string_view text);  // E_PARSE

  bool operator==(const Term& o) const;
  bool operator!=(const Term& o) const { return !(*this == o); }
  bool operator<(const Term& o) const { return str() < o.str(); }

 private:
  Term() = default;
  bool is_var_ = false;
  int var_ = 0;
  std::string op_;
  std::vector<Term> args_;
};

}  // namespace landin

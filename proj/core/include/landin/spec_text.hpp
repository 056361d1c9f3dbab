#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "landin/prefix_language.hpp"

namespace landin {

/// A path expression: atoms, sequence, choice and iteration, denoting a
/// regular language that is prefix-closed and depth-truncated on expansion.
struct PathExpr {
  enum class Kind { atom, seq, choice, star };
  Kind kind = Kind::atom;
  Symbol atom() const;
  std::vector<PathExpr> children;  // seq/choice: 2+; star: 1
  std::optional<Symbol> symbol;    // atom

  static PathExpr make_atom(Symbol s);
  static PathExpr make_seq(std::vector<PathExpr> parts);
  static PathExpr make_choice(std::vector<PathExpr> parts);
  static PathExpr make_star(PathExpr inner);

  bool contains_star() const;
  std::string str() const;  // canonical rendering, minimal parentheses
  bool operator==(const PathExpr& o) const;
};

/// One `process NAME { ... }` block.
struct ProcessSpec {
  std::string name;
  SymbolSet alphabet;
  enum class Kind { explicit_traces, path };
  Kind kind = Kind::explicit_traces;
  std::set<Trace> traces;          // explicit: prefix-closed (normalized at parse)
  std::optional<PathExpr> expr;    // path
  std::optional<int> depth;

  /// The denoted prefix-closed language, truncated at the declared depth
  /// (or the natural length bound when no depth is needed). E_DEPTH when a
  /// starred expression has no depth.
  PrefixLanguage expand() const;

  bool operator==(const ProcessSpec& o) const;
};

/// Parses a process file. E_PARSE with line/column on malformed input,
/// E_SYMBOL for undeclared symbols, E_DEPTH for starred bodies without a
/// depth. Processes come back sorted by name.
std::vector<ProcessSpec> parse_spec(const std::string& text);

/// Canonical rendering; emit(parse(text)) re-parses to the same specs.
std::string emit_spec(const std::vector<ProcessSpec>& specs);

}  // namespace landin

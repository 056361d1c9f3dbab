#pragma once

#include <stdexcept>
#include <string>

namespace landin {

/// Error categories surfaced by the library. Each corresponds to a named
/// precondition or input defect; everything else is a logic error.
enum class Errc {
  empty,      // E_EMPTY: empty language/algebra where nonemptiness is required
  depth,      // E_DEPTH: a depth bound is too small to answer the question exactly
  dim,        // E_DIM: vector dimension mismatch or index out of range
  sig,        // E_SIG: signature mismatch or wrong signature shape
  map,        // E_MAP: a map is not total / not a partition / missing entries
  not_fg,     // E_NOT_FG: algebra is not finitely generated
  cong,       // E_CONG: relation is not a congruence / not a subdirect decomposition
  check_id,   // E_CHECK_ID: unknown theorem-check identifier
  parse,      // E_PARSE: malformed input text
  symbol,     // E_SYMBOL: undeclared or ill-formed symbol name
  var,        // E_VAR: term uses an out-of-range variable
  canon,      // E_CANON: derivor violates the canonical restrictions
  conc,       // E_CONC: vector symbol map breaks a commutation relation
  limit,      // E_LIMIT: refused; input exceeds a configured search guard
  invariant,  // E_INVARIANT: constructor input violates a structural invariant
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace landin

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "landin/symbol.hpp"

namespace landin {

/// A finite sequence of events. The empty trace is ε. Ordering is
/// length-then-lexicographic under the symbol name order, which is the
/// canonical storage and emission order for all trace sets.
class Trace {
 public:
  Trace() = default;  // ε
  explicit Trace(std::vector<Symbol> syms) : syms_(std::move(syms)) {}

  /// Each character of `chars` is one symbol: Trace::chars("ab") = a·b.
  static Trace chars(std::string_view chars);

  size_t size() const { return syms_.size(); }
  bool empty() const { return syms_.empty(); }
  Symbol operator[](size_t i) const { return syms_[i]; }
  const std::vector<Symbol>& symbols() const { return syms_; }

  Trace append(Symbol s) const;
  Trace concat(const Trace& t) const;
  Trace prefix(size_t len) const;
  bool is_prefix_of(const Trace& t) const;
  bool uses_only(const SymbolSet& alphabet) const;

  /// "ε" for the empty trace, otherwise the symbol names concatenated.
  std::string name() const;
  /// "" for the empty trace, otherwise the symbol names concatenated.
  std::string flat() const;

  bool operator==(const Trace& o) const { return syms_ == o.syms_; }
  bool operator!=(const Trace& o) const { return syms_ != o.syms_; }
  bool operator<(const Trace& o) const;

 private:
  std::vector<Symbol> syms_;
};

/// Deletes every symbol of `s` outside `alpha`. Total and homomorphic:
/// project(st) = project(s)project(t).
Trace project(const Trace& s, const SymbolSet& alpha);

std::vector<Trace> prefixes(const Trace& s);  // ε up to s itself, in order

/// Splits a flat rendering ("ab") into symbols of `alphabet`, longest match
/// first. E_PARSE when no decomposition exists.
Trace trace_from_flat(const std::string& flat, const SymbolSet& alphabet);

}  // namespace landin

#pragma once

#include <initializer_list>
#include <set>
#include <string>
#include <string_view>

namespace landin {

/// An interned event name from the global alphabet. Equality is pointer
/// identity on the interned string; ordering is by name, so that every
/// container of symbols iterates in the fixed total order used for all
/// canonical output.
///
/// "ε" is reserved for the empty trace and is rejected by intern(), as are
/// names that would collide with variable or term syntax.
class Symbol {
 public:
  static Symbol intern(std::string_view name);

  const std::string& name() const { return *name_; }

  bool operator==(const Symbol& o) const { return name_ == o.name_; }
  bool operator!=(const Symbol& o) const { return name_ != o.name_; }
  bool operator<(const Symbol& o) const { return name_ != o.name_ && *name_ < *o.name_; }
  bool operator<=(const Symbol& o) const { return !(o < *this); }
  bool operator>(const Symbol& o) const { return o < *this; }
  bool operator>=(const Symbol& o) const { return !(*this < o); }

 private:
  explicit Symbol(const std::string* name) : name_(name) {}
  const std::string* name_;
};

using SymbolSet = std::set<Symbol>;

/// Convenience for building alphabets: symbols({"a", "b"}).
SymbolSet symbols(std::initializer_list<const char*> names);

/// Interprets each character of `chars` as a one-letter symbol name.
SymbolSet symbols_of_chars(std::string_view chars);

SymbolSet set_union(const SymbolSet& a, const SymbolSet& b);
SymbolSet set_intersection(const SymbolSet& a, const SymbolSet& b);
bool is_subset(const SymbolSet& sub, const SymbolSet& super);

}  // namespace landin

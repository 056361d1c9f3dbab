#include "landin/trace.hpp"

#include <algorithm>

#include "landin/error.hpp"

namespace landin {

Trace Trace::chars(std::string_view chars) {
  std::vector<Symbol> syms;
  syms.reserve(chars.size());
  for (char c : chars) syms.push_back(Symbol::intern(std::string_view(&c, 1)));
  return Trace(std::move(syms));
}

Trace Trace::append(Symbol s) const {
  std::vector<Symbol> syms = syms_;
  syms.push_back(s);
  return Trace(std::move(syms));
}

Trace Trace::concat(const Trace& t) const {
  std::vector<Symbol> syms = syms_;
  syms.insert(syms.end(), t.syms_.begin(), t.syms_.end());
  return Trace(std::move(syms));
}

Trace Trace::prefix(size_t len) const {
  if (len >= syms_.size()) return *this;
  return Trace(std::vector<Symbol>(syms_.begin(), syms_.begin() + static_cast<long>(len)));
}

bool Trace::is_prefix_of(const Trace& t) const {
  if (syms_.size() > t.syms_.size()) return false;
  return std::equal(syms_.begin(), syms_.end(), t.syms_.begin());
}

bool Trace::uses_only(const SymbolSet& alphabet) const {
  return std::all_of(syms_.begin(), syms_.end(),
                     [&](const Symbol& s) { return alphabet.count(s) > 0; });
}

std::string Trace::name() const { return syms_.empty() ? "ε" : flat(); }

std::string Trace::flat() const {
  std::string out;
  for (const Symbol& s : syms_) out += s.name();
  return out;
}

bool Trace::operator<(const Trace& o) const {
  if (syms_.size() != o.syms_.size()) return syms_.size() < o.syms_.size();
  return std::lexicographical_compare(syms_.begin(), syms_.end(), o.syms_.begin(), o.syms_.end());
}

Trace project(const Trace& s, const SymbolSet& alpha) {
  std::vector<Symbol> kept;
  for (size_t i = 0; i < s.size(); ++i)
    if (alpha.count(s[i])) kept.push_back(s[i]);
  return Trace(std::move(kept));
}

std::vector<Trace> prefixes(const Trace& s) {
  std::vector<Trace> out;
  out.reserve(s.size() + 1);
  for (size_t len = 0; len <= s.size(); ++len) out.push_back(s.prefix(len));
  return out;
}

Trace trace_from_flat(const std::string& flat, const SymbolSet& alphabet) {
  std::vector<Symbol> syms;
  size_t pos = 0;
  while (pos < flat.size()) {
    const Symbol* best = nullptr;
    size_t best_len = 0;
    for (const Symbol& s : alphabet) {
      const std::string& name = s.name();
      if (name.size() > best_len && flat.compare(pos, name.size(), name) == 0) {
        best = &s;
        best_len = name.size();
      }
    }
    if (!best)
      raise(Errc::parse,
            "cannot split \"" + flat + "\" over the alphabet at offset " + std::to_string(pos));
    syms.push_back(*best);
    pos += best_len;
  }
  return Trace(std::move(syms));
}

}  // namespace landin

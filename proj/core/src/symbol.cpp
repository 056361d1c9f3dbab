#include "landin/symbol.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <unordered_map>

#include "landin/error.hpp"

namespace landin {

namespace {

struct Interner {
  std::mutex mu;
  std::deque<std::string> names;  // stable addresses
  std::unordered_map<std::string_view, const std::string*> index;
};

Interner& interner() {
  static Interner it;
  return it;
}

bool looks_like_variable(std::string_view name) {
  if (name.size() < 2 || name[0] != 'x') return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Symbol Symbol::intern(std::string_view name) {
  if (name.empty()) raise(Errc::symbol, "symbol name must be nonempty");
  if (name == "ε") raise(Errc::symbol, "\"ε\" names the empty trace, not an event");
  if (looks_like_variable(name))
    raise(Errc::symbol, "\"" + std::string(name) + "\" collides with variable syntax");
  static constexpr std::string_view forbidden = "(),;*|\"[]{} \t\r\n";
  if (name.find_first_of(forbidden) != std::string_view::npos)
    raise(Errc::symbol, "\"" + std::string(name) + "\" contains a reserved character");

  Interner& it = interner();
  std::lock_guard<std::mutex> lock(it.mu);
  auto found = it.index.find(name);
  if (found != it.index.end()) return Symbol(found->second);
  it.names.emplace_back(name);
  const std::string* stored = &it.names.back();
  it.index.emplace(std::string_view(*stored), stored);
  return Symbol(stored);
}

SymbolSet symbols(std::initializer_list<const char*> names) {
  SymbolSet out;
  for (const char* n : names) out.insert(Symbol::intern(n));
  return out;
}

SymbolSet symbols_of_chars(std::string_view chars) {
  SymbolSet out;
  for (char c : chars) out.insert(Symbol::intern(std::string_view(&c, 1)));
  return out;
}

SymbolSet set_union(const SymbolSet& a, const SymbolSet& b) {
  SymbolSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

SymbolSet set_intersection(const SymbolSet& a, const SymbolSet& b) {
  SymbolSet out;
  for (const Symbol& s : a)
    if (b.count(s)) out.insert(s);
  return out;
}

bool is_subset(const SymbolSet& sub, const SymbolSet& super) {
  return std::all_of(sub.begin(), sub.end(), [&](const Symbol& s) { return super.count(s) > 0; });
}

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::empty: return "E_EMPTY";
    case Errc::depth: return "E_DEPTH";
    case Errc::dim: return "E_DIM";
    case Errc::sig: return "E_SIG";
    case Errc::map: return "E_MAP";
    case Errc::not_fg: return "E_NOT_FG";
    case Errc::cong: return "E_CONG";
    case Errc::check_id: return "E_CHECK_ID";
    case Errc::parse: return "E_PARSE";
    case Errc::symbol: return "E_SYMBOL";
    case Errc::var: return "E_VAR";
    case Errc::canon: return "E_CANON";
    case Errc::conc: return "E_CONC";
    case Errc::limit: return "E_LIMIT";
    case Errc::invariant: return "E_INVARIANT";
  }
  return "E_UNKNOWN";
}

}  // namespace landin

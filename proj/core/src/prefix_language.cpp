#include "landin/prefix_language.hpp"

#include <algorithm>

#include "landin/error.hpp"

namespace landin {

PrefixLanguage PrefixLanguage::make(SymbolSet alphabet, std::set<Trace> traces, int depth) {
  if (depth < 0) raise(Errc::invariant, "depth must be nonnegative");
  if (traces.empty()) raise(Errc::empty, "a prefix-closed language must contain ε");
  for (const Trace& t : traces) {
    if (!t.uses_only(alphabet))
      raise(Errc::symbol, "trace \"" + t.name() + "\" uses a symbol outside the alphabet");
    if (static_cast<int>(t.size()) > depth)
      raise(Errc::invariant, "trace \"" + t.name() + "\" exceeds depth bound");
  }
  if (!is_prefix_closed(traces)) raise(Errc::invariant, "trace set is not prefix-closed");
  return PrefixLanguage(std::move(alphabet), std::move(traces), depth);
}

PrefixLanguage PrefixLanguage::closure_of(SymbolSet alphabet, const std::set<Trace>& raw,
                                          int depth) {
  std::set<Trace> closed = prefix_close(raw);
  std::set<Trace> bounded;
  for (const Trace& t : closed)
    if (static_cast<int>(t.size()) <= depth) bounded.insert(t);
  return make(std::move(alphabet), std::move(bounded), depth);
}

size_t PrefixLanguage::max_trace_length() const {
  // traces_ is ordered by length first, so the last element is longest
  return traces_.empty() ? 0 : traces_.rbegin()->size();
}

PrefixLanguage PrefixLanguage::truncated(int depth) const {
  std::set<Trace> bounded;
  for (const Trace& t : traces_)
    if (static_cast<int>(t.size()) <= depth) bounded.insert(t);
  return make(alphabet_, std::move(bounded), depth);
}

bool is_prefix_closed(const std::set<Trace>& traces) {
  for (const Trace& t : traces) {
    if (t.empty()) continue;
    if (!traces.count(t.prefix(t.size() - 1))) return false;
  }
  return true;
}

std::set<Trace> prefix_close(const std::set<Trace>& traces) {
  std::set<Trace> out;
  out.insert(Trace());
  for (const Trace& t : traces)
    for (size_t len = 1; len <= t.size(); ++len) out.insert(t.prefix(len));
  return out;
}

PrefixLanguage compose_parallel(const std::vector<PrefixLanguage>& parts, int depth) {
  if (parts.empty()) raise(Errc::empty, "compose_parallel needs at least one part");
  if (depth < 0) raise(Errc::invariant, "depth must be nonnegative");
  SymbolSet alphabet;
  for (const PrefixLanguage& part : parts) {
    if (part.depth() < depth)
      raise(Errc::depth, "part depth " + std::to_string(part.depth()) +
                             " is below the requested depth " + std::to_string(depth));
    alphabet.insert(part.alphabet().begin(), part.alphabet().end());
  }

  auto admissible = [&](const Trace& s) {
    return std::all_of(parts.begin(), parts.end(), [&](const PrefixLanguage& part) {
      return part.contains(project(s, part.alphabet()));
    });
  };

  // The composition is prefix-closed, so only members need extending.
  std::set<Trace> traces;
  std::vector<Trace> frontier;
  if (admissible(Trace())) {
    traces.insert(Trace());
    frontier.push_back(Trace());
  }
  for (int len = 0; len < depth && !frontier.empty(); ++len) {
    std::vector<Trace> next;
    for (const Trace& s : frontier) {
      for (const Symbol& sigma : alphabet) {
        Trace extended = s.append(sigma);
        if (admissible(extended) && traces.insert(extended).second)
          next.push_back(std::move(extended));
      }
    }
    frontier = std::move(next);
  }
  if (traces.empty()) raise(Errc::empty, "composition came out empty; a part is missing ε");
  return PrefixLanguage::make(std::move(alphabet), std::move(traces), depth);
}

std::vector<Trace> all_traces(const SymbolSet& alphabet, int maxlen) {
  std::vector<Trace> out{Trace()};
  size_t level_begin = 0;
  for (int len = 0; len < maxlen; ++len) {
    size_t level_end = out.size();
    for (size_t i = level_begin; i < level_end; ++i)
      for (const Symbol& s : alphabet) out.push_back(out[i].append(s));
    level_begin = level_end;
  }
  return out;
}

}  // namespace landin

#pragma once

#include <set>
#include <vector>

#include "landin/trace.hpp"

namespace landin {

/// A sub-alphabet together with a finite prefix-closed set of traces,
/// truncated at an explicit depth bound. The minimal language is {ε};
/// empty languages are rejected at construction.
class PrefixLanguage {
 public:
  /// Validates all invariants: traces over `alphabet`, prefix-closed,
  /// nonempty (ε is inserted if missing would violate closure anyway),
  /// lengths within `depth`.
  static PrefixLanguage make(SymbolSet alphabet, std::set<Trace> traces, int depth);

  /// prefix_close + truncate, then make. Normalizes raw input.
  static PrefixLanguage closure_of(SymbolSet alphabet, const std::set<Trace>& raw, int depth);

  const SymbolSet& alphabet() const { return alphabet_; }
  const std::set<Trace>& traces() const { return traces_; }
  int depth() const { return depth_; }
  size_t size() const { return traces_.size(); }
  size_t max_trace_length() const;

  bool contains(const Trace& t) const { return traces_.count(t) > 0; }
  PrefixLanguage truncated(int depth) const;

  bool operator==(const PrefixLanguage& o) const {
    return alphabet_ == o.alphabet_ && depth_ == o.depth_ && traces_ == o.traces_;
  }
  bool operator!=(const PrefixLanguage& o) const { return !(*this == o); }

 private:
  PrefixLanguage(SymbolSet alphabet, std::set<Trace> traces, int depth)
      : alphabet_(std::move(alphabet)), traces_(std::move(traces)), depth_(depth) {}

  SymbolSet alphabet_;
  std::set<Trace> traces_;
  int depth_;
};

bool is_prefix_closed(const std::set<Trace>& traces);

/// Smallest prefix-closed superset; always contains ε.
std::set<Trace> prefix_close(const std::set<Trace>& traces);

/// The parallel composition of `parts` at the given depth: all traces over
/// the union alphabet, of length <= depth, whose projection onto each part's
/// alphabet belongs to that part. Associative and commutative; degenerates
/// to intersection on equal alphabets and to shuffle on disjoint ones.
///
/// Throws E_EMPTY for an empty part list and E_DEPTH when some part's own
/// depth is smaller than `depth` (the answer would not be exact).
PrefixLanguage compose_parallel(const std::vector<PrefixLanguage>& parts, int depth);

/// All traces over `alphabet` of length <= maxlen, in canonical order.
/// Exhaustive; used by oracles and strong-property checks.
std::vector<Trace> all_traces(const SymbolSet& alphabet, int maxlen);

}  // namespace landin

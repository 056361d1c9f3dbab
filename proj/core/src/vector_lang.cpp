#include "landin/vector_lang.hpp"

#include <algorithm>
#include <deque>

#include "landin/error.hpp"

namespace landin {

AlphabetVector::AlphabetVector(std::vector<SymbolSet> components)
    : components_(std::move(components)) {
  if (components_.empty()) raise(Errc::dim, "an alphabet vector needs at least one component");
}

const SymbolSet& AlphabetVector::component(size_t i) const {
  if (i >= components_.size()) raise(Errc::dim, "component index out of range");
  return components_[i];
}

SymbolSet AlphabetVector::union_alphabet() const {
  SymbolSet out;
  for (const SymbolSet& c : components_) out.insert(c.begin(), c.end());
  return out;
}

std::vector<VectorOp> AlphabetVector::vops() const {
  std::vector<VectorOp> out;
  for (const Symbol& sigma : union_alphabet()) {
    std::vector<bool> membership(components_.size());
    for (size_t i = 0; i < components_.size(); ++i) membership[i] = components_[i].count(sigma) > 0;
    out.emplace_back(sigma, std::move(membership));
  }
  return out;
}

std::optional<VectorOp> AlphabetVector::vop(Symbol sigma) const {
  std::vector<bool> membership(components_.size());
  bool any = false;
  for (size_t i = 0; i < components_.size(); ++i) {
    membership[i] = components_[i].count(sigma) > 0;
    any = any || membership[i];
  }
  if (!any) return std::nullopt;
  return VectorOp(sigma, std::move(membership));
}

VectorOp::VectorOp(Symbol symbol, std::vector<bool> membership)
    : symbol_(symbol), membership_(std::move(membership)) {
  if (std::none_of(membership_.begin(), membership_.end(), [](bool b) { return b; }))
    raise(Errc::invariant, "a vector operation must be non-ε at some component");
}

Trace VectorOp::part(size_t i) const {
  if (i >= membership_.size()) raise(Errc::dim, "component index out of range");
  return membership_[i] ? Trace({symbol_}) : Trace();
}

VectorString::VectorString(std::vector<Trace> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) raise(Errc::dim, "a vector string needs at least one component");
}

bool VectorString::is_empty() const {
  return std::all_of(parts_.begin(), parts_.end(), [](const Trace& t) { return t.empty(); });
}

VectorString VectorString::append(const VectorOp& op) const {
  if (op.dimension() != parts_.size()) raise(Errc::dim, "dimension mismatch");
  std::vector<Trace> parts = parts_;
  for (size_t i = 0; i < parts.size(); ++i)
    if (op.writes(i)) parts[i] = parts[i].append(op.symbol());
  return VectorString(std::move(parts));
}

bool VectorString::is_elementwise_prefix_of(const VectorString& o) const {
  if (parts_.size() != o.parts_.size()) return false;
  for (size_t i = 0; i < parts_.size(); ++i)
    if (!parts_[i].is_prefix_of(o.parts_[i])) return false;
  return true;
}

std::string VectorString::name() const {
  std::string out = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += parts_[i].name();
  }
  out += ")";
  return out;
}

VectorString vconcat(const VectorString& s, const VectorString& t) {
  if (s.dimension() != t.dimension()) raise(Errc::dim, "dimension mismatch in vconcat");
  std::vector<Trace> parts;
  parts.reserve(s.dimension());
  for (size_t i = 0; i < s.dimension(); ++i) parts.push_back(s.part(i).concat(t.part(i)));
  return VectorString(std::move(parts));
}

VectorString product_of(const std::vector<VectorOp>& ops, size_t dimension) {
  VectorString out(dimension);
  for (const VectorOp& op : ops) out = out.append(op);
  return out;
}

bool independent(const VectorOp& a, const VectorOp& b) {
  if (a.dimension() != b.dimension()) raise(Errc::dim, "dimension mismatch in independent");
  for (size_t i = 0; i < a.dimension(); ++i)
    if (a.writes(i) && b.writes(i)) return false;
  return true;
}

bool monoid_equal(const std::vector<VectorOp>& u, const std::vector<VectorOp>& v) {
  if (u.empty() && v.empty()) return true;
  size_t dim = u.empty() ? v.front().dimension() : u.front().dimension();
  for (const VectorOp& op : u)
    if (op.dimension() != dim) raise(Errc::dim, "mixed dimensions in monoid_equal");
  for (const VectorOp& op : v)
    if (op.dimension() != dim) raise(Errc::dim, "mixed dimensions in monoid_equal");
  return product_of(u, dim) == product_of(v, dim);
}

std::vector<VectorOp> normal_form(std::vector<VectorOp> u) {
  const size_t m = u.size();
  if (m < 2) return u;
  // Linearize the dependence order greedily, always emitting the least
  // fireable op. Occurrences of the same symbol are mutually dependent,
  // so ties cannot arise among distinct fireable events.
  std::vector<std::vector<size_t>> succs(m);
  std::vector<size_t> pending(m, 0);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      if (!independent(u[i], u[j])) {
        succs[i].push_back(j);
        ++pending[j];
      }
  std::vector<bool> emitted(m, false);
  std::vector<VectorOp> out;
  out.reserve(m);
  for (size_t step = 0; step < m; ++step) {
    size_t best = m;
    for (size_t i = 0; i < m; ++i) {
      if (emitted[i] || pending[i] > 0) continue;
      if (best == m || u[i] < u[best] || (u[i] == u[best] && i < best)) best = i;
    }
    emitted[best] = true;
    out.push_back(u[best]);
    for (size_t j : succs[best]) --pending[j];
  }
  return out;
}

std::set<std::vector<VectorOp>> commutation_class(const std::vector<VectorOp>& u, size_t limit) {
  if (u.size() > limit)
    raise(Errc::limit, "sequence of length " + std::to_string(u.size()) +
                           " exceeds the commutation-class guard (" + std::to_string(limit) + ")");
  std::set<std::vector<VectorOp>> seen{u};
  std::deque<std::vector<VectorOp>> frontier{u};
  while (!frontier.empty()) {
    std::vector<VectorOp> cur = std::move(frontier.front());
    frontier.pop_front();
    for (size_t i = 0; i + 1 < cur.size(); ++i) {
      if (!independent(cur[i], cur[i + 1])) continue;
      std::vector<VectorOp> swapped = cur;
      std::swap(swapped[i], swapped[i + 1]);
      if (seen.insert(swapped).second) frontier.push_back(std::move(swapped));
    }
  }
  return seen;
}

std::optional<std::vector<VectorOp>> linearize(const VectorString& s, const AlphabetVector& av) {
  if (s.dimension() != av.dimension()) raise(Errc::dim, "dimension mismatch in linearize");
  const size_t n = av.dimension();
  std::vector<size_t> pos(n, 0);
  std::vector<VectorOp> ops;
  auto consumed = [&] {
    for (size_t i = 0; i < n; ++i)
      if (pos[i] < s.part(i).size()) return false;
    return true;
  };
  while (!consumed()) {
    // An op can fire iff every component of its support is at a head
    // occurrence of its symbol. Fireable ops are pairwise independent or
    // equal, so any firing order reaches the same verdict.
    bool fired = false;
    std::optional<VectorOp> chosen;
    for (size_t i = 0; i < n && !fired; ++i) {
      if (pos[i] >= s.part(i).size()) continue;
      Symbol head = s.part(i)[pos[i]];
      std::optional<VectorOp> op = av.vop(head);
      if (!op || !op->writes(i)) return std::nullopt;  // symbol outside component alphabet
      bool ok = true;
      for (size_t j = 0; j < n; ++j) {
        if (!op->writes(j)) continue;
        if (pos[j] >= s.part(j).size() || s.part(j)[pos[j]] != head) {
          ok = false;
          break;
        }
      }
      if (ok) {
        chosen = op;
        fired = true;
      }
    }
    if (!fired) return std::nullopt;
    for (size_t j = 0; j < n; ++j)
      if (chosen->writes(j)) ++pos[j];
    ops.push_back(*chosen);
  }
  return ops;
}

bool is_vops_product(const VectorString& s, const AlphabetVector& av) {
  return linearize(s, av).has_value();
}

namespace {

// Ops that can be removed from the end of s̲: every supported component ends
// with the op's symbol.
std::vector<VectorOp> feasible_last_ops(const VectorString& s, const AlphabetVector& av) {
  std::vector<VectorOp> out;
  SymbolSet tried;
  for (size_t i = 0; i < s.dimension(); ++i) {
    const Trace& t = s.part(i);
    if (t.empty()) continue;
    Symbol tail = t[t.size() - 1];
    if (!tried.insert(tail).second) continue;
    std::optional<VectorOp> op = av.vop(tail);
    if (!op) continue;
    bool ok = true;
    for (size_t j = 0; j < s.dimension(); ++j) {
      if (!op->writes(j)) continue;
      const Trace& u = s.part(j);
      if (u.empty() || u[u.size() - 1] != tail) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(*op);
  }
  return out;
}

VectorString drop_last(const VectorString& s, const VectorOp& op) {
  std::vector<Trace> parts;
  parts.reserve(s.dimension());
  for (size_t i = 0; i < s.dimension(); ++i) {
    const Trace& t = s.part(i);
    parts.push_back(op.writes(i) ? t.prefix(t.size() - 1) : t);
  }
  return VectorString(std::move(parts));
}

}  // namespace

VectorLanguage VectorLanguage::make(AlphabetVector av, std::set<VectorString> vectors, int depth) {
  if (depth < 0) raise(Errc::invariant, "depth must be nonnegative");
  if (vectors.empty() || !vectors.count(VectorString(av.dimension())))
    raise(Errc::empty, "a vector language must contain ε̲");
  for (const VectorString& s : vectors) {
    if (s.dimension() != av.dimension()) raise(Errc::dim, "member dimension mismatch");
    for (size_t i = 0; i < s.dimension(); ++i)
      if (!s.part(i).uses_only(av.component(i)))
        raise(Errc::symbol, s.name() + " uses a symbol outside its component alphabet");
    std::optional<std::vector<VectorOp>> ops = linearize(s, av);
    if (!ops) raise(Errc::invariant, s.name() + " is not a product of vector operations");
    if (static_cast<int>(ops->size()) > depth)
      raise(Errc::invariant, s.name() + " exceeds the operation-depth bound");
    for (const VectorOp& op : feasible_last_ops(s, av))
      if (!vectors.count(drop_last(s, op)))
        raise(Errc::invariant, "vector set is not prefix-closed at " + s.name());
  }
  return VectorLanguage(std::move(av), std::move(vectors), depth);
}

PrefixLanguage VectorLanguage::component(size_t i) const {
  if (i >= av_.dimension()) raise(Errc::dim, "component index out of range");
  std::set<Trace> traces;
  for (const VectorString& s : vectors_) traces.insert(s.part(i));
  return PrefixLanguage::make(av_.component(i), std::move(traces), depth_);
}

VectorLanguage vfs(const std::vector<PrefixLanguage>& parts, int depth) {
  if (parts.empty()) raise(Errc::empty, "vfs needs at least one part");
  if (depth < 0) raise(Errc::invariant, "depth must be nonnegative");
  std::vector<SymbolSet> alphabets;
  for (const PrefixLanguage& part : parts) {
    if (part.depth() < depth)
      raise(Errc::depth, "part depth " + std::to_string(part.depth()) +
                             " is below the requested depth " + std::to_string(depth));
    alphabets.push_back(part.alphabet());
  }
  AlphabetVector av(std::move(alphabets));
  std::vector<VectorOp> ops = av.vops();

  std::set<VectorString> vectors{VectorString(av.dimension())};
  std::vector<VectorString> frontier{VectorString(av.dimension())};
  for (int len = 0; len < depth && !frontier.empty(); ++len) {
    std::vector<VectorString> next;
    for (const VectorString& s : frontier) {
      for (const VectorOp& op : ops) {
        VectorString extended = s.append(op);
        bool admissible = true;
        for (size_t i = 0; i < parts.size() && admissible; ++i)
          if (op.writes(i)) admissible = parts[i].contains(extended.part(i));
        if (admissible && vectors.insert(extended).second) next.push_back(std::move(extended));
      }
    }
    frontier = std::move(next);
  }
  return VectorLanguage::make(std::move(av), std::move(vectors), depth);
}

VectorLanguage vfs_saturated(const std::vector<PrefixLanguage>& parts) {
  if (parts.empty()) raise(Errc::empty, "vfs needs at least one part");
  int saturation = 0;
  for (const PrefixLanguage& part : parts)
    saturation += static_cast<int>(part.max_trace_length());
  // Parts may have depth below the saturation bound; membership of every
  // candidate is still exact because components cap out first.
  std::vector<PrefixLanguage> padded;
  padded.reserve(parts.size());
  for (const PrefixLanguage& part : parts)
    padded.push_back(PrefixLanguage::make(part.alphabet(), part.traces(),
                                          std::max(part.depth(), saturation)));
  VectorLanguage full = vfs(padded, saturation);
  return full;
}

VectorLanguage embed_language(const PrefixLanguage& lang) {
  std::set<VectorString> vectors;
  for (const Trace& t : lang.traces()) vectors.insert(VectorString({t}));
  return VectorLanguage::make(AlphabetVector({lang.alphabet()}), std::move(vectors), lang.depth());
}

}  // namespace landin

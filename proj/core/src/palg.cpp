#include "landin/palg.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "landin/error.hpp"

namespace landin {

Signature Signature::of(std::map<std::string, int> ops) {
  for (const auto& [name, arity] : ops) {
    if (name.empty()) raise(Errc::sig, "operator name must be nonempty");
    if (arity < 0) raise(Errc::sig, "arity of " + name + " must be nonnegative");
  }
  Signature s;
  s.ops_ = std::move(ops);
  return s;
}

Signature Signature::language(const SymbolSet& sigma) {
  std::map<std::string, int> ops;
  ops.emplace("ε", 0);
  for (const Symbol& s : sigma) ops.emplace(s.name(), 1);
  return of(std::move(ops));
}

std::optional<int> Signature::arity(const std::string& op) const {
  auto it = ops_.find(op);
  if (it == ops_.end()) return std::nullopt;
  return it->second;
}

bool Signature::is_language_signature() const {
  for (const auto& [name, arity] : ops_) {
    if (arity == 0 && name != "ε") return false;
    if (arity > 1) return false;
  }
  return ops_.count("ε") > 0 && ops_.at("ε") == 0;
}

SymbolSet Signature::unary_symbols() const {
  SymbolSet out;
  for (const auto& [name, arity] : ops_)
    if (arity == 1) out.insert(Symbol::intern(name));
  return out;
}

namespace {

OpTable empty_table(int arity, size_t carrier_size) {
  OpTable t;
  t.arity = arity;
  if (arity == 1) t.unary.assign(carrier_size, kUndef);
  return t;
}

}  // namespace

PartialAlgebra PartialAlgebra::make(Signature sig, std::vector<std::string> carrier,
                                    const Entries& entries) {
  std::map<std::string, OpTable> tables;
  std::map<std::string, Elem> index;
  for (size_t i = 0; i < carrier.size(); ++i)
    if (!index.emplace(carrier[i], static_cast<Elem>(i)).second)
      raise(Errc::invariant, "duplicate carrier element \"" + carrier[i] + "\"");
  auto lookup = [&](const std::string& name) -> Elem {
    auto it = index.find(name);
    if (it == index.end()) raise(Errc::invariant, "\"" + name + "\" is not a carrier element");
    return it->second;
  };
  for (const auto& [op, arity] : sig.ops()) tables.emplace(op, empty_table(arity, carrier.size()));
  for (const auto& [op, rows] : entries) {
    std::optional<int> arity = sig.arity(op);
    if (!arity) raise(Errc::sig, "operator \"" + op + "\" is not in the signature");
    OpTable& table = tables.at(op);
    for (const auto& [args, result] : rows) {
      if (static_cast<int>(args.size()) != *arity)
        raise(Errc::sig, "arity mismatch in table of \"" + op + "\"");
      Elem res = lookup(result);
      if (*arity == 0) {
        table.constant = res;
      } else if (*arity == 1) {
        table.unary[lookup(args[0])] = res;
      } else {
        std::vector<Elem> key;
        key.reserve(args.size());
        for (const std::string& a : args) key.push_back(lookup(a));
        table.general.emplace(std::move(key), res);
      }
    }
  }
  return from_tables(std::move(sig), std::move(carrier), std::move(tables));
}

PartialAlgebra PartialAlgebra::from_tables(Signature sig, std::vector<std::string> carrier,
                                           std::map<std::string, OpTable> tables) {
  if (carrier.empty()) raise(Errc::empty, "carrier must be nonempty");
  const size_t n = carrier.size();

  // Canonical order: carrier sorted by name; remap all indices.
  std::vector<Elem> perm(n);  // old index -> new index
  {
    std::vector<Elem> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(),
              [&](Elem a, Elem b) { return carrier[a] < carrier[b]; });
    std::vector<std::string> sorted;
    sorted.reserve(n);
    for (Elem old : order) sorted.push_back(std::move(carrier[old]));
    for (size_t i = 0; i + 1 < sorted.size(); ++i)
      if (sorted[i] == sorted[i + 1])
        raise(Errc::invariant, "duplicate carrier element \"" + sorted[i] + "\"");
    for (size_t i = 0; i < n; ++i) perm[order[i]] = static_cast<Elem>(i);
    carrier = std::move(sorted);
  }
  auto remap = [&](Elem e) -> Elem {
    if (e >= n) raise(Errc::invariant, "table entry out of carrier range");
    return perm[e];
  };

  for (const auto& [op, arity] : sig.ops()) {
    if (!tables.count(op)) tables.emplace(op, empty_table(arity, n));
    if (tables.at(op).arity != arity) raise(Errc::sig, "table arity mismatch for \"" + op + "\"");
  }
  if (tables.size() != sig.ops().size())
    raise(Errc::sig, "tables present for operators outside the signature");

  std::map<std::string, OpTable> remapped;
  for (auto& [op, table] : tables) {
    OpTable out = empty_table(table.arity, n);
    if (table.arity == 0) {
      if (table.constant == kUndef)
        raise(Errc::invariant, "constant \"" + op + "\" must be defined");
      out.constant = remap(table.constant);
    } else if (table.arity == 1) {
      if (table.unary.size() != n) raise(Errc::invariant, "unary table size mismatch");
      for (size_t i = 0; i < n; ++i)
        if (table.unary[i] != kUndef) out.unary[perm[i]] = remap(table.unary[i]);
    } else {
      for (const auto& [args, result] : table.general) {
        std::vector<Elem> key;
        key.reserve(args.size());
        for (Elem a : args) key.push_back(remap(a));
        out.general.emplace(std::move(key), remap(result));
      }
    }
    remapped.emplace(op, std::move(out));
  }

  PartialAlgebra a;
  a.sig_ = std::move(sig);
  a.carrier_ = std::move(carrier);
  a.tables_ = std::move(remapped);
  return a;
}

std::optional<Elem> PartialAlgebra::index_of(const std::string& name) const {
  auto it = std::lower_bound(carrier_.begin(), carrier_.end(), name);
  if (it == carrier_.end() || *it != name) return std::nullopt;
  return static_cast<Elem>(it - carrier_.begin());
}

const OpTable& PartialAlgebra::table(const std::string& op) const {
  auto it = tables_.find(op);
  if (it == tables_.end()) raise(Errc::sig, "operator \"" + op + "\" is not in the signature");
  return it->second;
}

std::optional<Elem> PartialAlgebra::constant(const std::string& op) const {
  const OpTable& t = table(op);
  if (t.arity != 0) raise(Errc::sig, "\"" + op + "\" is not a constant");
  return t.constant == kUndef ? std::nullopt : std::optional<Elem>(t.constant);
}

std::optional<Elem> PartialAlgebra::apply1(const std::string& op, Elem arg) const {
  const OpTable& t = table(op);
  if (t.arity != 1) raise(Errc::sig, "\"" + op + "\" is not unary");
  Elem r = t.unary[arg];
  return r == kUndef ? std::nullopt : std::optional<Elem>(r);
}

std::optional<Elem> PartialAlgebra::apply(const std::string& op,
                                          std::span<const Elem> args) const {
  const OpTable& t = table(op);
  if (static_cast<int>(args.size()) != t.arity)
    raise(Errc::sig, "arity mismatch applying \"" + op + "\"");
  if (t.arity == 0) return t.constant == kUndef ? std::nullopt : std::optional<Elem>(t.constant);
  if (t.arity == 1) {
    Elem r = t.unary[args[0]];
    return r == kUndef ? std::nullopt : std::optional<Elem>(r);
  }
  auto it = t.general.find(std::vector<Elem>(args.begin(), args.end()));
  if (it == t.general.end()) return std::nullopt;
  return it->second;
}

std::optional<Elem> PartialAlgebra::eval(const Term& t) const {
  return eval_with(t, std::span<const Elem>());
}

std::optional<Elem> PartialAlgebra::eval_with(const Term& t,
                                              std::span<const Elem> bindings) const {
  if (t.is_var()) {
    if (t.var_index() >= static_cast<int>(bindings.size()))
      raise(Errc::var, "unbound variable x" + std::to_string(t.var_index()));
    return bindings[static_cast<size_t>(t.var_index())];
  }
  std::optional<int> arity = sig_.arity(t.op());
  if (!arity) raise(Errc::sig, "operator \"" + t.op() + "\" is not in the signature");
  if (*arity != static_cast<int>(t.args().size()))
    raise(Errc::sig, "arity mismatch for \"" + t.op() + "\"");
  std::vector<Elem> args;
  args.reserve(t.args().size());
  for (const Term& sub : t.args()) {
    std::optional<Elem> v = eval_with(sub, bindings);
    if (!v) return std::nullopt;
    args.push_back(*v);
  }
  return apply(t.op(), args);
}

std::optional<Elem> PartialAlgebra::run(const Trace& t) const {
  std::optional<Elem> cur = constant("ε");
  for (size_t i = 0; i < t.size() && cur; ++i) cur = apply1(t[i].name(), *cur);
  return cur;
}

bool PartialAlgebra::is_identity_on(const std::string& op, const std::vector<Elem>& subset) const {
  const OpTable& t = table(op);
  if (t.arity != 1) raise(Errc::sig, "\"" + op + "\" is not unary");
  return std::all_of(subset.begin(), subset.end(), [&](Elem e) { return t.unary[e] == e; });
}

bool PartialAlgebra::is_subidentity_on(const std::string& op,
                                       const std::vector<Elem>& subset) const {
  const OpTable& t = table(op);
  if (t.arity != 1) raise(Errc::sig, "\"" + op + "\" is not unary");
  bool nonempty = false;
  for (Elem e : subset) {
    Elem r = t.unary[e];
    if (r == kUndef) continue;
    if (r != e) return false;
    nonempty = true;
  }
  return nonempty;
}

namespace {

std::set<Elem> one_step(const PartialAlgebra& a, const std::set<Elem>& from) {
  std::set<Elem> out = from;
  for (const auto& [op, table] : a.tables()) {
    if (table.arity == 0) {
      out.insert(table.constant);
    } else if (table.arity == 1) {
      for (Elem e : from)
        if (table.unary[e] != kUndef) out.insert(table.unary[e]);
    } else {
      for (const auto& [args, result] : table.general)
        if (std::all_of(args.begin(), args.end(), [&](Elem e) { return from.count(e) > 0; }))
          out.insert(result);
    }
  }
  return out;
}

std::set<Elem> constants_of(const PartialAlgebra& a) {
  std::set<Elem> out;
  for (const auto& [op, table] : a.tables())
    if (table.arity == 0) out.insert(table.constant);
  return out;
}

}  // namespace

std::vector<Elem> PartialAlgebra::closure_carrier() const {
  std::set<Elem> cur = constants_of(*this);
  while (true) {
    std::set<Elem> next = one_step(*this, cur);
    if (next.size() == cur.size()) break;
    cur = std::move(next);
  }
  return std::vector<Elem>(cur.begin(), cur.end());
}

PartialAlgebra restrict_to(const PartialAlgebra& a, const std::vector<Elem>& subset) {
  std::vector<Elem> old_of_new(subset.begin(), subset.end());
  std::vector<Elem> new_of_old(a.size(), kUndef);
  for (size_t i = 0; i < old_of_new.size(); ++i) new_of_old[old_of_new[i]] = static_cast<Elem>(i);

  std::vector<std::string> carrier;
  carrier.reserve(subset.size());
  for (Elem e : old_of_new) carrier.push_back(a.name_of(e));

  std::map<std::string, OpTable> tables;
  for (const auto& [op, table] : a.tables()) {
    OpTable out = empty_table(table.arity, carrier.size());
    if (table.arity == 0) {
      if (new_of_old[table.constant] == kUndef)
        raise(Errc::invariant, "subset drops the constant \"" + op + "\"");
      out.constant = new_of_old[table.constant];
    } else if (table.arity == 1) {
      for (Elem e : old_of_new) {
        Elem r = table.unary[e];
        if (r != kUndef && new_of_old[r] != kUndef)
          out.unary[new_of_old[e]] = new_of_old[r];
      }
    } else {
      for (const auto& [args, result] : table.general) {
        if (new_of_old[result] == kUndef) continue;
        std::vector<Elem> key;
        key.reserve(args.size());
        bool inside = true;
        for (Elem e : args) {
          if (new_of_old[e] == kUndef) {
            inside = false;
            break;
          }
          key.push_back(new_of_old[e]);
        }
        if (inside) out.general.emplace(std::move(key), new_of_old[result]);
      }
    }
    tables.emplace(op, std::move(out));
  }
  return PartialAlgebra::from_tables(a.signature(), std::move(carrier), std::move(tables));
}

PartialAlgebra algebraic_closure(const PartialAlgebra& a) {
  return restrict_to(a, a.closure_carrier());
}

PartialAlgebra algebraic_closure_bounded(const PartialAlgebra& a, int rounds) {
  std::set<Elem> cur = constants_of(a);
  for (int r = 0; r < rounds; ++r) {
    std::set<Elem> next = one_step(a, cur);
    if (next.size() == cur.size()) break;
    cur = std::move(next);
  }
  return restrict_to(a, std::vector<Elem>(cur.begin(), cur.end()));
}

bool is_finitely_generated(const PartialAlgebra& a) {
  return a.closure_carrier().size() == a.size();
}

bool is_subalgebra(const PartialAlgebra& sub, const PartialAlgebra& super) {
  if (sub.signature() != super.signature()) return false;
  std::vector<Elem> embed(sub.size());
  for (size_t i = 0; i < sub.size(); ++i) {
    std::optional<Elem> e = super.index_of(sub.name_of(static_cast<Elem>(i)));
    if (!e) return false;
    embed[i] = *e;
  }
  for (const auto& [op, table] : sub.tables()) {
    const OpTable& big = super.table(op);
    if (table.arity == 0) {
      if (embed[table.constant] != big.constant) return false;
    } else if (table.arity == 1) {
      for (size_t i = 0; i < sub.size(); ++i) {
        Elem small_r = table.unary[i];
        Elem big_r = big.unary[embed[i]];
        if (small_r == kUndef) {
          if (big_r != kUndef) return false;  // strong agreement on the sub-carrier
        } else if (big_r != embed[small_r]) {
          return false;
        }
      }
    } else {
      // enumerate sub-carrier tuples
      const int m = table.arity;
      std::vector<Elem> idx(static_cast<size_t>(m), 0);
      while (true) {
        std::vector<Elem> small_args = idx;
        std::vector<Elem> big_args(static_cast<size_t>(m));
        for (int k = 0; k < m; ++k) big_args[static_cast<size_t>(k)] = embed[idx[static_cast<size_t>(k)]];
        std::optional<Elem> small_r = sub.apply(op, small_args);
        std::optional<Elem> big_r = super.apply(op, big_args);
        if (small_r.has_value() != big_r.has_value()) return false;
        if (small_r && embed[*small_r] != *big_r) return false;
        int k = m - 1;
        while (k >= 0 && ++idx[static_cast<size_t>(k)] == sub.size()) idx[static_cast<size_t>(k--)] = 0;
        if (k < 0) break;
      }
    }
  }
  return true;
}

PartialAlgebra direct_product(const std::vector<PartialAlgebra>& factors) {
  if (factors.empty()) raise(Errc::empty, "direct_product needs at least one factor");
  const Signature& sig = factors.front().signature();
  for (const PartialAlgebra& f : factors)
    if (f.signature() != sig) raise(Errc::sig, "factors must share a signature");

  const size_t n = factors.size();
  size_t total = 1;
  for (const PartialAlgebra& f : factors) {
    if (total > 4'000'000 / f.size())
      raise(Errc::limit, "product carrier would exceed the size guard");
    total *= f.size();
  }

  // Row-major strides; index <-> tuple of factor indices.
  std::vector<size_t> stride(n, 1);
  for (size_t i = n; i-- > 1;) stride[i - 1] = stride[i] * factors[i].size();

  std::vector<std::string> carrier;
  carrier.reserve(total);
  {
    std::vector<Elem> tuple(n, 0);
    for (size_t p = 0; p < total; ++p) {
      std::string name = "(";
      for (size_t i = 0; i < n; ++i) {
        if (i) name += ",";
        name += factors[i].name_of(tuple[i]);
      }
      name += ")";
      carrier.push_back(std::move(name));
      size_t i = n;
      while (i-- > 0 && ++tuple[i] == factors[i].size()) tuple[i] = 0;
    }
  }

  std::map<std::string, OpTable> tables;
  for (const auto& [op, arity] : sig.ops()) {
    OpTable out = empty_table(arity, total);
    if (arity == 0) {
      size_t p = 0;
      for (size_t i = 0; i < n; ++i) p += static_cast<size_t>(*factors[i].constant(op)) * stride[i];
      out.constant = static_cast<Elem>(p);
    } else if (arity == 1) {
      std::vector<Elem> tuple(n, 0);
      for (size_t p = 0; p < total; ++p) {
        size_t q = 0;
        bool defined = true;
        for (size_t i = 0; i < n; ++i) {
          Elem r = factors[i].table(op).unary[tuple[i]];
          if (r == kUndef) {
            defined = false;
            break;
          }
          q += static_cast<size_t>(r) * stride[i];
        }
        if (defined) out.unary[p] = static_cast<Elem>(q);
        size_t i = n;
        while (i-- > 0 && ++tuple[i] == factors[i].size()) tuple[i] = 0;
      }
    } else {
      const int m = arity;
      std::vector<size_t> args(static_cast<size_t>(m), 0);
      while (true) {
        bool defined = true;
        size_t q = 0;
        for (size_t i = 0; i < n && defined; ++i) {
          std::vector<Elem> factor_args(static_cast<size_t>(m));
          for (int k = 0; k < m; ++k)
            factor_args[static_cast<size_t>(k)] =
                static_cast<Elem>(args[static_cast<size_t>(k)] / stride[i] % factors[i].size());
          std::optional<Elem> r = factors[i].apply(op, factor_args);
          if (!r)
            defined = false;
          else
            q += static_cast<size_t>(*r) * stride[i];
        }
        if (defined) {
          std::vector<Elem> key(args.begin(), args.end());
          out.general.emplace(std::move(key), static_cast<Elem>(q));
        }
        int k = m - 1;
        while (k >= 0 && ++args[static_cast<size_t>(k)] == total) args[static_cast<size_t>(k--)] = 0;
        if (k < 0) break;
      }
    }
    tables.emplace(op, std::move(out));
  }
  return PartialAlgebra::from_tables(sig, std::move(carrier), std::move(tables));
}

bool check_homomorphism(const std::map<std::string, std::string>& phi, const PartialAlgebra& a,
                        const PartialAlgebra& b, bool strong) {
  if (a.signature() != b.signature()) raise(Errc::sig, "homomorphism needs a common signature");
  std::vector<Elem> image(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    auto it = phi.find(a.name_of(static_cast<Elem>(i)));
    if (it == phi.end())
      raise(Errc::map, "phi is not total: missing \"" + a.name_of(static_cast<Elem>(i)) + "\"");
    std::optional<Elem> target = b.index_of(it->second);
    if (!target) raise(Errc::map, "phi maps outside |B|: \"" + it->second + "\"");
    image[i] = *target;
  }

  for (const auto& [op, table] : a.tables()) {
    const OpTable& tb = b.table(op);
    if (table.arity == 0) {
      if (image[table.constant] != tb.constant) return false;
    } else if (table.arity == 1) {
      for (size_t i = 0; i < a.size(); ++i) {
        Elem ra = table.unary[i];
        Elem rb = tb.unary[image[i]];
        if (ra != kUndef) {
          if (rb == kUndef || rb != image[ra]) return false;
        } else if (strong && rb != kUndef) {
          return false;
        }
      }
    } else {
      const int m = table.arity;
      std::vector<Elem> args(static_cast<size_t>(m), 0);
      while (true) {
        std::vector<Elem> mapped(static_cast<size_t>(m));
        for (int k = 0; k < m; ++k) mapped[static_cast<size_t>(k)] = image[args[static_cast<size_t>(k)]];
        std::optional<Elem> ra = a.apply(op, args);
        std::optional<Elem> rb = b.apply(op, mapped);
        if (ra) {
          if (!rb || *rb != image[*ra]) return false;
        } else if (strong && rb) {
          return false;
        }
        int k = m - 1;
        while (k >= 0 && ++args[static_cast<size_t>(k)] == a.size()) args[static_cast<size_t>(k--)] = 0;
        if (k < 0) break;
      }
    }
  }
  return true;
}

std::optional<std::map<std::string, std::string>> unique_hom_from_fg(const PartialAlgebra& a,
                                                                     const PartialAlgebra& b) {
  if (!is_finitely_generated(a)) raise(Errc::not_fg, "source algebra is not finitely generated");
  if (a.signature() != b.signature()) raise(Errc::sig, "homomorphism needs a common signature");

  // Witness terms discovered along the closure iteration; φ must map each
  // t^A to t^B, so the image is forced.
  std::vector<std::optional<Elem>> image(a.size());
  std::vector<bool> reached(a.size(), false);
  std::vector<Elem> frontier;
  for (const auto& [op, table] : a.tables()) {
    if (table.arity != 0) continue;
    Elem ca = table.constant;
    std::optional<Elem> cb = b.constant(op);
    if (!reached[ca]) {
      reached[ca] = true;
      image[ca] = cb;
      frontier.push_back(ca);
    }
  }
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem e : frontier) {
      for (const auto& [op, table] : a.tables()) {
        if (table.arity == 1) {
          Elem r = table.unary[e];
          if (r == kUndef || reached[r]) continue;
          reached[r] = true;
          image[r] = image[e] ? b.apply1(op, *image[e]) : std::nullopt;
          next.push_back(r);
        } else if (table.arity >= 2) {
          for (const auto& [args, result] : table.general) {
            if (reached[result]) continue;
            if (!std::all_of(args.begin(), args.end(), [&](Elem x) { return reached[x]; }))
              continue;
            std::vector<Elem> mapped;
            bool ok = true;
            for (Elem x : args) {
              if (!image[x]) {
                ok = false;
                break;
              }
              mapped.push_back(*image[x]);
            }
            reached[result] = true;
            image[result] = ok ? b.apply(op, mapped) : std::nullopt;
            next.push_back(result);
          }
        }
      }
    }
    frontier = std::move(next);
  }

  std::map<std::string, std::string> phi;
  for (size_t i = 0; i < a.size(); ++i) {
    if (!image[i]) return std::nullopt;  // some witness term is undefined in B
    phi.emplace(a.name_of(static_cast<Elem>(i)), b.name_of(*image[i]));
  }
  if (!check_homomorphism(phi, a, b, false)) return std::nullopt;
  return phi;
}

Congruence Congruence::of_blocks(std::vector<std::vector<std::string>> blocks) {
  Congruence c;
  std::set<std::string> seen;
  for (std::vector<std::string>& block : blocks) {
    if (block.empty()) raise(Errc::map, "partition blocks must be nonempty");
    std::sort(block.begin(), block.end());
    for (const std::string& m : block)
      if (!seen.insert(m).second) raise(Errc::map, "\"" + m + "\" appears in two blocks");
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  for (size_t i = 0; i < blocks.size(); ++i)
    for (const std::string& m : blocks[i]) c.index_.emplace(m, i);
  c.blocks_ = std::move(blocks);
  return c;
}

Congruence Congruence::identity(const PartialAlgebra& a) {
  std::vector<std::vector<std::string>> blocks;
  for (const std::string& name : a.carrier()) blocks.push_back({name});
  return of_blocks(std::move(blocks));
}

Congruence Congruence::one_block(const PartialAlgebra& a) {
  return of_blocks({a.carrier()});
}

Congruence Congruence::kernel_of(const std::map<std::string, std::string>& f) {
  std::map<std::string, std::vector<std::string>> groups;
  for (const auto& [key, value] : f) groups[value].push_back(key);
  std::vector<std::vector<std::string>> blocks;
  for (auto& [value, members] : groups) blocks.push_back(std::move(members));
  return of_blocks(std::move(blocks));
}

size_t Congruence::block_index_of(const std::string& member) const {
  auto it = index_.find(member);
  if (it == index_.end()) raise(Errc::map, "\"" + member + "\" is not in the partition");
  return it->second;
}

const std::vector<std::string>& Congruence::block_of(const std::string& member) const {
  return blocks_[block_index_of(member)];
}

const std::string& Congruence::block_name(const std::string& member) const {
  return blocks_[block_index_of(member)].front();
}

bool Congruence::same_block(const std::string& a, const std::string& b) const {
  return block_index_of(a) == block_index_of(b);
}

bool Congruence::is_partition_of(const std::vector<std::string>& carrier) const {
  if (index_.size() != carrier.size()) return false;
  return std::all_of(carrier.begin(), carrier.end(),
                     [&](const std::string& name) { return index_.count(name) > 0; });
}

Congruence Congruence::restricted_to(const std::vector<std::string>& subset) const {
  std::set<std::string> keep(subset.begin(), subset.end());
  std::vector<std::vector<std::string>> blocks;
  for (const std::vector<std::string>& block : blocks_) {
    std::vector<std::string> kept;
    for (const std::string& m : block)
      if (keep.count(m)) kept.push_back(m);
    if (!kept.empty()) blocks.push_back(std::move(kept));
  }
  return of_blocks(std::move(blocks));
}

bool check_congruence(const Congruence& theta, const PartialAlgebra& a, bool strong) {
  if (!theta.is_partition_of(a.carrier()))
    raise(Errc::map, "relation is not a partition of the carrier");
  std::vector<size_t> block_of(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    block_of[i] = theta.block_index_of(a.name_of(static_cast<Elem>(i)));

  for (const auto& [op, table] : a.tables()) {
    if (table.arity == 0) continue;  // nothing to relate
    if (table.arity == 1) {
      for (const std::vector<std::string>& block : theta.blocks()) {
        size_t result_block = static_cast<size_t>(-1);
        size_t defined = 0;
        for (const std::string& name : block) {
          Elem e = *a.index_of(name);
          Elem r = table.unary[e];
          if (r == kUndef) continue;
          ++defined;
          if (result_block == static_cast<size_t>(-1)) {
            result_block = block_of[r];
          } else if (block_of[r] != result_block) {
            return false;
          }
        }
        if (strong && defined != 0 && defined != block.size()) return false;
      }
    } else {
      const int m = table.arity;
      // Pairs of componentwise-related tuples with both sides defined.
      for (const auto& [args, result] : table.general) {
        std::vector<size_t> choice(static_cast<size_t>(m), 0);
        while (true) {
          std::vector<Elem> other(static_cast<size_t>(m));
          for (int k = 0; k < m; ++k) {
            const auto& block = theta.blocks()[block_of[args[static_cast<size_t>(k)]]];
            other[static_cast<size_t>(k)] = *a.index_of(block[choice[static_cast<size_t>(k)]]);
          }
          std::optional<Elem> r2 = a.apply(op, other);
          if (r2) {
            if (block_of[*r2] != block_of[result]) return false;
          } else if (strong) {
            return false;
          }
          int k = m - 1;
          while (k >= 0) {
            const auto& block = theta.blocks()[block_of[args[static_cast<size_t>(k)]]];
            if (++choice[static_cast<size_t>(k)] < block.size()) break;
            choice[static_cast<size_t>(k--)] = 0;
          }
          if (k < 0) break;
        }
      }
    }
  }
  return true;
}

PartialAlgebra quotient(const PartialAlgebra& a, const Congruence& theta) {
  if (!check_congruence(theta, a, false))
    raise(Errc::cong, "relation lacks the substitution property");
  std::vector<size_t> block_of(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    block_of[i] = theta.block_index_of(a.name_of(static_cast<Elem>(i)));

  std::vector<std::string> carrier;
  carrier.reserve(theta.block_count());
  for (const std::vector<std::string>& block : theta.blocks()) carrier.push_back(block.front());

  std::map<std::string, OpTable> tables;
  for (const auto& [op, table] : a.tables()) {
    OpTable out = empty_table(table.arity, carrier.size());
    if (table.arity == 0) {
      out.constant = static_cast<Elem>(block_of[table.constant]);
    } else if (table.arity == 1) {
      // Defined on a block iff defined on some representative.
      for (size_t i = 0; i < a.size(); ++i) {
        Elem r = table.unary[i];
        if (r != kUndef) out.unary[block_of[i]] = static_cast<Elem>(block_of[r]);
      }
    } else {
      for (const auto& [args, result] : table.general) {
        std::vector<Elem> key;
        key.reserve(args.size());
        for (Elem e : args) key.push_back(static_cast<Elem>(block_of[e]));
        out.general.insert_or_assign(std::move(key), static_cast<Elem>(block_of[result]));
      }
    }
    tables.emplace(op, std::move(out));
  }
  return PartialAlgebra::from_tables(a.signature(), std::move(carrier), std::move(tables));
}

bool check_subdirect(const PartialAlgebra& a, const std::vector<Congruence>& thetas) {
  if (thetas.empty()) raise(Errc::cong, "a subdirect decomposition needs at least one congruence");
  for (const Congruence& theta : thetas)
    if (!check_congruence(theta, a, false))
      raise(Errc::cong, "component relation is not a congruence");

  std::vector<PartialAlgebra> quotients;
  quotients.reserve(thetas.size());
  for (const Congruence& theta : thetas) quotients.push_back(quotient(a, theta));
  PartialAlgebra prod = direct_product(quotients);

  std::map<std::string, std::string> nu;
  std::set<std::string> images;
  for (const std::string& name : a.carrier()) {
    std::string image = "(";
    for (size_t i = 0; i < thetas.size(); ++i) {
      if (i) image += ",";
      image += thetas[i].block_name(name);
    }
    image += ")";
    if (!images.insert(image).second) return false;  // natural map not injective
    nu.emplace(name, std::move(image));
  }
  // A strong injective homomorphism maps A isomorphically onto a closed
  // image, which is then a subalgebra of the product.
  return check_homomorphism(nu, a, prod, true);
}

PartialAlgebra rename_carrier(const PartialAlgebra& a,
                              const std::map<std::string, std::string>& names) {
  std::vector<std::string> carrier;
  carrier.reserve(a.size());
  std::set<std::string> seen;
  for (const std::string& old : a.carrier()) {
    auto it = names.find(old);
    if (it == names.end()) raise(Errc::map, "renaming misses \"" + old + "\"");
    if (!seen.insert(it->second).second)
      raise(Errc::map, "renaming is not injective at \"" + it->second + "\"");
    carrier.push_back(it->second);
  }
  return PartialAlgebra::from_tables(a.signature(), std::move(carrier), a.tables());
}

std::string to_dot(const PartialAlgebra& a, const std::string& graph_name) {
  if (!a.signature().is_language_signature())
    raise(Errc::sig, "DOT export is defined for unary language signatures");
  std::string out = "digraph " + graph_name + " {\n";
  for (size_t i = 0; i < a.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + a.name_of(static_cast<Elem>(i)) + "\"];\n";
  for (const auto& [op, table] : a.tables()) {
    if (table.arity != 1) continue;
    for (size_t i = 0; i < a.size(); ++i)
      if (table.unary[i] != kUndef)
        out += "  n" + std::to_string(i) + " -> n" + std::to_string(table.unary[i]) +
               " [label=\"" + op + "\"];\n";
  }
  out += "}\n";
  return out;
}

std::vector<Term> all_ground_terms(const Signature& sig, int depth) {
  std::vector<Term> done;
  std::vector<Term> previous;  // terms of the last level
  for (const auto& [op, arity] : sig.ops())
    if (arity == 0) previous.push_back(Term::constant(op));
  done = previous;
  for (int level = 1; level <= depth; ++level) {
    std::vector<Term> fresh;
    for (const auto& [op, arity] : sig.ops()) {
      if (arity == 0) continue;
      // argument tuples over `done` with at least one argument in `previous`
      const size_t m = static_cast<size_t>(arity);
      std::vector<size_t> idx(m, 0);
      while (true) {
        bool touches_last = false;
        for (size_t k = 0; k < m; ++k)
          if (idx[k] >= done.size() - previous.size()) touches_last = true;
        if (touches_last) {
          std::vector<Term> args;
          args.reserve(m);
          for (size_t k = 0; k < m; ++k) args.push_back(done[idx[k]]);
          fresh.push_back(Term::app(op, std::move(args)));
        }
        size_t k = m;
        while (k-- > 0 && ++idx[k] == done.size()) idx[k] = 0;
        if (k == static_cast<size_t>(-1)) break;
      }
    }
    done.insert(done.end(), fresh.begin(), fresh.end());
    previous = std::move(fresh);
    if (previous.empty()) break;
  }
  return done;
}

}  // namespace landin

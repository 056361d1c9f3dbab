#include "landin/category.hpp"

#include <algorithm>

#include "landin/error.hpp"

namespace landin {

Term substitute(const Term& t, std::span<const Term> args) {
  if (t.is_var()) {
    if (t.var_index() >= static_cast<int>(args.size()))
      raise(Errc::var, "substitution misses x" + std::to_string(t.var_index()));
    return args[static_cast<size_t>(t.var_index())];
  }
  std::vector<Term> mapped;
  mapped.reserve(t.args().size());
  for (const Term& a : t.args()) mapped.push_back(substitute(a, args));
  return Term::app(t.op(), std::move(mapped));
}

Derivor Derivor::of(const Signature& sig, std::map<std::string, Term> images) {
  for (const auto& [op, arity] : sig.ops()) {
    auto it = images.find(op);
    if (it == images.end()) raise(Errc::map, "derivor misses operator \"" + op + "\"");
    if (it->second.max_var() >= arity)
      raise(Errc::var, "image of \"" + op + "\" uses a variable beyond its arity");
  }
  if (images.size() != sig.ops().size())
    raise(Errc::sig, "derivor has images for operators outside the signature");
  Derivor d;
  d.images_ = std::move(images);
  return d;
}

Derivor Derivor::identity(const Signature& sig) {
  std::map<std::string, Term> images;
  for (const auto& [op, arity] : sig.ops()) {
    std::vector<Term> vars;
    vars.reserve(static_cast<size_t>(arity));
    for (int i = 0; i < arity; ++i) vars.push_back(Term::var(i));
    images.emplace(op, Term::app(op, std::move(vars)));
  }
  return of(sig, std::move(images));
}

Derivor Derivor::canonical_identity(const PartialAlgebra& a) {
  SymbolSet alpha = g_alphabet(a);
  std::map<std::string, Term> images;
  for (const auto& [op, arity] : a.signature().ops()) {
    if (arity == 0) {
      images.emplace(op, Term::constant(op));
    } else {
      images.emplace(op, alpha.count(Symbol::intern(op))
                             ? Term::app(op, {Term::var(0)})
                             : Term::var(0));
    }
  }
  return of(a.signature(), std::move(images));
}

const Term& Derivor::image(const std::string& op) const {
  auto it = images_.find(op);
  if (it == images_.end()) raise(Errc::map, "derivor has no image for \"" + op + "\"");
  return it->second;
}

Term apply_derivor(const Derivor& d, const Term& t) {
  if (t.is_var()) return t;
  std::vector<Term> derived;
  derived.reserve(t.args().size());
  for (const Term& a : t.args()) derived.push_back(apply_derivor(d, a));
  return substitute(d.image(t.op()), derived);
}

Derivor Derivor::unchecked(std::map<std::string, Term> images) {
  Derivor d;
  d.images_ = std::move(images);
  return d;
}

Derivor compose_derivors(const Derivor& second, const Derivor& first) {
  // Arities were validated on `first` and apply_derivor introduces no new
  // variables, so the composite needs no re-validation.
  std::map<std::string, Term> images;
  for (const auto& [op, image] : first.images())
    images.emplace(op, apply_derivor(second, image));
  return Derivor::unchecked(std::move(images));
}

bool is_canonical_derivor(const Derivor& d, const Signature& sig) {
  for (const auto& [op, arity] : sig.ops()) {
    if (!d.has(op)) return false;
    const Term& image = d.image(op);
    if (arity == 0) {
      if (op == "ε" && image != Term::epsilon()) return false;  // D1
    } else {
      if (image.is_ground()) return false;  // D2
    }
  }
  return true;
}

namespace {

bool term_over_alphabet(const Term& t, const SymbolSet& alpha) {
  if (t.is_var()) return true;
  if (!t.args().empty() || t.op() != "ε") {
    if (t.op() != "ε" && !alpha.count(Symbol::intern(t.op()))) return false;
  }
  for (const Term& a : t.args())
    if (!term_over_alphabet(a, alpha)) return false;
  return true;
}

}  // namespace

bool satisfies_d3(const Derivor& d, const PartialAlgebra& a, const PartialAlgebra& b) {
  SymbolSet alpha_a = g_alphabet(a);
  SymbolSet alpha_b = g_alphabet(b);
  for (const auto& [op, arity] : a.signature().ops()) {
    if (arity != 1) continue;
    const Term& image = d.image(op);
    if (alpha_a.count(Symbol::intern(op))) {
      if (!term_over_alphabet(image, alpha_b)) return false;
    } else {
      if (image != Term::var(0)) return false;
    }
  }
  return true;
}

PartialAlgebra derived_algebra(const Derivor& d, const PartialAlgebra& a) {
  std::map<std::string, OpTable> tables;
  for (const auto& [op, arity] : a.signature().ops()) {
    if (!d.has(op)) raise(Errc::sig, "derivor misses operator \"" + op + "\"");
    const Term& image = d.image(op);
    if (image.max_var() >= arity)
      raise(Errc::sig, "derivor image of \"" + op + "\" exceeds the arity");
    OpTable table;
    table.arity = arity;
    if (arity == 0) {
      std::optional<Elem> v = a.eval(image);
      if (!v) raise(Errc::invariant, "derived constant \"" + op + "\" is undefined");
      table.constant = *v;
    } else if (arity == 1) {
      table.unary.assign(a.size(), kUndef);
      for (size_t i = 0; i < a.size(); ++i) {
        Elem binding[1] = {static_cast<Elem>(i)};
        std::optional<Elem> v = a.eval_with(image, binding);
        if (v) table.unary[i] = *v;
      }
    } else {
      const int m = arity;
      std::vector<Elem> args(static_cast<size_t>(m), 0);
      while (true) {
        std::optional<Elem> v = a.eval_with(image, args);
        if (v) table.general.emplace(args, *v);
        int k = m - 1;
        while (k >= 0 && ++args[static_cast<size_t>(k)] == a.size())
          args[static_cast<size_t>(k--)] = 0;
        if (k < 0) break;
      }
    }
    tables.emplace(op, std::move(table));
  }
  return PartialAlgebra::from_tables(a.signature(), a.carrier(), std::move(tables));
}

bool check_derived_hom(const DerivedHom& h, const PartialAlgebra& a, const PartialAlgebra& b,
                       bool canonical) {
  if (canonical) {
    if (!is_canonical_derivor(h.d, a.signature())) return false;
    if (!satisfies_d3(h.d, a, b)) return false;
  }
  return check_homomorphism(h.phi, a, derived_algebra(h.d, b), h.strong);
}

DerivedHom compose_homs(const DerivedHom& second, const DerivedHom& first) {
  std::map<std::string, std::string> phi;
  for (const auto& [key, mid] : first.phi) {
    auto it = second.phi.find(mid);
    if (it == second.phi.end())
      raise(Errc::map, "composition gap: \"" + mid + "\" has no image");
    phi.emplace(key, it->second);
  }
  return DerivedHom{compose_derivors(second.d, first.d), std::move(phi),
                    second.strong && first.strong};
}

bool derivors_agree_on(const Derivor& lhs, const Derivor& rhs, const SymbolSet& alpha) {
  std::set<std::string> ops;
  for (const auto& [op, image] : lhs.images()) ops.insert(op);
  for (const auto& [op, image] : rhs.images()) ops.insert(op);
  for (const std::string& op : ops) {
    if (op == "ε") {
      if (lhs.has(op) != rhs.has(op)) return false;
      if (lhs.has(op) && lhs.image(op) != rhs.image(op)) return false;
      continue;
    }
    bool on_alpha = alpha.count(Symbol::intern(op)) > 0;
    if (on_alpha) {
      if (!lhs.has(op) || !rhs.has(op) || lhs.image(op) != rhs.image(op)) return false;
    } else {
      if (lhs.has(op) && lhs.image(op) != Term::var(0)) return false;
      if (rhs.has(op) && rhs.image(op) != Term::var(0)) return false;
    }
  }
  return true;
}

Simulation Simulation::make(PrefixLanguage source, PrefixLanguage target,
                            std::map<Symbol, Trace> symbol_map, bool strong, int depth) {
  for (const Symbol& s : source.alphabet()) {
    auto it = symbol_map.find(s);
    if (it == symbol_map.end())
      raise(Errc::map, "symbol map misses \"" + s.name() + "\"");
    if (!it->second.uses_only(target.alphabet()))
      raise(Errc::map, "image of \"" + s.name() + "\" leaves the target alphabet");
  }
  return Simulation(std::move(source), std::move(target), std::move(symbol_map), strong, depth);
}

Simulation Simulation::identity(const PrefixLanguage& lang) {
  std::map<Symbol, Trace> map;
  for (const Symbol& s : lang.alphabet()) map.emplace(s, Trace({s}));
  return make(lang, lang, std::move(map), true, lang.depth());
}

size_t Simulation::max_image_length() const {
  size_t len = 0;
  for (const auto& [sym, image] : map_) len = std::max(len, image.size());
  return len;
}

Trace Simulation::apply(const Trace& s) const {
  Trace out;
  for (size_t i = 0; i < s.size(); ++i) {
    auto it = map_.find(s[i]);
    if (it == map_.end()) raise(Errc::map, "symbol map misses \"" + s[i].name() + "\"");
    out = out.concat(it->second);
  }
  return out;
}

bool check_simulation(const Simulation& f, int depth) {
  auto member_of_target = [&](const Trace& image) {
    if (static_cast<int>(image.size()) > f.target().depth())
      raise(Errc::depth, "target depth " + std::to_string(f.target().depth()) +
                             " cannot decide membership of an image of length " +
                             std::to_string(image.size()));
    return f.target().contains(image);
  };
  for (const Trace& s : f.source().traces()) {
    if (static_cast<int>(s.size()) > depth) continue;
    if (!member_of_target(f.apply(s))) return false;
  }
  if (f.strong()) {
    for (const Trace& s : all_traces(f.source().alphabet(), depth)) {
      if (f.source().contains(s)) continue;
      if (member_of_target(f.apply(s))) return false;
    }
  }
  return true;
}

Simulation compose_simulations(const Simulation& second, const Simulation& first) {
  std::map<Symbol, Trace> map;
  for (const auto& [sym, image] : first.symbol_map()) map.emplace(sym, second.apply(image));
  return Simulation::make(first.source(), second.target(), std::move(map),
                          first.strong() && second.strong(),
                          std::min(first.depth(), second.depth()));
}

VectorSimulation VectorSimulation::make(VectorLanguage source, VectorLanguage target,
                                        std::map<Symbol, std::vector<Symbol>> op_map, bool strong,
                                        int depth) {
  SymbolSet target_union = target.alphabet_vector().union_alphabet();
  for (const Symbol& s : source.alphabet_vector().union_alphabet()) {
    auto it = op_map.find(s);
    if (it == op_map.end()) raise(Errc::map, "op map misses \"" + s.name() + "\"");
    for (const Symbol& t : it->second)
      if (!target_union.count(t))
        raise(Errc::map, "image of \"" + s.name() + "\" leaves the target operations");
  }
  return VectorSimulation(std::move(source), std::move(target), std::move(op_map), strong, depth);
}

VectorSimulation VectorSimulation::identity(const VectorLanguage& lang) {
  std::map<Symbol, std::vector<Symbol>> map;
  for (const Symbol& s : lang.alphabet_vector().union_alphabet()) map.emplace(s, std::vector<Symbol>{s});
  return make(lang, lang, std::move(map), true, lang.depth());
}

std::vector<Symbol> VectorSimulation::apply_word(const std::vector<Symbol>& word) const {
  std::vector<Symbol> out;
  for (const Symbol& s : word) {
    auto it = map_.find(s);
    if (it == map_.end()) raise(Errc::map, "op map misses \"" + s.name() + "\"");
    out.insert(out.end(), it->second.begin(), it->second.end());
  }
  return out;
}

VectorString VectorSimulation::apply(const VectorString& v) const {
  std::optional<std::vector<VectorOp>> ops = linearize(v, source_.alphabet_vector());
  if (!ops) raise(Errc::invariant, v.name() + " is not a product of source operations");
  std::vector<Symbol> word;
  word.reserve(ops->size());
  for (const VectorOp& op : *ops) word.push_back(op.symbol());
  std::vector<Symbol> image = apply_word(word);
  VectorString out(target_.dimension());
  for (const Symbol& s : image) out = out.append(*target_.alphabet_vector().vop(s));
  return out;
}

bool check_vector_simulation(const VectorSimulation& f, int depth) {
  const AlphabetVector& src = f.source().alphabet_vector();
  const AlphabetVector& tgt = f.target().alphabet_vector();
  std::vector<VectorOp> src_ops = src.vops();

  auto image_product = [&](const std::vector<Symbol>& word) {
    std::vector<Symbol> image = f.apply_word(word);
    VectorString out(tgt.dimension());
    for (const Symbol& s : image) out = out.append(*tgt.vop(s));
    return std::pair<VectorString, size_t>(std::move(out), image.size());
  };

  // Concurrency preservation first; without it the extension to the monoid
  // is ill-defined.
  for (size_t i = 0; i < src_ops.size(); ++i)
    for (size_t j = i + 1; j < src_ops.size(); ++j) {
      if (!independent(src_ops[i], src_ops[j])) continue;
      auto ab = image_product({src_ops[i].symbol(), src_ops[j].symbol()});
      auto ba = image_product({src_ops[j].symbol(), src_ops[i].symbol()});
      if (ab.first != ba.first)
        raise(Errc::conc, "images of the commuting pair " + src_ops[i].symbol().name() + "," +
                              src_ops[j].symbol().name() + " do not commute");
    }

  auto member_of_target = [&](const std::pair<VectorString, size_t>& image) {
    if (static_cast<int>(image.second) > f.target().depth())
      raise(Errc::depth, "target depth cannot decide membership of an image of " +
                             std::to_string(image.second) + " operations");
    return f.target().contains(image.first);
  };

  for (const VectorString& v : f.source().vectors()) {
    std::optional<std::vector<VectorOp>> ops = linearize(v, src);
    if (static_cast<int>(ops->size()) > depth) continue;
    std::vector<Symbol> word;
    for (const VectorOp& op : *ops) word.push_back(op.symbol());
    if (!member_of_target(image_product(word))) return false;
  }
  if (f.strong()) {
    // All op words up to the depth, members or not.
    std::vector<std::vector<Symbol>> words{{}};
    size_t level_begin = 0;
    for (int len = 0; len < depth; ++len) {
      size_t level_end = words.size();
      for (size_t i = level_begin; i < level_end; ++i)
        for (const VectorOp& op : src_ops) {
          std::vector<Symbol> w = words[i];
          w.push_back(op.symbol());
          words.push_back(std::move(w));
        }
      level_begin = level_end;
    }
    for (const std::vector<Symbol>& word : words) {
      VectorString v(src.dimension());
      for (const Symbol& s : word) v = v.append(*src.vop(s));
      if (f.source().contains(v)) continue;
      if (member_of_target(image_product(word))) return false;
    }
  }
  return true;
}

DerivedHom functor_f_on_morphism(const Simulation& f, const SymbolSet& sigma) {
  std::map<std::string, Term> images;
  images.emplace("ε", Term::epsilon());
  for (const Symbol& s : sigma) {
    auto it = f.symbol_map().find(s);
    if (it != f.symbol_map().end() && f.source().alphabet().count(s))
      images.emplace(s.name(), Term::spine(Term::var(0), it->second));
    else
      images.emplace(s.name(), Term::var(0));
  }
  Derivor d = Derivor::of(Signature::language(sigma), std::move(images));
  std::map<std::string, std::string> phi;
  for (const Trace& s : f.source().traces()) phi.emplace(s.name(), f.apply(s).name());
  return DerivedHom{std::move(d), std::move(phi), f.strong()};
}

DerivedHom functor_f_prime_on_morphism(const VectorSimulation& f, const SymbolSet& sigma) {
  std::map<std::string, Term> images;
  images.emplace("ε", Term::epsilon());
  SymbolSet src_union = f.source().alphabet_vector().union_alphabet();
  for (const Symbol& s : sigma) {
    auto it = f.op_map().find(s);
    if (it != f.op_map().end() && src_union.count(s))
      images.emplace(s.name(), Term::spine(Term::var(0), Trace(it->second)));
    else
      images.emplace(s.name(), Term::var(0));
  }
  Derivor d = Derivor::of(Signature::language(sigma), std::move(images));
  std::map<std::string, std::string> phi;
  for (const VectorString& v : f.source().vectors()) phi.emplace(v.name(), f.apply(v).name());
  return DerivedHom{std::move(d), std::move(phi), f.strong()};
}

Simulation functor_g_on_morphism(const DerivedHom& h, const PartialAlgebra& a,
                                 const PartialAlgebra& b, int depth) {
  if (!is_canonical_derivor(h.d, a.signature()) || !satisfies_d3(h.d, a, b))
    raise(Errc::canon, "derivor violates the canonical restrictions; no simulation reading");
  PrefixLanguage source = g_of_algebra(a, depth);
  std::map<Symbol, Trace> map;
  size_t longest = 1;
  for (const Symbol& s : source.alphabet()) {
    Term::Spine spine = h.d.image(s.name()).spine_word();
    if (!spine.over_variable)
      raise(Errc::canon, "image of \"" + s.name() + "\" is not a spine over x0");
    longest = std::max(longest, spine.word.size());
    map.emplace(s, std::move(spine.word));
  }
  PrefixLanguage target = g_of_algebra(b, depth * static_cast<int>(longest));
  return Simulation::make(std::move(source), std::move(target), std::move(map), h.strong, depth);
}

DerivedHom counit(const PartialAlgebra& a, int depth) {
  PrefixLanguage ga = g_of_algebra(a, depth);
  std::map<std::string, std::string> phi;
  for (const Trace& t : ga.traces()) phi.emplace(t.name(), a.name_of(*a.run(t)));
  return DerivedHom{Derivor::canonical_identity(a), std::move(phi), true};
}

CheckReport check_naturality(const DerivedHom& h, const PartialAlgebra& a,
                             const PartialAlgebra& b, int depth) {
  CheckReport report;
  report.check = "NATURALITY";
  report.instance = "counit square";
  report.depth = depth;

  auto fail = [&](Counterexample cex) {
    report.pass = false;
    report.counterexample = std::move(cex);
    return report;
  };

  if (!check_derived_hom(h, a, b, true))
    return fail({"(d,φ)", "not a canonical derived homomorphism", ""});

  Simulation f = functor_g_on_morphism(h, a, b, depth);
  int target_depth = depth * static_cast<int>(std::max<size_t>(1, f.max_image_length()));
  SymbolSet sigma = a.signature().unary_symbols();

  PartialAlgebra fga = f_of_language(f.source(), sigma);
  DerivedHom fgh = functor_f_on_morphism(f, sigma);

  DerivedHom left = compose_homs(counit(b, target_depth), fgh);
  DerivedHom right = compose_homs(h, counit(a, depth));

  if (!check_derived_hom(left, fga, b, true))
    return fail({"counit ∘ 𝔽𝔾(h)", "not a canonical derived homomorphism", ""});
  if (!check_derived_hom(right, fga, b, true))
    return fail({"h ∘ counit", "not a canonical derived homomorphism", ""});

  if (!derivors_agree_on(left.d, right.d, g_alphabet(a)))
    return fail({"derivor", "left leg", "right leg"});
  for (const Trace& s : f.source().traces()) {
    const std::string& l = left.phi.at(s.name());
    const std::string& r = right.phi.at(s.name());
    if (l != r) return fail({s.name(), l, r});
  }
  report.pass = true;
  return report;
}

namespace {

std::vector<Trace> words_up_to(const SymbolSet& alphabet, int maxlen) {
  return all_traces(alphabet, maxlen);
}

}  // namespace

AdjunctionResult check_adjunction(const PrefixLanguage& lang, const PartialAlgebra& a,
                                  const Simulation& f, int depth, int search_bound) {
  if (f.source() != lang) raise(Errc::map, "f does not start from the given language");
  if (!check_simulation(f, depth)) raise(Errc::map, "f is not a simulation into G(A)");

  AdjunctionResult result;
  result.report.check = "ADJUNCTION";
  result.report.instance = "universal factorization through the unit";
  result.report.depth = depth;
  auto fail = [&](Counterexample cex) {
    result.report.pass = false;
    result.report.counterexample = std::move(cex);
    return result;
  };

  SymbolSet sigma = a.signature().unary_symbols();
  SymbolSet alpha_a = g_alphabet(a);
  PartialAlgebra fl = f_of_language(lang, sigma);

  // The mediating morphism: d spells f, φ is forced by finite generation.
  std::map<std::string, Term> images;
  images.emplace("ε", Term::epsilon());
  for (const Symbol& s : sigma)
    images.emplace(s.name(), lang.alphabet().count(s)
                                 ? Term::spine(Term::var(0), f.symbol_map().at(s))
                                 : Term::var(0));
  Derivor d = Derivor::of(Signature::language(sigma), std::move(images));
  std::map<std::string, std::string> phi;
  for (const Trace& s : lang.traces()) {
    std::optional<Elem> value = a.run(f.apply(s));
    if (!value) return fail({s.name(), "f(s) ∈ G(A)", "undefined in A"});
    phi.emplace(s.name(), a.name_of(*value));
  }
  result.mediating = DerivedHom{d, phi, f.strong()};

  if (!check_derived_hom(result.mediating, fl, a, true))
    return fail({"(d,φ)", "not a canonical derived homomorphism", ""});

  // Triangle 1: 𝔾(d,φ) ∘ 1_L = f. The unit is the identity since
  // G(F(L)) = L; reading the simulation back must reproduce f.
  Simulation readback = functor_g_on_morphism(result.mediating, fl, a, lang.depth());
  if (readback.source() != lang)
    return fail({"𝔾(F(L))", "differs from L", ""});
  for (const Symbol& s : lang.alphabet())
    if (readback.symbol_map().at(s) != f.symbol_map().at(s))
      return fail({s.name(), readback.symbol_map().at(s).name(), f.symbol_map().at(s).name()});

  // Triangle 2: (Id_A, g_A) ∘ 𝔽(f) = (d,φ).
  size_t longest = std::max<size_t>(1, f.max_image_length());
  int ga_depth = lang.depth() * static_cast<int>(longest);
  DerivedHom ff = functor_f_on_morphism(
      Simulation::make(lang, g_of_algebra(a, ga_depth), f.symbol_map(), f.strong(), depth),
      sigma);
  DerivedHom composite = compose_homs(counit(a, ga_depth), ff);
  if (!derivors_agree_on(composite.d, d, lang.alphabet()))
    return fail({"triangle derivor", "counit ∘ 𝔽(f)", "(d,φ)"});
  for (const Trace& s : lang.traces()) {
    const std::string& l = composite.phi.at(s.name());
    const std::string& r = phi.at(s.name());
    if (l != r) return fail({s.name(), l, r});
  }

  // Uniqueness: enumerate canonical derivors with spine length <=
  // search_bound; exactly one valid derived homomorphism may read back to f.
  std::vector<Trace> spines = words_up_to(alpha_a, search_bound);
  std::vector<Symbol> alphabet(lang.alphabet().begin(), lang.alphabet().end());
  double combos = 1;
  for (size_t i = 0; i < alphabet.size(); ++i) combos *= static_cast<double>(spines.size());
  if (combos > 250000.0)
    raise(Errc::limit, "uniqueness search space exceeds the guard");

  size_t found = 0;
  std::vector<size_t> pick(alphabet.size(), 0);
  while (true) {
    std::map<std::string, Term> candidate_images;
    candidate_images.emplace("ε", Term::epsilon());
    for (const Symbol& s : sigma)
      if (!lang.alphabet().count(s)) candidate_images.emplace(s.name(), Term::var(0));
    std::map<Symbol, Trace> candidate_map;
    for (size_t i = 0; i < alphabet.size(); ++i) {
      candidate_images.emplace(alphabet[i].name(), Term::spine(Term::var(0), spines[pick[i]]));
      candidate_map.emplace(alphabet[i], spines[pick[i]]);
    }
    Derivor candidate = Derivor::of(Signature::language(sigma), std::move(candidate_images));

    // φ forced along the traces; undefined evaluation kills the candidate.
    bool viable = true;
    std::map<std::string, std::string> candidate_phi;
    for (const Trace& s : lang.traces()) {
      Trace image;
      for (size_t i = 0; i < s.size(); ++i) image = image.concat(candidate_map.at(s[i]));
      std::optional<Elem> value = a.run(image);
      if (!value) {
        viable = false;
        break;
      }
      candidate_phi.emplace(s.name(), a.name_of(*value));
    }
    if (viable) {
      DerivedHom h{candidate, candidate_phi, f.strong()};
      bool reads_back = true;
      for (const Symbol& s : lang.alphabet())
        if (candidate_map.at(s) != f.symbol_map().at(s)) reads_back = false;
      if (reads_back && check_derived_hom(h, fl, a, true)) ++found;
    }
    size_t k = alphabet.size();
    while (k-- > 0 && ++pick[k] == spines.size()) pick[k] = 0;
    if (k == static_cast<size_t>(-1)) break;
  }
  result.candidates_found = found;
  if (found != 1)
    return fail({"canonical derivors factoring f", std::to_string(found), "1"});

  result.report.pass = true;
  return result;
}

CheckReport check_fprime_square(const VectorSimulation& f,
                                const std::vector<PrefixLanguage>& source_parts,
                                const std::vector<PrefixLanguage>& target_parts, int depth) {
  CheckReport report;
  report.check = "FPRIME_SQUARE";
  report.instance = "𝔾U𝔽′ square over h_L";
  report.depth = depth;
  auto fail = [&](Counterexample cex) {
    report.pass = false;
    report.counterexample = std::move(cex);
    return report;
  };

  if (!check_vector_simulation(f, depth)) return fail({"f", "not a simulation", ""});

  SymbolSet sigma = set_union(f.source().alphabet_vector().union_alphabet(),
                              f.target().alphabet_vector().union_alphabet());
  DecomposedAlgebra src = f_prime(f.source(), sigma);
  DecomposedAlgebra tgt = f_prime(f.target(), sigma);
  DerivedHom ufp = functor_f_prime_on_morphism(f, sigma);

  size_t longest = 1;
  for (const auto& [sym, word] : f.op_map()) longest = std::max(longest, word.size());
  int target_depth = depth * static_cast<int>(longest);

  Simulation gufp = functor_g_on_morphism(ufp, src.algebra, tgt.algebra, depth);

  // h_L on the source side: composition string ↦ product of vector ops.
  PrefixLanguage source_comp = compose_parallel(source_parts, depth);
  PrefixLanguage target_comp = compose_parallel(target_parts, target_depth);
  if (gufp.source() != source_comp)
    return fail({"𝔾U𝔽′(L)", "differs from the parallel composition", ""});

  const AlphabetVector& src_av = f.source().alphabet_vector();
  const AlphabetVector& tgt_av = f.target().alphabet_vector();
  for (const Trace& s : source_comp.traces()) {
    // down then across: f(h_L(s))
    VectorString down(src_av.dimension());
    for (size_t i = 0; i < s.size(); ++i) down = down.append(*src_av.vop(s[i]));
    VectorString down_across = f.apply(down);
    // across then down: h_L'(𝔾U𝔽′(f)(s))
    Trace across = gufp.apply(s);
    if (!target_comp.contains(across))
      return fail({s.name(), across.name(), "not in the target composition"});
    VectorString across_down(tgt_av.dimension());
    for (size_t i = 0; i < across.size(); ++i) across_down = across_down.append(*tgt_av.vop(across[i]));
    if (down_across != across_down) return fail({s.name(), down_across.name(), across_down.name()});
  }
  report.pass = true;
  return report;
}

}  // namespace landin

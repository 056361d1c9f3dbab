#include <doctest.h>

#include "landin/category.hpp"
#include "landin/error.hpp"
#include "landin/instances.hpp"

using namespace landin;

namespace {

PrefixLanguage lang(const char* alphabet, std::initializer_list<const char*> flats, int depth) {
  SymbolSet a = symbols_of_chars(alphabet);
  std::set<Trace> traces;
  for (const char* f : flats) traces.insert(trace_from_flat(f, a));
  return PrefixLanguage::make(a, traces, depth);
}

Term random_unary_term(Rng& rng, const char* alphabet, int depth, bool ground) {
  Term t = ground ? Term::epsilon() : Term::var(0);
  int len = rng.range(0, depth);
  for (int i = 0; i < len; ++i) {
    char c = alphabet[rng.below(std::string(alphabet).size())];
    t = Term::app(std::string(1, c), {std::move(t)});
  }
  return t;
}

// the f(a) = "bc" instance from ({a},{ε,a}) into F({ε,b,bc}); the target is
// carried at depth 8 so membership of every image up to depth 4 is decided
struct BcInstance {
  PrefixLanguage source = lang("a", {"", "a"}, 2);
  PrefixLanguage target = lang("bc", {"", "b", "bc"}, 8);
  SymbolSet sigma = symbols_of_chars("abc");
  Simulation f = Simulation::make(source, target, {{Symbol::intern("a"), Trace::chars("bc")}},
                                  true, 2);
};

}  // namespace

TEST_SUITE("category") {

TEST_CASE("simultaneous substitution") {
  Term s = Term::parse("((ε)b)");
  CHECK(substitute(Term::var(0), std::vector<Term>{s}) == s);
  CHECK(substitute(Term::parse("(x0)a"), std::vector<Term>{s}) == Term::parse("(((ε)b))a"));
  CHECK_THROWS_AS(substitute(Term::var(1), std::vector<Term>{s}), Error);

  Rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    Term t = random_unary_term(rng, "ab", 4, false);
    Term u = random_unary_term(rng, "ab", 4, false);
    Term v = random_unary_term(rng, "ab", 4, rng.chance_in(1, 2));
    Term left = substitute(substitute(t, std::vector<Term>{u}), std::vector<Term>{v});
    Term right = substitute(t, std::vector<Term>{substitute(u, std::vector<Term>{v})});
    CHECK(left == right);  // associativity of substitution
  }
}

TEST_CASE("derivors rewrite terms inductively") {
  SymbolSet sigma = symbols_of_chars("abc");
  Signature sig = Signature::language(sigma);
  Derivor id = Derivor::identity(sig);
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Term t = random_unary_term(rng, "abc", 5, rng.chance_in(1, 2));
    CHECK(apply_derivor(id, t) == t);
  }

  std::map<std::string, Term> images;
  images.emplace("ε", Term::epsilon());
  images.emplace("a", Term::parse("((x0)b)c"));
  images.emplace("b", Term::var(0));
  images.emplace("c", Term::parse("(x0)c"));
  Derivor d = Derivor::of(sig, std::move(images));
  CHECK(apply_derivor(d, Term::parse("((ε)a)")) == Term::parse("(((ε)b)c)"));

  // composition agrees with composing the derivors first
  std::map<std::string, Term> swap;
  swap.emplace("ε", Term::epsilon());
  swap.emplace("a", Term::parse("(x0)b"));
  swap.emplace("b", Term::parse("(x0)a"));
  swap.emplace("c", Term::parse("(x0)c"));
  Derivor e = Derivor::of(sig, std::move(swap));
  Derivor ed = compose_derivors(e, d);
  for (int trial = 0; trial < 40; ++trial) {
    Term t = random_unary_term(rng, "abc", 5, rng.chance_in(1, 2));
    CHECK(apply_derivor(ed, t) == apply_derivor(e, apply_derivor(d, t)));
  }

  CHECK_THROWS_AS(Derivor::of(sig, {{"ε", Term::epsilon()}}), Error);  // not total
  CHECK_THROWS_AS(Derivor::of(sig, {{"ε", Term::epsilon()},
                                    {"a", Term::var(1)},
                                    {"b", Term::var(0)},
                                    {"c", Term::var(0)}}),
                  Error);  // variable beyond the arity
}

TEST_CASE("derived algebras reinterpret the operations") {
  BcInstance bc;
  PartialAlgebra a = f_of_language(bc.target, bc.sigma);
  Signature sig = a.signature();

  Derivor id = Derivor::identity(sig);
  CHECK(derived_algebra(id, a) == a);

  std::map<std::string, Term> images;
  images.emplace("ε", Term::epsilon());
  images.emplace("a", Term::parse("((x0)b)c"));
  images.emplace("b", Term::var(0));
  images.emplace("c", Term::var(0));
  Derivor d = Derivor::of(sig, std::move(images));
  PartialAlgebra da = derived_algebra(d, a);
  CHECK(da.name_of(*da.apply1("a", *da.index_of("ε"))) == "bc");
  CHECK_FALSE(da.apply1("a", *da.index_of("b")).has_value());
  CHECK_FALSE(da.apply1("a", *da.index_of("bc")).has_value());

  // evaluation through the derived algebra = derivor then evaluation
  Rng rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    Term t = random_unary_term(rng, "abc", 4, true);
    std::optional<Elem> left = da.eval(t);
    std::optional<Elem> right = a.eval(apply_derivor(d, t));
    CHECK(left == right);
  }
}

TEST_CASE("canonical restrictions on derivors") {
  SymbolSet sigma = symbols_of_chars("ab");
  Signature sig = Signature::language(sigma);
  CHECK(is_canonical_derivor(Derivor::identity(sig), sig));

  std::map<std::string, Term> ground_image;
  ground_image.emplace("ε", Term::epsilon());
  ground_image.emplace("a", Term::parse("(ε)b"));  // unary to a constant term
  ground_image.emplace("b", Term::var(0));
  CHECK_FALSE(is_canonical_derivor(Derivor::of(sig, std::move(ground_image)), sig));

  std::map<std::string, Term> moved_eps;
  moved_eps.emplace("ε", Term::parse("(ε)a"));
  moved_eps.emplace("a", Term::parse("(x0)a"));
  moved_eps.emplace("b", Term::var(0));
  CHECK_FALSE(is_canonical_derivor(Derivor::of(sig, std::move(moved_eps)), sig));
}

TEST_CASE("derived homomorphisms validate against the derived algebra") {
  BcInstance bc;
  PartialAlgebra fl = f_of_language(bc.source, bc.sigma);
  PartialAlgebra a = f_of_language(bc.target, bc.sigma);

  std::map<std::string, std::string> id_map;
  for (const std::string& name : a.carrier()) id_map.emplace(name, name);
  DerivedHom identity{Derivor::canonical_identity(a), id_map, true};
  CHECK(check_derived_hom(identity, a, a, true));

  DerivedHom mediating = functor_f_on_morphism(bc.f, bc.sigma);
  // 𝔽(f) : F(L) -> F(G(A)); here the target is F(target) itself
  CHECK(check_derived_hom(mediating, fl, a, true));

  DerivedHom broken = mediating;
  broken.phi.at("a") = "b";
  CHECK_FALSE(check_derived_hom(broken, fl, a, true));
}

TEST_CASE("simulations are checked in both directions") {
  BcInstance bc;
  CHECK(check_simulation(Simulation::identity(bc.source), 2));
  CHECK(check_simulation(bc.f, 2));
  CHECK(check_simulation(bc.f, 4));  // strong across all a-strings to depth 4

  Simulation wrong = Simulation::make(bc.source, bc.target,
                                      {{Symbol::intern("a"), Trace::chars("c")}}, false, 2);
  CHECK_FALSE(check_simulation(wrong, 2));

  PrefixLanguage shallow = lang("bc", {"", "b", "bc"}, 3);
  Simulation deep = Simulation::make(bc.source, shallow,
                                     {{Symbol::intern("a"), Trace::chars("bc")}}, true, 2);
  try {
    check_simulation(deep, 4);  // f(aa) is longer than the target's bound
    FAIL("expected E_DEPTH");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::depth);
  }

  CHECK_THROWS_AS(Simulation::make(bc.source, bc.target, {}, false, 2), Error);
}

TEST_CASE("vector simulations must preserve concurrency") {
  PrefixLanguage l1 = lang("a", {"", "a"}, 2);
  PrefixLanguage l2 = lang("b", {"", "b"}, 2);
  VectorLanguage source = vfs({l1, l2}, 2);
  CHECK(check_vector_simulation(VectorSimulation::identity(source), 2));

  // images of the independent pair land on a shared component and clash
  PrefixLanguage m1 = lang("pq", {"", "p", "q", "pq", "qp"}, 4);
  VectorLanguage target = vfs({m1, m1}, 4);
  VectorSimulation clashing = VectorSimulation::make(
      source, target,
      {{Symbol::intern("a"), {Symbol::intern("p")}}, {Symbol::intern("b"), {Symbol::intern("q")}}},
      false, 2);
  try {
    check_vector_simulation(clashing, 2);
    FAIL("expected E_CONC");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::conc);
  }
}

TEST_CASE("the functors act on morphisms") {
  BcInstance bc;
  DerivedHom h = functor_f_on_morphism(bc.f, bc.sigma);
  CHECK(h.d.image("a") == Term::parse("((x0)b)c"));
  CHECK(h.d.image("b") == Term::var(0));
  CHECK(h.phi.at("ε") == "ε");
  CHECK(h.phi.at("a") == "bc");
  CHECK(h.strong);

  // identity goes to the canonical identity pair
  Simulation id = Simulation::identity(bc.target);
  DerivedHom hid = functor_f_on_morphism(id, bc.sigma);
  PartialAlgebra a = f_of_language(bc.target, bc.sigma);
  CHECK(derivors_agree_on(hid.d, Derivor::canonical_identity(a), g_alphabet(a)));
  for (const std::string& name : a.carrier()) CHECK(hid.phi.at(name) == name);

  // reading the simulation back
  PartialAlgebra fl = f_of_language(bc.source, bc.sigma);
  Simulation back = functor_g_on_morphism(h, fl, a, bc.source.depth());
  CHECK(back.symbol_map().at(Symbol::intern("a")) == Trace::chars("bc"));
  CHECK(back.source() == bc.source);

  std::map<std::string, Term> sneaky;
  sneaky.emplace("ε", Term::epsilon());
  sneaky.emplace("a", Term::parse("(ε)b"));
  sneaky.emplace("b", Term::var(0));
  sneaky.emplace("c", Term::var(0));
  DerivedHom bad{Derivor::of(a.signature(), std::move(sneaky)), h.phi, false};
  CHECK_THROWS_AS(functor_g_on_morphism(bad, fl, a, 2), Error);
}

TEST_CASE("functor laws on random simulations") {
  Rng rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    NaturalityInstance inst = random_naturality_instance(rng);
    Simulation f = functor_g_on_morphism(inst.h, inst.a, inst.b, inst.depth);
    SymbolSet sigma = inst.a.signature().unary_symbols();
    DerivedHom round = functor_f_on_morphism(f, sigma);
    CHECK(derivors_agree_on(round.d, inst.h.d, g_alphabet(inst.a)));  // 𝔾𝔽 = Id on the map
    for (const auto& [name, value] : round.phi) CHECK(inst.h.phi.at(name) == value);
  }
}

TEST_CASE("composition of simulations stays a simulation") {
  Rng rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    NaturalityInstance inst = random_naturality_instance(rng);
    Simulation f = functor_g_on_morphism(inst.h, inst.a, inst.b, inst.depth);
    Simulation id_target = Simulation::identity(f.target());
    Simulation composed = compose_simulations(id_target, f);
    CHECK(check_simulation(composed, inst.depth));
    CHECK(composed.symbol_map() == f.symbol_map());
  }
}

TEST_CASE("composition is associative and preserves derived homomorphisms") {
  Rng rng(71);
  for (int trial = 0; trial < 12; ++trial) {
    // a composable triple: L --f--> L' --doubling--> L'' built from f's target
    NaturalityInstance inst = random_naturality_instance(rng);
    Simulation f = functor_g_on_morphism(inst.h, inst.a, inst.b, inst.depth);

    // g doubles every symbol of f's target; its own target is closed under that
    std::map<Symbol, Trace> doubling;
    std::set<Trace> doubled;
    for (const Symbol& s : f.target().alphabet())
      doubling.emplace(s, Trace({s, s}));
    for (const Trace& t : f.target().traces()) {
      Trace image;
      for (size_t i = 0; i < t.size(); ++i) image = image.concat(doubling.at(t[i]));
      doubled.insert(image);
    }
    PrefixLanguage big = PrefixLanguage::closure_of(f.target().alphabet(), doubled,
                                                    2 * f.target().depth());
    Simulation g = Simulation::make(f.target(), big, doubling, false, f.target().depth());
    Simulation h = Simulation::identity(big);

    Simulation left = compose_simulations(h, compose_simulations(g, f));
    Simulation right = compose_simulations(compose_simulations(h, g), f);
    CHECK(left.symbol_map() == right.symbol_map());
    CHECK(check_simulation(left, inst.depth));

    // the same triple through the functor: composites stay derived homs
    SymbolSet sigma = inst.a.signature().unary_symbols();
    for (const Symbol& s : big.alphabet()) sigma.insert(s);
    PartialAlgebra fa = f_of_language(f.source(), sigma);
    PartialAlgebra fc = f_of_language(big, sigma);
    DerivedHom hf = functor_f_on_morphism(
        Simulation::make(f.source(), f.target(), f.symbol_map(), false, f.depth()), sigma);
    DerivedHom hg = functor_f_on_morphism(g, sigma);
    DerivedHom hleft = compose_homs(hg, hf);
    CHECK(check_derived_hom(hleft, fa, fc, true));
    DerivedHom via_composite = functor_f_on_morphism(compose_simulations(g, f), sigma);
    CHECK(derivors_agree_on(hleft.d, via_composite.d, g_alphabet(fa)));
    CHECK(hleft.phi == via_composite.phi);
  }
}

TEST_CASE("the counit square commutes") {
  Rng rng(43);
  for (int trial = 0; trial < 15; ++trial) {
    NaturalityInstance inst = random_naturality_instance(rng);
    CheckReport report = check_naturality(inst.h, inst.a, inst.b, inst.depth);
    INFO((report.counterexample ? report.counterexample->witness : std::string()));
    CHECK(report.pass);
  }

  // identity instance
  BcInstance bc;
  PartialAlgebra a = f_of_language(bc.target, bc.sigma);
  std::map<std::string, std::string> id_map;
  for (const std::string& name : a.carrier()) id_map.emplace(name, name);
  DerivedHom identity{Derivor::canonical_identity(a), id_map, true};
  CHECK(check_naturality(identity, a, a, bc.target.depth()).pass);

  // corrupting φ at one point is caught
  DerivedHom broken = identity;
  broken.phi.at("bc") = "b";
  CheckReport report = check_naturality(broken, a, a, bc.target.depth());
  CHECK_FALSE(report.pass);
  CHECK(report.counterexample.has_value());
}

TEST_CASE("the adjunction instance of the bc simulation") {
  BcInstance bc;
  PartialAlgebra a = f_of_language(bc.target, bc.sigma);
  AdjunctionResult result = check_adjunction(bc.source, a, bc.f, 2, 3);
  INFO((result.report.counterexample ? result.report.counterexample->witness : std::string()));
  CHECK(result.report.pass);
  CHECK(result.candidates_found == 1);
  CHECK(result.mediating.d.image("a") == Term::parse("((x0)b)c"));
  CHECK(result.mediating.phi.at("ε") == "ε");
  CHECK(result.mediating.phi.at("a") == "bc");
}

TEST_CASE("the initial-like adjunction instance") {
  PrefixLanguage point = lang("a", {""}, 0);
  BcInstance bc;
  PartialAlgebra a = f_of_language(bc.target, bc.sigma);
  Simulation f = Simulation::make(point, g_of_algebra(a, 2),
                                  {{Symbol::intern("a"), Trace()}}, false, 0);
  AdjunctionResult result = check_adjunction(point, a, f, 0, 1);
  CHECK(result.report.pass);
  CHECK(result.mediating.phi.at("ε") == "ε");
}

TEST_CASE("random adjunction instances") {
  Rng rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    AdjunctionInstance inst = random_adjunction_instance(rng);
    AdjunctionResult result =
        check_adjunction(inst.source, inst.algebra, inst.f, inst.source.depth(), inst.search_bound);
    INFO((result.report.counterexample ? result.report.counterexample->witness : std::string()));
    CHECK(result.report.pass);
  }
}

TEST_CASE("the vector functor square") {
  Rng rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    SquareInstance inst = random_square_instance(rng);
    CheckReport report =
        check_fprime_square(inst.f, inst.source_parts, inst.target_parts, inst.depth);
    INFO((report.counterexample ? report.counterexample->witness : std::string()));
    CHECK(report.pass);
  }
}

TEST_CASE("canonical identity is neutral for composition") {
  BcInstance bc;
  PartialAlgebra fl = f_of_language(bc.source, bc.sigma);
  PartialAlgebra a = f_of_language(bc.target, bc.sigma);
  DerivedHom h = functor_f_on_morphism(bc.f, bc.sigma);

  std::map<std::string, std::string> id_source, id_target;
  for (const std::string& name : fl.carrier()) id_source.emplace(name, name);
  for (const std::string& name : a.carrier()) id_target.emplace(name, name);
  DerivedHom one_source{Derivor::canonical_identity(fl), id_source, true};
  DerivedHom one_target{Derivor::canonical_identity(a), id_target, true};

  DerivedHom left = compose_homs(one_target, h);
  DerivedHom right = compose_homs(h, one_source);
  CHECK(derivors_agree_on(left.d, h.d, g_alphabet(fl)));
  CHECK(derivors_agree_on(right.d, h.d, g_alphabet(fl)));
  CHECK(left.phi == h.phi);
  CHECK(right.phi == h.phi);
  CHECK(check_derived_hom(left, fl, a, true));
  CHECK(check_derived_hom(right, fl, a, true));
}

}  // TEST_SUITE

#include <doctest.h>

#include <algorithm>

#include "landin/correspondence.hpp"
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

// ε -> q0, a: q0 -> q1, and q2 unreachable.
PartialAlgebra three_point() {
  Signature sig = Signature::language(symbols_of_chars("a"));
  PartialAlgebra::Entries entries;
  entries["ε"][{}] = "q0";
  entries["a"][{"q0"}] = "q1";
  return PartialAlgebra::make(sig, {"q0", "q1", "q2"}, entries);
}

// carrier {c0, gen}: one constant plus a binary operation.
Signature binary_signature() { return Signature::of({{"c", 0}, {"f", 2}}); }

size_t count_all_homs(const PartialAlgebra& a, const PartialAlgebra& b) {
  size_t count = 0;
  std::vector<size_t> pick(a.size(), 0);
  while (true) {
    std::map<std::string, std::string> phi;
    for (size_t i = 0; i < a.size(); ++i)
      phi.emplace(a.name_of(static_cast<Elem>(i)), b.name_of(static_cast<Elem>(pick[i])));
    if (check_homomorphism(phi, a, b, false)) ++count;
    size_t k = a.size();
    while (k-- > 0 && ++pick[k] == b.size()) pick[k] = 0;
    if (k == static_cast<size_t>(-1)) break;
  }
  return count;
}

}  // namespace

TEST_SUITE("palg") {

TEST_CASE("terms print and parse in right-application form") {
  Term t = Term::ground_spine(Trace::chars("ab"));
  CHECK(t.str() == "((ε)a)b");
  CHECK(Term::parse("((ε)a)b") == t);
  CHECK(Term::parse("((x0)b)c") == Term::spine(Term::var(0), Trace::chars("bc")));
  CHECK(Term::parse("(x0,x1)f") == Term::app("f", {Term::var(0), Term::var(1)}));
  CHECK(t.is_ground());
  CHECK_FALSE(Term::var(0).is_ground());
  CHECK(Term::app("f", {Term::var(2), Term::epsilon()}).max_var() == 2);
  CHECK_THROWS_AS(Term::parse("((ε)a"), Error);

  Term::Spine spine = Term::parse("((x0)b)c").spine_word();
  CHECK(spine.over_variable);
  CHECK(spine.word == Trace::chars("bc"));
}

TEST_CASE("evaluation follows the definedness predicate") {
  PrefixLanguage l1 = lang("ab", {"", "a", "ab"}, 3);
  PartialAlgebra f = f_of_language(l1);
  CHECK(f.name_of(*f.eval(Term::epsilon())) == "ε");
  CHECK(f.name_of(*f.eval(Term::parse("((ε)a)"))) == "a");
  CHECK_FALSE(f.eval(Term::parse("((ε)b)")).has_value());
  CHECK_FALSE(f.eval(Term::parse("(((ε)a)a)")).has_value());
  CHECK_THROWS_AS(f.eval(Term::parse("(ε,ε)a")), Error);  // arity mismatch
  CHECK_THROWS_AS(f.eval(Term::var(0)), Error);
}

TEST_CASE("construction requires defined constants and a sorted carrier") {
  Signature sig = Signature::language(symbols_of_chars("a"));
  PartialAlgebra::Entries no_constant;
  CHECK_THROWS_AS(PartialAlgebra::make(sig, {"x"}, no_constant), Error);
  PartialAlgebra::Entries entries;
  entries["ε"][{}] = "x";
  CHECK_THROWS_AS(PartialAlgebra::make(sig, {"x", "x"}, entries), Error);
  CHECK_THROWS_AS(PartialAlgebra::make(sig, {}, entries), Error);

  PartialAlgebra a = PartialAlgebra::make(sig, {"y", "x"}, entries);
  CHECK(a.carrier() == std::vector<std::string>{"x", "y"});
}

TEST_CASE("homomorphism checking, weak and strong") {
  PrefixLanguage l1 = lang("ab", {"", "a", "ab"}, 3);
  PartialAlgebra f = f_of_language(l1);
  std::map<std::string, std::string> identity;
  for (const std::string& name : f.carrier()) identity.emplace(name, name);
  CHECK(check_homomorphism(identity, f, f, true));

  // collapsing a two-element algebra whose operation separates the elements
  Signature sig = Signature::language(symbols_of_chars("a"));
  PartialAlgebra::Entries entries;
  entries["ε"][{}] = "e";
  entries["a"][{"e"}] = "x";
  entries["a"][{"x"}] = "x";
  PartialAlgebra two = PartialAlgebra::make(sig, {"e", "x"}, entries);
  std::map<std::string, std::string> collapse{{"e", "e"}, {"x", "e"}};
  CHECK_FALSE(check_homomorphism(collapse, two, two, false));

  std::map<std::string, std::string> partial{{"e", "e"}};
  CHECK_THROWS_AS(check_homomorphism(partial, two, two, false), Error);
}

TEST_CASE("products demand a common signature") {
  PartialAlgebra a = f_of_language(lang("a", {"", "a"}, 1));
  PartialAlgebra b = f_of_language(lang("b", {"", "b"}, 1));
  CHECK_THROWS_AS(direct_product({a, b}), Error);
  CHECK_THROWS_AS(direct_product({}), Error);
  CHECK_THROWS_AS(unique_hom_from_fg(a, b), Error);
}

TEST_CASE("a one-point total factor leaves the structure intact") {
  SymbolSet sigma = symbols_of_chars("ab");
  PrefixLanguage l1 = lang("ab", {"", "a", "ab"}, 3);
  PartialAlgebra a = f_of_language(l1, sigma);

  PartialAlgebra::Entries entries;
  entries["ε"][{}] = "u";
  entries["a"][{"u"}] = "u";
  entries["b"][{"u"}] = "u";
  PartialAlgebra unit = PartialAlgebra::make(Signature::language(sigma), {"u"}, entries);

  PartialAlgebra prod = direct_product({a, unit});
  CHECK(prod.size() == a.size());
  std::map<std::string, std::string> embed;
  for (const std::string& name : a.carrier()) embed.emplace(name, "(" + name + ",u)");
  CHECK(check_homomorphism(embed, a, prod, true));  // bijective strong hom
}

TEST_CASE("product tables require definedness in every factor") {
  SymbolSet sigma = symbols_of_chars("abc");
  PrefixLanguage l1 = lang("ab", {"", "a", "ab"}, 3);
  PrefixLanguage l2 = lang("bc", {"", "b", "bc"}, 3);
  PartialAlgebra f1 = f_of_language(l1, sigma);
  PartialAlgebra f2 = f_of_language(l2, sigma);
  PartialAlgebra prod = direct_product({f1, f2});
  CHECK(prod.size() == 9);

  // oracle: componentwise per the definition
  for (const Trace& s : l1.traces())
    for (const Trace& t : l2.traces()) {
      Elem p = *prod.index_of("(" + s.name() + "," + t.name() + ")");
      std::optional<Elem> left = f1.apply1("a", *f1.index_of(s.name()));
      std::optional<Elem> right = f2.apply1("a", *f2.index_of(t.name()));
      std::optional<Elem> both = prod.apply1("a", p);
      CHECK(both.has_value() == (left.has_value() && right.has_value()));
      if (both)
        CHECK(prod.name_of(*both) == "(" + f1.name_of(*left) + "," + f2.name_of(*right) + ")");
    }
}

TEST_CASE("evaluation in a product is the tuple of evaluations") {
  Signature sig = binary_signature();
  PartialAlgebra::Entries e1;
  e1["c"][{}] = "p";
  e1["f"][{"p", "p"}] = "q";
  PartialAlgebra a1 = PartialAlgebra::make(sig, {"p", "q"}, e1);
  PartialAlgebra::Entries e2;
  e2["c"][{}] = "x";
  e2["f"][{"x", "x"}] = "x";
  e2["f"][{"x", "y"}] = "y";
  PartialAlgebra a2 = PartialAlgebra::make(sig, {"x", "y"}, e2);
  PartialAlgebra prod = direct_product({a1, a2});

  for (const Term& t : all_ground_terms(sig, 3)) {
    std::optional<Elem> whole = prod.eval(t);
    std::optional<Elem> left = a1.eval(t);
    std::optional<Elem> right = a2.eval(t);
    CHECK(whole.has_value() == (left.has_value() && right.has_value()));
    if (whole)
      CHECK(prod.name_of(*whole) == "(" + a1.name_of(*left) + "," + a2.name_of(*right) + ")");
  }
}

TEST_CASE("algebraic closure reaches exactly the generated part") {
  PartialAlgebra a = three_point();
  PartialAlgebra closed = algebraic_closure(a);
  CHECK(closed.carrier() == std::vector<std::string>{"q0", "q1"});
  CHECK(is_subalgebra(closed, a));
  CHECK(is_finitely_generated(closed));
  CHECK_FALSE(is_finitely_generated(a));
  CHECK(algebraic_closure(closed) == closed);

  PrefixLanguage l = lang("ab", {"", "a", "ab"}, 3);
  PartialAlgebra f = f_of_language(l);
  CHECK(algebraic_closure(f) == f);
  CHECK(is_finitely_generated(f));
}

TEST_CASE("closure of the running product is the firing-sequence algebra") {
  SymbolSet sigma = symbols_of_chars("abc");
  PrefixLanguage l1 = lang("ab", {"", "a", "ab"}, 3);
  PrefixLanguage l2 = lang("bc", {"", "b", "bc"}, 3);
  PartialAlgebra closed = algebraic_closure(direct_product({f_of_language(l1, sigma),
                                                            f_of_language(l2, sigma)}));
  CHECK(closed.carrier() ==
        std::vector<std::string>{"(a,ε)", "(ab,b)", "(ab,bc)", "(ε,ε)"});
  CHECK(closed == f_of_vector_language(vfs({l1, l2}, 3), sigma));
}

TEST_CASE("closure works through operations of higher arity") {
  Signature sig = binary_signature();
  PartialAlgebra::Entries entries;
  entries["c"][{}] = "p";
  entries["f"][{"p", "p"}] = "q";
  entries["f"][{"q", "p"}] = "r";
  entries["f"][{"z", "z"}] = "z";  // unreachable island
  PartialAlgebra a = PartialAlgebra::make(sig, {"p", "q", "r", "z"}, entries);
  CHECK(algebraic_closure(a).carrier() == std::vector<std::string>{"p", "q", "r"});
}

TEST_CASE("the unique homomorphism from a finitely generated algebra") {
  PrefixLanguage l = lang("ab", {"", "a", "ab"}, 3);
  PartialAlgebra a = f_of_language(l);
  std::optional<std::map<std::string, std::string>> self = unique_hom_from_fg(a, a);
  REQUIRE(self.has_value());
  for (const std::string& name : a.carrier()) CHECK(self->at(name) == name);

  // target lacking the needed successor kills the homomorphism
  SymbolSet sigma = symbols_of_chars("a");
  PartialAlgebra small = f_of_language(lang("a", {"", "a"}, 1), sigma);
  PartialAlgebra point = f_of_language(lang("a", {""}, 1), sigma);
  CHECK_FALSE(unique_hom_from_fg(small, point).has_value());

  CHECK_THROWS_AS(unique_hom_from_fg(three_point(), a), Error);

  // uniqueness: no second homomorphism exists among all total maps
  CHECK(count_all_homs(small, small) == 1);
  CHECK(count_all_homs(a, a) == 1);
}

TEST_CASE("congruence checking") {
  PrefixLanguage l = lang("ab", {"", "a", "ab"}, 3);
  PartialAlgebra a = f_of_language(l);
  CHECK(check_congruence(Congruence::identity(a), a, true));

  // one block on a total algebra
  Signature sig = Signature::language(symbols_of_chars("a"));
  PartialAlgebra::Entries entries;
  entries["ε"][{}] = "e";
  entries["a"][{"e"}] = "x";
  entries["a"][{"x"}] = "e";
  PartialAlgebra swap_algebra = PartialAlgebra::make(sig, {"e", "x"}, entries);
  CHECK(check_congruence(Congruence::one_block(swap_algebra), swap_algebra, true));

  Congruence not_partition = Congruence::of_blocks({{"e"}});
  CHECK_THROWS_AS(check_congruence(not_partition, swap_algebra, false), Error);

  // b sends ε and a (related below) to different blocks: substitution fails
  PrefixLanguage wide = lang("ab", {"", "a", "b", "ab"}, 3);
  PartialAlgebra fw = f_of_language(wide);
  Congruence mixed = Congruence::of_blocks({{"ε", "a"}, {"b"}, {"ab"}});
  CHECK_FALSE(check_congruence(mixed, fw, false));
}

TEST_CASE("quotients follow the existential definedness rule") {
  PrefixLanguage l = lang("ab", {"", "a", "ab"}, 3);
  PartialAlgebra a = f_of_language(l);
  PartialAlgebra q = quotient(a, Congruence::identity(a));
  CHECK(q == a);  // singleton blocks keep the names

  // swap algebra collapses to a one-point algebra with the operation defined
  Signature sig = Signature::language(symbols_of_chars("a"));
  PartialAlgebra::Entries entries;
  entries["ε"][{}] = "e";
  entries["a"][{"e"}] = "x";
  entries["a"][{"x"}] = "e";
  PartialAlgebra swap_algebra = PartialAlgebra::make(sig, {"e", "x"}, entries);
  PartialAlgebra collapsed = quotient(swap_algebra, Congruence::one_block(swap_algebra));
  CHECK(collapsed.size() == 1);
  CHECK(collapsed.apply1("a", 0).has_value());

  // a block can be defined although one representative is not
  PartialAlgebra::Entries partial;
  partial["ε"][{}] = "p";
  partial["a"][{"p"}] = "q";
  PartialAlgebra pq = PartialAlgebra::make(sig, {"p", "q"}, partial);
  Congruence both = Congruence::one_block(pq);
  CHECK(check_congruence(both, pq, false));
  CHECK_FALSE(check_congruence(both, pq, true));
  PartialAlgebra qq = quotient(pq, both);
  CHECK(qq.size() == 1);
  CHECK(qq.apply1("a", 0).has_value());  // witness p, although a is undefined at q

  PrefixLanguage wide = lang("ab", {"", "a", "b", "ab"}, 3);
  PartialAlgebra fw = f_of_language(wide);
  Congruence bad = Congruence::of_blocks({{"ε", "a"}, {"b"}, {"ab"}});
  CHECK_THROWS_AS(quotient(fw, bad), Error);
}

TEST_CASE("quotient by a strong congruence gives a strong block map") {
  Signature sig = Signature::language(symbols_of_chars("a"));
  PartialAlgebra::Entries entries;
  entries["ε"][{}] = "e0";
  entries["a"][{"e0"}] = "e1";
  entries["a"][{"e1"}] = "e0";
  entries["a"][{"f0"}] = "f1";
  entries["a"][{"f1"}] = "f0";
  PartialAlgebra a = PartialAlgebra::make(sig, {"e0", "e1", "f0", "f1"}, entries);
  Congruence theta = Congruence::of_blocks({{"e0", "f0"}, {"e1", "f1"}});
  REQUIRE(check_congruence(theta, a, true));
  PartialAlgebra q = quotient(a, theta);
  std::map<std::string, std::string> blocks;
  for (const std::string& name : a.carrier()) blocks.emplace(name, theta.block_name(name));
  CHECK(check_homomorphism(blocks, a, q, true));
}

TEST_CASE("subdirect decompositions") {
  PrefixLanguage l = lang("ab", {"", "a", "ab"}, 3);
  PartialAlgebra a = f_of_language(l);
  CHECK(check_subdirect(a, {Congruence::identity(a)}));

  Signature sig = Signature::language(symbols_of_chars("a"));
  PartialAlgebra::Entries entries;
  entries["ε"][{}] = "e";
  entries["a"][{"e"}] = "x";
  PartialAlgebra two = PartialAlgebra::make(sig, {"e", "x"}, entries);
  CHECK_FALSE(check_subdirect(two, {Congruence::one_block(two), Congruence::one_block(two)}));
}

TEST_CASE("carrier renaming and restriction") {
  PrefixLanguage l = lang("a", {"", "a"}, 1);
  PartialAlgebra a = f_of_language(l);
  PartialAlgebra renamed = rename_carrier(a, {{"ε", "start"}, {"a", "stop"}});
  CHECK(renamed.carrier() == std::vector<std::string>{"start", "stop"});
  CHECK(renamed.name_of(*renamed.run(Trace::chars("a"))) == "stop");
  CHECK_THROWS_AS(rename_carrier(a, {{"ε", "same"}, {"a", "same"}}), Error);

  PartialAlgebra three = three_point();
  CHECK_THROWS_AS(restrict_to(three, {1, 2}), Error);  // drops the constant
}

TEST_CASE("dot export lists every node and defined unary edge") {
  PrefixLanguage l = lang("ab", {"", "a"}, 2);
  std::string dot = to_dot(f_of_language(l), "demo");
  CHECK(dot.find("digraph demo {") == 0);
  CHECK(dot.find("label=\"ε\"") != std::string::npos);
  CHECK(dot.find("label=\"a\"") != std::string::npos);
  CHECK(dot.find("-> ") != std::string::npos);

  Signature sig = binary_signature();
  PartialAlgebra::Entries entries;
  entries["c"][{}] = "p";
  PartialAlgebra binary = PartialAlgebra::make(sig, {"p"}, entries);
  CHECK_THROWS_AS(to_dot(binary), Error);
}

}  // TEST_SUITE

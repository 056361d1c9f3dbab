#include <doctest.h>

#include <algorithm>

#include "landin/error.hpp"
#include "landin/instances.hpp"
#include "landin/vector_lang.hpp"

using namespace landin;

namespace {

AlphabetVector av_of(std::initializer_list<const char*> components) {
  std::vector<SymbolSet> out;
  for (const char* c : components) out.push_back(symbols_of_chars(c));
  return AlphabetVector(std::move(out));
}

PrefixLanguage lang(const char* alphabet, std::initializer_list<const char*> flats, int depth) {
  SymbolSet a = symbols_of_chars(alphabet);
  std::set<Trace> traces;
  for (const char* f : flats) traces.insert(trace_from_flat(f, a));
  return PrefixLanguage::make(a, traces, depth);
}

VectorString vec(const AlphabetVector& av, std::initializer_list<const char*> flats) {
  std::vector<Trace> parts;
  size_t i = 0;
  for (const char* f : flats) parts.push_back(trace_from_flat(f, av.component(i++)));
  return VectorString(std::move(parts));
}

// Independent oracle: enumerate every op word up to the bound and keep the
// products whose components are members.
std::set<VectorString> vfs_oracle(const std::vector<PrefixLanguage>& parts, int depth) {
  std::vector<SymbolSet> alphabets;
  for (const PrefixLanguage& p : parts) alphabets.push_back(p.alphabet());
  AlphabetVector av(alphabets);
  std::vector<VectorOp> ops = av.vops();
  std::set<VectorString> out;
  std::vector<std::vector<VectorOp>> words{{}};
  for (int len = 0; len <= depth; ++len) {
    std::vector<std::vector<VectorOp>> next;
    for (const std::vector<VectorOp>& w : words) {
      VectorString prod = product_of(w, av.dimension());
      bool ok = true;
      for (size_t i = 0; i < parts.size(); ++i) ok = ok && parts[i].contains(prod.part(i));
      if (ok) out.insert(prod);
      if (len < depth)
        for (const VectorOp& op : ops) {
          std::vector<VectorOp> grown = w;
          grown.push_back(op);
          next.push_back(std::move(grown));
        }
    }
    words = std::move(next);
  }
  return out;
}

}  // namespace

TEST_SUITE("vector") {

TEST_CASE("vector operations of an alphabet vector") {
  AlphabetVector av = av_of({"ab", "bc"});
  std::vector<VectorOp> ops = av.vops();
  REQUIRE(ops.size() == 3);
  CHECK(ops[0].symbol().name() == "a");
  CHECK(ops[0].part(0).name() == "a");
  CHECK(ops[0].part(1).name() == "ε");
  CHECK(ops[1].part(0).name() == "b");
  CHECK(ops[1].part(1).name() == "b");
  CHECK(ops[2].part(0).name() == "ε");
  CHECK(ops[2].part(1).name() == "c");

  AlphabetVector single = av_of({"a"});
  CHECK(single.vops().size() == 1);
  CHECK(single.vops()[0].part(0).name() == "a");

  AlphabetVector skewed(std::vector<SymbolSet>{{}, symbols_of_chars("a")});
  REQUIRE(skewed.vops().size() == 1);
  CHECK(skewed.vops()[0].part(0).name() == "ε");
  CHECK(skewed.vops()[0].part(1).name() == "a");
}

TEST_CASE("elementwise concatenation is a monoid") {
  AlphabetVector av = av_of({"ab", "bc"});
  VectorString a = vec(av, {"a", ""});
  VectorString c = vec(av, {"", "c"});
  CHECK(vconcat(a, c) == vec(av, {"a", "c"}));

  VectorString unit(2);
  CHECK(vconcat(a, unit) == a);
  CHECK(vconcat(unit, a) == a);

  std::vector<VectorOp> ops = av.vops();  // a, b, c
  VectorString folded = product_of({ops[0], ops[1], ops[2]}, 2);
  CHECK(folded == vec(av, {"ab", "bc"}));

  CHECK_THROWS_AS(vconcat(a, VectorString(3)), Error);

  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto rand_vec = [&] {
      std::vector<VectorOp> word;
      int len = rng.range(0, 4);
      for (int i = 0; i < len; ++i) word.push_back(ops[rng.below(3)]);
      return product_of(word, 2);
    };
    VectorString x = rand_vec(), y = rand_vec(), z = rand_vec();
    CHECK(vconcat(vconcat(x, y), z) == vconcat(x, vconcat(y, z)));
  }
}

TEST_CASE("vector firing sequences of the running pair") {
  PrefixLanguage l1 = lang("ab", {"", "a", "ab"}, 3);
  PrefixLanguage l2 = lang("bc", {"", "b", "bc"}, 3);
  VectorLanguage v = vfs({l1, l2}, 3);

  std::set<VectorString> expected;
  AlphabetVector av = v.alphabet_vector();
  expected.insert(vec(av, {"", ""}));
  expected.insert(vec(av, {"a", ""}));
  expected.insert(vec(av, {"ab", "b"}));
  expected.insert(vec(av, {"ab", "bc"}));
  CHECK(v.vectors() == expected);
  CHECK(v.vectors() == vfs_oracle({l1, l2}, 3));
}

TEST_CASE("one part gives the one-dimensional picture of the language") {
  PrefixLanguage l = lang("ab", {"", "a", "ab"}, 3);
  VectorLanguage v = vfs({l}, 3);
  CHECK(v.dimension() == 1);
  CHECK(v.component(0) == l);
  CHECK(embed_language(l) == v);
}

TEST_CASE("disjoint alphabets fire independently") {
  PrefixLanguage l1 = lang("a", {"", "a"}, 2);
  PrefixLanguage l2 = lang("b", {"", "b"}, 2);
  VectorLanguage v = vfs({l1, l2}, 2);
  CHECK(v.size() == 4);
  CHECK(v.contains(vec(v.alphabet_vector(), {"a", "b"})));
  CHECK(v.vectors() == vfs_oracle({l1, l2}, 2));
}

TEST_CASE("components recover the generating languages") {
  PrefixLanguage l1 = lang("ab", {"", "a", "ab"}, 3);
  PrefixLanguage l2 = lang("bc", {"", "b", "bc"}, 3);
  VectorLanguage v = vfs({l1, l2}, 3);
  CHECK(v.component(0) == l1);
  CHECK(v.component(1) == l2);
  CHECK_THROWS_AS(v.component(2), Error);
}

TEST_CASE("independence is disjoint support") {
  AlphabetVector av = av_of({"ab", "bc"});
  VectorOp a = *av.vop(Symbol::intern("a"));
  VectorOp b = *av.vop(Symbol::intern("b"));
  VectorOp c = *av.vop(Symbol::intern("c"));
  CHECK(independent(a, c));
  CHECK_FALSE(independent(a, b));
  CHECK_FALSE(independent(a, a));
}

TEST_CASE("monoid equality is product equality") {
  AlphabetVector av = av_of({"ab", "bc"});
  VectorOp a = *av.vop(Symbol::intern("a"));
  VectorOp b = *av.vop(Symbol::intern("b"));
  VectorOp c = *av.vop(Symbol::intern("c"));
  CHECK(monoid_equal({a, c}, {c, a}));
  CHECK_FALSE(monoid_equal({a, b}, {b, a}));
  CHECK(product_of({a, b}, 2) != product_of({b, a}, 2));
  CHECK(monoid_equal({}, {}));
}

TEST_CASE("normal form is the least member of the commutation class") {
  AlphabetVector av = av_of({"ab", "bc"});
  VectorOp a = *av.vop(Symbol::intern("a"));
  VectorOp b = *av.vop(Symbol::intern("b"));
  VectorOp c = *av.vop(Symbol::intern("c"));
  CHECK(normal_form({c, a}) == std::vector<VectorOp>{a, c});
  CHECK(normal_form({a, b}) == std::vector<VectorOp>{a, b});

  AlphabetVector av3 = av_of({"a", "b", "c"});
  VectorOp a3 = *av3.vop(Symbol::intern("a"));
  VectorOp b3 = *av3.vop(Symbol::intern("b"));
  VectorOp c3 = *av3.vop(Symbol::intern("c"));
  CHECK(normal_form({b3, a3, c3}) == std::vector<VectorOp>{a3, b3, c3});
  CHECK(commutation_class({a3, b3, c3}).size() == 6);

  CHECK(commutation_class({a, c}).size() == 2);
  CHECK(commutation_class({a, b}).size() == 1);

  std::vector<VectorOp> ops = {a, b, c};
  Rng rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    std::vector<VectorOp> word;
    int len = rng.range(0, 6);
    for (int i = 0; i < len; ++i) word.push_back(ops[rng.below(3)]);
    std::vector<VectorOp> nf = normal_form(word);
    std::set<std::vector<VectorOp>> cls = commutation_class(word);
    CHECK(nf == *cls.begin());       // least of the class
    CHECK(cls.count(nf) == 1);       // and a member
    CHECK(normal_form(nf) == nf);    // idempotent
    CHECK(monoid_equal(word, nf));
    for (const std::vector<VectorOp>& other : cls) CHECK(normal_form(other) == nf);
  }
}

TEST_CASE("the class guard refuses runaway enumerations") {
  AlphabetVector av = av_of({"a", "b"});
  std::vector<VectorOp> word(11, *av.vop(Symbol::intern("a")));
  try {
    commutation_class(word);
    FAIL("expected E_LIMIT");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::limit);
  }
  CHECK(commutation_class(word, 12).size() == 1);
}

TEST_CASE("equal products have equal length and connected classes") {
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    int n = rng.range(2, 3);
    std::vector<SymbolSet> comps;
    const char* pool[] = {"ab", "bc", "ac", "abc", "c"};
    for (int i = 0; i < n; ++i) comps.push_back(symbols_of_chars(pool[rng.below(5)]));
    AlphabetVector av(comps);
    std::vector<VectorOp> ops = av.vops();
    if (ops.empty()) continue;
    std::vector<VectorOp> u, v;
    int len = rng.range(0, 6);
    for (int i = 0; i < len; ++i) u.push_back(ops[rng.below(ops.size())]);
    v = u;
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
    if (rng.chance_in(1, 3) && !ops.empty()) v.push_back(ops[rng.below(ops.size())]);

    bool equal = monoid_equal(u, v);
    CHECK(equal == (commutation_class(u).count(v) == 1));
    if (equal) CHECK(u.size() == v.size());
  }
}

TEST_CASE("vector components of a product are projections of the word") {
  AlphabetVector av = av_of({"ab", "bc"});
  std::vector<VectorOp> ops = av.vops();
  Rng rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Symbol> word;
    std::vector<VectorOp> seq;
    int len = rng.range(0, 6);
    for (int i = 0; i < len; ++i) {
      const VectorOp& op = ops[rng.below(ops.size())];
      word.push_back(op.symbol());
      seq.push_back(op);
    }
    VectorString prod = product_of(seq, 2);
    for (size_t i = 0; i < 2; ++i)
      CHECK(prod.part(i) == project(Trace(word), av.component(i)));
  }
}

TEST_CASE("members have all their in-monoid elementwise prefixes") {
  PrefixLanguage l1 = lang("ab", {"", "a", "ab"}, 3);
  PrefixLanguage l2 = lang("bc", {"", "b", "bc"}, 3);
  VectorLanguage v = vfs({l1, l2}, 3);
  for (const VectorString& s : v.vectors()) {
    // every elementwise prefix that is a product of operations is a member
    for (size_t la = 0; la <= s.part(0).size(); ++la)
      for (size_t lb = 0; lb <= s.part(1).size(); ++lb) {
        VectorString prefix(std::vector<Trace>{s.part(0).prefix(la), s.part(1).prefix(lb)});
        if (!prefix.is_elementwise_prefix_of(s)) continue;
        if (is_vops_product(prefix, v.alphabet_vector())) CHECK(v.contains(prefix));
      }
  }
}

TEST_CASE("linearize recognizes products and rejects the rest") {
  AlphabetVector av = av_of({"ab", "bc"});
  CHECK(is_vops_product(vec(av, {"ab", "bc"}), av));
  // (a,b) has no firing order: b writes both components
  CHECK_FALSE(is_vops_product(vec(av, {"a", "b"}), av));
  std::optional<std::vector<VectorOp>> ops = linearize(vec(av, {"ab", "bc"}), av);
  REQUIRE(ops.has_value());
  CHECK(product_of(*ops, 2) == vec(av, {"ab", "bc"}));
}

TEST_CASE("vector language construction rejects defects") {
  AlphabetVector av = av_of({"ab", "bc"});
  std::set<VectorString> missing_eps{vec(av, {"a", ""})};
  CHECK_THROWS_AS(VectorLanguage::make(av, missing_eps, 3), Error);

  std::set<VectorString> not_closed{VectorString(2), vec(av, {"ab", "b"})};
  CHECK_THROWS_AS(VectorLanguage::make(av, not_closed, 3), Error);

  std::set<VectorString> not_product{VectorString(2), vec(av, {"a", "b"})};
  CHECK_THROWS_AS(VectorLanguage::make(av, not_product, 3), Error);
}

TEST_CASE("saturated firing sequences are closed under further firing") {
  Rng rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    int depth = rng.range(1, 4);
    std::vector<PrefixLanguage> parts;
    const char* alphabets[] = {"ab", "bc", "ac"};
    int n = rng.range(2, 3);
    for (int i = 0; i < n; ++i)
      parts.push_back(random_language(rng, symbols_of_chars(alphabets[rng.below(3)]), depth, 8));
    VectorLanguage v = vfs_saturated(parts);
    // saturation: no member extends to a fresh member
    for (const VectorString& s : v.vectors())
      for (const VectorOp& op : v.alphabet_vector().vops()) {
        VectorString grown = s.append(op);
        bool admissible = true;
        for (size_t i = 0; i < parts.size(); ++i)
          if (op.writes(i)) admissible = admissible && parts[i].contains(grown.part(i));
        if (admissible) CHECK(v.contains(grown));
      }
  }
}

}  // TEST_SUITE

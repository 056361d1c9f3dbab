#include <doctest.h>

#include <algorithm>

#include "landin/error.hpp"
#include "landin/instances.hpp"
#include "landin/prefix_language.hpp"

using namespace landin;

namespace {

std::set<Trace> traces_of(const SymbolSet& alphabet, std::initializer_list<const char*> flats) {
  std::set<Trace> out;
  for (const char* f : flats) out.insert(trace_from_flat(f, alphabet));
  return out;
}

PrefixLanguage lang(const char* alphabet, std::initializer_list<const char*> flats, int depth) {
  SymbolSet a = symbols_of_chars(alphabet);
  return PrefixLanguage::make(a, traces_of(a, flats), depth);
}

// Independent oracle: composition by full enumeration and the membership
// test of the definition, no pruning.
PrefixLanguage compose_oracle(const std::vector<PrefixLanguage>& parts, int depth) {
  SymbolSet alphabet;
  for (const PrefixLanguage& p : parts)
    alphabet.insert(p.alphabet().begin(), p.alphabet().end());
  std::set<Trace> traces;
  for (const Trace& s : all_traces(alphabet, depth)) {
    bool ok = true;
    for (const PrefixLanguage& p : parts)
      ok = ok && p.contains(project(s, p.alphabet()));
    if (ok) traces.insert(s);
  }
  return PrefixLanguage::make(alphabet, traces, depth);
}

// Shuffle oracle for disjoint alphabets.
void interleavings(const Trace& s, const Trace& t, const Trace& acc, std::set<Trace>& out) {
  if (s.empty() && t.empty()) {
    out.insert(acc);
    return;
  }
  if (!s.empty()) {
    std::vector<Symbol> rest(s.symbols().begin() + 1, s.symbols().end());
    interleavings(Trace(rest), t, acc.append(s[0]), out);
  }
  if (!t.empty()) {
    std::vector<Symbol> rest(t.symbols().begin() + 1, t.symbols().end());
    interleavings(s, Trace(rest), acc.append(t[0]), out);
  }
}

PrefixLanguage random_lang(Rng& rng, const char* alphabet, int depth, int budget) {
  return random_language(rng, symbols_of_chars(alphabet), depth, budget);
}

}  // namespace

TEST_SUITE("lang") {

TEST_CASE("reserved and malformed symbol names are rejected") {
  CHECK_THROWS_AS(Symbol::intern(""), Error);
  CHECK_THROWS_AS(Symbol::intern("ε"), Error);
  CHECK_THROWS_AS(Symbol::intern("x12"), Error);  // variable syntax
  CHECK_THROWS_AS(Symbol::intern("a,b"), Error);
  CHECK(Symbol::intern("put") == Symbol::intern("put"));
  CHECK(Symbol::intern("a") < Symbol::intern("b"));
}

TEST_CASE("projection deletes exactly the symbols outside the alphabet") {
  SymbolSet just_a = symbols_of_chars("a");
  CHECK(project(Trace(), just_a) == Trace());
  CHECK(project(Trace::chars("ab"), just_a) == Trace::chars("a"));
  CHECK(project(Trace::chars("ab"), just_a).name() == "a");
}

TEST_CASE("successive projections commute and compose by intersection") {
  SymbolSet ab = symbols_of_chars("ab"), bc = symbols_of_chars("bc");
  Trace abc = Trace::chars("abc");
  CHECK(project(project(abc, ab), bc) == Trace::chars("b"));
  CHECK(project(project(abc, ab), bc) == project(abc, symbols_of_chars("b")));

  Rng rng(11);
  SymbolSet sigma = symbols_of_chars("abcd");
  std::vector<Symbol> pool(sigma.begin(), sigma.end());
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Symbol> word;
    int len = rng.range(0, 6);
    for (int i = 0; i < len; ++i) word.push_back(pool[rng.below(pool.size())]);
    Trace s{std::vector<Symbol>(word)};
    SymbolSet a1, a2;
    for (const Symbol& x : pool) {
      if (rng.chance_in(1, 2)) a1.insert(x);
      if (rng.chance_in(1, 2)) a2.insert(x);
    }
    Trace lhs = project(project(s, a1), a2);
    Trace mid = project(project(s, a2), a1);
    Trace rhs = project(s, set_intersection(a1, a2));
    CHECK(lhs == mid);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("prefix closure predicates") {
  SymbolSet ab = symbols_of_chars("ab");
  CHECK(is_prefix_closed({Trace()}));
  CHECK(is_prefix_closed(traces_of(ab, {"", "a", "ab"})));
  CHECK_FALSE(is_prefix_closed(traces_of(ab, {"", "ab"})));

  CHECK(prefix_close({}) == traces_of(ab, {""}));
  CHECK(prefix_close(traces_of(ab, {"ab"})) == traces_of(ab, {"", "a", "ab"}));
  std::set<Trace> closed = traces_of(ab, {"", "a"});
  CHECK(prefix_close(closed) == closed);
}

TEST_CASE("construction rejects defective languages") {
  SymbolSet ab = symbols_of_chars("ab");
  CHECK_THROWS_AS(PrefixLanguage::make(ab, {}, 2), Error);
  CHECK_THROWS_WITH_AS(PrefixLanguage::make(ab, traces_of(ab, {"", "ab"}), 2),
                       doctest::Contains("prefix-closed"), Error);
  SymbolSet just_a = symbols_of_chars("a");
  CHECK_THROWS_AS(PrefixLanguage::make(just_a, traces_of(ab, {"", "b"}), 2), Error);
  CHECK_THROWS_AS(PrefixLanguage::make(ab, traces_of(ab, {"", "a", "ab"}), 1), Error);
}

TEST_CASE("composition of the running pair") {
  PrefixLanguage l1 = lang("ab", {"", "a", "ab"}, 3);
  PrefixLanguage l2 = lang("bc", {"", "b", "bc"}, 3);
  PrefixLanguage composed = compose_parallel({l1, l2}, 3);

  PrefixLanguage expected = lang("abc", {"", "a", "ab", "abc"}, 3);
  CHECK(composed == expected);
  CHECK(compose_oracle({l1, l2}, 3) == expected);
}

TEST_CASE("equal alphabets compose by intersection") {
  PrefixLanguage l1 = lang("ab", {"", "a", "ab", "b"}, 3);
  PrefixLanguage l2 = lang("ab", {"", "a", "b", "ba"}, 3);
  PrefixLanguage composed = compose_parallel({l1, l2}, 3);
  std::set<Trace> expected;
  for (const Trace& t : l1.traces())
    if (l2.contains(t)) expected.insert(t);
  CHECK(composed.traces() == expected);
  CHECK(composed == compose_oracle({l1, l2}, 3));
}

TEST_CASE("disjoint alphabets compose by shuffle") {
  PrefixLanguage l1 = lang("a", {"", "a"}, 2);
  PrefixLanguage l2 = lang("b", {"", "b"}, 2);
  PrefixLanguage composed = compose_parallel({l1, l2}, 2);
  CHECK(composed == lang("ab", {"", "a", "b", "ab", "ba"}, 2));

  std::set<Trace> shuffled;
  for (const Trace& s : l1.traces())
    for (const Trace& t : l2.traces())
      if (static_cast<int>(s.size() + t.size()) <= 2) interleavings(s, t, Trace(), shuffled);
  CHECK(composed.traces() == shuffled);
}

TEST_CASE("composition errors") {
  CHECK_THROWS_AS(compose_parallel({}, 2), Error);
  PrefixLanguage shallow = lang("a", {"", "a"}, 1);
  try {
    compose_parallel({shallow}, 3);
    FAIL("expected E_DEPTH");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::depth);
  }
}

TEST_CASE("composition properties on random instances") {
  Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    int depth = rng.range(1, 4);
    std::vector<PrefixLanguage> parts;
    int n = rng.range(2, 3);
    const char* alphabets[] = {"ab", "bc", "ac", "abc"};
    for (int i = 0; i < n; ++i)
      parts.push_back(random_lang(rng, alphabets[rng.below(4)], depth, 8));

    PrefixLanguage composed = compose_parallel(parts, depth);
    CHECK(composed == compose_oracle(parts, depth));
    CHECK(is_prefix_closed(composed.traces()));
    CHECK(composed.contains(Trace()));

    // permutation invariance
    std::vector<PrefixLanguage> perm(parts.rbegin(), parts.rend());
    CHECK(compose_parallel(perm, depth) == composed);

    // truncation coherence
    int m = rng.range(0, depth);
    CHECK(composed.truncated(m) == compose_parallel(parts, m));

    // n-ary agrees with the binary fold
    PrefixLanguage fold = compose_parallel({parts[0], parts[1]}, depth);
    for (int i = 2; i < n; ++i) fold = compose_parallel({fold, parts[static_cast<size_t>(i)]}, depth);
    CHECK(fold == composed);
  }
}

}  // TEST_SUITE

#pragma once

#include <cstdint>
#include <random>

#include "landin/category.hpp"

namespace landin {

/// Deterministic source of randomness for instance generation; seeded runs
/// reproduce byte-identical suites.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  size_t below(size_t bound) { return bound == 0 ? 0 : static_cast<size_t>(next() % bound); }
  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<size_t>(hi - lo + 1))); }
  bool chance_in(int num, int den) { return static_cast<int>(below(static_cast<size_t>(den))) < num; }

 private:
  std::mt19937_64 eng_;
};

struct GenParams {
  int max_alphabet = 5;    // |Σ| per run
  int max_components = 3;  // parts per instance
  int max_depth = 6;       // language depth and check depth
  int max_traces = 24;     // growth budget per random language
};

/// A random prefix-closed language grown from ε inside the alphabet.
PrefixLanguage random_language(Rng& rng, const SymbolSet& alphabet, int depth, int max_traces);

/// A random subset of a fixed pool of one-letter names.
SymbolSet random_run_alphabet(Rng& rng, const GenParams& params);

/// A random unary partial algebra over the language signature: ε defined,
/// every symbol a random partial self-map; may contain cycles and
/// unreachable elements.
PartialAlgebra random_unary_algebra(Rng& rng, const SymbolSet& sigma, int max_carrier);

/// The instance shape a check id expects, drawn from the seeded stream.
/// `depth_out` receives the depth the check should run at.
CheckInstance random_instance(Rng& rng, const GenParams& params, CheckId id, int& depth_out);

/// Runs `instances` seeded instances of one check.
std::vector<CheckReport> run_suite_for(CheckId id, std::uint64_t seed, int instances,
                                       const GenParams& params);

/// Runs the whole id list; reports come back grouped by id in id order.
std::vector<CheckReport> run_suite(std::uint64_t seed, int instances_per_check,
                                   const GenParams& params);

/// A random adjunction instance: a source language, a target algebra
/// F(L'), and a simulation f : L → G(F(L')) valid by construction.
struct AdjunctionInstance {
  PrefixLanguage source;
  PartialAlgebra algebra;
  Simulation f;
  int search_bound = 2;
};
AdjunctionInstance random_adjunction_instance(Rng& rng);

/// A random naturality instance: h = 𝔽(f) between F(L) and F(L').
struct NaturalityInstance {
  PartialAlgebra a;
  PartialAlgebra b;
  DerivedHom h;
  int depth = 2;
};
NaturalityInstance random_naturality_instance(Rng& rng);

/// A random vector-simulation square: each source symbol inflated to a
/// word of fresh symbols with the same component membership, so the map
/// preserves concurrency and the simulation property by construction.
struct SquareInstance {
  std::vector<PrefixLanguage> source_parts;
  std::vector<PrefixLanguage> target_parts;
  VectorSimulation f;
  int depth = 2;
};
SquareInstance random_square_instance(Rng& rng);

}  // namespace landin

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "landin/palg.hpp"
#include "landin/vector_lang.hpp"

namespace landin {

/// Traces as states: carrier = L, ε as the constant, each alphabet symbol
/// as the partial successor map {(s, sσ) : sσ ∈ L}, and every symbol of
/// `sigma` outside αL as the identity on L. E_SIG when αL ⊄ sigma.
PartialAlgebra f_of_language(const PrefixLanguage& lang, const SymbolSet& sigma);
PartialAlgebra f_of_language(const PrefixLanguage& lang);

/// The vector analogue: carrier = L, σ appends σ̲ when the result stays in
/// L, identity for symbols outside the union alphabet.
PartialAlgebra f_of_vector_language(const VectorLanguage& lang, const SymbolSet& sigma);
PartialAlgebra f_of_vector_language(const VectorLanguage& lang);

/// The sub-alphabet of symbols whose operation differs from the identity on
/// the closure carrier. E_SIG for non-language signatures.
SymbolSet g_alphabet(const PartialAlgebra& a);

/// The language read back from an algebra: all strings over g_alphabet(a)
/// of length <= depth whose evaluation is defined. Sound and complete at
/// that depth because the remaining symbols act as the identity on the
/// closure.
PrefixLanguage g_of_algebra(const PartialAlgebra& a, int depth);

/// An algebra together with a subdirect decomposition; the decomposition is
/// validated at construction.
struct DecomposedAlgebra {
  PartialAlgebra algebra;
  std::vector<Congruence> congruences;

  static DecomposedAlgebra make(PartialAlgebra algebra, std::vector<Congruence> congruences);
  size_t dimension() const { return congruences.size(); }
};

/// F'(L) = (F(L), (ker π1, ..., ker πn)).
DecomposedAlgebra f_prime(const VectorLanguage& lang, const SymbolSet& sigma);
DecomposedAlgebra f_prime(const VectorLanguage& lang);

/// The product of the factors together with the kernels of its projections.
DecomposedAlgebra decomposed_product(const std::vector<PartialAlgebra>& factors);

/// Algebraic closure of the underlying algebra, with each congruence
/// restricted to the closure carrier.
DecomposedAlgebra closure_of_decomposed(const DecomposedAlgebra& da);

/// The vector language of a decomposed algebra: alphabet vector
/// (αG(A/Θ1), ..., αG(A/Θn)), members the products of at most `depth`
/// vector operations whose underlying term is defined in A.
VectorLanguage h_of_decomposed(const DecomposedAlgebra& da, int depth);

struct Counterexample {
  std::string witness;  // trace / vector / term / element at issue
  std::string lhs;
  std::string rhs;
};

struct CheckReport {
  std::string check;
  std::string instance;
  bool pass = false;
  int depth = 0;
  std::optional<Counterexample> counterexample;
};

enum class CheckId {
  charth,
  corrth_i,
  corrth_ii,
  corrth_iii,
  corrth_iv,
  corollary,
  veccorrth_i,
  veccorrth_ii,
  veccorrth_iii,
  veccorrth_iv,
  lemm1,
  lemm2,
  lemm3,
  lemm4,
  lemm5,
  lemm6,
};

const std::vector<CheckId>& all_check_ids();
std::string check_id_name(CheckId id);
std::optional<CheckId> parse_check_id(const std::string& name);

/// One theorem-instance: a run alphabet, component languages, and optional
/// explicit algebras for the algebra-shaped checks. `claimed` lets a
/// fixture substitute the right-hand side of CHARTH (fault injection).
struct CheckInstance {
  SymbolSet sigma;
  std::vector<PrefixLanguage> parts;
  std::vector<PartialAlgebra> algebras;
  std::optional<PartialAlgebra> claimed;
  std::string description;
};

/// Runs one theorem check exactly at the given depth; every comparison is
/// an equality of depth-bounded objects (languages at trace length <=
/// depth, vector languages at operation count <= depth, closures at <=
/// depth rounds). Reports a counterexample on failure.
CheckReport run_check(CheckId id, const CheckInstance& instance, int depth);

/// The symbol map σ ↦ σ̲ from the parallel composition onto the vector
/// firing sequences, verified to be a strong surjective simulation at the
/// given depth, with the preimage multiplicity of every vector.
struct VfsMapResult {
  PrefixLanguage source;
  VectorLanguage target;
  std::map<Symbol, VectorOp> symbol_map;
  std::map<VectorString, size_t> preimage_counts;
  CheckReport report;
};
VfsMapResult parallel_to_vfs_map(const std::vector<PrefixLanguage>& parts, int depth);

}  // namespace landin

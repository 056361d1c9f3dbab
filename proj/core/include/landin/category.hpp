#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "landin/correspondence.hpp"

namespace landin {

/// Simultaneous substitution: every occurrence of xi in `t` replaced by
/// args[i]. E_VAR when t uses a variable with no argument.
Term substitute(const Term& t, std::span<const Term> args);

/// A symbol-to-term reinterpretation of the signature: one term in
/// W_Σ(X_arity) per operator.
class Derivor {
 public:
  /// Validates arity bounds of the variables in each image. E_VAR/E_SIG.
  static Derivor of(const Signature& sig, std::map<std::string, Term> images);

  /// Id: σ ↦ (x0, ..., x_{n-1})σ.
  static Derivor identity(const Signature& sig);

  /// Id_A: (x0)σ on αG(A), x0 off it, ε ↦ ε. The canonical identity.
  static Derivor canonical_identity(const PartialAlgebra& a);

  const Term& image(const std::string& op) const;  // E_MAP when missing
  bool has(const std::string& op) const { return images_.count(op) > 0; }
  const std::map<std::string, Term>& images() const { return images_; }

  bool operator==(const Derivor& o) const { return images_ == o.images_; }
  bool operator!=(const Derivor& o) const { return images_ != o.images_; }

 private:
  friend Derivor compose_derivors(const Derivor&, const Derivor&);
  static Derivor unchecked(std::map<std::string, Term> images);
  std::map<std::string, Term> images_;
};

/// The inductive extension of a derivor to terms:
/// d((t1,...,tn)σ) = d(σ)[d(t1), ..., d(tn)].
Term apply_derivor(const Derivor& d, const Term& t);

/// σ ↦ d(σ'(σ)): apply `first`, then rewrite through `second`.
Derivor compose_derivors(const Derivor& second, const Derivor& first);

/// D1 (ε ↦ ε) and D2 (unary images are non-ground).
bool is_canonical_derivor(const Derivor& d, const Signature& sig);

/// Same carrier, every operation reinterpreted as the evaluation of its
/// derived term. E_SIG when the derivor misses an operator of A.
PartialAlgebra derived_algebra(const Derivor& d, const PartialAlgebra& a);

/// A derivor plus a carrier map: φ must be a homomorphism from A to dB.
struct DerivedHom {
  Derivor d;
  std::map<std::string, std::string> phi;
  bool strong = false;
};

/// φ a (strong) homomorphism A → dB; when `canonical` also validates
/// D1-D3 against αG(A) and αG(B).
bool check_derived_hom(const DerivedHom& h, const PartialAlgebra& a, const PartialAlgebra& b,
                       bool canonical = true);

/// D3 for a hom A → B: d(σ) over αG(B) symbols when σ ∈ αG(A), x0 off it.
bool satisfies_d3(const Derivor& d, const PartialAlgebra& a, const PartialAlgebra& b);

/// (d'd, φ'∘φ): composition of derived homomorphisms.
DerivedHom compose_homs(const DerivedHom& second, const DerivedHom& first);

/// Derivors agree extensionally over a hom-set: equal images on `alpha`
/// and x0 off it (canonical shape assumed).
bool derivors_agree_on(const Derivor& lhs, const Derivor& rhs, const SymbolSet& alpha);

/// A symbol-to-string map between prefix-closed languages, extended
/// homomorphically. `depth` records the bound at which the simulation
/// property was (or is to be) verified.
class Simulation {
 public:
  static Simulation make(PrefixLanguage source, PrefixLanguage target,
                         std::map<Symbol, Trace> symbol_map, bool strong, int depth);
  static Simulation identity(const PrefixLanguage& lang);

  const PrefixLanguage& source() const { return source_; }
  const PrefixLanguage& target() const { return target_; }
  const std::map<Symbol, Trace>& symbol_map() const { return map_; }
  bool strong() const { return strong_; }
  int depth() const { return depth_; }
  size_t max_image_length() const;

  Trace apply(const Trace& s) const;  // homomorphic extension

  bool operator==(const Simulation& o) const {
    return source_ == o.source_ && target_ == o.target_ && map_ == o.map_ &&
           strong_ == o.strong_;
  }

 private:
  Simulation(PrefixLanguage source, PrefixLanguage target, std::map<Symbol, Trace> map,
             bool strong, int depth)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)),
        strong_(strong), depth_(depth) {}
  PrefixLanguage source_;
  PrefixLanguage target_;
  std::map<Symbol, Trace> map_;
  bool strong_;
  int depth_;
};

/// Weak property: s ∈ L ⇒ f(s) ∈ L'. With the strong flag, additionally
/// f(s) ∈ L' ⇒ s ∈ L over all source-alphabet strings up to `depth`.
/// E_DEPTH when the target language is too shallow to decide membership of
/// some image.
bool check_simulation(const Simulation& f, int depth);

Simulation compose_simulations(const Simulation& second, const Simulation& first);

/// The concurrency-preserving vector analogue: each source vector op maps
/// to a word of target vector ops, written by their symbols.
class VectorSimulation {
 public:
  static VectorSimulation make(VectorLanguage source, VectorLanguage target,
                               std::map<Symbol, std::vector<Symbol>> op_map, bool strong,
                               int depth);
  static VectorSimulation identity(const VectorLanguage& lang);

  const VectorLanguage& source() const { return source_; }
  const VectorLanguage& target() const { return target_; }
  const std::map<Symbol, std::vector<Symbol>>& op_map() const { return map_; }
  bool strong() const { return strong_; }
  int depth() const { return depth_; }

  std::vector<Symbol> apply_word(const std::vector<Symbol>& word) const;
  VectorString apply(const VectorString& v) const;  // via any linearization

 private:
  VectorSimulation(VectorLanguage source, VectorLanguage target,
                   std::map<Symbol, std::vector<Symbol>> map, bool strong, int depth)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)),
        strong_(strong), depth_(depth) {}
  VectorLanguage source_;
  VectorLanguage target_;
  std::map<Symbol, std::vector<Symbol>> map_;
  bool strong_;
  int depth_;
};

/// Checks concurrency preservation (E_CONC on violation) and then the
/// (strong) simulation property at the given depth.
bool check_vector_simulation(const VectorSimulation& f, int depth);

/// 𝔽 on morphisms: d spells f(σ) as a right-nested unary term on αL and
/// x0 off it; φ is forced by finite generation: s ↦ f(s).
DerivedHom functor_f_on_morphism(const Simulation& f, const SymbolSet& sigma);

/// 𝔽′ on morphisms: the same construction from a vector simulation.
DerivedHom functor_f_prime_on_morphism(const VectorSimulation& f, const SymbolSet& sigma);

/// 𝔾 on morphisms: reads f(σ) off the spine of d(σ) for σ ∈ αG(A).
/// E_CANON when the derivor violates D1-D3 for the hom-set.
Simulation functor_g_on_morphism(const DerivedHom& h, const PartialAlgebra& a,
                                 const PartialAlgebra& b, int depth);

/// The counit component (Id_A, g_A) : FG(A) → A at the given depth.
DerivedHom counit(const PartialAlgebra& a, int depth);

/// Naturality of the counit: (Id_B, g_B) ∘ 𝔽𝔾(h) = h ∘ (Id_A, g_A),
/// compared extensionally on derivors and pointwise on carriers.
CheckReport check_naturality(const DerivedHom& h, const PartialAlgebra& a,
                             const PartialAlgebra& b, int depth);

/// The adjunction instance for f : L → G(A): constructs the mediating
/// (d, φ), checks it is a canonical derived homomorphism, verifies both
/// triangle identities, and confirms uniqueness by exhaustive search over
/// canonical derivors with spine length <= search_bound.
struct AdjunctionResult {
  DerivedHom mediating;
  size_t candidates_found = 0;
  CheckReport report;
};
AdjunctionResult check_adjunction(const PrefixLanguage& lang, const PartialAlgebra& a,
                                  const Simulation& f, int depth, int search_bound);

/// The 𝔽′ square: 𝔾U𝔽′(f) against f transported along the canonical
/// surjections h_L and h_L', pointwise at the given depth.
CheckReport check_fprime_square(const VectorSimulation& f,
                                const std::vector<PrefixLanguage>& source_parts,
                                const std::vector<PrefixLanguage>& target_parts, int depth);

}  // namespace landin

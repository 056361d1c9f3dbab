#pragma once

#include <optional>
#include <set>
#include <vector>

#include "landin/prefix_language.hpp"

namespace landin {

class VectorOp;

/// The tuple (αL1, ..., αLn) of component alphabets of a vector language.
class AlphabetVector {
 public:
  explicit AlphabetVector(std::vector<SymbolSet> components);

  size_t dimension() const { return components_.size(); }
  const SymbolSet& component(size_t i) const;
  const std::vector<SymbolSet>& components() const { return components_; }
  SymbolSet union_alphabet() const;

  /// One vector operation per symbol of the union alphabet, with part i
  /// equal to the symbol when it belongs to component i and ε otherwise.
  std::vector<VectorOp> vops() const;
  std::optional<VectorOp> vop(Symbol sigma) const;

  bool operator==(const AlphabetVector& o) const { return components_ == o.components_; }
  bool operator!=(const AlphabetVector& o) const { return !(*this == o); }

 private:
  std::vector<SymbolSet> components_;
};

/// The vector operation σ̲ of a symbol: σ at each component whose alphabet
/// contains σ, ε elsewhere. At least one component is non-ε.
class VectorOp {
 public:
  VectorOp(Symbol symbol, std::vector<bool> membership);

  Symbol symbol() const { return symbol_; }
  size_t dimension() const { return membership_.size(); }
  bool writes(size_t i) const { return membership_[i]; }
  Trace part(size_t i) const;

  bool operator==(const VectorOp& o) const {
    return symbol_ == o.symbol_ && membership_ == o.membership_;
  }
  bool operator!=(const VectorOp& o) const { return !(*this == o); }
  bool operator<(const VectorOp& o) const {
    if (symbol_ != o.symbol_) return symbol_ < o.symbol_;
    return membership_ < o.membership_;
  }

 private:
  Symbol symbol_;
  std::vector<bool> membership_;
};

/// A tuple of traces under elementwise concatenation.
class VectorString {
 public:
  explicit VectorString(size_t dimension) : parts_(dimension) {}  // ε̲
  explicit VectorString(std::vector<Trace> parts);

  size_t dimension() const { return parts_.size(); }
  const Trace& part(size_t i) const { return parts_[i]; }
  const std::vector<Trace>& parts() const { return parts_; }
  bool is_empty() const;

  VectorString append(const VectorOp& op) const;
  bool is_elementwise_prefix_of(const VectorString& o) const;

  /// "(ab,ε)" style canonical display name.
  std::string name() const;

  bool operator==(const VectorString& o) const { return parts_ == o.parts_; }
  bool operator!=(const VectorString& o) const { return parts_ != o.parts_; }
  bool operator<(const VectorString& o) const { return parts_ < o.parts_; }

 private:
  std::vector<Trace> parts_;
};

/// Componentwise concatenation; ε̲ is the identity. Throws E_DIM on
/// dimension mismatch.
VectorString vconcat(const VectorString& s, const VectorString& t);

/// Folds a sequence of operations into its product vector.
VectorString product_of(const std::vector<VectorOp>& ops, size_t dimension);

/// True iff the two ops are non-ε only at components where the other is ε.
/// Commuting distinct operations; independent(a, a) is false.
bool independent(const VectorOp& a, const VectorOp& b);

/// True iff the two sequences have equal products in the Vops monoid.
bool monoid_equal(const std::vector<VectorOp>& u, const std::vector<VectorOp>& v);

/// The lexicographically least sequence (under the symbol order)
/// product-equal to u: the least linearization of u's dependence order.
std::vector<VectorOp> normal_form(std::vector<VectorOp> u);

/// All sequences reachable from u by swapping adjacent independent ops.
/// Exponential in the worst case; refuses |u| > limit with E_LIMIT.
std::set<std::vector<VectorOp>> commutation_class(const std::vector<VectorOp>& u,
                                                  size_t limit = 10);

/// If the tuple is a product of vector operations of `av`, returns one
/// witnessing op sequence (greedy; any choice order yields the same set
/// membership). Otherwise nullopt.
std::optional<std::vector<VectorOp>> linearize(const VectorString& s, const AlphabetVector& av);

bool is_vops_product(const VectorString& s, const AlphabetVector& av);

/// A prefix-closed vector language with its alphabet vector and an explicit
/// bound on the number of operations composing each member.
class VectorLanguage {
 public:
  static VectorLanguage make(AlphabetVector av, std::set<VectorString> vectors, int depth);

  const AlphabetVector& alphabet_vector() const { return av_; }
  const std::set<VectorString>& vectors() const { return vectors_; }
  int depth() const { return depth_; }
  size_t dimension() const { return av_.dimension(); }
  size_t size() const { return vectors_.size(); }
  bool contains(const VectorString& s) const { return vectors_.count(s) > 0; }

  /// The i-th projection {[s̲]_i : s̲ ∈ L} with alphabet αLi. E_DIM when out
  /// of range.
  PrefixLanguage component(size_t i) const;

  bool operator==(const VectorLanguage& o) const {
    return av_ == o.av_ && depth_ == o.depth_ && vectors_ == o.vectors_;
  }
  bool operator!=(const VectorLanguage& o) const { return !(*this == o); }

 private:
  VectorLanguage(AlphabetVector av, std::set<VectorString> vectors, int depth)
      : av_(std::move(av)), vectors_(std::move(vectors)), depth_(depth) {}

  AlphabetVector av_;
  std::set<VectorString> vectors_;
  int depth_;
};

/// The vector firing sequences of `parts`: every product of at most `depth`
/// vector operations whose i-th component lies in part i, for every i.
/// Errors as in compose_parallel.
VectorLanguage vfs(const std::vector<PrefixLanguage>& parts, int depth);

/// vfs at the saturation depth (sum of the parts' longest trace lengths),
/// beyond which no further products qualify: the full intersection
/// Vops* ∩ (L1 × ... × Ln) of the truncated parts.
VectorLanguage vfs_saturated(const std::vector<PrefixLanguage>& parts);

/// Embeds a prefix-closed language as the one-dimensional vector language
/// it is identified with.
VectorLanguage embed_language(const PrefixLanguage& lang);

}  // namespace landin

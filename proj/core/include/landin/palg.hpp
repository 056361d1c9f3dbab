#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "landin/term.hpp"

namespace landin {

/// Operator names with arities. The language-correspondence signature has
/// the single constant ε plus one unary operator per alphabet symbol.
class Signature {
 public:
  Signature() = default;
  static Signature of(std::map<std::string, int> ops);
  static Signature language(const SymbolSet& sigma);

  std::optional<int> arity(const std::string& op) const;
  bool contains(const std::string& op) const { return ops_.count(op) > 0; }
  const std::map<std::string, int>& ops() const { return ops_; }
  size_t size() const { return ops_.size(); }

  /// True iff the signature is {ε:0} plus unary operators only.
  bool is_language_signature() const;
  SymbolSet unary_symbols() const;

  bool operator==(const Signature& o) const { return ops_ == o.ops_; }
  bool operator!=(const Signature& o) const { return ops_ != o.ops_; }

 private:
  std::map<std::string, int> ops_;
};

using Elem = std::uint32_t;
inline constexpr Elem kUndef = 0xffffffffu;

/// One operator's partial table; the representation is split by arity so
/// the unary language case stays flat and fast.
struct OpTable {
  int arity = 0;
  Elem constant = kUndef;                      // arity 0
  std::vector<Elem> unary;                     // arity 1, size = carrier, kUndef gaps
  std::map<std::vector<Elem>, Elem> general;   // arity >= 2
  bool operator==(const OpTable&) const = default;
};

/// A finite partial algebra with a sorted carrier of display names. Every
/// constant must be defined. Values are immutable after construction; two
/// algebras are equal iff carriers and tables coincide exactly.
class PartialAlgebra {
 public:
  using Entries = std::map<std::string, std::map<std::vector<std::string>, std::string>>;

  /// Name-based builder: validates against the signature, sorts the
  /// carrier, and reindexes the tables.
  static PartialAlgebra make(Signature sig, std::vector<std::string> carrier,
                             const Entries& entries);

  /// Index-based builder used by the construction-heavy paths; `carrier`
  /// need not be sorted, tables are remapped to the sorted order.
  static PartialAlgebra from_tables(Signature sig, std::vector<std::string> carrier,
                                    std::map<std::string, OpTable> tables);

  const Signature& signature() const { return sig_; }
  const std::vector<std::string>& carrier() const { return carrier_; }
  size_t size() const { return carrier_.size(); }
  const std::string& name_of(Elem e) const { return carrier_[e]; }
  std::optional<Elem> index_of(const std::string& name) const;
  const OpTable& table(const std::string& op) const;
  const std::map<std::string, OpTable>& tables() const { return tables_; }

  std::optional<Elem> constant(const std::string& op) const;
  std::optional<Elem> apply1(const std::string& op, Elem arg) const;
  std::optional<Elem> apply(const std::string& op, std::span<const Elem> args) const;

  /// Evaluation of a ground term; nullopt when the definedness predicate
  /// fails. E_SIG on unknown operators or arity mismatch, E_VAR on
  /// variables.
  std::optional<Elem> eval(const Term& t) const;

  /// Evaluation of a term in W_Σ(Xn) with the variables bound to carrier
  /// elements.
  std::optional<Elem> eval_with(const Term& t, std::span<const Elem> bindings) const;

  /// Walks the unary spine of a trace from the ε constant.
  std::optional<Elem> run(const Trace& t) const;

  /// True iff the operator acts as the identity on (exactly) the subset.
  bool is_identity_on(const std::string& op, const std::vector<Elem>& subset) const;

  /// True iff the operator, restricted to the subset, is a nonempty
  /// partial identity: defined somewhere, and every defined entry fixes
  /// its argument. Such an operator is observationally the identity along
  /// defined behaviours; an empty column is observably blocking.
  bool is_subidentity_on(const std::string& op, const std::vector<Elem>& subset) const;

  /// Elements reachable from the constants, in ascending index order.
  std::vector<Elem> closure_carrier() const;

  bool operator==(const PartialAlgebra& o) const {
    return sig_ == o.sig_ && carrier_ == o.carrier_ && tables_ == o.tables_;
  }
  bool operator!=(const PartialAlgebra& o) const { return !(*this == o); }

 private:
  PartialAlgebra() = default;
  Signature sig_;
  std::vector<std::string> carrier_;
  std::map<std::string, OpTable> tables_;
};

/// Componentwise product; an operation is defined on a tuple iff it is
/// defined in every factor. Tuple names are "(a,b,c)" built from the factor
/// element names; a singleton list still tuple-izes. E_SIG on signature
/// mismatch, E_EMPTY on an empty list.
PartialAlgebra direct_product(const std::vector<PartialAlgebra>& factors);

/// The minimal subalgebra: everything reachable from the constants.
PartialAlgebra algebraic_closure(const PartialAlgebra& a);

/// Reachable within at most `rounds` operation applications; the truncation
/// of the closure iteration.
PartialAlgebra algebraic_closure_bounded(const PartialAlgebra& a, int rounds);

/// The induced partial structure on a subset: entries whose arguments and
/// result all lie inside.
PartialAlgebra restrict_to(const PartialAlgebra& a, const std::vector<Elem>& subset);

bool is_finitely_generated(const PartialAlgebra& a);

/// Def of subalgebra: carrier inclusion plus strong agreement of the tables
/// on the sub-carrier.
bool is_subalgebra(const PartialAlgebra& sub, const PartialAlgebra& super);

/// Weak mode: definedness on the left implies definedness and equality on
/// the right. Strong mode additionally requires the converse definedness.
/// E_MAP when phi is not total on |A|; E_SIG on signature mismatch.
bool check_homomorphism(const std::map<std::string, std::string>& phi, const PartialAlgebra& a,
                        const PartialAlgebra& b, bool strong);

/// For finitely generated A: the only candidate homomorphism t^A ↦ t^B, if
/// it exists. E_NOT_FG when A is not finitely generated.
std::optional<std::map<std::string, std::string>> unique_hom_from_fg(const PartialAlgebra& a,
                                                                     const PartialAlgebra& b);

/// A partition of a carrier into equivalence classes.
class Congruence {
 public:
  static Congruence of_blocks(std::vector<std::vector<std::string>> blocks);
  static Congruence identity(const PartialAlgebra& a);
  static Congruence one_block(const PartialAlgebra& a);
  /// Groups the map's keys by value: ker f = f^-1 f.
  static Congruence kernel_of(const std::map<std::string, std::string>& f);

  const std::vector<std::vector<std::string>>& blocks() const { return blocks_; }
  size_t block_count() const { return blocks_.size(); }
  size_t block_index_of(const std::string& member) const;  // E_MAP when absent
  const std::vector<std::string>& block_of(const std::string& member) const;
  /// Canonical display name of a block: its least member.
  const std::string& block_name(const std::string& member) const;
  bool same_block(const std::string& a, const std::string& b) const;
  bool is_partition_of(const std::vector<std::string>& carrier) const;
  Congruence restricted_to(const std::vector<std::string>& subset) const;

  bool operator==(const Congruence& o) const { return blocks_ == o.blocks_; }
  bool operator!=(const Congruence& o) const { return blocks_ != o.blocks_; }

 private:
  std::vector<std::vector<std::string>> blocks_;  // each sorted, sorted by least member
  std::map<std::string, size_t> index_;
};

/// The substitution property over all related tuples with both sides
/// defined; strong mode adds two-way definedness. E_MAP when theta is not a
/// partition of |A|.
bool check_congruence(const Congruence& theta, const PartialAlgebra& a, bool strong);

/// Blocks as elements; an operation is defined on blocks iff some
/// representative tuple is defined, with the result's block as value.
/// E_CONG when theta fails check_congruence.
PartialAlgebra quotient(const PartialAlgebra& a, const Congruence& theta);

/// True iff the natural map a ↦ ([a]Θ1, ..., [a]Θn) is injective and a
/// strong isomorphism onto its image subalgebra of the product of
/// quotients. E_CONG when some theta is not a congruence.
bool check_subdirect(const PartialAlgebra& a, const std::vector<Congruence>& thetas);

/// The same algebra with carrier elements renamed through `names`, which
/// must be total and injective on |A|. E_MAP otherwise.
PartialAlgebra rename_carrier(const PartialAlgebra& a,
                              const std::map<std::string, std::string>& names);

/// GraphViz export of a unary algebra: one node per carrier element, one
/// edge per defined unary table entry labeled by the operator. E_SIG for
/// non-unary signatures.
std::string to_dot(const PartialAlgebra& a, const std::string& graph_name = "algebra");

/// All ground terms over the signature with at most `depth` nested
/// applications. Exhaustive; meant for small test signatures.
std::vector<Term> all_ground_terms(const Signature& sig, int depth);

}  // namespace landin

#pragma once

#include "radix/abelian.hpp"
#include "radix/extensions.hpp"

#include <optional>
#include <string>
#include <vector>

namespace radix {

/// A free graded module over a finite grading group: one (rank, label) per
/// degree, indexed by FgAbGroup::index_of.
class GradedModule {
 public:
  struct Component {
    std::size_t rank = 0;
    std::string label;
  };

  GradedModule() = default;
  /// Throws std::invalid_argument for an infinite grading or a wrong count.
  GradedModule(FgAbGroup grading, std::vector<Component> components);
  /// All ranks zero, labels "<prefix><index>".
  static GradedModule zero(FgAbGroup grading, const std::string& prefix);
  /// Rank 1 in degree 0, labelled "1".
  static GradedModule unit(FgAbGroup grading);

  const FgAbGroup& grading() const { return grading_; }
  const std::vector<Component>& components() const { return components_; }
  const Component& at(std::size_t degree) const { return components_.at(degree); }
  GradedModule with_component(std::size_t degree, Component c) const;

 private:
  FgAbGroup grading_;
  std::vector<Component> components_;
};

/// Symmetric sign form eps on a grading group with values in a 2-torsion
/// group V (usually Z/2 = {+1, -1}), plus the diagonal it is meant to realize.
class SignForm {
 public:
  SignForm() = default;
  /// eps(a, b) = chi(a) chi(b); works for infinite gradings.
  static SignForm from_parity(const GroupHom& chi);
  /// Arbitrary table over a finite grading (|grading|^2 entries, row-major by
  /// index). `diagonal` is the intended tau'(a) per degree, if known.
  static SignForm from_table(FgAbGroup grading, FgAbGroup values, std::vector<GroupElement> table,
                             std::optional<std::vector<GroupElement>> diagonal = std::nullopt);

  const FgAbGroup& grading() const { return grading_; }
  const FgAbGroup& values() const { return values_; }
  bool is_parity() const { return chi_.has_value(); }

  GroupElement value(const GroupElement& a, const GroupElement& b) const;
  /// +1 or -1 when V is Z/2 (or trivial); throws std::domain_error otherwise.
  int sign(const GroupElement& a, const GroupElement& b) const;
  /// "+1"/"-1" for Z/2 values, the formatted element otherwise.
  std::string sign_label(const GroupElement& v) const;
  /// The prescribed diagonal tau'(a), if any.
  std::optional<GroupElement> diagonal(const GroupElement& a) const;

 private:
  FgAbGroup grading_;
  FgAbGroup values_;
  std::optional<GroupHom> chi_;
  std::vector<GroupElement> table_;
  std::optional<std::vector<GroupElement>> diagonal_;
};

SignForm sign_form_from_parity(const GroupHom& chi);

/// eps(p, q): the sign of the swap on the (p, q) summand.
GroupElement braiding_sign(const SignForm& eps, const GroupElement& p, const GroupElement& q);

struct TensorSummand {
  std::size_t left = 0;    // degree index p in M
  std::size_t right = 0;   // degree index q in N
  std::size_t degree = 0;  // p + q
  std::size_t rank = 0;
  GroupElement twist;      // c(p, q) in the cocycle fiber
  std::string twist_label;  // "1", "omega", ...
  GroupElement sign;       // eps(p, q)
  std::string sign_label;
  std::string label;       // "omega⊗A1⊗B1"
};

struct TwistedTensorResult {
  GradedModule module;
  /// Nonzero-rank summands ordered by degree index, then p.
  std::vector<TensorSummand> summands;
};

/// M ⊗ N with the cocycle twist c(p, q) and braiding sign eps(p, q) recorded on
/// each summand. Throws std::invalid_argument on a grading mismatch.
TwistedTensorResult twisted_tensor(const GradedModule& m, const GradedModule& n,
                                   const SymmetricCocycle& c, const SignForm& eps);

struct CoherenceReport {
  bool passed = true;
  std::vector<std::string> violations;
};

/// Both parenthesizations of every triple carry the same twist.
CoherenceReport check_associativity(const SymmetricCocycle& c, const SignForm& eps,
                                    const FgAbGroup& grading);

/// c symmetric; eps symmetric, biadditive and 2-torsion (the double swap is the
/// identity); eps(a, a) equal to the prescribed diagonal.
CoherenceReport check_symmetry(const SymmetricCocycle& c, const SignForm& eps,
                               const FgAbGroup& grading);

}  // namespace radix

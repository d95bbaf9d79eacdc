#pragma once

#include "radix/abelian.hpp"

#include <optional>
#include <string>
#include <vector>

namespace radix {

/// A function c: A x A -> G stored as a full table over a finite base A,
/// indexed by FgAbGroup::index_of. A torsion-free base carries no table and
/// stands for the split cocycle (Ext vanishes there).
///
/// Construction does not validate; violations() lists every failure of the
/// normalized / symmetric / cocycle-identity conditions.
class SymmetricCocycle {
 public:
  SymmetricCocycle() = default;
  SymmetricCocycle(FgAbGroup base, FgAbGroup fiber, std::vector<GroupElement> table);

  static SymmetricCocycle zero(FgAbGroup base, FgAbGroup fiber);

  const FgAbGroup& base() const { return base_; }
  const FgAbGroup& fiber() const { return fiber_; }
  bool has_table() const { return !base_.is_trivial() && base_.is_finite(); }
  const std::vector<GroupElement>& table() const { return table_; }

  GroupElement value(const GroupElement& a, const GroupElement& b) const;
  GroupElement value(std::size_t a, std::size_t b) const;

  /// Copy with c(a,b) replaced (and c(b,a) too when `keep_symmetric`).
  SymmetricCocycle with_entry(const GroupElement& a, const GroupElement& b, GroupElement v,
                              bool keep_symmetric = true) const;

  std::vector<std::string> violations() const;
  bool is_valid() const { return violations().empty(); }

  friend bool operator==(const SymmetricCocycle& x, const SymmetricCocycle& y) {
    return x.base_ == y.base_ && x.fiber_ == y.fiber_ && x.table_ == y.table_;
  }

 private:
  FgAbGroup base_;
  FgAbGroup fiber_;
  std::vector<GroupElement> table_;
};

/// The extension of Z/n by G in which the chosen lift x of 1 satisfies
/// n x = alpha: c(i, j) = floor((i + j) / n) * alpha on representatives
/// 0 <= i, j < n.
SymmetricCocycle radical_cocycle(const FgAbGroup& g, const GroupElement& alpha, const Integer& n);

/// Representative v_j = sum_{t=1}^{a_j - 1} c(t e_j, e_j) of the class on the
/// j-th cyclic factor of the base (a_j times the lift of e_j).
std::vector<GroupElement> cocycle_representatives(const SymmetricCocycle& c);

ExtClass cocycle_to_class(const SymmetricCocycle& c);
SymmetricCocycle class_to_cocycle(const ExtClass& e);

/// Throws std::invalid_argument on mismatched base or fiber.
SymmetricCocycle baer_sum(const SymmetricCocycle& c1, const SymmetricCocycle& c2);
SymmetricCocycle negate(const SymmetricCocycle& c);
SymmetricCocycle pushforward(const SymmetricCocycle& c, const GroupHom& h);

struct SplitResult {
  bool split = false;
  /// s: A -> G (indexed like the base) with c(a,b) = s(a) + s(b) - s(a+b).
  std::optional<std::vector<GroupElement>> section;
};

SplitResult is_split(const SymmetricCocycle& c);

struct TotalGroup {
  FgAbGroup group;
  GroupHom inclusion;   // G -> E
  GroupHom projection;  // E -> A
  /// Image in E of the pair (a, 0) for each base element a, indexed like the
  /// base. Empty for an infinite base.
  std::vector<GroupElement> section;
  /// Image in E of the chosen lift of each base generator.
  std::vector<GroupElement> generator_lifts;
  /// Column k writes generator k of E in terms of the generators of G
  /// followed by the base-generator lifts.
  IntMatrix expressions;
};

/// E = G x A with (a, g) + (b, h) = (a + b, g + h + c(a, b)), presented by the
/// generators of G and one lift per generator of A.
TotalGroup total_group(const SymmetricCocycle& c);

/// Homomorphism E -> T restricting to g on G and sending the lift of base
/// generator j to values[j]; std::nullopt when that assignment is inconsistent.
std::optional<GroupHom> extend_with_values(const GroupHom& g, const SymmetricCocycle& c,
                                           const TotalGroup& e,
                                           const std::vector<GroupElement>& values);

/// Every extension of g: G -> T over total_group(c). The target must be finite
/// whenever the base has free generators.
std::vector<GroupHom> extend_hom(const GroupHom& g, const SymmetricCocycle& c);

/// Solutions y in T of k y = w, enumerated; throws std::domain_error when the
/// solution set is infinite.
std::vector<GroupElement> solve_multiple(const FgAbGroup& t, const Integer& k,
                                         const GroupElement& w);

}  // namespace radix

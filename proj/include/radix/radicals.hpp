#pragma once

#include "radix/abelian.hpp"
#include "radix/extensions.hpp"
#include "radix/models.hpp"
#include "radix/obstruction.hpp"

#include <string>
#include <vector>

namespace radix {

/// Renders a unit multiplicatively through generator labels. When every label
/// involved is an integer ("-1", "5") the product is evaluated ("-3", "1/5");
/// otherwise it is written symbolically ("w^2*v"). The identity renders as "1".
std::string render_unit(const FgAbGroup& units, const GroupElement& u);

/// x_a * x_b = u(c(a, b)) * x_{a+b}.
struct StructureConstant {
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t product = 0;
  GroupElement unit;
};

/// The coefficient ring of a twisted group algebra: basis indexed by a finite
/// group A, multiplication deformed by a unit-valued cocycle.
class TwistedGroupAlgebra {
 public:
  /// Throws std::invalid_argument for an infinite base or an invalid cocycle.
  TwistedGroupAlgebra(std::string ring_symbol, SymmetricCocycle cocycle);

  const std::string& ring_symbol() const { return ring_symbol_; }
  const FgAbGroup& grading() const { return cocycle_.base(); }
  const FgAbGroup& units() const { return cocycle_.fiber(); }
  const SymmetricCocycle& cocycle() const { return cocycle_; }

  std::size_t dimension() const { return n_; }
  const StructureConstant& product(std::size_t a, std::size_t b) const { return table_[a * n_ + b]; }
  const std::vector<StructureConstant>& table() const { return table_; }

  /// "x^i" for a cyclic grading, "x_(c0,c1,..)" otherwise.
  std::string basis_label(std::size_t a) const;
  std::string unit_label(const GroupElement& u) const { return render_unit(units(), u); }
  /// "x^1 * x^1 = 5 * x^0"
  std::string format_product(std::size_t a, std::size_t b) const;

  /// Compares (x_a x_b) x_d with x_a (x_b x_d) for all triples.
  std::vector<std::string> associativity_violations() const;
  std::vector<std::string> commutativity_violations() const;

 private:
  std::string ring_symbol_;
  SymmetricCocycle cocycle_;
  std::size_t n_ = 0;
  std::vector<StructureConstant> table_;
};

/// Obstruction to lifting alpha to a strict unit: kappa(alpha) in K1[2].
ObstructionReport strict_unit_obstruction(const UnitModel& m, const GroupElement& alpha);

/// Truncated obstruction to a formal n'th root of alpha: the pairing of kappa
/// with the class of the radical extension, in Ext(Z/n, K1[2]). Lifts are the
/// extensions of kappa over the total group.
ObstructionReport formal_root_obstruction(const UnitModel& m, const GroupElement& alpha,
                                          const Integer& n);

std::vector<LiftWitness> formal_root_lifts(const UnitModel& m, const GroupElement& alpha,
                                           const Integer& n);

/// pi_* R[x] / (x^n - alpha). Throws ObstructionError when no formal root exists.
TwistedGroupAlgebra adjoin_root(const std::string& ring_symbol, const UnitModel& m,
                                const GroupElement& alpha, const Integer& n);

TwistedGroupAlgebra twisted_group_algebra(const std::string& ring_symbol, const SymmetricCocycle& c);

struct BocksteinRoot {
  LiftWitness witness;
  TwistedGroupAlgebra algebra;
};

/// Canonical formal root of a strict unit: kappa' vanishes on the lift x.
/// Throws std::invalid_argument when alpha is not strict.
BocksteinRoot bockstein_root(const std::string& ring_symbol, const UnitModel& m,
                             const GroupElement& alpha, const Integer& n);

}  // namespace radix

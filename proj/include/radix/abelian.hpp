#pragma once

#include "radix/integer.hpp"
#include "radix/matrix.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace radix {

/// Coordinates of an element with respect to the canonical generators of
/// some FgAbGroup: torsion coordinates first (reduced into [0, d_i)), then
/// free coordinates.
struct GroupElement {
  std::vector<Integer> coords;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// A finitely generated abelian group Z/d_1 + ... + Z/d_k + Z^r in canonical
/// form: d_i >= 2 and d_i | d_{i+1}. Generators are numbered torsion first.
///
/// Equality compares structure only; labels are display metadata.
class FgAbGroup {
 public:
  FgAbGroup() = default;
  /// Throws std::invalid_argument unless the factors form a divisibility
  /// chain of integers >= 2, or if a nonempty label list has the wrong size.
  FgAbGroup(std::size_t free_rank, std::vector<Integer> invariant_factors,
            std::vector<std::string> labels = {});

  static FgAbGroup trivial() { return {}; }
  static FgAbGroup free(std::size_t rank) { return FgAbGroup(rank, {}); }
  /// Z/n for n >= 2, Z for n = 0, the trivial group for n = 1.
  static FgAbGroup cyclic(const Integer& n);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& invariant_factors() const { return invariants_; }
  std::size_t torsion_rank() const { return invariants_.size(); }
  std::size_t num_generators() const { return invariants_.size() + free_rank_; }
  /// Order of generator i, with 0 standing for infinite order.
  Integer generator_order(std::size_t i) const;
  bool is_free_generator(std::size_t i) const { return i >= invariants_.size(); }

  const std::vector<std::string>& labels() const { return labels_; }
  /// Label of generator i, or a positional default ("e0", "e1", ...).
  std::string label(std::size_t i) const;
  FgAbGroup with_labels(std::vector<std::string> labels) const;

  bool is_trivial() const { return num_generators() == 0; }
  bool is_finite() const { return free_rank_ == 0; }
  /// Order of a finite group; throws std::domain_error for infinite groups.
  Integer order() const;
  /// Exponent of the torsion subgroup (1 when torsion-free).
  Integer torsion_exponent() const;

  GroupElement zero() const;
  GroupElement generator(std::size_t i) const;
  /// Reduces raw coordinates; throws on a length mismatch.
  GroupElement element(std::vector<Integer> coords) const;
  GroupElement element(std::initializer_list<long> coords) const;
  bool contains(const GroupElement& x) const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  GroupElement scale(const Integer& k, const GroupElement& a) const;
  bool is_zero(const GroupElement& a) const;
  /// Order of an element, 0 for infinite order.
  Integer element_order(const GroupElement& a) const;

  /// Mixed-radix enumeration of a finite group.
  std::size_t index_of(const GroupElement& a) const;
  GroupElement element_at(std::size_t index) const;
  std::vector<GroupElement> elements() const;
  /// Number of elements, for finite groups small enough to enumerate.
  std::size_t size() const;

  /// "Z^2 + Z/2 + Z/4", or "0".
  std::string to_string() const;
  /// Renders an element using generator labels, e.g. "2*e0 + e2".
  std::string format(const GroupElement& a) const;

  friend bool operator==(const FgAbGroup& a, const FgAbGroup& b) {
    return a.free_rank_ == b.free_rank_ && a.invariants_ == b.invariants_;
  }

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> invariants_;
  std::vector<std::string> labels_;
};

/// A homomorphism given on canonical generators: column j of the matrix is the
/// image of source generator j in target coordinates.
class GroupHom {
 public:
  GroupHom() = default;
  /// Reduces columns into the target and throws std::invalid_argument if
  /// some source relation does not map to zero.
  GroupHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix);
  /// Builds without checking; see violations().
  static GroupHom unchecked(FgAbGroup source, FgAbGroup target, IntMatrix matrix);
  /// Homomorphism from generator images.
  static GroupHom from_images(FgAbGroup source, FgAbGroup target,
                              std::span<const GroupElement> images);
  static GroupHom zero(FgAbGroup source, FgAbGroup target);
  static GroupHom identity(const FgAbGroup& g);

  const FgAbGroup& source() const { return source_; }
  const FgAbGroup& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  /// Well-definedness failures (one message per offending generator).
  std::vector<std::string> violations() const;
  bool is_well_defined() const { return violations().empty(); }

  GroupElement operator()(const GroupElement& x) const;
  GroupElement image_of_generator(std::size_t j) const;

  /// this o inner.
  GroupHom after(const GroupHom& inner) const;
  GroupHom plus(const GroupHom& other) const;
  GroupHom scaled(const Integer& k) const;
  bool is_zero() const;

  friend bool operator==(const GroupHom& a, const GroupHom& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.matrix_ == b.matrix_;
  }

 private:
  FgAbGroup source_;
  FgAbGroup target_;
  IntMatrix matrix_;
};

/// Cokernel of a relation matrix together with the basis change relating the
/// ambient free group to canonical coordinates.
struct Cokernel {
  FgAbGroup group;
  /// group.num_generators() x ambient: ambient vector -> canonical coords.
  IntMatrix to_canonical;
  /// ambient x group.num_generators(): column k is a lift of generator k.
  IntMatrix from_canonical;

  GroupElement project(std::span<const Integer> ambient) const;
  std::vector<Integer> lift(const GroupElement& x) const;
};

/// Cokernel of the columns of `relations` inside Z^ambient_rank.
Cokernel cokernel(const IntMatrix& relations, std::size_t ambient_rank);

/// Canonical form of the cokernel of a presentation matrix.
FgAbGroup canonical_form(const IntMatrix& presentation, std::size_t ambient_rank);

/// Direct sum of cyclic groups Z/m_i (m_i = 0 meaning Z, m_i = 1 trivial),
/// canonicalized.
Cokernel cyclic_sum(std::span<const Integer> moduli);

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);

/// Hom(A, B) in canonical form with explicit homomorphisms for its generators.
class HomGroup {
 public:
  HomGroup(FgAbGroup source, FgAbGroup target);

  const FgAbGroup& group() const { return presentation_.group; }
  const std::vector<GroupHom>& basis() const { return basis_; }
  const FgAbGroup& source() const { return source_; }
  const FgAbGroup& target() const { return target_; }

  GroupElement coordinates(const GroupHom& h) const;
  GroupHom hom_at(const GroupElement& coords) const;

 private:
  FgAbGroup source_;
  FgAbGroup target_;
  // One elementary cyclic summand per (source gen j, target gen i), j-major.
  std::vector<Integer> unit_;
  Cokernel presentation_;
  std::vector<GroupHom> basis_;
};

HomGroup hom_group(const FgAbGroup& a, const FgAbGroup& b);

/// Ext(A, B) with a fixed coordinate system. For torsion generator j of A with
/// order a_j, a class is described by a representative v_j in B modulo a_j B;
/// elementary coordinates are the components of the v_j, canonicalized.
class ExtGroup {
 public:
  ExtGroup(FgAbGroup source, FgAbGroup target);

  const FgAbGroup& group() const { return presentation_.group; }
  const FgAbGroup& source() const { return source_; }
  const FgAbGroup& target() const { return target_; }

  /// Class with the given representatives (one element of B per torsion
  /// generator of A).
  GroupElement class_of(std::span<const GroupElement> representatives) const;
  /// Representatives of a class in canonical coordinates.
  std::vector<GroupElement> representatives(const GroupElement& coords) const;

 private:
  FgAbGroup source_;
  FgAbGroup target_;
  Cokernel presentation_;
};

ExtGroup ext_group(const FgAbGroup& a, const FgAbGroup& b);

/// An extension class of A by the fiber, in ext_group(source, fiber) coordinates.
struct ExtClass {
  FgAbGroup source;
  FgAbGroup fiber;
  GroupElement coords;

  FgAbGroup ambient() const { return ExtGroup(source, fiber).group(); }
  bool is_zero() const;
};

struct SubgroupInclusion {
  FgAbGroup group;
  GroupHom inclusion;
};

struct QuotientProjection {
  FgAbGroup group;
  GroupHom projection;
};

/// B[n], the elements killed by n.
SubgroupInclusion torsion_part(const FgAbGroup& b, const Integer& n);
/// B / nB.
QuotientProjection quotient_mod(const FgAbGroup& b, const Integer& n);

/// Factors h through an injective hom `inclusion` with the same target;
/// throws std::invalid_argument when some image is outside the subgroup.
GroupHom corestrict(const GroupHom& h, const GroupHom& inclusion);

/// h with its codomain restricted to target[n]; throws std::invalid_argument
/// when some value is not killed by n.
GroupHom into_torsion(const GroupHom& h, const Integer& n);

/// A preimage of y under h, if any.
std::optional<GroupElement> preimage(const GroupHom& h, const GroupElement& y);

/// Groups of homotopy classes [A, Sigma^k B] between Eilenberg-Mac Lane
/// spectra for k = 0..3.
struct MappingGroupReport {
  int k = 0;
  /// Named groups entering the answer ("Hom(A,B)", ...). For k = 3 these are
  /// the sub and quotient of the short exact sequence, in that order.
  std::vector<std::pair<std::string, FgAbGroup>> terms;
  /// The group itself when it is determined.
  std::optional<FgAbGroup> group;
  bool determined() const { return group.has_value(); }
};

MappingGroupReport em_maps(const FgAbGroup& a, const FgAbGroup& b, int k);

/// Pushforward g_*: Ext(A, B) -> Ext(A, T) of e along g: B -> T. With T = C[2]
/// this is the composition pairing [B, S^2 C] x [A, S B] -> [A, S^3 C].
/// Throws std::invalid_argument when g does not start at the fiber of e.
ExtClass yoneda_pair(const GroupHom& g, const ExtClass& e);

struct PushoutResult {
  FgAbGroup group;
  GroupHom from_left;
  GroupHom from_right;
};

/// A +_C B for f: C -> A and g: C -> B.
PushoutResult pushout(const GroupHom& f, const GroupHom& g);

}  // namespace radix

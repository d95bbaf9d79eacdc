#pragma once

#include "radix/abelian.hpp"

#include <gmpxx.h>

#include <set>
#include <string>
#include <vector>

namespace radix {

/// Two-stage unit data: units = pi_0 gl_1 R, k1 = pi_1 gl_1 R, and the first
/// k-invariant kappa: units -> k1, which takes 2-torsion values.
struct UnitModel {
  std::string name;
  FgAbGroup units;
  FgAbGroup k1;
  GroupHom kappa;
};

/// Two-stage Picard data: p0 = pi_0 pic, p1 = pi_1 pic = Aut(unit), and the
/// twist homomorphism tau: p0 -> p1 with 2-torsion values.
struct PicModel {
  std::string name;
  FgAbGroup p0;
  FgAbGroup p1;
  GroupHom tau;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// First Postnikov section of the sphere localized at a set of odd primes.
/// Units are {+-1} x Z^S, generators labelled "-1" and the primes in
/// increasing order; kappa(u) = 0 iff u = 1 mod 4.
/// Throws std::invalid_argument if S contains 2 or a non-prime.
UnitModel local_truncated_sphere_model(const std::set<long>& primes);

/// Unit group element of the localized sphere model for a rational unit
/// (e.g. 15, -3, 5/3). Throws std::invalid_argument if the value is not a unit.
GroupElement sphere_unit(const UnitModel& m, const mpq_class& value);

/// Picard model of a local ring: P0 = Z on the suspension class, P1 = units,
/// tau(n) = n * (-1). With `minus_one_is_one` (characteristic 2) tau = 0.
/// Throws std::invalid_argument unless the designated element is 2-torsion.
PicModel local_ring_pic_model(const FgAbGroup& units, const GroupElement& minus_one,
                              bool minus_one_is_one);

ValidationReport validate_model(const UnitModel& m);
ValidationReport validate_model(const PicModel& m);

/// A model with zero k1 (every root lifts uniquely).
UnitModel discrete_unit_model(const FgAbGroup& units);

}  // namespace radix

#pragma once

#include "radix/abelian.hpp"
#include "radix/extensions.hpp"
#include "radix/models.hpp"
#include "radix/obstruction.hpp"

#include <vector>

namespace radix {

/// gamma is symmetric when its twist tau(gamma) is trivial.
bool is_symmetric(const PicModel& p, const GroupElement& gamma);

/// Obstruction to lifting rho_bar: A -> P0 to a strict grading: tau o rho_bar
/// in Hom(A, P1[2]). Lifts differ by Ext(A, P1).
ObstructionReport strict_grading_obstruction(const PicModel& p, const GroupHom& rho_bar);

/// Obstruction to extending the grading along 0 -> P0 -> Gamma -> B -> 0
/// given by `gamma`: the pairing of tau with its class, in Ext(B, P1[2]).
/// Witnesses are the tau-extensions, a torsor over Hom(B, P1[2]).
ObstructionReport grading_extension_obstruction(const PicModel& p, const SymmetricCocycle& gamma);

/// Every hom Gamma -> P1[2] restricting to tau on P0.
std::vector<GroupHom> tau_extensions(const PicModel& p, const SymmetricCocycle& gamma);

/// Outer terms of 0 -> P1/n -> [S/n, pic] -> P0[n] -> 0.
struct TorsionObjectTerms {
  QuotientProjection quotient;
  SubgroupInclusion kernel;
};

TorsionObjectTerms sn_torsion_terms(const PicModel& p, const Integer& n);

/// Gamma = total group of the grading extension.
TotalGroup extended_pic(const PicModel& p, const SymmetricCocycle& gamma);

}  // namespace radix

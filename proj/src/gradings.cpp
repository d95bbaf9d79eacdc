#include "radix/gradings.hpp"

#include <stdexcept>

namespace radix {

namespace {

void check_fiber(const PicModel& p, const SymmetricCocycle& gamma) {
  if (!(gamma.fiber() == p.p0))
    throw std::invalid_argument("grading cocycle has fiber " + gamma.fiber().to_string() +
                                ", expected P0 = " + p.p0.to_string());
  if (!gamma.base().is_finite())
    throw std::invalid_argument("grading extension base must be finite");
}

}  // namespace

bool is_symmetric(const PicModel& p, const GroupElement& gamma) {
  return p.p1.is_zero(p.tau(p.p0.element(gamma.coords)));
}

ObstructionReport strict_grading_obstruction(const PicModel& p, const GroupHom& rho_bar) {
  if (!(rho_bar.target() == p.p0))
    throw std::invalid_argument("rho_bar must land in P0 = " + p.p0.to_string());
  const GroupHom tau2 = into_torsion(p.tau, 2);
  const GroupHom composite = tau2.after(rho_bar);
  const HomGroup hom(rho_bar.source(), tau2.target());

  ObstructionReport r;
  r.kind = "strict grading (truncated)";
  r.ambient = hom.group();
  r.obstruction = hom.coordinates(composite);
  r.vanishes = composite.is_zero();
  r.torsor = ext_group(rho_bar.source(), p.p1).group();
  r.torsor_name = "Ext(A,P1)";
  if (!r.vanishes) r.lift_count = Integer(0);
  else if (r.torsor.is_finite()) r.lift_count = r.torsor.order();
  return r;
}

std::vector<GroupHom> tau_extensions(const PicModel& p, const SymmetricCocycle& gamma) {
  check_fiber(p, gamma);
  return extend_hom(into_torsion(p.tau, 2), gamma);
}

ObstructionReport grading_extension_obstruction(const PicModel& p, const SymmetricCocycle& gamma) {
  check_fiber(p, gamma);
  const GroupHom tau2 = into_torsion(p.tau, 2);
  const ExtClass paired = yoneda_pair(tau2, cocycle_to_class(gamma));

  ObstructionReport r;
  r.kind = "grading extension (truncated)";
  r.ambient = paired.ambient();
  r.obstruction = paired.coords;
  r.vanishes = paired.is_zero();
  r.torsor = hom_group(gamma.base(), tau2.target()).group();
  r.torsor_name = "Hom(B,P1[2])";

  const TotalGroup e = total_group(gamma);
  for (GroupHom& h : extend_hom(tau2, gamma)) {
    LiftWitness w{h, {}};
    for (const auto& x : e.generator_lifts) w.generator_values.push_back(h(x));
    r.witnesses.push_back(std::move(w));
  }
  if (r.vanishes == r.witnesses.empty())
    throw std::logic_error("grading_extension_obstruction: pairing and extension search disagree");
  r.lift_count = Integer(static_cast<unsigned long>(r.witnesses.size()));
  return r;
}

TorsionObjectTerms sn_torsion_terms(const PicModel& p, const Integer& n) {
  return TorsionObjectTerms{quotient_mod(p.p1, n), torsion_part(p.p0, n)};
}

TotalGroup extended_pic(const PicModel& p, const SymmetricCocycle& gamma) {
  check_fiber(p, gamma);
  return total_group(gamma);
}

}  // namespace radix

#include "radix/radicals.hpp"

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <utility>

namespace radix {

namespace {

std::optional<Integer> integer_label(const std::string& s) {
  try {
    return parse_integer(s);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::string join_violations(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size() && i < 3; ++i) s += (i ? "; " : "") + v[i];
  if (v.size() > 3) s += "; ...";
  return s;
}

}  // namespace

std::string render_unit(const FgAbGroup& units, const GroupElement& u) {
  const GroupElement r = units.element(u.coords);
  bool numeric = true;
  for (std::size_t i = 0; i < r.coords.size(); ++i)
    if (r.coords[i] != 0 && !integer_label(units.label(i))) numeric = false;

  if (numeric) {
    mpq_class value = 1;
    for (std::size_t i = 0; i < r.coords.size(); ++i) {
      if (r.coords[i] == 0) continue;
      const Integer base = *integer_label(units.label(i));
      Integer power;
      const Integer e = abs(r.coords[i]);
      mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), e.get_ui());
      if (r.coords[i] > 0) value *= mpq_class(power);
      else value /= mpq_class(power);
    }
    value.canonicalize();
    return value.get_str();
  }

  std::string s;
  for (std::size_t i = 0; i < r.coords.size(); ++i) {
    const Integer& c = r.coords[i];
    if (c == 0) continue;
    if (!s.empty()) s += "*";
    s += units.label(i);
    if (c != 1) s += "^" + c.get_str();
  }
  return s.empty() ? "1" : s;
}

// ---------------------------------------------------------------------------
// TwistedGroupAlgebra

TwistedGroupAlgebra::TwistedGroupAlgebra(std::string ring_symbol, SymmetricCocycle cocycle)
    : ring_symbol_(std::move(ring_symbol)), cocycle_(std::move(cocycle)) {
  const FgAbGroup& a = cocycle_.base();
  if (!a.is_finite())
    throw std::invalid_argument("twisted group algebra needs a finite grading, got " + a.to_string());
  const auto bad = cocycle_.violations();
  if (!bad.empty()) throw std::invalid_argument("invalid cocycle: " + join_violations(bad));
  n_ = a.size();
  const auto elems = a.elements();
  table_.reserve(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      table_.push_back(StructureConstant{i, j, a.index_of(a.add(elems[i], elems[j])),
                                         cocycle_.value(i, j)});
}

std::string TwistedGroupAlgebra::basis_label(std::size_t a) const {
  const FgAbGroup& g = grading();
  const GroupElement e = g.element_at(a);
  if (g.num_generators() <= 1) return "x^" + (e.coords.empty() ? std::string("0") : e.coords[0].get_str());
  std::string s = "x_(";
  for (std::size_t i = 0; i < e.coords.size(); ++i) s += (i ? "," : "") + e.coords[i].get_str();
  return s + ")";
}

std::string TwistedGroupAlgebra::format_product(std::size_t a, std::size_t b) const {
  const StructureConstant& sc = product(a, b);
  return basis_label(a) + " * " + basis_label(b) + " = " + unit_label(sc.unit) + " * " +
         basis_label(sc.product);
}

std::vector<std::string> TwistedGroupAlgebra::associativity_violations() const {
  std::vector<std::string> out;
  const FgAbGroup& u = units();
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      for (std::size_t d = 0; d < n_; ++d) {
        const StructureConstant& ab = product(a, b);
        const StructureConstant& ab_d = product(ab.product, d);
        const StructureConstant& bd = product(b, d);
        const StructureConstant& a_bd = product(a, bd.product);
        const GroupElement left = u.add(ab.unit, ab_d.unit);
        const GroupElement right = u.add(bd.unit, a_bd.unit);
        if (ab_d.product != a_bd.product || !(left == right))
          out.push_back("(" + basis_label(a) + " " + basis_label(b) + ") " + basis_label(d) + " = " +
                        unit_label(left) + " * " + basis_label(ab_d.product) + " but " +
                        basis_label(a) + " (" + basis_label(b) + " " + basis_label(d) + ") = " +
                        unit_label(right) + " * " + basis_label(a_bd.product));
      }
  return out;
}

std::vector<std::string> TwistedGroupAlgebra::commutativity_violations() const {
  std::vector<std::string> out;
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b) {
      const StructureConstant& x = product(a, b);
      const StructureConstant& y = product(b, a);
      if (x.product != y.product || !(x.unit == y.unit))
        out.push_back(format_product(a, b) + " but " + format_product(b, a));
    }
  return out;
}

TwistedGroupAlgebra twisted_group_algebra(const std::string& ring_symbol, const SymmetricCocycle& c) {
  return TwistedGroupAlgebra(ring_symbol, c);
}

// ---------------------------------------------------------------------------
// Obstructions

ObstructionReport strict_unit_obstruction(const UnitModel& m, const GroupElement& alpha) {
  const GroupHom kappa2 = into_torsion(m.kappa, 2);
  ObstructionReport r;
  r.kind = "strict unit (truncated)";
  r.ambient = kappa2.target();
  r.obstruction = kappa2(m.units.element(alpha.coords));
  r.vanishes = r.ambient.is_zero(r.obstruction);
  r.torsor = ext_group(FgAbGroup::free(1), m.k1).group();
  r.torsor_name = "Ext(Z,K1)";
  r.lift_count = r.vanishes ? Integer(1) : Integer(0);
  return r;
}

ObstructionReport formal_root_obstruction(const UnitModel& m, const GroupElement& alpha,
                                          const Integer& n) {
  const GroupHom kappa2 = into_torsion(m.kappa, 2);
  const SymmetricCocycle c = radical_cocycle(m.units, alpha, n);
  const ExtClass paired = yoneda_pair(kappa2, cocycle_to_class(c));

  ObstructionReport r;
  r.kind = "formal root (truncated)";
  r.ambient = paired.ambient();
  r.obstruction = paired.coords;
  r.vanishes = paired.is_zero();
  r.torsor = hom_group(c.base(), kappa2.target()).group();
  r.torsor_name = "Hom(Z/n,K1[2])";

  const TotalGroup e = total_group(c);
  for (GroupHom& h : extend_hom(kappa2, c)) {
    LiftWitness w{h, {}};
    for (const auto& x : e.generator_lifts) w.generator_values.push_back(h(x));
    r.witnesses.push_back(std::move(w));
  }
  if (r.vanishes == r.witnesses.empty())
    throw std::logic_error("formal_root_obstruction: pairing and extension search disagree");
  r.lift_count = Integer(static_cast<unsigned long>(r.witnesses.size()));
  return r;
}

std::vector<LiftWitness> formal_root_lifts(const UnitModel& m, const GroupElement& alpha,
                                           const Integer& n) {
  return formal_root_obstruction(m, alpha, n).witnesses;
}

TwistedGroupAlgebra adjoin_root(const std::string& ring_symbol, const UnitModel& m,
                                const GroupElement& alpha, const Integer& n) {
  ObstructionReport r = formal_root_obstruction(m, alpha, n);
  if (!r.vanishes) throw ObstructionError(std::move(r));
  return TwistedGroupAlgebra(ring_symbol, radical_cocycle(m.units, alpha, n));
}

BocksteinRoot bockstein_root(const std::string& ring_symbol, const UnitModel& m,
                             const GroupElement& alpha, const Integer& n) {
  const ObstructionReport strict = strict_unit_obstruction(m, alpha);
  if (!strict.vanishes)
    throw std::invalid_argument(m.units.format(alpha) + " is not a strict unit: kappa = " +
                                strict.ambient.format(strict.obstruction));
  const GroupHom kappa2 = into_torsion(m.kappa, 2);
  const SymmetricCocycle c = radical_cocycle(m.units, alpha, n);
  const TotalGroup e = total_group(c);
  std::vector<GroupElement> values(c.base().num_generators(), kappa2.target().zero());
  auto h = extend_with_values(kappa2, c, e, values);
  if (!h) throw std::logic_error("bockstein_root: zero lift failed for a strict unit");
  return BocksteinRoot{LiftWitness{*h, values}, TwistedGroupAlgebra(ring_symbol, c)};
}

}  // namespace radix

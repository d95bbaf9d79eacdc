#include "radix/models.hpp"

#include <stdexcept>

namespace radix {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void check_two_torsion(const GroupHom& h, const std::string& what, ValidationReport& r) {
  for (std::size_t j = 0; j < h.source().num_generators(); ++j) {
    GroupElement y = h.image_of_generator(j);
    if (!h.target().is_zero(h.target().scale(2, y)))
      r.violations.push_back(what + " is not 2-torsion: " + what + "(" + h.source().label(j) +
                             ") = " + h.target().format(y) + " has order " +
                             h.target().element_order(y).get_str());
  }
}

void check_hom(const GroupHom& h, const FgAbGroup& src, const FgAbGroup& tgt,
               const std::string& what, ValidationReport& r) {
  if (!(h.source() == src) || !(h.target() == tgt)) {
    r.violations.push_back(what + " does not go from " + src.to_string() + " to " + tgt.to_string());
    return;
  }
  for (const auto& v : h.violations()) r.violations.push_back(what + ": " + v);
}

}  // namespace

UnitModel local_truncated_sphere_model(const std::set<long>& primes) {
  std::vector<std::string> labels{"-1"};
  std::vector<GroupElement> images;
  const FgAbGroup k1 = FgAbGroup::cyclic(2).with_labels({"eta"});
  images.push_back(k1.element({1}));
  std::string name = "sphere:";
  bool first = true;
  for (long p : primes) {
    if (p == 2) throw std::invalid_argument("2 cannot be inverted in the truncated sphere model");
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not a prime");
    labels.push_back(std::to_string(p));
    images.push_back(k1.element({p % 4 == 3 ? 1 : 0}));
    name += (first ? "" : ",") + std::to_string(p);
    first = false;
  }
  FgAbGroup units(primes.size(), {Integer(2)}, std::move(labels));
  GroupHom kappa = GroupHom::from_images(units, k1, images);
  return UnitModel{name, units, k1, kappa};
}

GroupElement sphere_unit(const UnitModel& m, const mpq_class& value) {
  if (value == 0) throw std::invalid_argument("0 is not a unit");
  GroupElement x = m.units.zero();
  if (value < 0) x.coords[0] = 1;
  Integer num = abs(value.get_num());
  Integer den = value.get_den();
  for (std::size_t i = 1; i < m.units.num_generators(); ++i) {
    const Integer p = parse_integer(m.units.label(i));
    while (mpz_divisible_p(num.get_mpz_t(), p.get_mpz_t())) {
      num /= p;
      x.coords[i] += 1;
    }
    while (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) {
      den /= p;
      x.coords[i] -= 1;
    }
  }
  if (num != 1 || den != 1)
    throw std::invalid_argument(value.get_str() + " is not a unit in " + m.name);
  return m.units.element(std::move(x.coords));
}

PicModel local_ring_pic_model(const FgAbGroup& units, const GroupElement& minus_one,
                              bool minus_one_is_one) {
  GroupElement m1 = units.element(minus_one.coords);
  if (!units.is_zero(units.scale(2, m1)))
    throw std::invalid_argument("designated element " + units.format(m1) + " is not 2-torsion");
  FgAbGroup p0 = FgAbGroup::free(1).with_labels({"S"});
  std::vector<GroupElement> images{minus_one_is_one ? units.zero() : m1};
  GroupHom tau = GroupHom::from_images(p0, units, images);
  return PicModel{"local-ring", p0, units, tau};
}

ValidationReport validate_model(const UnitModel& m) {
  ValidationReport r;
  check_hom(m.kappa, m.units, m.k1, "kappa", r);
  if (r.ok()) check_two_torsion(m.kappa, "kappa", r);
  return r;
}

ValidationReport validate_model(const PicModel& m) {
  ValidationReport r;
  check_hom(m.tau, m.p0, m.p1, "tau", r);
  if (r.ok()) check_two_torsion(m.tau, "tau", r);
  return r;
}

UnitModel discrete_unit_model(const FgAbGroup& units) {
  return UnitModel{"discrete", units, FgAbGroup::trivial(),
                   GroupHom::zero(units, FgAbGroup::trivial())};
}

}  // namespace radix

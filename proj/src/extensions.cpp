#include "radix/extensions.hpp"

#include <stdexcept>
#include <utility>

namespace radix {

namespace {

constexpr std::size_t kMaxTableBase = 512;

// Element of the total group in the set model G x A.
struct Pair {
  GroupElement base;
  GroupElement fiber;
};

Pair pair_add(const SymmetricCocycle& c, const Pair& x, const Pair& y) {
  return Pair{c.base().add(x.base, y.base),
              c.fiber().add(c.fiber().add(x.fiber, y.fiber), c.value(x.base, y.base))};
}

// (a, 0) expressed as sum_j a_j * (e_j, 0) plus a fiber correction:
// returns h with sum_j a_j (e_j, 0) = (a, h).
GroupElement lift_correction(const SymmetricCocycle& c, const GroupElement& a) {
  const FgAbGroup& base = c.base();
  Pair acc{base.zero(), c.fiber().zero()};
  for (std::size_t j = 0; j < base.torsion_rank(); ++j) {
    Pair step{base.generator(j), c.fiber().zero()};
    for (Integer t = 0; t < a.coords[j]; ++t) acc = pair_add(c, acc, step);
  }
  return acc.fiber;
}

std::optional<GroupElement> solve_one(const FgAbGroup& t, const Integer& k, const GroupElement& w) {
  std::vector<Integer> y(t.num_generators());
  GroupElement target = t.element(w.coords);
  for (std::size_t i = 0; i < t.num_generators(); ++i) {
    const Integer e = t.generator_order(i);
    const Integer& wi = target.coords[i];
    if (e == 0) {
      if (k == 0) {
        if (wi != 0) return std::nullopt;
        y[i] = 0;
        continue;
      }
      if (mpz_divisible_p(wi.get_mpz_t(), k.get_mpz_t()) == 0) return std::nullopt;
      y[i] = wi / k;
      continue;
    }
    const Integer g = gcd(k, e);
    if (mpz_divisible_p(wi.get_mpz_t(), g.get_mpz_t()) == 0) return std::nullopt;
    const Integer m = e / g;
    if (m == 1) {
      y[i] = 0;
      continue;
    }
    Integer inv;
    Integer kg = mod_floor(k / g, m);
    mpz_invert(inv.get_mpz_t(), kg.get_mpz_t(), m.get_mpz_t());
    y[i] = mod_floor((wi / g) * inv, m);
  }
  return t.element(std::move(y));
}

}  // namespace

// ---------------------------------------------------------------------------
// SymmetricCocycle

SymmetricCocycle::SymmetricCocycle(FgAbGroup base, FgAbGroup fiber, std::vector<GroupElement> table)
    : base_(std::move(base)), fiber_(std::move(fiber)), table_(std::move(table)) {
  if (!base_.is_finite() && base_.torsion_rank() != 0)
    throw std::invalid_argument("cocycle base " + base_.to_string() +
                                " must be finite or torsion-free");
  if (!has_table()) {
    if (!table_.empty()) throw std::invalid_argument("cocycle over " + base_.to_string() +
                                                     " carries no table");
    return;
  }
  const std::size_t n = base_.size();
  if (n > kMaxTableBase)
    throw std::invalid_argument("cocycle base " + base_.to_string() + " is too large");
  if (table_.size() != n * n)
    throw std::invalid_argument("cocycle table has " + std::to_string(table_.size()) +
                                " entries, expected " + std::to_string(n * n));
  for (auto& v : table_) v = fiber_.element(std::move(v.coords));
}

SymmetricCocycle SymmetricCocycle::zero(FgAbGroup base, FgAbGroup fiber) {
  std::vector<GroupElement> table;
  if (!base.is_trivial() && base.is_finite()) {
    const std::size_t n = base.size();
    table.assign(n * n, fiber.zero());
  }
  return SymmetricCocycle(std::move(base), std::move(fiber), std::move(table));
}

GroupElement SymmetricCocycle::value(std::size_t a, std::size_t b) const {
  if (!has_table()) return fiber_.zero();
  const std::size_t n = base_.size();
  return table_.at(a * n + b);
}

GroupElement SymmetricCocycle::value(const GroupElement& a, const GroupElement& b) const {
  if (!has_table()) return fiber_.zero();
  return value(base_.index_of(a), base_.index_of(b));
}

SymmetricCocycle SymmetricCocycle::with_entry(const GroupElement& a, const GroupElement& b,
                                              GroupElement v, bool keep_symmetric) const {
  if (!has_table()) throw std::invalid_argument("with_entry: cocycle has no table");
  SymmetricCocycle out = *this;
  const std::size_t n = base_.size();
  const std::size_t ia = base_.index_of(a);
  const std::size_t ib = base_.index_of(b);
  GroupElement r = fiber_.element(std::move(v.coords));
  out.table_[ia * n + ib] = r;
  if (keep_symmetric) out.table_[ib * n + ia] = r;
  return out;
}

std::vector<std::string> SymmetricCocycle::violations() const {
  std::vector<std::string> out;
  if (!has_table()) return out;
  constexpr std::size_t kMaxReported = 20;
  const std::size_t n = base_.size();
  const auto elems = base_.elements();
  std::vector<std::size_t> sum(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) sum[a * n + b] = base_.index_of(base_.add(elems[a], elems[b]));

  auto name = [&](std::size_t i) { return base_.format(elems[i]); };
  for (std::size_t b = 0; b < n && out.size() < kMaxReported; ++b)
    if (!fiber_.is_zero(table_[b]))
      out.push_back("not normalized: c(0, " + name(b) + ") = " + fiber_.format(table_[b]));
  for (std::size_t a = 0; a < n && out.size() < kMaxReported; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!(table_[a * n + b] == table_[b * n + a])) {
        out.push_back("not symmetric: c(" + name(a) + ", " + name(b) + ") != c(" + name(b) +
                      ", " + name(a) + ")");
        if (out.size() >= kMaxReported) break;
      }
  for (std::size_t a = 0; a < n && out.size() < kMaxReported; ++a)
    for (std::size_t b = 0; b < n && out.size() < kMaxReported; ++b)
      for (std::size_t d = 0; d < n; ++d) {
        GroupElement lhs = fiber_.add(table_[a * n + b], table_[sum[a * n + b] * n + d]);
        GroupElement rhs = fiber_.add(table_[b * n + d], table_[a * n + sum[b * n + d]]);
        if (!(lhs == rhs)) {
          out.push_back("cocycle identity fails at (" + name(a) + ", " + name(b) + ", " +
                        name(d) + ")");
          if (out.size() >= kMaxReported) break;
        }
      }
  return out;
}

// ---------------------------------------------------------------------------
// Constructions

SymmetricCocycle radical_cocycle(const FgAbGroup& g, const GroupElement& alpha, const Integer& n) {
  if (n < 1) throw std::invalid_argument("radical_cocycle: n must be positive");
  if (n > Integer(static_cast<unsigned long>(kMaxTableBase)))
    throw std::invalid_argument("radical_cocycle: n is too large for a table");
  GroupElement a = g.element(alpha.coords);
  FgAbGroup base = FgAbGroup::cyclic(n);
  const std::size_t m = n.get_ui();
  std::vector<GroupElement> table;
  if (m > 1) {
    table.reserve(m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) table.push_back(i + j >= m ? a : g.zero());
  }
  return SymmetricCocycle(std::move(base), g, std::move(table));
}

std::vector<GroupElement> cocycle_representatives(const SymmetricCocycle& c) {
  const FgAbGroup& base = c.base();
  std::vector<GroupElement> reps;
  for (std::size_t j = 0; j < base.torsion_rank(); ++j) {
    const GroupElement e = base.generator(j);
    GroupElement v = c.fiber().zero();
    GroupElement t = e;
    for (Integer k = 1; k < base.invariant_factors()[j]; ++k) {
      v = c.fiber().add(v, c.value(t, e));
      t = base.add(t, e);
    }
    reps.push_back(std::move(v));
  }
  return reps;
}

ExtClass cocycle_to_class(const SymmetricCocycle& c) {
  ExtGroup ext(c.base(), c.fiber());
  return ExtClass{c.base(), c.fiber(), ext.class_of(cocycle_representatives(c))};
}

SymmetricCocycle class_to_cocycle(const ExtClass& e) {
  const FgAbGroup& base = e.source;
  if (!base.is_finite() && base.torsion_rank() != 0)
    throw std::invalid_argument("class_to_cocycle: base must be finite or torsion-free");
  ExtGroup ext(e.source, e.fiber);
  const std::vector<GroupElement> reps = ext.representatives(e.coords);
  if (base.is_trivial() || !base.is_finite()) return SymmetricCocycle::zero(base, e.fiber);
  const auto elems = base.elements();
  std::vector<GroupElement> table;
  table.reserve(elems.size() * elems.size());
  for (const auto& x : elems)
    for (const auto& y : elems) {
      GroupElement v = e.fiber.zero();
      for (std::size_t j = 0; j < base.torsion_rank(); ++j) {
        const Integer carry = floor_div(x.coords[j] + y.coords[j], base.invariant_factors()[j]);
        v = e.fiber.add(v, e.fiber.scale(carry, reps[j]));
      }
      table.push_back(std::move(v));
    }
  return SymmetricCocycle(base, e.fiber, std::move(table));
}

SymmetricCocycle baer_sum(const SymmetricCocycle& c1, const SymmetricCocycle& c2) {
  if (!(c1.base() == c2.base()) || !(c1.fiber() == c2.fiber()))
    throw std::invalid_argument("baer_sum: cocycles have different base or fiber");
  std::vector<GroupElement> table(c1.table().size());
  for (std::size_t i = 0; i < table.size(); ++i)
    table[i] = c1.fiber().add(c1.table()[i], c2.table()[i]);
  return SymmetricCocycle(c1.base(), c1.fiber(), std::move(table));
}

SymmetricCocycle negate(const SymmetricCocycle& c) {
  std::vector<GroupElement> table(c.table());
  for (auto& v : table) v = c.fiber().negate(v);
  return SymmetricCocycle(c.base(), c.fiber(), std::move(table));
}

SymmetricCocycle pushforward(const SymmetricCocycle& c, const GroupHom& h) {
  if (!(h.source() == c.fiber()))
    throw std::invalid_argument("pushforward: hom source " + h.source().to_string() +
                                " is not the fiber " + c.fiber().to_string());
  std::vector<GroupElement> table;
  table.reserve(c.table().size());
  for (const auto& v : c.table()) table.push_back(h(v));
  return SymmetricCocycle(c.base(), h.target(), std::move(table));
}

SplitResult is_split(const SymmetricCocycle& c) {
  const FgAbGroup& base = c.base();
  const FgAbGroup& fiber = c.fiber();
  if (!base.is_finite()) return SplitResult{true, std::nullopt};
  if (base.is_trivial()) return SplitResult{true, std::vector<GroupElement>{fiber.zero()}};

  // A homomorphic section a -> (a, t(a)) exists iff a_j t_j = -v_j is
  // solvable for every base generator; then s = -t.
  const auto reps = cocycle_representatives(c);
  std::vector<Pair> gens;
  for (std::size_t j = 0; j < base.torsion_rank(); ++j) {
    auto t = solve_one(fiber, base.invariant_factors()[j], fiber.negate(reps[j]));
    if (!t) return SplitResult{false, std::nullopt};
    gens.push_back(Pair{base.generator(j), *t});
  }
  const auto elems = base.elements();
  std::vector<GroupElement> section;
  section.reserve(elems.size());
  for (const auto& a : elems) {
    Pair acc{base.zero(), fiber.zero()};
    for (std::size_t j = 0; j < gens.size(); ++j)
      for (Integer k = 0; k < a.coords[j]; ++k) acc = pair_add(c, acc, gens[j]);
    section.push_back(fiber.negate(acc.fiber));
  }
  const std::size_t n = elems.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = base.index_of(base.add(elems[a], elems[b]));
      GroupElement cob = fiber.sub(fiber.add(section[a], section[b]), section[ab]);
      if (!(cob == c.value(a, b)))
        throw std::logic_error("is_split: constructed section is not a splitting (invalid cocycle?)");
    }
  return SplitResult{true, std::move(section)};
}

namespace {

// The total group without its section table.
TotalGroup presentation(const SymmetricCocycle& c, const std::vector<GroupElement>& reps) {
  const FgAbGroup& base = c.base();
  const FgAbGroup& fiber = c.fiber();
  const std::size_t ng = fiber.num_generators();
  const std::size_t na = base.num_generators();
  const std::size_t ambient = ng + na;

  IntMatrix rel(ambient, fiber.torsion_rank() + base.torsion_rank());
  std::size_t col = 0;
  for (std::size_t i = 0; i < fiber.torsion_rank(); ++i) rel(i, col++) = fiber.invariant_factors()[i];
  for (std::size_t j = 0; j < base.torsion_rank(); ++j, ++col) {
    rel(ng + j, col) = base.invariant_factors()[j];
    for (std::size_t i = 0; i < ng; ++i) rel(i, col) = -reps[j].coords[i];
  }
  Cokernel pres = cokernel(rel, ambient);

  auto unit = [&](std::size_t k) {
    std::vector<Integer> v(ambient, Integer(0));
    v[k] = 1;
    return v;
  };
  std::vector<GroupElement> incl_images;
  for (std::size_t i = 0; i < ng; ++i) incl_images.push_back(pres.project(unit(i)));
  std::vector<GroupElement> lifts;
  for (std::size_t j = 0; j < na; ++j) lifts.push_back(pres.project(unit(ng + j)));

  std::vector<GroupElement> proj_images;
  for (std::size_t k = 0; k < pres.group.num_generators(); ++k) {
    const std::vector<Integer> amb = pres.from_canonical.col(k);
    proj_images.push_back(base.element(std::vector<Integer>(amb.begin() + static_cast<std::ptrdiff_t>(ng), amb.end())));
  }

  TotalGroup out{pres.group, GroupHom::from_images(fiber, pres.group, incl_images),
                 GroupHom::from_images(pres.group, base, proj_images), {}, std::move(lifts),
                 pres.from_canonical};
  return out;
}

std::optional<GroupHom> extend_from_reps(const GroupHom& g, const SymmetricCocycle& c, const TotalGroup& e,
                                         const std::vector<GroupElement>& reps,
                                         const std::vector<GroupElement>& values) {
  const FgAbGroup& base = c.base();
  const FgAbGroup& t = g.target();
  if (values.size() != base.num_generators())
    throw std::invalid_argument("extend_with_values: one value per base generator required");
  for (std::size_t j = 0; j < base.torsion_rank(); ++j)
    if (!(t.scale(base.invariant_factors()[j], values[j]) == g(reps[j]))) return std::nullopt;

  const std::size_t ng = c.fiber().num_generators();
  std::vector<GroupElement> images;
  for (std::size_t k = 0; k < e.group.num_generators(); ++k) {
    const std::vector<Integer> amb = e.expressions.col(k);
    GroupElement img = t.zero();
    for (std::size_t i = 0; i < ng; ++i)
      img = t.add(img, t.scale(amb[i], g.image_of_generator(i)));
    for (std::size_t j = 0; j < base.num_generators(); ++j)
      img = t.add(img, t.scale(amb[ng + j], values[j]));
    images.push_back(std::move(img));
  }
  return GroupHom::from_images(e.group, t, images);
}

}  // namespace

TotalGroup total_group(const SymmetricCocycle& c) {
  const FgAbGroup& base = c.base();
  TotalGroup out = presentation(c, cocycle_representatives(c));
  if (base.is_finite()) {
    for (const auto& a : base.elements()) {
      // sum_j a_j (e_j, 0) - (0, h) = (a, 0)
      GroupElement x = out.group.sub(out.group.zero(), out.inclusion(lift_correction(c, a)));
      for (std::size_t j = 0; j < base.num_generators(); ++j)
        x = out.group.add(x, out.group.scale(a.coords[j], out.generator_lifts[j]));
      out.section.push_back(std::move(x));
    }
  }
  return out;
}

std::optional<GroupHom> extend_with_values(const GroupHom& g, const SymmetricCocycle& c,
                                           const TotalGroup& e,
                                           const std::vector<GroupElement>& values) {
  return extend_from_reps(g, c, e, cocycle_representatives(c), values);
}

std::vector<GroupElement> solve_multiple(const FgAbGroup& t, const Integer& k, const GroupElement& w) {
  auto base_solution = solve_one(t, k, w);
  if (!base_solution) return {};
  // Homogeneous solutions: k y = 0, coordinatewise.
  std::vector<std::vector<Integer>> choices(t.num_generators());
  for (std::size_t i = 0; i < t.num_generators(); ++i) {
    const Integer e = t.generator_order(i);
    if (e == 0) {
      if (k == 0) throw std::domain_error("solve_multiple: infinitely many solutions");
      choices[i] = {Integer(0)};
      continue;
    }
    const Integer g = gcd(k, e);
    const Integer step = e / g;
    for (Integer s = 0; s < g; ++s) choices[i].push_back(s * step);
  }
  std::vector<GroupElement> out;
  std::vector<std::size_t> pos(choices.size(), 0);
  for (;;) {
    std::vector<Integer> y(base_solution->coords);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += choices[i][pos[i]];
    out.push_back(t.element(std::move(y)));
    std::size_t i = 0;
    while (i < pos.size() && ++pos[i] == choices[i].size()) pos[i++] = 0;
    if (i == pos.size()) break;
  }
  return out;
}

std::vector<GroupHom> extend_hom(const GroupHom& g, const SymmetricCocycle& c) {
  if (!(g.source() == c.fiber()))
    throw std::invalid_argument("extend_hom: hom source " + g.source().to_string() +
                                " is not the fiber " + c.fiber().to_string());
  const FgAbGroup& base = c.base();
  const FgAbGroup& t = g.target();
  const auto reps = cocycle_representatives(c);
  const TotalGroup e = presentation(c, reps);

  std::vector<std::vector<GroupElement>> choices;
  for (std::size_t j = 0; j < base.num_generators(); ++j) {
    if (base.is_free_generator(j)) {
      if (!t.is_finite())
        throw std::domain_error("extend_hom: free base generator with infinite target");
      choices.push_back(t.elements());
    } else {
      choices.push_back(solve_multiple(t, base.invariant_factors()[j], g(reps[j])));
    }
    if (choices.back().empty()) return {};
  }
  // Image of total-group generator k: fixed[k] + sum_j lift_coeff[k][j] * value_j.
  const std::size_t ng = c.fiber().num_generators();
  const std::size_t nk = e.group.num_generators();
  std::vector<GroupElement> fixed;
  std::vector<std::vector<Integer>> lift_coeff;
  for (std::size_t k = 0; k < nk; ++k) {
    const std::vector<Integer> amb = e.expressions.col(k);
    std::vector<Integer> v(t.num_generators());
    for (std::size_t i = 0; i < ng; ++i) {
      const GroupElement gi = g.image_of_generator(i);
      for (std::size_t r = 0; r < v.size(); ++r) v[r] += amb[i] * gi.coords[r];
    }
    fixed.push_back(GroupElement{std::move(v)});
    lift_coeff.emplace_back(amb.begin() + static_cast<std::ptrdiff_t>(ng), amb.end());
  }

  std::vector<GroupHom> out;
  std::vector<std::size_t> pos(choices.size(), 0);
  for (;;) {
    // The chosen values solve a_j v_j = g(rep_j), so the images respect every relation.
    IntMatrix m(t.num_generators(), nk);
    for (std::size_t k = 0; k < nk; ++k)
      for (std::size_t r = 0; r < t.num_generators(); ++r) {
        Integer x = fixed[k].coords[r];
        for (std::size_t j = 0; j < choices.size(); ++j) x += lift_coeff[k][j] * choices[j][pos[j]].coords[r];
        m(r, k) = std::move(x);
      }
    out.push_back(GroupHom::unchecked(e.group, t, std::move(m)));
    std::size_t j = 0;
    while (j < pos.size() && ++pos[j] == choices[j].size()) pos[j++] = 0;
    if (j == pos.size()) break;
  }
  return out;
}

}  // namespace radix

#include "radix/abelian.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace radix {

// ---------------------------------------------------------------------------
// FgAbGroup

FgAbGroup::FgAbGroup(std::size_t free_rank, std::vector<Integer> invariant_factors,
                     std::vector<std::string> labels)
    : free_rank_(free_rank), invariants_(std::move(invariant_factors)), labels_(std::move(labels)) {
  for (std::size_t i = 0; i < invariants_.size(); ++i) {
    if (invariants_[i] < 2)
      throw std::invalid_argument("invariant factor " + invariants_[i].get_str() + " is < 2");
    if (i > 0 && mpz_divisible_p(invariants_[i].get_mpz_t(), invariants_[i - 1].get_mpz_t()) == 0)
      throw std::invalid_argument("invariant factors " + invariants_[i - 1].get_str() + ", " +
                                  invariants_[i].get_str() + " break the divisibility chain");
  }
  if (!labels_.empty() && labels_.size() != num_generators())
    throw std::invalid_argument("label count does not match generator count");
}

FgAbGroup FgAbGroup::cyclic(const Integer& n) {
  if (n < 0) throw std::invalid_argument("cyclic: negative order");
  if (n == 0) return free(1);
  if (n == 1) return trivial();
  return FgAbGroup(0, {n});
}

Integer FgAbGroup::generator_order(std::size_t i) const {
  if (i >= num_generators()) throw std::out_of_range("generator index out of range");
  return i < invariants_.size() ? invariants_[i] : Integer(0);
}

std::string FgAbGroup::label(std::size_t i) const {
  if (i < labels_.size() && !labels_[i].empty()) return labels_[i];
  return "e" + std::to_string(i);
}

FgAbGroup FgAbGroup::with_labels(std::vector<std::string> labels) const {
  return FgAbGroup(free_rank_, invariants_, std::move(labels));
}

Integer FgAbGroup::order() const {
  if (!is_finite()) throw std::domain_error("order of an infinite group " + to_string());
  Integer n = 1;
  for (const auto& d : invariants_) n *= d;
  return n;
}

Integer FgAbGroup::torsion_exponent() const {
  return invariants_.empty() ? Integer(1) : invariants_.back();
}

GroupElement FgAbGroup::zero() const {
  return GroupElement{std::vector<Integer>(num_generators(), Integer(0))};
}

GroupElement FgAbGroup::generator(std::size_t i) const {
  GroupElement e = zero();
  e.coords.at(i) = 1;
  return element(std::move(e.coords));
}

GroupElement FgAbGroup::element(std::vector<Integer> coords) const {
  if (coords.size() != num_generators())
    throw std::invalid_argument("element has " + std::to_string(coords.size()) +
                                " coordinates, group " + to_string() + " has " +
                                std::to_string(num_generators()) + " generators");
  for (std::size_t i = 0; i < invariants_.size(); ++i) coords[i] = mod_floor(coords[i], invariants_[i]);
  return GroupElement{std::move(coords)};
}

GroupElement FgAbGroup::element(std::initializer_list<long> coords) const {
  std::vector<Integer> v;
  v.reserve(coords.size());
  for (long c : coords) v.emplace_back(c);
  return element(std::move(v));
}

bool FgAbGroup::contains(const GroupElement& x) const {
  if (x.coords.size() != num_generators()) return false;
  for (std::size_t i = 0; i < invariants_.size(); ++i)
    if (x.coords[i] < 0 || x.coords[i] >= invariants_[i]) return false;
  return true;
}

GroupElement FgAbGroup::add(const GroupElement& a, const GroupElement& b) const {
  if (a.coords.size() != num_generators() || b.coords.size() != num_generators())
    throw std::invalid_argument("add: element does not belong to " + to_string());
  std::vector<Integer> c(num_generators());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] + b.coords[i];
  return element(std::move(c));
}

GroupElement FgAbGroup::sub(const GroupElement& a, const GroupElement& b) const {
  return add(a, negate(b));
}

GroupElement FgAbGroup::negate(const GroupElement& a) const { return scale(-1, a); }

GroupElement FgAbGroup::scale(const Integer& k, const GroupElement& a) const {
  if (a.coords.size() != num_generators())
    throw std::invalid_argument("scale: element does not belong to " + to_string());
  std::vector<Integer> c(a.coords);
  for (auto& x : c) x *= k;
  return element(std::move(c));
}

bool FgAbGroup::is_zero(const GroupElement& a) const {
  return element(a.coords) == zero();
}

Integer FgAbGroup::element_order(const GroupElement& a) const {
  GroupElement r = element(a.coords);
  for (std::size_t i = invariants_.size(); i < num_generators(); ++i)
    if (r.coords[i] != 0) return 0;
  Integer ord = 1;
  for (std::size_t i = 0; i < invariants_.size(); ++i)
    ord = lcm(ord, invariants_[i] / gcd(invariants_[i], r.coords[i]));
  return ord;
}

std::size_t FgAbGroup::size() const {
  Integer n = order();
  if (!n.fits_ulong_p() || n > Integer(1UL << 40))
    throw std::domain_error("group " + to_string() + " is too large to enumerate");
  return n.get_ui();
}

std::size_t FgAbGroup::index_of(const GroupElement& a) const {
  if (!is_finite()) throw std::domain_error("index_of on infinite group " + to_string());
  GroupElement r = element(a.coords);
  std::size_t index = 0;
  std::size_t radix = 1;
  for (std::size_t i = 0; i < invariants_.size(); ++i) {
    index += r.coords[i].get_ui() * radix;
    radix *= invariants_[i].get_ui();
  }
  return index;
}

GroupElement FgAbGroup::element_at(std::size_t index) const {
  if (!is_finite()) throw std::domain_error("element_at on infinite group " + to_string());
  GroupElement e = zero();
  for (std::size_t i = 0; i < invariants_.size(); ++i) {
    const std::size_t d = invariants_[i].get_ui();
    e.coords[i] = static_cast<unsigned long>(index % d);
    index /= d;
  }
  return e;
}

std::vector<GroupElement> FgAbGroup::elements() const {
  const std::size_t n = size();
  std::vector<GroupElement> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(element_at(i));
  return out;
}

std::string FgAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::vector<std::string> parts;
  if (free_rank_ == 1) parts.emplace_back("Z");
  if (free_rank_ > 1) parts.push_back("Z^" + std::to_string(free_rank_));
  for (const auto& d : invariants_) parts.push_back("Z/" + d.get_str());
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " + " : "") + parts[i];
  return s;
}

std::string FgAbGroup::format(const GroupElement& a) const {
  GroupElement r = element(a.coords);
  std::string s;
  for (std::size_t i = 0; i < r.coords.size(); ++i) {
    const Integer& c = r.coords[i];
    if (c == 0) continue;
    std::string term;
    if (c == 1) term = label(i);
    else if (c == -1) term = "-" + label(i);
    else term = c.get_str() + "*" + label(i);
    if (s.empty()) s = term;
    else if (term[0] == '-') s += " - " + term.substr(1);
    else s += " + " + term;
  }
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// GroupHom

namespace {

IntMatrix reduce_columns(const FgAbGroup& target, IntMatrix m) {
  const auto& inv = target.invariant_factors();
  for (std::size_t r = 0; r < inv.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = mod_floor(m(r, c), inv[r]);
  return m;
}

void check_shape(const FgAbGroup& source, const FgAbGroup& target, const IntMatrix& m) {
  if (m.rows() != target.num_generators() || m.cols() != source.num_generators())
    throw std::invalid_argument("hom matrix is " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + ", expected " +
                                std::to_string(target.num_generators()) + "x" +
                                std::to_string(source.num_generators()));
}

}  // namespace

GroupHom GroupHom::unchecked(FgAbGroup source, FgAbGroup target, IntMatrix matrix) {
  check_shape(source, target, matrix);
  GroupHom h;
  h.matrix_ = reduce_columns(target, std::move(matrix));
  h.source_ = std::move(source);
  h.target_ = std::move(target);
  return h;
}

GroupHom::GroupHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix) {
  *this = unchecked(std::move(source), std::move(target), std::move(matrix));
  auto bad = violations();
  if (!bad.empty()) throw std::invalid_argument("homomorphism not well defined: " + bad.front());
}

GroupHom GroupHom::from_images(FgAbGroup source, FgAbGroup target,
                               std::span<const GroupElement> images) {
  if (images.size() != source.num_generators())
    throw std::invalid_argument("from_images: one image per source generator required");
  IntMatrix m(target.num_generators(), source.num_generators());
  for (std::size_t j = 0; j < images.size(); ++j) {
    if (images[j].coords.size() != target.num_generators())
      throw std::invalid_argument("from_images: image has wrong length");
    for (std::size_t i = 0; i < target.num_generators(); ++i) m(i, j) = images[j].coords[i];
  }
  return GroupHom(std::move(source), std::move(target), std::move(m));
}

GroupHom GroupHom::zero(FgAbGroup source, FgAbGroup target) {
  IntMatrix m(target.num_generators(), source.num_generators());
  return GroupHom(std::move(source), std::move(target), std::move(m));
}

GroupHom GroupHom::identity(const FgAbGroup& g) {
  return GroupHom(g, g, IntMatrix::identity(g.num_generators()));
}

std::vector<std::string> GroupHom::violations() const {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < source_.torsion_rank(); ++j) {
    const Integer& d = source_.invariant_factors()[j];
    GroupElement img = target_.scale(d, target_.element(matrix_.col(j)));
    if (!target_.is_zero(img))
      out.push_back("relation " + d.get_str() + "*" + source_.label(j) + " = 0 maps to " +
                    target_.format(img));
  }
  return out;
}

GroupElement GroupHom::operator()(const GroupElement& x) const {
  return target_.element(matrix_.apply(source_.element(x.coords).coords));
}

GroupElement GroupHom::image_of_generator(std::size_t j) const {
  return target_.element(matrix_.col(j));
}

GroupHom GroupHom::after(const GroupHom& inner) const {
  if (!(inner.target_ == source_)) throw std::invalid_argument("composition: groups do not match");
  return GroupHom(inner.source_, target_, matrix_ * inner.matrix_);
}

GroupHom GroupHom::plus(const GroupHom& other) const {
  if (!(source_ == other.source_ && target_ == other.target_))
    throw std::invalid_argument("sum of homomorphisms with different source or target");
  std::vector<Integer> e(matrix_.entries());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.matrix_.entries()[i];
  return GroupHom(source_, target_, IntMatrix(matrix_.rows(), matrix_.cols(), std::move(e)));
}

GroupHom GroupHom::scaled(const Integer& k) const {
  std::vector<Integer> e(matrix_.entries());
  for (auto& x : e) x *= k;
  return GroupHom(source_, target_, IntMatrix(matrix_.rows(), matrix_.cols(), std::move(e)));
}

bool GroupHom::is_zero() const {
  for (std::size_t j = 0; j < source_.num_generators(); ++j)
    if (!target_.is_zero(image_of_generator(j))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Presentations

GroupElement Cokernel::project(std::span<const Integer> ambient) const {
  return group.element(to_canonical.apply(ambient));
}

std::vector<Integer> Cokernel::lift(const GroupElement& x) const {
  return from_canonical.apply(group.element(x.coords).coords);
}

Cokernel cokernel(const IntMatrix& relations, std::size_t ambient_rank) {
  if (relations.rows() != ambient_rank)
    throw std::invalid_argument("presentation has " + std::to_string(relations.rows()) +
                                " rows for an ambient group of rank " +
                                std::to_string(ambient_rank));
  SmithForm snf = smith_normal_form(relations);
  const std::size_t limit = std::min(relations.rows(), relations.cols());
  std::vector<std::size_t> kept;
  std::vector<Integer> invariants;
  std::size_t free_rank = 0;
  for (std::size_t i = 0; i < ambient_rank; ++i) {
    const Integer d = i < limit ? snf.diagonal(i, i) : Integer(0);
    if (d == 1) continue;
    kept.push_back(i);
    if (d == 0) ++free_rank;
    else invariants.push_back(d);
  }
  return Cokernel{FgAbGroup(free_rank, std::move(invariants)), snf.left.select_rows(kept),
                  snf.left_inverse.select_cols(kept)};
}

FgAbGroup canonical_form(const IntMatrix& presentation, std::size_t ambient_rank) {
  return cokernel(presentation, ambient_rank).group;
}

Cokernel cyclic_sum(std::span<const Integer> moduli) {
  for (const auto& m : moduli)
    if (m < 0) throw std::invalid_argument("cyclic_sum: negative modulus");
  return cokernel(IntMatrix::diagonal(moduli), moduli.size());
}

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
  std::vector<Integer> moduli;
  for (std::size_t i = 0; i < a.num_generators(); ++i) moduli.push_back(a.generator_order(i));
  for (std::size_t i = 0; i < b.num_generators(); ++i) moduli.push_back(b.generator_order(i));
  return cyclic_sum(moduli).group;
}

// ---------------------------------------------------------------------------
// Hom

HomGroup::HomGroup(FgAbGroup source, FgAbGroup target)
    : source_(std::move(source)), target_(std::move(target)) {
  const std::size_t ns = source_.num_generators();
  const std::size_t nt = target_.num_generators();
  std::vector<Integer> moduli;
  for (std::size_t j = 0; j < ns; ++j) {
    const Integer a = source_.generator_order(j);
    for (std::size_t i = 0; i < nt; ++i) {
      const Integer b = target_.generator_order(i);
      if (a != 0 && b != 0) {
        const Integer g = gcd(a, b);
        moduli.push_back(g);
        unit_.push_back(b / g);
      } else if (a != 0) {
        moduli.emplace_back(1);  // torsion into Z
        unit_.emplace_back(0);
      } else {
        moduli.push_back(b);
        unit_.emplace_back(1);
      }
    }
  }
  presentation_ = cyclic_sum(moduli);
  for (std::size_t k = 0; k < presentation_.group.num_generators(); ++k)
    basis_.push_back(hom_at(presentation_.group.generator(k)));
}

GroupElement HomGroup::coordinates(const GroupHom& h) const {
  if (!(h.source() == source_ && h.target() == target_))
    throw std::invalid_argument("coordinates: homomorphism is not in " + group().to_string());
  const std::size_t nt = target_.num_generators();
  std::vector<Integer> elementary(unit_.size(), Integer(0));
  for (std::size_t j = 0; j < source_.num_generators(); ++j)
    for (std::size_t i = 0; i < nt; ++i) {
      const std::size_t idx = j * nt + i;
      if (unit_[idx] == 0) continue;
      Integer v = h.matrix()(i, j);
      if (mpz_divisible_p(v.get_mpz_t(), unit_[idx].get_mpz_t()) == 0)
        throw std::invalid_argument("coordinates: matrix entry is not a multiple of the generator");
      elementary[idx] = v / unit_[idx];
    }
  return presentation_.project(elementary);
}

GroupHom HomGroup::hom_at(const GroupElement& coords) const {
  const std::vector<Integer> elementary = presentation_.lift(coords);
  const std::size_t nt = target_.num_generators();
  IntMatrix m(nt, source_.num_generators());
  for (std::size_t j = 0; j < source_.num_generators(); ++j)
    for (std::size_t i = 0; i < nt; ++i) m(i, j) = elementary[j * nt + i] * unit_[j * nt + i];
  return GroupHom(source_, target_, std::move(m));
}

HomGroup hom_group(const FgAbGroup& a, const FgAbGroup& b) { return HomGroup(a, b); }

// ---------------------------------------------------------------------------
// Ext

ExtGroup::ExtGroup(FgAbGroup source, FgAbGroup target)
    : source_(std::move(source)), target_(std::move(target)) {
  std::vector<Integer> moduli;
  for (std::size_t j = 0; j < source_.torsion_rank(); ++j) {
    const Integer& a = source_.invariant_factors()[j];
    for (std::size_t i = 0; i < target_.num_generators(); ++i) {
      const Integer b = target_.generator_order(i);
      moduli.push_back(b == 0 ? a : gcd(a, b));
    }
  }
  presentation_ = cyclic_sum(moduli);
}

GroupElement ExtGroup::class_of(std::span<const GroupElement> representatives) const {
  if (representatives.size() != source_.torsion_rank())
    throw std::invalid_argument("class_of: expected one representative per torsion generator");
  const std::size_t nt = target_.num_generators();
  std::vector<Integer> elementary(source_.torsion_rank() * nt);
  for (std::size_t j = 0; j < representatives.size(); ++j) {
    if (representatives[j].coords.size() != nt)
      throw std::invalid_argument("class_of: representative outside " + target_.to_string());
    for (std::size_t i = 0; i < nt; ++i) elementary[j * nt + i] = representatives[j].coords[i];
  }
  return presentation_.project(elementary);
}

std::vector<GroupElement> ExtGroup::representatives(const GroupElement& coords) const {
  if (coords.coords.size() != group().num_generators())
    throw std::invalid_argument("representatives: coordinates outside " + group().to_string());
  const std::vector<Integer> elementary = presentation_.lift(coords);
  const std::size_t nt = target_.num_generators();
  std::vector<GroupElement> reps;
  for (std::size_t j = 0; j < source_.torsion_rank(); ++j) {
    std::vector<Integer> v(elementary.begin() + static_cast<std::ptrdiff_t>(j * nt),
                           elementary.begin() + static_cast<std::ptrdiff_t>((j + 1) * nt));
    reps.push_back(target_.element(std::move(v)));
  }
  return reps;
}

ExtGroup ext_group(const FgAbGroup& a, const FgAbGroup& b) { return ExtGroup(a, b); }

bool ExtClass::is_zero() const { return ambient().is_zero(coords); }

// ---------------------------------------------------------------------------
// Torsion, quotients, preimages

SubgroupInclusion torsion_part(const FgAbGroup& b, const Integer& n) {
  if (n < 1) throw std::invalid_argument("torsion_part: n must be positive");
  std::vector<Integer> factors;
  std::vector<std::string> labels;
  std::vector<GroupElement> images;
  for (std::size_t i = 0; i < b.torsion_rank(); ++i) {
    const Integer& d = b.invariant_factors()[i];
    const Integer g = gcd(n, d);
    if (g < 2) continue;
    factors.push_back(g);
    const Integer step = d / g;
    labels.push_back(step == 1 ? b.label(i) : step.get_str() + "*" + b.label(i));
    images.push_back(b.scale(step, b.generator(i)));
  }
  FgAbGroup sub(0, std::move(factors), std::move(labels));
  GroupHom incl = GroupHom::from_images(sub, b, images);
  return {std::move(sub), std::move(incl)};
}

QuotientProjection quotient_mod(const FgAbGroup& b, const Integer& n) {
  if (n < 1) throw std::invalid_argument("quotient_mod: n must be positive");
  const std::size_t nb = b.num_generators();
  IntMatrix rel(nb, b.torsion_rank() + nb);
  for (std::size_t i = 0; i < b.torsion_rank(); ++i) rel(i, i) = b.invariant_factors()[i];
  for (std::size_t i = 0; i < nb; ++i) rel(i, b.torsion_rank() + i) = n;
  Cokernel q = cokernel(rel, nb);
  std::vector<GroupElement> images;
  for (std::size_t i = 0; i < nb; ++i) images.push_back(q.project(b.generator(i).coords));
  GroupHom proj = GroupHom::from_images(b, q.group, images);
  return {q.group, std::move(proj)};
}

std::optional<GroupElement> preimage(const GroupHom& h, const GroupElement& y) {
  const FgAbGroup& t = h.target();
  IntMatrix rel(t.num_generators(), t.torsion_rank());
  for (std::size_t i = 0; i < t.torsion_rank(); ++i) rel(i, i) = t.invariant_factors()[i];
  IntMatrix system = h.matrix().concat_cols(rel);
  auto sol = solve_integer_system(system, t.element(y.coords).coords);
  if (!sol) return std::nullopt;
  sol->resize(h.source().num_generators());
  return h.source().element(std::move(*sol));
}

GroupHom corestrict(const GroupHom& h, const GroupHom& inclusion) {
  if (!(h.target() == inclusion.target()))
    throw std::invalid_argument("corestrict: targets differ");
  std::vector<GroupElement> images;
  for (std::size_t j = 0; j < h.source().num_generators(); ++j) {
    GroupElement y = h.image_of_generator(j);
    auto x = preimage(inclusion, y);
    if (!x)
      throw std::invalid_argument("corestrict: image " + h.target().format(y) + " of " +
                                  h.source().label(j) + " is outside the subgroup");
    images.push_back(*x);
  }
  return GroupHom::from_images(h.source(), inclusion.source(), images);
}

GroupHom into_torsion(const GroupHom& h, const Integer& n) {
  return corestrict(h, torsion_part(h.target(), n).inclusion);
}

// ---------------------------------------------------------------------------
// Eilenberg-Mac Lane mapping groups

MappingGroupReport em_maps(const FgAbGroup& a, const FgAbGroup& b, int k) {
  MappingGroupReport r;
  r.k = k;
  switch (k) {
    case 0: {
      FgAbGroup h = hom_group(a, b).group();
      r.terms.emplace_back("Hom(A,B)", h);
      r.group = h;
      break;
    }
    case 1: {
      FgAbGroup e = ext_group(a, b).group();
      r.terms.emplace_back("Ext(A,B)", e);
      r.group = e;
      break;
    }
    case 2: {
      FgAbGroup h = hom_group(a, torsion_part(b, 2).group).group();
      r.terms.emplace_back("Hom(A,B[2])", h);
      r.group = h;
      break;
    }
    case 3: {
      FgAbGroup sub = ext_group(a, torsion_part(b, 2).group).group();
      FgAbGroup quo = hom_group(a, quotient_mod(b, 2).group).group();
      r.terms.emplace_back("Ext(A,B[2])", sub);
      r.terms.emplace_back("Hom(A,B/2)", quo);
      if (sub.is_trivial()) r.group = quo;
      else if (quo.is_trivial()) r.group = sub;
      break;
    }
    default:
      throw std::invalid_argument("em_maps: k must be 0, 1, 2 or 3");
  }
  return r;
}

ExtClass yoneda_pair(const GroupHom& g, const ExtClass& e) {
  if (!(g.source() == e.fiber))
    throw std::invalid_argument("yoneda_pair: hom source " + g.source().to_string() +
                                " does not match the extension fiber " + e.fiber.to_string());
  ExtGroup from(e.source, e.fiber);
  if (e.coords.coords.size() != from.group().num_generators())
    throw std::invalid_argument("yoneda_pair: class coordinates are not in Ext(" +
                                e.source.to_string() + ", " + e.fiber.to_string() + ")");
  std::vector<GroupElement> reps = from.representatives(e.coords);
  for (auto& v : reps) v = g(v);
  ExtGroup to(e.source, g.target());
  return ExtClass{e.source, g.target(), to.class_of(reps)};
}

PushoutResult pushout(const GroupHom& f, const GroupHom& g) {
  if (!(f.source() == g.source())) throw std::invalid_argument("pushout: sources differ");
  const FgAbGroup& a = f.target();
  const FgAbGroup& b = g.target();
  const FgAbGroup& c = f.source();
  const std::size_t na = a.num_generators();
  const std::size_t nb = b.num_generators();
  const std::size_t ncols = a.torsion_rank() + b.torsion_rank() + c.num_generators();
  IntMatrix rel(na + nb, ncols);
  std::size_t col = 0;
  for (std::size_t i = 0; i < a.torsion_rank(); ++i) rel(i, col++) = a.invariant_factors()[i];
  for (std::size_t i = 0; i < b.torsion_rank(); ++i) rel(na + i, col++) = b.invariant_factors()[i];
  for (std::size_t j = 0; j < c.num_generators(); ++j, ++col) {
    for (std::size_t i = 0; i < na; ++i) rel(i, col) = f.matrix()(i, j);
    for (std::size_t i = 0; i < nb; ++i) rel(na + i, col) = -g.matrix()(i, j);
  }
  Cokernel q = cokernel(rel, na + nb);
  std::vector<GroupElement> left, right;
  for (std::size_t i = 0; i < na; ++i) {
    std::vector<Integer> v(na + nb, Integer(0));
    v[i] = 1;
    left.push_back(q.project(v));
  }
  for (std::size_t i = 0; i < nb; ++i) {
    std::vector<Integer> v(na + nb, Integer(0));
    v[na + i] = 1;
    right.push_back(q.project(v));
  }
  return {q.group, GroupHom::from_images(a, q.group, left), GroupHom::from_images(b, q.group, right)};
}

}  // namespace radix

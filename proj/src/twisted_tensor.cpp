#include "radix/twisted_tensor.hpp"

#include "radix/radicals.hpp"

#include <stdexcept>
#include <utility>

namespace radix {

namespace {

constexpr std::size_t kMaxReported = 20;

void report(CoherenceReport& r, std::string msg) {
  r.passed = false;
  if (r.violations.size() < kMaxReported) r.violations.push_back(std::move(msg));
}

std::string tensor_label(const std::vector<std::string>& factors) {
  std::string s;
  for (const auto& f : factors) {
    if (f == "1") continue;
    s += (s.empty() ? "" : "⊗") + f;
  }
  return s.empty() ? "1" : s;
}

void check_gradings(const SymmetricCocycle& c, const SignForm& eps, const FgAbGroup& grading) {
  if (!grading.is_finite()) throw std::invalid_argument("coherence checks need a finite grading");
  if (!(c.base() == grading))
    throw std::invalid_argument("cocycle base " + c.base().to_string() + " is not the grading " +
                                grading.to_string());
  if (!(eps.grading() == grading))
    throw std::invalid_argument("sign form grading " + eps.grading().to_string() +
                                " is not the grading " + grading.to_string());
}

}  // namespace

// ---------------------------------------------------------------------------
// GradedModule

GradedModule::GradedModule(FgAbGroup grading, std::vector<Component> components)
    : grading_(std::move(grading)), components_(std::move(components)) {
  if (!grading_.is_finite())
    throw std::invalid_argument("graded modules need a finite grading, got " + grading_.to_string());
  if (components_.size() != grading_.size())
    throw std::invalid_argument("graded module over " + grading_.to_string() + " needs " +
                                std::to_string(grading_.size()) + " components, got " +
                                std::to_string(components_.size()));
}

GradedModule GradedModule::zero(FgAbGroup grading, const std::string& prefix) {
  std::vector<Component> comps;
  for (std::size_t i = 0; i < grading.size(); ++i) comps.push_back({0, prefix + std::to_string(i)});
  return GradedModule(std::move(grading), std::move(comps));
}

GradedModule GradedModule::unit(FgAbGroup grading) {
  GradedModule m = zero(std::move(grading), "0_");
  for (auto& c : m.components_) c.label = "0";
  m.components_[0] = {1, "1"};
  return m;
}

GradedModule GradedModule::with_component(std::size_t degree, Component c) const {
  GradedModule out = *this;
  out.components_.at(degree) = std::move(c);
  return out;
}

// ---------------------------------------------------------------------------
// SignForm

SignForm SignForm::from_parity(const GroupHom& chi) {
  if (!(chi.target() == FgAbGroup::cyclic(2)))
    throw std::invalid_argument("parity character must take values in Z/2, got " +
                                chi.target().to_string());
  SignForm s;
  s.grading_ = chi.source();
  s.values_ = chi.target();
  s.chi_ = chi;
  return s;
}

SignForm SignForm::from_table(FgAbGroup grading, FgAbGroup values, std::vector<GroupElement> table,
                              std::optional<std::vector<GroupElement>> diagonal) {
  if (!grading.is_finite())
    throw std::invalid_argument("sign table needs a finite grading, got " + grading.to_string());
  const std::size_t n = grading.size();
  if (table.size() != n * n)
    throw std::invalid_argument("sign table has " + std::to_string(table.size()) +
                                " entries, expected " + std::to_string(n * n));
  for (auto& v : table) v = values.element(std::move(v.coords));
  if (diagonal) {
    if (diagonal->size() != n)
      throw std::invalid_argument("sign diagonal has " + std::to_string(diagonal->size()) +
                                  " entries, expected " + std::to_string(n));
    for (auto& v : *diagonal) v = values.element(std::move(v.coords));
  }
  SignForm s;
  s.grading_ = std::move(grading);
  s.values_ = std::move(values);
  s.table_ = std::move(table);
  s.diagonal_ = std::move(diagonal);
  return s;
}

GroupElement SignForm::value(const GroupElement& a, const GroupElement& b) const {
  if (chi_) {
    const Integer x = chi_->operator()(grading_.element(a.coords)).coords[0];
    const Integer y = chi_->operator()(grading_.element(b.coords)).coords[0];
    return values_.element({x * y});
  }
  const std::size_t n = grading_.size();
  return table_.at(grading_.index_of(grading_.element(a.coords)) * n +
                   grading_.index_of(grading_.element(b.coords)));
}

int SignForm::sign(const GroupElement& a, const GroupElement& b) const {
  if (!(values_ == FgAbGroup::cyclic(2)) && !values_.is_trivial())
    throw std::domain_error("signs need values in Z/2, got " + values_.to_string());
  return values_.is_zero(value(a, b)) ? 1 : -1;
}

std::string SignForm::sign_label(const GroupElement& v) const {
  if (values_ == FgAbGroup::cyclic(2) || values_.is_trivial())
    return values_.is_zero(v) ? "+1" : "-1";
  return values_.format(v);
}

std::optional<GroupElement> SignForm::diagonal(const GroupElement& a) const {
  if (chi_) return chi_->operator()(grading_.element(a.coords));
  if (diagonal_) return diagonal_->at(grading_.index_of(grading_.element(a.coords)));
  return std::nullopt;
}

SignForm sign_form_from_parity(const GroupHom& chi) { return SignForm::from_parity(chi); }

GroupElement braiding_sign(const SignForm& eps, const GroupElement& p, const GroupElement& q) {
  return eps.value(p, q);
}

// ---------------------------------------------------------------------------
// Tensor products

TwistedTensorResult twisted_tensor(const GradedModule& m, const GradedModule& n,
                                   const SymmetricCocycle& c, const SignForm& eps) {
  const FgAbGroup& b = m.grading();
  if (!(n.grading() == b) || !(c.base() == b) || !(eps.grading() == b))
    throw std::invalid_argument("twisted_tensor: modules, cocycle and sign form must share the grading");
  const std::size_t size = b.size();
  const auto elems = b.elements();

  TwistedTensorResult out;
  std::vector<std::vector<TensorSummand>> by_degree(size);
  for (std::size_t p = 0; p < size; ++p)
    for (std::size_t q = 0; q < size; ++q) {
      const std::size_t rank = m.at(p).rank * n.at(q).rank;
      if (rank == 0) continue;
      TensorSummand s;
      s.left = p;
      s.right = q;
      s.degree = b.index_of(b.add(elems[p], elems[q]));
      s.rank = rank;
      s.twist = c.value(p, q);
      s.twist_label = render_unit(c.fiber(), s.twist);
      s.sign = eps.value(elems[p], elems[q]);
      s.sign_label = eps.sign_label(s.sign);
      s.label = tensor_label({s.twist_label, m.at(p).label, n.at(q).label});
      by_degree[s.degree].push_back(std::move(s));
    }

  std::vector<GradedModule::Component> comps(size);
  for (std::size_t d = 0; d < size; ++d) {
    std::string label;
    for (auto& s : by_degree[d]) {
      comps[d].rank += s.rank;
      label += (label.empty() ? "" : " ⊕ ") + s.label;
      out.summands.push_back(std::move(s));
    }
    comps[d].label = label.empty() ? "0" : label;
  }
  out.module = GradedModule(b, std::move(comps));
  return out;
}

// ---------------------------------------------------------------------------
// Coherence

CoherenceReport check_associativity(const SymmetricCocycle& c, const SignForm& eps,
                                    const FgAbGroup& grading) {
  check_gradings(c, eps, grading);
  CoherenceReport r;
  const FgAbGroup& f = c.fiber();
  const auto elems = grading.elements();
  const std::size_t size = elems.size();
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b)
      for (std::size_t d = 0; d < size; ++d) {
        const std::size_t ab = grading.index_of(grading.add(elems[a], elems[b]));
        const std::size_t bd = grading.index_of(grading.add(elems[b], elems[d]));
        const GroupElement left = f.add(c.value(a, b), c.value(ab, d));
        const GroupElement right = f.add(c.value(b, d), c.value(a, bd));
        if (!(left == right))
          report(r, "associativity fails at (" + grading.format(elems[a]) + ", " +
                        grading.format(elems[b]) + ", " + grading.format(elems[d]) + "): " +
                        render_unit(f, left) + " vs " + render_unit(f, right));
      }
  return r;
}

CoherenceReport check_symmetry(const SymmetricCocycle& c, const SignForm& eps,
                               const FgAbGroup& grading) {
  check_gradings(c, eps, grading);
  CoherenceReport r;
  const FgAbGroup& v = eps.values();
  const auto elems = grading.elements();
  const std::size_t size = elems.size();
  auto name = [&](std::size_t i) { return grading.format(elems[i]); };

  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = a + 1; b < size; ++b)
      if (!(c.value(a, b) == c.value(b, a)))
        report(r, "cocycle not symmetric at (" + name(a) + ", " + name(b) + ")");

  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) {
      const GroupElement e = eps.value(elems[a], elems[b]);
      if (!(e == eps.value(elems[b], elems[a])))
        report(r, "sign form not symmetric at (" + name(a) + ", " + name(b) + ")");
      if (!v.is_zero(v.add(e, eps.value(elems[b], elems[a]))))
        report(r, "double swap is not the identity at (" + name(a) + ", " + name(b) + ")");
      for (std::size_t d = 0; d < size; ++d) {
        const GroupElement lhs = eps.value(grading.add(elems[a], elems[b]), elems[d]);
        const GroupElement rhs = v.add(eps.value(elems[a], elems[d]), eps.value(elems[b], elems[d]));
        if (!(lhs == rhs))
          report(r, "sign form not biadditive: eps(" + name(a) + " + " + name(b) + ", " + name(d) +
                        ") = " + eps.sign_label(lhs) + " but eps(" + name(a) + ", " + name(d) +
                        ") eps(" + name(b) + ", " + name(d) + ") = " + eps.sign_label(rhs));
      }
    }

  for (std::size_t a = 0; a < size; ++a) {
    const auto want = eps.diagonal(elems[a]);
    if (!want) continue;
    const GroupElement got = eps.value(elems[a], elems[a]);
    if (!(got == *want))
      report(r, "diagonal eps(" + name(a) + ", " + name(a) + ") = " + eps.sign_label(got) +
                    " but tau'(" + name(a) + ") = " + eps.sign_label(*want));
  }
  return r;
}

}  // namespace radix

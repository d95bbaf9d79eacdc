// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "cli.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

#include "radix/gradings.hpp"
#include "radix/radicals.hpp"
#include "radix/twisted_tensor.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace radix;
using testing::E;
using testing::G;

namespace {

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  template <class Describe>
  void expect_lazy(bool ok, Describe describe) {
    ++count_;
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(describe());
    ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::size_t count() const { return count_; }
  std::size_t failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t count_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;  // 0 = no bound
  std::function<void(Check&)> body;
};

std::string str(const FgAbGroup& g) { return g.to_string(); }

// --- 1 ---------------------------------------------------------------------

void em_table(Check& c) {
  // Conventions footnote: [HZ, Sigma^k HZ] = Z, 0, 0, Z/2 for k = 0..3.
  const std::vector<FgAbGroup> expected = {G("Z"), G("0"), G("0"), G("Z/2")};
  for (int k = 0; k <= 3; ++k) {
    const MappingGroupReport r = em_maps(G("Z"), G("Z"), k);
    c.expect(r.determined() && *r.group == expected[k],
             "k=" + std::to_string(k) + ": " + (r.group ? str(*r.group) : "undetermined"));
  }
}

// --- 2 ---------------------------------------------------------------------

void mod4_criterion(Check& c) {
  for (const char* a : {"5", "-3", "13", "-7"}) {
    std::ostringstream out, err;
    const int code = cli::run({"adjoin-root", "--model", "sphere:3,5,7,13", "--alpha", a, "--n", "2"}, out, err);
    c.expect(code == cli::kExitOk, std::string("alpha=") + a + " exit " + std::to_string(code));
    c.expect(out.str().find("x^1 * x^1 = " + std::string(a) + " * x^0") != std::string::npos,
             std::string("alpha=") + a + " table lacks x*x = alpha");
  }
  for (const char* a : {"-1", "3", "-5", "7"}) {
    std::ostringstream out, err;
    const int code = cli::run({"adjoin-root", "--model", "sphere:3,5,7,13", "--alpha", a, "--n", "2"}, out, err);
    c.expect(code == cli::kExitObstructed, std::string("alpha=") + a + " exit " + std::to_string(code));
  }
}

// --- 3 ---------------------------------------------------------------------

void coefficient_ring(Check& c) {
  std::vector<UnitModel> models = {local_truncated_sphere_model({3, 5}), local_truncated_sphere_model({5}),
                                   discrete_unit_model(G("Z/6 + Z")), discrete_unit_model(G("Z/2 + Z/4"))};
  for (const UnitModel& m : models) {
    // Corpus units: a coordinate box around zero.
    std::vector<GroupElement> units;
    const std::size_t k = m.units.num_generators();
    std::vector<long> lo(k), hi(k);
    for (std::size_t i = 0; i < k; ++i) {
      const Integer ord = m.units.generator_order(i);
      lo[i] = ord == 0 ? -2 : 0;
      hi[i] = ord == 0 ? 2 : ord.get_si() - 1;
    }
    std::vector<long> cur = lo;
    for (;;) {
      std::vector<Integer> coords(cur.begin(), cur.end());
      units.push_back(m.units.element(coords));
      std::size_t i = 0;
      while (i < k && ++cur[i] > hi[i]) cur[i] = lo[i], ++i;
      if (i == k) break;
    }
    for (const auto& alpha : units)
      for (long n = 1; n <= 12; ++n) {
        const std::string tag = m.name + " alpha=" + m.units.format(alpha) + " n=" + std::to_string(n);
        const bool lifts = formal_root_obstruction(m, alpha, n).vanishes;
        if (!lifts) {
          bool refused = false;
          try {
            adjoin_root("R", m, alpha, n);
          } catch (const ObstructionError&) {
            refused = true;
          }
          c.expect(refused, tag + ": obstructed root was not refused");
          continue;
        }
        const TwistedGroupAlgebra alg = adjoin_root("R", m, alpha, n);
        c.expect(alg.dimension() == static_cast<std::size_t>(n), tag + ": basis size");
        const FgAbGroup& zn = alg.grading();
        for (long i = 0; i < n; ++i)
          for (long j = 0; j < n; ++j) {
            const std::size_t xi = n == 1 ? 0 : zn.index_of(zn.element({i}));
            const std::size_t xj = n == 1 ? 0 : zn.index_of(zn.element({j}));
            const std::size_t xk = n == 1 ? 0 : zn.index_of(zn.element({(i + j) % n}));
            const StructureConstant& sc = alg.product(xi, xj);
            c.expect(sc.product == xk && sc.unit == m.units.scale((i + j) / n, alpha),
                     tag + ": x^" + std::to_string(i) + " x^" + std::to_string(j));
          }
        c.expect(alg.associativity_violations().empty(), tag + ": associativity");
        c.expect(alg.commutativity_violations().empty(), tag + ": commutativity");
      }
  }
}

// --- 4 ---------------------------------------------------------------------

void hom_ext_oracle(Check& c) {
  std::vector<oracle::Moduli> groups = oracle::small_groups(16);
  for (const oracle::Moduli& extra : std::vector<oracle::Moduli>{{0}, {0, 0}, {0, 2}, {0, 4}, {0, 0, 3}, {0, 0, 2}})
    groups.push_back(extra);
  for (const auto& a : groups)
    for (const auto& b : groups) {
      const FgAbGroup ga = oracle::group_of(a), gb = oracle::group_of(b);
      const std::string tag = str(ga) + ", " + str(gb);
      c.expect(oracle::signature_of(hom_group(ga, gb).group()) == oracle::hom_signature(a, b), "Hom(" + tag + ")");
      c.expect(oracle::signature_of(ext_group(ga, gb).group()) == oracle::ext_signature(a, b), "Ext(" + tag + ")");
    }
}

// --- 5 ---------------------------------------------------------------------

void yoneda_biconditional(Check& c) {
  const std::vector<oracle::Moduli> groups = oracle::small_groups(8);
  for (const auto& am : groups) {
    const FgAbGroup a = oracle::group_of(am);
    const auto as = oracle::elements_of(a);
    const auto a_plus = oracle::addition_table(a);
    for (const auto& bm : groups) {
      const FgAbGroup b = oracle::group_of(bm);
      const auto bs = oracle::elements_of(b);
      const ExtGroup ext(a, b);
      const auto classes = ext.group().elements();
      // Cocycle tables as indices into B, for the brute-force oracle.
      std::vector<SymmetricCocycle> cocycles;
      std::vector<std::vector<std::size_t>> tables;
      for (const auto& x : classes) {
        cocycles.push_back(class_to_cocycle(ExtClass{a, b, x}));
        std::vector<std::size_t> tab;
        for (const auto& p : as)
          for (const auto& q : as) tab.push_back(oracle::element_index(b, cocycles.back().value(p, q)));
        tables.push_back(std::move(tab));
      }
      for (const auto& cm : groups) {
        const FgAbGroup t = torsion_part(oracle::group_of(cm), 2).group;
        const std::size_t torsor = hom_group(a, t).group().size();
        oracle::ExtensionProblem problem;
        problem.n = as.size();
        problem.m = oracle::elements_of(t).size();
        problem.t_zero = oracle::element_index(t, t.zero());
        problem.plus = a_plus;
        problem.t_plus = oracle::addition_table(t);
        const HomGroup homs(b, t);
        for (const auto& gc : homs.group().elements()) {
          const GroupHom g = homs.hom_at(gc);
          std::vector<std::size_t> g_on_b;
          for (const auto& y : bs) g_on_b.push_back(oracle::element_index(t, g(y)));
          for (std::size_t i = 0; i < classes.size(); ++i) {
            const ExtClass e{a, b, classes[i]};
            const bool pairing_zero = yoneda_pair(g, e).is_zero();
            const auto found = extend_hom(g, cocycles[i]);
            problem.rhs.clear();
            for (std::size_t v : tables[i]) problem.rhs.push_back(g_on_b[v]);
            const std::size_t brute = oracle::count_extensions(problem);
            auto tag = [&] { return "A=" + str(a) + " B=" + str(b) + " T=" + str(t) + " e=" + ext.group().format(classes[i]); };
            c.expect_lazy(pairing_zero == !found.empty(), [&] { return tag() + ": pairing vs search"; });
            c.expect_lazy(found.size() == brute, [&] { return tag() + ": search vs brute force"; });
            if (!found.empty()) c.expect_lazy(found.size() == torsor, [&] { return tag() + ": torsor count"; });
          }
        }
      }
    }
  }
}

// --- 6 ---------------------------------------------------------------------

PicModel local_field(const char* units, long minus_one) {
  const FgAbGroup u = G(units);
  return local_ring_pic_model(u, u.element({minus_one}), false);
}

void symmetric_lift(Check& c) {
  // F_3, F_5, F_7 with -1 of order 2.
  const std::vector<PicModel> fields = {local_field("Z/2", 1), local_field("Z/4", 2), local_field("Z/6", 3)};
  const FgAbGroup z = G("Z");
  for (const PicModel& k : fields) {
    const std::string tag = "k^x=" + str(k.p1);
    c.expect(!is_symmetric(k, E(k.p0, {1})), tag + ": Sigma k symmetric");
    c.expect(is_symmetric(k, E(k.p0, {2})), tag + ": Sigma^2 k not symmetric");
    const ObstructionReport even = strict_grading_obstruction(k, testing::hom(z, k.p0, {{2}}));
    c.expect(even.vanishes && even.torsor.is_trivial() && even.lift_count == Integer(1), tag + ": lift on 2Z");
    c.expect(!strict_grading_obstruction(k, GroupHom::identity(k.p0)).vanishes, tag + ": identity lifts");
  }

  // Corpus biconditional.
  std::vector<PicModel> corpus = fields;
  for (const auto& [p0s, p1s] : std::vector<std::pair<const char*, const char*>>{
           {"Z/4", "Z/2"}, {"Z/2 + Z/2", "Z/2 + Z/4"}, {"Z + Z/2", "Z/4"}, {"Z^2", "Z/2 + Z/2"}}) {
    const FgAbGroup p0 = G(p0s), p1 = G(p1s);
    const SubgroupInclusion two = torsion_part(p1, 2);
    const HomGroup taus(p0, two.group);
    for (const auto& tc : taus.group().elements())
      corpus.push_back(PicModel{"corpus", p0, p1, two.inclusion.after(taus.hom_at(tc))});
  }
  for (const PicModel& p : corpus)
    for (const char* a : {"Z", "Z/2", "Z/4", "Z/2 + Z/2", "Z + Z/2", "Z^2"}) {
      const FgAbGroup ga = G(a);
      const HomGroup h(ga, p.p0);
      std::vector<GroupHom> rhos;
      if (h.group().is_finite()) {
        for (const auto& x : h.group().elements()) rhos.push_back(h.hom_at(x));
      } else {
        // Coefficients in {-1, 0, 1, 2} on each generator of Hom(A, P0).
        const std::size_t k = h.group().num_generators();
        std::size_t total = 1;
        for (std::size_t i = 0; i < k; ++i) total *= 4;
        for (std::size_t code = 0; code < total; ++code) {
          std::vector<Integer> coords(k);
          std::size_t rest = code;
          for (std::size_t i = 0; i < k; ++i, rest /= 4) coords[i] = static_cast<long>(rest % 4) - 1;
          rhos.push_back(h.hom_at(h.group().element(coords)));
        }
      }
      for (const auto& rho : rhos) {
        bool all = true;
        for (std::size_t j = 0; j < ga.num_generators(); ++j) all = all && is_symmetric(p, rho.image_of_generator(j));
        const ObstructionReport r = strict_grading_obstruction(p, rho);
        c.expect(r.vanishes == all, "P0=" + str(p.p0) + " P1=" + str(p.p1) + " A=" + a);
        c.expect(r.torsor == ext_group(ga, p.p1).group(), "difference group Ext(A,P1)");
      }
    }
}

// --- 7 ---------------------------------------------------------------------

void tau_bijection(Check& c) {
  // Rezk: P0 = Z<omega>, omega symmetric, P1 = Z/2, B = Z/2 adjoining sqrt(omega).
  const FgAbGroup omega(1, {}, {"omega"});
  const PicModel rezk{"rezk", omega, G("Z/2"), GroupHom::zero(omega, G("Z/2"))};
  const SymmetricCocycle root = radical_cocycle(omega, omega.generator(0), 2);
  const auto ext = tau_extensions(rezk, root);
  c.expect(ext.size() == 2, "Rezk: " + std::to_string(ext.size()) + " extensions");
  const TotalGroup gamma = extended_pic(rezk, root);
  std::vector<std::string> values;
  for (const auto& h : ext) values.push_back(h.target().format(h(gamma.generator_lifts[0])));
  std::sort(values.begin(), values.end());
  c.expect(values == std::vector<std::string>{"0", "e0"}, "Rezk: tau(sqrt omega) takes both values");

  const std::vector<const char*> p0s = {"Z", "Z/2", "Z/4", "Z/2 + Z/2", "Z/8"};
  const std::vector<const char*> p1s = {"Z/2", "Z/4", "Z/2 + Z/2", "Z/3", "Z/2 + Z/4"};
  const std::vector<oracle::Moduli> bases = oracle::small_groups(8);
  for (const char* a : p0s)
    for (const char* b : p1s) {
      const FgAbGroup p0 = G(a), p1 = G(b);
      const SubgroupInclusion two = torsion_part(p1, 2);
      const HomGroup taus(p0, two.group);
      for (const auto& tc : taus.group().elements()) {
        const PicModel p{"corpus", p0, p1, two.inclusion.after(taus.hom_at(tc))};
        for (const auto& bm : bases) {
          const FgAbGroup base = oracle::group_of(bm);
          if (base.is_trivial()) continue;
          const std::size_t torsor = hom_group(base, two.group).group().size();
          const ExtGroup eg(base, p0);
          for (const auto& x : eg.group().elements()) {
            const SymmetricCocycle gm = class_to_cocycle(ExtClass{base, p0, x});
            const ObstructionReport r = grading_extension_obstruction(p, gm);
            const auto found = tau_extensions(p, gm);
            const std::string tag = "P0=" + str(p0) + " P1=" + str(p1) + " B=" + str(base);
            c.expect(r.vanishes == !found.empty(), tag + ": obstruction vs extensions");
            c.expect(found.size() == oracle::count_extensions(gm, into_torsion(p.tau, 2)), tag + ": brute force");
            if (!found.empty()) c.expect(found.size() == torsor, tag + ": |Hom(B,P1[2])|");
          }
        }
      }
    }
}

// --- 8 ---------------------------------------------------------------------

void rezk_formula(Check& c) {
  const FgAbGroup b = G("Z/2");
  const FgAbGroup omega(1, {}, {"omega"});
  const SymmetricCocycle root = radical_cocycle(omega, omega.generator(0), 2);
  const SignForm eps = sign_form_from_parity(GroupHom::identity(b));
  const GradedModule a(b, {{1, "A0"}, {1, "A1"}});
  const GradedModule bm(b, {{1, "B0"}, {1, "B1"}});
  const TwistedTensorResult t = twisted_tensor(a, bm, root, eps);

  // (A ⊗ B)_0 = (A0⊗B0) ⊕ (omega⊗A1⊗B1), (A ⊗ B)_1 = (A0⊗B1) ⊕ (A1⊗B0).
  c.expect(t.module.at(0).label == "A0⊗B0 ⊕ omega⊗A1⊗B1", "degree 0: " + t.module.at(0).label);
  c.expect(t.module.at(1).label == "A0⊗B1 ⊕ A1⊗B0", "degree 1: " + t.module.at(1).label);
  c.expect(t.summands.size() == 4, "four summands");
  std::size_t twisted = 0;
  for (const auto& s : t.summands) {
    const bool is_a1b1 = s.left == 1 && s.right == 1;
    if (s.twist_label != "1") ++twisted;
    c.expect((s.twist_label == "omega") == is_a1b1, "omega sits on " + s.label);
    c.expect(s.sign_label == (is_a1b1 ? "-1" : "+1"), "sign on " + s.label);
  }
  c.expect(twisted == 1, "exactly one twisted summand");
  c.expect(eps.sign(E(b, {1}), E(b, {1})) == -1, "eps(1,1) = -1");
  const CoherenceReport sym = check_symmetry(root, eps, b);
  const CoherenceReport assoc = check_associativity(root, eps, b);
  c.expect(sym.passed, "check_symmetry");
  c.expect(assoc.passed, "check_associativity");
}

// --- 9 ---------------------------------------------------------------------

void pushout_stages(Check& c) {
  const FgAbGroup z = G("Z");
  // 2Z -> Z is multiplication by 2 on the generator 2; 2Z -> (2/m)Z sends 2 to m * (2/m).
  const GroupHom into_z = testing::hom(z, z, {{2}});
  for (long m = 1; m <= 64; ++m) {
    const PushoutResult r = pushout(into_z, testing::hom(z, z, {{m}}));
    const FgAbGroup expected = m % 2 == 0 ? G("Z + Z/2") : G("Z");
    c.expect(r.group == expected, "m=" + std::to_string(m) + ": " + str(r.group));
    c.expect(r.from_left.after(into_z) == r.from_right.after(testing::hom(z, z, {{m}})),
             "m=" + std::to_string(m) + ": square commutes");
  }
}

// --- 10 --------------------------------------------------------------------

void no_square_root_of_suspension(Check& c) {
  for (const auto& [units, m1] : std::vector<std::pair<const char*, long>>{{"Z/2", 1}, {"Z/4", 2}, {"Z/6", 3}, {"Z/2 + Z/2", 1}}) {
    const FgAbGroup u = G(units);
    GroupElement minus_one = u.zero();
    minus_one.coords[0] = m1;
    const PicModel k = local_ring_pic_model(u, minus_one, false);
    const SymmetricCocycle half = radical_cocycle(k.p0, k.p0.generator(0), 2);  // Gamma = (1/2)Z
    const std::string tag = std::string("k^x=") + units;
    c.expect(extended_pic(k, half).group == G("Z"), tag + ": Gamma = Z");
    const ObstructionReport r = grading_extension_obstruction(k, half);
    c.expect(!r.vanishes && !r.ambient.is_zero(r.obstruction), tag + ": obstruction nonzero");
    c.expect(tau_extensions(k, half).empty(), tag + ": no tau-extension");

    const PicModel flat{"tau=0", k.p0, k.p1, GroupHom::zero(k.p0, k.p1)};
    const std::size_t expected = hom_group(G("Z/2"), torsion_part(k.p1, 2).group).group().size();
    const ObstructionReport f = grading_extension_obstruction(flat, half);
    c.expect(f.vanishes, tag + ": tau=0 vanishes");
    c.expect(f.lift_count == Integer(static_cast<unsigned long>(expected)), tag + ": tau=0 lift count");
    c.expect(tau_extensions(flat, half).size() == expected, tag + ": tau=0 extensions");
  }
}

}  // namespace

// Arguments, if any, select criteria by number.
int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  const std::vector<Criterion> criteria = {
      {1, "EM mapping groups [HZ, Sigma^k HZ] = Z, 0, 0, Z/2", 1.0, em_table},
      {2, "mod-4 radical criterion via adjoin-root", 1.0, mod4_criterion},
      {3, "coefficient ring R[x]/(x^n - alpha) for n <= 12", 5.0, coefficient_ring},
      {4, "Hom/Ext agree with brute force, order <= 16 plus free", 60.0, hom_ext_oracle},
      {5, "Yoneda pairing vanishes iff extension exists, order <= 8", 120.0, yoneda_biconditional},
      {6, "strict grading lifts iff images are symmetric", 0.0, symmetric_lift},
      {7, "tau-extensions biject with lifts; Rezk has 2", 0.0, tau_bijection},
      {8, "Rezk omega-twisted tensor product", 0.0, rezk_formula},
      {9, "finite-stage pushout Z + Z/2 (even m) / Z (odd m)", 0.0, pushout_stages},
      {10, "no square root of the suspension", 0.0, no_square_root_of_suspension},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), cr.number) == selected.end()) continue;
    Check check;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = cr.budget_seconds == 0.0 || secs < cr.budget_seconds;
    const bool ok = error.empty() && check.ok() && in_time;
    if (!ok) ++failed;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s", secs);
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << cr.number << ": " << cr.title << " (" << check.count()
              << " checks, " << timing;
    if (cr.budget_seconds > 0) std::cout << ", budget " << cr.budget_seconds << " s";
    std::cout << ")\n";
    if (!error.empty()) std::cout << "    exception: " << error << "\n";
    if (!in_time) std::cout << "    over time budget\n";
    for (const auto& f : check.failures()) std::cout << "    failed: " << f << "\n";
    if (check.failed() > check.failures().size())
      std::cout << "    ... " << check.failed() - check.failures().size() << " more\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}

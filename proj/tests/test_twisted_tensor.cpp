#include "helpers.hpp"

#include "radix/twisted_tensor.hpp"

#include <doctest.h>

#include <random>

using namespace radix;
using testing::E;
using testing::G;

namespace {

const FgAbGroup kOmega = FgAbGroup(1, {}, {"omega"});

// Rezk's setup: B = Z/2, c(1,1) = omega, chi = identity.
struct Rezk {
  FgAbGroup b = G("Z/2");
  SymmetricCocycle c = radical_cocycle(kOmega, kOmega.generator(0), 2);
  SignForm eps = sign_form_from_parity(GroupHom::identity(G("Z/2")));
};

GradedModule module(const FgAbGroup& b, const std::string& prefix, std::vector<std::size_t> ranks) {
  std::vector<GradedModule::Component> comps;
  for (std::size_t i = 0; i < ranks.size(); ++i) comps.push_back({ranks[i], prefix + std::to_string(i)});
  return GradedModule(b, comps);
}

// Sign of the permutation moving a block of p odd letters past q odd letters,
// counted as inversions.
int block_swap_sign(int p, int q) {
  std::vector<int> perm;
  for (int i = 0; i < q; ++i) perm.push_back(p + i);
  for (int i = 0; i < p; ++i) perm.push_back(i);
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

}  // namespace

TEST_CASE("sign_form_from_parity examples") {
  const FgAbGroup z = G("Z"), z2 = G("Z/2");
  const SignForm trivial = sign_form_from_parity(GroupHom::zero(z, z2));
  for (long p = -3; p <= 3; ++p)
    for (long q = -3; q <= 3; ++q) CHECK(trivial.sign(E(z, {p}), E(z, {q})) == 1);

  const SignForm koszul = sign_form_from_parity(testing::hom(z, z2, {{1}}));
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; q <= 4; ++q) {
      CHECK(koszul.sign(E(z, {p}), E(z, {q})) == block_swap_sign(p, q));
      CHECK(koszul.sign(E(z, {-p}), E(z, {q})) == block_swap_sign(p, q));
    }

  for (const char* g : {"Z/2", "Z/4", "Z/2 + Z/2", "Z/6"}) {
    const FgAbGroup gg = G(g);
    const HomGroup chis(gg, z2);
    for (const auto& cc : chis.group().elements()) {
      const GroupHom chi = chis.hom_at(cc);
      const SignForm eps = sign_form_from_parity(chi);
      for (const auto& a : gg.elements()) {
        const int expected = z2.is_zero(chi(a)) ? 1 : -1;
        CHECK(eps.sign(a, a) == expected);
      }
    }
  }
  const FgAbGroup k = G("Z/2 + Z/2");
  const SignForm two = sign_form_from_parity(testing::hom(k, z2, {{1}, {1}}));
  CHECK(two.sign(E(k, {1, 0}), E(k, {0, 1})) == -1);
  CHECK(two.sign(E(k, {1, 1}), E(k, {1, 1})) == 1);
}

TEST_CASE("braiding_sign examples") {
  Rezk r;
  for (const auto& q : r.b.elements()) CHECK(r.eps.sign(r.b.zero(), q) == 1);
  CHECK(braiding_sign(r.eps, E(r.b, {1}), E(r.b, {1})) == E(G("Z/2"), {1}));
  CHECK(r.eps.sign_label(braiding_sign(r.eps, E(r.b, {1}), E(r.b, {1}))) == "-1");

  const FgAbGroup g = G("Z/2 + Z/4");
  const SignForm eps = sign_form_from_parity(testing::hom(g, G("Z/2"), {{1}, {1}}));
  for (const auto& p : g.elements())
    for (const auto& q : g.elements()) {
      const GroupElement s = braiding_sign(eps, p, q);
      CHECK(eps.values().is_zero(eps.values().scale(2, s)));
      CHECK(eps.sign(p, q) * eps.sign(q, p) == 1);
    }
}

TEST_CASE("twisted_tensor examples") {
  Rezk r;
  const GradedModule a = module(r.b, "A", {1, 1});
  const GradedModule b = module(r.b, "B", {1, 1});
  const TwistedTensorResult t = twisted_tensor(a, b, r.c, r.eps);
  CHECK(t.module.at(0).rank == 2);
  CHECK(t.module.at(1).rank == 2);
  CHECK(t.module.at(0).label == "A0⊗B0 ⊕ omega⊗A1⊗B1");
  CHECK(t.module.at(1).label == "A0⊗B1 ⊕ A1⊗B0");
  REQUIRE(t.summands.size() == 4);
  // Degree 0: (0,0) untwisted, (1,1) omega-twisted with sign -1.
  CHECK(t.summands[0].left == 0);
  CHECK(t.summands[0].twist_label == "1");
  CHECK(t.summands[0].sign_label == "+1");
  CHECK(t.summands[1].left == 1);
  CHECK(t.summands[1].right == 1);
  CHECK(t.summands[1].twist_label == "omega");
  CHECK(t.summands[1].sign_label == "-1");
  CHECK(t.summands[1].label == "omega⊗A1⊗B1");
  for (std::size_t i = 2; i < 4; ++i) {
    CHECK(t.summands[i].degree == 1);
    CHECK(t.summands[i].twist_label == "1");
    CHECK(t.summands[i].sign_label == "+1");
  }

  for (const char* g : {"Z/2", "Z/3", "Z/2 + Z/2"}) {
    const FgAbGroup bg = G(g);
    std::vector<std::size_t> ranks;
    for (std::size_t i = 0; i < bg.size(); ++i) ranks.push_back(i + 1);
    const GradedModule m = module(bg, "M", ranks);
    const SymmetricCocycle zero = SymmetricCocycle::zero(bg, kOmega);
    const SignForm plus = sign_form_from_parity(GroupHom::zero(bg, G("Z/2")));
    const TwistedTensorResult u = twisted_tensor(m, GradedModule::unit(bg), zero, plus);
    for (std::size_t i = 0; i < bg.size(); ++i) {
      CHECK(u.module.at(i).rank == m.at(i).rank);
      CHECK(u.module.at(i).label == m.at(i).label);
    }
    for (const auto& s : u.summands) {
      CHECK(s.twist_label == "1");
      CHECK(s.sign_label == "+1");
    }
  }

  CHECK_THROWS_AS(twisted_tensor(module(G("Z/2"), "A", {1, 1}), module(G("Z/3"), "B", {1, 1, 1}), r.c, r.eps),
                  std::invalid_argument);
}

TEST_CASE("twisted_tensor ranks follow the convolution formula") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::size_t> rank(0, 3);
  for (const char* g : {"Z/2", "Z/3", "Z/4", "Z/2 + Z/2", "Z/6"}) {
    const FgAbGroup b = G(g);
    const SymmetricCocycle c = SymmetricCocycle::zero(b, kOmega);
    const SignForm eps = sign_form_from_parity(GroupHom::zero(b, G("Z/2")));
    for (int t = 0; t < 10; ++t) {
      std::vector<std::size_t> mr, nr;
      for (std::size_t i = 0; i < b.size(); ++i) {
        mr.push_back(rank(rng));
        nr.push_back(rank(rng));
      }
      const TwistedTensorResult r = twisted_tensor(module(b, "M", mr), module(b, "N", nr), c, eps);
      for (const auto& d : b.elements()) {
        std::size_t expected = 0;
        for (const auto& p : b.elements()) expected += mr[b.index_of(p)] * nr[b.index_of(b.sub(d, p))];
        CHECK(r.module.at(b.index_of(d)).rank == expected);
      }
    }
  }
}

TEST_CASE("triple tensor products agree on ranks and twists") {
  for (long n : {2, 3, 4}) {
    const FgAbGroup b = FgAbGroup::cyclic(n);
    const SymmetricCocycle c = radical_cocycle(kOmega, kOmega.generator(0), n);
    const SignForm eps = sign_form_from_parity(GroupHom::zero(b, G("Z/2")));
    for (const auto& x : b.elements())
      for (const auto& y : b.elements())
        for (const auto& z : b.elements()) {
          auto rank_one = [&](const GroupElement& d, const std::string& name) {
            return GradedModule::zero(b, "0").with_component(b.index_of(d), {1, name});
          };
          const GradedModule m = rank_one(x, "M"), nn = rank_one(y, "N"), p = rank_one(z, "P");
          const TwistedTensorResult mn = twisted_tensor(m, nn, c, eps);
          const TwistedTensorResult left = twisted_tensor(mn.module, p, c, eps);
          const TwistedTensorResult np = twisted_tensor(nn, p, c, eps);
          const TwistedTensorResult right = twisted_tensor(m, np.module, c, eps);
          for (std::size_t i = 0; i < b.size(); ++i) CHECK(left.module.at(i).rank == right.module.at(i).rank);
          REQUIRE(mn.summands.size() == 1);
          REQUIRE(left.summands.size() == 1);
          REQUIRE(np.summands.size() == 1);
          REQUIRE(right.summands.size() == 1);
          CHECK(kOmega.add(mn.summands[0].twist, left.summands[0].twist) ==
                kOmega.add(np.summands[0].twist, right.summands[0].twist));
        }
  }
}

TEST_CASE("check_associativity") {
  Rezk r;
  CHECK(check_associativity(r.c, r.eps, r.b).passed);
  for (long n = 1; n <= 12; ++n) {
    const FgAbGroup b = FgAbGroup::cyclic(n);
    const SymmetricCocycle c = radical_cocycle(kOmega, kOmega.generator(0), n);
    const SignForm eps = sign_form_from_parity(GroupHom::zero(b, G("Z/2")));
    CHECK(check_associativity(c, eps, b).passed);
  }

  const FgAbGroup z3 = G("Z/3");
  const SymmetricCocycle good = radical_cocycle(kOmega, kOmega.generator(0), 3);
  const SymmetricCocycle bad = good.with_entry(E(z3, {1}), E(z3, {1}), E(kOmega, {5}));
  const CoherenceReport rep = check_associativity(bad, sign_form_from_parity(GroupHom::zero(z3, G("Z/2"))), z3);
  CHECK(!rep.passed);
  REQUIRE(!rep.violations.empty());
  CHECK(rep.violations[0].find("(") != std::string::npos);

  // Passing iff the cocycle identity holds, on random symmetric perturbations.
  std::mt19937 rng(5);
  for (const char* g : {"Z/2", "Z/4", "Z/2 + Z/2"}) {
    const FgAbGroup b = G(g);
    const FgAbGroup fiber = G("Z/2 + Z");
    const SignForm eps = sign_form_from_parity(GroupHom::zero(b, G("Z/2")));
    const auto elems = b.elements();
    std::uniform_int_distribution<std::size_t> pick(1, elems.size() - 1);
    std::uniform_int_distribution<long> val(-1, 1);
    for (const auto& x : ExtGroup(b, fiber).group().elements()) {
      SymmetricCocycle c = class_to_cocycle(ExtClass{b, fiber, x});
      for (int t = 0; t < 8; ++t) {
        const SymmetricCocycle p = c.with_entry(elems[pick(rng)], elems[pick(rng)], fiber.element({val(rng), val(rng)}));
        CHECK(check_associativity(p, eps, b).passed == p.is_valid());
      }
    }
  }
}

TEST_CASE("check_symmetry") {
  Rezk r;
  const CoherenceReport ok = check_symmetry(r.c, r.eps, r.b);
  CHECK(ok.passed);
  CHECK(ok.violations.empty());

  const FgAbGroup z2 = G("Z/2");
  const FgAbGroup k = G("Z/2 + Z/2");
  // eps(a, b) = 1 only at ((1,0), (1,0)): symmetric, but not biadditive.
  std::vector<GroupElement> table;
  for (const auto& a : k.elements())
    for (const auto& b : k.elements()) table.push_back(E(z2, {a == E(k, {1, 0}) && b == E(k, {1, 0}) ? 1 : 0}));
  const SignForm bad = SignForm::from_table(k, z2, table);
  const CoherenceReport nb = check_symmetry(SymmetricCocycle::zero(k, kOmega), bad, k);
  CHECK(!nb.passed);
  bool biadd = false;
  for (const auto& v : nb.violations) biadd = biadd || v.find("biadditive") != std::string::npos;
  CHECK(biadd);

  std::vector<GroupElement> ones(16, z2.zero());
  const SignForm plus = SignForm::from_table(k, z2, ones, std::vector<GroupElement>(4, z2.zero()));
  CHECK(check_symmetry(SymmetricCocycle::zero(k, kOmega), plus, k).passed);

  // A diagonal inconsistent with the prescribed tau' fails.
  const SignForm wrong = SignForm::from_table(z2, z2, {z2.zero(), z2.zero(), z2.zero(), z2.zero()},
                                              std::vector<GroupElement>{z2.zero(), E(z2, {1})});
  CHECK(!check_symmetry(r.c, wrong, z2).passed);

  // An asymmetric cocycle fails.
  const SymmetricCocycle skew = r.c.with_entry(E(z2, {1}), E(z2, {1}), E(kOmega, {1})).with_entry(
      E(z2, {0}), E(z2, {1}), E(kOmega, {1}), false);
  CHECK(!check_symmetry(skew, r.eps, z2).passed);

  // Parity forms pass on every corpus grading.
  for (const char* g : {"Z/2", "Z/4", "Z/6", "Z/2 + Z/2", "Z/2 + Z/4"}) {
    const FgAbGroup b = G(g);
    const HomGroup chis(b, z2);
    for (const auto& cc : chis.group().elements()) {
      const SignForm eps = sign_form_from_parity(chis.hom_at(cc));
      CHECK(check_symmetry(SymmetricCocycle::zero(b, kOmega), eps, b).passed);
    }
  }
}

TEST_CASE("graded modules") {
  const FgAbGroup b = G("Z/3");
  const GradedModule u = GradedModule::unit(b);
  CHECK(u.at(0).rank == 1);
  CHECK(u.at(0).label == "1");
  CHECK(u.at(1).rank == 0);
  CHECK_THROWS_AS(GradedModule(G("Z"), {}), std::invalid_argument);
  CHECK_THROWS_AS(GradedModule(b, {{1, "a"}}), std::invalid_argument);
}

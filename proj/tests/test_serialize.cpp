#include "helpers.hpp"

#include "radix/serialize.hpp"

#include <doctest.h>

using namespace radix;
using testing::E;
using testing::G;

TEST_CASE("parse_group") {
  CHECK(parse_group("0").is_trivial());
  CHECK(parse_group("Z") == FgAbGroup::free(1));
  CHECK(parse_group("Z^2 + Z/4") == FgAbGroup(2, {4}));
  CHECK(parse_group("Z/2+Z/3") == FgAbGroup(0, {6}));
  CHECK(parse_group("Z/1 + Z") == FgAbGroup::free(1));
  CHECK(parse_group(" Z/4 + Z/2 ") == FgAbGroup(0, {2, 4}));
  for (const char* bad : {"", "Q", "Z/", "Z/0", "Z/-2", "Z^", "Z + + Z", "Z/2x"})
    CHECK_THROWS_AS(parse_group(bad), std::invalid_argument);
}

TEST_CASE("integers and matrices") {
  const Integer big("-98765432109876543210");
  CHECK(integer_to_json(big) == Json("-98765432109876543210"));
  CHECK(integer_from_json(Json("-98765432109876543210"), "x") == big);
  CHECK(integer_from_json(Json(7), "x") == 7);
  CHECK_THROWS_AS(integer_from_json(Json("7.5"), "x"), SchemaError);
  CHECK_THROWS_AS(integer_from_json(Json(true), "x"), SchemaError);

  IntMatrix m(2, 3, {1, -2, 3, 0, Integer("123456789012345678901"), 5});
  const Json j = to_json(m);
  CHECK(j["rows"] == 2);
  CHECK(j["cols"] == 3);
  CHECK(j["entries"][1] == "-2");
  CHECK(matrix_from_json(j, "m") == m);
  Json wrong = j;
  wrong["entries"].erase(0);
  CHECK_THROWS_AS(matrix_from_json(wrong, "m"), SchemaError);
}

TEST_CASE("group records") {
  const FgAbGroup g(1, {2, 4}, {"a", "b", "c"});
  const Json j = to_json(g);
  CHECK(j.dump() == R"({"free_rank":1,"invariant_factors":["2","4"],"labels":["a","b","c"]})");
  const FgAbGroup back = group_from_json(j, "g");
  CHECK(back == g);
  CHECK(back.labels() == g.labels());
  CHECK(group_from_json(Json("Z + Z/2"), "g") == G("Z + Z/2"));
  // Non-canonical factors are rejected in the record form.
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"free_rank":0,"invariant_factors":["4","2"]})"), "g"),
                  SchemaError);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"free_rank":-1,"invariant_factors":[]})"), "g"), SchemaError);
}

TEST_CASE("elements and homs") {
  const FgAbGroup g = G("Z/4 + Z");
  CHECK(element_to_json(E(g, {3, -2})).dump() == R"(["3","-2"])");
  CHECK(element_from_json(g, Json::parse(R"(["7", 1])"), "x") == E(g, {3, 1}));
  CHECK_THROWS_AS(element_from_json(g, Json::parse("[1]"), "x"), SchemaError);

  const GroupHom h = testing::hom(G("Z/2"), g, {{2, 0}});
  const Json hj = to_json(h);
  CHECK(hom_from_json(h.source(), h.target(), hj["matrix"], "h") == h);
  IntMatrix bad(2, 1, {1, 0});
  CHECK_THROWS_AS(hom_from_json(G("Z/2"), g, to_json(bad), "h"), SchemaError);
}

TEST_CASE("cocycle records") {
  const UnitModel m = local_truncated_sphere_model({5});
  const SymmetricCocycle c = radical_cocycle(m.units, sphere_unit(m, 5), 3);
  const Json j = to_json(c);
  CHECK(j["table"].size() == 3);  // (1,2), (2,1), (2,2)
  CHECK(cocycle_from_json(j, "c") == c);

  // Missing entries are zero; bare integers work for cyclic bases.
  const Json short_form = Json::parse(R"({"base":"Z/2","fiber":"Z","table":[[1,1,["1"]]]})");
  const SymmetricCocycle s = cocycle_from_json(short_form, "c");
  CHECK(s == radical_cocycle(G("Z"), E(G("Z"), {1}), 2));

  const Json broken = Json::parse(R"({"base":"Z/3","fiber":"Z","table":[[1,1,["1"]]]})");
  const SymmetricCocycle b = cocycle_from_json(broken, "c");
  CHECK(!b.is_valid());
  CHECK_THROWS_AS(cocycle_from_json(Json::parse(R"({"base":"Z/3","fiber":"Z","table":[[1,1,["1","2"]]]})"), "c"),
                  SchemaError);
}

TEST_CASE("model records") {
  const UnitModel u = local_truncated_sphere_model({3, 5});
  const Json uj = to_json(u);
  CHECK(uj["kind"] == "unit");
  CHECK(uj.contains("U0"));
  CHECK(uj.contains("K1"));
  CHECK(uj.contains("connecting"));
  const UnitModel ub = unit_model_from_json(uj, "m");
  CHECK(ub.units == u.units);
  CHECK(ub.kappa == u.kappa);
  CHECK(ub.units.labels() == u.units.labels());

  const PicModel p = local_ring_pic_model(G("Z/4"), E(G("Z/4"), {2}), false);
  const Json pj = to_json(p);
  CHECK(pj["kind"] == "pic");
  const PicModel pb = pic_model_from_json(pj, "p");
  CHECK(pb.tau == p.tau);
  CHECK_THROWS_AS(pic_model_from_json(uj, "p"), SchemaError);
}

TEST_CASE("report records") {
  const UnitModel m = local_truncated_sphere_model({5});
  const Json r = to_json(formal_root_obstruction(m, sphere_unit(m, 5), 2));
  CHECK(r["vanishes"] == true);
  CHECK(r["lift_count"] == "2");
  CHECK(r["witnesses"].size() == 2);

  const Json t = to_json(adjoin_root("R", m, sphere_unit(m, 5), 2));
  CHECK(t["basis"].size() == 2);
  CHECK(t["entries"].size() == 4);
  CHECK(t["entries"][3] == Json::parse(R"(["x^1","x^1","5","x^0"])"));

  const GradedModule gm(G("Z/2"), {{1, "A0"}, {2, "A1"}});
  const Json mj = to_json(gm);
  CHECK(mj["components"].size() == 2);
  const GradedModule back = graded_module_from_json(mj, "m");
  CHECK(back.at(1).rank == 2);
  CHECK(back.at(1).label == "A1");

  const FgAbGroup omega(1, {}, {"omega"});
  const TwistedTensorResult tt =
      twisted_tensor(gm, gm, radical_cocycle(omega, omega.generator(0), 2), sign_form_from_parity(GroupHom::identity(G("Z/2"))));
  const Json sj = to_json(G("Z/2"), tt.summands[1]);
  CHECK(sj == Json::parse(R"([["1"],["1"],"omega","-1"])"));
}

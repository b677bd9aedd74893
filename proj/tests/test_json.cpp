#include <gtest/gtest.h>

#include "spinnet/json.hpp"

using namespace spinnet;

TEST(Json, Values) {
  EXPECT_EQ(json::spin(Spin::from_twice(3)), "3/2");
  EXPECT_EQ(json::value(SqrtRational(Rational(1, 6))), "1/6*sqrt(1/1)");
  const SixJ s = SixJ::from_twice({1, 2, 3, 4, 5, 6});
  EXPECT_EQ(json::sixj_from(json::sixj(s)), s);
  EXPECT_THROW(json::sixj_from(nlohmann::json::parse("[1,2]")), ParseError);
}

TEST(Json, Regularization) {
  const auto q = canonicalize_quadruple(Spin::from_twice(2), Spin::from_twice(2), Spin::from_twice(2),
                                        Spin::from_twice(2));
  const auto rep = regularization_bounds(q);
  const auto j = json::regularization(rep);
  EXPECT_EQ(j.at("max_r"), 4);
  EXPECT_EQ(j.at("rsym3_holds"), false);
  EXPECT_EQ(j.at("kappa_twice"), 2);
  const auto back = json::regularization_from(j);
  EXPECT_EQ(back.max_r, rep.max_r);
  EXPECT_EQ(back.rsym5_holds, rep.rsym5_holds);

  const auto zero = json::regularization(regularization_bounds(canonicalize_quadruple(Spin(), Spin(), Spin(), Spin())));
  EXPECT_TRUE(zero.at("max_r").is_null());
  EXPECT_TRUE(zero.at("rsym5_holds").is_null());
}

TEST(Json, IncidenceRoundTrip) {
  const auto d = build_desargues();
  const auto j = json::incidence(d);
  EXPECT_EQ(j.at("points").size(), 10u);
  EXPECT_EQ(j.at("incidence").size(), 30u);
  EXPECT_EQ(j.at("labels").at("points").at("0"), "(12)");
  EXPECT_EQ(json::incidence_from(j), d);
  EXPECT_EQ(json::incidence_from(nlohmann::json::parse(j.dump())), d);
}

TEST(Json, IncidenceErrors) {
  EXPECT_THROW(json::incidence_from(nlohmann::json::parse(R"({"points":[0]})")), ParseError);
  EXPECT_THROW(json::incidence_from(nlohmann::json::parse(R"({"points":[0],"lines":[0],"incidence":[[0,4]]})")),
               MalformedStructure);
  EXPECT_THROW(json::incidence_from(nlohmann::json::parse(
                   R"({"points":[0],"lines":[0],"incidence":[],"labels":{"points":{"x":"a"}}})")),
               ParseError);
}

TEST(Json, ComplexRoundTrip) {
  const auto c = space_dual_desargues(build_desargues());
  const auto j = json::complex(c);
  EXPECT_EQ(j.at("f_vector"), nlohmann::json::parse("[5,10,10,5]"));
  EXPECT_EQ(json::complex(json::complex_from(nlohmann::json::parse(j.dump()))), j);
}

TEST(Json, Labeling) {
  SymbolSpins s;
  for (Symbol k : kAllSymbols) s[k] = Spin::from_twice(2);
  s[Symbol::b] = Spin::from_twice(3);
  const auto j = json::labeling(s);
  EXPECT_EQ(j.at("symbol_spins").at("b"), "3/2");
  EXPECT_EQ(json::labeling_from(j), s);
  EXPECT_THROW(json::labeling_from(nlohmann::json::parse(R"({"symbol_spins":{"z":"1"}})")), ParseError);
}

TEST(Json, Record) {
  VerifyRecord r;
  r.instance = {{"a", Spin::from_twice(2)}, {"p'", Spin()}};
  r.result = make_check_result(SqrtRational(Rational(1, 3)), SqrtRational(Rational(1, 3)), "orthogonality", 3);
  const auto j = json::record(r);
  EXPECT_EQ(j.at("instance").at("a"), "1");
  EXPECT_EQ(j.at("instance").at("p'"), "0");
  EXPECT_EQ(j.at("lhs"), "1/3*sqrt(1/1)");
  EXPECT_EQ(j.at("equal"), true);
  EXPECT_EQ(j.at("form"), "orthogonality");
}

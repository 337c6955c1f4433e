#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "homlie/fixtures.hpp"
#include "homlie/io.hpp"
#include "homlie/theorem_suite.hpp"

using namespace homlie;
using json = nlohmann::json;

namespace {

std::string temp_file(const std::string& text) {
  const std::string path = ::testing::TempDir() + "homlie_io_" + std::to_string(std::hash<std::string>{}(text)) + ".json";
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Io, AlgebraRoundTrip) {
  for (const auto& [name, g] : suite::default_fixtures()) {
    const json j = io::to_json(g.raw());
    const auto back = io::hom_lie_from(j);
    EXPECT_EQ(back.mu().flatten(), g.mu().flatten()) << name;
    EXPECT_EQ(back.twist(), g.twist()) << name;
    EXPECT_EQ(back.space()->names(), g.space()->names()) << name;
  }
}

TEST(Io, JacksonRoundTripKeepsRawStructure) {
  const auto j = fixtures::jackson_sl2(Scalar(1, 3));
  const auto back = io::algebra_from(io::to_json(j));
  EXPECT_EQ(back.mu.flatten(), j.mu.flatten());
  EXPECT_THROW(io::hom_lie_from(io::to_json(j)), UsageError);  // not multiplicative
}

TEST(Io, ScalarsAcceptStringsAndIntegers) {
  EXPECT_EQ(io::scalar_from(json("-3/6"), "x"), Scalar(-1, 2));
  EXPECT_EQ(io::scalar_from(json(4), "x"), Scalar(4));
  EXPECT_THROW(io::scalar_from(json(1.5), "x"), UsageError);
  EXPECT_THROW(io::scalar_from(json("1/0"), "x"), UsageError);
}

TEST(Io, StructureErrorsAreUsageErrors) {
  const auto parse = [](const char* text) { return io::algebra_from(json::parse(text)); };
  // duplicate pair
  EXPECT_THROW(parse(R"({"dim":2,"brackets":[{"i":1,"j":2,"value":[1,0]},{"i":1,"j":2,"value":[0,1]}]})"), UsageError);
  // wrong value length
  EXPECT_THROW(parse(R"({"dim":2,"brackets":[{"i":1,"j":2,"value":[1,0,0]}]})"), UsageError);
  // i >= j
  EXPECT_THROW(parse(R"({"dim":2,"brackets":[{"i":2,"j":1,"value":[1,0]}]})"), UsageError);
  // index out of range
  EXPECT_THROW(parse(R"({"dim":2,"brackets":[{"i":1,"j":3,"value":[1,0]}]})"), UsageError);
  // twist of the wrong shape
  EXPECT_THROW(parse(R"({"dim":2,"alpha":[[1,0]]})"), UsageError);
  // missing dim, zero dim
  EXPECT_THROW(parse(R"({"brackets":[]})"), UsageError);
  EXPECT_THROW(parse(R"({"dim":0})"), UsageError);
  // duplicate basis names
  EXPECT_THROW(parse(R"({"dim":2,"basis":["a","a"]})"), UsageError);
}

TEST(Io, ErrorMessagesNameTheLocation) {
  try {
    io::algebra_from(json::parse(R"({"dim":2,"brackets":[{"i":1,"j":2,"value":[1,"x"]}]})"));
    FAIL();
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("algebra.brackets[0].value[1]"), std::string::npos) << e.what();
  }
}

TEST(Io, ReadJsonFromFileAndMalformed) {
  const auto good = temp_file(R"({"dim": 1})");
  EXPECT_EQ(io::read_json(good)["dim"], 1);
  const auto bad = temp_file("{\"dim\": ");
  EXPECT_THROW(io::read_json(bad), UsageError);
  EXPECT_THROW(io::read_json("/nonexistent/file.json"), UsageError);
  std::remove(good.c_str());
  std::remove(bad.c_str());
}

TEST(Io, CochainRoundTrip) {
  const auto g = fixtures::yau_gl2();
  suite::Rng rng(1);
  SkewCochain c(g.space(), g.space(), 2);
  for (const auto& b : compatibility_basis(g.space(), g.space(), 2)) c += Scalar(rng.uniform(-3, 3)) * b;
  EXPECT_EQ(io::cochain_from(io::to_json(c), g.space(), g.space()), c);
}

TEST(Io, CochainErrors) {
  const auto s = fixtures::fixture_b().space();
  const auto parse = [&](const char* text) { return io::cochain_from(json::parse(text), s, s); };
  EXPECT_THROW(parse(R"({"arity":2,"coeffs":[{"tuple":[2,1],"value":[0,0,1]}]})"), UsageError);
  EXPECT_THROW(parse(R"({"arity":2,"coeffs":[{"tuple":[1],"value":[0,0,1]}]})"), UsageError);
  EXPECT_THROW(parse(R"({"arity":2,"coeffs":[{"tuple":[1,2],"value":[0,0,1]},{"tuple":[1,2],"value":[0,0,1]}]})"), UsageError);
  EXPECT_THROW(parse(R"({"arity":9,"coeffs":[]})"), UsageError);
  const auto ok = parse(R"({"arity":2,"coeffs":[{"tuple":[1,2],"value":[0,0,"1/2"]}]})");
  EXPECT_EQ(ok.on_basis({1, 0}), (Vec{0, 0, Scalar(-1, 2)}));
}

TEST(Io, RepresentationValidated) {
  const auto g = fixtures::sl2();
  // trivial 1-dim module: fine
  EXPECT_NO_THROW(io::representation_from(json::parse(R"({"module_dim":1,"action":[]})"), g));
  // h acting by 1: fails the representation axiom
  EXPECT_THROW(io::representation_from(json::parse(R"({"module_dim":1,"action":[{"g":2,"v":1,"value":[1]}]})"), g), UsageError);
  EXPECT_THROW(io::representation_from(json::parse(R"({"module_dim":1,"action":[{"g":4,"v":1,"value":[1]}]})"), g), UsageError);
}

TEST(Io, ActionFileMatchesProjectionAction) {
  const auto B = fixtures::fixture_b();
  const auto pa = suite::projection_action(B);
  json j = io::space_json(*B.space());
  j["module_dim"] = B.dim();
  j["beta"] = j["alpha"];
  j["brackets"] = io::to_json(B.raw())["brackets"];
  json act = json::array();
  for (std::size_t x = 0; x < pa.acting().dim(); ++x)
    for (std::size_t k = 0; k < B.dim(); ++k) {
      const Vec v = pa.act(Vec::unit(pa.acting().dim(), x), Vec::unit(B.dim(), k));
      if (!v.is_zero()) act.push_back({{"g", x + 1}, {"v", k + 1}, {"value", io::to_json(v)}});
    }
  j["action"] = act;
  const auto back = io::action_from(j, pa.acting());
  EXPECT_EQ(back.representation().action(), pa.representation().action());
  EXPECT_EQ(back.acted().mu().flatten(), B.mu().flatten());
}

TEST(Io, MatrixAndReports) {
  EXPECT_EQ(io::matrix_from(json::parse(R"({"matrix":[[1,"2/3"],[0,-1]]})"), 2, 2), Mat::from_rows({{1, Scalar(2, 3)}, {0, -1}}));
  EXPECT_THROW(io::matrix_from(json::parse(R"({"matrix":[[1,2]]})"), 2, 2), UsageError);
  CohomologyReport r{3, 3, 3, 0};
  EXPECT_EQ(io::to_json(r)["dim_H"], 3);
  const auto fails = multiplicativity_failures(fixtures::jackson_sl2(2));
  ASSERT_FALSE(fails.empty());
  const json w = io::to_json(fails[1]);
  EXPECT_EQ(w["message"], "multiplicativity fails at (e,f): 3·h vs 12·h");
  EXPECT_EQ(w["indices"], json::array({1, 3}));
}

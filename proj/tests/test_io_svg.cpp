#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "kipp/generators.hpp"
#include "kipp/io.hpp"
#include "kipp/kippenhahn.hpp"
#include "kipp/svg.hpp"

using namespace kipp;

namespace {

std::string slurp(const std::string& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PlotSpec j2_spec() {
  PlotSpec spec;
  spec.width = 240;
  spec.height = 240;
  spec.samples = 16;
  spec.title = "J2 seed=0";
  return spec;
}

}  // namespace

TEST(MatrixJson, RoundTripIsExact) {
  const ComplexMatrix a = random_matrix(4, {60});
  const Json j = to_json(a);
  EXPECT_EQ(j["dim"], 4);
  EXPECT_EQ(j["entries"].size(), 16u);
  EXPECT_EQ(matrix_from_json(Json::parse(j.dump())), a);
}

TEST(MatrixJson, RowMajorEntries) {
  const ComplexMatrix j2 = jordan_shift(2);
  const Json j = to_json(j2);
  EXPECT_EQ(j["entries"][1][0], 1.0);
  EXPECT_EQ(j["entries"][2][0], 0.0);
}

TEST(MatrixJson, RejectsMalformedInput) {
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"dim": 2, "entries": [[1, 0]]})")), MalformedInput);
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"entries": []})")), MalformedInput);
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"dim": 0, "entries": []})")), MalformedInput);
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"dim": 1, "entries": [[1, 2, 3]]})")), MalformedInput);
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"dim": 1, "entries": [["a", 0]]})")), MalformedInput);
  EXPECT_THROW(read_matrix_file("/nonexistent/matrix.json"), MalformedInput);
  // Real entries may be plain numbers.
  EXPECT_EQ(matrix_from_json(Json::parse(R"({"dim": 1, "entries": [2.5]})"))(0, 0), Complex(2.5));
}

TEST(PolyJson, TermsOfJordanTwo) {
  const Json j = to_json(HomoPoly3::monomial(0, 0, 2) - 0.25 * HomoPoly3::monomial(2, 0, 0) -
                         0.25 * HomoPoly3::monomial(0, 2, 0));
  EXPECT_EQ(j["degree"], 2);
  ASSERT_EQ(j["terms"].size(), 3u);
  EXPECT_EQ(j["terms"][0]["z"], 2);
  EXPECT_EQ(j["terms"][1]["coeff"], -0.25);
}

TEST(ClassificationJson, HasAllSections) {
  const auto comps = classify_curve(jordan_shift(5));
  const Json j = classification_json(comps, fit_disc(jordan_shift(5), 64), {});
  EXPECT_EQ(j["components"].size(), 3u);
  EXPECT_EQ(j["components"][0]["kind"], "Point");
  EXPECT_EQ(j["components"][1]["kind"], "Ellipse");
  EXPECT_TRUE(j["discFit"]["circular"].get<bool>());
  EXPECT_TRUE(j["reports"].is_array());
}

TEST(Svg, JordanTwoGolden) {
  const std::string svg = render_svg(jordan_shift(2), j2_spec(), fit_disc(jordan_shift(2), 64));
  EXPECT_EQ(svg, slurp(KIPP_TEST_DATA "/j2_circle.svg"));
}

TEST(Svg, DeterministicWithFixedHeader) {
  const ComplexMatrix a = random_matrix(3, {61});
  PlotSpec spec;
  spec.samples = 24;
  const std::string s1 = render_svg(a, spec);
  EXPECT_EQ(s1, render_svg(a, spec));
  EXPECT_EQ(s1.rfind("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\"", 0), 0u);
  EXPECT_NE(s1.find("</svg>\n"), std::string::npos);
  EXPECT_EQ(s1.find("fitted-disc"), std::string::npos);
}

TEST(Svg, LayersAndValidation) {
  PlotSpec spec;
  spec.layers = parse_layers("boundary,eigenvalues");
  const std::string s = render_svg(jordan_shift(3), spec);
  EXPECT_NE(s.find("class=\"boundary\""), std::string::npos);
  EXPECT_EQ(s.find("class=\"branch\""), std::string::npos);
  spec.samples = 7;
  EXPECT_THROW(render_svg(jordan_shift(3), spec), std::invalid_argument);
  spec.samples = 16;
  spec.layers = 0;
  EXPECT_THROW(render_svg(jordan_shift(3), spec), std::invalid_argument);
  EXPECT_THROW(parse_layers("boundary,heatmap"), std::invalid_argument);
}

#include <gtest/gtest.h>

#include <json.hpp>

#include "gsslab/error.hpp"
#include "gsslab/render.hpp"

using namespace gsslab;
using nlohmann::ordered_json;

namespace {

GssFamily family_of(const char* poly) { return build_family(generate_mseq(parse_poly(poly))); }

void expect_json_round_trip(const std::string& text) {
  EXPECT_EQ(ordered_json::parse(text).dump(2) + "\n", text);
}

}  // namespace

TEST(Render, FormatNames) {
  EXPECT_EQ(parse_format("table"), OutputFormat::table);
  EXPECT_EQ(parse_format("json"), OutputFormat::json);
  EXPECT_EQ(parse_format("csv"), OutputFormat::csv);
  EXPECT_THROW(parse_format("xml"), Error);
}

TEST(Render, MSeqJson) {
  const auto text = render_mseq(generate_mseq(parse_poly("x^3+x^2+1")), OutputFormat::json);
  const auto j = ordered_json::parse(text);
  EXPECT_EQ(j["bits"], "1110010");
  EXPECT_EQ(j["length"], 7);
  EXPECT_EQ(j["least_period"], 7);
  EXPECT_EQ(j["poly"], "x^3+x^2+1");
  expect_json_round_trip(text);
}

TEST(Render, MSeqTableUsesTilde) {
  const auto text = render_mseq(generate_mseq(parse_poly("x^2+x+1")), OutputFormat::table);
  EXPECT_NE(text.find("a = 110 ~\n"), std::string::npos);
}

TEST(Render, FamilyJsonExact) {
  EXPECT_EQ(render_family(family_of("x^2+x+1"), OutputFormat::json),
            R"({
  "poly": "x^2+x+1",
  "a": "110",
  "members": [
    {
      "G": "00",
      "bits": "00",
      "least_period": 1
    },
    {
      "G": "10",
      "bits": "11",
      "least_period": 1
    },
    {
      "G": "01",
      "bits": "01",
      "least_period": 2
    },
    {
      "G": "11",
      "bits": "10",
      "least_period": 2
    }
  ]
}
)");
}

TEST(Render, FamilyCsvAndTable) {
  const auto fam = family_of("x^3+x^2+1");
  EXPECT_EQ(render_family(fam, OutputFormat::csv),
            "G,bits,least_period\n000,0000,1\n100,1111,1\n010,0110,4\n110,1001,4\n"
            "001,1010,2\n011,1100,4\n101,0101,2\n111,0011,4\n");
  const auto table = render_family(fam, OutputFormat::table);
  EXPECT_NE(table.find(" 3.  G = (010), {b(G)} = 0110 ~   T = 4\n"), std::string::npos);
  EXPECT_NE(table.find("a = 1110010 ~"), std::string::npos);
}

TEST(Render, StatsJson) {
  const auto fam = family_of("x^3+x^2+1");
  const auto text = render_stats(fam, compute_stats(fam), OutputFormat::json);
  const auto j = ordered_json::parse(text);
  EXPECT_EQ(j["fraction"], "1/2");
  EXPECT_EQ(j["b_prime_size"], 4);
  EXPECT_EQ(j["coset_count"], 2);
  EXPECT_EQ(j["witnesses"]["distinct_cosets"], 2);
  EXPECT_EQ(j["histogram"].size(), 3U);
  expect_json_round_trip(text);
}

TEST(Render, StatsCsvMarksCosets) {
  const auto fam = family_of("x^2+x+1");
  EXPECT_EQ(render_stats(fam, compute_stats(fam), OutputFormat::csv),
            "G,bits,least_period,in_b_prime,coset\n00,00,1,1,1\n10,11,1,1,1\n01,01,2,0,2\n11,10,2,0,2\n");
}

TEST(Render, ReportJsonShape) {
  const auto text = render_report(verify_revised_theorem(3, 4), OutputFormat::json);
  const auto j = ordered_json::parse(text);
  EXPECT_EQ(j["verdict"], "PASS");
  EXPECT_EQ(j["revised_theorem"], "holds for 4<=n<=4");
  ASSERT_EQ(j["rows"].size(), 4U);
  EXPECT_EQ(j["rows"][2]["poly"], "x^4+x+1");
  EXPECT_EQ(j["rows"][2]["b_prime_size"], 4);
  EXPECT_EQ(j["rows"][2]["fraction"], "1/4");
  EXPECT_EQ(j["rows"][2]["cosets"], 4);
  expect_json_round_trip(text);
}

TEST(Render, ReportFailIncludesWitness) {
  VerifyReport rep;
  rep.min_degree = rep.max_degree = 4;
  VerifyRow row;
  row.n = 4;
  row.poly = parse_poly("x^4+x+1");
  row.b_prime_size = 8;
  row.fraction = Fraction(1, 2);
  row.cosets = 2;
  rep.rows.push_back(row);
  rep.pass = false;
  rep.witness = row;
  rep.revised_theorem = "violated";
  const auto j = ordered_json::parse(render_report(rep, OutputFormat::json));
  EXPECT_EQ(j["verdict"], "FAIL");
  EXPECT_EQ(j["witness"]["mask"], "0x13");
  EXPECT_NE(render_report(rep, OutputFormat::table).find("WITNESS: n=4 poly x^4+x+1"), std::string::npos);
}

TEST(Render, Primitives) {
  const auto table = render_primitives(3, primitive_polys(3), OutputFormat::table);
  EXPECT_NE(table.find("x^3+x+1"), std::string::npos);
  EXPECT_NE(table.find("phi(2^3-1)/3 = 2\n"), std::string::npos);
  EXPECT_EQ(render_primitives(2, primitive_polys(2), OutputFormat::csv), "poly,mask\nx^2+x+1,0x7\n");
}

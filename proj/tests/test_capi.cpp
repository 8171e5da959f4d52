#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "gsslab/gsslab.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  gsslab_string_free(s);
  return out;
}

uint64_t mask_of(const char* text) {
  uint64_t m = 0;
  EXPECT_EQ(gsslab_poly_parse(text, &m), GSSLAB_OK);
  return m;
}

struct Degree3Fixture {
  gsslab_mseq* rec = nullptr;
  gsslab_family* fam = nullptr;
  Degree3Fixture() {
    EXPECT_EQ(gsslab_mseq_generate(mask_of("x^3+x^2+1"), nullptr, &rec), GSSLAB_OK);
    EXPECT_EQ(gsslab_family_build(rec, &fam), GSSLAB_OK);
  }
  ~Degree3Fixture() {
    gsslab_family_free(fam);
    gsslab_mseq_free(rec);
  }
  std::set<std::string> coset(const char* g) {
    size_t idx[16];
    size_t count = 0;
    EXPECT_EQ(gsslab_coset_of(fam, g, nullptr, 0, idx, 16, &count), GSSLAB_OK);
    std::set<std::string> out;
    for (size_t i = 0; i < count; ++i) {
      char* bits = nullptr;
      EXPECT_EQ(gsslab_family_member(fam, idx[i], nullptr, &bits, nullptr), GSSLAB_OK);
      out.insert(take(bits));
    }
    return out;
  }
};

}  // namespace

TEST(CApi, PolynomialRoundTrip) {
  EXPECT_EQ(mask_of("x^3+x^2+1"), 0xDU);
  char* s = nullptr;
  ASSERT_EQ(gsslab_poly_render(0xD, &s), GSSLAB_OK);
  EXPECT_EQ(take(s), "x^3+x^2+1");
  uint64_t r = 0;
  ASSERT_EQ(gsslab_poly_reciprocal(0xD, &r), GSSLAB_OK);
  EXPECT_EQ(r, 0xBU);
}

TEST(CApi, ErrorsSetStatusAndMessage) {
  uint64_t m = 0;
  EXPECT_EQ(gsslab_poly_parse("x^2+x^2", &m), GSSLAB_E_PARSE);
  EXPECT_NE(std::string(gsslab_last_error()).find("duplicate term"), std::string::npos);
  EXPECT_EQ(gsslab_poly_parse(nullptr, &m), GSSLAB_E_INVALID);
  EXPECT_EQ(gsslab_poly_reciprocal(0x6, &m), GSSLAB_E_INVALID);

  gsslab_mseq* rec = nullptr;
  EXPECT_EQ(gsslab_mseq_generate(0x5, nullptr, &rec), GSSLAB_E_NOT_PRIMITIVE);
  EXPECT_EQ(rec, nullptr);
  EXPECT_NE(std::string(gsslab_last_error()).find("reducible: (x+1)^2"), std::string::npos);
  EXPECT_EQ(gsslab_mseq_generate(0xD, "000", &rec), GSSLAB_E_INVALID);
  EXPECT_EQ(gsslab_mseq_generate(0xD, "0a0", &rec), GSSLAB_E_PARSE);

  size_t count = 0;
  EXPECT_EQ(gsslab_primitive_polys(1, nullptr, 0, &count), GSSLAB_E_RANGE);
  gsslab_report* rep = nullptr;
  EXPECT_EQ(gsslab_verify(5, 4, 1, 0, &rep), GSSLAB_E_RANGE);
  EXPECT_STREQ(gsslab_status_name(GSSLAB_E_RANGE), "out of range");

  gsslab_format fmt;
  EXPECT_EQ(gsslab_parse_format("yaml", &fmt), GSSLAB_E_PARSE);
  char* text = nullptr;
  EXPECT_EQ(gsslab_primitives_render(3, static_cast<gsslab_format>(9), &text), GSSLAB_E_INVALID);
}

TEST(CApi, FreeAcceptsNull) {
  gsslab_string_free(nullptr);
  gsslab_mseq_free(nullptr);
  gsslab_family_free(nullptr);
  gsslab_stats_free(nullptr);
  gsslab_report_free(nullptr);
}

TEST(CApi, Primitivity) {
  int prim = 0;
  char* reason = nullptr;
  ASSERT_EQ(gsslab_poly_is_primitive(0x1F, &prim, &reason), GSSLAB_OK);
  EXPECT_EQ(prim, 0);
  EXPECT_EQ(take(reason), "irreducible, but x has order 5, not 15");
  ASSERT_EQ(gsslab_poly_is_primitive(0x7, &prim, nullptr), GSSLAB_OK);
  EXPECT_EQ(prim, 1);
  EXPECT_EQ(gsslab_poly_is_primitive(0x1, &prim, nullptr), GSSLAB_E_INVALID);

  uint64_t masks[2] = {0, 0};
  size_t count = 0;
  ASSERT_EQ(gsslab_primitive_polys(3, masks, 2, &count), GSSLAB_OK);
  EXPECT_EQ(count, 2U);
  EXPECT_EQ(masks[0], 0xBU);
  EXPECT_EQ(masks[1], 0xDU);
  ASSERT_EQ(gsslab_primitive_polys(12, nullptr, 0, &count), GSSLAB_OK);
  EXPECT_EQ(count, 144U);
}

TEST(CApi, SequenceAndReverse) {
  gsslab_mseq* rec = nullptr;
  ASSERT_EQ(gsslab_mseq_generate(0xD, "111", &rec), GSSLAB_OK);
  char* bits = nullptr;
  ASSERT_EQ(gsslab_mseq_bits(rec, &bits), GSSLAB_OK);
  EXPECT_EQ(take(bits), "1110010");
  gsslab_mseq* rev = nullptr;
  ASSERT_EQ(gsslab_mseq_reverse(rec, &rev), GSSLAB_OK);
  uint64_t m = 0;
  ASSERT_EQ(gsslab_mseq_poly(rev, &m), GSSLAB_OK);
  EXPECT_EQ(m, 0xBU);
  gsslab_mseq_free(rev);
  gsslab_mseq_free(rec);

  size_t period = 0;
  ASSERT_EQ(gsslab_least_period("0101", &period), GSSLAB_OK);
  EXPECT_EQ(period, 2U);
  EXPECT_EQ(gsslab_least_period("", &period), GSSLAB_E_PARSE);
}

TEST(CApi, FamilyMembersAndCosets) {
  Degree3Fixture p;
  size_t size = 0;
  ASSERT_EQ(gsslab_family_size(p.fam, &size), GSSLAB_OK);
  ASSERT_EQ(size, 8U);
  char* g = nullptr;
  char* bits = nullptr;
  size_t period = 0;
  ASSERT_EQ(gsslab_family_member(p.fam, 5, &g, &bits, &period), GSSLAB_OK);
  EXPECT_EQ(take(g), "011");
  EXPECT_EQ(take(bits), "1100");
  EXPECT_EQ(period, 4U);
  EXPECT_EQ(gsslab_family_member(p.fam, 8, &g, &bits, &period), GSSLAB_E_RANGE);

  size_t index = 0;
  ASSERT_EQ(gsslab_family_index_of(p.fam, "101", &index), GSSLAB_OK);
  EXPECT_EQ(index, 6U);
  EXPECT_EQ(gsslab_family_index_of(p.fam, "10", &index), GSSLAB_E_INVALID);

  const std::set<std::string> c1{"0110", "1001", "0011", "1100"};
  const std::set<std::string> bp{"0000", "1111", "0101", "1010"};
  EXPECT_EQ(p.coset("010"), c1);
  EXPECT_EQ(p.coset("011"), c1);
  EXPECT_EQ(p.coset("001"), bp);

  const size_t bad_sub[] = {1, 2};
  size_t idx[8];
  size_t count = 0;
  EXPECT_EQ(gsslab_coset_of(p.fam, "010", bad_sub, 2, idx, 8, &count), GSSLAB_E_INVALID);
  const size_t whole[] = {0, 1, 2, 3, 4, 5, 6, 7};
  ASSERT_EQ(gsslab_coset_of(p.fam, "010", whole, 8, idx, 2, &count), GSSLAB_OK);
  EXPECT_EQ(count, 8U);
}

TEST(CApi, StatsOutliveFamily) {
  gsslab_stats* st = nullptr;
  {
    Degree3Fixture p;
    ASSERT_EQ(gsslab_stats_compute(p.fam, &st), GSSLAB_OK);
  }
  size_t v = 0;
  ASSERT_EQ(gsslab_stats_b_prime_size(st, &v), GSSLAB_OK);
  EXPECT_EQ(v, 4U);
  ASSERT_EQ(gsslab_stats_coset_count(st, &v), GSSLAB_OK);
  EXPECT_EQ(v, 2U);
  uint64_t num = 0, den = 0;
  ASSERT_EQ(gsslab_stats_fraction(st, &num, &den), GSSLAB_OK);
  EXPECT_EQ(num, 1U);
  EXPECT_EQ(den, 2U);
  ASSERT_EQ(gsslab_stats_period_count(st, 2, &v), GSSLAB_OK);
  EXPECT_EQ(v, 2U);
  ASSERT_EQ(gsslab_stats_period_count(st, 3, &v), GSSLAB_OK);
  EXPECT_EQ(v, 0U);
  char* text = nullptr;
  ASSERT_EQ(gsslab_stats_render(st, GSSLAB_FORMAT_TABLE, &text), GSSLAB_OK);
  EXPECT_NE(take(text).find("fraction with T < 4: 1/2"), std::string::npos);
  gsslab_stats_free(st);
}

TEST(CApi, VerifyReport) {
  gsslab_report* rep = nullptr;
  ASSERT_EQ(gsslab_verify(2, 6, 2, 0, &rep), GSSLAB_OK);
  int pass = 0;
  ASSERT_EQ(gsslab_report_pass(rep, &pass), GSSLAB_OK);
  EXPECT_EQ(pass, 1);
  size_t rows = 0;
  ASSERT_EQ(gsslab_report_row_count(rep, &rows), GSSLAB_OK);
  EXPECT_EQ(rows, 1U + 2U + 2U + 6U + 6U);
  int n = 0;
  uint64_t mask = 0, num = 0, den = 0;
  size_t cosets = 0;
  ASSERT_EQ(gsslab_report_row(rep, 3, &n, &mask, &num, &den, &cosets), GSSLAB_OK);
  EXPECT_EQ(n, 4);
  EXPECT_EQ(mask, 0x13U);
  EXPECT_EQ(num, 1U);
  EXPECT_EQ(den, 4U);
  EXPECT_EQ(cosets, 4U);
  EXPECT_EQ(gsslab_report_row(rep, rows, &n, nullptr, nullptr, nullptr, nullptr), GSSLAB_E_RANGE);
  char* text = nullptr;
  ASSERT_EQ(gsslab_report_render(rep, GSSLAB_FORMAT_CSV, &text), GSSLAB_OK);
  EXPECT_EQ(take(text).rfind("n,poly,b_prime_size,fraction,cosets,worst,witness_cosets\n", 0), 0U);
  gsslab_report_free(rep);
}

TEST(CApi, MaxDegree) {
  int d = 0;
  ASSERT_EQ(gsslab_max_degree(&d), GSSLAB_OK);
  EXPECT_EQ(d, 16);
}

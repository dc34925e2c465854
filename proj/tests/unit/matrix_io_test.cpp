#include <gtest/gtest.h>

#include "pcm/matrix_io.hpp"
#include "support/oracles.hpp"

using pcm::Rational;
using pcm::testing::q;

TEST(MatrixTextTest, ParsesHeaderCommentsAndFractions) {
  const auto text = pcm::parse_matrix_text(
      "# consistent 3x3\n"
      "3\n"
      "1    2    6   # first row\n"
      "1/2  1    3\n"
      "\n"
      "1/6  1/3  1\n");
  EXPECT_EQ(text.rows.size(), 3u);
  EXPECT_TRUE(text.has_fraction());
  EXPECT_EQ(text.preferred_mode(), pcm::NumericMode::Rational);
  const auto m = pcm::to_matrix<Rational>(text);
  EXPECT_EQ(m(1, 0), q(1, 2));
  EXPECT_EQ(m(2, 1), q(1, 3));
  EXPECT_TRUE(m.is_reciprocal());
}

TEST(MatrixTextTest, HeaderIsOptionalAndDecimalsPreferFloat) {
  const auto text = pcm::parse_matrix_text("1 0.5\n2 1");
  EXPECT_EQ(text.preferred_mode(), pcm::NumericMode::Float);
  EXPECT_EQ(pcm::to_matrix<double>(text)(0, 1), 0.5);
  // The same tokens read exactly in rational mode.
  EXPECT_EQ(pcm::to_matrix<Rational>(text)(0, 1), q(1, 2));
}

TEST(MatrixTextTest, ErrorsCarryLineAndColumn) {
  try {
    pcm::to_matrix<Rational>(pcm::parse_matrix_text("2\n1 0\n2 1\n"));
    FAIL();
  } catch (const pcm::ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
    EXPECT_NE(std::string(e.what()).find("non-positive"), std::string::npos);
  }
  try {
    pcm::parse_matrix_text("1 2\n1 abc\n");
    FAIL();
  } catch (const pcm::ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
  try {
    pcm::parse_matrix_text("3\n1 2 3\n1 1 1\n");
    FAIL();
  } catch (const pcm::ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("expected 3 rows"), std::string::npos);
  }
  EXPECT_THROW(pcm::parse_matrix_text("1 2 3\n1 1\n"), pcm::ParseError);
  EXPECT_THROW(pcm::parse_matrix_text("# nothing\n\n"), pcm::ParseError);
  EXPECT_THROW(pcm::parse_matrix_text("2.5\n1 2\n1 1\n"), pcm::ParseError);
}

TEST(MatrixTextTest, FormatRoundTrips) {
  const auto m = pcm::reconstruct_consistent<Rational>(std::vector<Rational>{q(1, 2), q(1, 3), 6});
  const std::string s = pcm::format_matrix_text(m);
  EXPECT_EQ(s.substr(0, 2), "4\n");
  EXPECT_EQ(pcm::to_matrix<Rational>(pcm::parse_matrix_text(s)), m);

  const auto f = pcm::reconstruct_consistent<double>(std::vector<double>{0.1, 3.7, 1e-5});
  EXPECT_EQ(pcm::to_matrix<double>(pcm::parse_matrix_text(pcm::format_matrix_text(f))), f);
}

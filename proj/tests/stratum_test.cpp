#include "strata/stratum.hpp"

#include <gtest/gtest.h>

#include <random>

#include "strata/cover.hpp"
#include "strata/error.hpp"
#include "test_util.hpp"

namespace strata {
namespace {

using testing::random_quadratic;

TEST(StratumParse, QuadraticWithComponentLabel) {
  Stratum s = Stratum::parse("Q(9,-1)^irr");
  EXPECT_EQ(s.kind(), DiffKind::Quadratic);
  EXPECT_EQ(s.orders(), (std::vector<int>{9, -1}));
  EXPECT_EQ(s.component(), Component::Irr);
  EXPECT_EQ(s.genus(), 3);
  EXPECT_EQ(s.str(), "Q(9,-1)^irr");
}

TEST(StratumParse, ExponentShorthandExpands) {
  Stratum s = Stratum::parse("Q(-1^4)");
  EXPECT_EQ(s.orders(), (std::vector<int>{-1, -1, -1, -1}));
  EXPECT_EQ(s.genus(), 0);

  Stratum t = Stratum::parse("Q(7,-1^3)");
  EXPECT_EQ(t.orders(), (std::vector<int>{7, -1, -1, -1}));
  EXPECT_EQ(t, Stratum::parse("Q(7,-1,-1,-1)"));

  Stratum u = Stratum::parse("Q(3^2,-1^2)^nonhyp");
  EXPECT_EQ(u.orders(), (std::vector<int>{3, 3, -1, -1}));
  EXPECT_EQ(u.component(), Component::NonHyp);
}

TEST(StratumParse, AbelianSignatures) {
  Stratum s = Stratum::parse("H(2,2)^odd");
  EXPECT_EQ(s.kind(), DiffKind::Abelian);
  EXPECT_EQ(s.genus(), 3);
  EXPECT_EQ(s.component(), Component::Odd);

  EXPECT_EQ(Stratum::parse("H(4)").genus(), 3);
  EXPECT_EQ(Stratum::parse("H(1,1)").genus(), 2);
  // Abelian order 0 entries are marked points and need no flag.
  EXPECT_EQ(Stratum::parse("H(2,0)").genus(), 2);
}

TEST(StratumParse, SyntaxErrorsReportPosition) {
  try {
    Stratum::parse("Q(3,)");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  try {
    Stratum::parse("X(3,1)");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 0u);
  }
  EXPECT_THROW(Stratum::parse("Q(3,1"), ParseError);
  EXPECT_THROW(Stratum::parse("Q()"), ParseError);
  EXPECT_THROW(Stratum::parse("Q(3,1)x"), ParseError);
  EXPECT_THROW(Stratum::parse("Q(3,1)^bogus"), ParseError);
  EXPECT_THROW(Stratum::parse("Q(1^0,3)"), ParseError);
  EXPECT_THROW(Stratum::parse(""), ParseError);
}

TEST(StratumParse, AcceptsNonHypSpellings) {
  EXPECT_EQ(Stratum::parse("Q(6,-1,-1)^nonhyp").component(), Component::NonHyp);
  EXPECT_EQ(Stratum::parse("Q(6,-1,-1)^non-hyp").component(), Component::NonHyp);
}

TEST(StratumValidation, QuadraticRules) {
  // Order sum must be divisible by four.
  EXPECT_THROW(Stratum::parse("Q(1,1)"), ValidationError);
  // Orders below -1 are invalid.
  EXPECT_THROW(Stratum::parse("Q(-2,6)"), ValidationError);
  // Genus must be non-negative: sum >= -4.
  EXPECT_THROW(Stratum::parse("Q(-1^8)"), ValidationError);
  // Marked points (order 0) require opting in.
  EXPECT_THROW(Stratum::parse("Q(0,4)"), ValidationError);
  EXPECT_EQ(Stratum::parse("Q(0,4)", /*allow_marked=*/true).genus(), 2);
  // Valid boundary case: the pillowcase.
  EXPECT_EQ(Stratum::parse("Q(-1,-1,-1,-1)").genus(), 0);
}

TEST(StratumValidation, AbelianRules) {
  EXPECT_THROW(Stratum::parse("H(3)"), ValidationError);   // odd sum
  EXPECT_THROW(Stratum::parse("H(-1,3)"), ValidationError);  // negative order
  EXPECT_EQ(Stratum::parse("H(0,0)").genus(), 1);
}

TEST(Stratum, GenusExamples) {
  EXPECT_EQ(Stratum::parse("Q(9,-1)").genus(), 3);
  EXPECT_EQ(Stratum::parse("Q(-1,-1,-1,-1)").genus(), 0);
  EXPECT_EQ(Stratum::parse("H(4)").genus(), 3);
  EXPECT_EQ(Stratum::parse("Q(12)").genus(), 4);
  EXPECT_EQ(Stratum::parse("Q(5,4,3)").genus(), 4);
}

TEST(Stratum, DerivedCounts) {
  Stratum s = Stratum::parse("Q(6,3,-1)");
  EXPECT_EQ(s.odd_count(), 2);
  EXPECT_EQ(s.pole_count(), 1);
  EXPECT_EQ(s.k_values(), (std::vector<int>{3, 2, 0}));
  EXPECT_EQ(s.g_eff(), 3);

  Stratum t = Stratum::parse("Q(7,-1^3)");
  EXPECT_EQ(t.k_values(), (std::vector<int>{4, 0, 0, 0}));
  EXPECT_EQ(t.g_eff(), 3);
  EXPECT_EQ(t.genus(), 2);
}

TEST(Stratum, CanonicalFormAndPrinting) {
  Stratum s = Stratum::parse("Q(-1,3,6)^reg");
  EXPECT_EQ(s.canonical().str(), "Q(6,3,-1)^reg");
  EXPECT_EQ(s.canonical().component(), Component::Reg);
  EXPECT_TRUE(s.same_multiset(Stratum::parse("Q(6,3,-1)")));
  EXPECT_FALSE(s.same_multiset(Stratum::parse("Q(6,3,-1,0)", true)));

  // Collapsed printing groups consecutive repeats.
  EXPECT_EQ(Stratum::parse("Q(7,-1,-1,-1)").str(/*collapse=*/true), "Q(7,-1^3)");
  EXPECT_EQ(Stratum::parse("Q(3,3,-1,-1)").str(true), "Q(3^2,-1^2)");
  EXPECT_EQ(Stratum::parse("Q(9,-1)^irr").str(true), "Q(9,-1)^irr");
}

TEST(Stratum, ParsePrintIdentityOnRandomSignatures) {
  std::mt19937 rng(7u);
  for (int trial = 0; trial < 300; ++trial) {
    Stratum s = random_quadratic(rng);
    EXPECT_EQ(Stratum::parse(s.str()), s);
    EXPECT_EQ(Stratum::parse(s.str(true)), s);
    EXPECT_TRUE(s.canonical().same_multiset(s));
  }
}

// ---- canonical double cover -------------------------------------------------

TEST(CoverData, WorkedExamples) {
  // Q(6,3,-1): even 6 -> two zeros of order 3; odd 3 -> order 4; the pole
  // lifts to a regular (marked) point.
  CoverData c = cover_data(Stratum::parse("Q(6,3,-1)"));
  EXPECT_EQ(c.cover.orders(), (std::vector<int>{3, 3, 4, 0}));
  EXPECT_EQ(c.marked_points(), 1);
  EXPECT_EQ(c.g, 3);
  EXPECT_EQ(c.g_eff, 3);
  EXPECT_EQ(c.cover_genus(), 6);
  EXPECT_EQ(c.k, (std::vector<int>{3, 2, 0}));
  EXPECT_EQ(c.odd_count, 2);

  CoverData d = cover_data(Stratum::parse("Q(1,-1^5)"));
  EXPECT_EQ(d.cover.orders(), (std::vector<int>{2, 0, 0, 0, 0, 0}));
  EXPECT_EQ(d.marked_points(), 5);
  EXPECT_EQ(d.g, 0);
  EXPECT_EQ(d.g_eff, 2);
  EXPECT_EQ(d.cover_genus(), 2);

  CoverData e = cover_data(Stratum::parse("Q(4,4)"));
  EXPECT_EQ(e.cover.orders(), (std::vector<int>{2, 2, 2, 2}));
  EXPECT_EQ(e.marked_points(), 0);
  EXPECT_EQ(e.g, 3);
  EXPECT_EQ(e.g_eff, 2);
  EXPECT_EQ(e.cover_genus(), 5);
}

TEST(CoverData, RejectsAbelianAndDegenerateInput) {
  EXPECT_THROW(cover_data(Stratum::parse("H(4)")), ValidationError);
  // A marked-points-only torus signature has effective genus zero, which the
  // double-cover construction rejects.
  EXPECT_THROW(cover_data(Stratum::parse("Q(0,0)", true)), ValidationError);
}

TEST(CoverData, RandomSignatureIdentities) {
  std::mt19937 rng(11u);
  for (int trial = 0; trial < 500; ++trial) {
    Stratum s = random_quadratic(rng);
    CoverData c = cover_data(s);
    int ksum = 0;
    for (int k : c.k) ksum += k;
    EXPECT_EQ(ksum, c.g_eff + c.g - 1);
    long long cover_sum = 0;
    for (int m : c.cover.orders()) cover_sum += m;
    EXPECT_EQ(cover_sum, 2LL * (c.g + c.g_eff) - 2);
    EXPECT_EQ(c.cover.orders().size(),
              s.orders().size() + static_cast<size_t>(s.orders().size() - s.odd_count()));
    EXPECT_GE(c.g_eff, 1);
  }
}

}  // namespace
}  // namespace strata

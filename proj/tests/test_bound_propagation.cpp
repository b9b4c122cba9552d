#include "nefcone/bound_propagation.hpp"
#include "nefcone/cone_geometry.hpp"
#include "nefcone/errors.hpp"

#include <gtest/gtest.h>

using namespace nefcone;

namespace {

SeshadriDatum datum(std::int64_t m, Rational lower) { return {m, std::move(lower), "test"}; }

const UpperBound* find_rule(const TauReport& r, const std::string& rule) {
  for (const auto& u : r.uppers)
    if (u.rule == rule) return &u;
  return nullptr;
}

}  // namespace

TEST(Corollary, GoldenValues) {
  EXPECT_EQ(corollary_bound(Genus(5), datum(5, Rational(2, 5))), Rational(5, 2));
  EXPECT_EQ(corollary_bound(Genus(9), datum(9, Rational(1, 3))), Rational(3));
  EXPECT_EQ(corollary_bound(Genus(1), datum(1, Rational(1))), low_genus_tau(Genus(1)));
  EXPECT_THROW(corollary_bound(Genus(5), datum(4, Rational(1, 2))), PreconditionError);
}

TEST(SeshadriDatumValidation, RangeChecks) {
  EXPECT_THROW(datum(5, Rational(0)).validate(), PreconditionError);
  EXPECT_THROW(datum(5, Rational(3, 2)).validate(), PreconditionError);
  EXPECT_THROW(datum(0, Rational(1, 2)).validate(), PreconditionError);
  EXPECT_NO_THROW(datum(1, Rational(1)).validate());
}

TEST(NagataStyle, GoldenValues) {
  const Bound ten = nagata_style_bound(Genus(10));
  EXPECT_FALSE(ten.is_rational());
  EXPECT_EQ(ten.squared(), 11);
  EXPECT_EQ(ten.approx(), "3.316625");  // sqrt(10)/sqrt(10/11)
  EXPECT_EQ(nagata_style_bound(Genus(15)), Rational(4));
  EXPECT_TRUE(nagata_style_bound(Genus(15)).is_rational());
  EXPECT_THROW(nagata_style_bound(Genus(9)), PreconditionError);
}

TEST(NagataStyle, SquareIsGPlusOne) {
  for (std::int64_t g = 10; g <= 200; ++g) {
    // sqrt(g) / sqrt(1 - 1/(g+1)) squared is g / (g/(g+1))
    const Rational original = Rational(g) / (Rational(1) - Rational(1, g + 1));
    ASSERT_EQ(nagata_style_bound(Genus(g)).squared(), original);
    ASSERT_EQ(nagata_style_bound(Genus(g)).squared(), g + 1);
  }
}

TEST(Kouvidakis, GoldenValues) {
  EXPECT_EQ(kouvidakis_bound(Genus(10)), Rational(10, 3));
  EXPECT_EQ(kouvidakis_bound(Genus(9)), Rational(3));
  EXPECT_EQ(kouvidakis_bound(Genus(9)), tau_lower_bound(Genus(9)));
  EXPECT_EQ(kouvidakis_bound(Genus(5)), Rational(5, 2));
  EXPECT_THROW(kouvidakis_bound(Genus(0)), PreconditionError);
}

TEST(PropagateStep, TransferRule) {
  EXPECT_EQ(propagate_step(Genus(5), 16, 7, Bound::rational(2), true), Rational(16, 7));
  EXPECT_THROW(propagate_step(Genus(5), 14, 7, Bound::rational(2), true), PreconditionError);
  EXPECT_THROW(propagate_step(Genus(5), 16, 7, Bound::rational(2), false), PreconditionError);
  EXPECT_THROW(propagate_step(Genus(5), 16, 7, Bound::rational(Rational(7, 3)), true), PreconditionError);
}

TEST(Chain, MatchesCorollary) {
  std::vector<ChainStep> steps;
  const Bound chained = chain_from_plane(Genus(5), datum(5, Rational(2, 5)), &steps);
  EXPECT_EQ(chained, Rational(5, 2));
  EXPECT_EQ(chained, corollary_bound(Genus(5), datum(5, Rational(2, 5))));
  ASSERT_EQ(steps.size(), 5u);
  EXPECT_EQ(steps.back().genus, 5);
}

TEST(Chain, LowGenusCrossChecks) {
  EXPECT_EQ(chain_from_plane(Genus(4), datum(4, Rational(1, 2))), low_genus_tau(Genus(4)));
  // at g = 3 the corollary only gives 2, worse than the true 9/5
  const Bound three = chain_from_plane(Genus(3), datum(3, Rational(1, 2)));
  EXPECT_EQ(three, Rational(2));
  EXPECT_GT(three, low_genus_tau(Genus(3)));
}

TEST(Chain, FailingStepIsNamed) {
  // 1/eps = 2 is not above sqrt(4) at the step from genus 4 to 5
  try {
    chain_from_plane(Genus(6), datum(6, Rational(1, 2)));
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("chain step 5"), std::string::npos) << e.what();
  }
}

TEST(ChainProperty, AlwaysEqualsCorollaryWhenItSucceeds) {
  for (std::int64_t g = 1; g <= 30; ++g)
    for (std::int64_t q = 1; q <= 12; ++q)
      for (std::int64_t p = 1; p <= q; ++p) {
        const auto d = datum(g, Rational(p, q));
        try {
          const Bound c = chain_from_plane(Genus(g), d);
          ASSERT_EQ(c, corollary_bound(Genus(g), d));
        } catch (const PreconditionError&) {
        }
      }
}

TEST(Registry, BuiltinLookup) {
  const Registry r = Registry::builtin();
  ASSERT_TRUE(r.lookup(5));
  EXPECT_EQ(r.lookup(5)->lower, Rational(2, 5));
  ASSERT_TRUE(r.lookup(16));
  EXPECT_EQ(r.lookup(16)->lower, Rational(1, 4));
  EXPECT_FALSE(r.lookup(4));  // k = 2 is below the Nagata range
  EXPECT_FALSE(r.lookup(10));
  EXPECT_FALSE(Registry::empty().lookup(9));
}

TEST(TauReport, GenusFive) {
  const TauReport r = tau_report(Genus(5), Registry::builtin());
  EXPECT_EQ(r.lower, Bound::sqrt(Rational(5)));
  ASSERT_TRUE(r.best_upper);
  EXPECT_EQ(*r.best_upper, Rational(16, 7));
  ASSERT_TRUE(find_rule(r, "exclusion_certificate"));
  ASSERT_TRUE(find_rule(r, "plane_seshadri_corollary"));
  EXPECT_EQ(find_rule(r, "plane_seshadri_corollary")->value, Rational(5, 2));
  EXPECT_EQ(find_rule(r, "kouvidakis")->value, Rational(5, 2));
  EXPECT_LT(*r.best_upper, find_rule(r, "plane_seshadri_corollary")->value);
}

TEST(TauReport, GenusTenAndTwo) {
  const TauReport ten = tau_report(Genus(10), Registry::builtin());
  EXPECT_EQ(*ten.best_upper, Bound::sqrt(Rational(11)));
  EXPECT_LT(Rational(11), Rational(100, 9));

  const TauReport two = tau_report(Genus(2), Registry::builtin());
  EXPECT_EQ(two.lower, Bound::sqrt(Rational(2)));
  EXPECT_EQ(*two.best_upper, Rational(2));
}

TEST(TauReport, RejectsUncertifiedTauD) {
  Registry r = Registry::empty();
  // tau_D = 9/4 is a legal value at genus 5 but below the certified 16/7
  r.add_certificate({5, Rational(9, 4), 5, 2});
  const TauReport report = tau_report(Genus(6), r);
  EXPECT_FALSE(find_rule(report, "exclusion_certificate"));
  ASSERT_EQ(report.notes.size(), 1u);
  EXPECT_NE(report.notes.front().find("rejected"), std::string::npos);
}

TEST(TauReport, RejectsFailingCertificate) {
  Registry r = Registry::empty();
  r.add_certificate({4, Rational(2), 9, 4});
  const TauReport report = tau_report(Genus(5), r);
  EXPECT_FALSE(find_rule(report, "exclusion_certificate"));
  EXPECT_EQ(*report.best_upper, Rational(5, 2));
}

TEST(TauReportProperty, BestUpperAboveLower) {
  const Registry reg = Registry::builtin();
  for (const auto& r : emit_table(120, reg)) {
    ASSERT_TRUE(r.best_upper);
    EXPECT_GE(*r.best_upper, r.lower) << "g=" << r.genus.value();
    for (const auto& u : r.uppers) EXPECT_LE(*r.best_upper, u.value);
  }
}

TEST(TauReportProperty, PerfectSquaresClose) {
  const Registry reg = Registry::builtin();
  for (std::int64_t k = 3; k <= 12; ++k) {
    const TauReport r = tau_report(Genus(k * k), reg);
    EXPECT_TRUE(r.lower.is_rational());
    EXPECT_EQ(*r.best_upper, r.lower);
    EXPECT_EQ(*r.best_upper, Rational(k));
  }
}

TEST(EmitTable, LowGenusRows) {
  const auto rows = emit_table(12, Registry::builtin());
  ASSERT_EQ(rows.size(), 13u);
  const std::vector<Rational> table = {0, 1, 2, Rational(9, 5), 2};
  for (std::size_t g = 0; g < table.size(); ++g) {
    ASSERT_TRUE(find_rule(rows[g], "low_genus_table"));
    EXPECT_EQ(find_rule(rows[g], "low_genus_table")->value, table[g]);
    EXPECT_EQ(*rows[g].best_upper, table[g]);
  }
  EXPECT_EQ(rows[9].lower, Rational(3));
  EXPECT_EQ(*rows[9].best_upper, Rational(3));
  EXPECT_EQ(*rows[10].best_upper, Bound::sqrt(Rational(11)));
}

#include <gtest/gtest.h>

#include <sstream>

#include "descent3/error.hpp"
#include "descent3/report.hpp"
#include "descent3/report_io.hpp"

using namespace descent3;

namespace {

ReportConfig quick() {
  ReportConfig cfg;
  cfg.point_bound = 2000;
  cfg.hasse.global_bound = 200;
  return cfg;
}

}  // namespace

TEST(R3, FromFields) {
  EXPECT_EQ(r3_from_fields(-4897363), 3);
  EXPECT_EQ(r3_from_fields(48035713), 2);
  EXPECT_EQ(r3_from_fields(-23), 1);
}

TEST(Selmer, Ranks) {
  EXPECT_EQ(selmer_ranks(-4897363, 3), std::make_pair(3, 3));
  EXPECT_EQ(selmer_ranks(1129, 1), std::make_pair(1, 2));
  EXPECT_EQ(selmer_ranks(48035713, 2), std::make_pair(2, 3));
  try {
    selmer_ranks(-4, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ExcludedDiscriminant);
  }
}

TEST(RankBounds, Branches) {
  RankBounds a = rank_bounds(-4897363, 3, 3);
  EXPECT_EQ(a.lb, 4);
  EXPECT_EQ(a.ub, 6);
  EXPECT_EQ(a.note, ParityNote::OddMonicNegative);
  EXPECT_TRUE(a.conditional);
  RankBounds b = rank_bounds(1129, 1, 1);
  EXPECT_EQ(b.lb, 1);
  EXPECT_EQ(b.ub, 3);
  RankBounds c = rank_bounds(-23, 1, 1);
  EXPECT_EQ(c.lb, 2);
  EXPECT_EQ(c.ub, 2);
  for (int r3 = 1; r3 <= 4; ++r3) {
    for (int rm = 1; rm <= r3; ++rm) {
      for (long D : {-4897363L, 48035713L}) {
        RankBounds rb = rank_bounds(D, r3, rm);
        EXPECT_LE(rb.lb, rb.ub);
        EXPECT_EQ(rb.ub, D < 0 ? 2 * r3 : 2 * r3 + 1);
        EXPECT_GE(rb.lb, rm);
      }
    }
  }
  auto code = [](int r3, int rm) {
    try {
      rank_bounds(-23, r3, rm);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::ZeroInput;
  };
  EXPECT_EQ(code(1, 2), Errc::InconsistentInputs);
  EXPECT_EQ(code(1, 0), Errc::InconsistentInputs);
}

TEST(ParityPairs, Consistency) {
  auto p = parity_consistent_pairs(1, 3, 3);
  EXPECT_EQ(p, (std::vector<ShaPair>{{1, 2}, {3, 0}}));
  auto q = parity_consistent_pairs(2, 4, 4);
  EXPECT_EQ(q, (std::vector<ShaPair>{{2, 2}, {4, 0}}));
  for (const auto& x : parity_consistent_pairs(0, 9, 9)) EXPECT_EQ(x.sha_dim % 2, 0);
}

TEST(Report, Minus23) {
  AnalysisReport r = build_report(make_seed(1, 1), quick());
  EXPECT_EQ(r.r3, 1);
  EXPECT_EQ(r.r3_monic_lb, 1);
  EXPECT_EQ(r.rank_lb, 2);
  EXPECT_EQ(r.rank_ub, 2);
  EXPECT_EQ(r.sha_lambda_rank_conditional, 0);
  ASSERT_TRUE(r.class_group);
  EXPECT_EQ(r.class_group->three_rank, 1);
  ASSERT_EQ(r.hasse.size(), 1u);
  EXPECT_EQ(r.hasse[0].kind, VerdictKind::HasGlobalPoint);
}

TEST(Report, RankSix) {
  ReportConfig cfg = quick();
  cfg.point_bound = 60000;
  AnalysisReport r = build_report(make_seed(-34, 419), cfg);
  EXPECT_EQ(r.r3, 3);
  EXPECT_EQ(r.classes.size(), 13u);
  EXPECT_EQ(r.selmer_lambda, 3);
  EXPECT_EQ(r.selmer_lambda_dual, 3);
  EXPECT_EQ(r.dim_quotient_lambda, 3);
  EXPECT_EQ(r.dim_mod_3, 6);
  EXPECT_EQ(r.rank_lb, 6);
  EXPECT_EQ(r.rank_ub, 6);
  EXPECT_EQ(r.rank_lb_unconditional, 6);
  EXPECT_TRUE(r.r3_monic_exact);
  EXPECT_LE(r.dim_quotient_lambda, r.selmer_lambda);
}

TEST(Report, ViolationExample) {
  AnalysisReport r = build_report(make_seed(229, 3), quick());
  EXPECT_EQ(r.r3, 2);
  EXPECT_EQ(r.r3_monic_lb, 1);
  EXPECT_EQ(r.sha_lambda_rank_conditional, 1);
  EXPECT_FALSE(r.class_group);
  int cert = 0;
  for (const auto& v : r.hasse) cert += v.kind == VerdictKind::CertifiedViolation;
  EXPECT_EQ(cert, 3);
  EXPECT_TRUE(r.parity_conditional);
}

TEST(Report, TwoRoutesAgreeOnSmallSeeds) {
  for (const auto& s : scan_collect(-12, 12, 1, 9)) {
    ReportConfig cfg = quick();
    cfg.run_hasse = false;
    AnalysisReport r = build_report(s, cfg);
    EXPECT_EQ(r.r3_monic_from_classes, r.r3_monic_from_points) << to_string(s.D);
    EXPECT_LE(r.rank_lb, r.rank_ub);
    EXPECT_GE(r.rank_lb, r.dim_mod_3);
    EXPECT_EQ(r.selmer_lambda, r.r3);
    if (s.D < 0) {
      EXPECT_EQ(r.class_group->three_rank, r.r3) << to_string(s.D);
    }
  }
}

TEST(ReportIo, JsonRoundTrip) {
  for (auto s : {make_seed(1, 1), make_seed(229, 3), make_seed(7, 3), make_seed(-34, 419)}) {
    AnalysisReport r = build_report(s, quick());
    std::string j = report_to_json(r);
    AnalysisReport back = report_from_json(j);
    EXPECT_EQ(report_to_json(back), j);
    EXPECT_EQ(back.points, r.points);
    EXPECT_EQ(back.classes, r.classes);
    EXPECT_EQ(back.seed, r.seed);
    EXPECT_EQ(report_to_json(back, 2), report_to_json(r, 2));
  }
}

TEST(ReportIo, JsonShape) {
  AnalysisReport r = build_report(make_seed(7, 3), quick());
  std::string j = report_to_json(r);
  for (const char* key : {"\"seed\"", "\"r3\"", "\"classes\"", "\"monic_flags\"", "\"r3_monic_lb\"",
                          "\"selmer_lambda\"", "\"selmer_lambda_dual\"", "\"points\"", "\"dim_quotient_lambda\"",
                          "\"dim_mod_3\"", "\"rank_lb\"", "\"rank_ub\"", "\"sha_lambda_rank_conditional\"",
                          "\"parity_note\"", "\"hasse\"", "\"provenance\""}) {
    EXPECT_NE(j.find(key), std::string::npos) << key;
  }
  EXPECT_NE(j.find("\"D\":\"1129\""), std::string::npos);
  EXPECT_NE(j.find("\"x\":\"84\""), std::string::npos);
  EXPECT_THROW(report_from_json("{\"seed\": 1}"), Error);
  EXPECT_THROW(report_from_json("not json"), Error);
}

TEST(ReportIo, CsvAndText) {
  AnalysisReport r = build_report(make_seed(7, 3), quick());
  auto count_cols = [](const std::string& line) {
    int cols = 1;
    bool quoted = false;
    for (char c : line) {
      if (c == '"') quoted = !quoted;
      if (c == ',' && !quoted) ++cols;
    }
    return cols;
  };
  EXPECT_EQ(count_cols(report_csv_header()), count_cols(report_to_csv(r)));
  EXPECT_EQ(report_to_csv(r).rfind("1129,7,3,1,", 0), 0u);
  std::string t = report_to_text(r);
  EXPECT_NE(t.find("conditional"), std::string::npos);
}

TEST(Report, ReducibleSeedHasNoClasses) {
  // x^3 - 2x + 1 = (x - 1)(x^2 + x - 1)
  AnalysisReport r = build_report(make_seed(2, 1), quick());
  EXPECT_EQ(r.seed.D, 5);
  EXPECT_TRUE(r.classes.empty());
  EXPECT_EQ(r.r3, 0);
  EXPECT_EQ(r.r3_monic_lb, 0);
  EXPECT_EQ(r.selmer_lambda_dual, 1);
  EXPECT_EQ(r.rank_lb, 1);
  EXPECT_EQ(r.rank_ub, 1);
}

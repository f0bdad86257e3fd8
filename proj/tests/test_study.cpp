#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "symdefect/control/registry.hpp"
#include "symdefect/study/csv.hpp"
#include "symdefect/study/study.hpp"

using namespace symdefect::study;
using symdefect::control::AdaptiveConfig;
using symdefect::control::make_method;
using symdefect::control::make_problem;
using symdefect::control::TraceEntry;
using symdefect::numkit::norm2;

namespace {
const double kNaN = std::numeric_limits<double>::quiet_NaN();

bool same(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }
}  // namespace

TEST(Study, DyadicLadder) {
  const auto l = dyadic_ladder(0.5, 4);
  ASSERT_EQ(l.size(), 4u);
  EXPECT_EQ(l[0], 0.5);
  EXPECT_EQ(l[3], 0.0625);
  EXPECT_THROW((void)dyadic_ladder(1.0, 0), std::invalid_argument);
  EXPECT_THROW((void)dyadic_ladder(-1.0, 3), std::invalid_argument);
}

TEST(Study, ObservedOrder) {
  EXPECT_DOUBLE_EQ(observed_order(0.2, 8e-3, 0.1, 1e-3), 3.0);
  EXPECT_DOUBLE_EQ(observed_order(1.0, 1.0, 0.25, 1.0 / 16.0), 2.0);
  EXPECT_TRUE(std::isnan(observed_order(0.2, 0.0, 0.1, 1e-3)));
  EXPECT_TRUE(std::isnan(observed_order(0.2, 1e-3, 0.1, -1.0)));
}

TEST(Csv, LocalRoundTripIsExact) {
  std::vector<ConvergenceRow> rows{{0.1, 1.0 / 3.0, kNaN, 2e-9, kNaN, false, ""},
                                   {0.05, 1e-300, 3.0000000000000004, M_PI, 5.123, false, ""},
                                   {0.025, kNaN, kNaN, kNaN, kNaN, true, "x"}};
  std::stringstream ss;
  write_csv(ss, rows);
  EXPECT_EQ(ss.str().substr(0, ss.str().find('\n')), "tau,err_norm,err_order,dev_norm,dev_order,status");
  const auto back = read_local_csv(ss);
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_TRUE(same(back[i].tau, rows[i].tau));
    EXPECT_TRUE(same(back[i].err_norm, rows[i].err_norm));
    EXPECT_TRUE(same(back[i].err_order, rows[i].err_order));
    EXPECT_TRUE(same(back[i].dev_norm, rows[i].dev_norm));
    EXPECT_TRUE(same(back[i].dev_order, rows[i].dev_order));
    EXPECT_EQ(back[i].failed, rows[i].failed);
  }
}

TEST(Csv, GlobalAndTraceRoundTrip) {
  std::vector<GlobalRow> rows{{0.5, 1e-3, kNaN, 1e-5, kNaN, false, ""},
                              {0.25, 2.5e-4, 2.0, 1.5625e-7, 6.0, false, ""}};
  std::stringstream g;
  write_csv(g, rows);
  const auto gb = read_global_csv(g);
  ASSERT_EQ(gb.size(), 2u);
  EXPECT_EQ(gb[1].corrected_err, 1.5625e-7);
  EXPECT_TRUE(std::isnan(gb[0].global_order));

  std::vector<TraceEntry> trace{{0.0, 0.01, 3e-11, true}, {0.01, 0.04, 2e-9, false}};
  std::stringstream t;
  write_csv(t, trace);
  const auto tb = read_trace_csv(t);
  ASSERT_EQ(tb.size(), 2u);
  EXPECT_EQ(tb[1].tau, 0.04);
  EXPECT_FALSE(tb[1].accepted);
  EXPECT_TRUE(tb[0].accepted);
}

TEST(Csv, RejectsMalformedInput) {
  std::stringstream bad_header("tau,err\n0.1,1\n");
  EXPECT_THROW((void)read_local_csv(bad_header), std::runtime_error);
  std::stringstream short_row("tau,err_norm,err_order,dev_norm,dev_order,status\n0.1,1,2\n");
  EXPECT_THROW((void)read_local_csv(short_row), std::runtime_error);
  std::stringstream bad_num("t,tau,est_norm,accepted\nabc,1,1,1\n");
  EXPECT_THROW((void)read_trace_csv(bad_num), std::runtime_error);
}

TEST(Format, TablesShowRoundedValues) {
  const std::vector<ConvergenceRow> rows{{0.03125, 4.7531e-06, kNaN, 1.16e-8, kNaN, false, ""},
                                         {0.015625, 5.9e-7, 2.9812, 1.2e-9, 4.59, true, "boom"}};
  const std::string s = format_table(rows);
  EXPECT_NE(s.find("4.753e-06"), std::string::npos);
  EXPECT_NE(s.find("2.98"), std::string::npos);
  EXPECT_NE(s.find("FAILED: boom"), std::string::npos);
  const std::string g = format_table(std::vector<GlobalRow>{{0.5, 1e-3, kNaN, 1e-5, 4.0, false, ""}});
  EXPECT_NE(g.find("1.000e-05"), std::string::npos);
  EXPECT_NE(g.find("4.00"), std::string::npos);
  const std::string t = format_table(std::vector<TraceEntry>{{0.5, 0.01, 1e-11, true}});
  EXPECT_NE(t.find("yes"), std::string::npos);
}

TEST(Study, LocalStudyOnToyProblem) {
  const auto setup = make_problem("toy-split");
  const auto m = make_method(setup, "strang");
  const auto rows = run_local_study(setup, m, dyadic_ladder(0.1, 4), setup.initial_state, 0.0);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_TRUE(std::isnan(rows[0].err_order));
  EXPECT_NEAR(rows[3].err_order, 3.0, 0.1);
  EXPECT_NEAR(rows[3].dev_order, 5.0, 0.2);
  EXPECT_FALSE(any_failed(rows));
}

TEST(Study, GlobalSingleStepMatchesLocal) {
  const auto setup = make_problem("toy-split");
  const auto m = make_method(setup, "strang");
  const double tau = 0.1;
  const auto g = run_global_study(setup, m, {tau}, setup.initial_state, 0.0, tau);
  const auto l = run_local_study(setup, m, {tau}, setup.initial_state, 0.0);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_NEAR(g[0].global_err, l[0].err_norm, 1e-16);
  EXPECT_NEAR(g[0].corrected_err, l[0].dev_norm, 1e-16);
}

TEST(Study, NonDividingStepIsReportedAsFailure) {
  const auto setup = make_problem("toy-split");
  const auto m = make_method(setup, "strang");
  const auto rows = run_global_study(setup, m, {0.3, 0.25}, setup.initial_state, 0.0, 1.0);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_TRUE(rows[0].failed);
  EXPECT_FALSE(rows[0].message.empty());
  EXPECT_FALSE(rows[1].failed);
  EXPECT_TRUE(any_failed(rows));
}

TEST(Study, GlobalOrdersOnToyProblem) {
  const auto setup = make_problem("toy-split");
  const auto m = make_method(setup, "strang");
  const auto rows = run_global_study(setup, m, dyadic_ladder(0.1, 4), setup.initial_state, 0.0, 1.0);
  EXPECT_NEAR(rows[3].global_order, 2.0, 0.05);
  EXPECT_NEAR(rows[3].corrected_order, 4.0, 0.15);
}

TEST(Study, AdaptiveToleranceSweep) {
  const auto setup = make_problem("scalar-quadratic");
  const auto m = make_method(setup, "imr");
  AdaptiveConfig c;
  c.tol = 1e-6;
  c.tau_max = 0.05;
  c.tau_init = 0.05;
  const auto r = run_adaptive(setup, m, c, 1.0);
  ASSERT_TRUE(r.ok());
  EXPECT_NEAR(r.state[0].real(), 0.5, 1e-3);
  const auto looser = [&] {
    AdaptiveConfig l = c;
    l.tol = 1e-4;
    return run_adaptive(setup, m, l, 1.0);
  }();
  EXPECT_LE(looser.accepted().size(), r.accepted().size());
}

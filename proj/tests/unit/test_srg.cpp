#include <doctest.h>

#include "fixtures.hpp"

using namespace chipfire;
using srg::Rational;
using srg::SrgParams;

TEST_CASE("recognize") {
  CHECK(srg::recognize(petersen().graph) == SrgParams{10, 3, 0, 1});
  CHECK_FALSE(srg::recognize(fixtures::path(3)));
  CHECK(srg::recognize(paley(13).graph) == SrgParams{13, 6, 2, 3});
  CHECK_FALSE(srg::recognize(complete(5).graph));
  CHECK_FALSE(srg::recognize(cycle(6).graph));  // regular but c varies
  CHECK_FALSE(srg::recognize(gnp(20, 0.3, 2).graph));
}

TEST_CASE("theta and tau") {
  auto pt = srg::theta_tau({10, 3, 0, 1});
  CHECK(pt.rational);
  CHECK(pt.theta.rational == 1);
  CHECK(pt.tau.rational == -2);

  auto st = srg::theta_tau({27, 16, 10, 8});
  CHECK(st.rational);
  CHECK(st.theta.rational == 4);
  CHECK(st.tau.rational == -2);

  auto pa = srg::theta_tau({109, 54, 26, 27});
  CHECK_FALSE(pa.rational);
  CHECK(pa.theta.radicand == 109);
  CHECK(pa.theta.rational == Rational(-1, 2));
  CHECK(pa.theta.coeff == Rational(1, 2));
  CHECK(pa.theta.to_double() == doctest::Approx((-1.0 + std::sqrt(109.0)) / 2.0));
  CHECK(pa.theta.sign() > 0);
  CHECK(pa.tau.sign() < 0);
}

TEST_CASE("quadratic surd arithmetic") {
  using srg::QuadraticSurd;
  QuadraticSurd r2{0, 1, 2};  // sqrt 2
  auto two = r2 * r2;
  CHECK(two.is_rational());
  CHECK(two.rational == 2);
  CHECK((r2 - r2) == QuadraticSurd::of(0));
  QuadraticSurd four{0, 1, 16};
  CHECK(four == QuadraticSurd::of(4));
  QuadraticSurd near{Rational(-7, 5), 1, 2};  // sqrt 2 - 1.4 > 0
  CHECK(near.sign() > 0);
  QuadraticSurd r3{0, 1, 3};
  CHECK_THROWS_AS(r2 + r3, std::domain_error);
}

TEST_CASE("exact L-dagger entries") {
  auto sc = srg::ldag_entries({27, 16, 10, 8});
  CHECK(sc.nonadj == Rational(-30, 5832));
  CHECK(sc.o() == Rational(5, 972));
  CHECK(sc.diag == Rational(29, 486));

  auto t21 = srg::ldag_entries({210, 38, 19, 4});
  CHECK(t21.diag == Rational(4769, 176400));
  CHECK(t21.f() > Rational(1, 37));

  auto pa = srg::ldag_entries({109, 54, 26, 27});
  CHECK(pa.adj == 0);
  CHECK(pa.nonadj == Rational(-109, 320787));

  auto pe = srg::ldag_entries({10, 3, 0, 1});
  CHECK(pe.diag == Rational(33, 100));
  CHECK(pe.adj == Rational(3, 100));
  CHECK(pe.nonadj == Rational(-7, 100));

  CHECK_THROWS_AS(srg::ldag_entries({6, 2, 1, 0}), std::invalid_argument);
}

TEST_CASE("exact entries: f > |off-diagonal| and within the f/o estimates") {
  for (const auto& gg : fixtures::srg_suite()) {
    CAPTURE(gg.tag.display_name);
    auto p = *gg.tag.claimed_srg;
    auto e = srg::ldag_entries(p);
    CHECK(e.diag > boost::multiprecision::abs(e.adj));
    CHECK(e.diag > boost::multiprecision::abs(e.nonadj));
    auto est = srg::fo_estimates(p);
    CHECK(e.diag <= est.f_bound);
    CHECK(e.o() <= est.o_bound);
  }
}

TEST_CASE("f/o estimates") {
  auto pe = srg::fo_estimates({10, 3, 0, 1});
  CHECK(pe.f_bound == 1);
  CHECK(pe.o_bound == Rational(1, 5));

  auto sc = srg::fo_estimates({27, 16, 10, 8});
  CHECK(sc.f_bound == Rational(1, 14));
  CHECK(sc.o_bound == Rational(1, 108));
  CHECK(Rational(5, 972) <= sc.o_bound);

  auto t21 = srg::fo_estimates({210, 38, 19, 4});
  CHECK(t21.f_bound == Rational(1, 36));
  CHECK(Rational(4769, 176400) <= t21.f_bound);

  CHECK_THROWS_AS(srg::fo_estimates({5, 2, 0, 1}), std::invalid_argument);
}

TEST_CASE("lemma suite") {
  for (const auto& gg : fixtures::srg_suite()) {
    CAPTURE(gg.tag.display_name);
    auto rep = srg::lemma_suite(*gg.tag.claimed_srg);
    for (const auto& c : rep.checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.status == srg::CheckStatus::Pass);
    }
    CHECK_FALSE(rep.taylor_equality);
  }

  auto pentagon = srg::lemma_suite({5, 2, 0, 1});
  CHECK(pentagon.taylor_equality);
  CHECK(pentagon.all_passed());
  CHECK(pentagon.find("d_upper")->status == srg::CheckStatus::Skipped);
  CHECK(pentagon.find("taylor_levingstone")->status == srg::CheckStatus::Pass);

  auto petersen_rep = srg::lemma_suite({10, 3, 0, 1});
  CHECK(petersen_rep.find("d_upper")->status == srg::CheckStatus::Pass);  // -1 <= -1

  auto infeasible = srg::lemma_suite({10, 3, 1, 1});
  CHECK_FALSE(infeasible.all_passed());
  CHECK(infeasible.find("feasibility")->status == srg::CheckStatus::Fail);
}

TEST_CASE("parameter identities over feasible SRG parameter sets") {
  // Triangular and Paley families give infinite supplies of feasible sets.
  std::vector<SrgParams> params;
  for (std::int64_t m = 5; m <= 40; ++m) params.push_back({m * (m - 1) / 2, 2 * (m - 2), m - 2, 4});
  for (std::int64_t q : {13, 17, 29, 37, 41, 53, 61, 73, 89, 97, 101, 109, 113}) {
    params.push_back({q, (q - 1) / 2, (q - 5) / 4, (q - 1) / 4});
  }
  for (const auto& p : params) {
    CAPTURE(p.n);
    CAPTURE(p.k);
    auto tt = srg::theta_tau(p);
    auto K = srg::QuadraticSurd::of(p.k);
    CHECK((tt.theta + tt.tau) == srg::QuadraticSurd::of(p.d()));
    CHECK((tt.theta * tt.tau) == srg::QuadraticSurd::of(-(p.k - p.c)));
    CHECK(((K - tt.theta) * (K - tt.tau)) == srg::QuadraticSurd::of(p.n * p.c));
    CHECK(srg::lemma_suite(p).all_passed());
    // o <= 2/(nc) and f <= 1/(k-2)
    auto e = srg::ldag_entries(p);
    auto est = srg::fo_estimates(p);
    CHECK(e.o() <= est.o_bound);
    CHECK(e.f() <= est.f_bound);
  }
}

TEST_CASE("rational formatting") {
  CHECK(srg::to_string(Rational(-30, 5832)) == "-5/972");
  CHECK(srg::to_string(Rational(4, 2)) == "2");
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(SrgParams::make(5, 5, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(SrgParams::make(5, 2, -1, 0), std::invalid_argument);
  CHECK(SrgParams::make(10, 3, 0, 1) == SrgParams{10, 3, 0, 1});
}

#include <doctest.h>

#include <cmath>
#include <numbers>

#include <adcert/estimates.hpp>

using namespace adcert;

TEST_CASE("derived constants")
{
    const EstimateConfig cfg(8.0, 0.5);
    const double e = std::numbers::e;
    CHECK(cfg.c() == doctest::Approx(8.0 / (8 * e)));
    CHECK(cfg.C_prime() == doctest::Approx(8.0 / 6.0));
    CHECK(cfg.C_double_prime() == doctest::Approx(8.0 / (6.0 * e)));
    CHECK_THROWS_AS(EstimateConfig(0.0), std::invalid_argument);
    CHECK_THROWS_AS(EstimateConfig(2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(EstimateConfig(2.0, 0.0), std::invalid_argument);
}

TEST_CASE("beta_ell on worked inputs")
{
    // floor(10 / 1), floor(10 / 4), then 2^2 * 3 > 10
    CHECK(beta_ell(10, 2.0) == Polyindex1{{0, 10}, {1, 2}});
    CHECK(beta_ell(1, 3.0) == Polyindex1{{0, 1}});
    CHECK_THROWS_AS(beta_ell(5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(beta_ell(0, 2.0), std::invalid_argument);
}

TEST_CASE("beta_ell has order at most ell and size at least ell")
{
    for (double C : {1.5, 2.0, 5.0, 40.0}) {
        for (unsigned ell = 1; ell <= 200; ++ell) {
            const auto b = beta_ell(ell, C);
            CHECK(size(b) >= ell);
            CHECK(b.at(0) == ell);
        }
    }
}

TEST_CASE("exact and log paths agree")
{
    const EstimateConfig cfg(30.0, 0.5);
    for (unsigned ell = 1; ell <= 60; ell += 7) {
        const auto x = check_beta_ell(ell, cfg, ArithmeticPath::exact);
        const auto l = check_beta_ell(ell, cfg, ArithmeticPath::log_space);
        CHECK(x.factorial_bound.pass == l.factorial_bound.pass);
        CHECK(x.factorial_bound.lhs_log == doctest::Approx(l.factorial_bound.lhs_log).epsilon(1e-10));
        CHECK(x.factorial_bound.rhs_log == doctest::Approx(l.factorial_bound.rhs_log).epsilon(1e-10));
    }
    for (const auto &[beta, b] : beta_b_pairs(2, 5)) {
        const auto x = check_redordfac(beta, b, cfg, ArithmeticPath::exact);
        const auto l = check_redordfac(beta, b, cfg, ArithmeticPath::log_space);
        CHECK(x.lhs_log == doctest::Approx(l.lhs_log).epsilon(1e-10));
        CHECK(x.rhs_log == doctest::Approx(l.rhs_log).epsilon(1e-10));
    }
    for (const auto &q : IndexSet(1, 5).collect()) {
        const auto x = coefficient_bound_check(q, cfg, ArithmeticPath::exact);
        const auto l = coefficient_bound_check(q, cfg, ArithmeticPath::log_space);
        CHECK(x.lhs_log == doctest::Approx(l.lhs_log).epsilon(1e-10));
    }
}

TEST_CASE("beta-b pairs have the requested total order")
{
    for (unsigned k = 0; k <= 5; ++k) {
        for (const auto &[beta, b] : beta_b_pairs(2, k)) {
            CHECK(order(beta) + order(b) == k);
            CHECK(beta.dim() == 2);
        }
    }
    // weak 4-compositions of 2 times partitions: 10 + 4 = 14
    CHECK(beta_b_pairs(2, 2).size() == 14);
}

TEST_CASE("beta concentrated at degree zero gives gamma! equal to its reduced order factorial")
{
    for (unsigned n = 0; n <= 8; ++n) {
        PolyindexD beta(2);
        for (unsigned c = 0; c < n; ++c) {
            beta.bump(0, c % 2);
        }
        CHECK(gamma_of(beta, PolyindexD(2)).factorial() == reduced_order_factorial(beta));
    }
}

TEST_CASE("minimal C search")
{
    auto domain = beta_ell_domain(40);
    domain.append(redordfac_domain(1, 6));
    domain.append(coefficient_domain(1, 5));
    const auto res = find_min_C(domain);
    CHECK(res.monotone_ok);
    CHECK(res.C0 > 1.0);
    CHECK(scan(domain, res.C0, ArithmeticPath::automatic).pass);
    CHECK(scan(domain, res.C0 * 1.5).pass);
    const auto below = scan(domain, res.C0 - 0.01, ArithmeticPath::automatic);
    CHECK_FALSE(below.pass);
    CHECK_FALSE(below.failures.empty());
    CHECK_THROWS_AS(find_min_C(ScanDomain{}), std::invalid_argument);
}

TEST_CASE("scan reports at most max_failures inputs")
{
    const auto domain = coefficient_domain(1, 6);
    const auto out = scan(domain, 0.1, ArithmeticPath::log_space, 3);
    CHECK_FALSE(out.pass);
    CHECK(out.failures.size() <= 3);
    CHECK(out.checked == domain.size());
}

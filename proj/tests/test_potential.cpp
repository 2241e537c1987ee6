#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <adcert/potential.hpp>

using namespace adcert;

namespace
{

constexpr double pi = std::numbers::pi;
const double yukawa_closed = std::pow(4.0 * pi / 3.0, 2.0 / 3.0) * 4.0 * pi;

std::vector<MultiIndex> multi_indices(unsigned total)
{
    std::vector<MultiIndex> out;
    for (unsigned a = 0; a <= total; ++a) {
        for (unsigned b = 0; a + b <= total; ++b) {
            out.push_back(MultiIndex{a, b, total - a - b});
        }
    }
    return out;
}

} // namespace

TEST_CASE("Yukawa symbol and first derivatives")
{
    CHECK(yukawa_hat({0, 0, 0}) == doctest::Approx(4 * pi));
    CHECK(yukawa_closed == doctest::Approx(32.6539409877262).epsilon(1e-13));
    const std::vector<double> k{0.3, -1.2, 0.5};
    const double q = 1 + 0.09 + 1.44 + 0.25;
    CHECK(yukawa_hat_deriv(MultiIndex{0, 0, 0}, k) == doctest::Approx(4 * pi / q));
    CHECK(yukawa_hat_deriv(MultiIndex{1, 0, 0}, k) == doctest::Approx(-8 * pi * 0.3 / (q * q)));
    // d^2/dk1 dk2 = 32 pi k1 k2 / q^3
    CHECK(yukawa_hat_deriv(MultiIndex{1, 1, 0}, k) == doctest::Approx(32 * pi * 0.3 * -1.2 / (q * q * q)));
    CHECK_THROWS_AS(yukawa_hat_deriv(MultiIndex{5, 4, 0}, k), std::out_of_range);
}

TEST_CASE("derivative table agrees with finite differences of the previous order")
{
    const double h = 1e-5;
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (unsigned n = 0; n < yukawa_max_order; ++n) {
        for (const auto &alpha : multi_indices(n)) {
            const std::vector<double> k{u(rng), u(rng), u(rng)};
            for (unsigned axis = 0; axis < 3; ++axis) {
                auto next = alpha;
                next[axis] += 1;
                auto kp = k;
                auto km = k;
                kp[axis] += h;
                km[axis] -= h;
                const double fd = (yukawa_hat_deriv(alpha, kp) - yukawa_hat_deriv(alpha, km)) / (2 * h);
                const double exact = yukawa_hat_deriv(next, k);
                CHECK(exact == doctest::Approx(fd).epsilon(1e-5).scale(1.0));
            }
        }
    }
}

TEST_CASE("Cauchy majorant dominates every derivative")
{
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-6.0, 6.0);
    for (double r : {0.3, 0.5, 0.7}) {
        for (unsigned n = 0; n <= 6; ++n) {
            for (const auto &alpha : multi_indices(n)) {
                for (int t = 0; t < 20; ++t) {
                    const std::vector<double> k{u(rng), u(rng), u(rng)};
                    CHECK(std::abs(yukawa_hat_deriv(alpha, k)) <= cauchy_majorant(alpha, r, k));
                }
            }
        }
    }
}

TEST_CASE("ball volume")
{
    CHECK(ball_volume(3, 2.0) == doctest::Approx(4.0 / 3.0 * pi * 8.0));
    CHECK(ball_volume(1, 1.5) == doctest::Approx(3.0));
    CHECK(ball_volume(2, 1.0) == doctest::Approx(pi));
}

TEST_CASE("radial superlevel radius")
{
    const auto f = yukawa_profile();
    // 4 pi / (1 + rho^2) = 1 at rho^2 = 4 pi - 1
    CHECK(f.superlevel_radius(1.0) == doctest::Approx(std::sqrt(4 * pi - 1)).epsilon(1e-11));
    CHECK(f.superlevel_radius(100.0) == 0.0);
    RadialProfile flat{[](double) { return 1.0; }, true, 3};
    CHECK_THROWS_AS(flat.superlevel_radius(0.5), std::domain_error);
}

TEST_CASE("radial-exact weak norm approaches the closed form from below")
{
    const auto res = weak_norm(yukawa_profile(), WeakNormConfig{});
    CHECK(res.value <= yukawa_closed);
    CHECK(res.value >= yukawa_closed * (1 - 1e-3));
    CHECK(res.argmax_level == doctest::Approx(1e-6));
    CHECK(level_grid(WeakNormConfig{}).size() == 200);
}

TEST_CASE("Monte Carlo weak norm")
{
    WeakNormConfig cfg;
    cfg.method = WeakNormMethod::monte_carlo;
    cfg.samples = 1'000'000;
    const auto base = yukawa_deriv_weak_norm(MultiIndex{0, 0, 0}, cfg);
    CHECK(base.value == doctest::Approx(yukawa_closed).epsilon(0.02));
    CHECK(base.std_error > 0.0);

    const auto d1 = yukawa_deriv_weak_norm(MultiIndex{1, 0, 0}, cfg);
    // the maximum over noisy levels is biased upwards
    CHECK(d1.value >= 11.06358897 * 0.99);
    CHECK(d1.value <= 11.06358897 + 4 * d1.std_error);
    CHECK(d1.std_error < 0.05 * d1.value);

    SUBCASE("same seed, same result regardless of threads")
    {
        auto threaded = cfg;
        threaded.threads = 4;
        const auto again = yukawa_deriv_weak_norm(MultiIndex{1, 0, 0}, threaded);
        CHECK(again.value == d1.value);
        CHECK(again.argmax_level == d1.argmax_level);
    }
    SUBCASE("different seed, different sample")
    {
        auto other = cfg;
        other.seed = 43;
        CHECK(yukawa_deriv_weak_norm(MultiIndex{1, 0, 0}, other).value != d1.value);
    }
}

TEST_CASE("M_s")
{
    for (double r : {0.3, 0.5, 0.7}) {
        CHECK(M_s(1.5, r).value == doctest::Approx(1 + r * r).epsilon(1e-9));
    }
    const auto m = M_s(1.6, 0.5);
    CHECK(m.value == doctest::Approx(1.12915588822138808).epsilon(1e-10));
    CHECK(m.argmax == doctest::Approx(0.2891941090707505).epsilon(1e-5));
    CHECK_THROWS_AS(M_s(1.4, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(M_s(1.5, 1.0), std::invalid_argument);
}

TEST_CASE("weak bound constants")
{
    const auto b = yukawa_weak_bound(MultiIndex{0, 0, 0}, 1.5, 0.5);
    CHECK(b.bound == doctest::Approx(197.39208802178717).epsilon(1e-9));
    CHECK(b.c == doctest::Approx(16 * pi * pi * 1.25 / 0.5).epsilon(1e-9));
    const auto b2 = yukawa_weak_bound(MultiIndex{2, 1, 0}, 1.5, 0.5);
    CHECK(b2.bound == doctest::Approx(197.39208802178717 * 2 / 0.125).epsilon(1e-9));
    CHECK(factorial_power(MultiIndex{2, 1, 0}, 3.0) == doctest::Approx(2 * 27.0));
    CHECK(factorial_power(MultiIndex{0, 0, 0}, 3.0) == 1.0);
}

TEST_CASE("interaction exponents and j norm")
{
    const auto e = interaction_exponents(1.5, 2.0, 3);
    CHECK(e.t == doctest::Approx(1.2));
    CHECK(e.q == doctest::Approx(2.5));
    CHECK(e.t * e.q == doctest::Approx(1.5 / 0.5));
    CHECK(j_norm(1.5, 2.0, 3) == doctest::Approx(0.95550197012977877).epsilon(1e-9));
    CHECK(j_p(2.0, 0.0) == doctest::Approx(0.5));
    CHECK_THROWS_AS(j_norm(1.5, 0.5, 3), DivergenceError);
    CHECK_THROWS_AS(j_norm(1.5, 1.0, 3), DivergenceError);
    CHECK_THROWS_AS(interaction_exponents(1.2, 2.0, 3), std::invalid_argument);
}

TEST_CASE("interaction constant for first derivatives")
{
    WeakNormConfig cfg;
    cfg.method = WeakNormMethod::monte_carlo;
    cfg.samples = 100'000;
    const auto res = interaction_constant(MultiIndex{0, 1, 0}, 1.5, 2.0, 3, cfg);
    CHECK(std::isfinite(res.constant));
    CHECK(res.pass);
    CHECK(res.constant == doctest::Approx(res.weak.value * res.j_norm));
    CHECK(res.bound == doctest::Approx(res.c * res.j_norm));
    CHECK_THROWS(interaction_constant(MultiIndex{0, 1}, 1.5, 2.0, 2, cfg));
}

TEST_CASE("L1 norms of Gaussian derivatives")
{
    const std::vector<double> expected{1.772453850905516,  2.0,
                                       3.4310555398428272, 7.5700825623748773,
                                       19.855739152211958, 59.257552900945959,
                                       195.90006551027769, 704.82150330792949,
                                       2725.6758356378023};
    const auto rep = l1_condition_check(8);
    REQUIRE(rep.rows.size() == 9);
    for (unsigned n = 0; n <= 8; ++n) {
        CHECK(rep.rows[n].norm == doctest::Approx(expected[n]).epsilon(1e-9));
    }
    CHECK_FALSE(rep.zeroth_order_holds);
    CHECK(rep.rows[0].base == 0.0);
    double mx = 0.0;
    for (unsigned n = 1; n <= 8; ++n) {
        mx = std::max(mx, rep.rows[n].base);
    }
    CHECK(rep.fitted_c == mx);
    CHECK(gaussian_strong_norm(1.0) == doctest::Approx(std::sqrt(pi)));
}

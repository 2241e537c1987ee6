#include <adcert/potential.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <random>
#include <thread>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace adcert
{

namespace
{

constexpr double four_pi = 4.0 * std::numbers::pi;

using Exponent = std::array<unsigned, 3>;
using Poly3 = std::map<Exponent, std::int64_t>;

struct FlatTerm {
    Exponent e;
    double coeff;
};

// P_alpha for every |alpha| <= yukawa_max_order, flattened for evaluation.
const std::map<Exponent, std::vector<FlatTerm>> &yukawa_polynomials()
{
    static const auto table = [] {
        std::map<Exponent, Poly3> polys;
        polys[{0, 0, 0}] = Poly3{{{0, 0, 0}, 1}};
        for (unsigned n = 1; n <= yukawa_max_order; ++n) {
            for (unsigned a0 = 0; a0 <= n; ++a0) {
                for (unsigned a1 = 0; a0 + a1 <= n; ++a1) {
                    const Exponent alpha{a0, a1, n - a0 - a1};
                    const unsigned j = alpha[0] > 0 ? 0 : alpha[1] > 0 ? 1 : 2;
                    Exponent parent = alpha;
                    --parent[j];
                    const Poly3 &P = polys.at(parent);
                    const auto m = static_cast<std::int64_t>(n); // |parent| + 1
                    // d/dk_j [P / q^m] = (P_j q - 2 m k_j P) / q^{m+1}, q = 1 + |k|^2
                    Poly3 out;
                    for (const auto &[e, c] : P) {
                        if (e[j] > 0) {
                            Exponent de = e;
                            --de[j];
                            const std::int64_t dc = c * e[j];
                            out[de] += dc;
                            for (unsigned ax = 0; ax < 3; ++ax) {
                                Exponent sq = de;
                                sq[ax] += 2;
                                out[sq] += dc;
                            }
                        }
                        Exponent up = e;
                        ++up[j];
                        out[up] -= 2 * m * c;
                    }
                    std::erase_if(out, [](const auto &kv) { return kv.second == 0; });
                    polys[alpha] = std::move(out);
                }
            }
        }
        std::map<Exponent, std::vector<FlatTerm>> flat;
        for (const auto &[alpha, P] : polys) {
            auto &terms = flat[alpha];
            for (const auto &[e, c] : P) {
                terms.push_back({e, static_cast<double>(c)});
            }
        }
        return flat;
    }();
    return table;
}

double norm2(const std::vector<double> &k)
{
    double s = 0.0;
    for (double x : k) {
        s += x * x;
    }
    return s;
}

void require_dim3(const std::vector<double> &k)
{
    if (k.size() != 3) {
        throw std::invalid_argument("the Yukawa transform is defined on R^3");
    }
}

double ipow(double x, unsigned e)
{
    double r = 1.0;
    for (unsigned i = 0; i < e; ++i) {
        r *= x;
    }
    return r;
}

double multi_factorial(const MultiIndex &alpha)
{
    double f = 1.0;
    for (auto o : alpha.orders()) {
        f *= std::tgamma(static_cast<double>(o) + 1.0);
    }
    return f;
}

} // namespace

double yukawa_hat(const std::vector<double> &k)
{
    require_dim3(k);
    return four_pi / (1.0 + norm2(k));
}

double yukawa_hat_deriv(const MultiIndex &alpha, const std::vector<double> &k)
{
    require_dim3(k);
    if (alpha.dim() != 3) {
        throw std::invalid_argument("Yukawa derivative needs a 3-component multi-index");
    }
    if (alpha.total() > yukawa_max_order) {
        throw std::out_of_range("Yukawa derivative order " + std::to_string(alpha.total()) + " exceeds cache depth " +
                                std::to_string(yukawa_max_order));
    }
    const auto &terms = yukawa_polynomials().at({alpha[0], alpha[1], alpha[2]});
    double p = 0.0;
    for (const auto &t : terms) {
        p += t.coeff * ipow(k[0], t.e[0]) * ipow(k[1], t.e[1]) * ipow(k[2], t.e[2]);
    }
    return four_pi * p / ipow(1.0 + norm2(k), alpha.total() + 1);
}

double cauchy_majorant(const MultiIndex &alpha, double r, const std::vector<double> &k)
{
    if (!(r > 0.0 && r < 1.0)) {
        throw std::invalid_argument("polydisc radius must lie in (0, 1)");
    }
    const double gap = r - std::sqrt(norm2(k));
    return multi_factorial(alpha) / std::pow(r, alpha.total()) * four_pi / (1.0 + gap * gap);
}

double ball_volume(unsigned dim, double rho)
{
    const double d = dim;
    return std::pow(std::numbers::pi, d / 2.0) / std::tgamma(d / 2.0 + 1.0) * std::pow(rho, d);
}

double RadialProfile::superlevel_radius(double level) const
{
    if (!monotone_decreasing) {
        throw std::logic_error("superlevel radius needs a decreasing profile");
    }
    if (std::abs(profile(0.0)) <= level) {
        return 0.0;
    }
    double lo = 0.0, hi = 1.0;
    while (std::abs(profile(hi)) > level) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e15) {
            throw std::domain_error("superlevel set is unbounded at level " + std::to_string(level));
        }
    }
    while (hi - lo > 1e-12 * std::max(1.0, hi)) {
        const double mid = 0.5 * (lo + hi);
        (std::abs(profile(mid)) > level ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

RadialProfile yukawa_profile()
{
    return {[](double rho) { return four_pi / (1.0 + rho * rho); }, true, 3};
}

std::vector<double> level_grid(const WeakNormConfig &config)
{
    if (!(config.level_min > 0.0 && config.level_max > config.level_min) || config.levels < 2) {
        throw std::invalid_argument("level grid needs 0 < level_min < level_max and at least 2 levels");
    }
    std::vector<double> out(config.levels);
    const double a = std::log(config.level_min);
    const double b = std::log(config.level_max);
    for (unsigned j = 0; j < config.levels; ++j) {
        out[j] = std::exp(a + (b - a) * j / (config.levels - 1));
    }
    return out;
}

WeakNormResult weak_norm(const RadialProfile &f, const WeakNormConfig &config)
{
    if (!(config.s > 1.0)) {
        throw std::invalid_argument("weak norm exponent must exceed 1");
    }
    WeakNormResult r;
    for (double level : level_grid(config)) {
        const double measure = ball_volume(f.dim, f.superlevel_radius(level));
        if (!std::isfinite(measure)) {
            throw std::domain_error("non-finite superlevel measure");
        }
        const double v = level * std::pow(measure, 1.0 / config.s);
        if (v > r.value) {
            r.value = v;
            r.argmax_level = level;
        }
    }
    return r;
}

WeakNormResult weak_norm(const std::function<double(const std::vector<double> &)> &f, unsigned dim,
                         const WeakNormConfig &config, const std::function<double(double)> &majorant_radius)
{
    if (!(config.s > 1.0)) {
        throw std::invalid_argument("weak norm exponent must exceed 1");
    }
    if (config.samples == 0 || config.shards == 0 || dim == 0) {
        throw std::invalid_argument("Monte Carlo weak norm needs samples, shards and dim >= 1");
    }
    const std::size_t N = config.samples;
    const double L = config.box_half_width;
    std::vector<double> values(N);

    auto run_shard = [&](unsigned shard) {
        const std::size_t begin = N * shard / config.shards;
        const std::size_t end = N * (shard + 1) / config.shards;
        std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                          static_cast<std::uint32_t>(shard)};
        std::mt19937_64 rng(seq);
        std::uniform_real_distribution<double> u(-L, L);
        std::vector<double> x(dim);
        for (std::size_t i = begin; i < end; ++i) {
            for (auto &c : x) {
                c = u(rng);
            }
            values[i] = std::abs(f(x));
        }
    };
    const unsigned workers = std::max(1u, std::min(config.threads, config.shards));
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (unsigned shard = w; shard < config.shards; shard += workers) {
                    run_shard(shard);
                }
            });
        }
    }
    std::sort(values.begin(), values.end());

    const double volume = std::pow(2.0 * L, dim);
    WeakNormResult r;
    r.first_untruncated_level = std::numeric_limits<double>::quiet_NaN();
    for (double level : level_grid(config)) {
        const auto count = static_cast<double>(values.end() - std::upper_bound(values.begin(), values.end(), level));
        if (majorant_radius && std::isnan(r.first_untruncated_level) && majorant_radius(level) <= L) {
            r.first_untruncated_level = level;
        }
        if (count == 0.0) {
            continue;
        }
        const double p = count / static_cast<double>(N);
        const double measure = volume * p;
        const double v = level * std::pow(measure, 1.0 / config.s);
        if (v > r.value) {
            r.value = v;
            r.argmax_level = level;
            r.std_error = v / config.s * std::sqrt((1.0 - p) / (static_cast<double>(N) * p));
        }
    }
    return r;
}

WeakNormResult yukawa_deriv_weak_norm(const MultiIndex &alpha, const WeakNormConfig &config, double r)
{
    if (alpha.total() == 0 && config.method == WeakNormMethod::radial_exact) {
        return weak_norm(yukawa_profile(), config);
    }
    const double A = multi_factorial(alpha) / std::pow(r, alpha.total()) * four_pi;
    return weak_norm([&alpha](const std::vector<double> &x) { return yukawa_hat_deriv(alpha, x); }, 3, config,
                     [A, r](double level) { return r + std::sqrt(std::max(0.0, A / level - 1.0)); });
}

MsResult M_s(double s, double r)
{
    if (!(s >= 1.5)) {
        throw std::invalid_argument("M_s needs s >= 3/2");
    }
    if (!(r > 0.0 && r < 1.0)) {
        throw std::invalid_argument("M_s needs 0 < r < 1");
    }
    const double e1 = 1.0 - 3.0 / (2.0 * s);
    const double e2 = 3.0 / s;
    auto g = [&](double b) { return std::pow(b, e1) * std::pow(std::sqrt(1.0 - b) + r * std::sqrt(b), e2); };

    constexpr int scan = 20000;
    int best = 1;
    for (int j = 2; j < scan; ++j) {
        if (g(static_cast<double>(j) / scan) > g(static_cast<double>(best) / scan)) {
            best = j;
        }
    }
    double lo = static_cast<double>(best - 1) / scan;
    double hi = static_cast<double>(best + 1) / scan;
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
    double g1 = g(x1), g2 = g(x2);
    while (hi - lo > 1e-12) {
        if (g1 < g2) {
            lo = x1;
            x1 = x2;
            g1 = g2;
            x2 = lo + phi * (hi - lo);
            g2 = g(x2);
        } else {
            hi = x2;
            x2 = x1;
            g2 = g1;
            x1 = hi - phi * (hi - lo);
            g1 = g(x1);
        }
    }
    MsResult out{g(0.5 * (lo + hi)), 0.5 * (lo + hi)};
    // endpoint limits: beta -> 0 gives 1 only when the beta exponent vanishes
    const double at0 = e1 == 0.0 ? 1.0 : 0.0;
    const double at1 = std::pow(r, e2);
    if (at0 > out.value) {
        out = {at0, 0.0};
    }
    if (at1 > out.value) {
        out = {at1, 1.0};
    }
    return out;
}

YukawaBound yukawa_weak_bound(const MultiIndex &alpha, double s, double r)
{
    const double m = M_s(s, r).value;
    const double k = 16.0 * std::numbers::pi * std::numbers::pi * m;
    return {k * multi_factorial(alpha) / std::pow(r, alpha.total()), std::max(k, 1.0) / r, m};
}

double factorial_power(const MultiIndex &alpha, double c)
{
    return multi_factorial(alpha) * std::pow(c, alpha.total());
}

double j_p(double p, double rho)
{
    return 1.0 / (1.0 + std::pow(1.0 + rho * rho, p / 2.0));
}

InteractionExponents interaction_exponents(double s, double p, unsigned dim)
{
    if (dim == 0 || !(s > 1.0)) {
        throw std::invalid_argument("interaction exponents need dim >= 1 and s > 1");
    }
    const double inv_s = 1.0 / s;
    if (!(p > dim * (1.0 - inv_s))) {
        throw DivergenceError("j_p integral diverges: p = " + std::to_string(p) + " <= d(1 - 1/s) = " +
                              std::to_string(dim * (1.0 - inv_s)));
    }
    if (!(inv_s > 0.5) || inv_s > 2.0 / dim + 1e-15) {
        throw std::invalid_argument("exponent window max(1/2, 1 - p/d) < 1/s <= 2/d violated");
    }
    const double t = 1.0 / (1.5 - inv_s);
    return {t, 2.0 / (2.0 - t)};
}

double j_norm(double s, double p, unsigned dim)
{
    const auto ex = interaction_exponents(s, p, dim);
    const double power = ex.t * ex.q;
    const double d = dim;
    const double sphere = 2.0 * std::pow(std::numbers::pi, d / 2.0) / std::tgamma(d / 2.0);
    auto integrand = [&](double rho) { return std::pow(j_p(p, rho), power) * sphere * std::pow(rho, d - 1.0); };
    boost::math::quadrature::tanh_sinh<double> near;
    boost::math::quadrature::exp_sinh<double> far;
    const double total = near.integrate(integrand, 0.0, 1.0) + far.integrate(integrand, 1.0, std::numeric_limits<double>::infinity());
    return std::pow(total, 1.0 / power);
}

InteractionResult interaction_constant(const MultiIndex &gamma, double s, double p, unsigned dim,
                                       const WeakNormConfig &config, double r, double tolerance)
{
    InteractionResult out;
    out.exponents = interaction_exponents(s, p, dim);
    if (dim != 3 || gamma.dim() != 3) {
        throw std::invalid_argument("the Yukawa interaction constant is defined for d = 3");
    }
    out.j_norm = j_norm(s, p, dim);
    WeakNormConfig cfg = config;
    cfg.s = s;
    out.weak = yukawa_deriv_weak_norm(gamma, cfg, r);
    out.constant = out.weak.value * out.j_norm;
    out.c = yukawa_weak_bound(gamma, s, r).c;
    out.bound = factorial_power(gamma, out.c) * out.j_norm;
    out.pass = std::isfinite(out.constant) && out.constant <= out.bound * (1.0 + tolerance);
    return out;
}

namespace
{

// d^n/dk^n e^{-k^2} = P_n(k) e^{-k^2}, P_{n+1} = P_n' - 2k P_n
std::vector<double> gaussian_derivative_poly(unsigned n)
{
    std::vector<std::int64_t> P{1};
    for (unsigned m = 0; m < n; ++m) {
        std::vector<std::int64_t> next(P.size() + 1, 0);
        for (std::size_t i = 1; i < P.size(); ++i) {
            next[i - 1] += static_cast<std::int64_t>(i) * P[i];
        }
        for (std::size_t i = 0; i < P.size(); ++i) {
            next[i + 1] -= 2 * P[i];
        }
        P = std::move(next);
    }
    return std::vector<double>(P.begin(), P.end());
}

double horner(const std::vector<double> &P, double x)
{
    double v = 0.0;
    for (auto it = P.rbegin(); it != P.rend(); ++it) {
        v = v * x + *it;
    }
    return v;
}

std::vector<double> real_roots(const std::vector<double> &P, unsigned n)
{
    std::vector<double> roots;
    if (n == 0) {
        return roots;
    }
    const double B = std::sqrt(2.0 * n + 1.0) + 1.0;
    const double h = 1e-3;
    double a = -B, fa = horner(P, a);
    for (double b = -B + h; b <= B + h; b += h) {
        const double fb = horner(P, b);
        if (fb == 0.0) {
            roots.push_back(b);
        } else if ((fa < 0.0) != (fb < 0.0) && fa != 0.0) {
            double lo = a, hi = b, flo = fa;
            while (hi - lo > 1e-15 * std::max(1.0, std::abs(hi))) {
                const double mid = 0.5 * (lo + hi);
                const double fm = horner(P, mid);
                if (mid == lo || mid == hi) {
                    break;
                }
                if ((fm < 0.0) == (flo < 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        a = b;
        fa = fb;
    }
    return roots;
}

} // namespace

L1Report l1_condition_check(unsigned n_max)
{
    L1Report report{{}, 0.0, false};
    const double inf = std::numeric_limits<double>::infinity();
    for (unsigned n = 0; n <= n_max; ++n) {
        const auto P = gaussian_derivative_poly(n);
        auto f = [&P](double x) { return x * x > 700.0 ? 0.0 : std::abs(horner(P, x)) * std::exp(-x * x); };
        const auto roots = real_roots(P, n);
        if (roots.size() != n) {
            throw std::runtime_error("expected " + std::to_string(n) + " real roots, found " + std::to_string(roots.size()));
        }
        std::vector<double> cuts = roots;
        if (cuts.empty()) {
            cuts.push_back(0.0);
        }
        double total = 0.0, error = 0.0, piece_err = 0.0, l1 = 0.0;
        boost::math::quadrature::exp_sinh<double> tail;
        total += tail.integrate([&](double x) { return f(-x); }, -cuts.front(), inf, 1e-12, &piece_err, &l1);
        error += piece_err;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, cuts[i], cuts[i + 1], 15, 1e-13,
                                                                                   &piece_err);
            error += piece_err;
        }
        total += tail.integrate(f, cuts.back(), inf, 1e-12, &piece_err, &l1);
        error += piece_err;
        if (!std::isfinite(total) || error > 1e-8 * std::max(1.0, total)) {
            throw std::runtime_error("quadrature did not converge for n = " + std::to_string(n));
        }
        const double base = n == 0 ? 0.0 : std::pow(total / std::tgamma(n + 1.0), 1.0 / n);
        report.rows.push_back({n, total, error, base});
        report.fitted_c = std::max(report.fitted_c, base);
    }
    report.zeroth_order_holds = report.rows.front().norm <= 1.0;
    return report;
}

double gaussian_strong_norm(double s)
{
    return std::pow(std::numbers::pi / s, 1.0 / (2.0 * s));
}

} // namespace adcert

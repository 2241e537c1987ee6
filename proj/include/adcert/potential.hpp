#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include <adcert/polyindex.hpp>

namespace adcert
{

// 4 pi / (1 + |k|^2), k in R^3
double yukawa_hat(const std::vector<double> &k);

// Derivative of yukawa_hat written as 4 pi P(k) / (1 + |k|^2)^{|alpha|+1} with an
// integer polynomial P. Throws std::out_of_range for |alpha| > yukawa_max_order.
inline constexpr unsigned yukawa_max_order = 8;
double yukawa_hat_deriv(const MultiIndex &alpha, const std::vector<double> &k);

// (alpha! / r^{|alpha|}) * 4 pi / (1 + (r - |k|)^2); requires 0 < r < 1.
double cauchy_majorant(const MultiIndex &alpha, double r, const std::vector<double> &k);

// Volume of the radius-rho ball in R^d.
double ball_volume(unsigned dim, double rho);

// Radial function on R^d, f(x) = profile(|x|).
struct RadialProfile {
    std::function<double(double)> profile;
    bool monotone_decreasing = true;
    unsigned dim = 3;

    // Radius of {|f| > level} for a decreasing profile, by bisection to 1e-12.
    // Throws std::domain_error if the set is unbounded.
    double superlevel_radius(double level) const;
};

RadialProfile yukawa_profile();

enum class WeakNormMethod { radial_exact, monte_carlo };

struct WeakNormConfig {
    double s = 1.5;
    WeakNormMethod method = WeakNormMethod::radial_exact;
    double level_min = 1e-6;
    double level_max = 1e2;
    unsigned levels = 200;
    // Monte Carlo only
    std::size_t samples = 1'000'000;
    double box_half_width = 20.0;
    std::uint64_t seed = 42;
    unsigned shards = 16;
    unsigned threads = 1;
};

struct WeakNormResult {
    double value = 0.0;        // max over the level grid of level * |{|f| > level}|^{1/s}
    double argmax_level = 0.0;
    double std_error = 0.0;    // Monte Carlo standard error of `value`; 0 for radial-exact
    // Monte Carlo: smallest grid level whose superlevel set provably lies in the
    // box (from a supplied majorant radius); NaN when no majorant was given.
    double first_untruncated_level = 0.0;
};

// Log-spaced levels level_min .. level_max.
std::vector<double> level_grid(const WeakNormConfig &config);

WeakNormResult weak_norm(const RadialProfile &f, const WeakNormConfig &config);

// Monte Carlo over the box [-L, L]^dim. `majorant_radius(level)` optionally bounds
// the radius of the superlevel set from above.
WeakNormResult weak_norm(const std::function<double(const std::vector<double> &)> &f, unsigned dim,
                         const WeakNormConfig &config,
                         const std::function<double(double)> &majorant_radius = nullptr);

// Weak norm of the alpha-derivative of yukawa_hat: radial-exact for alpha = 0
// unless Monte Carlo is requested, Monte Carlo otherwise.
WeakNormResult yukawa_deriv_weak_norm(const MultiIndex &alpha, const WeakNormConfig &config, double r = 0.5);

struct MsResult {
    double value;
    double argmax; // beta attaining the supremum (0 or 1 for endpoint limits)
};

// sup over beta in (0,1) of beta^{1 - 3/(2s)} ((1-beta)^{1/2} + r beta^{1/2})^{3/s};
// requires s >= 3/2 and 0 < r < 1.
MsResult M_s(double s, double r);

struct YukawaBound {
    double bound; // 16 pi^2 alpha! M_s / r^{|alpha|}
    double c;     // max(16 pi^2 M_s, 1) / r
    double M_s;
};

YukawaBound yukawa_weak_bound(const MultiIndex &alpha, double s, double r);

// alpha! c^{|alpha|}
double factorial_power(const MultiIndex &alpha, double c);

// Raised when the j_p integral diverges (p <= d (1 - 1/s)).
class DivergenceError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// j_p(k) = 1 / (1 + <k>^p)
double j_p(double p, double rho);

struct InteractionExponents {
    double t; // 1/s + 1/t = 3/2
    double q; // 2 / (2 - t)
};

// Throws std::invalid_argument outside max(1/2, 1 - p/d) < 1/s <= 2/d, and
// DivergenceError when p <= d (1 - 1/s).
InteractionExponents interaction_exponents(double s, double p, unsigned dim);

// ||j_p^t||_q^{1/t} by radial quadrature.
double j_norm(double s, double p, unsigned dim);

struct InteractionResult {
    InteractionExponents exponents;
    double j_norm;
    WeakNormResult weak;
    double constant;  // weak.value * j_norm
    double bound;     // gamma! c^{|gamma|} j_norm
    double c;
    bool pass;        // constant <= bound * (1 + tolerance)
};

// Yukawa interaction constant for derivative gamma (d = 3).
InteractionResult interaction_constant(const MultiIndex &gamma, double s, double p, unsigned dim,
                                       const WeakNormConfig &config, double r = 0.5, double tolerance = 0.05);

struct L1Row {
    unsigned n;
    double norm;       // || d^n/dk^n e^{-k^2} ||_1
    double error;      // quadrature error estimate
    double base;       // (norm / n!)^{1/n}; 0 at n = 0
};

struct L1Report {
    std::vector<L1Row> rows;
    double fitted_c;          // max over 1 <= n <= n_max of rows[n].base
    bool zeroth_order_holds;  // ||V||_1 <= 1, required by the alpha = 0 case
};

// Preset: V(k) = e^{-k^2} in d = 1. Throws std::runtime_error when a
// quadrature does not converge.
L1Report l1_condition_check(unsigned n_max);

// Strong L^s norm of e^{-k^2} on R: (pi/s)^{1/(2s)}.
double gaussian_strong_norm(double s);

} // namespace adcert

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <adcert/expr.hpp>
#include <adcert/polyindex.hpp>

namespace adcert
{

// omega_1 and omega_2 are stored in prefix notation over x0..x{d-1}.
struct DispersionSpec {
    std::string name;
    unsigned dim = 1;
    nlohmann::json omega1;
    nlohmann::json omega2;
    double strip_radius = 0.0;
    double s1 = 0.0;
    double s2 = 0.0;
    double growth_C = 1.0;
};

// omega(k) = |k|^2 + 1
DispersionSpec parabolic_spec(unsigned dim = 1);
// omega(k) = sqrt(1 + |k|^2)
DispersionSpec relativistic_spec(unsigned dim = 1);
// Throws std::invalid_argument for unknown names.
DispersionSpec preset_spec(const std::string &name, unsigned dim = 1);

DispersionSpec spec_from_json(const nlohmann::json &j);
nlohmann::json to_json(const DispersionSpec &spec);

// real_part * i^quarter_turns
struct PhasedValue {
    double value = 0.0;
    unsigned quarter_turns = 0;

    std::complex<double> to_complex() const;
    double magnitude() const;
};

enum class TargetKind { omega, v_component, w };

struct Target {
    TargetKind kind = TargetKind::omega;
    unsigned axis = 0;

    static Target omega() { return {TargetKind::omega, 0}; }
    static Target v(unsigned axis) { return {TargetKind::v_component, axis}; }
    static Target w() { return {TargetKind::w, 0}; }
};

std::string to_string(const Target &t);

// Taylor coefficients of the flow s -> gamma_s(k); coefficients[n][sigma].
struct JetSeries {
    std::vector<std::vector<double>> coefficients;
};

// Compiled form of a dispersion pair. Expression variables are
// x0..x{d-1} = k and x{d}..x{2d-1} = xi.
class DispersionModel
{
public:
    explicit DispersionModel(DispersionSpec spec);

    const DispersionSpec &spec() const { return m_spec; }
    unsigned dim() const { return m_spec.dim; }

    double omega_xi(const std::vector<double> &xi, const std::vector<double> &k) const;
    std::vector<double> vector_field(const std::vector<double> &xi, const std::vector<double> &k) const;
    // (i/2) div v_xi(k)
    PhasedValue w_field(const std::vector<double> &xi, const std::vector<double> &k) const;

    JetSeries flow_jet(const std::vector<double> &xi, const std::vector<double> &k, unsigned N) const;

    // (i v.grad)^n f(k) for n = 0..N via Taylor jets along the flow.
    std::vector<PhasedValue> dv_iterates(const std::vector<double> &xi, const std::vector<double> &k, unsigned N,
                                         const Target &target) const;
    // Same quantity from explicit symbolic iteration g_n = v.grad g_{n-1}.
    std::vector<PhasedValue> symbolic_dv_iterates(const std::vector<double> &xi, const std::vector<double> &k,
                                                  unsigned N, const Target &target);

    // prod (D_v^i w)^{alpha(i)} prod (D_v^i v_sigma)^{beta_sigma(i)}
    std::complex<double> eval_M_symbol(const Polyindex1 &alpha, const PolyindexD &beta, const std::vector<double> &xi,
                                       const std::vector<double> &k) const;

    const ExprArena &arena() const { return m_arena; }

private:
    ExprId target_expr(const Target &t) const;
    std::vector<double> bind(const std::vector<double> &xi, const std::vector<double> &k) const;

    DispersionSpec m_spec;
    ExprArena m_arena;
    ExprId m_omega;
    std::vector<ExprId> m_v;
    ExprId m_half_div; // w / i
    Tape m_field_tape;
    Tape m_target_tape; // omega, v_1..v_d, div v / 2
    std::vector<std::vector<ExprId>> m_symbolic_cache;
};

// <h>^{2 s2} e^{-|h|^2}
double growth_weight(const std::vector<double> &h, double s2);

// Peetre: <k+h>^q <= 2^{|q|} <k>^{|q|} <h>^q. Returns the log-ratio slack
// (rhs - lhs, in logs); nonnegative when the inequality holds.
double peetre_slack(double q, const std::vector<double> &k, const std::vector<double> &h);

struct GridSpec {
    double a = -4.0;
    double b = 4.0;
    double h = 0.05;

    // a, a+h, ..., up to b (inclusive within rounding)
    std::vector<double> points() const;
};

// "a:b:h"
GridSpec parse_grid(const std::string &text);

struct GrowthSeries {
    std::vector<double> xi;
    // ratios[n] for n = 0..N; entry 0 is unused and set to 0
    std::vector<double> ratios;
    double fitted_C = 0.0;
};

struct GrowthReport {
    std::string spec;
    Target target;
    unsigned max_n = 0;
    std::vector<GrowthSeries> series;
    // max |C(xi_j+1) - C(xi_j)| over the xi list in the given order
    double continuity_gap = 0.0;

    double max_ratio() const;
};

// R_n = max over grid of (|D_v^n target(h)| / (n! W(h)))^{1/n}, n >= 1, with W the
// growth weight; the grid is the d-fold product of grid.points(). Grid maxima
// underestimate the supremum: this is a consistency check.
GrowthReport growth_certificate(const DispersionModel &model, const std::vector<std::vector<double>> &xis,
                                const GridSpec &grid, unsigned N, const Target &target);

struct CompositeCase {
    Polyindex1 alpha;
    PolyindexD beta;
    double lhs_max;  // max over grid of |f_{alpha,beta}|
    double slack;    // min over grid of bound / |f|, 1 when f vanishes everywhere
    bool pass;
};

struct CompositeReport {
    double C_double_prime;
    std::vector<CompositeCase> cases;

    bool pass() const;
};

// Fits C'' = max over grid, i <= max_order - 1 and the targets w, v_sigma of
// (|D_v^i t| / (i! W))^{1/(i+1)}, then checks
//   |f_{alpha,beta}| <= C''^{||alpha||+||beta||} W^{|alpha|+|beta|} alpha-ratio! beta-ratio!
// on `samples` random (alpha, beta) with 1 <= ||alpha||+||beta|| <= max_order.
CompositeReport composite_bound_check(const DispersionModel &model, const std::vector<double> &xi,
                                      const GridSpec &grid, unsigned max_order, unsigned samples,
                                      std::uint64_t seed);

} // namespace adcert

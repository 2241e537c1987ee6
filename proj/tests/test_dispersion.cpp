#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include <adcert/dispersion.hpp>

using namespace adcert;

namespace
{

struct Reference {
    const char *preset;
    double xi;
    double k;
    std::vector<double> omega;
    std::vector<double> v;
    std::vector<double> half_div;
};

// (v d/dk)^n of omega, v and (div v)/2 at one point, n = 0..8, from an
// exact-differentiation reference computed at 40 digits.
const std::vector<Reference> &references()
{
    static const std::vector<Reference> refs{
        {"parabolic",
         0.0,
         1.0,
         {4.0, 5.8860710587430771, 0.0, -50.981958008692678, 300.08342755302081, 441.57809453206517,
          -33789.080551201345, 378646.30738966379, 1013063.2142846523},
         {1.4715177646857693, -2.1653645317858031, -3.1863723755432924, 79.709660443771153, -545.07296043801795,
          -1147.2854874656707, 90582.882011660809, -1202287.0659632113, -1887203.7333785514},
         {-0.73575888234288464, -2.1653645317858031, 19.118234253259754, -75.020856888255202, -386.38083271555703,
          11371.325185500453, -98008.19825111247, -728842.70138812481, 39210616.531658051}},
        {"parabolic",
         0.5,
         0.3,
         {2.13, 0.028470812910504389, 0.15968567599363384, 0.87392058844634426, 4.5875263097866335,
          22.307467822972728, 92.021378620538428, 220.03304664199567, -1225.1341886585381},
         {0.14235406455252194, 0.39313478607569754, 1.0117428593400162, 2.1422772828427564, 1.4908887396933746,
          -22.747034600886945, -209.87028567797875, -1239.5944367832901, -4693.8722810368942},
         {1.3808344261594628, -0.25979319368507435, -0.85451192638646849, -2.9246726323228329, -9.9719761210888081,
          -28.73683836141018, -13.476849050602924, 862.95174160424767, 10751.866937312304}},
        {"relativistic",
         0.0,
         1.0,
         {2.8284271247461901, 0.73575888234288464, -0.3827859860416437, -0.29872241020718366, 2.9010491910373076,
          -11.10413665449285, 20.864646398612202, 115.52450245217055, -1711.9123282912719},
         {0.5202600950228889, -0.40600584970983808, 0.21122864194988911, 1.0073601388803799, -6.6606983240317769,
          25.037875736506886, -32.135438810985187, -514.67984677052186, 6333.2900922899566},
         {-0.39019507126716667, -0.10150146242745952, 0.9681312756036584, -3.2556048124725005, 7.3324854940521493,
          4.4803445593244428, -201.1131165091916, 1585.7749490428589, -6963.3091639851092}},
        {"relativistic",
         0.5,
         0.3,
         {2.063834553609612, 0.0059242297307670147, 0.015131479113266331, 0.037610112359618805,
          0.08912732786391484, 0.19267870651114531, 0.33559050611830296, 0.20957523065517795, -1.9368163607998927},
         {0.064936052448450287, 0.081663792417812398, 0.095145889782231172, 0.088825382934660379,
          0.014485456882101843, -0.2560275234618778, -1.0149527201348508, -2.6668899324715923, -4.1137824765790555},
         {0.62880163898661292, -0.058170792412521081, -0.091078910941805931, -0.14927200416002259,
          -0.24175927768214486, -0.31770357259812725, 0.016585128640049256, 2.6128742862131471, 14.25392619917919}},
    };
    return refs;
}

std::complex<double> i_pow(unsigned m)
{
    static const std::complex<double> table[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[m % 4];
}

void check_series(const std::vector<PhasedValue> &got, const std::vector<double> &ref, unsigned extra_turns)
{
    REQUIRE(got.size() == ref.size());
    double scale = 0.0;
    for (double r : ref) {
        scale = std::max(scale, std::abs(r));
    }
    for (unsigned n = 0; n < ref.size(); ++n) {
        const auto expected = i_pow(n + extra_turns) * ref[n];
        const auto diff = std::abs(got[n].to_complex() - expected);
        CAPTURE(n);
        CHECK(diff <= std::max(1e-9 * std::abs(ref[n]), 1e-12 * scale));
    }
}

} // namespace

TEST_CASE("jet iterates match the reference tables")
{
    for (const auto &ref : references()) {
        CAPTURE(ref.preset);
        CAPTURE(ref.xi);
        const DispersionModel model(preset_spec(ref.preset));
        check_series(model.dv_iterates({ref.xi}, {ref.k}, 8, Target::omega()), ref.omega, 0);
        check_series(model.dv_iterates({ref.xi}, {ref.k}, 8, Target::v(0)), ref.v, 0);
        check_series(model.dv_iterates({ref.xi}, {ref.k}, 8, Target::w()), ref.half_div, 1);
    }
}

TEST_CASE("symbolic iterates match the reference tables")
{
    for (const auto &ref : references()) {
        DispersionModel model(preset_spec(ref.preset));
        check_series(model.symbolic_dv_iterates({ref.xi}, {ref.k}, 8, Target::omega()), ref.omega, 0);
        check_series(model.symbolic_dv_iterates({ref.xi}, {ref.k}, 8, Target::w()), ref.half_div, 1);
    }
}

TEST_CASE("jets agree with symbolic iteration in two dimensions")
{
    DispersionModel model(parabolic_spec(2));
    for (const auto &k : std::vector<std::vector<double>>{{0.3, -0.7}, {1.1, 0.2}}) {
        const std::vector<double> xi{0.5, -0.25};
        for (const auto &t : {Target::omega(), Target::v(1), Target::w()}) {
            const auto jet = model.dv_iterates(xi, k, 5, t);
            const auto sym = model.symbolic_dv_iterates(xi, k, 5, t);
            for (unsigned n = 0; n <= 5; ++n) {
                CHECK(std::abs(jet[n].to_complex() - sym[n].to_complex()) <=
                      1e-10 * std::max(1.0, sym[n].magnitude()));
            }
        }
    }
}

TEST_CASE("fields at a point")
{
    const DispersionModel para(parabolic_spec());
    // omega_xi(k) = (xi - k)^2 + 1 + k^2 + 1
    CHECK(para.omega_xi({0.5}, {0.3}) == doctest::Approx(2.13));
    const double v = para.vector_field({0.0}, {1.0})[0];
    CHECK(v == doctest::Approx(4.0 * std::exp(-1.0)));
    const auto w = para.w_field({0.0}, {1.0});
    CHECK(w.quarter_turns % 4 == 1);
    CHECK(w.value == doctest::Approx(-0.73575888234288464));
    const auto jet = para.flow_jet({0.0}, {1.0}, 3);
    CHECK(jet.coefficients[0][0] == doctest::Approx(1.0));
    CHECK(jet.coefficients[1][0] == doctest::Approx(v));
}

TEST_CASE("M symbol of a single w factor is w")
{
    const DispersionModel model(relativistic_spec());
    const auto m = model.eval_M_symbol(Polyindex1{{0, 1}}, PolyindexD(1), {0.5}, {0.3});
    CHECK(std::abs(m - model.w_field({0.5}, {0.3}).to_complex()) < 1e-14);
    const auto unit = model.eval_M_symbol(Polyindex1{}, PolyindexD(1), {0.5}, {0.3});
    CHECK(std::abs(unit - std::complex<double>(1.0, 0.0)) < 1e-15);
}

TEST_CASE("spec JSON round trip and custom specs")
{
    const auto rel = relativistic_spec();
    const auto back = spec_from_json(to_json(rel));
    CHECK(back.name == rel.name);
    CHECK(back.omega1 == rel.omega1);
    CHECK(back.s2 == rel.s2);
    CHECK_THROWS_AS(preset_spec("quartic"), std::invalid_argument);

    const auto custom = spec_from_json(nlohmann::json::parse(R"({
        "name": "quartic", "dim": 1,
        "omega1": ["add", ["pow", "x0", 4], 1],
        "omega2": ["add", ["pow", "x0", 4], 1],
        "s1": 2, "s2": 2})"));
    const DispersionModel model(custom);
    CHECK(model.omega_xi({0.0}, {1.0}) == doctest::Approx(4.0));
    const auto jet = model.dv_iterates({0.2}, {0.4}, 4, Target::omega());
    DispersionModel copy(custom);
    const auto sym = copy.symbolic_dv_iterates({0.2}, {0.4}, 4, Target::omega());
    for (unsigned n = 0; n <= 4; ++n) {
        CHECK(std::abs(jet[n].to_complex() - sym[n].to_complex()) < 1e-10 * std::max(1.0, sym[n].magnitude()));
    }
}

TEST_CASE("growth weight and Peetre inequality")
{
    CHECK(growth_weight({0.0}, 2.0) == doctest::Approx(1.0));
    CHECK(growth_weight({1.0}, 1.0) == doctest::Approx(2.0 * std::exp(-1.0)));
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int t = 0; t < 1000; ++t) {
        const double q = u(rng) / 2;
        CHECK(peetre_slack(q, {u(rng), u(rng)}, {u(rng), u(rng)}) >= -1e-12);
    }
}

TEST_CASE("grids")
{
    const auto g = parse_grid("-1:1:0.5");
    CHECK(g.points() == std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0});
    CHECK(parse_grid("-4:4:0.05").points().size() == 161);
    CHECK_THROWS(parse_grid("1:0:0.1"));
    CHECK_THROWS(parse_grid("0:1"));
    CHECK_THROWS(parse_grid("0:1:0"));
}

TEST_CASE("growth certificate ratios")
{
    const DispersionModel model(parabolic_spec());
    const auto g = growth_certificate(model, {{0.0}, {0.5}}, parse_grid("-3:3:0.1"), 6, Target::omega());
    REQUIRE(g.series.size() == 2);
    CHECK(g.series[0].ratios.size() == 7);
    CHECK(g.series[0].ratios[0] == 0.0);
    double mx = 0.0;
    for (const auto &s : g.series) {
        for (double r : s.ratios) {
            CHECK(std::isfinite(r));
            mx = std::max(mx, r);
        }
    }
    CHECK(g.max_ratio() == mx);
    CHECK(g.continuity_gap == doctest::Approx(std::abs(g.series[1].fitted_C - g.series[0].fitted_C)));
}

TEST_CASE("composite bound check is seeded")
{
    const DispersionModel model(relativistic_spec());
    const auto grid = parse_grid("-3:3:0.1");
    const auto a = composite_bound_check(model, {0.5}, grid, 4, 12, 42);
    const auto b = composite_bound_check(model, {0.5}, grid, 4, 12, 42);
    REQUIRE(a.cases.size() == 12);
    CHECK(a.pass());
    CHECK(a.C_double_prime == b.C_double_prime);
    for (std::size_t i = 0; i < a.cases.size(); ++i) {
        CHECK(a.cases[i].alpha == b.cases[i].alpha);
        CHECK(a.cases[i].beta == b.cases[i].beta);
        CHECK(a.cases[i].lhs_max == b.cases[i].lhs_max);
        const unsigned ord = order(a.cases[i].alpha) + order(a.cases[i].beta);
        CHECK(ord >= 1);
        CHECK(ord <= 4);
    }
}

#include <adcert/dispersion.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace adcert
{

namespace
{

nlohmann::json squared_norm_plus_one(unsigned dim)
{
    nlohmann::json sum = nlohmann::json::array({"add"});
    for (unsigned j = 0; j < dim; ++j) {
        sum.push_back(nlohmann::json::array({"pow", "x" + std::to_string(j), 2}));
    }
    sum.push_back(1);
    return sum;
}

unsigned max_variable(const ExprArena &arena, ExprId root)
{
    unsigned top = 0;
    std::vector<ExprId> stack{root};
    std::vector<bool> seen(arena.size(), false);
    while (!stack.empty()) {
        const ExprId id = stack.back();
        stack.pop_back();
        if (seen[id]) {
            continue;
        }
        seen[id] = true;
        const auto &n = arena.node(id);
        switch (n.op) {
        case Op::constant:
            break;
        case Op::variable:
            top = std::max(top, n.var + 1);
            break;
        case Op::add:
        case Op::sub:
        case Op::mul:
        case Op::div:
            stack.push_back(n.lhs);
            stack.push_back(n.rhs);
            break;
        default:
            stack.push_back(n.lhs);
            break;
        }
    }
    return top;
}

double factorial_double(unsigned n)
{
    return std::tgamma(static_cast<double>(n) + 1.0);
}

std::complex<double> quarter_turn(unsigned q)
{
    switch (q % 4) {
    case 0:
        return {1.0, 0.0};
    case 1:
        return {0.0, 1.0};
    case 2:
        return {-1.0, 0.0};
    default:
        return {0.0, -1.0};
    }
}

std::size_t target_slot(const Target &t, unsigned dim)
{
    switch (t.kind) {
    case TargetKind::omega:
        return 0;
    case TargetKind::v_component:
        if (t.axis >= dim) {
            throw std::out_of_range("vector field component out of range");
        }
        return 1 + t.axis;
    case TargetKind::w:
        return 1 + dim;
    }
    return 0;
}

unsigned base_phase(const Target &t)
{
    return t.kind == TargetKind::w ? 1 : 0;
}

// d-fold product of the 1-d grid
std::vector<std::vector<double>> product_grid(const std::vector<double> &axis, unsigned dim)
{
    std::vector<std::vector<double>> out{{}};
    for (unsigned s = 0; s < dim; ++s) {
        std::vector<std::vector<double>> next;
        next.reserve(out.size() * axis.size());
        for (const auto &p : out) {
            for (double x : axis) {
                auto q = p;
                q.push_back(x);
                next.push_back(std::move(q));
            }
        }
        out = std::move(next);
    }
    return out;
}

} // namespace

DispersionSpec parabolic_spec(unsigned dim)
{
    const auto omega = squared_norm_plus_one(dim);
    return {"parabolic", dim, omega, omega, 1.0, 2.0, 2.0, 2.0};
}

DispersionSpec relativistic_spec(unsigned dim)
{
    const auto omega = nlohmann::json::array({"sqrt", squared_norm_plus_one(dim)});
    return {"relativistic", dim, omega, omega, 0.25, 1.0, 1.0, 2.0};
}

DispersionSpec preset_spec(const std::string &name, unsigned dim)
{
    if (name == "parabolic") {
        return parabolic_spec(dim);
    }
    if (name == "relativistic") {
        return relativistic_spec(dim);
    }
    throw std::invalid_argument("unknown dispersion preset '" + name + "'");
}

DispersionSpec spec_from_json(const nlohmann::json &j)
{
    DispersionSpec s;
    s.name = j.value("name", std::string("custom"));
    s.dim = j.value("dim", 1u);
    s.omega1 = j.at("omega1");
    s.omega2 = j.contains("omega2") ? j.at("omega2") : s.omega1;
    s.strip_radius = j.value("strip_radius", 0.0);
    s.s1 = j.value("s1", 0.0);
    s.s2 = j.at("s2").get<double>();
    s.growth_C = j.value("growth_C", 1.0);
    if (s.dim == 0) {
        throw std::invalid_argument("dispersion spec needs dim >= 1");
    }
    if (!(s.s2 > 0.0) || s.s1 > s.s2) {
        throw std::invalid_argument("dispersion spec needs s1 <= s2 and s2 > 0");
    }
    return s;
}

nlohmann::json to_json(const DispersionSpec &spec)
{
    return {{"name", spec.name},          {"dim", spec.dim}, {"omega1", spec.omega1}, {"omega2", spec.omega2},
            {"strip_radius", spec.strip_radius}, {"s1", spec.s1},   {"s2", spec.s2},         {"growth_C", spec.growth_C}};
}

std::complex<double> PhasedValue::to_complex() const
{
    return value * quarter_turn(quarter_turns);
}

double PhasedValue::magnitude() const
{
    return std::abs(value);
}

std::string to_string(const Target &t)
{
    switch (t.kind) {
    case TargetKind::omega:
        return "omega";
    case TargetKind::v_component:
        return "v" + std::to_string(t.axis);
    case TargetKind::w:
        return "w";
    }
    return "?";
}

DispersionModel::DispersionModel(DispersionSpec spec)
    : m_spec(std::move(spec)), m_field_tape(m_arena, {}), m_target_tape(m_arena, {})
{
    const unsigned d = m_spec.dim;
    if (d == 0) {
        throw std::invalid_argument("dispersion model needs dim >= 1");
    }
    std::vector<ExprId> k(d), xi(d), shifted(d);
    for (unsigned j = 0; j < d; ++j) {
        k[j] = m_arena.variable(j);
        xi[j] = m_arena.variable(d + j);
        shifted[j] = m_arena.sub(xi[j], k[j]);
    }
    const ExprId w1 = m_arena.from_json(m_spec.omega1);
    const ExprId w2 = m_arena.from_json(m_spec.omega2);
    if (max_variable(m_arena, w1) > d || max_variable(m_arena, w2) > d) {
        throw std::invalid_argument("dispersion expressions may only use x0..x" + std::to_string(d - 1));
    }
    m_omega = m_arena.add(m_arena.substitute(w1, shifted), w2);

    ExprId sq = m_arena.constant(0.0);
    for (unsigned j = 0; j < d; ++j) {
        sq = m_arena.add(sq, m_arena.add(m_arena.mul(k[j], k[j]), m_arena.mul(xi[j], xi[j])));
    }
    const ExprId gauss = m_arena.exp(m_arena.neg(sq));
    ExprId div = m_arena.constant(0.0);
    for (unsigned j = 0; j < d; ++j) {
        m_v.push_back(m_arena.mul(gauss, m_arena.diff(m_omega, j)));
        div = m_arena.add(div, m_arena.diff(m_v.back(), j));
    }
    m_half_div = m_arena.mul(m_arena.constant(0.5), div);

    m_field_tape = Tape(m_arena, m_v);
    std::vector<ExprId> targets{m_omega};
    targets.insert(targets.end(), m_v.begin(), m_v.end());
    targets.push_back(m_half_div);
    m_target_tape = Tape(m_arena, targets);
    m_symbolic_cache.resize(targets.size());
}

std::vector<double> DispersionModel::bind(const std::vector<double> &xi, const std::vector<double> &k) const
{
    if (xi.size() != dim() || k.size() != dim()) {
        throw std::invalid_argument("point dimension does not match the dispersion spec");
    }
    std::vector<double> vars = k;
    vars.insert(vars.end(), xi.begin(), xi.end());
    return vars;
}

ExprId DispersionModel::target_expr(const Target &t) const
{
    switch (t.kind) {
    case TargetKind::omega:
        return m_omega;
    case TargetKind::v_component:
        return m_v.at(t.axis);
    case TargetKind::w:
        return m_half_div;
    }
    return m_omega;
}

double DispersionModel::omega_xi(const std::vector<double> &xi, const std::vector<double> &k) const
{
    return m_target_tape.eval(bind(xi, k))[0];
}

std::vector<double> DispersionModel::vector_field(const std::vector<double> &xi, const std::vector<double> &k) const
{
    return m_field_tape.eval(bind(xi, k));
}

PhasedValue DispersionModel::w_field(const std::vector<double> &xi, const std::vector<double> &k) const
{
    return {m_target_tape.eval(bind(xi, k))[1 + dim()], 1};
}

JetSeries DispersionModel::flow_jet(const std::vector<double> &xi, const std::vector<double> &k, unsigned N) const
{
    const unsigned d = dim();
    const auto vars = bind(xi, k);
    std::vector<Jet> jets;
    for (double x : vars) {
        jets.emplace_back(N, x);
    }
    for (unsigned n = 0; n < N; ++n) {
        const auto field = m_field_tape.eval(std::span<const Jet>(jets));
        for (unsigned s = 0; s < d; ++s) {
            jets[s][n + 1] = field[s][n] / static_cast<double>(n + 1);
        }
    }
    JetSeries out;
    out.coefficients.assign(N + 1, std::vector<double>(d));
    for (unsigned n = 0; n <= N; ++n) {
        for (unsigned s = 0; s < d; ++s) {
            out.coefficients[n][s] = jets[s][n];
        }
    }
    return out;
}

std::vector<PhasedValue> DispersionModel::dv_iterates(const std::vector<double> &xi, const std::vector<double> &k,
                                                      unsigned N, const Target &target) const
{
    const unsigned d = dim();
    const std::size_t slot = target_slot(target, d);
    const auto flow = flow_jet(xi, k, N);
    std::vector<Jet> jets;
    for (unsigned s = 0; s < d; ++s) {
        Jet g(N);
        for (unsigned n = 0; n <= N; ++n) {
            g[n] = flow.coefficients[n][s];
        }
        jets.push_back(std::move(g));
    }
    for (double x : xi) {
        jets.emplace_back(N, x);
    }
    const Jet f = m_target_tape.eval(std::span<const Jet>(jets))[slot];
    std::vector<PhasedValue> out;
    for (unsigned n = 0; n <= N; ++n) {
        out.push_back({factorial_double(n) * f[n], (n + base_phase(target)) % 4});
    }
    return out;
}

std::vector<PhasedValue> DispersionModel::symbolic_dv_iterates(const std::vector<double> &xi,
                                                               const std::vector<double> &k, unsigned N,
                                                               const Target &target)
{
    const unsigned d = dim();
    auto &chain = m_symbolic_cache[target_slot(target, d)];
    if (chain.empty()) {
        chain.push_back(target_expr(target));
    }
    while (chain.size() <= N) {
        ExprId next = m_arena.constant(0.0);
        for (unsigned s = 0; s < d; ++s) {
            next = m_arena.add(next, m_arena.mul(m_v[s], m_arena.diff(chain.back(), s)));
        }
        chain.push_back(next);
    }
    const Tape tape(m_arena, std::vector<ExprId>(chain.begin(), chain.begin() + N + 1));
    const auto values = tape.eval(bind(xi, k));
    std::vector<PhasedValue> out;
    for (unsigned n = 0; n <= N; ++n) {
        out.push_back({values[n], (n + base_phase(target)) % 4});
    }
    return out;
}

std::complex<double> DispersionModel::eval_M_symbol(const Polyindex1 &alpha, const PolyindexD &beta,
                                                    const std::vector<double> &xi, const std::vector<double> &k) const
{
    if (beta.dim() != dim()) {
        throw std::invalid_argument("beta dimension does not match the dispersion spec");
    }
    std::complex<double> f{1.0, 0.0};
    if (!alpha.is_zero()) {
        const auto w = dv_iterates(xi, k, alpha.max_degree(), Target::w());
        for (const auto &[deg, mult] : alpha.entries()) {
            f *= std::pow(w[deg].to_complex(), static_cast<int>(mult));
        }
    }
    for (unsigned s = 0; s < dim(); ++s) {
        const auto &b = beta.component(s);
        if (b.is_zero()) {
            continue;
        }
        const auto v = dv_iterates(xi, k, b.max_degree(), Target::v(s));
        for (const auto &[deg, mult] : b.entries()) {
            f *= std::pow(v[deg].to_complex(), static_cast<int>(mult));
        }
    }
    return f;
}

double growth_weight(const std::vector<double> &h, double s2)
{
    double sq = 0.0;
    for (double x : h) {
        sq += x * x;
    }
    return std::pow(1.0 + sq, s2) * std::exp(-sq);
}

double peetre_slack(double q, const std::vector<double> &k, const std::vector<double> &h)
{
    if (k.size() != h.size()) {
        throw std::invalid_argument("peetre_slack: dimension mismatch");
    }
    double kh = 0.0, kk = 0.0, hh = 0.0;
    for (std::size_t j = 0; j < k.size(); ++j) {
        kh += (k[j] + h[j]) * (k[j] + h[j]);
        kk += k[j] * k[j];
        hh += h[j] * h[j];
    }
    const double lhs = 0.5 * q * std::log1p(kh);
    const double rhs = std::abs(q) * std::log(2.0) + 0.5 * std::abs(q) * std::log1p(kk) + 0.5 * q * std::log1p(hh);
    return rhs - lhs;
}

std::vector<double> GridSpec::points() const
{
    if (!(h > 0.0) || b < a) {
        throw std::invalid_argument("grid needs a <= b and h > 0");
    }
    const auto n = static_cast<std::size_t>(std::floor((b - a) / h + 1e-9));
    std::vector<double> out;
    out.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        out.push_back(a + static_cast<double>(i) * h);
    }
    return out;
}

GridSpec parse_grid(const std::string &text)
{
    std::istringstream in(text);
    GridSpec g;
    char c1 = 0, c2 = 0;
    if (!(in >> g.a >> c1 >> g.b >> c2 >> g.h) || c1 != ':' || c2 != ':' || !in.eof()) {
        throw std::invalid_argument("grid must be written a:b:h, got '" + text + "'");
    }
    g.points();
    return g;
}

double GrowthReport::max_ratio() const
{
    double m = 0.0;
    for (const auto &s : series) {
        m = std::max(m, s.fitted_C);
    }
    return m;
}

GrowthReport growth_certificate(const DispersionModel &model, const std::vector<std::vector<double>> &xis,
                                const GridSpec &grid, unsigned N, const Target &target)
{
    GrowthReport report{model.spec().name, target, N, {}, 0.0};
    const auto points = product_grid(grid.points(), model.dim());
    for (const auto &xi : xis) {
        GrowthSeries s{xi, std::vector<double>(N + 1, 0.0), 0.0};
        for (const auto &h : points) {
            const auto it = model.dv_iterates(xi, h, N, target);
            const double weight = growth_weight(h, model.spec().s2);
            for (unsigned n = 1; n <= N; ++n) {
                const double r = std::pow(it[n].magnitude() / (factorial_double(n) * weight), 1.0 / n);
                s.ratios[n] = std::max(s.ratios[n], r);
            }
        }
        s.fitted_C = *std::max_element(s.ratios.begin(), s.ratios.end());
        report.series.push_back(std::move(s));
    }
    for (std::size_t j = 1; j < report.series.size(); ++j) {
        report.continuity_gap =
            std::max(report.continuity_gap, std::abs(report.series[j].fitted_C - report.series[j - 1].fitted_C));
    }
    return report;
}

bool CompositeReport::pass() const
{
    return std::all_of(cases.begin(), cases.end(), [](const CompositeCase &c) { return c.pass; });
}

CompositeReport composite_bound_check(const DispersionModel &model, const std::vector<double> &xi,
                                      const GridSpec &grid, unsigned max_order, unsigned samples, std::uint64_t seed)
{
    if (max_order == 0) {
        throw std::invalid_argument("composite_bound_check needs max_order >= 1");
    }
    const unsigned d = model.dim();
    const unsigned top = max_order - 1;
    const auto points = product_grid(grid.points(), d);

    // mags[p][t][i]: |D_v^i t| at grid point p; t = 0 is w, t = 1..d are v_sigma
    std::vector<std::vector<std::vector<double>>> mags(points.size());
    std::vector<double> weights(points.size());
    double C = 0.0;
    for (std::size_t p = 0; p < points.size(); ++p) {
        weights[p] = growth_weight(points[p], model.spec().s2);
        for (unsigned t = 0; t <= d; ++t) {
            const auto it = model.dv_iterates(xi, points[p], top, t == 0 ? Target::w() : Target::v(t - 1));
            std::vector<double> m;
            for (unsigned i = 0; i <= top; ++i) {
                m.push_back(it[i].magnitude());
                C = std::max(C, std::pow(m.back() / (factorial_double(i) * weights[p]), 1.0 / (i + 1)));
            }
            mags[p].push_back(std::move(m));
        }
    }

    CompositeReport report{C, {}};
    std::mt19937_64 rng(seed);
    for (unsigned sample = 0; sample < samples; ++sample) {
        unsigned remaining = std::uniform_int_distribution<unsigned>(1, max_order)(rng);
        Polyindex1 alpha;
        PolyindexD beta(d);
        while (remaining > 0) {
            const unsigned slot = std::uniform_int_distribution<unsigned>(0, d)(rng);
            const unsigned deg = std::uniform_int_distribution<unsigned>(0, remaining - 1)(rng);
            if (slot == 0) {
                alpha.bump(deg);
            } else {
                beta.bump(deg, slot - 1);
            }
            remaining -= deg + 1;
        }
        const unsigned ord = order(alpha) + order(beta);
        const unsigned sz = size(alpha) + size(beta);
        const double ratio = factorial_ratio(alpha).convert_to<double>() * factorial_ratio(beta).convert_to<double>();

        CompositeCase c{alpha, beta, 0.0, std::numeric_limits<double>::infinity(), true};
        for (std::size_t p = 0; p < points.size(); ++p) {
            double f = 1.0;
            for (const auto &[deg, mult] : alpha.entries()) {
                f *= std::pow(mags[p][0][deg], mult);
            }
            for (unsigned s = 0; s < d; ++s) {
                for (const auto &[deg, mult] : beta.component(s).entries()) {
                    f *= std::pow(mags[p][1 + s][deg], mult);
                }
            }
            const double bound = std::pow(C, ord) * std::pow(weights[p], sz) * ratio;
            c.lhs_max = std::max(c.lhs_max, f);
            if (f > 0.0) {
                c.slack = std::min(c.slack, bound / f);
            }
            if (f > bound * (1.0 + 1e-12)) {
                c.pass = false;
            }
        }
        if (std::isinf(c.slack)) {
            c.slack = 1.0;
        }
        report.cases.push_back(std::move(c));
    }
    return report;
}

} // namespace adcert

#include <adcert/estimates.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace adcert
{

namespace
{

using HighFloat = boost::multiprecision::cpp_bin_float_50;

// Integer parts up to 10^5000 go through the exact path.
constexpr double exact_log_limit = 5000.0 * 2.302585092994046;

// Ties (e.g. 1 <= 1) must survive rounding of the two logarithms.
constexpr double tie_tolerance = 1e-12;

bool log_leq(double lhs, double rhs)
{
    return lhs <= rhs + tie_tolerance * std::max(1.0, std::abs(rhs));
}

long double log_factorial(unsigned n)
{
    return std::lgamma(static_cast<long double>(n) + 1.0L);
}

long double log_reduced_order_factorial(const Polyindex1 &p)
{
    long double s = 0;
    for (const auto &[deg, mult] : p.entries()) {
        s += log_factorial(mult) + mult * std::log(static_cast<long double>(deg) + 1.0L);
    }
    return s;
}

long double log_reduced_order_factorial(const PolyindexD &p)
{
    long double s = 0;
    for (const auto &c : p.components()) {
        s += log_reduced_order_factorial(c);
    }
    return s;
}

long double log_order_factorial(const Polyindex1 &p)
{
    long double s = 0;
    for (const auto &[deg, mult] : p.entries()) {
        s += log_factorial(mult) + mult * log_factorial(deg + 1);
    }
    return s;
}

long double log_order_factorial(const PolyindexD &p)
{
    long double s = 0;
    for (const auto &c : p.components()) {
        s += log_order_factorial(c);
    }
    return s;
}

long double log_factorial_ratio(const PolyindexD &p)
{
    long double s = 0;
    for (const auto &c : p.components()) {
        for (const auto &[deg, mult] : c.entries()) {
            s += mult * log_factorial(deg);
        }
    }
    return s;
}

long double log_multi_factorial(const MultiIndex &m)
{
    long double s = 0;
    for (auto o : m.orders()) {
        s += log_factorial(o);
    }
    return s;
}

HighFloat log_exact(const BigInt &n)
{
    return boost::multiprecision::log(HighFloat(n));
}

HighFloat log_high(double x)
{
    return boost::multiprecision::log(HighFloat(x));
}

bool use_exact(ArithmeticPath path, double lhs_estimate, double rhs_estimate)
{
    switch (path) {
    case ArithmeticPath::exact:
        return true;
    case ArithmeticPath::log_space:
        return false;
    case ArithmeticPath::automatic:
        break;
    }
    return std::max(std::abs(lhs_estimate), std::abs(rhs_estimate)) < exact_log_limit;
}

LogComparison make_comparison(double lhs, double rhs, ArithmeticPath used)
{
    return {lhs, rhs, log_leq(lhs, rhs), used};
}

} // namespace

EstimateConfig::EstimateConfig(double C, double epsilon) : m_C(C), m_epsilon(epsilon)
{
    if (!(C > 0.0) || !std::isfinite(C)) {
        throw std::invalid_argument("estimate constant C must be positive");
    }
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument("epsilon must lie in (0, 1)");
    }
}

double EstimateConfig::C_prime() const
{
    return m_C / (4.0 * (1.0 + m_epsilon));
}

double EstimateConfig::C_double_prime() const
{
    return m_C / (4.0 * std::numbers::e * (1.0 + m_epsilon));
}

double EstimateConfig::c() const
{
    return m_C / (8.0 * std::numbers::e);
}

Polyindex1 beta_ell(unsigned ell, double C)
{
    if (!(C > 1.0)) {
        throw std::invalid_argument("beta_ell requires C > 1");
    }
    if (ell == 0) {
        throw std::invalid_argument("beta_ell requires ell >= 1");
    }
    std::vector<Polyindex1::Entry> entries;
    long double scale = 1.0L; // C^i
    for (unsigned i = 0;; ++i) {
        const long double denom = scale * (i + 1);
        if (denom > ell) {
            break;
        }
        const auto mult = static_cast<std::uint32_t>(std::floor(static_cast<long double>(ell) / denom));
        entries.emplace_back(i, mult);
        scale *= C;
    }
    return Polyindex1(std::move(entries));
}

BetaEllCheck check_beta_ell(unsigned ell, const EstimateConfig &config, ArithmeticPath path)
{
    BetaEllCheck out;
    out.beta = beta_ell(ell, config.C());
    const unsigned sz = size(out.beta);
    const unsigned ord = order(out.beta);

    const double size_rhs = (1.0 + config.epsilon()) * ell;
    out.size_bound = {std::log(static_cast<double>(sz)), std::log(size_rhs), sz <= size_rhs, ArithmeticPath::exact};

    const long double log_C = std::log(static_cast<long double>(config.C()));
    const long double log_Cpp = std::log(static_cast<long double>(config.C_double_prime()));
    const long double lhs_est = 2.0L * sz * log_Cpp + log_factorial(2 * sz);
    const long double rhs_est = 2.0L * ord * log_C + 2.0L * log_reduced_order_factorial(out.beta);
    if (use_exact(path, static_cast<double>(lhs_est), static_cast<double>(rhs_est))) {
        const HighFloat lhs = 2 * sz * log_high(config.C_double_prime()) + log_exact(factorial(2 * sz));
        const HighFloat rhs = 2 * ord * log_high(config.C()) + 2 * log_exact(reduced_order_factorial(out.beta));
        out.factorial_bound = make_comparison(lhs.convert_to<double>(), rhs.convert_to<double>(), ArithmeticPath::exact);
    } else {
        out.factorial_bound =
            make_comparison(static_cast<double>(lhs_est), static_cast<double>(rhs_est), ArithmeticPath::log_space);
    }
    return out;
}

LogComparison check_redordfac(const PolyindexD &beta, const PolyindexD &b, const EstimateConfig &config,
                              ArithmeticPath path)
{
    const MultiIndex gamma = gamma_of(beta, b);
    const unsigned gamma_size = gamma.total();
    const unsigned ord = order(beta) + order(b);

    const long double lhs_est = gamma_size * std::log(static_cast<long double>(config.c())) + log_multi_factorial(gamma);
    const long double rhs_est = ord * std::log(static_cast<long double>(config.C())) +
                                log_reduced_order_factorial(beta) + log_reduced_order_factorial(b);
    if (use_exact(path, static_cast<double>(lhs_est), static_cast<double>(rhs_est))) {
        const HighFloat lhs = gamma_size * log_high(config.c()) + log_exact(gamma.factorial());
        const HighFloat rhs =
            ord * log_high(config.C()) + log_exact(reduced_order_factorial(beta) * reduced_order_factorial(b));
        return make_comparison(lhs.convert_to<double>(), rhs.convert_to<double>(), ArithmeticPath::exact);
    }
    return make_comparison(static_cast<double>(lhs_est), static_cast<double>(rhs_est), ArithmeticPath::log_space);
}

LogComparison coefficient_bound_check(const IndexQuadruple &q, const EstimateConfig &config, ArithmeticPath path)
{
    const MultiIndex gamma = gamma_of(q.beta, q.b);
    const unsigned k = total_order(q);
    const unsigned gamma_size = gamma.total();
    const unsigned ord = order(q.beta) + order(q.b);

    const long double lhs_est = log_factorial(k) - log_order_factorial(q.alpha) - log_order_factorial(q.beta) -
                                log_order_factorial(q.a) - log_order_factorial(q.b);
    const long double rhs_est = ord * std::log(static_cast<long double>(config.C())) + log_factorial(k) -
                                gamma_size * std::log(static_cast<long double>(config.c())) -
                                log_multi_factorial(gamma) - log_factorial_ratio(q.beta) - log_factorial_ratio(q.b);
    if (use_exact(path, static_cast<double>(log_factorial(k)), static_cast<double>(rhs_est))) {
        const BigInt kf = factorial(k);
        const HighFloat lhs = log_exact(kf) - log_exact(order_factorial(q.alpha) * order_factorial(q.beta) *
                                                        order_factorial(q.a) * order_factorial(q.b));
        const HighFloat rhs = ord * log_high(config.C()) + log_exact(kf) - gamma_size * log_high(config.c()) -
                              log_exact(gamma.factorial() * factorial_ratio(q.beta) * factorial_ratio(q.b));
        return make_comparison(lhs.convert_to<double>(), rhs.convert_to<double>(), ArithmeticPath::exact);
    }
    return make_comparison(static_cast<double>(lhs_est), static_cast<double>(rhs_est), ArithmeticPath::log_space);
}

namespace
{

// Cartesian product of per-slot polyindex lists for one composition.
template <typename F>
void for_each_assignment(const std::vector<unsigned> &composition, const std::vector<std::vector<Polyindex1>> &by_order,
                         F &&visit)
{
    std::vector<std::size_t> idx(composition.size(), 0);
    std::vector<const Polyindex1 *> chosen(composition.size());
    while (true) {
        for (std::size_t j = 0; j < composition.size(); ++j) {
            chosen[j] = &by_order[composition[j]][idx[j]];
        }
        visit(chosen);
        std::size_t j = composition.size();
        while (j-- > 0) {
            if (++idx[j] < by_order[composition[j]].size()) {
                break;
            }
            idx[j] = 0;
        }
        if (j == static_cast<std::size_t>(-1)) {
            return;
        }
    }
}

} // namespace

std::vector<std::pair<PolyindexD, PolyindexD>> beta_b_pairs(unsigned dim, unsigned k)
{
    if (dim == 0) {
        throw std::invalid_argument("beta_b_pairs requires dim >= 1");
    }
    std::vector<std::vector<Polyindex1>> by_order;
    for (unsigned j = 0; j <= k; ++j) {
        by_order.push_back(polyindices_of_order(j));
    }
    std::vector<std::pair<PolyindexD, PolyindexD>> out;
    for (const auto &composition : weak_compositions(k, 2 * dim)) {
        for_each_assignment(composition, by_order, [&](const std::vector<const Polyindex1 *> &chosen) {
            std::vector<Polyindex1> beta(dim), b(dim);
            for (unsigned s = 0; s < dim; ++s) {
                beta[s] = *chosen[s];
                b[s] = *chosen[dim + s];
            }
            out.emplace_back(PolyindexD(std::move(beta)), PolyindexD(std::move(b)));
        });
    }
    return out;
}

void ScanDomain::append(const ScanDomain &other)
{
    ells.insert(ells.end(), other.ells.begin(), other.ells.end());
    pairs.insert(pairs.end(), other.pairs.begin(), other.pairs.end());
    quadruples.insert(quadruples.end(), other.quadruples.begin(), other.quadruples.end());
}

ScanDomain beta_ell_domain(unsigned ell_max, double epsilon)
{
    ScanDomain d;
    d.epsilon = epsilon;
    for (unsigned ell = 1; ell <= ell_max; ++ell) {
        d.ells.push_back(ell);
    }
    return d;
}

ScanDomain redordfac_domain(unsigned dim, unsigned max_total_order, double epsilon)
{
    ScanDomain d;
    d.epsilon = epsilon;
    for (unsigned k = 0; k <= max_total_order; ++k) {
        auto pairs = beta_b_pairs(dim, k);
        d.pairs.insert(d.pairs.end(), std::make_move_iterator(pairs.begin()), std::make_move_iterator(pairs.end()));
    }
    return d;
}

ScanDomain coefficient_domain(unsigned dim, unsigned max_order, double epsilon)
{
    ScanDomain d;
    d.epsilon = epsilon;
    for (unsigned k = 0; k <= max_order; ++k) {
        for (const auto &q : IndexSet(dim, k)) {
            d.quadruples.push_back(q);
        }
    }
    return d;
}

ScanOutcome scan(const ScanDomain &domain, double C, ArithmeticPath path, std::size_t max_failures)
{
    ScanOutcome out{true, 0, {}};
    auto record = [&](std::string input, const LogComparison &cmp) {
        ++out.checked;
        if (!cmp.pass) {
            out.pass = false;
            if (out.failures.size() < max_failures) {
                out.failures.push_back({std::move(input), cmp.lhs_log, cmp.rhs_log});
            }
        }
    };

    const EstimateConfig config(C, domain.epsilon);
    for (unsigned ell : domain.ells) {
        if (!(C > 1.0)) {
            record("ell=" + std::to_string(ell), {0.0, 0.0, false, path});
            continue;
        }
        const auto check = check_beta_ell(ell, config, path);
        record("ell=" + std::to_string(ell) + " size", check.size_bound);
        record("ell=" + std::to_string(ell) + " factorial", check.factorial_bound);
    }
    for (const auto &[beta, b] : domain.pairs) {
        record("beta=" + to_string(beta) + " b=" + to_string(b), check_redordfac(beta, b, config, path));
    }
    for (const auto &q : domain.quadruples) {
        record(to_string(q), coefficient_bound_check(q, config, path));
    }
    return out;
}

MinCResult find_min_C(const ScanDomain &domain, double lower, double upper, double tolerance)
{
    if (domain.empty()) {
        throw std::invalid_argument("find_min_C: empty scan domain");
    }
    // beta^ell is only finitely supported for C > 1.
    const double floor_C = domain.ells.empty() ? 1e-3 : 1.0;
    lower = std::max(lower, floor_C);
    if (!(upper > lower)) {
        throw std::invalid_argument("find_min_C: empty search interval");
    }
    auto passes = [&](double C) { return C > 0.0 && scan(domain, C, ArithmeticPath::log_space, 0).pass; };
    if (!passes(upper)) {
        throw std::runtime_error("find_min_C: domain fails at the upper search bound");
    }

    MinCResult result{upper, lower, upper, 0, true};
    double lo = lower;
    double hi = upper;
    if (lower > floor_C && passes(lower)) {
        hi = lower;
    } else {
        while (hi - lo > tolerance) {
            const double mid = 0.5 * (lo + hi);
            (passes(mid) ? hi : lo) = mid;
            ++result.iterations;
        }
    }
    result.C0 = hi;

    for (double factor : {1.001, 1.01, 1.1, 1.5, 2.0, 4.0}) {
        const double C = std::min(hi * factor, upper);
        if (!passes(C)) {
            result.monotone_ok = false;
        }
    }
    return result;
}

} // namespace adcert

#include <adcert/verify.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include <adcert/commutator.hpp>
#include <adcert/enumeration.hpp>
#include <adcert/estimates.hpp>
#include <adcert/potential.hpp>

namespace adcert
{

namespace
{

nlohmann::json scope_json(const OrderScope &scope)
{
    auto out = nlohmann::json::array();
    for (const auto &[d, k] : scope) {
        out.push_back({d, k});
    }
    return out;
}

OrderScope scope_from_json(const nlohmann::json &j)
{
    OrderScope out;
    for (const auto &e : j) {
        out.emplace_back(e.at(0).get<unsigned>(), e.at(1).get<unsigned>());
    }
    return out;
}

std::string big_string(const BigInt &n)
{
    return n.str();
}

WeakNormConfig weak_config(const VerifyConfig &c)
{
    WeakNormConfig w;
    w.s = c.yukawa_s;
    w.samples = c.mc_samples;
    w.box_half_width = c.box_half_width;
    w.levels = c.levels;
    w.level_min = c.level_min;
    w.level_max = c.level_max;
    w.seed = c.seed;
    w.threads = c.threads;
    w.method = WeakNormMethod::monte_carlo;
    return w;
}

std::vector<MultiIndex> multi_indices_up_to(unsigned total_max)
{
    std::vector<MultiIndex> out;
    for (unsigned n = 0; n <= total_max; ++n) {
        for (unsigned a0 = n + 1; a0-- > 0;) {
            for (unsigned a1 = n - a0 + 1; a1-- > 0;) {
                out.push_back(MultiIndex{a0, a1, n - a0 - a1});
            }
        }
    }
    return out;
}

// Jet and symbolic values agree to 1e-9 relative; values that cancel to zero
// are compared against the scale of their sequence.
bool iterates_agree(const std::vector<PhasedValue> &jet, const std::vector<PhasedValue> &sym, double &worst)
{
    double scale = 0.0;
    for (const auto &v : sym) {
        scale = std::max(scale, v.magnitude());
    }
    bool ok = true;
    for (std::size_t n = 0; n < jet.size(); ++n) {
        const double diff = std::abs(jet[n].value - sym[n].value);
        const double rel = diff / std::max(std::abs(sym[n].value), 1e-300);
        if (jet[n].quarter_turns != sym[n].quarter_turns) {
            ok = false;
        }
        if (rel > 1e-9 && diff > 1e-12 * scale) {
            ok = false;
        }
        if (std::abs(sym[n].value) > 1e-12 * scale) {
            worst = std::max(worst, rel);
        }
    }
    return ok;
}

double golden_for(const VerifyConfig &c, const std::string &preset)
{
    return preset == "parabolic" ? c.golden_parabolic : c.golden_relativistic;
}

} // namespace

VerifyConfig default_verify_config()
{
    return VerifyConfig{};
}

VerifyConfig verify_config_from_json(const nlohmann::json &j, VerifyConfig c)
{
    auto get = [&j](const char *section, const char *key, auto &field) {
        const nlohmann::json *src = &j;
        if (section != nullptr) {
            if (!j.contains(section)) {
                return;
            }
            src = &j.at(section);
        }
        if (src->contains(key) && !src->at(key).is_null()) {
            field = src->at(key).get<std::remove_reference_t<decltype(field)>>();
        }
    };
    get(nullptr, "seed", c.seed);
    get(nullptr, "threads", c.threads);
    if (j.contains("criteria")) {
        c.criteria = j.at("criteria").get<std::set<unsigned>>();
    }
    if (j.contains("induction")) {
        c.induction = scope_from_json(j.at("induction"));
    }
    get("counting", "partition_kmax", c.partition_kmax);
    get("counting", "index_set_dmax", c.index_set_dmax);
    get("counting", "index_set_kmax", c.index_set_kmax);
    get("counting", "sequence_dmax", c.sequence_dmax);
    get("counting", "sequence_kmax", c.sequence_kmax);
    get("estimates", "ell_max", c.ell_max);
    get("estimates", "redordfac_dmax", c.redordfac_dmax);
    get("estimates", "redordfac_order", c.redordfac_order);
    get("estimates", "epsilon", c.epsilon);
    if (j.contains("estimates")) {
        const auto &e = j.at("estimates");
        if (e.contains("coefficient")) {
            c.coefficient = scope_from_json(e.at("coefficient"));
        }
        if (e.contains("C")) {
            c.estimates_C = e.at("C").is_null() ? std::nullopt : std::optional<double>(e.at("C").get<double>());
        }
    }
    get("dispersion", "oracle_nmax", c.oracle_nmax);
    get("dispersion", "oracle_points", c.oracle_points);
    get("dispersion", "growth_nmax", c.growth_nmax);
    get("dispersion", "xi", c.xis);
    get("dispersion", "composite_samples", c.composite_samples);
    get("dispersion", "composite_order", c.composite_order);
    get("dispersion", "golden_parabolic", c.golden_parabolic);
    get("dispersion", "golden_relativistic", c.golden_relativistic);
    if (j.contains("dispersion") && j.at("dispersion").contains("grid")) {
        c.grid = parse_grid(j.at("dispersion").at("grid").get<std::string>());
    }
    get("yukawa", "s", c.yukawa_s);
    get("yukawa", "r", c.yukawa_r);
    get("yukawa", "alpha_max", c.alpha_max);
    get("yukawa", "samples", c.mc_samples);
    get("yukawa", "box_half_width", c.box_half_width);
    get("yukawa", "levels", c.levels);
    get("yukawa", "level_min", c.level_min);
    get("yukawa", "level_max", c.level_max);
    get("interaction", "p", c.interaction_p);
    get("interaction", "gamma_max", c.gamma_max);
    get("interaction", "tolerance", c.interaction_tolerance);

    if (j.contains("max_order")) {
        const auto m = j.at("max_order").get<unsigned>();
        for (auto &[d, k] : c.induction) {
            k = std::min(k, m);
        }
        for (auto &[d, k] : c.coefficient) {
            k = std::min(k, m);
        }
        for (unsigned *f : {&c.partition_kmax, &c.index_set_kmax, &c.sequence_kmax, &c.ell_max, &c.redordfac_order,
                            &c.oracle_nmax, &c.growth_nmax, &c.composite_order, &c.alpha_max, &c.gamma_max}) {
            *f = std::min(*f, m);
        }
    }
    return c;
}

nlohmann::json to_json(const VerifyConfig &c)
{
    std::ostringstream grid;
    grid << c.grid.a << ':' << c.grid.b << ':' << c.grid.h;
    return {
        {"seed", c.seed},
        {"threads", c.threads},
        {"criteria", c.criteria},
        {"induction", scope_json(c.induction)},
        {"counting",
         {{"partition_kmax", c.partition_kmax},
          {"index_set_dmax", c.index_set_dmax},
          {"index_set_kmax", c.index_set_kmax},
          {"sequence_dmax", c.sequence_dmax},
          {"sequence_kmax", c.sequence_kmax}}},
        {"estimates",
         {{"ell_max", c.ell_max},
          {"redordfac_dmax", c.redordfac_dmax},
          {"redordfac_order", c.redordfac_order},
          {"coefficient", scope_json(c.coefficient)},
          {"epsilon", c.epsilon},
          {"C", c.estimates_C ? nlohmann::json(*c.estimates_C) : nlohmann::json(nullptr)}}},
        {"dispersion",
         {{"oracle_nmax", c.oracle_nmax},
          {"oracle_points", c.oracle_points},
          {"growth_nmax", c.growth_nmax},
          {"xi", c.xis},
          {"grid", grid.str()},
          {"composite_samples", c.composite_samples},
          {"composite_order", c.composite_order},
          {"golden_parabolic", c.golden_parabolic},
          {"golden_relativistic", c.golden_relativistic}}},
        {"yukawa",
         {{"s", c.yukawa_s},
          {"r", c.yukawa_r},
          {"alpha_max", c.alpha_max},
          {"samples", c.mc_samples},
          {"box_half_width", c.box_half_width},
          {"levels", c.levels},
          {"level_min", c.level_min},
          {"level_max", c.level_max}}},
        {"interaction", {{"p", c.interaction_p}, {"gamma_max", c.gamma_max}, {"tolerance", c.interaction_tolerance}}},
    };
}

bool CriterionResult::pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckRecord &r) { return r.pass; });
}

const std::vector<std::pair<unsigned, std::string>> &criterion_titles()
{
    static const std::vector<std::pair<unsigned, std::string>> titles{
        {1, "iterated commutator step matches closed form"},
        {2, "closed-form coefficients are integers"},
        {3, "partition and index-set counting"},
        {4, "factorial inequalities"},
        {5, "free-commutator derivative growth"},
        {6, "Yukawa weak-norm bounds"},
        {7, "interaction constant chain"},
        {8, "seeded reruns are identical"},
    };
    return titles;
}

namespace
{

CriterionResult make_result(unsigned id)
{
    for (const auto &[i, title] : criterion_titles()) {
        if (i == id) {
            return {id, title, {}};
        }
    }
    throw std::out_of_range("unknown criterion " + std::to_string(id));
}

} // namespace

CriterionResult check_induction(const VerifyConfig &config)
{
    auto res = make_result(1);
    for (const auto &[d, K] : config.induction) {
        const auto report = verify_iterated(d, K, config.threads);
        nlohmann::json levels = nlohmann::json::array();
        for (const auto &l : report.levels) {
            levels.push_back({{"k", l.k},
                              {"closed_terms", l.closed_terms},
                              {"stepped_terms", l.stepped_terms},
                              {"coefficient_sum", big_string(l.coefficient_sum)},
                              {"pass", l.pass}});
        }
        nlohmann::json payload{{"levels", levels}};
        if (report.first_discrepancy) {
            const auto &x = *report.first_discrepancy;
            payload["first_discrepancy"] = {{"level", x.level},
                                            {"key", to_json(x.key)},
                                            {"expected", big_string(x.expected)},
                                            {"actual", big_string(x.actual)}};
        }
        res.checks.push_back({"c1.induction.d" + std::to_string(d), {{"dim", d}, {"max_order", K}}, report.pass(),
                              payload});
    }
    return res;
}

CriterionResult check_integrality(const VerifyConfig &config)
{
    auto res = make_result(2);
    for (const auto &[d, K] : config.induction) {
        std::size_t checked = 0;
        bool ok = true;
        std::string offending;
        for (unsigned k = 0; k <= K && ok; ++k) {
            for (const auto &q : IndexSet(d, k)) {
                ++checked;
                try {
                    if (closed_coefficient(q) < 1) {
                        ok = false;
                    }
                } catch (const std::logic_error &) {
                    ok = false;
                }
                if (!ok) {
                    offending = to_string(q);
                    break;
                }
            }
        }
        nlohmann::json payload{{"quadruples", checked}};
        if (!ok) {
            payload["offending"] = offending;
        }
        res.checks.push_back({"c2.integrality.d" + std::to_string(d), {{"dim", d}, {"max_order", K}}, ok, payload});
    }
    return res;
}

CriterionResult check_counting(const VerifyConfig &config)
{
    auto res = make_result(3);
    const auto p = partition_counts(config.partition_kmax);

    bool enum_ok = true;
    for (unsigned k = 0; k <= config.partition_kmax; ++k) {
        const auto polys = polyindices_of_order(k);
        bool orders_ok = std::all_of(polys.begin(), polys.end(), [k](const Polyindex1 &a) { return order(a) == k; });
        if (!orders_ok || BigInt(polys.size()) != p[k]) {
            enum_ok = false;
        }
    }
    res.checks.push_back({"c3.partitions.enumeration",
                          {{"k_max", config.partition_kmax}},
                          enum_ok,
                          {{"p_k_max", big_string(p[config.partition_kmax])}}});

    bool bound_ok = true;
    double tightest = 0.0;
    for (unsigned k = 1; k <= config.partition_kmax; ++k) {
        const double pk = p[k].convert_to<double>();
        const double bound = partition_bound(k);
        bound_ok = bound_ok && pk < bound;
        tightest = std::max(tightest, pk / bound);
    }
    res.checks.push_back({"c3.partitions.bound",
                          {{"k_max", config.partition_kmax}},
                          bound_ok,
                          {{"max_ratio", tightest}}});

    for (unsigned d = 1; d <= config.index_set_dmax; ++d) {
        bool ok = true;
        nlohmann::json counts = nlohmann::json::array();
        for (unsigned k = 0; k <= config.index_set_kmax; ++k) {
            std::size_t n = 0;
            IndexSet set(d, k);
            for (auto it = set.begin(); !(it == set.end()); ++it) {
                ++n;
            }
            const BigInt formula = index_set_count(d, k);
            ok = ok && BigInt(n) == formula;
            counts.push_back(n);
        }
        res.checks.push_back({"c3.index_set.d" + std::to_string(d),
                              {{"dim", d}, {"k_max", config.index_set_kmax}},
                              ok,
                              {{"counts", counts}}});
    }

    for (unsigned d = 1; d <= config.sequence_dmax; ++d) {
        bool ok = true;
        for (unsigned k = 0; k <= config.sequence_kmax; ++k) {
            const auto [direct, binom] = sequence_count_identity(d, k);
            ok = ok && direct == binom;
        }
        res.checks.push_back({"c3.sequences.d" + std::to_string(d),
                              {{"dim", d}, {"k_max", config.sequence_kmax}},
                              ok,
                              {{"count_at_k_max", big_string(sequence_count_identity(d, config.sequence_kmax).second)}}});
    }
    return res;
}

CriterionResult check_factorial_estimates(const VerifyConfig &config)
{
    auto res = make_result(4);
    ScanDomain domain = beta_ell_domain(config.ell_max, config.epsilon);
    for (unsigned d = 1; d <= config.redordfac_dmax; ++d) {
        domain.append(redordfac_domain(d, config.redordfac_order, config.epsilon));
    }
    for (const auto &[d, K] : config.coefficient) {
        domain.append(coefficient_domain(d, K, config.epsilon));
    }
    const nlohmann::json inputs{{"ell_max", config.ell_max},
                                {"redordfac_dmax", config.redordfac_dmax},
                                {"redordfac_order", config.redordfac_order},
                                {"coefficient", scope_json(config.coefficient)},
                                {"epsilon", config.epsilon}};

    double C = 0.0;
    nlohmann::json payload{{"domain_size", domain.size()}};
    bool search_ok = true;
    if (config.estimates_C) {
        C = *config.estimates_C;
        payload["C"] = C;
    } else {
        try {
            const auto min = find_min_C(domain);
            C = min.C0;
            payload["C0"] = min.C0;
            payload["bisection_iterations"] = min.iterations;
            payload["monotone_samples_pass"] = min.monotone_ok;
            search_ok = min.monotone_ok;
        } catch (const std::exception &e) {
            search_ok = false;
            payload["error"] = e.what();
        }
    }
    if (C > 0.0) {
        const auto outcome = scan(domain, C, ArithmeticPath::automatic);
        payload["checked"] = outcome.checked;
        nlohmann::json failures = nlohmann::json::array();
        for (const auto &f : outcome.failures) {
            failures.push_back({{"input", f.input}, {"lhs_log", f.lhs_log}, {"rhs_log", f.rhs_log}});
        }
        payload["failures"] = failures;
        search_ok = search_ok && outcome.pass;
    }
    res.checks.push_back({"c4.estimates.scan", inputs, search_ok, payload});

    // beta concentrated at degree 0 with b = 0 gives gamma! == reduced order factorial
    bool sharp = true;
    std::size_t sharp_cases = 0;
    for (unsigned d = 1; d <= config.redordfac_dmax; ++d) {
        for (unsigned n = 0; n <= config.redordfac_order; ++n) {
            for (const auto &comp : weak_compositions(n, d)) {
                PolyindexD beta(d);
                for (unsigned s = 0; s < d; ++s) {
                    for (unsigned c = 0; c < comp[s]; ++c) {
                        beta.bump(0, s);
                    }
                }
                ++sharp_cases;
                sharp = sharp && gamma_of(beta, PolyindexD(d)).factorial() == reduced_order_factorial(beta);
            }
        }
    }
    res.checks.push_back({"c4.estimates.sharpness",
                          {{"dmax", config.redordfac_dmax}, {"order", config.redordfac_order}},
                          sharp,
                          {{"cases", sharp_cases}}});
    return res;
}

namespace
{

std::vector<CheckRecord> composite_checks(const VerifyConfig &config)
{
    std::vector<CheckRecord> out;
    if (config.composite_order == 0 || config.composite_samples == 0) {
        return out;
    }
    for (const std::string preset : {"parabolic", "relativistic"}) {
        const DispersionModel model(preset_spec(preset));
        for (std::size_t j = 0; j < config.xis.size(); ++j) {
            const auto rep = composite_bound_check(model, {config.xis[j]}, config.grid, config.composite_order,
                                                   config.composite_samples, config.seed + j);
            double min_slack = std::numeric_limits<double>::infinity();
            for (const auto &c : rep.cases) {
                min_slack = std::min(min_slack, c.slack);
            }
            out.push_back({"c5.composite." + preset + ".xi" + std::to_string(j),
                           {{"preset", preset},
                            {"xi", config.xis[j]},
                            {"samples", config.composite_samples},
                            {"max_order", config.composite_order},
                            {"seed", config.seed + j}},
                           rep.pass(),
                           {{"C_double_prime", rep.C_double_prime}, {"min_slack", min_slack}}});
        }
    }
    return out;
}

} // namespace

CriterionResult check_free_commutator(const VerifyConfig &config)
{
    auto res = make_result(5);
    for (const std::string preset : {"parabolic", "relativistic"}) {
        DispersionModel model(preset_spec(preset));

        bool agree = true;
        double worst = 0.0;
        for (double xi : config.xis) {
            for (unsigned p = 0; p < config.oracle_points; ++p) {
                const double k = -3.8 + 0.4 * p;
                for (const auto &t : {Target::omega(), Target::v(0), Target::w()}) {
                    const auto jet = model.dv_iterates({xi}, {k}, config.oracle_nmax, t);
                    const auto sym = model.symbolic_dv_iterates({xi}, {k}, config.oracle_nmax, t);
                    agree = iterates_agree(jet, sym, worst) && agree;
                }
            }
        }
        res.checks.push_back({"c5.jet_oracle." + preset,
                              {{"preset", preset}, {"n_max", config.oracle_nmax}, {"points", config.oracle_points},
                               {"xi", config.xis}},
                              agree,
                              {{"worst_relative_error", worst}}});

        if (config.growth_nmax > 0) {
            std::vector<std::vector<double>> xis;
            for (double x : config.xis) {
                xis.push_back({x});
            }
            const auto g = growth_certificate(model, xis, config.grid, config.growth_nmax, Target::omega());
            nlohmann::json series = nlohmann::json::array();
            for (const auto &s : g.series) {
                series.push_back({{"xi", s.xi}, {"ratios", s.ratios}, {"fitted_C", s.fitted_C}});
            }
            const double golden = golden_for(config, preset);
            res.checks.push_back({"c5.growth." + preset,
                                  {{"preset", preset}, {"n_max", config.growth_nmax}, {"xi", config.xis}},
                                  g.max_ratio() <= golden,
                                  {{"max_ratio", g.max_ratio()},
                                   {"golden", golden},
                                   {"continuity_gap", g.continuity_gap},
                                   {"series", series}}});
        }
    }
    for (auto &r : composite_checks(config)) {
        res.checks.push_back(std::move(r));
    }
    return res;
}

namespace
{

std::vector<CheckRecord> yukawa_mc_checks(const VerifyConfig &config)
{
    std::vector<CheckRecord> out;
    const auto wc = weak_config(config);
    const double c = yukawa_weak_bound(MultiIndex{0, 0, 0}, config.yukawa_s, config.yukawa_r).c;
    for (const auto &alpha : multi_indices_up_to(config.alpha_max)) {
        WeakNormConfig cfg = wc;
        if (alpha.total() == 0) {
            cfg.method = WeakNormMethod::radial_exact;
        }
        const auto weak = yukawa_deriv_weak_norm(alpha, cfg, config.yukawa_r);
        const double rhs = factorial_power(alpha, c);
        const auto chain = yukawa_weak_bound(alpha, config.yukawa_s, config.yukawa_r);
        out.push_back({"c6.yukawa.alpha" + to_string(alpha),
                       {{"alpha", to_json(alpha)}, {"s", config.yukawa_s}, {"r", config.yukawa_r},
                        {"samples", alpha.total() == 0 ? 0 : config.mc_samples}, {"seed", config.seed}},
                       weak.value <= rhs,
                       {{"weak_norm", weak.value},
                        {"std_error", weak.std_error},
                        {"argmax_level", weak.argmax_level},
                        {"alpha_factorial_c_power", rhs},
                        {"c", c},
                        {"chain_bound", chain.bound},
                        {"within_chain_bound", weak.value <= chain.bound}}});
    }
    return out;
}

std::vector<CheckRecord> interaction_mc_checks(const VerifyConfig &config)
{
    std::vector<CheckRecord> out;
    const auto wc = weak_config(config);
    for (const auto &gamma : multi_indices_up_to(config.gamma_max)) {
        WeakNormConfig cfg = wc;
        if (gamma.total() == 0) {
            cfg.method = WeakNormMethod::radial_exact;
        }
        const auto r = interaction_constant(gamma, config.yukawa_s, config.interaction_p, 3, cfg, config.yukawa_r,
                                            config.interaction_tolerance);
        out.push_back({"c7.interaction.gamma" + to_string(gamma),
                       {{"gamma", to_json(gamma)}, {"s", config.yukawa_s}, {"p", config.interaction_p},
                        {"dim", 3}, {"seed", config.seed}},
                       r.pass,
                       {{"t", r.exponents.t},
                        {"q", r.exponents.q},
                        {"j_norm", r.j_norm},
                        {"weak_norm", r.weak.value},
                        {"constant", r.constant},
                        {"bound", r.bound},
                        {"c", r.c}}});
    }
    return out;
}

} // namespace

CriterionResult check_yukawa(const VerifyConfig &config)
{
    auto res = make_result(6);
    const double closed = std::pow(4.0 * std::numbers::pi / 3.0, 2.0 / 3.0) * 4.0 * std::numbers::pi;

    WeakNormConfig radial = weak_config(config);
    radial.method = WeakNormMethod::radial_exact;
    const auto exact = weak_norm(yukawa_profile(), radial);
    res.checks.push_back({"c6.weak_norm.radial_exact",
                          {{"s", config.yukawa_s}, {"levels", config.levels}},
                          std::abs(exact.value - closed) <= 0.005 * closed,
                          {{"value", exact.value}, {"closed_form", closed}, {"tolerance", 0.005}}});

    const auto mc = yukawa_deriv_weak_norm(MultiIndex{0, 0, 0}, weak_config(config), config.yukawa_r);
    res.checks.push_back({"c6.weak_norm.monte_carlo",
                          {{"s", config.yukawa_s}, {"samples", config.mc_samples}, {"seed", config.seed}},
                          std::abs(mc.value - closed) <= 0.02 * closed,
                          {{"value", mc.value}, {"closed_form", closed}, {"std_error", mc.std_error}, {"tolerance", 0.02}}});

    for (double r : {0.3, 0.5, 0.7}) {
        const auto m = M_s(1.5, r);
        res.checks.push_back({"c6.M_3/2.r" + std::to_string(r).substr(0, 3),
                              {{"s", 1.5}, {"r", r}},
                              std::abs(m.value - (1.0 + r * r)) <= 1e-6,
                              {{"value", m.value}, {"expected", 1.0 + r * r}}});
    }
    for (auto &r : yukawa_mc_checks(config)) {
        res.checks.push_back(std::move(r));
    }
    return res;
}

CriterionResult check_interaction(const VerifyConfig &config)
{
    auto res = make_result(7);
    for (auto &r : interaction_mc_checks(config)) {
        res.checks.push_back(std::move(r));
    }
    const double bad_p = 0.5;
    bool rejected = false;
    std::string message;
    try {
        j_norm(config.yukawa_s, bad_p, 3);
    } catch (const DivergenceError &e) {
        rejected = true;
        message = e.what();
    }
    res.checks.push_back({"c7.divergence_rejected",
                          {{"s", config.yukawa_s}, {"p", bad_p}, {"dim", 3}},
                          rejected,
                          {{"error", message}}});
    return res;
}

CriterionResult check_reproducibility(const VerifyConfig &config)
{
    auto res = make_result(8);
    auto run = [&config] {
        nlohmann::json out = nlohmann::json::array();
        for (const auto &r : composite_checks(config)) {
            out.push_back({r.name, r.pass, r.payload});
        }
        if (config.criteria.contains(6)) {
            for (const auto &r : yukawa_mc_checks(config)) {
                out.push_back({r.name, r.pass, r.payload});
            }
        }
        if (config.criteria.contains(7)) {
            for (const auto &r : interaction_mc_checks(config)) {
                out.push_back({r.name, r.pass, r.payload});
            }
        }
        return out.dump();
    };
    const auto first = run();
    const auto second = run();
    res.checks.push_back({"c8.seeded_rerun",
                          {{"seed", config.seed}},
                          first == second,
                          {{"digest_first", fnv1a_hex(first)}, {"digest_second", fnv1a_hex(second)}}});
    return res;
}

CriterionResult run_criterion(unsigned id, const VerifyConfig &config)
{
    switch (id) {
    case 1:
        return check_induction(config);
    case 2:
        return check_integrality(config);
    case 3:
        return check_counting(config);
    case 4:
        return check_factorial_estimates(config);
    case 5:
        return check_free_commutator(config);
    case 6:
        return check_yukawa(config);
    case 7:
        return check_interaction(config);
    case 8:
        return check_reproducibility(config);
    default:
        throw std::out_of_range("unknown criterion " + std::to_string(id));
    }
}

RunReport verify_all(const VerifyConfig &config)
{
    RunReport report("verify-all", to_json(config));
    for (unsigned id : config.criteria) {
        report.add_all(run_criterion(id, config).checks);
    }
    return report;
}

std::vector<CriterionResult> criteria_from_report(const nlohmann::json &report)
{
    std::vector<CriterionResult> out;
    for (const auto &[id, title] : criterion_titles()) {
        CriterionResult r{id, title, {}};
        const std::string prefix = "c" + std::to_string(id) + ".";
        for (const auto &c : report.at("checks")) {
            const auto name = c.at("name").get<std::string>();
            if (name.rfind(prefix, 0) == 0) {
                r.checks.push_back({name, c.at("inputs"), c.at("pass").get<bool>(), c.at("payload")});
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace adcert

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include <adcert/commutator.hpp>
#include <adcert/dispersion.hpp>
#include <adcert/enumeration.hpp>
#include <adcert/estimates.hpp>
#include <adcert/potential.hpp>
#include <adcert/report.hpp>
#include <adcert/verify.hpp>

namespace adcert::cli
{

namespace
{

struct GlobalOptions {
    std::optional<std::string> json_path;
    std::optional<std::string> csv_path;
    bool json = false;
    bool csv = false;
    std::uint64_t seed = 42;
    unsigned threads = 1;
};

struct CommandOutput {
    RunReport report;
    // merged into the top level of the JSON report
    nlohmann::json extra = nlohmann::json::object();
    std::optional<std::string> csv;
    std::string text;
};

class InputError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

std::string fmt(double x)
{
    std::ostringstream s;
    s << std::setprecision(17) << x;
    return s.str();
}

MultiIndex parse_multi_index(const std::string &text)
{
    std::vector<unsigned> orders;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        try {
            std::size_t used = 0;
            const long v = std::stol(part, &used);
            if (used != part.size() || v < 0) {
                throw std::invalid_argument(part);
            }
            orders.push_back(static_cast<unsigned>(v));
        } catch (const std::logic_error &) {
            throw InputError("bad multi-index component '" + part + "' in '" + text + "'");
        }
    }
    if (orders.empty()) {
        throw InputError("empty multi-index");
    }
    return MultiIndex(std::move(orders));
}

void write_file(const std::string &path, const std::string &content)
{
    std::ofstream f(path);
    if (!f) {
        throw InputError("cannot open " + path + " for writing");
    }
    f << content;
}

int emit(CommandOutput &result, const GlobalOptions &g, double seconds, std::ostream &out)
{
    result.report.set_wall_time(seconds);
    const bool to_stdout_machine = (g.json && !g.json_path) || (g.csv && !g.csv_path);
    if (g.json) {
        auto j = result.report.to_json();
        if (result.extra.is_object()) {
            j.update(result.extra);
        }
        const auto dumped = j.dump(2) + "\n";
        if (g.json_path) {
            write_file(*g.json_path, dumped);
        } else {
            out << dumped;
        }
    }
    if (g.csv) {
        const auto csv = result.csv ? *result.csv : result.report.to_csv();
        if (g.csv_path) {
            write_file(*g.csv_path, csv);
        } else {
            out << csv;
        }
    }
    if (!to_stdout_machine) {
        out << result.text << result.report.to_text();
    }
    return result.report.pass() ? 0 : 1;
}

// expand ---------------------------------------------------------------------

CommandOutput run_expand(unsigned dim, unsigned k)
{
    const auto e = closed_expansion(dim, k);
    CommandOutput o{RunReport("expand", {{"dim", dim}, {"order", k}}), {}, {}, {}};
    nlohmann::json terms = nlohmann::json::array();
    std::ostringstream csv;
    std::ostringstream text;
    csv << "alpha,beta,a,b,coeff\n";
    for (const auto &t : e.to_terms()) {
        const auto j = to_json(t.key);
        terms.push_back({{"alpha", j["alpha"]},
                         {"beta", j["beta"]},
                         {"a", j["a"]},
                         {"b", j["b"]},
                         {"coeff", t.coefficient.str()}});
        csv << csv_field(j["alpha"].dump()) << ',' << csv_field(j["beta"].dump()) << ',' << csv_field(j["a"].dump())
            << ',' << csv_field(j["b"].dump()) << ',' << t.coefficient.str() << '\n';
        text << t.coefficient.str() << "  " << to_string(t.key) << '\n';
    }
    o.report.add({"expand.terms",
                  {{"dim", dim}, {"order", k}},
                  true,
                  {{"terms", terms.size()}, {"coefficient_sum", e.coefficient_sum().str()}}});
    o.extra["terms"] = std::move(terms);
    o.csv = csv.str();
    o.text = text.str();
    return o;
}

// verify-induction -------------------------------------------------------------

CommandOutput run_verify_induction(unsigned dim, unsigned K, bool stepwise, unsigned threads)
{
    const auto rep = stepwise ? verify_induction(dim, K, threads) : verify_iterated(dim, K, threads);
    CommandOutput o{RunReport("verify-induction", {{"dim", dim}, {"max_order", K}, {"stepwise", stepwise}}), {}, {}, {}};
    for (const auto &l : rep.levels) {
        o.report.add({"induction.k" + std::to_string(l.k),
                      {{"dim", dim}, {"k", l.k}},
                      l.pass,
                      {{"closed_terms", l.closed_terms},
                       {"stepped_terms", l.stepped_terms},
                       {"coefficient_sum", l.coefficient_sum.str()}}});
    }
    if (rep.first_discrepancy) {
        const auto &d = *rep.first_discrepancy;
        o.text = "first discrepancy at level " + std::to_string(d.level) + ": " + to_string(d.key) + " expected " +
                 d.expected.str() + " got " + d.actual.str() + "\n";
    }
    return o;
}

// count ------------------------------------------------------------------------

CommandOutput run_count(const std::vector<unsigned> &dims, unsigned K, std::size_t limit)
{
    CommandOutput o{RunReport("count", {{"dims", dims}, {"max_order", K}, {"enumeration_limit", limit}}), {}, {}, {}};
    std::ostringstream csv;
    csv << "d,k,exact_count,composition_formula_count,partition_bound_product\n";
    for (unsigned d : dims) {
        for (const auto &row : terms_bound_report(d, K, limit)) {
            const bool agree = !row.enumerated_count || *row.enumerated_count == row.formula_count;
            const std::string exact = row.enumerated_count ? row.enumerated_count->str() : "";
            csv << d << ',' << row.k << ',' << exact << ',' << row.formula_count.str() << ','
                << fmt(row.partition_bound_product) << '\n';
            o.report.add({"count.d" + std::to_string(d) + ".k" + std::to_string(row.k),
                          {{"dim", d}, {"k", row.k}},
                          agree,
                          {{"exact_count", exact.empty() ? nlohmann::json(nullptr) : nlohmann::json(exact)},
                           {"formula_count", row.formula_count.str()},
                           {"fitted_base", row.fitted_base},
                           {"partition_bound_product", row.partition_bound_product}}});
        }
    }
    o.csv = csv.str();
    return o;
}

// check-estimates --------------------------------------------------------------

CommandOutput run_check_estimates(const std::string &which, std::optional<double> C_flag, double eps, unsigned K,
                                  unsigned dim)
{
    ScanDomain domain;
    if (which == "betaell") {
        domain = beta_ell_domain(K, eps);
    } else if (which == "redordfac") {
        domain = redordfac_domain(dim, K, eps);
    } else {
        domain = coefficient_domain(dim, K, eps);
    }
    nlohmann::json params{{"which", which}, {"eps", eps}, {"max_order", K}, {"dim", dim}};
    double C = 0.0;
    if (C_flag) {
        C = *C_flag;
    } else {
        C = find_min_C(domain).C0;
        params["C_searched"] = true;
    }
    params["C"] = C;
    CommandOutput o{RunReport("check-estimates", params), {}, {}, {}};
    const EstimateConfig cfg(C, eps);

    std::ostringstream csv;
    csv << "input,lhs_log,rhs_log,pass\n";
    auto row = [&](const std::string &input, const LogComparison &cmp, bool pass) {
        csv << csv_field(input) << ',' << fmt(cmp.lhs_log) << ',' << fmt(cmp.rhs_log) << ','
            << (pass ? "true" : "false") << '\n';
        o.report.add({which + "." + input,
                      {{"input", input}, {"C", C}, {"eps", eps}},
                      pass,
                      {{"lhs_log", cmp.lhs_log}, {"rhs_log", cmp.rhs_log}}});
    };
    for (unsigned ell : domain.ells) {
        const auto chk = check_beta_ell(ell, cfg);
        const std::string input = "ell=" + std::to_string(ell) + " beta=" + to_string(chk.beta);
        if (chk.size_bound.pass) {
            row(input, chk.factorial_bound, chk.pass());
        } else {
            row(input + " size", chk.size_bound, false);
        }
    }
    for (const auto &[beta, b] : domain.pairs) {
        const auto cmp = check_redordfac(beta, b, cfg);
        row("beta=" + to_string(beta) + " b=" + to_string(b), cmp, cmp.pass);
    }
    for (const auto &q : domain.quadruples) {
        const auto cmp = coefficient_bound_check(q, cfg);
        row(to_string(q), cmp, cmp.pass);
    }
    o.csv = csv.str();
    o.text = "C = " + fmt(C) + ", c = " + fmt(cfg.c()) + ", C'' = " + fmt(cfg.C_double_prime()) + "\n";
    return o;
}

// free-commutator ----------------------------------------------------------------

Target parse_target(const std::string &name)
{
    if (name == "omega") {
        return Target::omega();
    }
    if (name == "w") {
        return Target::w();
    }
    if (name.size() > 1 && name[0] == 'v') {
        return Target::v(static_cast<unsigned>(std::stoul(name.substr(1))));
    }
    throw InputError("unknown target '" + name + "' (omega, w, v0, v1, ...)");
}

DispersionSpec load_spec(const std::string &preset, const std::string &spec_file)
{
    if (spec_file.empty()) {
        return preset_spec(preset);
    }
    std::ifstream f(spec_file);
    if (!f) {
        throw InputError("cannot read spec file " + spec_file);
    }
    return spec_from_json(nlohmann::json::parse(f));
}

struct FreeCommutatorArgs {
    std::string preset = "parabolic";
    std::string spec_file;
    std::vector<double> xi{0.0};
    unsigned max_n = 10;
    std::string grid = "-4:4:0.05";
    std::string target = "omega";
    std::optional<double> golden;
    unsigned composite_samples = 0;
    unsigned composite_order = 6;
};

CommandOutput run_free_commutator(const FreeCommutatorArgs &a, std::uint64_t seed)
{
    const DispersionModel model(load_spec(a.preset, a.spec_file));
    const unsigned d = model.dim();
    std::vector<std::vector<double>> xis;
    if (d == 1) {
        for (double x : a.xi) {
            xis.push_back({x});
        }
    } else {
        if (a.xi.size() != d) {
            throw InputError("--xi needs exactly " + std::to_string(d) + " values for this spec");
        }
        xis.push_back(a.xi);
    }
    const auto grid = parse_grid(a.grid);
    const auto target = parse_target(a.target);
    const auto g = growth_certificate(model, xis, grid, a.max_n, target);

    nlohmann::json params{{"spec", to_json(model.spec())}, {"xi", a.xi},         {"max_n", a.max_n},
                          {"grid", a.grid},                {"target", a.target}, {"seed", seed}};
    if (a.golden) {
        params["golden"] = *a.golden;
    }
    CommandOutput o{RunReport("free-commutator", params), {}, {}, {}};

    std::ostringstream csv;
    csv << "n,sup_ratio,fitted_C\n";
    double fitted = 0.0;
    for (const auto &s : g.series) {
        fitted = std::max(fitted, s.fitted_C);
    }
    for (unsigned n = 1; n <= a.max_n; ++n) {
        double sup = 0.0;
        for (const auto &s : g.series) {
            sup = std::max(sup, s.ratios[n]);
        }
        csv << n << ',' << fmt(sup) << ',' << fmt(fitted) << '\n';
    }
    const bool within = !a.golden || g.max_ratio() <= *a.golden;
    o.report.add({"growth." + to_string(target),
                  {{"spec", model.spec().name}, {"xi", a.xi}, {"max_n", a.max_n}, {"grid", a.grid}},
                  within,
                  {{"max_ratio", g.max_ratio()}, {"fitted_C", fitted}, {"continuity_gap", g.continuity_gap}}});

    if (a.composite_samples > 0) {
        for (std::size_t j = 0; j < xis.size(); ++j) {
            const auto rep = composite_bound_check(model, xis[j], grid, a.composite_order, a.composite_samples, seed + j);
            double min_slack = std::numeric_limits<double>::infinity();
            for (const auto &c : rep.cases) {
                min_slack = std::min(min_slack, c.slack);
            }
            o.report.add({"composite.xi" + std::to_string(j),
                          {{"xi", xis[j]}, {"samples", a.composite_samples}, {"max_order", a.composite_order},
                           {"seed", seed + j}},
                          rep.pass(),
                          {{"C_double_prime", rep.C_double_prime}, {"min_slack", min_slack}}});
        }
    }
    o.csv = csv.str();
    o.text = "grid maxima are lower bounds on the supremum\n";
    return o;
}

// yukawa / interaction / l1-check ------------------------------------------------------

WeakNormConfig mc_config(double s, std::size_t samples, std::uint64_t seed, unsigned threads, bool radial)
{
    WeakNormConfig cfg;
    cfg.s = s;
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.threads = threads;
    cfg.method = radial ? WeakNormMethod::radial_exact : WeakNormMethod::monte_carlo;
    return cfg;
}

CommandOutput run_yukawa(const std::string &alpha_text, double s, double r, std::size_t samples, std::uint64_t seed,
                         unsigned threads)
{
    const auto alpha = parse_multi_index(alpha_text);
    if (alpha.dim() != 3) {
        throw InputError("--alpha needs three components");
    }
    const auto weak = yukawa_deriv_weak_norm(alpha, mc_config(s, samples, seed, threads, alpha.total() == 0), r);
    const auto chain = yukawa_weak_bound(alpha, s, r);
    const double bound = factorial_power(alpha, chain.c);
    const bool pass = weak.value <= bound;
    CommandOutput o{RunReport("yukawa", {{"alpha", to_json(alpha)}, {"s", s}, {"r", r}, {"samples", samples},
                                         {"seed", seed}}),
                    {},
                    {},
                    {}};
    o.report.add({"yukawa.alpha" + to_string(alpha),
                  {{"alpha", to_json(alpha)}, {"s", s}, {"r", r}},
                  pass,
                  {{"weak_norm", weak.value},
                   {"std_error", weak.std_error},
                   {"argmax_level", weak.argmax_level},
                   {"bound", bound},
                   {"chain_bound", chain.bound},
                   {"M_s", chain.M_s},
                   {"c", chain.c}}});
    o.extra = {{"weak_norm", weak.value}, {"bound", bound}, {"c", chain.c}};
    return o;
}

CommandOutput run_interaction(const std::string &gamma_text, double p, double s, unsigned dim, double r,
                              std::size_t samples, std::uint64_t seed, unsigned threads)
{
    const auto gamma = parse_multi_index(gamma_text);
    if (gamma.dim() != dim) {
        throw InputError("--gamma must have --dim components");
    }
    const auto res =
        interaction_constant(gamma, s, p, dim, mc_config(s, samples, seed, threads, gamma.total() == 0), r);
    CommandOutput o{RunReport("interaction", {{"gamma", to_json(gamma)}, {"p", p}, {"s", s}, {"dim", dim}, {"r", r},
                                              {"samples", samples}, {"seed", seed}}),
                    {},
                    {},
                    {}};
    o.report.add({"interaction.gamma" + to_string(gamma),
                  {{"gamma", to_json(gamma)}, {"p", p}, {"s", s}, {"dim", dim}},
                  res.pass,
                  {{"t", res.exponents.t},
                   {"q", res.exponents.q},
                   {"j_norm", res.j_norm},
                   {"weak_norm", res.weak.value},
                   {"constant", res.constant},
                   {"bound", res.bound},
                   {"c", res.c}}});
    o.extra = {{"constant", res.constant}, {"bound", res.bound}, {"j_norm", res.j_norm}};
    return o;
}

CommandOutput run_l1_check(const std::string &preset, unsigned n_max)
{
    if (preset != "gaussian") {
        throw InputError("unknown l1-check preset '" + preset + "'");
    }
    const auto rep = l1_condition_check(n_max);
    CommandOutput o{RunReport("l1-check", {{"preset", preset}, {"max_n", n_max}}), {}, {}, {}};
    std::ostringstream csv;
    csv << "n,norm,error,base\n";
    for (const auto &row : rep.rows) {
        csv << row.n << ',' << fmt(row.norm) << ',' << fmt(row.error) << ',' << fmt(row.base) << '\n';
        o.report.add({"l1.n" + std::to_string(row.n),
                      {{"n", row.n}},
                      row.norm <= std::tgamma(row.n + 1.0) * std::pow(rep.fitted_c, row.n),
                      {{"norm", row.norm}, {"error", row.error}, {"base", row.base}}});
    }
    o.report.add({"l1.fitted_c", {{"max_n", n_max}}, true, {{"c", rep.fitted_c}}});
    o.csv = csv.str();
    o.text = "fitted c = " + fmt(rep.fitted_c) + "\n";
    return o;
}

// verify-all ---------------------------------------------------------------------

struct VerifyAllArgs {
    std::string config_path;
    std::optional<unsigned> max_order;
    std::vector<unsigned> criteria;
    std::optional<std::size_t> samples;
    std::optional<double> estimates_C;
};

CommandOutput run_verify_all(const VerifyAllArgs &a, const GlobalOptions &g, bool seed_given, bool threads_given)
{
    nlohmann::json overrides = nlohmann::json::object();
    if (!a.config_path.empty()) {
        std::ifstream f(a.config_path);
        if (!f) {
            throw InputError("cannot read config " + a.config_path);
        }
        try {
            overrides = nlohmann::json::parse(f);
        } catch (const nlohmann::json::exception &e) {
            throw InputError("config " + a.config_path + ": " + e.what());
        }
    }
    if (seed_given) {
        overrides["seed"] = g.seed;
    }
    if (threads_given) {
        overrides["threads"] = g.threads;
    }
    if (a.max_order) {
        overrides["max_order"] = *a.max_order;
    }
    if (!a.criteria.empty()) {
        overrides["criteria"] = a.criteria;
    }
    if (a.samples) {
        overrides["yukawa"]["samples"] = *a.samples;
    }
    if (a.estimates_C) {
        overrides["estimates"]["C"] = *a.estimates_C;
    }
    VerifyConfig config;
    try {
        config = verify_config_from_json(overrides);
    } catch (const nlohmann::json::exception &e) {
        throw InputError(std::string("config: ") + e.what());
    }
    CommandOutput o{verify_all(config), {}, {}, {}};
    std::ostringstream text;
    for (const auto &c : criteria_from_report(o.report.to_json(false))) {
        if (config.criteria.contains(c.id)) {
            text << "criterion " << c.id << " (" << c.title << "): " << (c.pass() ? "pass" : "FAIL") << '\n';
        }
    }
    o.text = text.str();
    return o;
}

} // namespace

int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"adcert: exact and numerical checks for iterated commutator expansions", "adcert"};
    app.require_subcommand(0, 1);
    GlobalOptions g;

    auto add_globals = [&g](CLI::App *cmd) {
        cmd->add_option("--json", g.json_path, "write the JSON report to PATH (stdout when omitted)")
            ->expected(0, 1)
            ->type_name("PATH");
        cmd->add_option("--csv", g.csv_path, "write the CSV report to PATH (stdout when omitted)")
            ->expected(0, 1)
            ->type_name("PATH");
        cmd->add_option("--seed", g.seed, "RNG seed")->capture_default_str();
        cmd->add_option("--threads", g.threads, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    };

    unsigned dim = 1;
    unsigned order = 2;
    auto *expand = app.add_subcommand("expand", "closed-form expansion of the k-th iterated commutator");
    expand->add_option("--dim", dim)->check(CLI::Range(1u, 8u))->capture_default_str();
    expand->add_option("--order", order)->capture_default_str();

    unsigned max_order = 6;
    bool stepwise = false;
    auto *induction = app.add_subcommand("verify-induction", "check the one-step rules against the closed form");
    induction->add_option("--dim", dim)->check(CLI::Range(1u, 8u))->capture_default_str();
    induction->add_option("--max-order", max_order)->capture_default_str();
    induction->add_flag("--stepwise", stepwise, "step each closed form once instead of iterating from the base");

    std::vector<unsigned> count_dims{1, 2, 3};
    unsigned count_order = 8;
    std::size_t enum_limit = 200000;
    auto *count = app.add_subcommand("count", "index-set counts and partition bounds");
    count->add_option("--dim", count_dims, "dimensions to sweep")->delimiter(',');
    count->add_option("--max-order", count_order)->capture_default_str();
    count->add_option("--enumeration-limit", enum_limit, "largest formula count still enumerated")->capture_default_str();

    std::string which = "betaell";
    std::optional<double> est_C;
    double eps = 0.5;
    unsigned est_order = 10;
    unsigned est_dim = 1;
    auto *estimates = app.add_subcommand("check-estimates", "factorial inequalities at a given C");
    estimates->add_option("--which", which)
        ->check(CLI::IsMember({"betaell", "redordfac", "coeff"}))
        ->capture_default_str();
    estimates->add_option("--C", est_C, "constant C (searched by bisection when omitted)");
    estimates->add_option("--eps", eps)->capture_default_str();
    estimates->add_option("--max-order", est_order, "ell bound for betaell, order bound otherwise")
        ->capture_default_str();
    estimates->add_option("--dim", est_dim)->check(CLI::Range(1u, 4u))->capture_default_str();

    FreeCommutatorArgs fc;
    auto *free = app.add_subcommand("free-commutator", "derivative growth along the dispersion flow");
    free->add_option("--spec", fc.preset)->check(CLI::IsMember({"parabolic", "relativistic"}))->capture_default_str();
    free->add_option("--spec-file", fc.spec_file, "JSON dispersion spec (overrides --spec)");
    free->add_option("--xi", fc.xi)->delimiter(',')->capture_default_str();
    free->add_option("--max-n", fc.max_n)->capture_default_str();
    free->add_option("--grid", fc.grid, "a:b:h")->capture_default_str();
    free->add_option("--target", fc.target, "omega, w or v<axis>")->capture_default_str();
    free->add_option("--golden", fc.golden, "fail when a ratio exceeds this value");
    free->add_option("--composite-samples", fc.composite_samples)->capture_default_str();
    free->add_option("--composite-order", fc.composite_order)->capture_default_str();

    std::string alpha = "0,0,0";
    double s = 1.5;
    double r = 0.5;
    std::size_t samples = 1'000'000;
    auto *yukawa = app.add_subcommand("yukawa", "weak norm of a Yukawa derivative against alpha! c^|alpha|");
    yukawa->add_option("--alpha", alpha, "i,j,k")->capture_default_str();
    yukawa->add_option("--s", s)->capture_default_str();
    yukawa->add_option("--r", r)->capture_default_str();
    yukawa->add_option("--samples", samples)->capture_default_str();

    std::string gamma = "0,0,0";
    double p = 2.0;
    unsigned int_dim = 3;
    auto *interaction = app.add_subcommand("interaction", "interaction constant for a Yukawa derivative");
    interaction->add_option("--gamma", gamma, "i,j,k")->capture_default_str();
    interaction->add_option("--p", p)->capture_default_str();
    interaction->add_option("--s", s)->capture_default_str();
    interaction->add_option("--dim", int_dim)->capture_default_str();
    interaction->add_option("--r", r)->capture_default_str();
    interaction->add_option("--samples", samples)->capture_default_str();

    std::string l1_preset = "gaussian";
    unsigned l1_n = 8;
    auto *l1 = app.add_subcommand("l1-check", "L1 norms of potential derivatives");
    l1->add_option("--preset", l1_preset)->capture_default_str();
    l1->add_option("--max-n", l1_n)->capture_default_str();

    VerifyAllArgs va;
    std::optional<unsigned> va_max_order;
    std::optional<std::size_t> va_samples;
    std::optional<double> va_C;
    auto *all = app.add_subcommand("verify-all", "run the acceptance suite");
    all->add_option("--config", va.config_path, "JSON config file");
    all->add_option("--max-order", va_max_order, "cap every order bound");
    all->add_option("--criteria", va.criteria, "comma-separated criterion ids")->delimiter(',');
    all->add_option("--samples", va_samples, "Monte Carlo samples");
    all->add_option("--estimates-C", va_C, "scan the factorial inequalities at this C");

    for (auto *cmd : {expand, induction, count, estimates, free, yukawa, interaction, l1, all}) {
        add_globals(cmd);
    }

    if (args.empty()) {
        err << app.help();
        return 2;
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        err << e.what() << "\n\n";
        CLI::App *sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << sub->help();
        return 2;
    }
    if (app.get_subcommands().empty()) {
        err << app.help();
        return 2;
    }
    CLI::App *cmd = app.get_subcommands().front();
    g.json = cmd->count("--json") > 0;
    g.csv = cmd->count("--csv") > 0;
    if (g.json_path && g.json_path->empty()) {
        g.json_path.reset();
    }
    if (g.csv_path && g.csv_path->empty()) {
        g.csv_path.reset();
    }
    va.max_order = va_max_order;
    va.samples = va_samples;
    va.estimates_C = va_C;

    const auto start = std::chrono::steady_clock::now();
    try {
        std::optional<CommandOutput> result;
        if (cmd == expand) {
            result = run_expand(dim, order);
        } else if (cmd == induction) {
            result = run_verify_induction(dim, max_order, stepwise, g.threads);
        } else if (cmd == count) {
            result = run_count(count_dims, count_order, enum_limit);
        } else if (cmd == estimates) {
            result = run_check_estimates(which, est_C, eps, est_order, est_dim);
        } else if (cmd == free) {
            result = run_free_commutator(fc, g.seed);
        } else if (cmd == yukawa) {
            result = run_yukawa(alpha, s, r, samples, g.seed, g.threads);
        } else if (cmd == interaction) {
            result = run_interaction(gamma, p, s, int_dim, r, samples, g.seed, g.threads);
        } else if (cmd == l1) {
            result = run_l1_check(l1_preset, l1_n);
        } else {
            result = run_verify_all(va, g, cmd->count("--seed") > 0, cmd->count("--threads") > 0);
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return emit(*result, g, seconds, out);
    } catch (const DivergenceError &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const InputError &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace adcert::cli

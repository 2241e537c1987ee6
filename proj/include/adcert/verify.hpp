#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <adcert/dispersion.hpp>
#include <adcert/report.hpp>

namespace adcert
{

// (dim, max order) pairs
using OrderScope = std::vector<std::pair<unsigned, unsigned>>;

struct VerifyConfig {
    std::uint64_t seed = 42;
    unsigned threads = 1;
    std::set<unsigned> criteria{1, 2, 3, 4, 5, 6, 7, 8};

    OrderScope induction{{1, 8}, {2, 6}, {3, 4}};

    unsigned partition_kmax = 40;
    unsigned index_set_dmax = 2;
    unsigned index_set_kmax = 8;
    unsigned sequence_dmax = 3;
    unsigned sequence_kmax = 12;

    unsigned ell_max = 200;
    unsigned redordfac_dmax = 2;
    unsigned redordfac_order = 10;
    OrderScope coefficient{{1, 8}, {2, 6}};
    double epsilon = 0.5;
    // When set, the estimates are scanned at this C instead of searching for one.
    std::optional<double> estimates_C;

    unsigned oracle_nmax = 8;
    unsigned oracle_points = 20;
    unsigned growth_nmax = 10;
    std::vector<double> xis{0.0, 0.5, 1.0};
    GridSpec grid{-4.0, 4.0, 0.05};
    unsigned composite_samples = 50;
    unsigned composite_order = 6;
    // Recorded bounds on the growth ratios R_n, n <= 10, xi in {0, 0.5, 1}.
    // Measured maxima: 5.108 (parabolic, n = 1) and 1.000 (relativistic).
    double golden_parabolic = 6.0;
    double golden_relativistic = 1.5;

    double yukawa_s = 1.5;
    double yukawa_r = 0.5;
    unsigned alpha_max = 3;
    std::size_t mc_samples = 1'000'000;
    double box_half_width = 20.0;
    unsigned levels = 200;
    double level_min = 1e-6;
    double level_max = 1e2;

    double interaction_p = 2.0;
    unsigned gamma_max = 3;
    double interaction_tolerance = 0.05;
};

VerifyConfig default_verify_config();
// Keys absent from `j` keep their value from `base`. A top-level "max_order"
// caps every order, degree and level bound in the config.
VerifyConfig verify_config_from_json(const nlohmann::json &j, VerifyConfig base = default_verify_config());
nlohmann::json to_json(const VerifyConfig &config);

struct CriterionResult {
    unsigned id;
    std::string title;
    std::vector<CheckRecord> checks;

    bool pass() const;
};

const std::vector<std::pair<unsigned, std::string>> &criterion_titles();

CriterionResult check_induction(const VerifyConfig &config);
CriterionResult check_integrality(const VerifyConfig &config);
CriterionResult check_counting(const VerifyConfig &config);
CriterionResult check_factorial_estimates(const VerifyConfig &config);
CriterionResult check_free_commutator(const VerifyConfig &config);
CriterionResult check_yukawa(const VerifyConfig &config);
CriterionResult check_interaction(const VerifyConfig &config);
// Re-runs the seeded parts of criteria 5-7 and compares the records.
CriterionResult check_reproducibility(const VerifyConfig &config);

CriterionResult run_criterion(unsigned id, const VerifyConfig &config);

// Runs the selected criteria in order. Check names are prefixed "c<id>.".
RunReport verify_all(const VerifyConfig &config);

// Groups report records by their "c<id>." prefix.
std::vector<CriterionResult> criteria_from_report(const nlohmann::json &report);

} // namespace adcert

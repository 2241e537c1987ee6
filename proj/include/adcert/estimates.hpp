#pragma once

#include <string>
#include <utility>
#include <vector>

#include <adcert/enumeration.hpp>
#include <adcert/polyindex.hpp>

namespace adcert
{

// Constants of the factorial estimates. Only C and epsilon are stored; the
// derived constants are recomputed on demand.
class EstimateConfig
{
public:
    // Throws std::invalid_argument unless C > 0 and 0 < epsilon < 1.
    EstimateConfig(double C, double epsilon = 0.5);

    double C() const { return m_C; }
    double epsilon() const { return m_epsilon; }
    // C / (4 (1 + eps))
    double C_prime() const;
    // C / (4 e (1 + eps))
    double C_double_prime() const;
    // C / (8 e)
    double c() const;

private:
    double m_C;
    double m_epsilon;
};

enum class ArithmeticPath {
    automatic, // exact when both integer parts stay below 10^5000
    exact,     // exact big-integer factorials, 50-digit logarithms
    log_space  // long double log-gamma sums
};

// lhs <= rhs, compared through natural logarithms.
struct LogComparison {
    double lhs_log;
    double rhs_log;
    bool pass;
    ArithmeticPath path_used;
};

// beta^ell(i) = floor(ell / (C^i (i+1))). Throws std::invalid_argument for
// C <= 1 or ell == 0.
Polyindex1 beta_ell(unsigned ell, double C);

struct BetaEllCheck {
    Polyindex1 beta;
    // |beta^ell| <= (1 + eps) ell
    LogComparison size_bound;
    // C''^{2|beta^ell|} (2|beta^ell|)! <= C^{2||beta^ell||} (beta^ell reduced-order-factorial)^2
    LogComparison factorial_bound;

    bool pass() const { return size_bound.pass && factorial_bound.pass; }
};

BetaEllCheck check_beta_ell(unsigned ell, const EstimateConfig &config, ArithmeticPath path = ArithmeticPath::automatic);

// c^{|gamma|} gamma! <= C^{||beta||+||b||} beta(reduced)! b(reduced)!, with
// gamma = gamma_of(beta, b) and c = C/(8e).
LogComparison check_redordfac(const PolyindexD &beta, const PolyindexD &b, const EstimateConfig &config,
                              ArithmeticPath path = ArithmeticPath::automatic);

// k!/(alpha!! beta!! a!! b!!) <= C^{||beta||+||b||} k! / (c^{|gamma|} gamma! beta-ratio! b-ratio!)
LogComparison coefficient_bound_check(const IndexQuadruple &q, const EstimateConfig &config,
                                      ArithmeticPath path = ArithmeticPath::automatic);

// All (beta, b) pairs of dimension `dim` with ||beta|| + ||b|| == k.
std::vector<std::pair<PolyindexD, PolyindexD>> beta_b_pairs(unsigned dim, unsigned k);

// Inputs over which a candidate C must pass every check.
struct ScanDomain {
    double epsilon = 0.5;
    std::vector<unsigned> ells;
    std::vector<std::pair<PolyindexD, PolyindexD>> pairs;
    std::vector<IndexQuadruple> quadruples;

    bool empty() const { return ells.empty() && pairs.empty() && quadruples.empty(); }
    std::size_t size() const { return ells.size() + pairs.size() + quadruples.size(); }
    void append(const ScanDomain &other);
};

ScanDomain beta_ell_domain(unsigned ell_max, double epsilon = 0.5);
ScanDomain redordfac_domain(unsigned dim, unsigned max_total_order, double epsilon = 0.5);
ScanDomain coefficient_domain(unsigned dim, unsigned max_order, double epsilon = 0.5);

struct ScanFailure {
    std::string input;
    double lhs_log;
    double rhs_log;
};

struct ScanOutcome {
    bool pass;
    std::size_t checked;
    std::vector<ScanFailure> failures; // at most `max_failures` entries
};

ScanOutcome scan(const ScanDomain &domain, double C, ArithmeticPath path = ArithmeticPath::log_space,
                 std::size_t max_failures = 8);

struct MinCResult {
    double C0;         // smallest passing C found, within `tolerance`
    double lower;      // search interval actually used
    double upper;
    unsigned iterations;
    bool monotone_ok;  // passing re-confirmed at sampled C > C0
};

// Bisection for the smallest C at which the whole domain passes. Throws
// std::invalid_argument on an empty domain and std::runtime_error when the
// domain does not pass at the upper search bound.
MinCResult find_min_C(const ScanDomain &domain, double lower = 0.0, double upper = 1000.0, double tolerance = 1e-3);

} // namespace adcert

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include <adcert/enumeration.hpp>
#include <adcert/polyindex.hpp>

namespace adcert
{

// One monomial M_{alpha,beta} T_{beta,b} M_{a,b} with its integer weight. The
// convolution key (beta, b) is always the one carried by the quadruple.
struct SymbolicTerm {
    IndexQuadruple key;
    BigInt coefficient;
};

// ad_A^k(T_0) written as a sum of monomials of total order k. Zero
// coefficients are never stored.
class FormalExpansion
{
public:
    using TermMap = std::map<IndexQuadruple, BigInt>;

    FormalExpansion(unsigned dim, unsigned level) : m_dim(dim), m_level(level) {}

    // ad_A^0(T_0) = T_0, i.e. {(0, 0, 0, 0) -> 1}.
    static FormalExpansion base(unsigned dim);

    unsigned dim() const { return m_dim; }
    unsigned level() const { return m_level; }
    std::size_t size() const { return m_terms.size(); }
    const TermMap &terms() const { return m_terms; }

    // Adds `coefficient` to the term at `key`; throws std::invalid_argument if
    // the key has the wrong dimension or total order.
    void add(const IndexQuadruple &key, const BigInt &coefficient);
    void merge(const TermMap &partial);

    BigInt coefficient(const IndexQuadruple &key) const;
    BigInt coefficient_sum() const;
    std::vector<SymbolicTerm> to_terms() const;

    friend bool operator==(const FormalExpansion &, const FormalExpansion &) = default;

private:
    unsigned m_dim;
    unsigned m_level;
    TermMap m_terms;
};

// k! / (alpha!! beta!! a!! b!!) with k = total_order(q). Throws std::logic_error
// if the division leaves a remainder.
BigInt closed_coefficient(const IndexQuadruple &q);

FormalExpansion closed_expansion(unsigned dim, unsigned k);

// Applies [A, .] termwise using the one-step commutation rules; the result has
// level e.level() + 1. Source terms are split into `threads` chunks whose
// partial maps are merged in chunk order.
FormalExpansion adjoint_step(const FormalExpansion &e, unsigned threads = 1);

struct Discrepancy {
    unsigned level;
    IndexQuadruple key;
    BigInt expected;
    BigInt actual;
};

// First key (in canonical order) where the two expansions differ.
std::optional<Discrepancy> first_difference(const FormalExpansion &expected, const FormalExpansion &actual);

struct InductionLevel {
    unsigned k;
    std::size_t closed_terms;
    std::size_t stepped_terms;
    BigInt coefficient_sum;
    bool pass;
};

struct InductionReport {
    unsigned dim;
    unsigned max_order;
    std::vector<InductionLevel> levels;
    std::optional<Discrepancy> first_discrepancy;

    bool pass() const { return !first_discrepancy.has_value(); }
};

// For each 1 <= k <= max_order compares adjoint_step(closed_expansion(d, k-1))
// with closed_expansion(d, k).
InductionReport verify_induction(unsigned dim, unsigned max_order, unsigned threads = 1);

// Iterates adjoint_step from the base term and compares every level with the
// closed form, stopping at the first mismatch.
InductionReport verify_iterated(unsigned dim, unsigned max_order, unsigned threads = 1);

} // namespace adcert

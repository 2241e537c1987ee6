#pragma once

#include <cstddef>
#include <iterator>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <adcert/polyindex.hpp>

namespace adcert
{

// Summation index (alpha, beta, a, b) of the iterated-commutator expansion.
struct IndexQuadruple {
    Polyindex1 alpha;
    PolyindexD beta;
    Polyindex1 a;
    PolyindexD b;

    static IndexQuadruple zero(unsigned dim) { return {Polyindex1{}, PolyindexD(dim), Polyindex1{}, PolyindexD(dim)}; }

    unsigned dim() const { return beta.dim(); }

    friend auto operator<=>(const IndexQuadruple &, const IndexQuadruple &) = default;
    friend bool operator==(const IndexQuadruple &, const IndexQuadruple &) = default;
};

// ||alpha|| + ||beta|| + ||a|| + ||b||
unsigned total_order(const IndexQuadruple &q);

// "(alpha;beta;a;b)" using the polyindex string forms.
std::string to_string(const IndexQuadruple &q);

// Polyindices of order k via the partition bijection: alpha(i-1) counts the
// parts equal to i. Parts are emitted in reverse-lexicographic partition order,
// starting from the single-part partition (k).
std::vector<Polyindex1> polyindices_of_order(unsigned k);

// p(k) by Euler's pentagonal-number recurrence.
BigInt partition_count(unsigned k);
std::vector<BigInt> partition_counts(unsigned k_max);

// e^{pi sqrt(2k/3)}; requires k >= 1.
double partition_bound(unsigned k);

// All m-tuples of naturals summing to k, lexicographically increasing.
std::vector<std::vector<unsigned>> weak_compositions(unsigned k, unsigned m);
// Advances `c` to its lexicographic successor; false when `c` was the last one.
bool next_weak_composition(std::vector<unsigned> &c);

// Slot layout of a (2d+2)-part composition: alpha, a, beta_1..beta_d, b_1..b_d.
unsigned index_slot_count(unsigned dim);

// Lazy enumeration of every IndexQuadruple of total order k, ordered
// lexicographically by (composition tuple, per-slot partition index).
class IndexSet
{
public:
    class iterator;
    struct sentinel {
    };

    IndexSet(unsigned dim, unsigned k);

    unsigned dim() const { return m_dim; }
    unsigned order() const { return m_order; }

    iterator begin() const;
    sentinel end() const { return {}; }

    std::vector<IndexQuadruple> collect() const;

private:
    unsigned m_dim;
    unsigned m_order;
    std::vector<std::vector<Polyindex1>> m_by_order;

    friend class iterator;
};

class IndexSet::iterator
{
public:
    using value_type = IndexQuadruple;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;

    const IndexQuadruple &operator*() const { return m_current; }
    const IndexQuadruple *operator->() const { return &m_current; }
    iterator &operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator &it, sentinel) { return it.m_done; }

private:
    friend class IndexSet;
    explicit iterator(const IndexSet *set);

    void materialize();
    bool advance_slots();

    const IndexSet *m_set = nullptr;
    std::vector<unsigned> m_composition;
    std::vector<std::size_t> m_slot_index;
    IndexQuadruple m_current;
    bool m_done = true;
};

// |index_set(d, k)| = sum over weak (2d+2)-compositions of prod p(k'_j).
BigInt index_set_count(unsigned dim, unsigned k);

// (number of sequences 0 <= k_1 <= ... <= k_{2d+1} <= k counted directly,
//  binomial(k + 2d + 1, 2d + 1))
std::pair<BigInt, BigInt> sequence_count_identity(unsigned dim, unsigned k);

BigInt binomial(unsigned n, unsigned r);

struct TermsBoundRow {
    unsigned k;
    // Exhaustive enumeration count; empty when above the enumeration limit.
    std::optional<BigInt> enumerated_count;
    BigInt formula_count;
    // Smallest g with count(k') <= g^{k'} for all 1 <= k' <= k (1 at k = 0).
    double fitted_base;
    // e^{pi sqrt(2k/3) (2d+2)} * binomial(k+2d+1, 2d+1)
    double partition_bound_product;
};

std::vector<TermsBoundRow> terms_bound_report(unsigned dim, unsigned k_max, std::size_t enumeration_limit = 200000);

} // namespace adcert

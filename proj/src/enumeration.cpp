#include <adcert/enumeration.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace adcert
{

unsigned total_order(const IndexQuadruple &q)
{
    return order(q.alpha) + order(q.beta) + order(q.a) + order(q.b);
}

std::string to_string(const IndexQuadruple &q)
{
    return "(" + to_string(q.alpha) + ";" + to_string(q.beta) + ";" + to_string(q.a) + ";" + to_string(q.b) + ")";
}

namespace
{

// Partitions of `remaining` with parts <= max_part, largest part first.
void emit_partitions(unsigned remaining, unsigned max_part, std::vector<Polyindex1::Entry> &parts,
                     std::vector<Polyindex1> &out)
{
    if (remaining == 0) {
        out.emplace_back(parts);
        return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
        parts.emplace_back(part - 1, 1);
        emit_partitions(remaining - part, part, parts, out);
        parts.pop_back();
    }
}

} // namespace

std::vector<Polyindex1> polyindices_of_order(unsigned k)
{
    std::vector<Polyindex1> out;
    std::vector<Polyindex1::Entry> parts;
    emit_partitions(k, k, parts, out);
    return out;
}

std::vector<BigInt> partition_counts(unsigned k_max)
{
    std::vector<BigInt> p(k_max + 1);
    p[0] = 1;
    for (unsigned m = 1; m <= k_max; ++m) {
        BigInt s = 0;
        for (unsigned j = 1;; ++j) {
            const unsigned g1 = j * (3 * j - 1) / 2;
            if (g1 > m) {
                break;
            }
            const unsigned g2 = j * (3 * j + 1) / 2;
            BigInt term = p[m - g1];
            if (g2 <= m) {
                term += p[m - g2];
            }
            if (j % 2 == 1) {
                s += term;
            } else {
                s -= term;
            }
        }
        p[m] = s;
    }
    return p;
}

BigInt partition_count(unsigned k)
{
    return partition_counts(k)[k];
}

double partition_bound(unsigned k)
{
    if (k == 0) {
        throw std::invalid_argument("partition_bound requires k >= 1");
    }
    return std::exp(std::numbers::pi * std::sqrt(2.0 * k / 3.0));
}

bool next_weak_composition(std::vector<unsigned> &c)
{
    const std::size_t m = c.size();
    if (m < 2) {
        return false;
    }
    unsigned tail = c[m - 1];
    for (std::size_t j = m - 1; j-- > 0;) {
        if (tail > 0) {
            ++c[j];
            for (std::size_t i = j + 1; i + 1 < m; ++i) {
                c[i] = 0;
            }
            c[m - 1] = tail - 1;
            return true;
        }
        tail += c[j];
    }
    return false;
}

std::vector<std::vector<unsigned>> weak_compositions(unsigned k, unsigned m)
{
    if (m == 0) {
        throw std::invalid_argument("weak_compositions requires m >= 1");
    }
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> c(m, 0);
    c[m - 1] = k;
    do {
        out.push_back(c);
    } while (next_weak_composition(c));
    return out;
}

unsigned index_slot_count(unsigned dim)
{
    return 2 * dim + 2;
}

IndexSet::IndexSet(unsigned dim, unsigned k) : m_dim(dim), m_order(k)
{
    if (dim == 0) {
        throw std::invalid_argument("index set requires dim >= 1");
    }
    m_by_order.reserve(k + 1);
    for (unsigned j = 0; j <= k; ++j) {
        m_by_order.push_back(polyindices_of_order(j));
    }
}

IndexSet::iterator IndexSet::begin() const
{
    return iterator(this);
}

std::vector<IndexQuadruple> IndexSet::collect() const
{
    std::vector<IndexQuadruple> out;
    for (auto it = begin(); !(it == end()); ++it) {
        out.push_back(*it);
    }
    return out;
}

IndexSet::iterator::iterator(const IndexSet *set)
    : m_set(set), m_composition(index_slot_count(set->m_dim), 0), m_slot_index(index_slot_count(set->m_dim), 0),
      m_done(false)
{
    m_composition.back() = set->m_order;
    materialize();
}

void IndexSet::iterator::materialize()
{
    const unsigned d = m_set->m_dim;
    const auto &by_order = m_set->m_by_order;
    auto slot = [&](unsigned j) -> const Polyindex1 & { return by_order[m_composition[j]][m_slot_index[j]]; };
    std::vector<Polyindex1> beta(d), b(d);
    for (unsigned s = 0; s < d; ++s) {
        beta[s] = slot(2 + s);
        b[s] = slot(2 + d + s);
    }
    m_current = IndexQuadruple{slot(0), PolyindexD(std::move(beta)), slot(1), PolyindexD(std::move(b))};
}

bool IndexSet::iterator::advance_slots()
{
    const auto &by_order = m_set->m_by_order;
    for (std::size_t j = m_slot_index.size(); j-- > 0;) {
        if (++m_slot_index[j] < by_order[m_composition[j]].size()) {
            return true;
        }
        m_slot_index[j] = 0;
    }
    return false;
}

IndexSet::iterator &IndexSet::iterator::operator++()
{
    if (m_done) {
        return *this;
    }
    if (!advance_slots()) {
        if (!next_weak_composition(m_composition)) {
            m_done = true;
            return *this;
        }
    }
    materialize();
    return *this;
}

BigInt index_set_count(unsigned dim, unsigned k)
{
    const auto p = partition_counts(k);
    BigInt total = 0;
    std::vector<unsigned> c(index_slot_count(dim), 0);
    c.back() = k;
    do {
        BigInt prod = 1;
        for (auto part : c) {
            prod *= p[part];
        }
        total += prod;
    } while (next_weak_composition(c));
    return total;
}

namespace
{

BigInt count_monotone(unsigned remaining_slots, unsigned lower, unsigned k)
{
    if (remaining_slots == 0) {
        return 1;
    }
    BigInt total = 0;
    for (unsigned v = lower; v <= k; ++v) {
        total += count_monotone(remaining_slots - 1, v, k);
    }
    return total;
}

} // namespace

BigInt binomial(unsigned n, unsigned r)
{
    if (r > n) {
        return 0;
    }
    r = std::min(r, n - r);
    BigInt acc = 1;
    for (unsigned j = 1; j <= r; ++j) {
        acc = acc * (n - r + j) / j;
    }
    return acc;
}

std::pair<BigInt, BigInt> sequence_count_identity(unsigned dim, unsigned k)
{
    return {count_monotone(2 * dim + 1, 0, k), binomial(k + 2 * dim + 1, 2 * dim + 1)};
}

std::vector<TermsBoundRow> terms_bound_report(unsigned dim, unsigned k_max, std::size_t enumeration_limit)
{
    std::vector<TermsBoundRow> rows;
    double base = 1.0;
    for (unsigned k = 0; k <= k_max; ++k) {
        TermsBoundRow row;
        row.k = k;
        row.formula_count = index_set_count(dim, k);
        if (row.formula_count <= enumeration_limit) {
            std::size_t n = 0;
            IndexSet set(dim, k);
            for (auto it = set.begin(); !(it == set.end()); ++it) {
                ++n;
            }
            row.enumerated_count = BigInt(n);
        }
        if (k > 0) {
            const double count = row.formula_count.convert_to<double>();
            base = std::max(base, std::pow(count, 1.0 / k));
        }
        row.fitted_base = base;
        const double slots = 2.0 * dim + 2.0;
        row.partition_bound_product = std::exp(std::numbers::pi * std::sqrt(2.0 * k / 3.0) * slots) *
                                      binomial(k + 2 * dim + 1, 2 * dim + 1).convert_to<double>();
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace adcert

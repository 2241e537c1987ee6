#include <adcert/commutator.hpp>

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace adcert
{

FormalExpansion FormalExpansion::base(unsigned dim)
{
    FormalExpansion e(dim, 0);
    e.add(IndexQuadruple::zero(dim), 1);
    return e;
}

void FormalExpansion::add(const IndexQuadruple &key, const BigInt &coefficient)
{
    if (key.dim() != m_dim || key.b.dim() != m_dim) {
        throw std::invalid_argument("term dimension does not match expansion");
    }
    if (total_order(key) != m_level) {
        throw std::invalid_argument("term order does not match expansion level");
    }
    if (coefficient == 0) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(key, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) {
            m_terms.erase(it);
        }
    }
}

void FormalExpansion::merge(const TermMap &partial)
{
    for (const auto &[key, c] : partial) {
        add(key, c);
    }
}

BigInt FormalExpansion::coefficient(const IndexQuadruple &key) const
{
    auto it = m_terms.find(key);
    return it == m_terms.end() ? BigInt(0) : it->second;
}

BigInt FormalExpansion::coefficient_sum() const
{
    BigInt s = 0;
    for (const auto &[key, c] : m_terms) {
        s += c;
    }
    return s;
}

std::vector<SymbolicTerm> FormalExpansion::to_terms() const
{
    std::vector<SymbolicTerm> out;
    out.reserve(m_terms.size());
    for (const auto &[key, c] : m_terms) {
        out.push_back({key, c});
    }
    return out;
}

BigInt closed_coefficient(const IndexQuadruple &q)
{
    const BigInt numerator = factorial(total_order(q));
    const BigInt denominator =
        order_factorial(q.alpha) * order_factorial(q.beta) * order_factorial(q.a) * order_factorial(q.b);
    BigInt quotient, remainder;
    boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
    if (remainder != 0) {
        throw std::logic_error("closed-form coefficient is not an integer");
    }
    return quotient;
}

FormalExpansion closed_expansion(unsigned dim, unsigned k)
{
    FormalExpansion e(dim, k);
    IndexSet set(dim, k);
    for (const auto &q : set) {
        e.add(q, closed_coefficient(q));
    }
    return e;
}

namespace
{

void shift(Polyindex1 &p, unsigned degree)
{
    p.drop(degree);
    p.bump(degree + 1);
}

void shift(PolyindexD &p, unsigned degree, unsigned axis)
{
    p.drop(degree, axis);
    p.bump(degree + 1, axis);
}

void accumulate(FormalExpansion::TermMap &out, IndexQuadruple key, const BigInt &weight)
{
    auto [it, inserted] = out.try_emplace(std::move(key), weight);
    if (!inserted) {
        it->second += weight;
    }
}

// [A, M_{alpha,beta} T_{beta,b} M_{a,b}] expanded into the eight rule families.
void commute_term(const IndexQuadruple &q, const BigInt &c, FormalExpansion::TermMap &out)
{
    const unsigned d = q.dim();

    // Derivative hits a factor of M_{alpha,beta}: D_v^i w -> D_v^{i+1} w.
    for (const auto &[deg, mult] : q.alpha.entries()) {
        IndexQuadruple next = q;
        shift(next.alpha, deg);
        accumulate(out, std::move(next), c * mult);
    }
    for (unsigned s = 0; s < d; ++s) {
        for (const auto &[deg, mult] : q.beta.component(s).entries()) {
            IndexQuadruple next = q;
            shift(next.beta, deg, s);
            accumulate(out, std::move(next), c * mult);
        }
    }

    // [A, T_{beta,b}] produces new zeroth-order factors on either side.
    {
        IndexQuadruple next = q;
        next.alpha.bump(0);
        accumulate(out, std::move(next), c);
    }
    {
        IndexQuadruple next = q;
        next.a.bump(0);
        accumulate(out, std::move(next), c);
    }
    for (unsigned s = 0; s < d; ++s) {
        IndexQuadruple next = q;
        next.beta.bump(0, s);
        accumulate(out, std::move(next), c);
    }
    for (unsigned s = 0; s < d; ++s) {
        IndexQuadruple next = q;
        next.b.bump(0, s);
        accumulate(out, std::move(next), c);
    }

    // Derivative hits a factor of M_{a,b}.
    for (const auto &[deg, mult] : q.a.entries()) {
        IndexQuadruple next = q;
        shift(next.a, deg);
        accumulate(out, std::move(next), c * mult);
    }
    for (unsigned s = 0; s < d; ++s) {
        for (const auto &[deg, mult] : q.b.component(s).entries()) {
            IndexQuadruple next = q;
            shift(next.b, deg, s);
            accumulate(out, std::move(next), c * mult);
        }
    }
}

} // namespace

FormalExpansion adjoint_step(const FormalExpansion &e, unsigned threads)
{
    using Entry = const FormalExpansion::TermMap::value_type *;
    std::vector<Entry> source;
    source.reserve(e.size());
    for (const auto &entry : e.terms()) {
        source.push_back(&entry);
    }

    const std::size_t chunks = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(source.size(), 1));
    std::vector<FormalExpansion::TermMap> partial(chunks);
    auto work = [&](std::size_t chunk) {
        const std::size_t lo = source.size() * chunk / chunks;
        const std::size_t hi = source.size() * (chunk + 1) / chunks;
        for (std::size_t j = lo; j < hi; ++j) {
            commute_term(source[j]->first, source[j]->second, partial[chunk]);
        }
    };

    if (chunks == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(chunks);
        for (std::size_t chunk = 0; chunk < chunks; ++chunk) {
            pool.emplace_back(work, chunk);
        }
    }

    FormalExpansion next(e.dim(), e.level() + 1);
    for (const auto &p : partial) {
        next.merge(p);
    }
    return next;
}

std::optional<Discrepancy> first_difference(const FormalExpansion &expected, const FormalExpansion &actual)
{
    auto ie = expected.terms().begin();
    auto ia = actual.terms().begin();
    const auto ee = expected.terms().end();
    const auto ea = actual.terms().end();
    while (ie != ee || ia != ea) {
        if (ia == ea || (ie != ee && ie->first < ia->first)) {
            return Discrepancy{expected.level(), ie->first, ie->second, 0};
        }
        if (ie == ee || ia->first < ie->first) {
            return Discrepancy{actual.level(), ia->first, 0, ia->second};
        }
        if (ie->second != ia->second) {
            return Discrepancy{expected.level(), ie->first, ie->second, ia->second};
        }
        ++ie;
        ++ia;
    }
    return std::nullopt;
}

InductionReport verify_induction(unsigned dim, unsigned max_order, unsigned threads)
{
    InductionReport report{dim, max_order, {}, std::nullopt};
    FormalExpansion previous = closed_expansion(dim, 0);
    for (unsigned k = 1; k <= max_order; ++k) {
        FormalExpansion closed = closed_expansion(dim, k);
        FormalExpansion stepped = adjoint_step(previous, threads);
        auto diff = first_difference(closed, stepped);
        report.levels.push_back({k, closed.size(), stepped.size(), closed.coefficient_sum(), !diff});
        if (diff) {
            report.first_discrepancy = std::move(diff);
            break;
        }
        previous = std::move(closed);
    }
    return report;
}

InductionReport verify_iterated(unsigned dim, unsigned max_order, unsigned threads)
{
    InductionReport report{dim, max_order, {}, std::nullopt};
    FormalExpansion current = FormalExpansion::base(dim);
    for (unsigned k = 1; k <= max_order; ++k) {
        current = adjoint_step(current, threads);
        FormalExpansion closed = closed_expansion(dim, k);
        auto diff = first_difference(closed, current);
        report.levels.push_back({k, closed.size(), current.size(), closed.coefficient_sum(), !diff});
        if (diff) {
            report.first_discrepancy = std::move(diff);
            break;
        }
    }
    return report;
}

} // namespace adcert

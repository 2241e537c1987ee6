#include <adcert/polyindex.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace adcert
{

BigInt factorial(unsigned n)
{
    BigInt r = 1;
    for (unsigned j = 2; j <= n; ++j) {
        r *= j;
    }
    return r;
}

Polyindex1::Polyindex1(std::initializer_list<Entry> entries) : m_entries(entries)
{
    canonicalize();
}

Polyindex1::Polyindex1(std::vector<Entry> entries) : m_entries(std::move(entries))
{
    canonicalize();
}

void Polyindex1::canonicalize()
{
    std::sort(m_entries.begin(), m_entries.end());
    std::vector<Entry> merged;
    merged.reserve(m_entries.size());
    for (const auto &[deg, mult] : m_entries) {
        if (!merged.empty() && merged.back().first == deg) {
            merged.back().second += mult;
        } else {
            merged.emplace_back(deg, mult);
        }
    }
    std::erase_if(merged, [](const Entry &e) { return e.second == 0; });
    m_entries = std::move(merged);
}

Polyindex1 Polyindex1::delta(unsigned degree)
{
    Polyindex1 p;
    p.m_entries.emplace_back(degree, 1);
    return p;
}

unsigned Polyindex1::at(unsigned degree) const
{
    auto it = std::lower_bound(m_entries.begin(), m_entries.end(), Entry{degree, 0});
    return (it != m_entries.end() && it->first == degree) ? it->second : 0;
}

unsigned Polyindex1::max_degree() const
{
    return m_entries.empty() ? 0 : m_entries.back().first;
}

void Polyindex1::bump(unsigned degree)
{
    auto it = std::lower_bound(m_entries.begin(), m_entries.end(), Entry{degree, 0});
    if (it != m_entries.end() && it->first == degree) {
        ++it->second;
    } else {
        m_entries.insert(it, Entry{degree, 1});
    }
}

void Polyindex1::drop(unsigned degree)
{
    auto it = std::lower_bound(m_entries.begin(), m_entries.end(), Entry{degree, 0});
    if (it == m_entries.end() || it->first != degree) {
        throw std::logic_error("polyindex drop at degree " + std::to_string(degree) + " with zero multiplicity");
    }
    if (--it->second == 0) {
        m_entries.erase(it);
    }
}

Polyindex1 &Polyindex1::operator+=(const Polyindex1 &other)
{
    m_entries.insert(m_entries.end(), other.m_entries.begin(), other.m_entries.end());
    canonicalize();
    return *this;
}

PolyindexD PolyindexD::delta(unsigned dim, unsigned degree, unsigned axis)
{
    PolyindexD p(dim);
    p.bump(degree, axis);
    return p;
}

const Polyindex1 &PolyindexD::component(unsigned axis) const
{
    if (axis >= dim()) {
        throw std::out_of_range("axis " + std::to_string(axis) + " out of range for dim " + std::to_string(dim()));
    }
    return m_components[axis];
}

Polyindex1 &PolyindexD::mutable_component(unsigned axis)
{
    if (axis >= dim()) {
        throw std::out_of_range("axis " + std::to_string(axis) + " out of range for dim " + std::to_string(dim()));
    }
    return m_components[axis];
}

bool PolyindexD::is_zero() const
{
    return std::all_of(m_components.begin(), m_components.end(), [](const Polyindex1 &c) { return c.is_zero(); });
}

void PolyindexD::bump(unsigned degree, unsigned axis)
{
    mutable_component(axis).bump(degree);
}

void PolyindexD::drop(unsigned degree, unsigned axis)
{
    mutable_component(axis).drop(degree);
}

PolyindexD &PolyindexD::operator+=(const PolyindexD &other)
{
    if (other.dim() != dim()) {
        throw std::invalid_argument("polyindex dimension mismatch");
    }
    for (unsigned s = 0; s < dim(); ++s) {
        m_components[s] += other.m_components[s];
    }
    return *this;
}

unsigned MultiIndex::total() const
{
    unsigned t = 0;
    for (auto o : m_orders) {
        t += o;
    }
    return t;
}

BigInt MultiIndex::factorial() const
{
    BigInt r = 1;
    for (auto o : m_orders) {
        r *= adcert::factorial(o);
    }
    return r;
}

unsigned order(const Polyindex1 &p)
{
    unsigned r = 0;
    for (const auto &[deg, mult] : p.entries()) {
        r += mult * (deg + 1);
    }
    return r;
}

unsigned order(const PolyindexD &p)
{
    unsigned r = 0;
    for (const auto &c : p.components()) {
        r += order(c);
    }
    return r;
}

unsigned size(const Polyindex1 &p)
{
    unsigned r = 0;
    for (const auto &[deg, mult] : p.entries()) {
        r += mult;
    }
    return r;
}

unsigned size(const PolyindexD &p)
{
    unsigned r = 0;
    for (const auto &c : p.components()) {
        r += size(c);
    }
    return r;
}

namespace
{

template <typename PerDegree>
BigInt product_over(const Polyindex1 &p, PerDegree f)
{
    BigInt r = 1;
    for (const auto &[deg, mult] : p.entries()) {
        r *= f(deg, mult);
    }
    return r;
}

template <typename F>
BigInt product_over_axes(const PolyindexD &p, F f)
{
    BigInt r = 1;
    for (const auto &c : p.components()) {
        r *= f(c);
    }
    return r;
}

} // namespace

BigInt order_factorial(const Polyindex1 &p)
{
    return product_over(p, [](unsigned deg, unsigned mult) {
        return BigInt(factorial(mult) * boost::multiprecision::pow(factorial(deg + 1), mult));
    });
}

BigInt reduced_order_factorial(const Polyindex1 &p)
{
    return product_over(p, [](unsigned deg, unsigned mult) {
        return BigInt(factorial(mult) * boost::multiprecision::pow(BigInt(deg + 1), mult));
    });
}

BigInt factorial_ratio(const Polyindex1 &p)
{
    return product_over(p, [](unsigned deg, unsigned mult) { return BigInt(boost::multiprecision::pow(factorial(deg), mult)); });
}

BigInt order_factorial(const PolyindexD &p)
{
    return product_over_axes(p, [](const Polyindex1 &c) { return order_factorial(c); });
}

BigInt reduced_order_factorial(const PolyindexD &p)
{
    return product_over_axes(p, [](const Polyindex1 &c) { return reduced_order_factorial(c); });
}

BigInt factorial_ratio(const PolyindexD &p)
{
    return product_over_axes(p, [](const Polyindex1 &c) { return factorial_ratio(c); });
}

Polyindex1 bumped(Polyindex1 p, unsigned degree)
{
    p.bump(degree);
    return p;
}

PolyindexD bumped(PolyindexD p, unsigned degree, unsigned axis)
{
    p.bump(degree, axis);
    return p;
}

Polyindex1 dropped(Polyindex1 p, unsigned degree)
{
    p.drop(degree);
    return p;
}

PolyindexD dropped(PolyindexD p, unsigned degree, unsigned axis)
{
    p.drop(degree, axis);
    return p;
}

MultiIndex gamma_of(const PolyindexD &beta, const PolyindexD &b)
{
    if (beta.dim() != b.dim()) {
        throw std::invalid_argument("gamma_of: dimension mismatch");
    }
    MultiIndex g(beta.dim());
    for (unsigned s = 0; s < beta.dim(); ++s) {
        g[s] = size(beta.component(s)) + size(b.component(s));
    }
    return g;
}


std::string to_string(const Polyindex1 &p)
{
    std::string s = "{";
    bool first = true;
    for (const auto &[deg, mult] : p.entries()) {
        if (!first) {
            s += ',';
        }
        first = false;
        s += std::to_string(deg) + ':' + std::to_string(mult);
    }
    return s + '}';
}

std::string to_string(const PolyindexD &p)
{
    std::string s = "[";
    for (unsigned axis = 0; axis < p.dim(); ++axis) {
        if (axis > 0) {
            s += ',';
        }
        s += to_string(p.component(axis));
    }
    return s + ']';
}

std::string to_string(const MultiIndex &m)
{
    std::string s = "(";
    for (unsigned axis = 0; axis < m.dim(); ++axis) {
        if (axis > 0) {
            s += ',';
        }
        s += std::to_string(m[axis]);
    }
    return s + ')';
}

} // namespace adcert

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace adcert
{

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(unsigned n);

// Finitely supported map degree -> multiplicity, stored as a sorted vector of
// (degree, multiplicity) pairs with no zero multiplicities.
class Polyindex1
{
public:
    using Entry = std::pair<std::uint32_t, std::uint32_t>;

    Polyindex1() = default;
    // Accepts entries in any order; repeated degrees are summed and zero
    // multiplicities discarded.
    Polyindex1(std::initializer_list<Entry> entries);
    explicit Polyindex1(std::vector<Entry> entries);

    static Polyindex1 delta(unsigned degree);

    unsigned at(unsigned degree) const;
    std::span<const Entry> entries() const { return m_entries; }
    bool is_zero() const { return m_entries.empty(); }
    // Largest degree with nonzero multiplicity; 0 for the zero polyindex.
    unsigned max_degree() const;

    void bump(unsigned degree);
    // Throws std::logic_error when the multiplicity at `degree` is zero.
    void drop(unsigned degree);

    Polyindex1 &operator+=(const Polyindex1 &other);
    friend Polyindex1 operator+(Polyindex1 lhs, const Polyindex1 &rhs) { return lhs += rhs; }

    friend auto operator<=>(const Polyindex1 &, const Polyindex1 &) = default;
    friend bool operator==(const Polyindex1 &, const Polyindex1 &) = default;

private:
    void canonicalize();

    std::vector<Entry> m_entries;
};

// d-dimensional polyindex: one Polyindex1 per axis. Axes are 0-based.
class PolyindexD
{
public:
    PolyindexD() = default;
    explicit PolyindexD(unsigned dim) : m_components(dim) {}
    explicit PolyindexD(std::vector<Polyindex1> components) : m_components(std::move(components)) {}

    // Unit polyindex with a single factor of derivative order `degree` on `axis`.
    static PolyindexD delta(unsigned dim, unsigned degree, unsigned axis);

    unsigned dim() const { return static_cast<unsigned>(m_components.size()); }
    const Polyindex1 &component(unsigned axis) const;
    std::span<const Polyindex1> components() const { return m_components; }
    unsigned at(unsigned degree, unsigned axis) const { return component(axis).at(degree); }
    bool is_zero() const;

    void bump(unsigned degree, unsigned axis);
    void drop(unsigned degree, unsigned axis);

    PolyindexD &operator+=(const PolyindexD &other);
    friend PolyindexD operator+(PolyindexD lhs, const PolyindexD &rhs) { return lhs += rhs; }

    friend auto operator<=>(const PolyindexD &, const PolyindexD &) = default;
    friend bool operator==(const PolyindexD &, const PolyindexD &) = default;

private:
    Polyindex1 &mutable_component(unsigned axis);

    std::vector<Polyindex1> m_components;
};

class MultiIndex
{
public:
    MultiIndex() = default;
    explicit MultiIndex(unsigned dim) : m_orders(dim, 0) {}
    MultiIndex(std::initializer_list<unsigned> orders) : m_orders(orders) {}
    explicit MultiIndex(std::vector<unsigned> orders) : m_orders(std::move(orders)) {}

    unsigned dim() const { return static_cast<unsigned>(m_orders.size()); }
    unsigned operator[](unsigned axis) const { return m_orders.at(axis); }
    unsigned &operator[](unsigned axis) { return m_orders.at(axis); }
    std::span<const unsigned> orders() const { return m_orders; }

    // |gamma|
    unsigned total() const;
    // gamma! = prod gamma_sigma!
    BigInt factorial() const;

    friend auto operator<=>(const MultiIndex &, const MultiIndex &) = default;
    friend bool operator==(const MultiIndex &, const MultiIndex &) = default;

private:
    std::vector<unsigned> m_orders;
};

// ||p|| = sum p(i) (i+1)
unsigned order(const Polyindex1 &p);
unsigned order(const PolyindexD &p);
// |p| = sum p(i)
unsigned size(const Polyindex1 &p);
unsigned size(const PolyindexD &p);

// prod p(i)! ((i+1)!)^{p(i)}
BigInt order_factorial(const Polyindex1 &p);
BigInt order_factorial(const PolyindexD &p);
// prod p(i)! (i+1)^{p(i)}
BigInt reduced_order_factorial(const Polyindex1 &p);
BigInt reduced_order_factorial(const PolyindexD &p);
// prod (i!)^{p(i)}; order_factorial = reduced_order_factorial * factorial_ratio.
BigInt factorial_ratio(const Polyindex1 &p);
BigInt factorial_ratio(const PolyindexD &p);

Polyindex1 bumped(Polyindex1 p, unsigned degree);
PolyindexD bumped(PolyindexD p, unsigned degree, unsigned axis);
Polyindex1 dropped(Polyindex1 p, unsigned degree);
PolyindexD dropped(PolyindexD p, unsigned degree, unsigned axis);

// (gamma_{beta+b})_sigma = |beta_sigma| + |b_sigma|. Throws std::invalid_argument on dim mismatch.
MultiIndex gamma_of(const PolyindexD &beta, const PolyindexD &b);

// Compact human-readable forms, e.g. "{0:2,1:1}" and "[{0:1},{}]".
std::string to_string(const Polyindex1 &p);
std::string to_string(const PolyindexD &p);
std::string to_string(const MultiIndex &m);

} // namespace adcert

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace adcert
{

// Truncated Taylor series c_0 + c_1 s + ... + c_N s^N.
class Jet
{
public:
    Jet() = default;
    explicit Jet(std::size_t order, double value = 0.0) : m_c(order + 1, 0.0) { m_c[0] = value; }
    explicit Jet(std::vector<double> coefficients);

    // x0 + s
    static Jet variable(std::size_t order, double x0);

    std::size_t order() const { return m_c.size() - 1; }
    double operator[](std::size_t n) const { return m_c[n]; }
    double &operator[](std::size_t n) { return m_c[n]; }
    std::span<const double> coefficients() const { return m_c; }

    Jet &operator+=(const Jet &o);
    Jet &operator-=(const Jet &o);

    friend Jet operator+(Jet a, const Jet &b) { return a += b; }
    friend Jet operator-(Jet a, const Jet &b) { return a -= b; }
    friend Jet operator-(Jet a);
    friend Jet operator*(const Jet &a, const Jet &b);
    friend Jet operator/(const Jet &a, const Jet &b);

private:
    std::vector<double> m_c{0.0};
};

Jet exp(const Jet &a);
// Requires a[0] > 0.
Jet sqrt(const Jet &a);
// Nonnegative integer exponents are expanded by repeated squaring; other
// exponents require a[0] > 0.
Jet pow(const Jet &a, double p);

} // namespace adcert

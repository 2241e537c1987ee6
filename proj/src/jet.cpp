#include <adcert/jet.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace adcert
{

namespace
{

void require_same_order(const Jet &a, const Jet &b)
{
    if (a.order() != b.order()) {
        throw std::invalid_argument("jet order mismatch");
    }
}

} // namespace

Jet::Jet(std::vector<double> coefficients) : m_c(std::move(coefficients))
{
    if (m_c.empty()) {
        m_c.push_back(0.0);
    }
}

Jet Jet::variable(std::size_t order, double x0)
{
    Jet j(order, x0);
    if (order >= 1) {
        j.m_c[1] = 1.0;
    }
    return j;
}

Jet &Jet::operator+=(const Jet &o)
{
    require_same_order(*this, o);
    for (std::size_t n = 0; n < m_c.size(); ++n) {
        m_c[n] += o.m_c[n];
    }
    return *this;
}

Jet &Jet::operator-=(const Jet &o)
{
    require_same_order(*this, o);
    for (std::size_t n = 0; n < m_c.size(); ++n) {
        m_c[n] -= o.m_c[n];
    }
    return *this;
}

Jet operator-(Jet a)
{
    for (auto &c : a.m_c) {
        c = -c;
    }
    return a;
}

Jet operator*(const Jet &a, const Jet &b)
{
    require_same_order(a, b);
    Jet r(a.order());
    for (std::size_t n = 0; n <= a.order(); ++n) {
        double s = 0.0;
        for (std::size_t j = 0; j <= n; ++j) {
            s += a[j] * b[n - j];
        }
        r[n] = s;
    }
    return r;
}

Jet operator/(const Jet &a, const Jet &b)
{
    require_same_order(a, b);
    if (b[0] == 0.0) {
        throw std::domain_error("jet division by a series with zero constant term");
    }
    Jet r(a.order());
    for (std::size_t n = 0; n <= a.order(); ++n) {
        double s = a[n];
        for (std::size_t j = 0; j < n; ++j) {
            s -= r[j] * b[n - j];
        }
        r[n] = s / b[0];
    }
    return r;
}

Jet exp(const Jet &a)
{
    Jet r(a.order());
    r[0] = std::exp(a[0]);
    for (std::size_t n = 1; n <= a.order(); ++n) {
        double s = 0.0;
        for (std::size_t j = 1; j <= n; ++j) {
            s += static_cast<double>(j) * a[j] * r[n - j];
        }
        r[n] = s / static_cast<double>(n);
    }
    return r;
}

Jet sqrt(const Jet &a)
{
    if (!(a[0] > 0.0)) {
        throw std::domain_error("jet sqrt requires a positive constant term");
    }
    Jet r(a.order());
    r[0] = std::sqrt(a[0]);
    for (std::size_t n = 1; n <= a.order(); ++n) {
        double s = a[n];
        for (std::size_t j = 1; j < n; ++j) {
            s -= r[j] * r[n - j];
        }
        r[n] = s / (2.0 * r[0]);
    }
    return r;
}

Jet pow(const Jet &a, double p)
{
    if (p >= 0.0 && p == std::floor(p) && p <= 64.0) {
        auto e = static_cast<unsigned>(p);
        Jet result(a.order(), 1.0);
        Jet base = a;
        while (e > 0) {
            if (e & 1u) {
                result = result * base;
            }
            e >>= 1;
            if (e > 0) {
                base = base * base;
            }
        }
        return result;
    }
    if (!(a[0] > 0.0)) {
        throw std::domain_error("jet pow with non-integer exponent requires a positive constant term");
    }
    // a y' = p a' y
    Jet r(a.order());
    r[0] = std::pow(a[0], p);
    for (std::size_t n = 1; n <= a.order(); ++n) {
        double s = 0.0;
        for (std::size_t j = 1; j <= n; ++j) {
            s += (p * static_cast<double>(j) - static_cast<double>(n - j)) * a[j] * r[n - j];
        }
        r[n] = s / (static_cast<double>(n) * a[0]);
    }
    return r;
}

} // namespace adcert

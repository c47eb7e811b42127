// polynomial.hpp -- numerical polynomials written in the binomial basis
//
//   p(t) = sum_i a_i * C(t + i, i),
//
// the normal form in which every lattice counting polynomial in this library
// is stored.  Coefficients are exact integers; the zero polynomial is the
// empty coefficient vector and reports degree -1.

#pragma once

#include "bigint.hpp"
#include "binomial.hpp"

#include <string>
#include <vector>

namespace kolchin {

class numerical_polynomial {
public:
    numerical_polynomial() = default;

    // Coefficients a_0, ..., a_d for the basis C(t+i, i); trailing zeros are
    // stripped so equal polynomials compare equal.
    explicit numerical_polynomial(std::vector<bigint> coefficients)
        : coeffs_(std::move(coefficients))
    {
        normalize();
    }

    static numerical_polynomial constant(const bigint& c)
    {
        return numerical_polynomial(std::vector<bigint>{c});
    }

    // C(t + i, i) itself.
    static numerical_polynomial basis(int i)
    {
        std::vector<bigint> c(static_cast<std::size_t>(i) + 1, 0);
        c.back() = 1;
        return numerical_polynomial(std::move(c));
    }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    bool is_zero() const { return coeffs_.empty(); }

    bigint coeff(int i) const
    {
        if (i < 0 || i >= static_cast<int>(coeffs_.size()))
            return 0;
        return coeffs_[static_cast<std::size_t>(i)];
    }

    const std::vector<bigint>& coefficients() const { return coeffs_; }

    // Leading coefficient; 0 for the zero polynomial.
    bigint leading() const { return coeffs_.empty() ? bigint(0) : coeffs_.back(); }

    bigint operator()(const bigint& s) const
    {
        if (s < 0)
            throw std::invalid_argument("numerical_polynomial: evaluation at negative argument");
        bigint value = 0;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            value += coeffs_[i] * binomial(s + static_cast<long>(i), static_cast<long>(i));
        return value;
    }

    numerical_polynomial& operator+=(const numerical_polynomial& other)
    {
        if (other.coeffs_.size() > coeffs_.size())
            coeffs_.resize(other.coeffs_.size(), 0);
        for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
            coeffs_[i] += other.coeffs_[i];
        normalize();
        return *this;
    }

    friend numerical_polynomial operator+(numerical_polynomial a, const numerical_polynomial& b)
    {
        a += b;
        return a;
    }

    numerical_polynomial& operator-=(const numerical_polynomial& other)
    {
        if (other.coeffs_.size() > coeffs_.size())
            coeffs_.resize(other.coeffs_.size(), 0);
        for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
            coeffs_[i] -= other.coeffs_[i];
        normalize();
        return *this;
    }

    friend numerical_polynomial operator-(numerical_polynomial a, const numerical_polynomial& b)
    {
        a -= b;
        return a;
    }

    friend bool operator==(const numerical_polynomial& a, const numerical_polynomial& b)
    {
        return a.coeffs_ == b.coeffs_;
    }

    friend bool operator!=(const numerical_polynomial& a, const numerical_polynomial& b)
    {
        return !(a == b);
    }

private:
    void normalize()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<bigint> coeffs_;
};

// p(t) |-> p(t - 1) in the same basis.  From C(t-1+i, i) = C(t+i, i) -
// C(t+i-1, i-1): the new coefficients are b_i = a_i - a_{i+1}.
inline numerical_polynomial shift_back(const numerical_polynomial& p)
{
    const auto& a = p.coefficients();
    if (a.empty())
        return p;
    std::vector<bigint> b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        b[i] = a[i];
        if (i + 1 < a.size())
            b[i] -= a[i + 1];
    }
    return numerical_polynomial(std::move(b));
}

inline numerical_polynomial shift_back(numerical_polynomial p, unsigned long times)
{
    for (unsigned long i = 0; i < times; ++i)
        p = shift_back(p);
    return p;
}

// Human-readable expansion, highest basis element first, e.g.
// "3*C(t+2,2) + C(t+1,1) + 4".  The zero polynomial renders as "0".
inline std::string to_expression_string(const numerical_polynomial& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        bigint a = p.coeff(i);
        if (a == 0)
            continue;
        if (out.empty()) {
            if (a < 0)
                out += "-";
        } else {
            out += a < 0 ? " - " : " + ";
        }
        bigint mag = abs(a);
        if (i == 0) {
            out += mag.str();
        } else {
            if (mag != 1)
                out += mag.str() + "*";
            out += "C(t+" + std::to_string(i) + "," + std::to_string(i) + ")";
        }
    }
    if (out.empty())
        out = "0"; // all displayed coefficients were zero; cannot happen after normalize
    return out;
}

} // namespace kolchin

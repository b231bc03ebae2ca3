#pragma once

#include "areaenum/types.hpp"

#include <compare>
#include <map>
#include <vector>

namespace areaenum {

/// Gaussian integer re + im*i with exact arbitrary-precision components.
struct GaussianInt {
    BigInt re = 0;
    BigInt im = 0;

    GaussianInt() = default;
    GaussianInt(BigInt r) : re(std::move(r)) {}
    GaussianInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}
    GaussianInt(int r) : re(r) {}

    bool is_zero() const { return re == 0 && im == 0; }

    friend GaussianInt operator+(const GaussianInt& x, const GaussianInt& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend GaussianInt operator-(const GaussianInt& x, const GaussianInt& y) {
        return {x.re - y.re, x.im - y.im};
    }
    friend GaussianInt operator*(const GaussianInt& x, const GaussianInt& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    GaussianInt& operator+=(const GaussianInt& y) {
        re += y.re;
        im += y.im;
        return *this;
    }
    friend bool operator==(const GaussianInt& x, const GaussianInt& y) {
        return x.re == y.re && x.im == y.im;
    }
};

/// Exponents of a normal-ordered monomial u^a v^b Q^c. Q is central; u and v
/// obey vu = Q uv, equivalently v^b u^a = Q^(ab) u^a v^b for all integers.
struct QExponents {
    int a = 0;
    int b = 0;
    long c = 0;
    auto operator<=>(const QExponents&) const = default;
};

/// Laurent polynomial in q-commuting generators u, v and the central unit Q,
/// kept in normal order (all u powers to the left of all v powers).
class QPolynomial {
public:
    QPolynomial() = default;

    static QPolynomial monomial(GaussianInt coeff, int a, int b, long c = 0);
    static QPolynomial u(int power = 1) { return monomial(1, power, 0, 0); }
    static QPolynomial v(int power = 1) { return monomial(1, 0, power, 0); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    GaussianInt coeff(int a, int b, long c) const;
    const std::map<QExponents, GaussianInt>& terms() const { return terms_; }

    QPolynomial& operator+=(const QPolynomial& other);
    friend QPolynomial operator+(QPolynomial x, const QPolynomial& y) { return x += y; }
    friend QPolynomial operator*(const QPolynomial& x, const QPolynomial& y);
    friend bool operator==(const QPolynomial& x, const QPolynomial& y) {
        return x.terms_ == y.terms_;
    }

    /// Coefficients of the u^0 v^0 Q^c terms, keyed by c.
    std::map<long, GaussianInt> identity_component() const;

private:
    void add_term(const QExponents& key, const GaussianInt& coeff);

    std::map<QExponents, GaussianInt> terms_;
};

/// (sum of generators)^n, normal ordered. n = 0 gives the unit polynomial.
QPolynomial expand_power(const std::vector<QPolynomial>& generators, int n);

}  // namespace areaenum

#pragma once

#include <optional>
#include <string>

#include "qapery/qpoly.hpp"

namespace qapery {

/// Rational function in q in canonical reduced form.
///
/// Canonical form: gcd(num, den) = 1, den has integer coefficients with
/// content 1 and a positive integer leading coefficient; all rational content
/// lives in the numerator. Equality is therefore plain structural equality.
class QRat {
public:
    QRat() : den_(QPoly::one()) {}
    explicit QRat(const Rational& r) : num_(r), den_(QPoly::one()) {}
    explicit QRat(QPoly p) : num_(std::move(p)), den_(QPoly::one()) {}
    /// Reduces num/den to canonical form. Throws std::domain_error
    /// ("division by zero polynomial") when den is zero.
    QRat(QPoly num, QPoly den);

    /// Trusted constructor for parts already in canonical form (used by the
    /// factored fast path, which reduces cyclotomically instead of via gcd).
    static QRat fromReducedParts(QPoly num, QPoly den);

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool isZero() const { return num_.isZero(); }
    bool isPolynomial() const { return den_ == QPoly::one(); }

    QRat operator-() const;
    friend QRat operator+(const QRat& a, const QRat& b);
    friend QRat operator-(const QRat& a, const QRat& b);
    friend QRat operator*(const QRat& a, const QRat& b);
    friend QRat operator/(const QRat& a, const QRat& b);  // throws on zero b
    QRat& operator+=(const QRat& o) { *this = *this + o; return *this; }
    QRat& operator-=(const QRat& o) { *this = *this - o; return *this; }
    QRat& operator*=(const QRat& o) { *this = *this * o; return *this; }
    QRat& operator/=(const QRat& o) { *this = *this / o; return *this; }

    QRat reciprocal() const;  // throws on zero

    /// Exact evaluation. Throws std::domain_error naming q0 when the
    /// denominator vanishes there.
    Rational eval(const Rational& q0) const;

    bool operator==(const QRat&) const = default;

    std::string str() const;

private:
    QPoly num_;
    QPoly den_;
};

/// Outcome of trying to read a QRat as an integer-coefficient polynomial.
/// Failure is a normal result: it carries the leftover denominator (when the
/// value is not a polynomial) or the first non-integer coefficient.
struct IntegerPolyResult {
    std::optional<QPoly> poly;              // set on success
    QPoly residualDen;                      // non-unit when not a polynomial
    std::optional<Rational> offendingCoeff; // set when polynomial but non-integral
    bool ok() const { return poly.has_value(); }
};

IntegerPolyResult asIntegerPoly(const QRat& r);

}  // namespace qapery

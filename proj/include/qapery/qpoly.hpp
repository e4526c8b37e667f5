#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qapery/rational.hpp"

namespace qapery {

/// Dense univariate polynomial in q over the exact rationals.
///
/// Canonical form: no trailing zero coefficient is stored, so the zero
/// polynomial has an empty coefficient vector and no degree — degree() is
/// std::nullopt rather than a sentinel integer that could leak into
/// arithmetic.
///
/// Values are immutable in spirit: every operation returns a fresh
/// polynomial, nothing here mutates shared state, and const QPoly is safe to
/// share across threads.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(const Rational& constant);
    explicit QPoly(long constant) : QPoly(Rational(constant)) {}
    explicit QPoly(std::vector<Rational> coeffs);

    static QPoly one() { return QPoly(Rational(1)); }
    static QPoly variable() { return monomial(Rational(1), 1); }
    static QPoly monomial(const Rational& c, long exponent);

    bool isZero() const { return coeffs_.empty(); }
    std::optional<long> degree() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// Coefficient of q^i; zero outside the stored range.
    Rational coeff(long i) const;
    const Rational& leading() const;  // throws std::domain_error on zero
    /// Exponent of the lowest nonzero term (the q-adic valuation).
    long lowestExponent() const;      // throws std::domain_error on zero

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { a += b; return a; }
    friend QPoly operator-(QPoly a, const QPoly& b) { a -= b; return a; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly& operator*=(const QPoly& o) { *this = *this * o; return *this; }

    QPoly scaled(const Rational& c) const;
    QPoly shiftedUp(long e) const;    // multiply by q^e, e >= 0

    Rational eval(const Rational& x) const;

    bool isIntegral() const;          // every coefficient an integer

    /// Exact division: returns num/den when den divides num exactly.
    static std::optional<QPoly> divideExact(const QPoly& num, const QPoly& den);
    /// Euclidean division over the rationals: num = quot*den + rem,
    /// deg rem < deg den. Throws on zero den.
    static std::pair<QPoly, QPoly> divMod(const QPoly& num, const QPoly& den);

    bool operator==(const QPoly&) const = default;

    std::string str() const;          // human-readable, e.g. "1 - q + 2*q^3"

private:
    std::vector<Rational> coeffs_;
    void trim();
};

inline QPoly operator*(const QPoly& p, const Rational& c) { return p.scaled(c); }
inline QPoly operator*(const Rational& c, const QPoly& p) { return p.scaled(c); }

}  // namespace qapery

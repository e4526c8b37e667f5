#pragma once

#include <map>
#include <string>

#include "qapery/qpoly.hpp"
#include "qapery/qrat.hpp"

namespace qapery {

/// Signed monomial times a product of binomial factors:
///
///     sign * q^qpower * prod_j (1 - q^j)^{e_j}
///
/// This is the working representation for q-Pochhammer symbols, Gaussian
/// binomial building blocks and the Lemma normalizers: multiplication is
/// exponent addition, and cyclotomic valuations read off as divisor sums
/// without any expansion.
class FactoredQProduct {
public:
    FactoredQProduct() = default;  // the product 1

    static FactoredQProduct one() { return {}; }
    static FactoredQProduct qPower(long e);
    /// (1 - q^j)^e, j >= 1.
    static FactoredQProduct oneMinusQPow(long j, long e = 1);

    int sign() const { return sign_; }
    long qpower() const { return qpower_; }
    const std::map<long, long>& factors() const { return factors_; }

    FactoredQProduct& operator*=(const FactoredQProduct& o);
    friend FactoredQProduct operator*(FactoredQProduct a, const FactoredQProduct& b) {
        a *= b;
        return a;
    }
    FactoredQProduct inverse() const;
    FactoredQProduct pow(long e) const;
    FactoredQProduct negated() const;

    bool isOne() const { return sign_ == 1 && qpower_ == 0 && factors_.empty(); }
    bool allExponentsNonnegative() const;
    /// Degree as a rational function: qpower + sum_j j * e_j.
    long netDegree() const;

    /// Expansion to a polynomial; requires qpower >= 0 and all exponents >= 0.
    QPoly expandPoly() const;
    /// Expansion to a canonical rational function (any exponents).
    QRat expandRat() const;

    /// Exponent of the cyclotomic polynomial Phi_d in this product, for
    /// d >= 2: sum of e_j over the j divisible by d.
    long cycloValuation(long d) const;
    /// Full cyclotomic exponent vector (d >= 1), plus the sign picked up by
    /// rewriting each (1-q^j) as -(q^j - 1) = -prod_{d|j} Phi_d.
    std::map<long, long> cyclotomicExponents() const;
    int cyclotomicSign() const;

    /// Exact evaluation at a rational point. Throws std::domain_error when a
    /// negative-exponent factor vanishes at q0.
    Rational evalAt(const Rational& q0) const;

    bool operator==(const FactoredQProduct&) const = default;

    std::string str() const;

private:
    int sign_ = 1;
    long qpower_ = 0;
    std::map<long, long> factors_;  // j -> e_j, never zero
};

/// Quotient num / den with the denominator kept in factored form, so sums and
/// products of scheme quantities never pay for a generic polynomial gcd.
/// Normal form: den has sign +1, qpower >= 0 and nonnegative exponents (any
/// inverted pieces are multiplied into num on construction).
class FactoredRat {
public:
    FactoredRat() = default;  // zero
    explicit FactoredRat(QPoly num) : num_(std::move(num)) {}
    explicit FactoredRat(const Rational& c) : num_(QPoly(c)) {}
    FactoredRat(QPoly num, FactoredQProduct den);
    static FactoredRat fromProduct(const FactoredQProduct& p);

    const QPoly& num() const { return num_; }
    const FactoredQProduct& den() const { return den_; }
    bool isZero() const { return num_.isZero(); }

    friend FactoredRat operator+(const FactoredRat& a, const FactoredRat& b);
    friend FactoredRat operator-(const FactoredRat& a, const FactoredRat& b);
    friend FactoredRat operator*(const FactoredRat& a, const FactoredRat& b);
    FactoredRat operator-() const;
    FactoredRat& operator+=(const FactoredRat& o) { *this = *this + o; return *this; }
    FactoredRat& operator-=(const FactoredRat& o) { *this = *this - o; return *this; }

    FactoredRat timesPoly(const QPoly& p) const;
    FactoredRat timesProduct(const FactoredQProduct& p) const;
    FactoredRat scaled(const Rational& c) const;

    /// Value equality by cross-multiplication over the factored lcm.
    bool operator==(const FactoredRat& o) const;

    /// Canonical rational function. Reduction happens by peeling cyclotomic
    /// factors (and powers of q) off the numerator — exact divisions only.
    QRat toQRat() const;

    Rational evalAt(const Rational& q0) const;

private:
    QPoly num_;
    FactoredQProduct den_;  // normalized as documented
};

}  // namespace qapery

#include "qapery/qrat.hpp"

#include <stdexcept>

#include "qapery/poly_gcd.hpp"

namespace qapery {

QRat::QRat(QPoly num, QPoly den) {
    if (den.isZero()) throw std::domain_error("division by zero polynomial");
    if (num.isZero()) {
        num_ = QPoly();
        den_ = QPoly::one();
        return;
    }
    QPoly g = polyGcd(num, den);
    if (g != QPoly::one()) {
        num = *QPoly::divideExact(num, g);
        den = *QPoly::divideExact(den, g);
    }
    // den: primitive integer coefficients, positive leading coefficient;
    // the removed content moves into num.
    Rational denContent = polyContent(den);
    num_ = num.scaled(Rational(1) / denContent);
    den_ = den.scaled(Rational(1) / denContent);
}

QRat QRat::fromReducedParts(QPoly num, QPoly den) {
    QRat r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

QRat QRat::operator-() const { return fromReducedParts(-num_, den_); }

QRat operator+(const QRat& a, const QRat& b) {
    return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRat operator-(const QRat& a, const QRat& b) {
    return QRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

QRat operator*(const QRat& a, const QRat& b) {
    return QRat(a.num_ * b.num_, a.den_ * b.den_);
}

QRat operator/(const QRat& a, const QRat& b) {
    if (b.isZero()) throw std::domain_error("division by zero rational function");
    return QRat(a.num_ * b.den_, a.den_ * b.num_);
}

QRat QRat::reciprocal() const {
    if (isZero()) throw std::domain_error("reciprocal of zero");
    return QRat(den_, num_);
}

Rational QRat::eval(const Rational& q0) const {
    Rational d = den_.eval(q0);
    if (d == 0)
        throw std::domain_error("denominator vanishes at q = " + toString(q0));
    return num_.eval(q0) / d;
}

std::string QRat::str() const {
    if (isPolynomial()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

IntegerPolyResult asIntegerPoly(const QRat& r) {
    IntegerPolyResult out;
    if (!r.isPolynomial()) {
        out.residualDen = r.den();
        return out;
    }
    out.residualDen = QPoly::one();
    if (!r.num().isIntegral()) {
        for (const auto& c : r.num().coeffs()) {
            if (!isInteger(c)) {
                out.offendingCoeff = c;
                break;
            }
        }
        return out;
    }
    out.poly = r.num();
    return out;
}

}  // namespace qapery

#include "qapery/factored.hpp"

#include <sstream>
#include <stdexcept>

#include "qapery/cyclotomic.hpp"

namespace qapery {

FactoredQProduct FactoredQProduct::qPower(long e) {
    FactoredQProduct p;
    p.qpower_ = e;
    return p;
}

FactoredQProduct FactoredQProduct::oneMinusQPow(long j, long e) {
    if (j < 1) throw std::domain_error("oneMinusQPow: factor index must be >= 1");
    FactoredQProduct p;
    if (e != 0) p.factors_[j] = e;
    return p;
}

FactoredQProduct& FactoredQProduct::operator*=(const FactoredQProduct& o) {
    sign_ *= o.sign_;
    qpower_ += o.qpower_;
    for (const auto& [j, e] : o.factors_) {
        long& mine = factors_[j];
        mine += e;
        if (mine == 0) factors_.erase(j);
    }
    return *this;
}

FactoredQProduct FactoredQProduct::inverse() const {
    FactoredQProduct p;
    p.sign_ = sign_;
    p.qpower_ = -qpower_;
    for (const auto& [j, e] : factors_) p.factors_[j] = -e;
    return p;
}

FactoredQProduct FactoredQProduct::pow(long e) const {
    FactoredQProduct p;
    p.sign_ = (e % 2 == 0) ? 1 : sign_;
    p.qpower_ = qpower_ * e;
    if (e != 0)
        for (const auto& [j, x] : factors_) p.factors_[j] = x * e;
    return p;
}

FactoredQProduct FactoredQProduct::negated() const {
    FactoredQProduct p(*this);
    p.sign_ = -p.sign_;
    return p;
}

bool FactoredQProduct::allExponentsNonnegative() const {
    for (const auto& [j, e] : factors_)
        if (e < 0) return false;
    return true;
}

long FactoredQProduct::netDegree() const {
    long d = qpower_;
    for (const auto& [j, e] : factors_) d += j * e;
    return d;
}

QPoly FactoredQProduct::expandPoly() const {
    if (qpower_ < 0 || !allExponentsNonnegative())
        throw std::domain_error("expandPoly: product is not a polynomial");
    QPoly out = QPoly(Rational(sign_)).shiftedUp(qpower_);
    for (const auto& [j, e] : factors_) {
        QPoly binom = QPoly::one() - QPoly::monomial(Rational(1), j);
        for (long i = 0; i < e; ++i) out *= binom;
    }
    return out;
}

QRat FactoredQProduct::expandRat() const {
    return FactoredRat::fromProduct(*this).toQRat();
}

long FactoredQProduct::cycloValuation(long d) const {
    long v = 0;
    for (const auto& [j, e] : factors_)
        if (j % d == 0) v += e;
    return v;
}

std::map<long, long> FactoredQProduct::cyclotomicExponents() const {
    std::map<long, long> out;
    for (const auto& [j, e] : factors_) {
        for (long d = 1; d <= j; ++d)
            if (j % d == 0) out[d] += e;
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

int FactoredQProduct::cyclotomicSign() const {
    // (1 - q^j) = -(q^j - 1) contributes one sign flip per unit exponent
    long flips = 0;
    for (const auto& [j, e] : factors_) flips += e;
    return (flips % 2 == 0) ? sign_ : -sign_;
}

Rational FactoredQProduct::evalAt(const Rational& q0) const {
    Rational v(sign_);
    v *= ratPow(q0, qpower_);
    for (const auto& [j, e] : factors_) {
        Rational f = Rational(1) - ratPow(q0, j);
        if (f == 0 && e < 0)
            throw std::domain_error("factored product has a pole at q = " + toString(q0));
        v *= ratPow(f, e);
    }
    return v;
}

std::string FactoredQProduct::str() const {
    std::ostringstream os;
    os << (sign_ < 0 ? "-" : "");
    bool any = false;
    if (qpower_ != 0) {
        os << "q^" << qpower_;
        any = true;
    }
    for (const auto& [j, e] : factors_) {
        if (any) os << " * ";
        os << "(1-q^" << j << ")";
        if (e != 1) os << "^" << e;
        any = true;
    }
    if (!any) os << "1";
    return os.str();
}

// ---------------------------------------------------------------------------

FactoredRat::FactoredRat(QPoly num, FactoredQProduct den) : num_(std::move(num)) {
    if (num_.isZero()) return;
    if (den.sign() < 0) num_ = -num_;
    // fold inverted factors and q-powers into the numerator
    FactoredQProduct up;
    long upQ = den.qpower() < 0 ? -den.qpower() : 0;
    FactoredQProduct d;
    for (const auto& [j, e] : den.factors()) {
        if (e < 0)
            up *= FactoredQProduct::oneMinusQPow(j, -e);
        else
            d *= FactoredQProduct::oneMinusQPow(j, e);
    }
    if (!up.isOne() || upQ > 0) num_ = num_ * up.expandPoly().shiftedUp(upQ);
    den_ = d * FactoredQProduct::qPower(den.qpower() > 0 ? den.qpower() : 0);
}

FactoredRat FactoredRat::fromProduct(const FactoredQProduct& p) {
    return FactoredRat(QPoly::one(), p.inverse());
}

namespace {

// lcm of two normalized denominators (exponent-wise max).
FactoredQProduct denLcm(const FactoredQProduct& a, const FactoredQProduct& b) {
    FactoredQProduct l = a;
    FactoredQProduct extra;
    for (const auto& [j, e] : b.factors()) {
        auto it = a.factors().find(j);
        long have = (it == a.factors().end()) ? 0 : it->second;
        if (e > have) extra *= FactoredQProduct::oneMinusQPow(j, e - have);
    }
    l *= extra;
    if (b.qpower() > a.qpower())
        l *= FactoredQProduct::qPower(b.qpower() - a.qpower());
    return l;
}

// expand(lcm / den): the cofactor multiplying a numerator when moving to lcm
QPoly cofactorPoly(const FactoredQProduct& lcm, const FactoredQProduct& den) {
    return (lcm * den.inverse()).expandPoly();
}

}  // namespace

FactoredRat operator+(const FactoredRat& a, const FactoredRat& b) {
    if (a.isZero()) return b;
    if (b.isZero()) return a;
    FactoredQProduct l = denLcm(a.den_, b.den_);
    FactoredRat out;
    out.num_ = a.num_ * cofactorPoly(l, a.den_) + b.num_ * cofactorPoly(l, b.den_);
    out.den_ = out.num_.isZero() ? FactoredQProduct::one() : l;
    return out;
}

FactoredRat operator-(const FactoredRat& a, const FactoredRat& b) { return a + (-b); }

FactoredRat operator*(const FactoredRat& a, const FactoredRat& b) {
    if (a.isZero() || b.isZero()) return FactoredRat();
    FactoredRat out;
    out.num_ = a.num_ * b.num_;
    out.den_ = a.den_ * b.den_;
    return out;
}

FactoredRat FactoredRat::operator-() const {
    FactoredRat out(*this);
    out.num_ = -out.num_;
    return out;
}

FactoredRat FactoredRat::timesPoly(const QPoly& p) const {
    if (isZero() || p.isZero()) return FactoredRat();
    FactoredRat out(*this);
    out.num_ = out.num_ * p;
    return out;
}

FactoredRat FactoredRat::timesProduct(const FactoredQProduct& p) const {
    if (isZero()) return FactoredRat();
    return FactoredRat(num_, den_ * p.inverse());
}

FactoredRat FactoredRat::scaled(const Rational& c) const {
    if (isZero() || c == 0) return FactoredRat();
    FactoredRat out(*this);
    out.num_ = out.num_.scaled(c);
    return out;
}

bool FactoredRat::operator==(const FactoredRat& o) const {
    if (isZero() || o.isZero()) return isZero() == o.isZero();
    FactoredQProduct l = denLcm(den_, o.den_);
    return num_ * cofactorPoly(l, den_) == o.num_ * cofactorPoly(l, o.den_);
}

QRat FactoredRat::toQRat() const {
    if (isZero()) return QRat();
    QPoly num = num_;
    if (den_.sign() < 0) num = -num;  // normalized dens have sign +1; belt and braces

    // strip powers of q
    long qexp = den_.qpower();
    if (qexp > 0) {
        long v = num.lowestExponent();
        long strip = std::min(qexp, v);
        if (strip > 0) {
            std::vector<Rational> c(num.coeffs().begin() + strip, num.coeffs().end());
            num = QPoly(std::move(c));
            qexp -= strip;
        }
    }

    // peel cyclotomic factors off the numerator
    std::map<long, long> cyclo = den_.cyclotomicExponents();
    int sign = den_.cyclotomicSign();
    for (auto& [d, mult] : cyclo) {
        if (mult <= 0) continue;
        QPoly phi = cyclotomic(d);
        while (mult > 0) {
            auto quot = QPoly::divideExact(num, phi);
            if (!quot) break;
            num = std::move(*quot);
            --mult;
        }
    }

    // what remains of the denominator is monic with content 1
    QPoly den = QPoly::one().shiftedUp(qexp);
    for (const auto& [d, mult] : cyclo) {
        QPoly phi = cyclotomic(d);
        for (long i = 0; i < mult; ++i) den *= phi;
    }
    if (sign < 0) num = -num;
    return QRat::fromReducedParts(std::move(num), std::move(den));
}

Rational FactoredRat::evalAt(const Rational& q0) const {
    if (isZero()) return Rational(0);
    Rational d = den_.evalAt(q0);
    if (d == 0)
        throw std::domain_error("denominator vanishes at q = " + toString(q0));
    return num_.eval(q0) / d;
}

}  // namespace qapery

#include "qapery/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace qapery {

QPoly::QPoly(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(const Rational& c, long exponent) {
    if (exponent < 0) throw std::domain_error("QPoly::monomial: negative exponent");
    if (c == 0) return QPoly();
    std::vector<Rational> v(static_cast<size_t>(exponent) + 1, Rational(0));
    v.back() = c;
    QPoly p;
    p.coeffs_ = std::move(v);
    return p;
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<long> QPoly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<long>(coeffs_.size()) - 1;
}

Rational QPoly::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<size_t>(i)];
}

const Rational& QPoly::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

long QPoly::lowestExponent() const {
    if (coeffs_.empty()) throw std::domain_error("lowest exponent of zero polynomial");
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return static_cast<long>(i);
    throw std::logic_error("untrimmed zero polynomial");
}

QPoly QPoly::operator-() const {
    QPoly out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.isZero() || b.isZero()) return QPoly();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return QPoly(std::move(out));
}

QPoly QPoly::scaled(const Rational& c) const {
    if (c == 0) return QPoly();
    QPoly out(*this);
    for (auto& x : out.coeffs_) x *= c;
    return out;
}

QPoly QPoly::shiftedUp(long e) const {
    if (e < 0) throw std::domain_error("QPoly::shiftedUp: negative shift");
    if (isZero() || e == 0) return *this;
    std::vector<Rational> out(static_cast<size_t>(e), Rational(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return QPoly(std::move(out));
}

Rational QPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc *= x;
        acc += coeffs_[i];
    }
    return acc;
}

bool QPoly::isIntegral() const {
    for (const auto& c : coeffs_)
        if (!isInteger(c)) return false;
    return true;
}

std::pair<QPoly, QPoly> QPoly::divMod(const QPoly& num, const QPoly& den) {
    if (den.isZero()) throw std::domain_error("division by zero polynomial");
    if (num.isZero() || num.coeffs_.size() < den.coeffs_.size())
        return {QPoly(), num};
    std::vector<Rational> rem = num.coeffs_;
    const long dn = static_cast<long>(den.coeffs_.size());
    std::vector<Rational> quot(rem.size() - den.coeffs_.size() + 1, Rational(0));
    const Rational& lead = den.coeffs_.back();
    for (long i = static_cast<long>(rem.size()) - 1; i >= dn - 1; --i) {
        if (rem[static_cast<size_t>(i)] == 0) continue;
        Rational f = rem[static_cast<size_t>(i)] / lead;
        quot[static_cast<size_t>(i - dn + 1)] = f;
        for (long j = 0; j < dn; ++j)
            rem[static_cast<size_t>(i - dn + 1 + j)] -= f * den.coeffs_[static_cast<size_t>(j)];
    }
    return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

std::optional<QPoly> QPoly::divideExact(const QPoly& num, const QPoly& den) {
    if (den.isZero()) throw std::domain_error("division by zero polynomial");
    if (num.isZero()) return QPoly();
    auto [quot, rem] = divMod(num, den);
    if (!rem.isZero()) return std::nullopt;
    return quot;
}

std::string QPoly::str() const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational a = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace qapery

#include "qapery/scheme.hpp"

#include <stdexcept>

namespace qapery {
namespace {

QPoly pw(const QPoly& p, long e) {
    QPoly r = QPoly::one();
    for (long i = 0; i < e; ++i) r *= p;
    return r;
}

QPoly C(long v) { return QPoly(Rational(v)); }

// Gaussian binomial as a factored ratio of Pochhammers; pre 0 <= k <= n.
FactoredQProduct qbinomFactored(long n, long k) {
    return qPochhammer(n) * qPochhammer(k).inverse() * qPochhammer(n - k).inverse();
}

Rational pochMinusAt(long m, const Rational& q0) {
    Rational v(1);
    for (long j = 1; j <= m; ++j) v *= Rational(1) - ratPow(q0, j);
    return v;
}

Rational pochEvenAt(long m, const Rational& q0) {
    Rational v(1);
    for (long j = 1; j <= m; ++j) v *= Rational(1) - ratPow(q0, 2 * j);
    return v;
}

Rational qbinomAt(long n, long k, const Rational& q0) {
    return pochMinusAt(n, q0) / (pochMinusAt(k, q0) * pochMinusAt(n - k, q0));
}

// exact products used by the tail bounds (Q = |q0| > 1)
Rational prodQPowMinus1(long m, const Rational& Q) {
    Rational v(1);
    for (long j = 1; j <= m; ++j) v *= ratPow(Q, j) - 1;
    return v;
}

Rational prodQPowPlus1(long m, const Rational& Q) {
    Rational v(1);
    for (long j = 1; j <= m; ++j) v *= ratPow(Q, j) + 1;
    return v;
}

Rational prodQ2PowMinus1(long m, const Rational& Q) {
    Rational v(1);
    for (long j = 1; j <= m; ++j) v *= ratPow(Q, 2 * j) - 1;
    return v;
}

// ---- harmonic scheme --------------------------------------------------------

FactoredRat harmonicF(long n, long k) {
    // -1 / (binom(n+k+1, k) (q)_{n+1})
    FactoredQProduct denom = qbinomFactored(n + k + 1, k) * qPochhammer(n + 1);
    return FactoredRat::fromProduct(denom.inverse()).scaled(Rational(-1));
}

FactoredRat harmonicShiftRatio(long n) {
    // q^{n+1} / (q^{n+1} - 1) = -q^{n+1} / (1 - q^{n+1})
    FactoredQProduct p = FactoredQProduct::qPower(n + 1) *
                         FactoredQProduct::oneMinusQPow(n + 1).inverse();
    return FactoredRat::fromProduct(p).scaled(Rational(-1));
}

FactoredRat harmonicPotentialTermN(long m) {
    // q^m / ((1 - q^m) (q)_m)
    FactoredQProduct p = FactoredQProduct::qPower(m) *
                         FactoredQProduct::oneMinusQPow(m).inverse() *
                         qPochhammer(m).inverse();
    return FactoredRat::fromProduct(p);
}

FactoredRat harmonicPotentialTermK(long n, long m) {
    // 1/(q^m - 1) * 1/(binom(n+m, m) (q)_n)
    FactoredQProduct p = FactoredQProduct::oneMinusQPow(m).inverse() *
                         qbinomFactored(n + m, m).inverse() *
                         qPochhammer(n).inverse();
    return FactoredRat::fromProduct(p).scaled(Rational(-1));
}

QPoly harmonicMollifier(long n, long k) {
    if (k < 0 || k > n) return QPoly();
    QPoly b = qBinomial(n + k, k) * qBinomial(n, k);
    b = b.shiftedUp(k * (k + 1) / 2);
    return (k % 2) ? -b : b;
}

std::array<QPoly, 3> harmonicLCoeffs(long n) {
    const QPoly q1 = QPoly::variable();
    const QPoly A = QPoly::monomial(Rational(1), n + 1);
    QPoly y0 = q1 * (A - C(1)) * (q1 * A + C(2));
    QPoly y2 = (q1 * A - C(1)) * (A + C(2));
    QPoly y1 = pw(q1, 3) * pw(A, 5) + C(2) * pw(q1, 2) * (q1 + C(1)) * pw(A, 4) +
               pw(q1, 2) * pw(A, 3) - C(4) * q1 * (q1 + C(1)) * pw(A, 2) +
               (pw(q1, 2) - C(4) * q1 + C(1)) * A + C(2) * (q1 + C(1));
    return {y0, y1, y2};
}

FactoredRat harmonicP1(long n, long k) {
    const QPoly q1 = QPoly::variable();
    const QPoly A = QPoly::monomial(Rational(1), n + 1);
    const QPoly B = QPoly::monomial(Rational(1), k + 1);
    QPoly overBeta = -(q1 * pw(A, 2) * (pw(q1, 2) * A + C(2) * q1));
    QPoly rest = q1 * pw(A, 2) *
                 (pw(q1, 2) * pw(A, 3) + C(2) * q1 * (q1 + C(1)) * pw(A, 2) +
                  C(3) * q1 * A - (q1 + C(1)) - (A + C(2)) * B);
    return FactoredRat(overBeta, FactoredQProduct::qPower(k + 1)) + FactoredRat(rest);
}

FactoredRat harmonicP2(long n, long k) {
    // q * P2 over q, so the q^{-1} coefficients stay exact
    const QPoly q1 = QPoly::variable();
    const QPoly A = QPoly::monomial(Rational(1), n + 1);
    const QPoly B = QPoly::monomial(Rational(1), k + 1);
    QPoly head = pw(q1, 3) * pw(A, 2) + pw(q1, 2) * A - C(2) * q1;
    QPoly bracket = pw(q1, 3) * pw(A, 5) + pw(q1, 2) * (C(2) * q1 + C(1)) * pw(A, 4) -
                    C(2) * q1 * pw(A, 3) - q1 * pw(A, 3) * B -
                    (C(2) * q1 - C(1)) * pw(A, 2) * B - q1 * (C(3) * q1 + C(5)) * pw(A, 2) +
                    C(2) * A * B + (pw(q1, 2) - q1 + C(2)) * A + (q1 + C(3));
    return FactoredRat(head + B * bracket, FactoredQProduct::qPower(1));
}

FactoredRat harmonicAExtra(long n, long k) {
    if (k < 0 || k > n + 1) return FactoredRat();
    FactoredQProduct pre = FactoredQProduct::qPower(2 * n + 3) *
                           FactoredQProduct::oneMinusQPow(n + 1).inverse() *
                           qbinomFactored(n + 1, k) *
                           FactoredQProduct::qPower(k * (k - 1) / 2) *
                           qPochhammer(n + 2).inverse();
    // 1/(q^{n+1}-1) = -(1-q^{n+1})^{-1} and the (-1)^k in front
    Rational sign = (k % 2) ? Rational(1) : Rational(-1);
    return harmonicP2(n, k).timesProduct(pre).scaled(sign);
}

// ---- ln2 scheme -------------------------------------------------------------

FactoredRat ln2F(long n, long k) {
    // (-1)^k / (1-q^{k+1}) * (q)_n / (binom(n+k+1, k+1) (q^2)_n)
    FactoredQProduct p = FactoredQProduct::oneMinusQPow(k + 1).inverse() *
                         qPochhammer(n) * qbinomFactored(n + k + 1, k + 1).inverse() *
                         qPochhammerEven(n).inverse();
    FactoredRat out = FactoredRat::fromProduct(p);
    return (k % 2) ? -out : out;
}

FactoredRat ln2ShiftRatio(long n) {
    // q^{n+1} / (1 + q^{n+1}); 1 + q^{n+1} = (1-q^{2n+2}) / (1-q^{n+1})
    FactoredQProduct p = FactoredQProduct::qPower(n + 1) *
                         FactoredQProduct::oneMinusQPow(n + 1) *
                         FactoredQProduct::oneMinusQPow(2 * n + 2).inverse();
    return FactoredRat::fromProduct(p);
}

FactoredRat ln2PotentialTermN(long m) {
    // q^m (q)_m / ((1 - q^m) (q^2)_m)
    FactoredQProduct p = FactoredQProduct::qPower(m) * qPochhammer(m) *
                         FactoredQProduct::oneMinusQPow(m).inverse() *
                         qPochhammerEven(m).inverse();
    return FactoredRat::fromProduct(p);
}

FactoredRat ln2PotentialTermK(long n, long m) {
    // (-1)^{m-1} / (1 - q^m) * (q)_n / (binom(n+m, m) (q^2)_n)
    FactoredQProduct p = FactoredQProduct::oneMinusQPow(m).inverse() * qPochhammer(n) *
                         qbinomFactored(n + m, m).inverse() * qPochhammerEven(n).inverse();
    FactoredRat out = FactoredRat::fromProduct(p);
    return (m % 2 == 0) ? -out : out;
}

QPoly ln2Mollifier(long n, long k) {
    if (k < 0 || k > n) return QPoly();
    QPoly b = qBinomial(n + k, k) * qBinomial(n, k);
    return b.shiftedUp(k * (k + 1) / 2);
}

std::array<QPoly, 3> ln2LCoeffs(long n) {
    const QPoly q1 = QPoly::variable();
    const QPoly A = QPoly::monomial(Rational(1), n + 1);
    QPoly y0 = -(q1 * (A - C(1)) * (A + C(1)) * (pw(q1, 2) * pw(A, 2) + q1 * A + C(2)));
    QPoly y2 = -((q1 * A - C(1)) * (q1 * A + C(1)) * (pw(A, 2) + A + C(2)));
    // The alpha-free tail is -(1+q^2) alpha - 2(1+q); with it, L annihilates
    // both a(n) and b(n) (checked wholesale by the test suite).
    QPoly y1 = pw(q1, 4) * pw(A, 7) + pw(q1, 2) * (C(1) + q1) * (q1 * pw(A, 6) + pw(A, 4)) +
               q1 * (C(1) + q1 + pw(q1, 2)) * (C(2) * q1 * pw(A, 5) + pw(A, 3)) -
               (C(1) + C(3) * q1 + C(3) * pw(q1, 2) + pw(q1, 3)) * pw(A, 2) -
               (C(1) + pw(q1, 2)) * A - C(2) * (C(1) + q1);
    return {y0, y1, y2};
}

// The first alpha-bracket of P1 is common to the printed and resolved forms.
QPoly ln2P1Head(long n) {
    const QPoly q1 = QPoly::variable();
    const QPoly A = QPoly::monomial(Rational(1), n + 1);
    return q1 * pw(A, 2) *
           (pw(q1, 3) * pw(A, 5) + pw(q1, 2) * (C(1) + q1) * pw(A, 4) +
            C(2) * q1 * (C(1) + pw(q1, 2)) * pw(A, 3) - (C(1) - q1 + pw(q1, 2)) * A -
            C(3) * (C(1) + q1));
}

FactoredRat ln2P1Printed(long n, long k) {
    const QPoly q1 = QPoly::variable();
    const QPoly A = QPoly::monomial(Rational(1), n + 1);
    const QPoly B = QPoly::monomial(Rational(1), k + 1);  // alpha_k read as q^{k+1}
    QPoly overBeta = q1 * pw(A, 2) * q1 *
                     (pw(q1, 2) * pw(A, 3) + q1 * (C(1) + q1) * pw(A, 2) + (C(2) - q1) * A - C(2));
    QPoly rest = q1 * pw(A, 2) *
                 ((q1 * pw(A, 3) + (q1 - C(1)) * pw(A, 2) + (C(2) * q1 - C(1)) * A) * B - C(2));
    return FactoredRat(overBeta, FactoredQProduct::qPower(k + 1)) +
           FactoredRat(ln2P1Head(n) + rest);
}

FactoredRat ln2P1Resolved(long n, long k) {
    const QPoly q1 = QPoly::variable();
    const QPoly A = QPoly::monomial(Rational(1), n + 1);
    const QPoly B = QPoly::monomial(Rational(1), k + 1);
    QPoly overBeta = q1 * pw(A, 2) * q1 *
                     (pw(q1, 2) * pw(A, 3) + q1 * (C(1) - q1) * pw(A, 2) + (C(2) - q1) * A - C(2));
    QPoly rest = q1 * pw(A, 2) *
                 ((q1 * pw(A, 3) + (q1 - C(1)) * pw(A, 2) + (C(2) * q1 - C(1)) * A - C(2)) * B);
    return FactoredRat(overBeta, FactoredQProduct::qPower(k + 1)) +
           FactoredRat(ln2P1Head(n) + rest);
}

// q * P2, with the beta^2-bracket coefficient as a parameter: the printed
// display has (2-q) alpha there, the resolved certificate needs (2-1/q) alpha.
QPoly ln2P2TimesQ(long n, long k, bool resolved) {
    const QPoly q1 = QPoly::variable();
    const QPoly A = QPoly::monomial(Rational(1), n + 1);
    const QPoly B = QPoly::monomial(Rational(1), k + 1);
    QPoly head = q1 * (pw(q1, 2) * pw(A, 3) + q1 * (C(1) + q1) * pw(A, 2) + (C(2) + q1) * A + C(2));
    QPoly midCoeff = resolved ? (C(2) * q1 - C(1)) : (C(2) * q1 - pw(q1, 2));
    QPoly sq = A * pw(B, 2) *
               (q1 * pw(A, 3) + (q1 - C(1)) * pw(A, 2) + midCoeff * A - C(2));
    QPoly lin = B * (pw(q1, 3) * pw(A, 6) + pw(q1, 2) * (C(1) + q1) * pw(A, 5) +
                     q1 * (C(2) + q1 + C(2) * pw(q1, 2)) * pw(A, 4) +
                     q1 * (C(1) + q1) * pw(A, 3) + C(2) * q1 * pw(A, 2) -
                     (C(1) + C(2) * q1 + pw(q1, 2)) * A + (C(1) - q1));
    return head - sq - lin;
}

FactoredRat ln2P2Printed(long n, long k) {
    return FactoredRat(ln2P2TimesQ(n, k, false), FactoredQProduct::qPower(1));
}

FactoredRat ln2P2Resolved(long n, long k) {
    return FactoredRat(ln2P2TimesQ(n, k, true), FactoredQProduct::qPower(1));
}

FactoredQProduct ln2AExtraProduct(long n, long k) {
    return FactoredQProduct::qPower(2 * n + 3) *
           FactoredQProduct::oneMinusQPow(n + 1).inverse() *
           qbinomFactored(n + 1, k) *
           FactoredQProduct::qPower(k * (k - 1) / 2) *
           qPochhammer(n + 1) * qPochhammerEven(n + 1).inverse();
}

FactoredRat ln2AExtraPrinted(long n, long k) {
    if (k < 0 || k > n + 1) return FactoredRat();
    // literal display: prefactor denominator 1 - q^{n+1}
    Rational sign = (k % 2) ? Rational(-1) : Rational(1);
    return ln2P2Printed(n, k).timesProduct(ln2AExtraProduct(n, k)).scaled(sign);
}

FactoredRat ln2AExtraResolved(long n, long k) {
    if (k < 0 || k > n + 1) return FactoredRat();
    // resolved: prefactor denominator q^{n+1} - 1, as in the harmonic scheme
    Rational sign = (k % 2) ? Rational(1) : Rational(-1);
    return ln2P2Resolved(n, k).timesProduct(ln2AExtraProduct(n, k)).scaled(sign);
}

// ---- series terms and tail bounds ------------------------------------------

Rational definingTerm(long m, const Rational& q0, bool alternating) {
    Rational t = Rational(1) / (ratPow(q0, m) - 1);
    return (alternating && m % 2) ? Rational(-t) : t;
}

Rational definingTermBound(long m, const Rational& Q) {
    return Rational(1) / (ratPow(Q, m) - 1);
}

Rational definingRatioSup(long /*m*/, const Rational& Q) {
    // (Q^m - 1)/(Q^{m+1} - 1) <= 1/Q for every m
    return Rational(1) / Q;
}

Rational harmonicAccel1Term(long m, const Rational& q0) {
    return ratPow(q0, m) / ((Rational(1) - ratPow(q0, m)) * pochMinusAt(m, q0));
}

Rational harmonicAccel1TermBound(long m, const Rational& Q) {
    return ratPow(Q, m) / ((ratPow(Q, m) - 1) * prodQPowMinus1(m, Q));
}

Rational harmonicAccel1RatioSup(long m, const Rational& Q) {
    // exact bound ratio Q (Q^m - 1)/(Q^{m+1} - 1)^2, decreasing in m
    return Q * (ratPow(Q, m) - 1) / ((ratPow(Q, m + 1) - 1) * (ratPow(Q, m + 1) - 1));
}

Rational harmonicAccel2Term(long m, const Rational& q0) {
    Rational qm = ratPow(q0, m);
    Rational num = Rational(1) - qm - qm * qm;
    Rational den = (qm - 1) * qbinomAt(2 * m, m, q0) * pochMinusAt(m, q0);
    return num / den;
}

Rational harmonicAccel2TermBound(long m, const Rational& Q) {
    Rational Qm = ratPow(Q, m);
    Rational pp = prodQPowPlus1(m, Q);
    return (Qm * Qm + Qm + 1) * pp * pp / ((Qm - 1) * prodQPowMinus1(2 * m, Q) * prodQPowMinus1(m, Q));
}

Rational harmonicAccel2RatioSup(long m, const Rational& Q) {
    if (ratPow(Q, m + 1) < 2) return Rational(1);
    return Rational(32) / ratPow(Q, 3 * m + 1);
}

Rational ln2Accel1Term(long m, const Rational& q0) {
    return ratPow(q0, m) * pochMinusAt(m, q0) /
           ((Rational(1) - ratPow(q0, m)) * pochEvenAt(m, q0));
}

Rational ln2Accel1TermBound(long m, const Rational& Q) {
    return ratPow(Q, m) * prodQPowPlus1(m, Q) / ((ratPow(Q, m) - 1) * prodQ2PowMinus1(m, Q));
}

Rational ln2Accel1RatioSup(long m, const Rational& Q) {
    if (ratPow(Q, m + 1) < 2) return Rational(1);
    return Rational(4) / ratPow(Q, m + 1);
}

Rational ln2Accel2Term(long m, const Rational& q0) {
    Rational qm = ratPow(q0, m);
    Rational num = pochMinusAt(m, q0) * (Rational(1) - ratPow(q0, 3 * m));
    Rational den = (Rational(1) - qm) * (Rational(1) - qm) * qbinomAt(2 * m, m, q0) *
                   pochEvenAt(m, q0);
    Rational t = num / den;
    return (m % 2 == 0) ? Rational(-t) : t;
}

Rational ln2Accel2TermBound(long m, const Rational& Q) {
    Rational Qm = ratPow(Q, m);
    Rational pp = prodQPowPlus1(m, Q);
    return pp * pp * pp * (ratPow(Q, 3 * m) + 1) /
           ((Qm - 1) * (Qm - 1) * prodQPowMinus1(2 * m, Q) * prodQ2PowMinus1(m, Q));
}

Rational ln2Accel2RatioSup(long m, const Rational& Q) {
    if (ratPow(Q, 2 * m + 1) < 2) return Rational(1);
    return Rational(64) / ratPow(Q, 3 * m + 1);
}

// ---- normalizers ------------------------------------------------------------

FactoredQProduct halfRangeProduct(long n, bool floorHalving) {
    long lo = floorHalving ? std::max(1L, n / 2) : std::max(1L, (n + 1) / 2);
    FactoredQProduct p;
    for (long s = lo; s <= n; ++s) p *= FactoredQProduct::oneMinusQPow(s);
    return p;
}

FactoredQProduct harmonicNormalizer(long n, bool floorHalving) {
    return qPochhammer(n + 1) * halfRangeProduct(n, floorHalving);
}

FactoredQProduct ln2Normalizer(long n, bool floorHalving) {
    // prod (1+q^t) = (q^2)_n / (q)_n
    return qPochhammerEven(n) * qPochhammer(n).inverse() * halfRangeProduct(n, floorHalving);
}

// ---- assembly ----------------------------------------------------------------

SchemeDef buildHarmonic() {
    SchemeDef s;
    s.id = SchemeId::harmonic;
    s.name = "harmonic";
    s.wzF = harmonicF;
    s.shiftRatio = harmonicShiftRatio;
    s.potentialTermN = harmonicPotentialTermN;
    s.potentialTermK = harmonicPotentialTermK;
    s.mollifier = harmonicMollifier;
    s.lCoeffs = harmonicLCoeffs;
    // the harmonic certificates verify as printed, so both forms coincide
    s.printed = {"printed", harmonicP1, harmonicP2, harmonicAExtra};
    s.resolved = {"resolved", harmonicP1, harmonicP2, harmonicAExtra};
    s.normalizer = harmonicNormalizer;
    s.targetTerm = [](long m, const Rational& q0) { return definingTerm(m, q0, false); };
    s.accelTerm1 = harmonicAccel1Term;
    s.accelTerm2 = harmonicAccel2Term;
    s.validBase = [](const Rational& q0) { return ratAbs(q0) > 1; };
    s.targetBounds = {definingTermBound, definingRatioSup};
    s.accel1Bounds = {harmonicAccel1TermBound, harmonicAccel1RatioSup};
    s.accel2Bounds = {harmonicAccel2TermBound, harmonicAccel2RatioSup};
    return s;
}

SchemeDef buildLn2() {
    SchemeDef s;
    s.id = SchemeId::ln2;
    s.name = "ln2";
    s.wzF = ln2F;
    s.shiftRatio = ln2ShiftRatio;
    s.potentialTermN = ln2PotentialTermN;
    s.potentialTermK = ln2PotentialTermK;
    s.mollifier = ln2Mollifier;
    s.lCoeffs = ln2LCoeffs;
    s.printed = {"printed", ln2P1Printed, ln2P2Printed, ln2AExtraPrinted};
    s.resolved = {"resolved", ln2P1Resolved, ln2P2Resolved, ln2AExtraResolved};
    s.normalizer = ln2Normalizer;
    s.targetTerm = [](long m, const Rational& q0) { return definingTerm(m, q0, true); };
    s.accelTerm1 = ln2Accel1Term;
    s.accelTerm2 = ln2Accel2Term;
    s.validBase = [](const Rational& q0) { return q0 != 0 && ratAbs(q0) != 1; };
    s.targetBounds = {definingTermBound, definingRatioSup};
    s.accel1Bounds = {ln2Accel1TermBound, ln2Accel1RatioSup};
    s.accel2Bounds = {ln2Accel2TermBound, ln2Accel2RatioSup};
    return s;
}

// Establishes the potential convention delta_k c = F, delta_n c = G on a
// small grid. Runs once per scheme instance.
void checkPotentialConvention(const SchemeDef& s) {
    for (long n = 0; n <= 2; ++n) {
        for (long k = 0; k <= 2; ++k) {
            FactoredRat dk = potentialFR(s, n, k + 1) - potentialFR(s, n, k);
            if (!(dk == s.wzF(n, k)))
                throw std::logic_error(s.name + ": potential convention delta_k c = F fails");
            FactoredRat dn = potentialFR(s, n + 1, k) - potentialFR(s, n, k);
            FactoredRat g = s.wzF(n, k) * s.shiftRatio(n);
            if (!(dn == g))
                throw std::logic_error(s.name + ": potential convention delta_n c = G fails");
        }
    }
}

}  // namespace

std::string_view schemeName(SchemeId id) {
    return id == SchemeId::harmonic ? "harmonic" : "ln2";
}

std::optional<SchemeId> schemeFromName(std::string_view name) {
    if (name == "harmonic") return SchemeId::harmonic;
    if (name == "ln2") return SchemeId::ln2;
    return std::nullopt;
}

const SchemeDef& scheme(SchemeId id) {
    static const SchemeDef harmonic = [] {
        SchemeDef s = buildHarmonic();
        checkPotentialConvention(s);
        return s;
    }();
    static const SchemeDef ln2 = [] {
        SchemeDef s = buildLn2();
        checkPotentialConvention(s);
        return s;
    }();
    return id == SchemeId::harmonic ? harmonic : ln2;
}

QRat formF(const SchemeDef& s, long n, long k) { return s.wzF(n, k).toQRat(); }

QRat formG(const SchemeDef& s, long n, long k) {
    return (s.wzF(n, k) * s.shiftRatio(n)).toQRat();
}

bool checkClosed(const SchemeDef& s, long n, long k) {
    FactoredRat dF = s.wzF(n + 1, k) - s.wzF(n, k);
    FactoredRat dG = s.wzF(n, k + 1) * s.shiftRatio(n) - s.wzF(n, k) * s.shiftRatio(n);
    return dF == dG;
}

FactoredRat potentialFR(const SchemeDef& s, long n, long k) {
    FactoredRat c;
    for (long m = 1; m <= n; ++m) c += s.potentialTermN(m);
    for (long m = 1; m <= k; ++m) c += s.potentialTermK(n, m);
    return c;
}

QRat potentialC(const SchemeDef& s, long n, long k) { return potentialFR(s, n, k).toQRat(); }

bool checkPotential(const SchemeDef& s, long n, long k) {
    FactoredRat c = potentialFR(s, n, k);
    FactoredRat dk = potentialFR(s, n, k + 1) - c;
    if (!(dk == s.wzF(n, k))) return false;
    FactoredRat dn = potentialFR(s, n + 1, k) - c;
    return dn == s.wzF(n, k) * s.shiftRatio(n);
}

QPoly mollifierB(const SchemeDef& s, long n, long k) { return s.mollifier(n, k); }

std::array<QPoly, 3> lCoeffs(const SchemeDef& s, long n) { return s.lCoeffs(n); }

QRat applyL(const SchemeDef& s, const std::vector<QRat>& f, long n) {
    if (n < 0 || f.size() < static_cast<size_t>(n) + 3)
        throw std::out_of_range("applyL: sequence must cover n .. n+2");
    auto [y0, y1, y2] = s.lCoeffs(n);
    return QRat(y2) * f[static_cast<size_t>(n + 2)] + QRat(y1) * f[static_cast<size_t>(n + 1)] +
           QRat(y0) * f[static_cast<size_t>(n)];
}

}  // namespace qapery

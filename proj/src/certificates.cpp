#include "qapery/certificates.hpp"

#include <stdexcept>

namespace qapery {
namespace {

// L(g)(n, k) = y2(n) g(n+2,k) + y1(n) g(n+1,k) + y0(n) g(n,k) for g = b or b*c.
// The potential rows are passed in so grid drivers can reuse them.
FactoredRat applyLMollifier(const SchemeDef& s, const std::array<QPoly, 3>& y, long n, long k) {
    QPoly p = y[2] * s.mollifier(n + 2, k) + y[1] * s.mollifier(n + 1, k) +
              y[0] * s.mollifier(n, k);
    return FactoredRat(std::move(p));
}

FactoredRat applyLMollifierPotential(const SchemeDef& s, const std::array<QPoly, 3>& y,
                                     long n, long k, const FactoredRat& c0,
                                     const FactoredRat& c1, const FactoredRat& c2) {
    FactoredRat acc = c2.timesPoly(y[2] * s.mollifier(n + 2, k));
    acc += c1.timesPoly(y[1] * s.mollifier(n + 1, k));
    acc += c0.timesPoly(y[0] * s.mollifier(n, k));
    return acc;
}

FactoredRat certBFR(const SchemeDef& s, const CertificateForms& forms, long n, long k) {
    if (k < 0 || k > n + 1) return FactoredRat();
    return forms.p1(n, k).timesPoly(s.mollifier(n + 1, k));
}

FactoredRat certAFR(const SchemeDef& s, const CertificateForms& forms, long n, long k,
                    const FactoredRat& cnk) {
    if (k < 0 || k > n + 1) return FactoredRat();
    return cnk * certBFR(s, forms, n, k) + forms.aExtra(n, k);
}

}  // namespace

QRat certP1(const SchemeDef& s, long n, long k) { return s.resolved.p1(n, k).toQRat(); }
QRat certP2(const SchemeDef& s, long n, long k) { return s.resolved.p2(n, k).toQRat(); }
QRat certP1Printed(const SchemeDef& s, long n, long k) { return s.printed.p1(n, k).toQRat(); }
QRat certP2Printed(const SchemeDef& s, long n, long k) { return s.printed.p2(n, k).toQRat(); }

QRat certB(const SchemeDef& s, long n, long k) {
    return certBFR(s, s.resolved, n, k).toQRat();
}

QRat certA(const SchemeDef& s, long n, long k) {
    if (k < 0 || k > n + 1) return QRat();
    return certAFR(s, s.resolved, n, k, potentialFR(s, n, k)).toQRat();
}

QRat recoverCertificate(const SchemeDef& s, CertKind which, long n, long k) {
    if (n < 0) throw std::domain_error("recoverCertificate: n must be >= 0");
    auto y = s.lCoeffs(n);
    FactoredRat acc;
    for (long j = 0; j <= k; ++j) {
        if (which == CertKind::B) {
            acc += applyLMollifier(s, y, n, j);
        } else {
            acc += applyLMollifierPotential(s, y, n, j, potentialFR(s, n, j),
                                            potentialFR(s, n + 1, j), potentialFR(s, n + 2, j));
        }
    }
    return acc.toQRat();
}

CertificateReport verifyTelescope(const SchemeDef& s, long n, long kMax) {
    if (n < 0) throw std::domain_error("verifyTelescope: n must be >= 0");
    if (kMax < n + 2) throw std::domain_error("verifyTelescope: kMax must be >= n+2");

    CertificateReport rep;
    rep.scheme = s.id;
    rep.n = n;
    rep.kMin = -1;
    rep.kMax = kMax;

    const auto y = s.lCoeffs(n);

    // potential rows c(n,.), c(n+1,.), c(n+2,.) built incrementally in k
    FactoredRat c0 = potentialFR(s, n, 0);
    FactoredRat c1 = potentialFR(s, n + 1, 0);
    FactoredRat c2 = potentialFR(s, n + 2, 0);

    FactoredRat recB;            // recovered B(n, k-1), starts at B(n,-1) = 0
    FactoredRat recA;
    FactoredRat prevPrintedB;    // printed B(n,-1) = 0 (mollifier support)
    FactoredRat prevPrintedA;
    bool telescopeOk = true;
    bool resolvedOk = true;

    for (long k = 0; k <= kMax; ++k) {
        if (k > 0) {
            c0 += s.potentialTermK(n, k);
            c1 += s.potentialTermK(n + 1, k);
            c2 += s.potentialTermK(n + 2, k);
        }

        FactoredRat lb = applyLMollifier(s, y, n, k);
        FactoredRat lbc = applyLMollifierPotential(s, y, n, k, c0, c1, c2);

        FactoredRat newRecB = recB + lb;
        FactoredRat newRecA = recA + lbc;
        // prefix-sum oracle guard: the step difference must reproduce L(g)(k)
        if (!((newRecB - recB) == lb) || !((newRecA - recA) == lbc)) telescopeOk = false;

        FactoredRat printedB = certBFR(s, s.printed, n, k);
        FactoredRat printedA = certAFR(s, s.printed, n, k, c0);
        FactoredRat resolvedB = certBFR(s, s.resolved, n, k);
        FactoredRat resolvedA = certAFR(s, s.resolved, n, k, c0);

        bool bIdentity = (printedB - prevPrintedB) == lb;
        bool aIdentity = (printedA - prevPrintedA) == lbc;
        rep.bIdentityRows.emplace_back(k, bIdentity);
        rep.aIdentityRows.emplace_back(k, aIdentity);
        if (!bIdentity && !rep.firstFailB) rep.firstFailB = k;
        if (!aIdentity && !rep.firstFailA) rep.firstFailA = k;

        if (!(printedB == newRecB)) {
            QRat pr = printedB.toQRat();
            QRat rc = newRecB.toQRat();
            rep.bDiscrepancies.push_back({k, pr, rc, pr - rc});
        }
        if (!(printedA == newRecA)) {
            QRat pr = printedA.toQRat();
            QRat rc = newRecA.toQRat();
            rep.aDiscrepancies.push_back({k, pr, rc, pr - rc});
        }
        if (!(resolvedB == newRecB) || !(resolvedA == newRecA)) resolvedOk = false;

        recB = std::move(newRecB);
        recA = std::move(newRecA);
        prevPrintedB = std::move(printedB);
        prevPrintedA = std::move(printedA);
    }

    // summed consequences: the full prefix sums are sum_k L(b) and sum_k L(bc)
    rep.summedBZero = recB.isZero();
    rep.summedAZero = recA.isZero();
    rep.recoveredTelescopes = telescopeOk;
    rep.resolvedMatchesRecovered = resolvedOk;
    return rep;
}

}  // namespace qapery

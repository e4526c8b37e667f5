#pragma once

#include <optional>
#include <vector>

#include "qapery/scheme.hpp"

namespace qapery {

enum class CertKind { B, A };

/// One printed-vs-recovered mismatch at a grid point.
struct CertificateDiscrepancy {
    long k = 0;
    QRat printed;
    QRat recovered;
    QRat difference;  // printed - recovered
};

/// Verification record for the telescoping identities at a fixed n.
///
/// "Identity" rows check the printed certificate pointwise:
/// L(g)(k) = Cert(k) - Cert(k-1). Discrepancy entries compare printed and
/// recovered certificate values; a failing row always carries the recovered
/// value, so a typo in the source display never dead-ends the verification.
struct CertificateReport {
    SchemeId scheme{};
    long n = 0;
    long kMin = -1;
    long kMax = 0;

    std::vector<std::pair<long, bool>> bIdentityRows;  // (k, printed identity holds)
    std::vector<std::pair<long, bool>> aIdentityRows;
    std::optional<long> firstFailB, firstFailA;
    std::vector<CertificateDiscrepancy> bDiscrepancies, aDiscrepancies;

    bool summedBZero = false;           // sum_k L(b(n,k)) == 0
    bool summedAZero = false;           // sum_k L(b(n,k) c(n,k)) == 0
    bool recoveredTelescopes = false;   // prefix-sum oracle self-check
    bool resolvedMatchesRecovered = false;

    bool printedAllMatch() const { return bDiscrepancies.empty() && aDiscrepancies.empty(); }
    /// The mathematical content: certificates exist and telescope, and the
    /// summed consequences hold. Printed-string mismatches only fail this
    /// under the strict flag.
    bool pass(bool strictPrinted) const {
        bool math = summedBZero && summedAZero && recoveredTelescopes && resolvedMatchesRecovered;
        return strictPrinted ? (math && printedAllMatch()) : math;
    }
};

/// Resolved certificate ingredients (the forms that actually telescope).
/// Set variant to the printed forms to evaluate the literal display instead.
QRat certP1(const SchemeDef& s, long n, long k);
QRat certP2(const SchemeDef& s, long n, long k);
QRat certB(const SchemeDef& s, long n, long k);  // P1(n,k) b(n+1,k); 0 outside support
QRat certA(const SchemeDef& s, long n, long k);  // c B + prefactor P2; 0 at k = -1

QRat certP1Printed(const SchemeDef& s, long n, long k);
QRat certP2Printed(const SchemeDef& s, long n, long k);

/// Independent oracle: prefix sum sum_{j=0}^{k} L(g)(j) with g = b (for B)
/// or g = b*c (for A). The unique certificate vanishing at k = -1.
QRat recoverCertificate(const SchemeDef& s, CertKind which, long n, long k);

/// Checks both telescoping identities for k = 0..kMax (kMax >= n+2), the
/// summed consequences, and printed-vs-recovered agreement.
CertificateReport verifyTelescope(const SchemeDef& s, long n, long kMax);

}  // namespace qapery

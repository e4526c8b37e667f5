#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qapery/scheme.hpp"

namespace qapery {

/// Per-n row of exact data: the sequence pair, the integrality-normalized
/// pair, and degree bookkeeping.
struct ConvergentRecord {
    SchemeId scheme{};
    long n = 0;
    QRat a;                    // a_n, canonical
    QPoly b;                   // b_n
    QPoly normalizedA;         // u_n (harmonic) or v_n (ln2), set by normalizeIntegral
    QPoly normalizedB;         // z_n or w_n
    bool integralityChecked = false;
    bool integralityOk = false;
    std::string integralityNote;  // diagnostics when the check fails
    std::optional<long> degB;  // degree of b_n (empty only for a zero polynomial)
    std::optional<long> degZ;  // degree of z_n / w_n
};

/// Direct-summation table of a(n), b(n), kept in factored form internally so
/// recurrence checks and normalization stay division-free.
class SequenceTable {
public:
    SequenceTable(const SchemeDef& s, long nMax);

    long nMax() const { return static_cast<long>(b_.size()) - 1; }
    const SchemeDef& def() const { return *def_; }

    const QPoly& b(long n) const { return b_.at(static_cast<size_t>(n)); }
    const FactoredRat& aRaw(long n) const { return aRaw_.at(static_cast<size_t>(n)); }
    /// Canonical a_n (reduced via cyclotomic peeling).
    const QRat& a(long n) const;

    /// Exact check y2(n) s(n+2) + y1(n) s(n+1) + y0(n) s(n) == 0;
    /// requires n + 2 <= nMax().
    bool lAnnihilatesA(long n) const;
    bool lAnnihilatesB(long n) const;

    ConvergentRecord record(long n) const;  // a, b, degrees; not yet normalized

private:
    const SchemeDef* def_;
    std::vector<QPoly> b_;
    std::vector<FactoredRat> aRaw_;
    mutable std::vector<QRat> aCanonical_;
    mutable std::vector<bool> aReady_;
};

/// Exact (a(n), b(n)) by direct summation over k = 0..n.
std::pair<QRat, QPoly> abDirect(const SchemeDef& s, long n);

/// Table n = 0..nMax from the two-term recurrence, seeded from direct
/// summation at n = 0, 1. nMax >= 2.
std::vector<std::pair<QRat, QPoly>> abRecurrence(const SchemeDef& s, long nMax);

/// Multiplies (a_n, b_n) by the Lemma normalizer and records whether both
/// results are integer-coefficient polynomials. Never silently fails: a
/// non-polynomial or non-integral outcome is stored on the record.
ConvergentRecord normalizeIntegral(const SchemeDef& s, ConvergentRecord rec,
                                   bool floorHalving = false);

struct DegreeRow {
    long n = 0;
    std::optional<long> degB;
    std::optional<long> degZ;
};

/// Exact degree table for b_n and the normalized z_n / w_n, n = 0..nMax.
std::vector<DegreeRow> degreeStats(const SchemeDef& s, long nMax);

}  // namespace qapery

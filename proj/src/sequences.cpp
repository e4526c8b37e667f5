#include "qapery/sequences.hpp"

#include <stdexcept>

namespace qapery {

SequenceTable::SequenceTable(const SchemeDef& s, long nMax) : def_(&s) {
    if (nMax < 0) throw std::domain_error("SequenceTable: nMax must be >= 0");
    b_.reserve(static_cast<size_t>(nMax) + 1);
    aRaw_.reserve(static_cast<size_t>(nMax) + 1);

    FactoredRat s1;  // sum_{m<=n} of the k-independent potential terms
    for (long n = 0; n <= nMax; ++n) {
        if (n >= 1) s1 += s.potentialTermN(n);

        // mollifier row and its suffix sums T_m = sum_{k=m..n} b(n,k)
        std::vector<QPoly> row(static_cast<size_t>(n) + 1);
        for (long k = 0; k <= n; ++k) row[static_cast<size_t>(k)] = s.mollifier(n, k);
        std::vector<QPoly> suffix(row.size() + 1);
        for (long k = n; k >= 0; --k)
            suffix[static_cast<size_t>(k)] = suffix[static_cast<size_t>(k) + 1] + row[static_cast<size_t>(k)];

        b_.push_back(suffix[0]);

        // a(n) = S1(n) b(n) + sum_{m=1..n} termK(n,m) * T_m
        // (the second potential sum re-grouped by its terms)
        FactoredRat a = s1.timesPoly(suffix[0]);
        for (long m = 1; m <= n; ++m)
            a += s.potentialTermK(n, m).timesPoly(suffix[static_cast<size_t>(m)]);
        aRaw_.push_back(std::move(a));
    }
    aCanonical_.assign(b_.size(), QRat());
    aReady_.assign(b_.size(), false);
}

const QRat& SequenceTable::a(long n) const {
    auto i = static_cast<size_t>(n);
    if (!aReady_.at(i)) {
        aCanonical_[i] = aRaw_[i].toQRat();
        aReady_[i] = true;
    }
    return aCanonical_[i];
}

bool SequenceTable::lAnnihilatesA(long n) const {
    auto y = def_->lCoeffs(n);
    FactoredRat acc = aRaw(n + 2).timesPoly(y[2]);
    acc += aRaw(n + 1).timesPoly(y[1]);
    acc += aRaw(n).timesPoly(y[0]);
    return acc.isZero();
}

bool SequenceTable::lAnnihilatesB(long n) const {
    auto y = def_->lCoeffs(n);
    QPoly acc = y[2] * b(n + 2) + y[1] * b(n + 1) + y[0] * b(n);
    return acc.isZero();
}

ConvergentRecord SequenceTable::record(long n) const {
    ConvergentRecord rec;
    rec.scheme = def_->id;
    rec.n = n;
    rec.a = a(n);
    rec.b = b(n);
    rec.degB = rec.b.degree();
    return rec;
}

std::pair<QRat, QPoly> abDirect(const SchemeDef& s, long n) {
    SequenceTable t(s, n);
    return {t.a(n), t.b(n)};
}

std::vector<std::pair<QRat, QPoly>> abRecurrence(const SchemeDef& s, long nMax) {
    if (nMax < 2) throw std::domain_error("abRecurrence: nMax must be >= 2");
    SequenceTable seeds(s, 1);
    std::vector<QRat> a{seeds.a(0), seeds.a(1)};
    std::vector<QPoly> b{seeds.b(0), seeds.b(1)};
    for (long n = 0; n + 2 <= nMax; ++n) {
        auto y = s.lCoeffs(n);
        if (y[2].isZero()) throw std::logic_error("abRecurrence: y2 vanished");
        QRat nextA = -(QRat(y[1]) * a[static_cast<size_t>(n) + 1] +
                       QRat(y[0]) * a[static_cast<size_t>(n)]) /
                     QRat(y[2]);
        QPoly bNum = -(y[1] * b[static_cast<size_t>(n) + 1] + y[0] * b[static_cast<size_t>(n)]);
        auto nextB = QPoly::divideExact(bNum, y[2]);
        if (!nextB)
            throw std::logic_error("abRecurrence: b recurrence left the polynomial ring");
        a.push_back(std::move(nextA));
        b.push_back(std::move(*nextB));
    }
    std::vector<std::pair<QRat, QPoly>> out;
    out.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i) out.emplace_back(a[i], b[i]);
    return out;
}

ConvergentRecord normalizeIntegral(const SchemeDef& s, ConvergentRecord rec, bool floorHalving) {
    QPoly dn = s.normalizer(rec.n, floorHalving).expandPoly();

    rec.normalizedB = rec.b * dn;
    rec.degZ = rec.normalizedB.degree();

    rec.integralityChecked = true;
    rec.integralityOk = true;
    rec.integralityNote.clear();

    // u_n = a_n * D_n: multiply the numerator, then the denominator must
    // divide out exactly.
    QPoly uNum = rec.a.num() * dn;
    auto u = QPoly::divideExact(uNum, rec.a.den());
    if (!u) {
        rec.integralityOk = false;
        rec.integralityNote = "a_n * D_n is not a polynomial (denominator " +
                              rec.a.den().str() + " does not divide)";
        return rec;
    }
    rec.normalizedA = std::move(*u);

    if (!rec.normalizedA.isIntegral()) {
        rec.integralityOk = false;
        rec.integralityNote = "u_n has a non-integer coefficient";
    }
    if (!rec.normalizedB.isIntegral()) {
        rec.integralityOk = false;
        rec.integralityNote += std::string(rec.integralityNote.empty() ? "" : "; ") +
                               "z_n has a non-integer coefficient";
    }
    return rec;
}

std::vector<DegreeRow> degreeStats(const SchemeDef& s, long nMax) {
    if (nMax < 4) throw std::domain_error("degreeStats: nMax must be >= 4");
    SequenceTable t(s, nMax);
    std::vector<DegreeRow> rows;
    rows.reserve(static_cast<size_t>(nMax) + 1);
    for (long n = 0; n <= nMax; ++n) {
        DegreeRow r;
        r.n = n;
        r.degB = t.b(n).degree();
        QPoly dn = s.normalizer(n, false).expandPoly();
        r.degZ = (t.b(n) * dn).degree();
        rows.push_back(r);
    }
    return rows;
}

}  // namespace qapery

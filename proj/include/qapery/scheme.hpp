#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qapery/factored.hpp"
#include "qapery/qobjects.hpp"
#include "qapery/qrat.hpp"

namespace qapery {

enum class SchemeId { harmonic, ln2 };

std::string_view schemeName(SchemeId id);
std::optional<SchemeId> schemeFromName(std::string_view name);

/// One certificate hypothesis: the pair (P1, P2) plus the full second summand
/// of the A-certificate (which carries the prefactor that multiplies P2).
/// Conventions: alpha = q^{n+1}, beta = q^{k+1}; k = -1 is allowed and means
/// beta = 1.
struct CertificateForms {
    std::string label;  // "printed" or "resolved"
    std::function<FactoredRat(long n, long k)> p1;
    std::function<FactoredRat(long n, long k)> p2;
    /// A(n,k) - c(n,k) * B(n,k); evaluates to zero outside 0 <= k <= n+1.
    std::function<FactoredRat(long n, long k)> aExtra;
};

/// A proof scheme as data: the engines below run identically on either
/// instance. All evaluators are pure functions of concrete integers
/// returning exact univariate objects in q.
struct SchemeDef {
    SchemeId id{};
    std::string name;

    /// F(n,k) of the q-WZ 1-form.
    std::function<FactoredRat(long n, long k)> wzF;
    /// G/F, a function of n only (the delta-n multiplier of the 1-form).
    std::function<FactoredRat(long n)> shiftRatio;

    /// m-th term of the k-independent half of the potential (m >= 1).
    std::function<FactoredRat(long m)> potentialTermN;
    /// m-th term of the k-dependent half (m >= 1), at row n.
    std::function<FactoredRat(long n, long m)> potentialTermK;

    /// Mollifier b(n,k); zero outside 0 <= k <= n.
    std::function<QPoly(long n, long k)> mollifier;

    /// Recurrence coefficients {y0, y1, y2} of L = y2 N^2 + y1 N + y0.
    std::function<std::array<QPoly, 3>(long n)> lCoeffs;

    CertificateForms printed;
    CertificateForms resolved;

    /// Lemma normalizer D_n (multiplying a_n and b_n makes them integer
    /// polynomials). floorHalving switches the product lower bound from
    /// ceil(n/2) to max(1, floor(n/2)) for experiments.
    std::function<FactoredQProduct(long n, bool floorHalving)> normalizer;

    /// m-th term of the defining target series at exact base q0 (m >= 1).
    std::function<Rational(long m, const Rational& q0)> targetTerm;
    /// m-th term of accelerated series 1 and 2 (m >= 1).
    std::function<Rational(long m, const Rational& q0)> accelTerm1;
    std::function<Rational(long m, const Rational& q0)> accelTerm2;

    /// Base-point validity for series evaluation.
    std::function<bool(const Rational& q0)> validBase;

    // Exact-rational tail machinery (see numerics): termBound(m, Q) bounds
    // |t_m| for Q = |q0|; ratioSup(m, Q) bounds termBound(m')/termBound(m'-1)
    // for every m' > m (>= 1 result means "not yet summable", take more
    // terms).
    struct SeriesBounds {
        std::function<Rational(long m, const Rational& absQ)> termBound;
        std::function<Rational(long m, const Rational& absQ)> ratioSup;
    };
    SeriesBounds targetBounds, accel1Bounds, accel2Bounds;
};

/// The two scheme instances. First use runs a one-time machine check of the
/// potential convention (delta_k c = F, delta_n c = G) on a small grid and
/// throws std::logic_error if the build is inconsistent.
const SchemeDef& scheme(SchemeId id);

// ---- engine operations (run identically on either scheme) -----------------

QRat formF(const SchemeDef& s, long n, long k);
QRat formG(const SchemeDef& s, long n, long k);

/// Delta_n F = Delta_k G at (n,k), exactly.
bool checkClosed(const SchemeDef& s, long n, long k);

/// The potential c(n,k) as the double sum; empty sums are zero.
QRat potentialC(const SchemeDef& s, long n, long k);
FactoredRat potentialFR(const SchemeDef& s, long n, long k);

/// Delta_k c = F and Delta_n c = G at (n,k), exactly.
bool checkPotential(const SchemeDef& s, long n, long k);

QPoly mollifierB(const SchemeDef& s, long n, long k);

std::array<QPoly, 3> lCoeffs(const SchemeDef& s, long n);

/// y2(n) f(n+2) + y1(n) f(n+1) + y0(n) f(n); f must cover n .. n+2.
QRat applyL(const SchemeDef& s, const std::vector<QRat>& f, long n);

}  // namespace qapery

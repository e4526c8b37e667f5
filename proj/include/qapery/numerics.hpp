#pragma once

#include <mpfr.h>

#include <optional>
#include <stdexcept>
#include <string>

#include "qapery/scheme.hpp"
#include "qapery/sequences.hpp"

namespace qapery {

/// Requested precision could not be certified within the term budget.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Closed interval [lo, hi] over MPFR floats with directed rounding: lo is
/// always rounded down, hi up, so every operation encloses the exact result.
/// Deterministic for a fixed precision; no ambient rounding state.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(const Interval& o);
    Interval& operator=(Interval&& o) noexcept;
    ~Interval();

    static Interval fromRational(const Rational& r, mpfr_prec_t prec);

    mpfr_prec_t precision() const { return prec_; }

    Interval add(const Interval& o) const;
    Interval sub(const Interval& o) const;
    Interval mul(const Interval& o) const;
    Interval div(const Interval& o) const;  // throws if o contains zero
    Interval neg() const;
    Interval abs() const;
    Interval log() const;                   // throws unless strictly positive
    /// Pads both endpoints outward by an exact nonnegative radius.
    Interval widenedBy(const Rational& radius) const;

    bool containsZero() const;
    bool strictlyPositive() const;
    /// Certain comparison: hi < o.lo.
    bool strictlyLessThan(const Interval& o) const;
    /// Does [lo,hi] contain the other interval's midpoint approximation?
    bool containsMidpointOf(const Interval& o) const;
    bool contains(const Rational& x) const;
    /// Certain bound: hi <= x.
    bool upperAtMost(const Rational& x) const;

    /// Midpoint as a decimal string with the given significant digits
    /// (deterministic formatting).
    std::string valueString(long digits) const;
    /// Upper bound for the radius around the reported midpoint, short form.
    std::string radiusString() const;
    /// radius <= 2^{-bits}?
    bool radiusBelow(long bits) const;

    double midDouble() const;

private:
    mpfr_prec_t prec_;
    mpfr_t lo_, hi_;
    friend Interval intervalFromMid(const Interval&);
};

struct PrecisionContext {
    mpfr_prec_t precisionBits = 256;
    bool rigorousTails = true;   // informational; tails are always rigorous here
    Rational q0 = Rational(2);
};

/// Per-n measure bookkeeping derived from one convergent.
struct MeasureEstimate {
    long n = 0;
    Interval err;                       // |target - a_n/b_n|
    std::optional<Interval> epsN;       // -log err / (n^2 log |q0|)
    std::optional<Rational> zetaN;      // deg z_n / n^2, exact
    std::optional<Interval> deltaN;     // eps/zeta - 1
    std::optional<Interval> muN;        // 1 + 1/delta
    MeasureEstimate() : err(2) {}
};

/// Defining series (0.1)/(0.2) at ctx.q0 with a rigorous tail bound below
/// 2^{-(precision-4)}. Throws std::domain_error for invalid bases and
/// PrecisionError when the term budget runs out.
Interval evalTarget(const SchemeDef& s, const PrecisionContext& ctx);

/// Accelerated series (variant 1 or 2). terms == 0 picks the term count
/// adaptively; otherwise exactly `terms` terms plus a certified tail radius.
Interval evalAccelerated(const SchemeDef& s, int variant, const PrecisionContext& ctx,
                         long terms = 0);

/// Error and exponent data for one convergent; the target interval is taken
/// as an argument so tables reuse one evaluation.
MeasureEstimate convergentError(const SchemeDef& s, const PrecisionContext& ctx,
                                const ConvergentRecord& rec, const Interval& target);
MeasureEstimate convergentError(const SchemeDef& s, const PrecisionContext& ctx,
                                const ConvergentRecord& rec);

/// True iff the defining series and both accelerated variants agree pairwise
/// to `digits` decimal digits, at certified radii.
bool verifyAccelerationConsistency(const SchemeDef& s, const PrecisionContext& ctx, long digits);

}  // namespace qapery

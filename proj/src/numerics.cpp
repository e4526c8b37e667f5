#include "qapery/numerics.hpp"

#include <cstdio>
#include <vector>

namespace qapery {

// ---- Interval ---------------------------------------------------------------

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
    if (this != &o) {
        mpfr_set_prec(lo_, o.prec_);
        mpfr_set_prec(hi_, o.prec_);
        prec_ = o.prec_;
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
    if (this != &o) {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        std::swap(prec_, o.prec_);
    }
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::fromRational(const Rational& r, mpfr_prec_t prec) {
    Interval out(prec);
    mpfr_set_q(out.lo_, r.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(out.hi_, r.get_mpq_t(), MPFR_RNDU);
    return out;
}

Interval Interval::add(const Interval& o) const {
    Interval out(prec_);
    mpfr_add(out.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(out.hi_, hi_, o.hi_, MPFR_RNDU);
    return out;
}

Interval Interval::sub(const Interval& o) const {
    Interval out(prec_);
    mpfr_sub(out.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(out.hi_, hi_, o.lo_, MPFR_RNDU);
    return out;
}

Interval Interval::mul(const Interval& o) const {
    Interval out(prec_);
    mpfr_t c, best, worst;
    mpfr_init2(c, prec_);
    mpfr_init2(best, prec_);
    mpfr_init2(worst, prec_);
    bool first = true;
    const mpfr_srcptr mine[2] = {lo_, hi_};
    const mpfr_srcptr theirs[2] = {o.lo_, o.hi_};
    for (auto a : mine) {
        for (auto b : theirs) {
            mpfr_mul(c, a, b, MPFR_RNDD);
            if (first || mpfr_cmp(c, worst) < 0) mpfr_set(worst, c, MPFR_RNDD);
            mpfr_mul(c, a, b, MPFR_RNDU);
            if (first || mpfr_cmp(c, best) > 0) mpfr_set(best, c, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_set(out.lo_, worst, MPFR_RNDD);
    mpfr_set(out.hi_, best, MPFR_RNDU);
    mpfr_clear(c);
    mpfr_clear(best);
    mpfr_clear(worst);
    return out;
}

Interval Interval::div(const Interval& o) const {
    if (o.containsZero()) throw std::domain_error("interval division by zero");
    Interval out(prec_);
    mpfr_t c, best, worst;
    mpfr_init2(c, prec_);
    mpfr_init2(best, prec_);
    mpfr_init2(worst, prec_);
    bool first = true;
    const mpfr_srcptr mine[2] = {lo_, hi_};
    const mpfr_srcptr theirs[2] = {o.lo_, o.hi_};
    for (auto a : mine) {
        for (auto b : theirs) {
            mpfr_div(c, a, b, MPFR_RNDD);
            if (first || mpfr_cmp(c, worst) < 0) mpfr_set(worst, c, MPFR_RNDD);
            mpfr_div(c, a, b, MPFR_RNDU);
            if (first || mpfr_cmp(c, best) > 0) mpfr_set(best, c, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_set(out.lo_, worst, MPFR_RNDD);
    mpfr_set(out.hi_, best, MPFR_RNDU);
    mpfr_clear(c);
    mpfr_clear(best);
    mpfr_clear(worst);
    return out;
}

Interval Interval::neg() const {
    Interval out(prec_);
    mpfr_neg(out.lo_, hi_, MPFR_RNDD);
    mpfr_neg(out.hi_, lo_, MPFR_RNDU);
    return out;
}

Interval Interval::abs() const {
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return neg();
    Interval out(prec_);
    mpfr_set_zero(out.lo_, 1);
    mpfr_t na;
    mpfr_init2(na, prec_);
    mpfr_neg(na, lo_, MPFR_RNDU);
    if (mpfr_cmp(na, hi_) > 0)
        mpfr_set(out.hi_, na, MPFR_RNDU);
    else
        mpfr_set(out.hi_, hi_, MPFR_RNDU);
    mpfr_clear(na);
    return out;
}

Interval Interval::log() const {
    if (!strictlyPositive()) throw std::domain_error("interval log of non-positive value");
    Interval out(prec_);
    mpfr_log(out.lo_, lo_, MPFR_RNDD);
    mpfr_log(out.hi_, hi_, MPFR_RNDU);
    return out;
}

Interval Interval::widenedBy(const Rational& radius) const {
    if (radius < 0) throw std::domain_error("widenedBy: negative radius");
    Interval r = fromRational(radius, prec_);
    Interval out(prec_);
    mpfr_sub(out.lo_, lo_, r.hi_, MPFR_RNDD);
    mpfr_add(out.hi_, hi_, r.hi_, MPFR_RNDU);
    return out;
}

bool Interval::containsZero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool Interval::strictlyPositive() const { return mpfr_sgn(lo_) > 0; }

bool Interval::strictlyLessThan(const Interval& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }

bool Interval::containsMidpointOf(const Interval& o) const {
    mpfr_t mid;
    mpfr_init2(mid, o.prec_ + 16);
    mpfr_add(mid, o.lo_, o.hi_, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    bool ok = mpfr_cmp(lo_, mid) <= 0 && mpfr_cmp(mid, hi_) <= 0;
    mpfr_clear(mid);
    return ok;
}

bool Interval::contains(const Rational& x) const {
    return mpfr_cmp_q(lo_, x.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, x.get_mpq_t()) >= 0;
}

bool Interval::upperAtMost(const Rational& x) const {
    return mpfr_cmp_q(hi_, x.get_mpq_t()) <= 0;
}

std::string Interval::valueString(long digits) const {
    mpfr_t mid;
    mpfr_init2(mid, prec_ + 16);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    char fmt[32];
    std::snprintf(fmt, sizeof fmt, "%%.%ldRNe", digits - 1);
    char* s = nullptr;
    mpfr_asprintf(&s, fmt, mid);
    std::string out(s);
    mpfr_free_str(s);
    mpfr_clear(mid);
    return out;
}

std::string Interval::radiusString() const {
    mpfr_t mid, rad, r2;
    mpfr_init2(mid, prec_ + 16);
    mpfr_init2(rad, 32);
    mpfr_init2(r2, 32);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    mpfr_sub(rad, hi_, mid, MPFR_RNDU);
    mpfr_sub(r2, mid, lo_, MPFR_RNDU);
    if (mpfr_cmp(r2, rad) > 0) mpfr_set(rad, r2, MPFR_RNDU);
    char* s = nullptr;
    mpfr_asprintf(&s, "%.2RUe", rad);
    std::string out(s);
    mpfr_free_str(s);
    mpfr_clear(mid);
    mpfr_clear(rad);
    mpfr_clear(r2);
    return out;
}

bool Interval::radiusBelow(long bits) const {
    mpfr_t w, eps;
    mpfr_init2(w, 64);
    mpfr_init2(eps, 64);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    mpfr_set_ui_2exp(eps, 1, -bits, MPFR_RNDD);
    bool ok = mpfr_cmp(w, eps) <= 0;  // width <= 2^-bits implies radius below it
    mpfr_clear(w);
    mpfr_clear(eps);
    return ok;
}

double Interval::midDouble() const {
    mpfr_t mid;
    mpfr_init2(mid, 64);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    double d = mpfr_get_d(mid, MPFR_RNDN);
    mpfr_clear(mid);
    return d;
}

// ---- series summation -------------------------------------------------------

namespace {

Rational pow2Rational(long e) {
    Rational r;
    if (e >= 0) {
        mpz_ui_pow_ui(r.get_num_mpz_t(), 2, static_cast<unsigned long>(e));
    } else {
        mpz_ui_pow_ui(r.get_den_mpz_t(), 2, static_cast<unsigned long>(-e));
    }
    r.canonicalize();
    return r;
}

struct SeriesFns {
    std::function<Rational(long)> term;
    std::function<Rational(long)> termBound;
    std::function<Rational(long)> ratioSup;
};

constexpr long kMaxSeriesTerms = 200000;

// Partial sum with a rigorous tail: tail_N <= termBound(N+1) / (1 - ratioSup(N+1)),
// valid because ratioSup(N+1) dominates every later bound ratio.
Interval sumSeries(const SeriesFns& f, mpfr_prec_t prec, long fixedTerms) {
    const mpfr_prec_t work = prec + 64;
    Interval acc(work);
    const Rational target = pow2Rational(-(static_cast<long>(prec) - 4)) / 2;

    long m = 0;
    while (true) {
        if (fixedTerms > 0 && m >= fixedTerms) break;
        if (m >= kMaxSeriesTerms)
            throw PrecisionError("series did not reach the requested precision within " +
                                 std::to_string(kMaxSeriesTerms) + " terms");
        ++m;
        acc = acc.add(Interval::fromRational(f.term(m), work));
        if (fixedTerms == 0) {
            Rational rho = f.ratioSup(m + 1);
            if (rho < 1) {
                Rational tail = f.termBound(m + 1) / (Rational(1) - rho);
                if (tail <= target) return acc.widenedBy(tail);
            }
        }
    }
    // fixed number of terms: certify the tail after the last term
    Rational rho = f.ratioSup(m + 1);
    if (!(rho < 1))
        throw PrecisionError("tail not certifiable after " + std::to_string(m) + " terms");
    Rational tail = f.termBound(m + 1) / (Rational(1) - rho);
    return acc.widenedBy(tail);
}

SeriesFns bindSeries(const SchemeDef& s, int variant, const Rational& q0) {
    Rational absQ = ratAbs(q0);
    SeriesFns f;
    const SchemeDef::SeriesBounds* b;
    if (variant == 0) {
        f.term = [&s, q0](long m) { return s.targetTerm(m, q0); };
        b = &s.targetBounds;
    } else if (variant == 1) {
        f.term = [&s, q0](long m) { return s.accelTerm1(m, q0); };
        b = &s.accel1Bounds;
    } else {
        f.term = [&s, q0](long m) { return s.accelTerm2(m, q0); };
        b = &s.accel2Bounds;
    }
    f.termBound = [b, absQ](long m) { return b->termBound(m, absQ); };
    f.ratioSup = [b, absQ](long m) { return b->ratioSup(m, absQ); };
    return f;
}

void requireConvergentBase(const SchemeDef& s, const Rational& q0) {
    if (!s.validBase(q0))
        throw std::domain_error(std::string(schemeName(s.id)) + ": base q = " + toString(q0) +
                                " is outside the scheme's validity range");
    if (!(ratAbs(q0) > 1))
        throw std::domain_error("series evaluation requires |q| > 1, got q = " + toString(q0));
}

}  // namespace

Interval evalTarget(const SchemeDef& s, const PrecisionContext& ctx) {
    requireConvergentBase(s, ctx.q0);
    return sumSeries(bindSeries(s, 0, ctx.q0), ctx.precisionBits, 0);
}

Interval evalAccelerated(const SchemeDef& s, int variant, const PrecisionContext& ctx, long terms) {
    if (variant != 1 && variant != 2) throw std::domain_error("accelerated variant must be 1 or 2");
    requireConvergentBase(s, ctx.q0);
    return sumSeries(bindSeries(s, variant, ctx.q0), ctx.precisionBits, terms);
}

MeasureEstimate convergentError(const SchemeDef& s, const PrecisionContext& ctx,
                                const ConvergentRecord& rec, const Interval& target) {
    const mpfr_prec_t prec = ctx.precisionBits;
    Rational bAt = rec.b.eval(ctx.q0);
    if (bAt == 0)
        throw std::domain_error("b_n vanishes at q0 for n = " + std::to_string(rec.n));
    Rational conv = rec.a.eval(ctx.q0) / bAt;

    MeasureEstimate est;
    est.n = rec.n;
    est.err = target.sub(Interval::fromRational(conv, prec)).abs();
    if (rec.n >= 1 && est.err.strictlyPositive()) {
        Interval logErr = est.err.log();
        Interval logQ = Interval::fromRational(ratAbs(ctx.q0), prec).log();
        Interval n2 = Interval::fromRational(Rational(rec.n) * Rational(rec.n), prec);
        est.epsN = logErr.neg().div(logQ.mul(n2));
        if (rec.degZ) {
            Rational zeta(*rec.degZ, rec.n * rec.n);
            zeta.canonicalize();
            est.zetaN = zeta;
            Interval delta = est.epsN->div(Interval::fromRational(zeta, prec))
                                 .sub(Interval::fromRational(Rational(1), prec));
            est.deltaN = delta;
            if (!delta.containsZero()) {
                Interval one = Interval::fromRational(Rational(1), prec);
                est.muN = one.add(one.div(delta));
            }
        }
    }
    return est;
}

MeasureEstimate convergentError(const SchemeDef& s, const PrecisionContext& ctx,
                                const ConvergentRecord& rec) {
    return convergentError(s, ctx, rec, evalTarget(s, ctx));
}

bool verifyAccelerationConsistency(const SchemeDef& s, const PrecisionContext& ctx, long digits) {
    PrecisionContext local = ctx;
    mpfr_prec_t needed = static_cast<mpfr_prec_t>((digits + 4) * 3.33) + 64;
    if (local.precisionBits < needed) local.precisionBits = needed;

    Interval defining = evalTarget(s, local);
    Interval acc1 = evalAccelerated(s, 1, local, 0);
    Interval acc2 = evalAccelerated(s, 2, local, 0);

    Rational tol(1);
    for (long i = 0; i < digits; ++i) tol /= 10;

    // |x - y| as an interval already includes both certified radii, so a
    // certain upper bound below tol is agreement to the requested digits.
    auto agree = [&](const Interval& x, const Interval& y) {
        return x.sub(y).abs().upperAtMost(tol);
    };
    return agree(defining, acc1) && agree(defining, acc2) && agree(acc1, acc2);
}

}  // namespace qapery

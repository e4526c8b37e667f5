#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qapery {

/// Exact rational scalar. GMP's mpq_class is always canonical (reduced,
/// positive denominator), which is what every invariant here leans on.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool isInteger(const Rational& r) { return r.get_den() == 1; }

inline Rational ratPow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational out;
    if (e > 0) {
        mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    } else {
        if (base == 0) throw std::domain_error("ratPow: 0 to a negative power");
        mpz_pow_ui(out.get_num_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(-e));
        mpz_pow_ui(out.get_den_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(-e));
    }
    out.canonicalize();
    return out;
}

/// Parses "p", "-p" or "p/q" (exact decimal strings, as used in the JSON
/// serialization and on the CLI).
inline Rational ratFromString(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational literal: \"" + s + "\"");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator in \"" + s + "\"");
    r.canonicalize();
    return r;
}

inline std::string toString(const Rational& r) { return r.get_str(); }

inline Rational ratAbs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace qapery

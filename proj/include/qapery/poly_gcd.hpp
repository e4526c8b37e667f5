#pragma once

#include "qapery/qpoly.hpp"

namespace qapery {

/// Greatest common divisor of two rational-coefficient polynomials.
///
/// The result is the primitive integer-coefficient representative with
/// positive leading coefficient (gcd is only defined up to a rational unit;
/// this representative is the canonical pick). gcd(0, 0) = 0, gcd(p, 0) is
/// the primitive part of p.
///
/// Implementation: coefficients are cleared to a primitive integer pair,
/// then a small-prime modular gcd with CRT reconstruction is tried; every
/// candidate is verified by exact division into both inputs before being
/// returned, so unlucky primes cost retries, never correctness.
QPoly polyGcd(const QPoly& a, const QPoly& b);

/// Content/primitive-part split: p = content * primitive, where primitive
/// has coprime integer coefficients and positive leading coefficient.
/// Content of the zero polynomial is 0.
Rational polyContent(const QPoly& p);
QPoly polyPrimitivePart(const QPoly& p);

}  // namespace qapery

#pragma once

#include "qapery/factored.hpp"
#include "qapery/qpoly.hpp"

namespace qapery {

/// (q)_n = (1-q)(1-q^2)...(1-q^n), with (q)_0 = 1. Throws on n < 0.
FactoredQProduct qPochhammer(long n);

/// prod_{j=1}^{n} (1 - q^{2j}), the base-q^2 Pochhammer; its ratio to (q)_n
/// is prod (1+q^j) exactly. Throws on n < 0.
FactoredQProduct qPochhammerEven(long n);

/// Gaussian binomial coefficient as a polynomial; 0 when k < 0 or k > n, so
/// mollifier sums need no boundary cases.
QPoly qBinomial(long n, long k);

enum class TriangularVariant {
    kTimesKPlus1Half,   // q^{k(k+1)/2}
    kChoose2,           // q^{k(k-1)/2}
};

/// Pure monomial q^{k(k+1)/2} or q^{k(k-1)/2}. Throws on k < 0.
FactoredQProduct triangularQPower(long k, TriangularVariant variant);

/// Exponent of Phi_d (d >= 2) in a factored product.
long cycloValuation(const FactoredQProduct& p, long d);

/// Checks binom(n+k,k) binom(k,m) = binom(n+m,m) binom(n+k,k-m) as exact
/// polynomials.
bool checkBinomialTransfer(long n, long k, long m);

}  // namespace qapery

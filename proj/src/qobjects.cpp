#include "qapery/qobjects.hpp"

#include <stdexcept>

namespace qapery {

FactoredQProduct qPochhammer(long n) {
    if (n < 0) throw std::domain_error("qPochhammer: n must be >= 0");
    FactoredQProduct p;
    for (long j = 1; j <= n; ++j) p *= FactoredQProduct::oneMinusQPow(j);
    return p;
}

FactoredQProduct qPochhammerEven(long n) {
    if (n < 0) throw std::domain_error("qPochhammerEven: n must be >= 0");
    FactoredQProduct p;
    for (long j = 1; j <= n; ++j) p *= FactoredQProduct::oneMinusQPow(2 * j);
    return p;
}

QPoly qBinomial(long n, long k) {
    if (k < 0 || k > n) return QPoly();
    k = std::min(k, n - k);
    // (q)_n / ((q)_k (q)_{n-k}) = prod_{j=n-k+1}^{n}(1-q^j) / (q)_k;
    // expand the short numerator, then divide out the k binomial factors.
    QPoly num = QPoly::one();
    for (long j = n - k + 1; j <= n; ++j)
        num *= QPoly::one() - QPoly::monomial(Rational(1), j);
    for (long j = 1; j <= k; ++j) {
        auto quot = QPoly::divideExact(num, QPoly::one() - QPoly::monomial(Rational(1), j));
        num = std::move(*quot);  // always exact: Gaussian binomials are polynomials
    }
    return num;
}

FactoredQProduct triangularQPower(long k, TriangularVariant variant) {
    if (k < 0) throw std::domain_error("triangularQPower: k must be >= 0");
    long e = (variant == TriangularVariant::kTimesKPlus1Half) ? k * (k + 1) / 2
                                                              : k * (k - 1) / 2;
    return FactoredQProduct::qPower(e);
}

long cycloValuation(const FactoredQProduct& p, long d) {
    if (d < 2) throw std::domain_error("cycloValuation: d must be >= 2");
    return p.cycloValuation(d);
}

bool checkBinomialTransfer(long n, long k, long m) {
    return qBinomial(n + k, k) * qBinomial(k, m) == qBinomial(n + m, m) * qBinomial(n + k, k - m);
}

}  // namespace qapery

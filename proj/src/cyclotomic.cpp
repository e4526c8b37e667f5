#include "qapery/cyclotomic.hpp"

#include <map>
#include <stdexcept>

namespace qapery {

QPoly cyclotomic(long d) {
    if (d < 1) throw std::domain_error("cyclotomic: index must be >= 1");
    // Phi_j = (q^j - 1) / prod_{e | j, e < j} Phi_e, built bottom-up over the
    // divisors of d.
    std::map<long, QPoly> table;
    for (long j = 1; j <= d; ++j) {
        if (d % j != 0) continue;
        QPoly num = QPoly::monomial(Rational(1), j) - QPoly::one();
        for (long e = 1; e < j; ++e) {
            if (j % e != 0) continue;
            num = *QPoly::divideExact(num, table.at(e));
        }
        table.emplace(j, std::move(num));
    }
    return table.at(d);
}

}  // namespace qapery

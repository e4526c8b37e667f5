#pragma once

#include "qapery/qpoly.hpp"

namespace qapery {

/// d-th cyclotomic polynomial, monic with integer coefficients.
/// Phi_1 = q - 1, Phi_2 = q + 1, and prod_{d | m} Phi_d = q^m - 1.
/// Throws std::domain_error for d < 1.
QPoly cyclotomic(long d);

}  // namespace qapery

#pragma once

#include "displab/polynomial.hpp"

namespace displab {

// L_n via the Sheffer recurrence L_j' = L_{j-1}' - L_{j-1}, L_j(0) = 1.
Polynomial laguerre(long n);

// L_n^{(alpha)} via the three-term recurrence
// (n+1) L_{n+1} = (2n+1+alpha-X) L_n - (n+alpha) L_{n-1}.
Polynomial generalized_laguerre(long n, long alpha);

}  // namespace displab

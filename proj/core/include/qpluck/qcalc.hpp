#pragma once

#include <vector>

#include "qpluck/poly.hpp"

namespace qpluck {

/// [k]_q = 1 + q + ... + q^(k-1). Throws InvalidInput for k < 1.
Poly q_int(int k);

/// [k]_q! = [k]_q [k-1]_q ... [1]_q, with [0]_q! = 1.
Poly q_factorial(int k);

/// Gaussian binomial coefficient of degree m*n, computed by the division-free
/// Pascal recurrence G(m,n) = G(m,n-1) + q^n G(m-1,n) with a shared memo.
Poly gauss(int m, int n);

/// q-multinomial over the given block sizes, assembled as a product of
/// nested Gaussian binomials. Parts list must be nonempty; zero parts are
/// allowed and contribute nothing.
Poly q_multinomial(const std::vector<int>& parts);

/// Rank generating function of the lattice L(m,n) of monotone integer
/// sequences 0 <= a_1 <= ... <= a_m <= n weighted by sum(a_i), computed by
/// direct enumeration. Independent of gauss() by construction; throws
/// BudgetExceeded when binomial(m+n,m) > 10^7.
Poly lattice_gf(int m, int n);

/// Ordinary binomial coefficient, exact.
Coeff binomial_exact(unsigned long n, unsigned long k);

}  // namespace qpluck

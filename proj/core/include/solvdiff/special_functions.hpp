#pragma once

#include "solvdiff/log_value.hpp"

namespace solvdiff {

// Overflow-safe evaluation of the special functions behind the three
// diffusion families. Everything is returned as LogValue; first derivatives
// come from the standard differential recurrences, never from finite
// differences.
//
// Accuracy targets (relative): 1e-13 for gamma_ln, 1e-10 for I/K/M,
// 1e-9 for U and D. See tests/ for the independent oracles.

// ln Gamma(x), x > 0. Throws std::domain_error otherwise.
double gamma_ln(double x);

// Modified Bessel functions of real order mu >= 0.
// bessel_i: z >= 0 (I_mu(0) = 1 for mu == 0, 0 for mu > 0).
// bessel_k: z > 0; integer orders go through the same limit-safe algorithm.
LogValue bessel_i(double mu, double z);
LogValue bessel_k(double mu, double z);

// d/dz I_mu(z) = (mu/z) I_mu(z) + I_{mu+1}(z)
// d/dz K_mu(z) = (mu/z) K_mu(z) - K_{mu+1}(z)
LogValue bessel_i_deriv(double mu, double z);
LogValue bessel_k_deriv(double mu, double z);

// Kummer confluent hypergeometric functions M(a,b,z) and U(a,b,z).
// kummer_m: b must not be a non-positive integer; z >= 0.
// kummer_u: a > 0 and z > 0.
LogValue kummer_m(double a, double b, double z);
LogValue kummer_u(double a, double b, double z);

// d/dz M(a,b,z) = (a/b) M(a+1,b+1,z);  d/dz U(a,b,z) = -a U(a+1,b+1,z)
LogValue kummer_m_deriv(double a, double b, double z);
LogValue kummer_u_deriv(double a, double b, double z);

// Parabolic cylinder function D_order(z) for order <= 0 (order = -upsilon),
// any real z.  pcf_d_deriv uses
// d/dz D_{-u}(z) = -(z/2) D_{-u}(z) - u D_{-u-1}(z).
LogValue pcf_d(double order, double z);
LogValue pcf_d_deriv(double order, double z);

}  // namespace solvdiff

#pragma once

namespace thspec {

/// Jacobi polynomial P_n^{(a,b)}(x) by the three-term recurrence.
/// Any finite a, b are accepted (the Tietz-Hua wavefunctions need b < -1 when
/// c_h < 0); throws DomainError if a recurrence denominator vanishes.
double jacobi_poly(int n, double a, double b, double x);

/// Associated Laguerre polynomial L_n^{(a)}(x) by the three-term recurrence.
double laguerre_poly(int n, double a, double x);

} // namespace thspec

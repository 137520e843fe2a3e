#pragma once

namespace gagliardo {

/// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
double gamma_q(double a, double x);

/// P(X > stat) for X ~ chi-square with dof degrees of freedom.
double chi_square_pvalue(double stat, int dof);

}  // namespace gagliardo

#pragma once

#include "gagliardo/types.hpp"

namespace gagliardo {

/// Kernel value at angle difference t in (0, 2 pi).
double kernel_value(KernelForm form, double t, double sp);

/// Wrapped power kernel sum_{m in Z} |t + 2 pi m|^{-(1+sp)} for t in (0, 2 pi).
double periodized_power_kernel(double t, double sp);

/// Row weights W_d for the offset tensor rule, d = 0..M-1.
///
/// The rule integrates over cells C_d = [d h, (d+1) h) in the angle
/// difference, with the data sitting at cell centers t_d = (d + 1/2) h.
/// Interior cells use the midpoint value h K(t_d). The two cells touching the
/// kernel singularity (d = 0 and d = M-1) are closed with the local power
/// law: the integrand behaves like t^p K(t) there, and
///   W_edge = t_0^{-p} integral_0^h K(t) t^p dt,
/// evaluated exactly for the t^{-(1+sp)} part and by Gauss quadrature for the
/// smooth remainder K(t) - t^{-(1+sp)}.
RVector quadrature_weights(int m_nodes, double s, double p, KernelForm form);

}  // namespace gagliardo

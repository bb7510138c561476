#pragma once

#include "crhvt/linalg.hpp"

namespace crhvt {

// Huber loss: x^2/2 inside the threshold, tau|x| - tau^2/2 outside.
double huber_value(double x, double tau);

// Derivative of the Huber loss, i.e. clamp(x, -tau, tau). At |x| == tau the
// clamp value is returned (any subgradient is valid; this one is deterministic).
double huber_deriv(double x, double tau);

// Smooth pseudo-Huber surrogate tau^2 (sqrt(1 + (x/tau)^2) - 1): zero at zero,
// unit curvature at zero, asymptotically tau|x| - tau^2.
double pseudo_huber_value(double x, double tau);
double pseudo_huber_deriv(double x, double tau);

// One evaluation of the per-round Huber loss on the normalized residual
// z = (r - <theta, x>) / sigma, together with its gradient in theta.
struct LossEval {
  double value = 0.0;         // huber_value(z, tau)
  double scalar_deriv = 0.0;  // clipped residual, |scalar_deriv| <= tau
  Vec gradient;               // -scalar_deriv * x / sigma
};

LossEval loss_gradient(const Vec& theta, const Vec& x, double r, double sigma, double tau);

}  // namespace crhvt

#ifndef PRYMLAB_QUARTIC_DUAL_HPP
#define PRYMLAB_QUARTIC_DUAL_HPP

#include "prymlab/quartic/plane_curve.hpp"

namespace prymlab::quartic {

// Defining form of the dual curve, in dual coordinates named (X, Y, Z):
// the point (u:v:w) of the result corresponds to the line uX + vY + wZ = 0.
// Computed as the discriminant of the restriction to the pencil of lines,
// with the parametrization's extraneous w-power removed. For a smooth curve
// of degree d the result has degree d(d-1).
PlaneCurve dual_curve_eliminant(const PlaneCurve& c);

} // namespace prymlab::quartic

#endif

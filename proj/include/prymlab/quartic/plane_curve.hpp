#ifndef PRYMLAB_QUARTIC_PLANE_CURVE_HPP
#define PRYMLAB_QUARTIC_PLANE_CURVE_HPP

#include <array>
#include <optional>
#include <string>

#include "prymlab/exact/polyops.hpp"

namespace prymlab::quartic {

using exact::Domain;
using exact::MultiPoly;
using exact::Scalar;

// Homogeneous ternary form in (X, Y, Z).
class PlaneCurve {
public:
    PlaneCurve() = default;
    explicit PlaneCurve(MultiPoly form);

    static const std::vector<std::string>& vars();
    static PlaneCurve from_text(const std::string& text, Domain dom = Domain::Q,
                                fp::u64 p = 0);

    const MultiPoly& form() const { return form_; }
    long degree() const { return form_.total_degree(); }
    Domain domain() const { return form_.domain(); }

    PlaneCurve reduce_mod(fp::u64 p) const { return PlaneCurve(form_.reduce_mod(p)); }

    // det of the 3x3 matrix of second partials; degree 3(d-2).
    PlaneCurve hessian() const;

    // Linear change of coordinates by an invertible 3x3 integer matrix.
    PlaneCurve transformed(const std::array<std::array<long, 3>, 3>& m) const;

    MultiPoly partial(size_t var) const { return form_.derivative(var); }

private:
    MultiPoly form_;
};

// Iterated-resultant smoothness certificate, run mod a 31-bit prime.
// A pass certifies that the three partials have no common projective zero
// mod p, hence (the integral discriminant being nonzero mod p) the curve is
// smooth over Q as well when the input is rational. Returns false if no
// randomized attempt produces a clean certificate.
bool certify_smooth(const PlaneCurve& c, fp::u64 p, fp::u64& rng_state, int attempts = 6);

// Smooth conic test over Q: determinant of the symmetric Gram matrix.
bool conic_is_smooth(const PlaneCurve& q);

// Random invertible 3x3 integer matrix with entries in [-3, 3].
std::array<std::array<long, 3>, 3> random_gl3(fp::u64& rng_state);

// Random homogeneous form over Q with integer coefficients in [-bound, bound]
// and nonzero coefficients on X^d, Y^d, Z^d.
PlaneCurve random_ternary_form(fp::u64& rng_state, long degree, long bound);

} // namespace prymlab::quartic

#endif

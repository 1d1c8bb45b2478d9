#include "prymlab/quartic/dual.hpp"

#include <stdexcept>

namespace prymlab::quartic {

using exact::Exponents;

PlaneCurve dual_curve_eliminant(const PlaneCurve& c) {
    Domain dom = c.domain();
    fp::u64 p = c.form().prime();
    long d = c.degree();
    if (d < 2) throw std::invalid_argument("dual_curve_eliminant: degree < 2");

    // Parametrize the line {uX + vY + wZ = 0} by s -> s*(w,0,-u) + (0,w,-v),
    // restrict and take the discriminant of the resulting polynomial in s.
    std::vector<std::string> sv{"s", "X", "Y", "Z"};
    MultiPoly s = MultiPoly::variable(sv, 0, dom, p);
    MultiPoly u = MultiPoly::variable(sv, 1, dom, p);
    MultiPoly v = MultiPoly::variable(sv, 2, dom, p);
    MultiPoly w = MultiPoly::variable(sv, 3, dom, p);
    std::vector<MultiPoly> im{s * w, w, -(s * u + v)};
    MultiPoly g = c.form().substitute(im);
    if (g.degree_in(0) != d)
        throw std::domain_error("dual_curve_eliminant: degenerate restriction");
    MultiPoly res = exact::resultant(g, g.derivative(0), 0);
    if (res.is_zero()) throw std::domain_error("dual_curve_eliminant: identically zero eliminant");
    // lc_s(g) = f(w, 0, -u) divides the resultant (disc * lc identity)
    MultiPoly lead = g.coeffs_in(0)[static_cast<size_t>(d)];
    MultiPoly disc = res.exact_div(lead);

    // strip the extraneous w-power from the chart choice
    MultiPoly wmono = MultiPoly::variable(sv, 3, dom, p);
    for (;;) {
        bool divisible = true;
        for (auto& [e, co] : disc.terms())
            if (e[3] == 0) divisible = false;
        if (!divisible) break;
        disc = disc.exact_div(wmono);
    }
    if (disc.total_degree() != d * (d - 1))
        throw std::domain_error("dual_curve_eliminant: unexpected dual degree");

    // re-express in the 3-variable dual plane
    MultiPoly out(PlaneCurve::vars(), dom, p);
    for (auto& [e, co] : disc.terms()) {
        if (e[0] != 0) throw std::logic_error("dual_curve_eliminant: s survived elimination");
        out.add_term(Exponents{e[1], e[2], e[3]}, co);
    }
    return PlaneCurve(out);
}

} // namespace prymlab::quartic

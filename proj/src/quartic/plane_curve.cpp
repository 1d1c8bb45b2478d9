#include "prymlab/quartic/plane_curve.hpp"

#include <stdexcept>

#include "prymlab/exact/parse.hpp"

namespace prymlab::quartic {

using exact::Exponents;
using exact::UniPoly;

const std::vector<std::string>& PlaneCurve::vars() {
    static const std::vector<std::string> v{"X", "Y", "Z"};
    return v;
}

PlaneCurve::PlaneCurve(MultiPoly form) : form_(std::move(form)) {
    if (form_.vars() != vars()) throw std::invalid_argument("PlaneCurve: expected variables X,Y,Z");
    if (form_.is_zero()) throw std::invalid_argument("PlaneCurve: zero form");
    if (!form_.is_homogeneous()) throw std::invalid_argument("PlaneCurve: form is not homogeneous");
}

PlaneCurve PlaneCurve::from_text(const std::string& text, Domain dom, fp::u64 p) {
    return PlaneCurve(exact::parse_poly(text, vars(), dom, p));
}

PlaneCurve PlaneCurve::hessian() const {
    if (degree() < 2) throw std::domain_error("hessian: degree < 2");
    std::array<std::array<MultiPoly, 3>, 3> h;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) h[i][j] = form_.derivative(i).derivative(j);
    MultiPoly det = h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) -
                    h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
                    h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
    return PlaneCurve(std::move(det));
}

PlaneCurve PlaneCurve::transformed(const std::array<std::array<long, 3>, 3>& m) const {
    Domain dom = form_.domain();
    fp::u64 p = form_.prime();
    std::vector<MultiPoly> images;
    for (size_t i = 0; i < 3; ++i) {
        MultiPoly img(vars(), dom, p);
        for (size_t j = 0; j < 3; ++j) {
            Scalar c = dom == Domain::Q
                           ? Scalar::integer(m[i][j])
                           : Scalar::residue(static_cast<fp::u64>((m[i][j] % (long)p + (long)p)), p);
            img = img + MultiPoly::variable(vars(), j, dom, p).scaled(c);
        }
        images.push_back(img);
    }
    return PlaneCurve(form_.substitute(images));
}

std::array<std::array<long, 3>, 3> random_gl3(fp::u64& rng_state) {
    for (;;) {
        std::array<std::array<long, 3>, 3> m;
        for (auto& row : m)
            for (auto& v : row) v = static_cast<long>(fp::splitmix64(rng_state) % 7) - 3;
        long det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if (det != 0) return m;
    }
}

namespace {

// Necessary vanishing: a common affine zero of (A, B) forces Res_y(A, B) = 0.
MultiPoly res_in(const MultiPoly& a, const MultiPoly& b, size_t var) {
    return exact::resultant(a, b, var);
}

bool chart_clear(const MultiPoly& a, const MultiPoly& b, const MultiPoly& c, size_t elimvar,
                 size_t freevar) {
    if (a.is_zero() || b.is_zero() || c.is_zero()) return false;
    if (a.degree_in(elimvar) <= 0 || b.degree_in(elimvar) <= 0 || c.degree_in(elimvar) <= 0)
        return false; // degenerate layout; caller retries with new coordinates
    MultiPoly r1 = res_in(a, b, elimvar);
    MultiPoly r2 = res_in(a, c, elimvar);
    if (r1.is_zero() || r2.is_zero()) return false;
    if (r1.degree_in(freevar) <= 0 || r2.degree_in(freevar) <= 0)
        return r1.total_degree() == 0 || r2.total_degree() == 0;
    UniPoly u1 = exact::to_unipoly(r1, freevar), u2 = exact::to_unipoly(r2, freevar);
    return UniPoly::gcd(u1, u2).degree() == 0;
}

} // namespace

bool certify_smooth(const PlaneCurve& c, fp::u64 p, fp::u64& rng_state, int attempts) {
    PlaneCurve cp = c.domain() == Domain::Fp ? c : c.reduce_mod(p);
    for (int att = 0; att < attempts; ++att) {
        PlaneCurve g = cp.transformed(random_gl3(rng_state));
        MultiPoly gx = g.partial(0), gy = g.partial(1), gz = g.partial(2);
        auto one = MultiPoly::constant(PlaneCurve::vars(), Scalar::one(Domain::Fp, p));
        auto var = [&](size_t i) { return MultiPoly::variable(PlaneCurve::vars(), i, Domain::Fp, p); };

        bool ok = true;
        // chart Z = 1: eliminate Y, free X
        {
            std::vector<MultiPoly> im{var(0), var(1), one};
            if (!chart_clear(gx.substitute(im), gy.substitute(im), gz.substitute(im), 1, 0)) ok = false;
        }
        // chart Y = 1: eliminate Z, free X
        if (ok) {
            std::vector<MultiPoly> im{var(0), one, var(2)};
            if (!chart_clear(gx.substitute(im), gy.substitute(im), gz.substitute(im), 2, 0)) ok = false;
        }
        // chart X = 1: eliminate Z, free Y
        if (ok) {
            std::vector<MultiPoly> im{one, var(1), var(2)};
            if (!chart_clear(gx.substitute(im), gy.substitute(im), gz.substitute(im), 2, 1)) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

PlaneCurve random_ternary_form(fp::u64& rng_state, long degree, long bound) {
    MultiPoly f(PlaneCurve::vars(), Domain::Q);
    for (long i = 0; i <= degree; ++i) {
        for (long j = 0; i + j <= degree; ++j) {
            long k = degree - i - j;
            long c = static_cast<long>(fp::splitmix64(rng_state) % (2 * bound + 1)) - bound;
            bool corner = (i == degree) || (j == degree) || (k == degree);
            while (corner && c == 0)
                c = static_cast<long>(fp::splitmix64(rng_state) % (2 * bound + 1)) - bound;
            f.add_term(Exponents{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                                 static_cast<std::uint32_t>(k)},
                       Scalar::integer(c));
        }
    }
    return PlaneCurve(f);
}

bool conic_is_smooth(const PlaneCurve& q) {
    if (q.degree() != 2) throw std::invalid_argument("conic_is_smooth: degree != 2");
    // Gram matrix with doubled off-diagonal entries; nonzero det <=> smooth.
    auto coeff = [&](std::uint32_t i, std::uint32_t j, std::uint32_t k) {
        return q.form().coeff(Exponents{i, j, k});
    };
    Scalar two = Scalar::integer(2);
    if (q.domain() == Domain::Fp) two = Scalar::residue(2, q.form().prime());
    std::array<std::array<Scalar, 3>, 3> g{{{coeff(2, 0, 0) * two, coeff(1, 1, 0), coeff(1, 0, 1)},
                                            {coeff(1, 1, 0), coeff(0, 2, 0) * two, coeff(0, 1, 1)},
                                            {coeff(1, 0, 1), coeff(0, 1, 1), coeff(0, 0, 2) * two}}};
    Scalar det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                 g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                 g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
    return !det.is_zero();
}

} // namespace prymlab::quartic

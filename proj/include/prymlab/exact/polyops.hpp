#ifndef PRYMLAB_EXACT_POLYOPS_HPP
#define PRYMLAB_EXACT_POLYOPS_HPP

#include <vector>

#include "prymlab/exact/multipoly.hpp"

namespace prymlab::exact {

// Fraction-free determinant (Bareiss). Entries from any of our exact rings
// with exact_div; here instantiated for MultiPoly and Scalar.
MultiPoly bareiss_det(std::vector<std::vector<MultiPoly>> m);
Scalar bareiss_det_scalar(std::vector<std::vector<Scalar>> m);

// Resultant in `var` with the convention Res(x - a, x - b) = b - a, i.e.
// Res(p, q) = classical Sylvester determinant of (q, p). Inputs must be
// nonzero with positive degree in var.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, size_t var);

// Principal subresultant coefficients S_0 = Res, S_1, ..., S_{min-1} plus
// S_min = the leading coefficient convention value; S_0..S_{k-1} all zero
// iff deg gcd_var(p, q) >= k.
std::vector<MultiPoly> subresultant_coeffs(const MultiPoly& p, const MultiPoly& q, size_t var);

// Full j-th subresultant polynomial (degree <= j in var).
MultiPoly subresultant_poly(const MultiPoly& p, const MultiPoly& q, size_t var, int j);

// Dense univariate view over the Scalar field (single effective variable).
struct UniPoly {
    std::vector<Scalar> c; // c[i] * x^i, trailing zeros trimmed
    Domain dom = Domain::Q;
    fp::u64 p = 0;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void trim();
    Scalar coeff(int i) const;
    Scalar lc() const;
    UniPoly derivative() const;
    UniPoly monic() const;
    static void divrem(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
    static UniPoly gcd(UniPoly a, UniPoly b);
};

UniPoly to_unipoly(const MultiPoly& p, size_t var); // throws if other vars occur
MultiPoly from_unipoly(const UniPoly& u, const std::vector<std::string>& vars, size_t var);

// p / gcd(p, p'), monic; degree = number of distinct roots over the closure.
MultiPoly squarefree_part(const MultiPoly& p, size_t var);

// Homogeneous f in (X, Y, Z) restricted to a pencil line:
// chart 0 -> f(t, a t + b, 1); chart 1 -> f(a t + b, t, 1). Result in var "t".
MultiPoly restrict_to_line(const MultiPoly& f, const Scalar& a, const Scalar& b, int chart);

} // namespace prymlab::exact

#endif

#include "prymlab/exact/polyops.hpp"

#include <stdexcept>

namespace prymlab::exact {

namespace {

template <class T, class One>
T bareiss_generic(std::vector<std::vector<T>>& m, One one, int sign_init = 1) {
    size_t n = m.size();
    if (n == 0) throw std::invalid_argument("bareiss: empty matrix");
    for (auto& row : m)
        if (row.size() != n) throw std::invalid_argument("bareiss: not square");
    T prev = one;
    int sign = sign_init;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) {
                // singular: determinant zero
                return m[0][0] - m[0][0];
            }
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                T t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = t.exact_div(prev);
            }
            m[i][k] = m[i][k] - m[i][k]; // zero
        }
        prev = m[k][k];
    }
    T d = m[n - 1][n - 1];
    return sign == 1 ? d : -d;
}

// Scalar wrapper so bareiss_generic's exact_div applies.
struct SWrap {
    Scalar v;
    bool is_zero() const { return v.is_zero(); }
    SWrap operator*(const SWrap& o) const { return {v * o.v}; }
    SWrap operator-(const SWrap& o) const { return {v - o.v}; }
    SWrap operator-() const { return {-v}; }
    SWrap exact_div(const SWrap& o) const { return {v / o.v}; }
};

// Rows of the order-j subresultant matrix of (A, B) in var, on the monomial
// basis x^{m+n-j-1} ... x^{j+1} for the leading block; the trailing column of
// the k-th determinant carries the x^k coefficients.
struct SubresMatrix {
    std::vector<std::vector<MultiPoly>> lead; // rows x (m+n-2j-1) columns
    std::vector<std::vector<MultiPoly>> tail; // rows x (j+1) columns: coeff on x^j..x^0
};

SubresMatrix subres_rows(const MultiPoly& A, const MultiPoly& B, size_t var, int j) {
    int m = static_cast<int>(A.degree_in(var));
    int n = static_cast<int>(B.degree_in(var));
    int rows = (n - j) + (m - j);
    int leadcols = m + n - 2 * j - 1;
    auto ac = A.coeffs_in(var);
    auto bc = B.coeffs_in(var);
    auto zero = MultiPoly::zero(A.vars(), A.domain(), A.prime());
    auto coeff_of = [&](const std::vector<MultiPoly>& cs, int d) {
        return (d >= 0 && d < static_cast<int>(cs.size())) ? cs[d] : zero;
    };
    SubresMatrix s;
    s.lead.assign(rows, std::vector<MultiPoly>(leadcols, zero));
    s.tail.assign(rows, std::vector<MultiPoly>(j + 1, zero));
    int top = m + n - j - 1;
    int r = 0;
    // row = x^{s_i} * A: coefficient on x^d sits at position ac[d - s_i]
    for (int s_i = n - j - 1; s_i >= 0; --s_i, ++r) {
        for (int c = 0; c < leadcols; ++c) s.lead[r][c] = coeff_of(ac, top - c - s_i);
        for (int k = 0; k <= j; ++k) s.tail[r][k] = coeff_of(ac, (j - k) - s_i);
    }
    for (int s_i = m - j - 1; s_i >= 0; --s_i, ++r) {
        for (int c = 0; c < leadcols; ++c) s.lead[r][c] = coeff_of(bc, top - c - s_i);
        for (int k = 0; k <= j; ++k) s.tail[r][k] = coeff_of(bc, (j - k) - s_i);
    }
    return s;
}

} // namespace

MultiPoly bareiss_det(std::vector<std::vector<MultiPoly>> m) {
    auto one = MultiPoly::constant(m[0][0].vars(), Scalar::one(m[0][0].domain(), m[0][0].prime()));
    return bareiss_generic(m, one);
}

Scalar bareiss_det_scalar(std::vector<std::vector<Scalar>> m) {
    std::vector<std::vector<SWrap>> w(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (auto& v : m[i]) w[i].push_back({v});
    SWrap one{Scalar::one(m[0][0].domain(), m[0][0].prime())};
    return bareiss_generic(w, one).v;
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, size_t var) {
    if (p.is_zero() || q.is_zero()) throw std::domain_error("resultant: zero polynomial");
    long dp = p.degree_in(var), dq = q.degree_in(var);
    if (dp <= 0 || dq <= 0) throw std::domain_error("resultant: degree 0 in variable");
    // classical Sylvester determinant of (q, p)
    auto qc = q.coeffs_in(var);
    auto pc = p.coeffs_in(var);
    auto zero = MultiPoly::zero(p.vars(), p.domain(), p.prime());
    size_t n = static_cast<size_t>(dp + dq);
    std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n, zero));
    for (long r = 0; r < dp; ++r)
        for (long i = 0; i <= dq; ++i) m[r][r + i] = qc[static_cast<size_t>(dq - i)];
    for (long r = 0; r < dq; ++r)
        for (long i = 0; i <= dp; ++i) m[dp + r][r + i] = pc[static_cast<size_t>(dp - i)];
    return bareiss_det(std::move(m));
}

MultiPoly subresultant_poly(const MultiPoly& p, const MultiPoly& q, size_t var, int j) {
    // chain of (A, B) = (q, p) so that S_0 matches the pinned resultant
    const MultiPoly &A = q, &B = p;
    int m = static_cast<int>(A.degree_in(var));
    int n = static_cast<int>(B.degree_in(var));
    if (m <= 0 || n <= 0) throw std::domain_error("subresultant: degree 0 in variable");
    if (j < 0 || j >= std::min(m, n)) throw std::invalid_argument("subresultant: bad order");
    SubresMatrix s = subres_rows(A, B, var, j);
    size_t d = s.lead.size();
    MultiPoly out = MultiPoly::zero(p.vars(), p.domain(), p.prime());
    for (int k = 0; k <= j; ++k) {
        std::vector<std::vector<MultiPoly>> mt(d);
        for (size_t r = 0; r < d; ++r) {
            mt[r] = s.lead[r];
            mt[r].push_back(s.tail[r][static_cast<size_t>(j - k)]);
        }
        MultiPoly dk = bareiss_det(std::move(mt));
        // multiply by x^k
        MultiPoly xk = MultiPoly::variable(p.vars(), var, p.domain(), p.prime()).pow(static_cast<unsigned>(k));
        out = out + dk * xk;
    }
    return out;
}

std::vector<MultiPoly> subresultant_coeffs(const MultiPoly& p, const MultiPoly& q, size_t var) {
    int m = static_cast<int>(q.degree_in(var));
    int n = static_cast<int>(p.degree_in(var));
    if (m <= 0 || n <= 0) throw std::domain_error("subresultant: degree 0 in variable");
    int jmax = std::min(m, n);
    std::vector<MultiPoly> out;
    for (int j = 0; j < jmax; ++j) {
        SubresMatrix s = subres_rows(q, p, var, j);
        size_t d = s.lead.size();
        std::vector<std::vector<MultiPoly>> mt(d);
        for (size_t r = 0; r < d; ++r) {
            mt[r] = s.lead[r];
            mt[r].push_back(s.tail[r][0]); // coefficient on x^j
        }
        out.push_back(bareiss_det(std::move(mt)));
    }
    return out;
}

void UniPoly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Scalar UniPoly::coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<size_t>(i)] : Scalar::zero(dom, p);
}

Scalar UniPoly::lc() const { return c.empty() ? Scalar::zero(dom, p) : c.back(); }

UniPoly UniPoly::derivative() const {
    UniPoly r{{}, dom, p};
    for (size_t i = 1; i < c.size(); ++i) {
        Scalar m = dom == Domain::Q ? Scalar::integer(static_cast<long>(i)) : Scalar::residue(i, p);
        r.c.push_back(c[i] * m);
    }
    r.trim();
    return r;
}

UniPoly UniPoly::monic() const {
    UniPoly r = *this;
    if (r.is_zero()) return r;
    Scalar inv = r.lc().inv();
    for (auto& v : r.c) v = v * inv;
    return r;
}

void UniPoly::divrem(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) throw std::domain_error("UniPoly: division by zero");
    q = UniPoly{{}, a.dom, a.p};
    r = a;
    if (a.degree() < b.degree()) return;
    q.c.assign(static_cast<size_t>(a.degree() - b.degree() + 1), Scalar::zero(a.dom, a.p));
    Scalar binv = b.lc().inv();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        Scalar f = r.lc() * binv;
        q.c[static_cast<size_t>(k)] = f;
        for (int i = 0; i <= b.degree(); ++i)
            r.c[static_cast<size_t>(i + k)] = r.coeff(i + k) - f * b.coeff(i);
        r.trim();
    }
    q.trim();
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly q, r;
        divrem(a, b, q, r);
        a = b;
        b = r;
    }
    return a.monic();
}

UniPoly to_unipoly(const MultiPoly& p, size_t var) {
    UniPoly u{{}, p.domain(), p.prime()};
    long d = p.degree_in(var);
    u.c.assign(static_cast<size_t>(d + 1), Scalar::zero(p.domain(), p.prime()));
    for (auto& [e, c] : p.terms()) {
        for (size_t i = 0; i < e.size(); ++i)
            if (i != var && e[i] != 0) throw std::domain_error("to_unipoly: not univariate");
        u.c[e[var]] = c;
    }
    u.trim();
    return u;
}

MultiPoly from_unipoly(const UniPoly& u, const std::vector<std::string>& vars, size_t var) {
    MultiPoly r(vars, u.dom, u.p);
    for (size_t i = 0; i < u.c.size(); ++i) {
        if (u.c[i].is_zero()) continue;
        Exponents e(vars.size(), 0);
        e[var] = static_cast<std::uint32_t>(i);
        r.add_term(e, u.c[i]);
    }
    return r;
}

MultiPoly squarefree_part(const MultiPoly& p, size_t var) {
    if (p.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
    UniPoly u = to_unipoly(p, var);
    if (u.degree() == 0)
        return MultiPoly::constant(p.vars(), Scalar::one(p.domain(), p.prime()));
    UniPoly g = UniPoly::gcd(u, u.derivative());
    UniPoly q, r;
    UniPoly::divrem(u, g, q, r);
    if (!r.is_zero()) throw std::logic_error("squarefree_part: inexact gcd division");
    return from_unipoly(q.monic(), p.vars(), var);
}

MultiPoly restrict_to_line(const MultiPoly& f, const Scalar& a, const Scalar& b, int chart) {
    if (!f.is_homogeneous()) throw std::domain_error("restrict_to_line: non-homogeneous form");
    if (f.vars().size() != 3) throw std::invalid_argument("restrict_to_line: expected 3 variables");
    std::vector<std::string> tv{"t"};
    Domain dom = f.domain();
    fp::u64 p = f.prime();
    MultiPoly t = MultiPoly::variable(tv, 0, dom, p);
    MultiPoly at_b = t.scaled(a) + MultiPoly::constant(tv, b);
    MultiPoly one = MultiPoly::constant(tv, Scalar::one(dom, p));
    std::vector<MultiPoly> images;
    if (chart == 0)
        images = {t, at_b, one};
    else if (chart == 1)
        images = {at_b, t, one};
    else
        throw std::invalid_argument("restrict_to_line: chart must be 0 or 1");
    return f.substitute(images);
}

} // namespace prymlab::exact

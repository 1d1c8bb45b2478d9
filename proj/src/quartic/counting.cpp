#include "prymlab/quartic/counting.hpp"

#include <algorithm>
#include <stdexcept>

namespace prymlab::quartic {

using exact::Exponents;
using exact::UniPoly;
using fp::u64;

namespace {

// ---- numeric subresultant minors -----------------------------------------

u64 det_fp(std::vector<std::vector<u64>> m, u64 p) {
    size_t n = m.size();
    u64 det = 1;
    int sign = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        det = fp::mul(det, m[k][k], p);
        u64 pi = fp::inv(m[k][k], p);
        for (size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            u64 f = fp::mul(m[i][k], pi, p);
            for (size_t j = k; j < n; ++j) m[i][j] = fp::sub(m[i][j], fp::mul(f, m[k][j], p), p);
        }
    }
    return sign == 1 ? det : fp::neg(det, p);
}

// det of the order-j subresultant minor of (A, B) with tail column = coeff on
// x^k. A has formal degree m (size m+1, top entries may be zero), B degree n.
u64 subres_det(const std::vector<u64>& A, const std::vector<u64>& B, int m, int n, int j,
               int k, u64 p) {
    int rows = (n - j) + (m - j);
    int lead = m + n - 2 * j - 1;
    int top = m + n - j - 1;
    auto at = [](const std::vector<u64>& v, int i) -> u64 {
        return (i >= 0 && i < static_cast<int>(v.size())) ? v[static_cast<size_t>(i)] : 0;
    };
    std::vector<std::vector<u64>> mt(static_cast<size_t>(rows),
                                     std::vector<u64>(static_cast<size_t>(rows), 0));
    int r = 0;
    for (int s = n - j - 1; s >= 0; --s, ++r) {
        for (int c = 0; c < lead; ++c) mt[r][c] = at(A, top - c - s);
        mt[r][static_cast<size_t>(lead)] = at(A, k - s);
    }
    for (int s = m - j - 1; s >= 0; --s, ++r) {
        for (int c = 0; c < lead; ++c) mt[r][c] = at(B, top - c - s);
        mt[r][static_cast<size_t>(lead)] = at(B, k - s);
    }
    return det_fp(std::move(mt), p);
}

// Chain data of (P, P') for a degree-4 restriction P.
struct ChainVals {
    u64 s0, s1;          // principal subresultants of orders 0, 1
    u64 s22, s21, s20;   // the full order-2 subresultant polynomial
    u64 disc2;           // s21^2 - 4 s22 s20
    u64 c4;              // leading t-coefficient of P
};

ChainVals chain_of(const std::vector<u64>& pc, u64 p) {
    std::vector<u64> dp(4);
    for (int i = 1; i <= 4; ++i) dp[static_cast<size_t>(i - 1)] = fp::mul(pc[static_cast<size_t>(i)], static_cast<u64>(i), p);
    ChainVals v{};
    v.c4 = pc[4];
    v.s0 = subres_det(pc, dp, 4, 3, 0, 0, p);
    v.s1 = subres_det(pc, dp, 4, 3, 1, 1, p);
    v.s22 = subres_det(pc, dp, 4, 3, 2, 2, p);
    v.s21 = subres_det(pc, dp, 4, 3, 2, 1, p);
    v.s20 = subres_det(pc, dp, 4, 3, 2, 0, p);
    v.disc2 = fp::sub(fp::mul(v.s21, v.s21, p), fp::mul(4, fp::mul(v.s22, v.s20, p), p), p);
    return v;
}

// ---- bivariate reconstruction over F_p ------------------------------------

struct FpBi {
    u64 p = 0;
    std::vector<fp::Poly> by_b; // coefficient on b^j, a polynomial in the sheared slope

    int bdeg() const {
        for (int j = static_cast<int>(by_b.size()) - 1; j >= 0; --j)
            if (!by_b[static_cast<size_t>(j)].is_zero()) return j;
        return -1;
    }
    fp::Poly eval_a(u64 a0) const {
        std::vector<u64> c;
        for (auto& q : by_b) c.push_back(q.eval(a0));
        return fp::Poly(p, c);
    }
    // value at (x, beta(x)) reduced mod T
    fp::Poly eval_mod(const fp::Poly& T, const fp::Poly& beta) const {
        fp::Poly acc(p);
        for (int j = bdeg(); j >= 0; --j) {
            acc = fp::mulmod(acc, beta, T);
            acc = acc + fp::polmod(by_b[static_cast<size_t>(j)], T);
        }
        return fp::polmod(acc, T);
    }
};

// Exact division in b, requiring the divisor's leading b-coefficient to be a
// nonzero constant. Returns false (leaving A untouched) if not exact.
bool bi_divide_exact(FpBi& A, const FpBi& C) {
    int da = A.bdeg(), dc = C.bdeg();
    if (da < dc || dc < 0) return false;
    u64 p = A.p;
    const fp::Poly& lead = C.by_b[static_cast<size_t>(dc)];
    if (lead.degree() != 0 || lead.is_zero()) return false;
    u64 linv = fp::inv(lead.lc(), p);
    std::vector<fp::Poly> rem = A.by_b;
    rem.resize(static_cast<size_t>(da + 1), fp::Poly(p));
    std::vector<fp::Poly> quot(static_cast<size_t>(da - dc + 1), fp::Poly(p));
    for (int k = da - dc; k >= 0; --k) {
        fp::Poly q = rem[static_cast<size_t>(k + dc)].scaled(linv);
        quot[static_cast<size_t>(k)] = q;
        for (int j = 0; j <= dc; ++j)
            rem[static_cast<size_t>(k + j)] =
                rem[static_cast<size_t>(k + j)] - q * C.by_b[static_cast<size_t>(j)];
    }
    for (auto& r : rem)
        if (!r.is_zero()) return false;
    A.by_b = std::move(quot);
    while (!A.by_b.empty() && A.by_b.back().is_zero()) A.by_b.pop_back();
    return true;
}

FpBi bi_from_grid(u64 p, const std::vector<u64>& xs, const std::vector<u64>& ys,
                  const std::vector<std::vector<u64>>& vals) {
    // vals[i][k] = value at (xs[i], ys[k])
    size_t na = xs.size(), nb = ys.size();
    std::vector<std::vector<u64>> col(nb, std::vector<u64>(na, 0));
    for (size_t i = 0; i < na; ++i) {
        fp::Poly bp = fp::interpolate(p, ys, vals[i]);
        for (size_t j = 0; j < nb; ++j) col[j][i] = bp.coeff(static_cast<int>(j));
    }
    FpBi bi;
    bi.p = p;
    for (size_t j = 0; j < nb; ++j) bi.by_b.push_back(fp::interpolate(p, xs, col[j]));
    while (!bi.by_b.empty() && bi.by_b.back().is_zero()) bi.by_b.pop_back();
    return bi;
}

// t-coefficients of the chart restriction as polynomials in (a, b) mod p.
struct Restriction {
    std::vector<MultiPoly> c; // c[i](a, b), i = 0..4
};

Restriction restriction_of(const PlaneCurve& cp, int chart) {
    std::vector<std::string> tv{"t", "a", "b"};
    u64 p = cp.form().prime();
    MultiPoly t = MultiPoly::variable(tv, 0, Domain::Fp, p);
    MultiPoly a = MultiPoly::variable(tv, 1, Domain::Fp, p);
    MultiPoly b = MultiPoly::variable(tv, 2, Domain::Fp, p);
    MultiPoly one = MultiPoly::constant(tv, Scalar::one(Domain::Fp, p));
    MultiPoly line = a * t + b;
    std::vector<MultiPoly> im =
        chart == 0 ? std::vector<MultiPoly>{t, line, one} : std::vector<MultiPoly>{line, t, one};
    MultiPoly r = cp.form().substitute(im);
    Restriction out;
    out.c.assign(5, MultiPoly(tv, Domain::Fp, p));
    auto cs = r.coeffs_in(0);
    for (size_t i = 0; i < cs.size() && i < 5; ++i) out.c[i] = cs[i];
    return out;
}

std::vector<u64> tcoeffs_at(const Restriction& R, u64 a0, u64 b0, u64 p) {
    std::vector<Scalar> pt{Scalar::residue(0, p), Scalar::residue(a0, p), Scalar::residue(b0, p)};
    std::vector<u64> pc(5, 0);
    for (int i = 0; i < 5; ++i) pc[static_cast<size_t>(i)] = R.c[static_cast<size_t>(i)].eval(pt).residue_value();
    return pc;
}

// Failure the caller can fix by changing projective coordinates.
struct NonGeneric : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Failure fixed by a new shear within the same chart.
struct ShearBad : NonGeneric {
    using NonGeneric::NonGeneric;
};

// Incremental Newton interpolation with degree-stabilization detection.
struct NewtonAcc {
    u64 p;
    std::vector<u64> xs, coef; // Newton coefficients w.r.t. xs
    std::vector<u64> vals;
    int zero_run = 0;

    explicit NewtonAcc(u64 prime) : p(prime) {}
    void add(u64 x, u64 v) {
        u64 acc = 0, basis = 1;
        for (size_t i = 0; i < xs.size(); ++i) {
            acc = fp::add(acc, fp::mul(coef[i], basis, p), p);
            basis = fp::mul(basis, fp::sub(x, xs[i], p), p);
        }
        if (basis == 0) throw std::logic_error("NewtonAcc: repeated node");
        u64 c = fp::mul(fp::sub(v, acc, p), fp::inv(basis, p), p);
        xs.push_back(x);
        coef.push_back(c);
        vals.push_back(v);
        zero_run = (c == 0) ? zero_run + 1 : 0;
    }
    fp::Poly poly() const {
        fp::Poly r(p), base = fp::Poly::constant(p, 1);
        for (size_t i = 0; i < xs.size(); ++i) {
            r = r + base.scaled(coef[i]);
            base = base * fp::Poly(p, {fp::neg(xs[i], p), 1});
        }
        return r;
    }
};

struct ChartData {
    FpBi S0, S1, s22, s21, s20, disc2, c4;
};

ChartData build_chart_bivariates(const Restriction& R, u64 p, u64 gamma) {
    const size_t NA = 29, NB = 29;
    std::vector<u64> xs, ys;
    for (size_t i = 0; i < NA; ++i) xs.push_back(static_cast<u64>(i + 1));
    for (size_t k = 0; k < NB; ++k) ys.push_back(static_cast<u64>(k + 1));
    std::vector<std::vector<u64>> vS0(NA, std::vector<u64>(NB)), vS1 = vS0, v22 = vS0, v21 = vS0,
                                  v20 = vS0, vD2 = vS0, vC4 = vS0;
    for (size_t i = 0; i < NA; ++i) {
        for (size_t k = 0; k < NB; ++k) {
            u64 a0 = fp::sub(xs[i], fp::mul(gamma, ys[k], p), p); // slope after shear
            auto pc = tcoeffs_at(R, a0, ys[k], p);
            ChainVals cv = chain_of(pc, p);
            vS0[i][k] = cv.s0;
            vS1[i][k] = cv.s1;
            v22[i][k] = cv.s22;
            v21[i][k] = cv.s21;
            v20[i][k] = cv.s20;
            vD2[i][k] = cv.disc2;
            vC4[i][k] = cv.c4;
        }
    }
    ChartData d;
    d.S0 = bi_from_grid(p, xs, ys, vS0);
    d.S1 = bi_from_grid(p, xs, ys, vS1);
    d.s22 = bi_from_grid(p, xs, ys, v22);
    d.s21 = bi_from_grid(p, xs, ys, v21);
    d.s20 = bi_from_grid(p, xs, ys, v20);
    d.disc2 = bi_from_grid(p, xs, ys, vD2);
    d.c4 = bi_from_grid(p, xs, ys, vC4);
    // Both subresultants carry powers of the leading t-coefficient, which the
    // shear makes b-dependent; strip them so the pair elimination stays
    // zero-dimensional. The condition {S0 = S1 = 0, c4 != 0} is unchanged.
    while (bi_divide_exact(d.S0, d.c4)) {}
    while (bi_divide_exact(d.S1, d.c4)) {}
    return d;
}

// Res of two quadratics with coefficients in F_p[x]/T, division-free 4x4.
fp::Poly res_quadratics_mod(const std::array<fp::Poly, 3>& q1, const std::array<fp::Poly, 3>& q2,
                            const fp::Poly& T) {
    // Sylvester of (q1, q2), both degree 2:
    // | a2 a1 a0 0 |
    // | 0  a2 a1 a0|
    // | b2 b1 b0 0 |
    // | 0  b2 b1 b0|
    auto mm = [&](const fp::Poly& x, const fp::Poly& y) { return fp::mulmod(x, y, T); };
    const fp::Poly &a2 = q1[2], &a1 = q1[1], &a0 = q1[0];
    const fp::Poly &b2 = q2[2], &b1 = q2[1], &b0 = q2[0];
    // expand along known structure: det = (a2 b0 - a0 b2)^2 - (a2 b1 - a1 b2)(a1 b0 - a0 b1)
    fp::Poly m00 = mm(a2, b0) - mm(a0, b2);
    fp::Poly m01 = mm(a2, b1) - mm(a1, b2);
    fp::Poly m10 = mm(a1, b0) - mm(a0, b1);
    return fp::polmod(mm(m00, m00) - mm(m01, m10), T);
}

// One triangular branch of the solution set: x-eliminant T (squarefree) with
// the b-coordinate given by beta mod T.
struct Branch {
    fp::Poly T;
    fp::Poly beta;
    fp::Poly T_flex;  // factor with disc2 = 0
    fp::Poly T_hyper; // factor of T_flex with the whole order-2 subresultant zero
};

struct TriangularResult {
    std::vector<Branch> branches;
    u64 gamma = 0;
    long dropped_degenerate = 0;
};

// residual verification + degenerate-line filtering + tangency-type split
void finish_branch(const ChartData& d, Branch& br, long& dropped) {
    fp::Poly& T = br.T;
    fp::Poly& beta = br.beta;
    auto refilter = [&](const FpBi& bi) {
        if (T.degree() <= 0) return;
        fp::Poly r = bi.eval_mod(T, beta);
        T = r.is_zero() ? T : fp::Poly::gcd(T, r);
        beta = fp::polmod(beta, T);
    };
    refilter(d.S0);
    refilter(d.S1);
    // Drop solutions on lines through the curve's points at infinity: there
    // the degree-4 layout of the t-subresultants degenerates and the system
    // loses its meaning. Honest tangency lines never sit there in generic
    // coordinates; per-prime independent frames cross-check this.
    if (T.degree() > 0) {
        fp::Poly c4v = d.c4.eval_mod(T, beta);
        fp::Poly junk = c4v.is_zero() ? T : fp::Poly::gcd(T, c4v);
        if (junk.degree() > 0) {
            dropped += junk.degree();
            T = fp::exact_div(T, junk);
            beta = fp::polmod(beta, T);
        }
    }
    if (T.degree() <= 0) {
        T = fp::Poly::constant(T.prime(), 1);
        beta = fp::Poly(T.prime());
        br.T_flex = T;
        br.T_hyper = T;
        return;
    }
    fp::Poly d2 = d.disc2.eval_mod(T, beta);
    br.T_flex = d2.is_zero() ? T : fp::Poly::gcd(T, d2);
    fp::Poly h = br.T_flex;
    for (auto* biq : {&d.s22, &d.s21, &d.s20}) {
        if (h.degree() <= 0) break;
        fp::Poly v = biq->eval_mod(h, fp::polmod(beta, h));
        h = v.is_zero() ? h : fp::Poly::gcd(h, v);
    }
    br.T_hyper = h;
}

TriangularResult triangular_solve(const ChartData& d, u64 p, u64 gamma) {
    int d0 = d.S0.bdeg(), d1 = d.S1.bdeg();
    if (d0 < 1 || d1 < 1) throw NonGeneric("tangency system: collapsed b-degrees");
    bool have2 = std::min(d0, d1) >= 3;
    std::vector<NewtonAcc> acc(have2 ? 6 : 3, NewtonAcc(p));
    size_t cap = static_cast<size_t>((d0 + d1) * 29 + 40);
    bool stable = false;
    auto dets_at = [&](u64 x, std::vector<u64>& out) {
        fp::Poly A = d.S0.eval_a(x), B = d.S1.eval_a(x);
        std::vector<u64> av(static_cast<size_t>(d0 + 1), 0), bv(static_cast<size_t>(d1 + 1), 0);
        for (int j = 0; j <= d0; ++j) av[static_cast<size_t>(j)] = A.coeff(j);
        for (int j = 0; j <= d1; ++j) bv[static_cast<size_t>(j)] = B.coeff(j);
        out.clear();
        out.push_back(subres_det(av, bv, d0, d1, 0, 0, p));
        out.push_back(subres_det(av, bv, d0, d1, 1, 1, p));
        out.push_back(subres_det(av, bv, d0, d1, 1, 0, p));
        if (have2) {
            out.push_back(subres_det(av, bv, d0, d1, 2, 2, p));
            out.push_back(subres_det(av, bv, d0, d1, 2, 1, p));
            out.push_back(subres_det(av, bv, d0, d1, 2, 0, p));
        }
    };
    std::vector<u64> vals;
    for (size_t i = 0; i < cap; ++i) {
        u64 x = static_cast<u64>(i + 1);
        dets_at(x, vals);
        bool all_stable = i > 60;
        for (size_t k = 0; k < acc.size(); ++k) {
            acc[k].add(x, vals[k]);
            if (acc[k].zero_run <= 30) all_stable = false;
        }
        if (all_stable) {
            stable = true;
            break;
        }
    }
    std::vector<fp::Poly> polys;
    for (auto& a : acc) polys.push_back(a.poly());
    if (stable) {
        for (u64 t = 0; t < 4; ++t) {
            u64 x = static_cast<u64>(acc[0].xs.size() + 101 + 37 * t);
            dets_at(x, vals);
            for (size_t k = 0; k < acc.size(); ++k)
                if (polys[k].eval(x) != vals[k])
                    throw ShearBad("tangency system: interpolation check failed");
        }
    }
    const fp::Poly &R = polys[0], &U1 = polys[1], &U0 = polys[2];
    if (R.is_zero()) throw std::runtime_error("tangency system is not zero-dimensional");
    fp::Poly T = R.squarefree_part();

    TriangularResult out;
    out.gamma = gamma;
    // Solutions where the first subresultant of the b-pair vanishes have a
    // doubled b-fiber (hyperflex-type thickening); they get the order-2
    // branch. A transversal shear keeps genuinely distinct solutions apart.
    fp::Poly W = fp::Poly::gcd(T, U1);
    fp::Poly T1 = W.degree() > 0 ? fp::exact_div(T, W) : T;
    if (T1.degree() > 0) {
        Branch br;
        br.T = T1;
        br.beta = fp::mulmod(fp::polmod(U0, T1).scaled(p - 1), fp::invmod(U1, T1), T1);
        finish_branch(d, br, out.dropped_degenerate);
        if (br.T.degree() > 0) out.branches.push_back(std::move(br));
    }
    if (W.degree() > 0) {
        if (!have2) throw ShearBad("doubled fiber without order-2 data");
        const fp::Poly &V2 = polys[3], &V1 = polys[4];
        if (fp::Poly::gcd(W, V2).degree() > 0)
            throw ShearBad("fiber multiplicity exceeds order-2 handling");
        // double root of the order-2 subresultant: b = -V1 / (2 V2)
        fp::Poly inv2v2 = fp::invmod(V2.scaled(2), W);
        Branch br;
        br.T = W;
        br.beta = fp::mulmod(fp::polmod(V1, W).scaled(p - 1), inv2v2, W);
        finish_branch(d, br, out.dropped_degenerate);
        if (br.T.degree() > 0) out.branches.push_back(std::move(br));
    }
    return out;
}

// verify every flex solution has a tangency point of multiplicity >= 3: the
// order-2 subresultant and P'' share a root (trivially so on hyperflexes).
void verify_flex_triple_contact(const ChartData& d, const Restriction& R, u64 p,
                                const TriangularResult& tr) {
    for (const Branch& b : tr.branches) {
        fp::Poly G = b.T_flex;
        if (G.degree() <= 0) continue;
        fp::Poly beta = fp::polmod(b.beta, G);
        std::array<fp::Poly, 3> sres2{d.s20.eval_mod(G, beta), d.s21.eval_mod(G, beta),
                                      d.s22.eval_mod(G, beta)};
        // slope a = x - gamma * beta
        fp::Poly a_poly = fp::polmod(fp::Poly::x(p) - beta.scaled(tr.gamma), G);
        auto eval_c = [&](int i) {
            // c_i(a, b) evaluated at (a_poly, beta) mod G
            fp::Poly acc(p);
            for (auto& [e, coef] : R.c[static_cast<size_t>(i)].terms()) {
                fp::Poly t = fp::Poly::constant(p, coef.residue_value());
                if (e[1]) t = fp::mulmod(t, fp::powmod(a_poly, e[1], G), G);
                if (e[2]) t = fp::mulmod(t, fp::powmod(beta, e[2], G), G);
                acc = acc + t;
            }
            return fp::polmod(acc, G);
        };
        std::array<fp::Poly, 3> ppp{eval_c(2).scaled(2), eval_c(3).scaled(6),
                                    eval_c(4).scaled(12)};
        fp::Poly res = res_quadratics_mod(sres2, ppp, G);
        if (!res.is_zero())
            throw std::runtime_error("flex verification failed: no triple tangency");
    }
}

struct AffineCounts {
    long n_all = 0, n_flex = 0, n_bit = 0, n_horiz_bit = 0, n_hyper = 0;
    long elim_deg = 0;
};

AffineCounts run_affine_chart(const PlaneCurve& cp, u64 p, u64& rng, int chart) {
    Restriction R = restriction_of(cp, chart);
    for (int attempt = 0; attempt < 6; ++attempt) {
        u64 gamma = 1 + fp::splitmix64(rng) % (p - 1);
        try {
            // shear-level retries only; coordinate-level failures propagate
            ChartData d = build_chart_bivariates(R, p, gamma);
            TriangularResult tr = triangular_solve(d, p, gamma);
            verify_flex_triple_contact(d, R, p, tr);
            AffineCounts out;
            for (const Branch& b : tr.branches) {
                long all = std::max(0, b.T.degree());
                long flex = std::max(0, b.T_flex.degree());
                out.n_all += all;
                out.n_flex += flex;
                out.n_hyper += std::max(0, b.T_hyper.degree());
                if (all - flex > 0) {
                    fp::Poly Tbit = fp::exact_div(b.T, b.T_flex);
                    fp::Poly beta = fp::polmod(b.beta, Tbit);
                    fp::Poly a_poly = fp::polmod(fp::Poly::x(p) - beta.scaled(gamma), Tbit);
                    out.n_horiz_bit += a_poly.is_zero()
                                           ? Tbit.degree()
                                           : fp::Poly::gcd(Tbit, a_poly).degree();
                    // a genuine bitangent has two distinct tangency points
                    fp::Poly d2 = d.disc2.eval_mod(Tbit, beta);
                    if (fp::Poly::gcd(Tbit, d2).degree() != 0)
                        throw std::logic_error("bitangent split inconsistent");
                }
            }
            out.n_bit = out.n_all - out.n_flex;
            out.elim_deg = out.n_all;
            return out;
        } catch (const ShearBad&) {
            continue;
        }
    }
    throw NonGeneric("tangency count: no admissible shear found");
}

// Lines X = c (chart-1 slope zero), handled as a univariate family.
AffineCounts run_vertical(const PlaneCurve& cp, u64 p) {
    u64 c4 = cp.form().eval({Scalar::residue(0, p), Scalar::residue(1, p), Scalar::residue(0, p)})
                 .residue_value();
    if (c4 == 0) throw NonGeneric("vertical family: curve passes through (0:1:0)");
    const size_t N = 29;
    std::vector<u64> xs;
    std::vector<u64> vS0(N), vS1(N), vD2(N), v22(N), v21(N), v20(N);
    // P(t) = f(c, t, 1)
    for (size_t i = 0; i < N; ++i) {
        u64 c = static_cast<u64>(i + 1);
        xs.push_back(c);
        std::vector<u64> pc(5, 0);
        for (int k = 0; k <= 4; ++k) {
            // coefficient of t^k in f(c, t, 1)
            u64 acc = 0;
            for (auto& [e, co] : cp.form().terms()) {
                if (e[1] != static_cast<std::uint32_t>(k)) continue;
                acc = fp::add(acc, fp::mul(co.residue_value(), fp::pow(c, e[0], p), p), p);
            }
            pc[static_cast<size_t>(k)] = acc;
        }
        ChainVals cv = chain_of(pc, p);
        vS0[i] = cv.s0;
        vS1[i] = cv.s1;
        vD2[i] = cv.disc2;
        v22[i] = cv.s22;
        v21[i] = cv.s21;
        v20[i] = cv.s20;
    }
    fp::Poly S0 = fp::interpolate(p, xs, vS0), S1 = fp::interpolate(p, xs, vS1);
    fp::Poly D2 = fp::interpolate(p, xs, vD2);
    AffineCounts out;
    if (S0.is_zero() || S1.is_zero()) throw std::runtime_error("vertical family degenerate");
    fp::Poly g = fp::Poly::gcd(S0, S1);
    if (g.degree() <= 0) return out;
    fp::Poly T = g.squarefree_part();
    fp::Poly gf = D2.is_zero() ? T : fp::Poly::gcd(T, D2);
    out.n_all = T.degree();
    out.n_flex = gf.degree();
    out.n_bit = out.n_all - out.n_flex;
    out.elim_deg = out.n_all;
    fp::Poly h = gf;
    for (auto* w : {&v22, &v21, &v20}) {
        if (h.degree() <= 0) break;
        fp::Poly q = fp::interpolate(p, xs, *w);
        fp::Poly v = fp::polmod(q, h);
        h = v.is_zero() ? h : fp::Poly::gcd(h, v);
    }
    out.n_hyper = std::max(0, h.degree());
    return out;
}

struct InfinityLine {
    bool is_bitangent = false, is_flex = false, is_hyper = false;
};

InfinityLine infinity_line(const PlaneCurve& cp, u64 p) {
    // multiplicity profile of the binary form f(X, Y, 0)
    std::vector<u64> c(5, 0);
    for (auto& [e, co] : cp.form().terms())
        if (e[2] == 0) c[e[1]] = co.residue_value();
    fp::Poly u(p, c); // in t = Y/X
    long inf_mult = 4 - std::max(0, u.degree()); // root at (0:1:0)
    std::map<long, long> prof = u.is_zero() ? std::map<long, long>{} : fp::multiplicity_profile(u);
    // simple roots of u of multiplicity 1 are counted by squarefree structure;
    // add the X = 0 direction
    if (inf_mult > 0) prof[inf_mult] += 1;
    std::vector<long> mults;
    for (auto& [m, n] : prof)
        for (long i = 0; i < n; ++i) mults.push_back(m);
    std::sort(mults.begin(), mults.end());
    InfinityLine r;
    if (mults == std::vector<long>{2, 2}) r.is_bitangent = true;
    if (mults == std::vector<long>{1, 3}) r.is_flex = true;
    if (mults == std::vector<long>{4}) {
        r.is_hyper = true;
        r.is_flex = true;
    }
    return r;
}

struct PrimeTangencyCounts {
    long bit = 0, flex = 0, hyper = 0, all = 0;
    long bit_affine = 0, bit_vertical = 0, bit_infinity = 0;
    long elim0 = 0;
};

PrimeTangencyCounts full_tangency_count(const PlaneCurve& cq, u64 p, u64& rng) {
    PlaneCurve cp = cq.domain() == Domain::Fp ? cq : cq.reduce_mod(p);
    AffineCounts ch0 = run_affine_chart(cp, p, rng, 0);
    AffineCounts ch1 = run_affine_chart(cp, p, rng, 1);
    AffineCounts vert = run_vertical(cp, p);
    InfinityLine inf = infinity_line(cp, p);
    // chart-1 lines = (chart-0 lines with nonzero slope) + vertical lines;
    // this makes the cross-chart deduplication an exact identity
    if (ch1.n_bit != ch0.n_bit - ch0.n_horiz_bit + vert.n_bit)
        throw NonGeneric("cross-chart bitangent accounting mismatch");
    PrimeTangencyCounts out;
    out.bit_affine = ch0.n_bit;
    out.bit_vertical = vert.n_bit;
    out.bit_infinity = inf.is_bitangent ? 1 : 0;
    out.bit = out.bit_affine + out.bit_vertical + out.bit_infinity;
    out.flex = ch0.n_flex + vert.n_flex + (inf.is_flex ? 1 : 0);
    out.hyper = ch0.n_hyper + vert.n_hyper + (inf.is_hyper ? 1 : 0);
    out.all = out.bit + out.flex;
    out.elim0 = ch0.elim_deg;
    return out;
}

} // namespace

TangencySystemCount tangency_count_mod_p(const PlaneCurve& c, fp::u64 p, fp::u64& rng, int chart) {
    PlaneCurve cp = c.domain() == Domain::Fp ? c : c.reduce_mod(p);
    AffineCounts a = run_affine_chart(cp, p, rng, chart);
    TangencySystemCount out;
    out.n_all = a.n_all;
    out.n_flex = a.n_flex;
    out.n_bitangent = a.n_bit;
    out.n_horizontal_bitangent = a.n_horiz_bit;
    out.hyperflex_present = a.n_hyper > 0;
    out.eliminant_degree = a.elim_deg;
    return out;
}

LineCountReport count_bitangents(const PlaneCurve& c, const std::vector<fp::u64>& primes,
                                 fp::u64 seed, bool strict) {
    if (c.degree() != 4) throw std::invalid_argument("count_bitangents: not a quartic");
    if (c.domain() != Domain::Q)
        throw std::invalid_argument("count_bitangents: expects rational coefficients");
    if (primes.size() < 2) throw std::invalid_argument("count_bitangents: need two check primes");
    fp::u64 rng = seed ^ 0x9e3779b97f4a7c15ull;
    if (!certify_smooth(c, primes[0], rng)) throw std::domain_error("count_bitangents: curve not certified smooth");

    LineCountReport rep;
    for (int attempt = 0; attempt < 8; ++attempt) {
        try {
            // an independent coordinate frame per prime: frame-dependent
            // degenerations then surface as cross-prime disagreement
            std::vector<PrimeTangencyCounts> per;
            for (fp::u64 p : primes) {
                PlaneCurve cr = c.transformed(random_gl3(rng));
                per.push_back(full_tangency_count(cr, p, rng));
            }
            for (size_t i = 1; i < per.size(); ++i)
                if (per[i].bit != per[0].bit || per[i].flex != per[0].flex ||
                    per[i].hyper != per[0].hyper)
                    throw NonGeneric("check primes disagree");
            const auto& r0 = per[0];
            if (strict && r0.hyper > 0)
                throw std::domain_error("count_bitangents: hyperflex present in strict mode");
            rep.generic = r0.hyper == 0;
            // a hyperflex line is a bitangent whose two tangency points
            // collide; it still absorbs exactly one of the 28
            rep.distinct = r0.bit + r0.hyper;
            rep.total_with_multiplicity = rep.distinct;
            rep.hyperflex_lines = r0.hyper;
            rep.multiplicity_partition.clear();
            if (rep.distinct > 0) rep.multiplicity_partition[1] = rep.distinct;
            rep.per_chart["affine"] = r0.bit_affine;
            rep.per_chart["vertical"] = r0.bit_vertical;
            rep.per_chart["infinity"] = r0.bit_infinity;
            rep.eliminant_degrees = {r0.elim0};
            rep.confirmed_by_primes = primes;
            rep.resamples = attempt;
            return rep;
        } catch (const NonGeneric&) {
            continue;
        }
    }
    throw std::runtime_error("count_bitangents: genericity failures persisted");
}

namespace {

long flex_count_over_Q(const PlaneCurve& c, fp::u64& rng, std::map<long, long>& partition,
                       long& total) {
    for (int attempt = 0; attempt < 8; ++attempt) {
        PlaneCurve g = c.transformed(random_gl3(rng));
        PlaneCurve h = g.hessian();
        // no flex at infinity: binary forms f(X,Y,0), H(X,Y,0) without common root
        {
            UniPoly fu{{}, Domain::Q, 0}, hu{{}, Domain::Q, 0};
            fu.c.assign(5, Scalar::integer(0));
            hu.c.assign(7, Scalar::integer(0));
            for (auto& [e, co] : g.form().terms())
                if (e[2] == 0) fu.c[e[1]] = co;
            for (auto& [e, co] : h.form().terms())
                if (e[2] == 0) hu.c[e[1]] = co;
            fu.trim();
            hu.trim();
            bool common_at_x0 = fu.degree() < 4 && hu.degree() < 6;
            if (fu.is_zero() || hu.is_zero() || common_at_x0 ||
                UniPoly::gcd(fu, hu).degree() > 0)
                continue;
        }
        auto one = MultiPoly::constant(PlaneCurve::vars(), Scalar::integer(1));
        auto var = [&](size_t i) { return MultiPoly::variable(PlaneCurve::vars(), i, Domain::Q); };
        std::vector<MultiPoly> im{var(0), var(1), one};
        MultiPoly fa = g.form().substitute(im), ha = h.form().substitute(im);
        MultiPoly E = exact::resultant(fa, ha, 1);
        if (E.degree_in(0) != 24) continue;
        UniPoly eu = exact::to_unipoly(E, 0);
        // multiplicity profile over Q via the iterated gcd chain
        std::map<long, long> prof;
        {
            UniPoly hh = eu;
            std::vector<long> ge;
            while (hh.degree() > 0) {
                UniPoly gg = UniPoly::gcd(hh, hh.derivative());
                UniPoly q, r;
                UniPoly::divrem(hh, gg, q, r);
                ge.push_back(q.degree());
                hh = gg;
            }
            for (size_t k = 0; k < ge.size(); ++k) {
                long exact = ge[k] - (k + 1 < ge.size() ? ge[k + 1] : 0);
                if (exact > 0) prof[static_cast<long>(k + 1)] = exact;
            }
        }
        long distinct = 0, tot = 0;
        for (auto& [m, n] : prof) {
            distinct += n;
            tot += m * n;
        }
        if (tot != 24) continue;
        partition = prof;
        total = tot;
        return distinct;
    }
    throw std::runtime_error("count_flexes: no separating projection found over Q");
}

} // namespace

LineCountReport count_flexes(const PlaneCurve& c, const std::vector<fp::u64>& primes,
                             fp::u64 seed) {
    if (c.degree() != 4) throw std::invalid_argument("count_flexes: not a quartic");
    if (c.domain() != Domain::Q)
        throw std::invalid_argument("count_flexes: expects rational coefficients");
    fp::u64 rng = seed ^ 0xc2b2ae3d27d4eb4full;
    if (!certify_smooth(c, primes.empty() ? 2147483647ull : primes[0], rng))
        throw std::domain_error("count_flexes: curve not certified smooth");
    LineCountReport rep;
    // A projection collision merges distinct solutions, so the correct
    // profile is the one with the maximal distinct count; require it from
    // two independent projections.
    std::map<long, long> prof;
    long total = 0, d1 = -1;
    int confirmations = 0;
    for (int round = 0; round < 8 && confirmations < 2; ++round) {
        std::map<long, long> pr;
        long tot = 0;
        long dist = flex_count_over_Q(c, rng, pr, tot);
        if (dist > d1) {
            d1 = dist;
            prof = pr;
            total = tot;
            confirmations = 1;
        } else if (dist == d1 && pr == prof) {
            ++confirmations;
        }
    }
    if (confirmations < 2) throw std::runtime_error("count_flexes: projections never agreed");
    // check primes: reduce and recount; an unseparating projection mod p just
    // triggers another attempt
    for (fp::u64 p : primes) {
        fp::u64 rr = rng ^ p;
        PlaneCurve cp = c.reduce_mod(p);
        bool agreed = false;
        for (int attempt = 0; attempt < 8 && !agreed; ++attempt) {
            PlaneCurve g = cp.transformed(random_gl3(rr));
            PlaneCurve h = g.hessian();
            auto one = MultiPoly::constant(PlaneCurve::vars(), Scalar::one(Domain::Fp, p));
            auto var = [&](size_t i) {
                return MultiPoly::variable(PlaneCurve::vars(), i, Domain::Fp, p);
            };
            std::vector<MultiPoly> im{var(0), var(1), one};
            MultiPoly E = exact::resultant(g.form().substitute(im), h.form().substitute(im), 1);
            if (E.degree_in(0) != 24) continue;
            UniPoly eu = exact::to_unipoly(E, 0);
            std::vector<u64> cc;
            for (int i = 0; i <= eu.degree(); ++i) cc.push_back(eu.coeff(i).residue_value());
            if (fp::multiplicity_profile(fp::Poly(p, cc)) == prof) agreed = true;
        }
        if (!agreed) throw std::runtime_error("count_flexes: check prime disagrees with Q");
    }
    rep.total_with_multiplicity = total;
    rep.distinct = d1;
    rep.multiplicity_partition = prof;
    rep.per_chart["affine"] = d1;
    rep.eliminant_degrees = {24};
    rep.confirmed_by_primes = primes;
    rep.generic = (d1 == 24);
    return rep;
}

PluckerData plucker_data(const PlaneCurve& c, const std::vector<fp::u64>& primes, fp::u64 seed) {
    PluckerData d;
    long n = c.degree();
    d.dual_degree = n * (n - 1);
    LineCountReport fl = count_flexes(c, primes, seed);
    LineCountReport bt = count_bitangents(c, primes, seed + 1, /*strict=*/false);
    d.dual_cusps = fl.distinct;
    d.dual_nodes = bt.distinct;
    d.genus_check =
        (d.dual_degree - 1) * (d.dual_degree - 2) / 2 - d.dual_nodes - d.dual_cusps;
    // hyperflexes merge nodes and cusps of the dual into worse singularities;
    // the naive genus bookkeeping then no longer applies
    d.generic = fl.generic && bt.generic && fl.distinct == 24 && bt.distinct == 28;
    return d;
}

} // namespace prymlab::quartic

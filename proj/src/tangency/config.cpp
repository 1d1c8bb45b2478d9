#include "prymlab/tangency/config.hpp"

#include <stdexcept>

namespace prymlab::tangency {

using exact::Domain;
using exact::MultiPoly;
using exact::UniPoly;
using quartic::certify_smooth;
using quartic::conic_is_smooth;
using quartic::random_gl3;
using fp::u64;

const PlaneCurve& TangencyConfig::dual_f4() const {
    if (!dual_f4_q) dual_f4_q = quartic::dual_curve_eliminant(f4);
    return *dual_f4_q;
}
const PlaneCurve& TangencyConfig::dual_g4() const {
    if (!dual_g4_q) dual_g4_q = quartic::dual_curve_eliminant(g4);
    return *dual_g4_q;
}

namespace {

// Res_Y of the affine slices, as a univariate over Q; retries random frames
// until the full Bezout degree is reached (no solutions at infinity).
UniPoly affine_intersection_eliminant(const PlaneCurve& a, const PlaneCurve& b, fp::u64& rng,
                                      long expected_degree) {
    for (int attempt = 0; attempt < 10; ++attempt) {
        auto m = random_gl3(rng);
        PlaneCurve ar = a.transformed(m), br = b.transformed(m);
        auto one = MultiPoly::constant(PlaneCurve::vars(), Scalar::integer(1));
        auto var = [&](size_t i) { return MultiPoly::variable(PlaneCurve::vars(), i, Domain::Q); };
        std::vector<MultiPoly> im{var(0), var(1), one};
        MultiPoly fa = ar.form().substitute(im), fb = br.form().substitute(im);
        if (fa.degree_in(1) != a.degree() || fb.degree_in(1) != b.degree()) continue;
        MultiPoly E = exact::resultant(fa, fb, 1);
        if (E.is_zero() || E.degree_in(0) != expected_degree) continue;
        return exact::to_unipoly(E, 0);
    }
    throw std::runtime_error("intersection eliminant: no clean frame found");
}

std::map<long, long> profile_over_Q(const UniPoly& e) {
    std::map<long, long> prof;
    UniPoly h = e;
    std::vector<long> ge;
    while (h.degree() > 0) {
        UniPoly g = UniPoly::gcd(h, h.derivative());
        UniPoly q, r;
        UniPoly::divrem(h, g, q, r);
        ge.push_back(q.degree());
        h = g;
    }
    for (size_t k = 0; k < ge.size(); ++k) {
        long exact = ge[k] - (k + 1 < ge.size() ? ge[k + 1] : 0);
        if (exact > 0) prof[static_cast<long>(k + 1)] = exact;
    }
    return prof;
}

} // namespace

TangencyConfig build_config(const PlaneCurve& f4, const PlaneCurve& q,
                            const std::vector<fp::u64>& primes, fp::u64 seed) {
    if (f4.degree() != 4) throw std::invalid_argument("build_config: f4 is not a quartic");
    if (q.degree() != 2) throw std::invalid_argument("build_config: q is not a conic");
    if (!conic_is_smooth(q)) throw std::domain_error("build_config: conic is singular");
    fp::u64 rng = seed ^ 0xa5a5a5a55a5a5a5aull;

    MultiPoly q2 = q.form() * q.form();
    // degenerate pencil: q^2 proportional to f4
    {
        const auto& [e0, c0] = *q2.terms().begin();
        Scalar ratio = f4.form().coeff(e0);
        if (!ratio.is_zero() && q2.scaled(ratio / c0) == f4.form())
            throw std::domain_error("build_config: pencil degenerate (f4 proportional to q^2)");
    }
    MultiPoly g4form = q2 - f4.form();
    if (g4form.is_zero() || g4form.total_degree() != 4 || !g4form.is_homogeneous())
        throw std::domain_error("build_config: q^2 - f4 is not a quartic");

    TangencyConfig cfg;
    cfg.f4 = f4;
    cfg.q = q;
    cfg.g4 = PlaneCurve(g4form);
    // pencil witness (1,1): q^2 - (f4 + g4) == 0
    if (!(q2 - (cfg.f4.form() + cfg.g4.form())).is_zero())
        throw std::logic_error("build_config: pencil witness failed");

    if (!certify_smooth(cfg.f4, primes.at(0), rng))
        throw std::domain_error("build_config: f4 not certified smooth");
    if (!certify_smooth(cfg.g4, primes.at(0), rng))
        throw std::domain_error("build_config: g4 singular (regenerate with a new seed)");

    // tangency scheme: f4 and q meet in 8 distinct points,
    // f4 and g4 in the same 8 points with multiplicity 2 (Bezout 16)
    UniPoly e1 = affine_intersection_eliminant(cfg.f4, cfg.q, rng, 8);
    if (profile_over_Q(e1) != std::map<long, long>{{1, 8}})
        throw std::domain_error("build_config: f4 and q are not transverse (8 distinct points)");
    UniPoly e2 = affine_intersection_eliminant(cfg.f4, cfg.g4, rng, 16);
    if (profile_over_Q(e2) != std::map<long, long>{{2, 8}})
        throw std::domain_error("build_config: intersection structure is not 8 x 2");
    return cfg;
}

TangencyConfig random_config(fp::u64 seed, long bound, const std::vector<fp::u64>& primes,
                             long* resamples) {
    fp::u64 st = seed;
    long tries = 0;
    for (;;) {
        PlaneCurve f4 = quartic::random_ternary_form(st, 4, bound);
        PlaneCurve q = quartic::random_ternary_form(st, 2, bound);
        try {
            TangencyConfig cfg = build_config(f4, q, primes, seed + 17 * tries);
            if (resamples) *resamples = tries;
            return cfg;
        } catch (const std::exception&) {
            ++tries;
            if (tries > 200) throw std::runtime_error("random_config: persistent rejection");
        }
    }
}

std::string to_string(FiberCase c) {
    switch (c) {
        case FiberCase::smooth: return "smooth";
        case FiberCase::i: return "i";
        case FiberCase::ii: return "ii";
        case FiberCase::iii: return "iii";
        case FiberCase::iv: return "iv";
        case FiberCase::v: return "v";
        case FiberCase::vi: return "vi";
        case FiberCase::vii: return "vii";
        case FiberCase::viii: return "viii";
        case FiberCase::unclassifiable: return "unclassifiable";
    }
    return "?";
}

namespace {

// distinct / double-point structure of the intersection of the two duals,
// computed mod p from the degree-144 eliminant
struct DualMeet {
    long distinct = 0;
    long doubled = 0;
};

DualMeet dual_intersection_mod_p(const TangencyConfig& cfg, u64 p, fp::u64& rng) {
    for (int attempt = 0; attempt < 8; ++attempt) {
        auto m = random_gl3(rng);
        PlaneCurve a = cfg.f4.reduce_mod(p);
        PlaneCurve b = cfg.g4.reduce_mod(p);
        PlaneCurve da = quartic::dual_curve_eliminant(a).transformed(m);
        PlaneCurve db = quartic::dual_curve_eliminant(b).transformed(m);
        // affine slices
        auto one = MultiPoly::constant(PlaneCurve::vars(), Scalar::one(Domain::Fp, p));
        auto var = [&](size_t i) { return MultiPoly::variable(PlaneCurve::vars(), i, Domain::Fp, p); };
        std::vector<MultiPoly> im{var(0), var(1), one};
        MultiPoly fa = da.form().substitute(im), fb = db.form().substitute(im);
        if (fa.degree_in(1) != 12 || fb.degree_in(1) != 12) continue;

        // eliminate Y by interpolation over x-samples
        auto ac = fa.coeffs_in(1), bc = fb.coeffs_in(1);
        auto eval_col = [&](const std::vector<MultiPoly>& cs, u64 x0) {
            std::vector<u64> v;
            for (auto& cmp : cs) {
                std::vector<Scalar> pt{Scalar::residue(x0, p), Scalar::residue(0, p),
                                       Scalar::residue(0, p)};
                v.push_back(cmp.eval(pt).residue_value());
            }
            return fp::Poly(p, v);
        };
        std::vector<u64> xs, vs;
        u64 x0 = 0;
        while (xs.size() < 289 && x0 < 289 * 4) {
            ++x0;
            fp::Poly pa = eval_col(ac, x0), pb = eval_col(bc, x0);
            if (pa.degree() != 12 || pb.degree() != 12) continue; // keep specialization exact
            xs.push_back(x0);
            vs.push_back(fp::Poly::resultant(pa, pb));
        }
        if (xs.size() < 289) continue;
        fp::Poly E = fp::interpolate(p, xs, vs);
        if (E.degree() != 144) continue;
        auto prof = fp::multiplicity_profile(E);
        long distinct = 0, doubled = 0, total = 0;
        for (auto& [mult, n] : prof) {
            distinct += n;
            total += mult * n;
            if (mult == 2) doubled += n;
        }
        if (total != 144) continue;
        // projection must separate: profile {1:128, 2:8} for a generic pair
        if (prof == std::map<long, long>{{1, 128}, {2, 8}}) return {distinct, doubled};
    }
    throw std::runtime_error("dual intersection: structure 128 + 8x2 not certified");
}

} // namespace

StrataReport enumerate_strata(const TangencyConfig& cfg, const std::vector<fp::u64>& primes,
                              fp::u64 seed) {
    StrataReport rep;
    fp::u64 rng = seed ^ 0x0ddba11dull;

    quartic::LineCountReport fB = quartic::count_flexes(cfg.f4, primes, seed + 1);
    quartic::LineCountReport bB = quartic::count_bitangents(cfg.f4, primes, seed + 2);
    quartic::LineCountReport fD = quartic::count_flexes(cfg.g4, primes, seed + 3);
    quartic::LineCountReport bD = quartic::count_bitangents(cfg.g4, primes, seed + 4);
    if (!(fB.distinct == 24 && fD.distinct == 24 && bB.distinct == 28 && bD.distinct == 28))
        throw std::domain_error("enumerate_strata: non-generic configuration (counts)");

    // tangency points of the pair: distinct intersection of f4 with the conic
    UniPoly e1 = affine_intersection_eliminant(cfg.f4, cfg.q, rng, 8);
    long tangency_points = 0;
    {
        UniPoly q0, r0;
        UniPoly g = UniPoly::gcd(e1, e1.derivative());
        UniPoly::divrem(e1, g, q0, r0);
        tangency_points = q0.degree();
    }
    if (tangency_points != 8) throw std::domain_error("enumerate_strata: tangency scheme not 8 points");

    // dual intersection structure mod both primes
    DualMeet meet{};
    for (fp::u64 p : primes) {
        DualMeet m = dual_intersection_mod_p(cfg, p, rng);
        if (meet.distinct == 0) {
            meet = m;
        } else if (meet.distinct != m.distinct || meet.doubled != m.doubled) {
            throw std::runtime_error("enumerate_strata: check primes disagree on dual meet");
        }
    }
    long transversal = meet.distinct - meet.doubled; // 136 - 8
    rep.dual_intersection_distinct = meet.distinct;
    rep.dual_intersection_double = meet.doubled;
    rep.identity_144 = (12 * 12 - 2 * meet.doubled == transversal) && transversal == 128;

    auto rec = [&](const char* label, const char* desc, int dim, long card, FiberCase c) {
        rep.strata.push_back(StratumRecord{label, desc, dim, card, c});
    };
    rec("Pi0", "complement of the two dual curves", 2, -1, FiberCase::smooth);
    rec("Pi1", "dual of the second quartic minus the singular set", 1, -1, FiberCase::i);
    rec("Pi2", "cusps of the dual of the second quartic", 0, fD.distinct, FiberCase::ii);
    rec("Pi3", "dual of the branch quartic minus the singular set", 1, -1, FiberCase::iii);
    rec("Pi4", "nodes of the dual of the second quartic", 0, bD.distinct, FiberCase::iv);
    rec("Pi5", "cusps of the dual of the branch quartic", 0, fB.distinct, FiberCase::v);
    rec("Pi6", "transversal intersections of the two duals", 0, transversal, FiberCase::vi);
    rec("Pi7", "tangency points of the two duals", 0, tangency_points, FiberCase::vii);
    rec("Pi8", "nodes of the dual of the branch quartic", 0, bB.distinct, FiberCase::viii);
    rep.confirmed_by_primes = primes;
    return rep;
}

namespace {

// 2x2 Hessian block of the dehomogenized form at a singular point.
// det != 0 -> node; det == 0 with nonzero block -> cusp-type.
FiberCase node_or_cusp(const PlaneCurve& dual, const std::array<Scalar, 3>& t, FiberCase node_case,
                       FiberCase cusp_case) {
    size_t chart = 3;
    for (size_t i = 0; i < 3; ++i)
        if (!t[i].is_zero()) chart = i;
    if (chart == 3) throw std::invalid_argument("classify_member: zero point");
    std::array<size_t, 2> rest{};
    size_t k = 0;
    for (size_t i = 0; i < 3; ++i)
        if (i != chart) rest[k++] = i;
    std::vector<Scalar> pt{t[0], t[1], t[2]};
    Scalar h00 = dual.form().derivative(rest[0]).derivative(rest[0]).eval(pt);
    Scalar h01 = dual.form().derivative(rest[0]).derivative(rest[1]).eval(pt);
    Scalar h11 = dual.form().derivative(rest[1]).derivative(rest[1]).eval(pt);
    Scalar det = h00 * h11 - h01 * h01;
    if (!det.is_zero()) return node_case;
    if (h00.is_zero() && h01.is_zero() && h11.is_zero()) return FiberCase::unclassifiable;
    return cusp_case;
}

} // namespace

FiberCase classify_member(const TangencyConfig& cfg, const std::array<Scalar, 3>& t) {
    const PlaneCurve& B = cfg.dual_f4();
    const PlaneCurve& D = cfg.dual_g4();
    std::vector<Scalar> pt{t[0], t[1], t[2]};
    Scalar bv = B.form().eval(pt), dv = D.form().eval(pt);
    bool on_b = bv.is_zero(), on_d = dv.is_zero();
    if (!on_b && !on_d) return FiberCase::smooth;

    auto grad = [&](const PlaneCurve& c) {
        std::array<Scalar, 3> g{c.form().derivative(0).eval(pt), c.form().derivative(1).eval(pt),
                                c.form().derivative(2).eval(pt)};
        return g;
    };
    auto is_zero3 = [](const std::array<Scalar, 3>& g) {
        return g[0].is_zero() && g[1].is_zero() && g[2].is_zero();
    };

    if (on_d && !on_b) {
        auto g = grad(D);
        if (!is_zero3(g)) return FiberCase::i;
        return node_or_cusp(D, t, FiberCase::iv, FiberCase::ii);
    }
    if (on_b && !on_d) {
        auto g = grad(B);
        if (!is_zero3(g)) return FiberCase::iii;
        return node_or_cusp(B, t, FiberCase::viii, FiberCase::v);
    }
    // on both duals
    auto gb = grad(B), gd = grad(D);
    if (is_zero3(gb) || is_zero3(gd)) return FiberCase::unclassifiable;
    std::array<Scalar, 3> cross{gb[1] * gd[2] - gb[2] * gd[1], gb[2] * gd[0] - gb[0] * gd[2],
                                gb[0] * gd[1] - gb[1] * gd[0]};
    bool parallel = cross[0].is_zero() && cross[1].is_zero() && cross[2].is_zero();
    return parallel ? FiberCase::vii : FiberCase::vi;
}

} // namespace prymlab::tangency

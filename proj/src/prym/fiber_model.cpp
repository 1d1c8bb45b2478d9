#include "prymlab/prym/fiber_model.hpp"

#include <sstream>
#include <stdexcept>

namespace prymlab::prym {

SpaceDescriptor SpaceDescriptor::point() { return {Kind::point, 0, {}}; }
SpaceDescriptor SpaceDescriptor::C() { return {Kind::affine_line, 0, {}}; }
SpaceDescriptor SpaceDescriptor::Cstar() { return {Kind::torus, 0, {}}; }
SpaceDescriptor SpaceDescriptor::E() { return {Kind::elliptic, 0, {}}; }
SpaceDescriptor SpaceDescriptor::P1() { return {Kind::p1, 0, {}}; }
SpaceDescriptor SpaceDescriptor::finite(long n) { return {Kind::finite, n, {}}; }
SpaceDescriptor SpaceDescriptor::product(SpaceDescriptor a, SpaceDescriptor b) {
    return {Kind::product, 0, {std::move(a), std::move(b)}};
}
SpaceDescriptor SpaceDescriptor::disjoint(long copies, SpaceDescriptor x) {
    return {Kind::disjoint, copies, {std::move(x)}};
}
SpaceDescriptor SpaceDescriptor::extension(SpaceDescriptor base, SpaceDescriptor fiber) {
    return {Kind::extension, 0, {std::move(base), std::move(fiber)}};
}

long SpaceDescriptor::euler() const {
    switch (kind) {
        case Kind::point: return 1;
        case Kind::affine_line: return 1;
        case Kind::torus: return 0;
        case Kind::elliptic: return 0;
        case Kind::p1: return 2;
        case Kind::finite: return n;
        case Kind::product: return parts[0].euler() * parts[1].euler();
        case Kind::disjoint: return n * parts[0].euler();
        case Kind::extension: return parts[0].euler() * parts[1].euler();
    }
    throw std::logic_error("SpaceDescriptor: unknown atom");
}

std::string SpaceDescriptor::to_string() const {
    switch (kind) {
        case Kind::point: return "point";
        case Kind::affine_line: return "C";
        case Kind::torus: return "C*";
        case Kind::elliptic: return "E";
        case Kind::p1: return "P1";
        case Kind::finite: return "finite(" + std::to_string(n) + ")";
        case Kind::product: return parts[0].to_string() + " x " + parts[1].to_string();
        case Kind::disjoint:
            return std::to_string(n) + " copies of (" + parts[0].to_string() + ")";
        case Kind::extension:
            return "extension of " + parts[0].to_string() + " by " + parts[1].to_string();
    }
    return "?";
}

long PrymFiberModel::total_euler() const {
    long t = 0;
    for (auto& s : strata) t += s.euler;
    return t;
}

namespace {

Scalar rnd_nonzero(fp::u64& rng) {
    long v = 0;
    while (v == 0 || v == 1 || v == -1)
        v = static_cast<long>(fp::splitmix64(rng) % 41) - 20;
    return Scalar::rational(v, 1 + static_cast<long>(fp::splitmix64(rng) % 5));
}

// Involution rules on gluing parameters:
//  - node fixed by the covering involution with swapped branches:
//    tau inverts the constant; additive (cuspidal) parameter flips sign
//  - pair of nodes swapped by the covering involution: tau exchanges them
//  - duality inverts every multiplicative constant / negates additive ones
void fail(const char* what) { throw std::logic_error(std::string("fiber model: ") + what); }

void verify_case_i(fp::u64& rng) { // one invariant node: kappa = identity on C*
    for (int t = 0; t < 20; ++t) {
        Scalar l = rnd_nonzero(rng);
        Scalar tau = l.inv();
        Scalar kappa = tau.inv();
        if (!(kappa == l)) fail("case i: fiber C* not fixed");
    }
}

void verify_case_ii(fp::u64& rng) { // one cusp: kappa = identity on C
    for (int t = 0; t < 20; ++t) {
        Scalar b = rnd_nonzero(rng);
        Scalar kappa = -(-b);
        if (!(kappa == b)) fail("case ii: fiber C not fixed");
    }
}

void verify_case_iii(fp::u64& rng) { // two swapped nodes: fixed iff l1 l2 = 1
    for (int t = 0; t < 20; ++t) {
        Scalar l1 = rnd_nonzero(rng);
        Scalar l2 = l1.inv();
        // kappa (l1, l2) = (1/l2, 1/l1)
        if (!(l2.inv() == l1 && l1.inv() == l2)) fail("case iii: locus l1 l2 = 1 not fixed");
        Scalar m2 = rnd_nonzero(rng);
        if (m2 == l1.inv()) continue;
        if (m2.inv() == l1 && l1.inv() == m2) fail("case iii: fixed locus too large");
    }
}

void verify_case_iv(fp::u64& rng) {
    // two invariant nodes: tau inverts both constants, duality inverts again,
    // so kappa is the identity on the (C*)^2 of gluings; the base condition
    // is 2-torsion on the elliptic normalization: 2^2 = 4 components
    for (int t = 0; t < 20; ++t) {
        Scalar l1 = rnd_nonzero(rng), l2 = rnd_nonzero(rng);
        Scalar k1 = l1.inv().inv(), k2 = l2.inv().inv();
        if (!(k1 == l1 && k2 == l2)) fail("case iv: gluing torus not fixed");
    }
}

void verify_case_v(fp::u64& rng) { // two swapped cusps: fixed iff b1 + b2 = 0
    for (int t = 0; t < 20; ++t) {
        Scalar b1 = rnd_nonzero(rng);
        Scalar b2 = -b1;
        // kappa (b1, b2) = (-b2, -b1)
        if (!(-b2 == b1 && -b1 == b2)) fail("case v: locus b1 + b2 = 0 not fixed");
        Scalar c2 = rnd_nonzero(rng);
        if (c2 == -b1) continue;
        if (-c2 == b1 && -b1 == c2) fail("case v: fixed locus too large");
    }
}

void verify_case_vi(fp::u64& rng) {
    // nodes: one invariant (l0), one swapped pair (l1, l2):
    // kappa (l0, l1, l2) = (l0, 1/l2, 1/l1)
    auto kappa = [](const std::array<Scalar, 3>& l) {
        return std::array<Scalar, 3>{l[0], l[2].inv(), l[1].inv()};
    };
    for (int t = 0; t < 20; ++t) {
        Scalar l0 = rnd_nonzero(rng), l1 = rnd_nonzero(rng);
        std::array<Scalar, 3> on{l0, l1, l1.inv()};
        auto k = kappa(on);
        if (!(k[0] == on[0] && k[1] == on[1] && k[2] == on[2]))
            fail("case vi: torus l1 l2 = 1 not fixed");
        Scalar bad = rnd_nonzero(rng);
        if (bad == l1.inv()) continue;
        std::array<Scalar, 3> off{l0, l1, bad};
        auto kb = kappa(off);
        if (kb[1] == off[1] && kb[2] == off[2]) fail("case vi: fixed locus too large");
    }
}

void verify_case_vii(fp::u64& rng) {
    // tacnode: kappa (l, b) = (a/l, a b / l^2) with a the normalization
    // constant; taking a = w^2 the fixed locus is {l = +-w, b free}
    for (int t = 0; t < 20; ++t) {
        Scalar w = rnd_nonzero(rng);
        Scalar a = w * w;
        for (Scalar l : {w, -w}) {
            Scalar b = rnd_nonzero(rng);
            Scalar kl = a / l, kb = a * b / (l * l);
            if (!(kl == l && kb == b)) fail("case vii: two affine lines not fixed");
        }
        Scalar l = rnd_nonzero(rng);
        if (l == w || l == -w) continue;
        if (a / l == l) fail("case vii: fixed locus too large");
        // involutivity of the model map
        Scalar b = rnd_nonzero(rng);
        Scalar kl = a / l, kb = a * b / (l * l);
        Scalar kkl = a / kl, kkb = a * kb / (kl * kl);
        if (!(kkl == l && kkb == b)) fail("case vii: model map is not an involution");
    }
}

void verify_case_viii(fp::u64& rng, const NodeCoords& coords) {
    // the reducible fiber: fixed torus of fully glued twist-0 sheaves is
    // exactly {l1 l2 = l3 l4} modulo scale
    for (int t = 0; t < 50; ++t) {
        Scalar l1 = rnd_nonzero(rng), l2 = rnd_nonzero(rng), l3 = rnd_nonzero(rng);
        Scalar l4 = (l1 * l2) / l3;
        std::array<NodeState, 4> on{NodeState{true, l1}, NodeState{true, l2},
                                    NodeState{true, l3}, NodeState{true, l4}};
        GluingSheaf F(coords, 0, 0, on, 0);
        if (!kappa_fixed(F)) fail("case viii: torus l1 l2 = l3 l4 not fixed");
        Scalar bad = rnd_nonzero(rng);
        if (bad * l3 == l1 * l2) continue;
        std::array<NodeState, 4> off{NodeState{true, l1}, NodeState{true, l2},
                                     NodeState{true, l3}, NodeState{true, bad}};
        if (kappa_fixed(GluingSheaf(coords, 0, 0, off, 0)))
            fail("case viii: fixed locus too large");
    }
    // the two partially glued strata are fixed for every constant
    for (int t = 0; t < 20; ++t) {
        std::array<NodeState, 4> half{NodeState{false, Scalar::integer(0)},
                                      NodeState{false, Scalar::integer(0)},
                                      NodeState{true, rnd_nonzero(rng)},
                                      NodeState{true, rnd_nonzero(rng)}};
        GluingSheaf F(coords, -1, -1, half, 0);
        if (!kappa_fixed(F)) fail("case viii: boundary C* not fixed");
    }
}

} // namespace

PrymFiberModel prym_fiber_model(FiberCase tag, const std::optional<NodeCoords>& coords_opt) {
    using S = SpaceDescriptor;
    fp::u64 rng = 0x5eedf00dull + static_cast<fp::u64>(tag);
    NodeCoords coords = coords_opt.value_or(NodeCoords::of(Scalar::integer(1), Scalar::integer(2)));

    PrymFiberModel m;
    m.tag = tag;
    auto add = [&](const char* name, SpaceDescriptor sp) {
        m.strata.push_back(FiberStratum{name, sp, sp.euler()});
    };
    switch (tag) {
        case FiberCase::i:
            verify_case_i(rng);
            add("P0", S::extension(S::E(), S::Cstar()));
            add("P1", S::E());
            break;
        case FiberCase::ii:
            verify_case_ii(rng);
            add("P0", S::extension(S::E(), S::C()));
            add("P1", S::E());
            break;
        case FiberCase::iii:
            verify_case_iii(rng);
            add("P0", S::extension(S::E(), S::Cstar()));
            add("P2", S::E());
            break;
        case FiberCase::iv:
            verify_case_iv(rng);
            add("P0", S::disjoint(4, S::product(S::Cstar(), S::Cstar())));
            add("P1", S::disjoint(8, S::Cstar()));
            add("P2", S::finite(4));
            break;
        case FiberCase::v:
            verify_case_v(rng);
            add("P0", S::extension(S::E(), S::C()));
            add("P2", S::E());
            break;
        case FiberCase::vi:
            verify_case_vi(rng);
            add("P0", S::product(S::Cstar(), S::Cstar()));
            add("P1", S::Cstar());
            add("P2", S::Cstar());
            add("P3", S::point());
            break;
        case FiberCase::vii:
            verify_case_vii(rng);
            add("P0", S::extension(S::E(), S::product(S::C(), S::finite(2))));
            add("P2", S::E());
            break;
        case FiberCase::viii: {
            verify_case_viii(rng, coords);
            add("P0", S::product(S::Cstar(), S::Cstar()));
            add("P1", S::disjoint(2, S::Cstar()));
            add("P2", S::point());
            BoundaryConstants bc = boundary_gluing_constants(coords);
            m.adjacency_constants["horizontal"] = bc.horizontal;
            m.adjacency_constants["vertical"] = bc.vertical;
            break;
        }
        case FiberCase::smooth:
            // smooth fiber: an abelian surface; recorded through a chi-exact
            // stand-in (chi = 0)
            add("P0", S::product(S::E(), S::E()));
            break;
        case FiberCase::unclassifiable:
            throw std::invalid_argument("prym_fiber_model: unclassifiable tag");
    }
    return m;
}

} // namespace prymlab::prym

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prymlab/prym/fiber_model.hpp"
#include "prymlab/prym/stability.hpp"

using namespace prymlab::prym;
using prymlab::exact::Scalar;
using prymlab::tangency::FiberCase;
namespace fp = prymlab::fp;

namespace {
GluingSheaf glued(const NodeCoords& c, long dp, long dm, std::array<long, 4> num,
                  std::array<long, 4> den, long m) {
    std::array<NodeState, 4> ns;
    for (int i = 0; i < 4; ++i)
        ns[i] = NodeState{true, Scalar::rational(num[i], den[i])};
    return GluingSheaf(c, dp, dm, ns, m);
}
NodeCoords std_coords() { return NodeCoords::of(Scalar::integer(1), Scalar::integer(2)); }
} // namespace

TEST_CASE("tau permutes the gluing vector in pairs") {
    auto c = std_coords();
    GluingSheaf f = glued(c, 0, 0, {1, 2, 3, 4}, {1, 1, 1, 1}, 0);
    GluingSheaf t = apply_tau(f);
    CHECK(t.nodes()[0].lambda == Scalar::integer(2));
    CHECK(t.nodes()[1].lambda == Scalar::integer(1));
    CHECK(t.nodes()[2].lambda == Scalar::integer(4));
    CHECK(t.nodes()[3].lambda == Scalar::integer(3));
    // all-split sheaf is fixed
    std::array<NodeState, 4> split{};
    for (auto& n : split) n = NodeState{false, Scalar::integer(0)};
    GluingSheaf s(c, -2, -2, split, 0);
    CHECK(apply_tau(s).equals_up_to_scale(s));
}

TEST_CASE("iota inverts constants and reflects degrees") {
    auto c = std_coords();
    GluingSheaf f = glued(c, 0, 0, {1, 2, 3, 4}, {1, 1, 1, 1}, 0);
    GluingSheaf i = apply_iota(f);
    CHECK(i.d_plus() == 0);
    CHECK(i.d_minus() == 0);
    CHECK(i.nodes()[1].lambda == Scalar::rational(1, 2));
    CHECK(i.nodes()[2].lambda == Scalar::rational(1, 3));
    CHECK(i.nodes()[3].lambda == Scalar::rational(1, 4));
    // partially glued self-duality: F'(0; l3, l4) has dual F'(0; 1/l3, 1/l4)
    std::array<NodeState, 4> half{NodeState{false, Scalar::integer(0)},
                                  NodeState{false, Scalar::integer(0)},
                                  NodeState{true, Scalar::integer(3)},
                                  NodeState{true, Scalar::integer(4)}};
    GluingSheaf g(c, -1, -1, half, 0);
    GluingSheaf gi = apply_iota(g);
    CHECK(gi.d_plus() == -1);
    CHECK(gi.d_minus() == -1);
    CHECK(gi.nodes()[2].lambda == Scalar::rational(1, 3));
    CHECK_FALSE(gi.nodes()[0].glued);
}

TEST_CASE("involution algebra on random sheaves") {
    fp::u64 rng = 314159;
    int done = 0;
    for (long m : {-2L, -1L, 0L, 1L, 2L}) {
        for (long s : {0L, 1L, 2L, 3L, 4L}) {
            for (int it = 0; it < 10; ++it) {
                GluingSheaf f = random_sheaf(rng, m, s);
                CHECK(apply_tau(apply_tau(f)).equals_up_to_scale(f));
                CHECK(apply_iota(apply_iota(f)).equals_up_to_scale(f));
                CHECK(apply_kappa(apply_kappa(f)).equals_up_to_scale(f));
                CHECK(apply_tau(apply_iota(f)).equals_up_to_scale(apply_iota(apply_tau(f))));
                ++done;
            }
        }
    }
    CHECK(done == 250);
}

TEST_CASE("kappa-fixed locus of fully glued twist-0 sheaves is l1 l2 = l3 l4") {
    auto c = std_coords();
    CHECK(kappa_fixed(glued(c, 0, 0, {1, 2, 2, 1}, {1, 1, 1, 1}, 0)));
    CHECK_FALSE(kappa_fixed(glued(c, 0, 0, {1, 1, 1, 2}, {1, 1, 1, 1}, 0)));
    // (l, 1/l, u, 1/u) is fixed
    CHECK(kappa_fixed(glued(c, 0, 0, {3, 1, 7, 2}, {1, 3, 2, 7}, 0)));

    fp::u64 rng = 2718;
    long fixed_seen = 0;
    for (int it = 0; it < 1000; ++it) {
        // the fixed locus sits at the self-dual bidegree (0, 0)
        GluingSheaf r = random_sheaf(rng, 0, 4);
        GluingSheaf f(r.coords(), 0, 0, r.nodes(), 0);
        Scalar lhs = f.nodes()[0].lambda * f.nodes()[1].lambda;
        Scalar rhs = f.nodes()[2].lambda * f.nodes()[3].lambda;
        bool onlocus = lhs == rhs;
        CHECK(kappa_fixed(f) == onlocus);
        // planted fixed point
        std::array<NodeState, 4> ns = f.nodes();
        ns[3].lambda = lhs / ns[2].lambda;
        GluingSheaf g(f.coords(), 0, 0, ns, 0);
        CHECK(kappa_fixed(g));
        // a nonzero bidegree is moved by the degree reflection
        if (r.d_plus() != 0) CHECK_FALSE(kappa_fixed(r));
        ++fixed_seen;
    }
    CHECK(fixed_seen == 1000);
}

TEST_CASE("theta characteristics: exactly two, with the stated vectors") {
    auto c = std_coords();
    auto thetas = theta_characteristics(c);
    REQUIRE(thetas.size() == 2);
    for (auto& t : thetas) {
        CHECK(t.d_plus() == 1);
        CHECK(t.d_minus() == 1);
        CHECK(t.twist() == 1);
        CHECK(t.nodes()[0].lambda.is_one());
        CHECK(t.nodes()[1].lambda.is_one());
        CHECK(t.nodes()[2].lambda == t.nodes()[3].lambda);
        CHECK(apply_tau(t).equals_up_to_scale(t));
        // theta squared has the dualizing gluing vector up to scale
        GluingSheaf sq = t.tensor(t);
        auto w = dualizing_gluing_vector(c);
        Scalar ratio = sq.nodes()[0].lambda / w[0];
        for (int i = 0; i < 4; ++i) CHECK(sq.nodes()[i].lambda == ratio * w[i]);
    }
    CHECK(thetas[0].nodes()[2].lambda == Scalar::integer(1));
    CHECK(thetas[1].nodes()[2].lambda == Scalar::integer(-1));

    // tensoring maps the twist-0 fixed torus into the twist-1 fixed locus
    fp::u64 rng = 777;
    for (int it = 0; it < 50; ++it) {
        GluingSheaf f = random_sheaf(rng, 0, 4);
        std::array<NodeState, 4> ns = f.nodes();
        ns[3].lambda = ns[0].lambda * ns[1].lambda / ns[2].lambda;
        GluingSheaf fixed(f.coords(), 0, 0, ns, 0);
        REQUIRE(kappa_fixed(fixed));
        auto th = theta_characteristics(fixed.coords());
        for (auto& t : th) CHECK(kappa_fixed(fixed.tensor(t)));
    }
}

TEST_CASE("boundary gluing constants") {
    // pinned regression value, reproduced by the symbolic limit composition
    NodeCoords c = NodeCoords::of(Scalar::integer(1), Scalar::integer(2));
    BoundaryConstants bc = boundary_gluing_constants(c);
    CHECK(bc.horizontal == Scalar::rational(1, 81));
    CHECK(bc.vertical == Scalar::integer(81));
    CHECK(bc.horizontal * bc.vertical == Scalar::integer(1));
    CHECK(bc.cross_ratio == Scalar::rational(1, 9));
    // the first degeneration limit rescales the surviving constants by
    // (z3 - z2)/(z3 - z1) and (z4 - z2)/(z4 - z1): here 3 and 1/3
    CHECK(bc.limit_factors[0] == Scalar::integer(3));
    CHECK(bc.limit_factors[1] == Scalar::rational(1, 3));
    fp::u64 st = 31;
    for (int it = 0; it < 10; ++it) {
        GluingSheaf f = random_sheaf(st, 0, 4);
        const auto& z = f.coords().z;
        BoundaryConstants b = boundary_gluing_constants(f.coords());
        CHECK(b.limit_factors[0] == (z[2] - z[1]) / (z[2] - z[0]));
        CHECK(b.limit_factors[1] == (z[3] - z[1]) / (z[3] - z[0]));
    }

    fp::u64 rng = 99;
    for (int it = 0; it < 20; ++it) {
        GluingSheaf f = random_sheaf(rng, 0, 4);
        BoundaryConstants b = boundary_gluing_constants(f.coords());
        CHECK(b.horizontal == b.cross_ratio * b.cross_ratio);
        CHECK(b.horizontal * b.vertical == Scalar::integer(1));
    }
}

TEST_CASE("stability classification under H") {
    // even degree, fully glued: five semistable bidegrees around the center
    long k = 8, m = 4; // m = k/2
    auto adm = semistable_bidegrees(k, 4);
    std::vector<std::pair<long, long>> expect{{m - 2, m + 2}, {m - 1, m + 1}, {m, m},
                                              {m + 1, m - 1}, {m + 2, m - 2}};
    CHECK(adm == expect);
    // written as offsets from (k-2)/2 these are (-1,3), (0,2), (1,1), (2,0), (3,-1)
    long c = (k - 2) / 2;
    std::vector<std::pair<long, long>> offsets;
    for (auto [d, dp] : adm) offsets.emplace_back(d - c, dp - c);
    std::vector<std::pair<long, long>> published{{-1, 3}, {0, 2}, {1, 1}, {2, 0}, {3, -1}};
    CHECK(offsets == published);
    // the extremes are the strictly semistable trivial-extension classes
    CHECK(classify_stability(m - 2, m + 2, 4, k, Polarization::H) ==
          Stability::strictly_semistable);
    CHECK(classify_stability(m, m, 4, k, Polarization::H) == Stability::stable);
    // odd degree: four bidegrees, all stable
    auto adm3 = semistable_bidegrees(3, 4);
    std::vector<std::pair<long, long>> expect3{{0, 3}, {1, 2}, {2, 1}, {3, 0}};
    CHECK(adm3 == expect3);
    for (auto [d, dp] : adm3)
        CHECK(classify_stability(d, dp, 4, 3, Polarization::H) == Stability::stable);
    // chi mismatch
    CHECK(classify_stability(1, 1, 4, 5, Polarization::H) == Stability::not_a_sheaf);
    // symmetry: swapping the bidegree and relabeling the components
    fp::u64 rng = 5;
    for (int it = 0; it < 50; ++it) {
        long s = static_cast<long>(fp::splitmix64(rng) % 5);
        long d = static_cast<long>(fp::splitmix64(rng) % 13) - 6;
        long dp = static_cast<long>(fp::splitmix64(rng) % 13) - 6;
        long kk = d + dp - s + 4;
        CHECK(classify_stability(d, dp, s, kk, Polarization::H) ==
              classify_stability(dp, d, s, kk, Polarization::H));
        CHECK(classify_stability(d, dp, s, kk, Polarization::H_eps, true) ==
              classify_stability(dp, d, s, kk, Polarization::H_eps, false));
    }
}

TEST_CASE("perturbed polarization destabilizes the direct sums") {
    for (long k : {-4L, 0L, 4L, 6L, 8L, 10L}) {
        long d = (k - 4) / 2; // the direct-sum point, d = dp, s = 0
        CHECK(classify_stability(d, d, 0, k, Polarization::H) == Stability::strictly_semistable);
        CHECK(classify_stability(d, d, 0, k, Polarization::H_eps) == Stability::unstable);
    }
    // chi = 0 exception: every slope vanishes and no polarization separates
    CHECK(classify_stability(-1, -1, 0, 2, Polarization::H_eps) ==
          Stability::strictly_semistable);
    // the former strictly semistable extremes become stable or unstable
    long k = 8, m = 4;
    CHECK(classify_stability(m + 2, m - 2, 4, k, Polarization::H_eps) == Stability::stable);
    CHECK(classify_stability(m - 2, m + 2, 4, k, Polarization::H_eps) == Stability::unstable);
    // no strictly semistable sheaves remain anywhere in the sweep (k != 2)
    for (long kk : {0L, 3L, 4L, 6L, 7L}) {
        for (long s = 0; s <= 4; ++s) {
            long sum = kk + s - 4;
            for (long d = sum / 2 - 6; d <= sum / 2 + 7; ++d) {
                auto v = classify_stability(d, sum - d, s, kk, Polarization::H_eps);
                CHECK(v != Stability::strictly_semistable);
            }
        }
    }
}

TEST_CASE("perturbed verdicts agree with exact small-epsilon slopes") {
    // independent oracle: compare reduced slopes with the literal rational
    // eps = 1/10^6, small enough that no threshold in the sweep is crossed
    using prymlab::exact::Scalar;
    Scalar eps = Scalar::rational(1, 1000000);
    Scalar a = Scalar::integer(48); // the perturbation weight of one component
    auto brute = [&](long d, long dp, long s, long k) {
        if (d + dp - s + 2 != k - 2) return Stability::not_a_sheaf;
        // slope of the plus-component subsheaf vs the total, then the mirror
        Scalar den_plus = Scalar::integer(2) + a * eps;
        Scalar den_minus = Scalar::integer(2) - a * eps;
        Scalar total = Scalar::rational(k - 2, 4);
        Scalar lp = Scalar::integer(d - s + 1) / den_plus;
        Scalar lm = Scalar::integer(dp - s + 1) / den_minus;
        auto cmp = [](const Scalar& x, const Scalar& y) {
            mpq_class diff = (x - y).rational_value();
            return diff < 0 ? -1 : (diff > 0 ? 1 : 0);
        };
        int c1 = cmp(lp, total), c2 = cmp(lm, total);
        if (c1 > 0 || c2 > 0) return Stability::unstable;
        if (c1 == 0 || c2 == 0) return Stability::strictly_semistable;
        return Stability::stable;
    };
    for (long k = -3; k <= 9; ++k) {
        for (long s = 0; s <= 4; ++s) {
            long sum = k + s - 4;
            for (long d = sum / 2 - 7; d <= sum / 2 + 8; ++d) {
                long dp = sum - d;
                CHECK(classify_stability(d, dp, s, k, Polarization::H_eps) ==
                      brute(d, dp, s, k));
            }
        }
    }
}

TEST_CASE("indeterminacy components of the degree-raising map") {
    // shift rule
    CHECK(bidegree_shift(4, 4, true, TwistConic::primary) == std::pair<long, long>{2, 8});
    CHECK(bidegree_shift(4, 4, false, TwistConic::primary) == std::pair<long, long>{6, 4});
    // even degree: the full fiber over the distinguished member + 27 partners
    auto even = indeterminacy_components(8, TwistConic::primary);
    REQUIRE(even.size() == 2);
    CHECK(even[0].full_fiber);
    CHECK(even[0].count == 1);
    CHECK(even[1].count == 27);
    CHECK(even[1].d == 5);
    CHECK(even[1].dp == 3); // (k+2)/2, (k-2)/2
    // odd degree: three components over the distinguished member, 27 partners
    long k = 7;
    auto odd = indeterminacy_components(k, TwistConic::primary);
    REQUIRE(odd.size() == 4);
    std::vector<std::pair<long, long>> over_i;
    for (auto& f : odd)
        if (f.over_distinguished) over_i.emplace_back(f.d, f.dp);
    std::vector<std::pair<long, long>> expect{
        {(k - 3) / 2, (k + 3) / 2}, {(k - 1) / 2, (k + 1) / 2}, {(k + 1) / 2, (k - 1) / 2}};
    CHECK(over_i == expect);
    CHECK(odd.back().count == 27);
    CHECK(odd.back().d == (k + 3) / 2);
    CHECK(odd.back().dp == (k - 3) / 2);
    // the partner conic swaps the roles
    auto mirror = indeterminacy_components(8, TwistConic::mirror);
    REQUIRE(mirror.size() == 2);
    CHECK(mirror[0].full_fiber);
    CHECK(mirror[1].d == 3);
    CHECK(mirror[1].dp == 5);
}

TEST_CASE("fiber models and their Euler numbers") {
    using FC = FiberCase;
    std::map<FC, long> expected{{FC::i, 0},  {FC::ii, 0}, {FC::iii, 0}, {FC::iv, 4},
                                {FC::v, 0},  {FC::vi, 1}, {FC::vii, 0}, {FC::viii, 1}};
    for (auto& [tag, chi] : expected) {
        PrymFiberModel m = prym_fiber_model(tag);
        CHECK(m.total_euler() == chi);
        long sum = 0;
        for (auto& s : m.strata) sum += s.space.euler();
        CHECK(sum == m.total_euler());
    }
    PrymFiberModel m4 = prym_fiber_model(FC::iv);
    REQUIRE(m4.strata.size() == 3);
    CHECK(m4.strata[0].space.to_string() == "4 copies of (C* x C*)");
    CHECK(m4.strata[2].space.euler() == 4);
    PrymFiberModel m8 = prym_fiber_model(FC::viii);
    CHECK(m8.strata[1].space.to_string() == "2 copies of (C*)");
    CHECK(m8.adjacency_constants.at("horizontal") *
              m8.adjacency_constants.at("vertical") ==
          Scalar::integer(1));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>

#include "prymlab/exact/parse.hpp"
#include "prymlab/quartic/counting.hpp"
#include "prymlab/quartic/dual.hpp"

using namespace prymlab::quartic;
using prymlab::exact::Exponents;
using prymlab::exact::parse_poly;
namespace fp = prymlab::fp;

namespace {

std::vector<fp::u64> test_primes() {
    fp::u64 st = 20240601;
    fp::u64 p1 = fp::random_prime31(st), p2 = fp::random_prime31(st);
    return {p1, p2};
}

PlaneCurve fermat() { return PlaneCurve::from_text("X^4 + Y^4 + Z^4"); }
PlaneCurve klein() { return PlaneCurve::from_text("X^3*Y + Y^3*Z + Z^3*X"); }

PlaneCurve random_smooth_quartic(fp::u64 seed) {
    fp::u64 st = seed;
    auto primes = test_primes();
    for (;;) {
        PlaneCurve c = random_ternary_form(st, 4, 10);
        fp::u64 rr = st;
        if (certify_smooth(c, primes[0], rr)) return c;
    }
}

} // namespace

TEST_CASE("hessian examples") {
    PlaneCurve conic = PlaneCurve::from_text("X*Z - Y^2");
    PlaneCurve h = conic.hessian();
    CHECK(h.degree() == 0); // nonzero constant
    CHECK(fermat().hessian().degree() == 6);
    // Fermat: hessian = 1728 (XYZ)^2
    CHECK(fermat().hessian().form() ==
          parse_poly("1728*X^2*Y^2*Z^2", PlaneCurve::vars()));
}

TEST_CASE("smoothness certificates") {
    auto primes = test_primes();
    fp::u64 rr = 7;
    CHECK(certify_smooth(fermat(), primes[0], rr));
    CHECK(certify_smooth(klein(), primes[0], rr));
    PlaneCurve dbl = PlaneCurve::from_text("X^2*Z^2 - 2*X*Y^2*Z + Y^4"); // (XZ - Y^2)^2
    CHECK_FALSE(certify_smooth(dbl, primes[0], rr, 3));
    CHECK(conic_is_smooth(PlaneCurve::from_text("X*Z - Y^2")));
    CHECK_FALSE(conic_is_smooth(PlaneCurve::from_text("X^2 - Y^2")));
}

TEST_CASE("flex counts: generic, Fermat, Klein") {
    auto primes = test_primes();
    auto t0 = std::chrono::steady_clock::now();

    PlaneCurve g = random_smooth_quartic(11);
    LineCountReport rg = count_flexes(g, primes, 5);
    CHECK(rg.total_with_multiplicity == 24);
    CHECK(rg.distinct == 24);

    LineCountReport rf = count_flexes(fermat(), primes, 5);
    CHECK(rf.total_with_multiplicity == 24);
    CHECK(rf.distinct == 12);
    CHECK(rf.multiplicity_partition == std::map<long, long>{{2, 12}});

    LineCountReport rk = count_flexes(klein(), primes, 5);
    CHECK(rk.total_with_multiplicity == 24);
    CHECK(rk.distinct == 24);

    auto dt = std::chrono::duration_cast<std::chrono::seconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    CHECK(dt < 90); // three instances, budget 30 s each

    PlaneCurve dbl = PlaneCurve::from_text("X^2*Z^2 - 2*X*Y^2*Z + Y^4");
    CHECK_THROWS_AS(count_flexes(dbl, primes, 5), std::domain_error);
}

TEST_CASE("bitangent counts: generic seed and Klein") {
    auto primes = test_primes();
    auto t0 = std::chrono::steady_clock::now();

    PlaneCurve g = random_smooth_quartic(23);
    LineCountReport rg = count_bitangents(g, primes, 9);
    CHECK(rg.distinct == 28);
    CHECK(rg.generic);
    CHECK(rg.confirmed_by_primes.size() == 2);

    LineCountReport rk = count_bitangents(klein(), primes, 9);
    CHECK(rk.distinct == 28);

    auto dt = std::chrono::duration_cast<std::chrono::seconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    CHECK(dt < 120); // two instances, budget 60 s each

    PlaneCurve dbl = PlaneCurve::from_text("X^2*Z^2 - 2*X*Y^2*Z + Y^4");
    CHECK_THROWS_AS(count_bitangents(dbl, primes, 9), std::domain_error);
}

TEST_CASE("Fermat bitangents decompose as 16 + 12 hyperflex lines") {
    auto primes = test_primes();
    CHECK_THROWS(count_bitangents(fermat(), primes, 3, /*strict=*/true));
    LineCountReport r = count_bitangents(fermat(), primes, 3, /*strict=*/false);
    CHECK_FALSE(r.generic);
    CHECK(r.distinct == 28);
    CHECK(r.total_with_multiplicity == 28);
    CHECK(r.hyperflex_lines == 12);
    // non-generic dual data is flagged
    PluckerData pd = plucker_data(fermat(), primes, 3);
    CHECK_FALSE(pd.generic);
    CHECK(pd.dual_cusps == 12);
}

TEST_CASE("projective invariance of counts") {
    auto primes = test_primes();
    PlaneCurve g = random_smooth_quartic(77);
    LineCountReport base_f = count_flexes(g, primes, 1);
    fp::u64 st = 424242;
    for (int i = 0; i < 5; ++i) {
        PlaneCurve t = g.transformed(random_gl3(st));
        LineCountReport rf = count_flexes(t, primes, 1);
        CHECK(rf.distinct == base_f.distinct);
        CHECK(rf.multiplicity_partition == base_f.multiplicity_partition);
    }
    LineCountReport base_b = count_bitangents(g, primes, 1);
    PlaneCurve t = g.transformed(random_gl3(st));
    CHECK(count_bitangents(t, primes, 1).distinct == base_b.distinct);
}

TEST_CASE("flex lines from the tangency system match the Hessian count") {
    // two independent routes to 24: tangency-system solutions with a
    // degenerate contact pair, and the intersection with the Hessian
    auto primes = test_primes();
    PlaneCurve g = random_smooth_quartic(555);
    LineCountReport hess = count_flexes(g, primes, 4);
    fp::u64 rng = 77;
    fp::u64 st = 3;
    PlaneCurve t = g.transformed(random_gl3(st));
    TangencySystemCount sys = tangency_count_mod_p(t, primes[0], rng, 0);
    CHECK(sys.n_flex == hess.distinct);
    CHECK(sys.n_flex == 24);
}

TEST_CASE("tangency system per chart: 52 = 28 + 24") {
    auto primes = test_primes();
    PlaneCurve g = random_smooth_quartic(23).transformed([] {
        fp::u64 st = 1;
        return random_gl3(st);
    }());
    fp::u64 rng = 5;
    TangencySystemCount t = tangency_count_mod_p(g, primes[0], rng, 0);
    CHECK(t.n_all == 52);
    CHECK(t.n_flex == 24);
    CHECK(t.n_bitangent == 28);
    CHECK_FALSE(t.hyperflex_present);
    CHECK(t.eliminant_degree == 52);
}

TEST_CASE("plucker data") {
    auto primes = test_primes();
    PlaneCurve g = random_smooth_quartic(31);
    PluckerData d = plucker_data(g, primes, 2);
    CHECK(d.dual_degree == 12);
    CHECK(d.dual_nodes == 28);
    CHECK(d.dual_cusps == 24);
    CHECK(d.genus_check == 3);
    CHECK((12 - 1) * (12 - 2) / 2 - 28 - 24 == 3);
}

TEST_CASE("dual curve: conic is self-dual family") {
    PlaneCurve conic = PlaneCurve::from_text("X*Z - Y^2");
    PlaneCurve d = dual_curve_eliminant(conic);
    CHECK(d.degree() == 2);
    // dual of {XZ = Y^2} is {4 X Z = Y^2} up to scale in dual coordinates
    PlaneCurve dd = dual_curve_eliminant(d);
    CHECK(dd.degree() == 2);
}

TEST_CASE("dual curve of quartics has degree 12") {
    PlaneCurve g = random_smooth_quartic(55);
    auto primes = test_primes();
    PlaneCurve gp = g.reduce_mod(primes[0]);
    CHECK(dual_curve_eliminant(gp).degree() == 12);
    CHECK(dual_curve_eliminant(fermat()).degree() == 12);
}

TEST_CASE("dual eliminant vanishes on Fermat flex tangents") {
    // flexes of the Fermat quartic on {X = 0}: (0 : a : 1) with a^4 = -1;
    // the tangent line there has dual coordinates (0, 4a^3, 4) ~ (0, a^3, 1).
    PlaneCurve D = dual_curve_eliminant(fermat());
    // evaluate D(0, a^3, 1) in Q[a]/(a^4 + 1): residue classes a^0..a^3
    std::array<mpq_class, 4> acc{0, 0, 0, 0};
    for (auto& [e, co] : D.form().terms()) {
        if (e[0] != 0) continue; // X = 0
        unsigned long pw = 3ul * e[1]; // (a^3)^j
        mpq_class sign = (pw / 4) % 2 == 0 ? 1 : -1;
        acc[pw % 4] += sign * co.rational_value();
    }
    for (auto& v : acc) CHECK(v == 0);
}

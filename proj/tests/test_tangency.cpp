#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prymlab/tangency/config.hpp"

using namespace prymlab::tangency;
using prymlab::quartic::PlaneCurve;
using prymlab::quartic::random_ternary_form;
using prymlab::exact::Scalar;
namespace fp = prymlab::fp;

namespace {
std::vector<fp::u64> test_primes() {
    fp::u64 st = 918273645;
    return {fp::random_prime31(st), fp::random_prime31(st)};
}
} // namespace

TEST_CASE("build_config: seeded pair with 8 double tangencies") {
    auto primes = test_primes();
    long resamples = -1;
    TangencyConfig cfg = random_config(101, 5, primes, &resamples);
    CHECK(resamples >= 0);
    CHECK(cfg.g4.form() == cfg.q.form() * cfg.q.form() - cfg.f4.form());
    // Bezout: two quartics meet in 16 points with multiplicity
    CHECK(cfg.f4.degree() * cfg.g4.degree() == 16);
}

TEST_CASE("build_config rejects the degenerate pencil") {
    auto primes = test_primes();
    PlaneCurve q = PlaneCurve::from_text("X*Z - Y^2");
    PlaneCurve f4(q.form() * q.form());
    CHECK_THROWS_AS(build_config(f4, q, primes, 1), std::domain_error);
}

TEST_CASE("enumerate_strata cardinalities and the 128 identity") {
    auto primes = test_primes();
    TangencyConfig cfg = random_config(101, 5, primes);
    StrataReport rep = enumerate_strata(cfg, primes, 7);
    REQUIRE(rep.strata.size() == 9);
    auto find = [&](const std::string& l) {
        for (auto& s : rep.strata)
            if (s.label == l) return s;
        throw std::runtime_error("missing stratum " + l);
    };
    CHECK(find("Pi0").dimension == 2);
    CHECK(find("Pi1").dimension == 1);
    CHECK(find("Pi1").cardinality == -1);
    CHECK(find("Pi2").cardinality == 24);
    CHECK(find("Pi3").dimension == 1);
    CHECK(find("Pi4").cardinality == 28);
    CHECK(find("Pi5").cardinality == 24);
    CHECK(find("Pi6").cardinality == 128);
    CHECK(find("Pi7").cardinality == 8);
    CHECK(find("Pi8").cardinality == 28);
    CHECK(find("Pi2").fiber_case == FiberCase::ii);
    CHECK(find("Pi4").fiber_case == FiberCase::iv);
    CHECK(find("Pi6").fiber_case == FiberCase::vi);
    CHECK(find("Pi7").fiber_case == FiberCase::vii);
    CHECK(find("Pi8").fiber_case == FiberCase::viii);
    CHECK(rep.identity_144);
    CHECK(rep.dual_intersection_distinct == 136);
    CHECK(rep.dual_intersection_double == 8);
    // cardinality bookkeeping: the finite strata sizes are pairwise disjoint
    // contributions summing to 2*28 + 2*24 + 128 + 8
    long total = 0;
    for (auto& s : rep.strata)
        if (s.cardinality > 0) total += s.cardinality;
    CHECK(total == 2 * 28 + 2 * 24 + 128 + 8);
}

TEST_CASE("classify_member: generic point is smooth, constructed witnesses hit their strata") {
    auto primes = test_primes();

    // A configuration with a rational tangency point of the pair: force
    // (1:0:0) onto both f4 and the conic. There f4 meets q transversally,
    // f4 and g4 = q^2 - f4 are tangent with common tangent grad f4(P), and
    // the dual pair is tangent at the dual point of that line.
    fp::u64 st = 2024;
    for (int attempt = 0;; ++attempt) {
        REQUIRE(attempt < 60);
        PlaneCurve q = PlaneCurve::from_text("X*Z - Y^2");
        PlaneCurve f0 = random_ternary_form(st, 4, 5);
        auto form = f0.form();
        form.add_term({4, 0, 0}, -form.coeff({4, 0, 0})); // kill the X^4 term
        if (form.is_zero() || form.total_degree() != 4) continue;
        try {
            PlaneCurve f4(form);
            TangencyConfig cfg = build_config(f4, q, primes, 5);
            Scalar gy = form.derivative(1).eval(
                {Scalar::integer(1), Scalar::integer(0), Scalar::integer(0)});
            Scalar gz = form.derivative(2).eval(
                {Scalar::integer(1), Scalar::integer(0), Scalar::integer(0)});
            if (gy.is_zero() && gz.is_zero()) continue;
            auto tag = classify_member(cfg, {Scalar::integer(0), gy, gz});
            if (tag == FiberCase::unclassifiable) continue; // deeper coincidence; redraw
            CHECK(tag == FiberCase::vii);
            // a generic rational point lies in no stratum
            auto smooth_tag = classify_member(
                cfg, {Scalar::integer(3), Scalar::integer(5), Scalar::integer(7)});
            CHECK(smooth_tag == FiberCase::smooth);
            break;
        } catch (const std::exception&) {
            continue;
        }
    }

    // A rational smooth point of the second quartic alone: force (0:1:0)
    // onto g4 = q^2 - f4 by matching the Y^4 coefficient of f4 with q(0,1,0)^2.
    // The dual point of the tangent there lies on one dual curve only.
    for (int attempt = 0;; ++attempt) {
        REQUIRE(attempt < 60);
        PlaneCurve q = PlaneCurve::from_text("X*Z - Y^2"); // q(0,1,0) = -1
        PlaneCurve f0 = random_ternary_form(st, 4, 5);
        auto form = f0.form();
        form.add_term({0, 4, 0}, Scalar::integer(1) - form.coeff({0, 4, 0}));
        if (form.is_zero() || form.total_degree() != 4) continue;
        try {
            PlaneCurve f4(form);
            TangencyConfig cfg = build_config(f4, q, primes, 9);
            std::vector<Scalar> P{Scalar::integer(0), Scalar::integer(1), Scalar::integer(0)};
            REQUIRE(cfg.g4.form().eval(P).is_zero());
            if (!cfg.f4.form().eval(P).is_zero()) {
                std::array<Scalar, 3> t{cfg.g4.form().derivative(0).eval(P),
                                        cfg.g4.form().derivative(1).eval(P),
                                        cfg.g4.form().derivative(2).eval(P)};
                if (t[0].is_zero() && t[1].is_zero() && t[2].is_zero()) continue;
                auto tag = classify_member(cfg, t);
                if (tag == FiberCase::unclassifiable || tag == FiberCase::vi ||
                    tag == FiberCase::vii)
                    continue; // tangent line met the other stratum; redraw
                CHECK(tag == FiberCase::i);
                break;
            }
        } catch (const std::exception&) {
            continue;
        }
    }

    // A configuration whose branch quartic has the rational bitangent Z = 0
    // (tangency points on X = 0 and Y = 0): its dual has a node at (0:0:1).
    for (int attempt = 0;; ++attempt) {
        REQUIRE(attempt < 60);
        PlaneCurve g3 = random_ternary_form(st, 3, 4);
        PlaneCurve f4(PlaneCurve::from_text("X^2*Y^2").form() +
                      PlaneCurve::from_text("Z").form() * g3.form());
        PlaneCurve q = random_ternary_form(st, 2, 4);
        try {
            TangencyConfig cfg = build_config(f4, q, primes, 5);
            auto tag = classify_member(
                cfg, {Scalar::integer(0), Scalar::integer(0), Scalar::integer(1)});
            if (tag == FiberCase::unclassifiable) continue;
            CHECK(tag == FiberCase::viii);
            break;
        } catch (const std::exception&) {
            continue;
        }
    }
}

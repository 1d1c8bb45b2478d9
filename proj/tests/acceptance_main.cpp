// Acceptance suite: runs every top-level criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exits nonzero on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <future>
#include <set>
#include <vector>

#include "prymlab/euler/report.hpp"
#include "prymlab/luna/ideal.hpp"
#include "prymlab/luna/mukai.hpp"
#include "prymlab/quartic/dual.hpp"
#include "prymlab/run/pipeline.hpp"

using namespace prymlab;
using exact::Scalar;
using quartic::PlaneCurve;
using tangency::FiberCase;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("criterion %2d: %s - %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 t0)
               .count() /
           1000.0;
}

std::vector<fp::u64> check_primes() {
    run::RunConfig cfg;
    cfg.seed = 20240811;
    return run::resolve_primes(cfg);
}

PlaneCurve seeded_smooth_quartic(fp::u64 seed, const std::vector<fp::u64>& primes) {
    fp::u64 st = seed;
    for (;;) {
        PlaneCurve c = quartic::random_ternary_form(st, 4, 10);
        fp::u64 rr = st ^ 0x5151;
        if (quartic::certify_smooth(c, primes[0], rr)) return c;
    }
}

struct InstanceResult {
    long bitangents = 0;
    long flex_total = 0, flex_distinct = 0;
    long dual_degree = 0;
    long genus = 0;
    double bit_seconds = 0, flex_seconds = 0;
    bool primes_confirmed = false;
};

InstanceResult run_instance(fp::u64 seed, const std::vector<fp::u64>& primes) {
    InstanceResult r;
    PlaneCurve c = seeded_smooth_quartic(seed, primes);
    auto t0 = std::chrono::steady_clock::now();
    auto bt = quartic::count_bitangents(c, primes, seed + 900);
    r.bit_seconds = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    auto fx = quartic::count_flexes(c, primes, seed + 901);
    r.flex_seconds = seconds_since(t0);
    r.bitangents = bt.distinct;
    r.flex_total = fx.total_with_multiplicity;
    r.flex_distinct = fx.distinct;
    r.primes_confirmed = bt.confirmed_by_primes.size() >= 2;
    // dual curve degree, computed mod both primes
    r.dual_degree = -1;
    for (fp::u64 p : primes) {
        long d = quartic::dual_curve_eliminant(c.reduce_mod(p)).degree();
        if (r.dual_degree == -1) r.dual_degree = d;
        if (r.dual_degree != d) r.dual_degree = -2;
    }
    r.genus = (r.dual_degree - 1) * (r.dual_degree - 2) / 2 - bt.distinct - fx.distinct;
    return r;
}

} // namespace

int main() {
    auto primes = check_primes();
    std::printf("check primes: %llu, %llu\n", (unsigned long long)primes[0],
                (unsigned long long)primes[1]);

    // ----- criteria 1-3: five seeded instances, Klein, Fermat ----------------
    std::vector<fp::u64> seeds{101, 202, 303, 404, 505};
    std::vector<std::future<InstanceResult>> futs;
    for (fp::u64 s : seeds)
        futs.push_back(std::async(std::launch::async, run_instance, s, primes));
    bool c1 = true, c2 = true, c3 = true;
    double worst_bit = 0, worst_flex = 0;
    for (auto& f : futs) {
        InstanceResult r = f.get();
        c1 &= (r.bitangents == 28 && r.primes_confirmed && r.bit_seconds < 60.0);
        c2 &= (r.flex_total == 24 && r.flex_seconds < 30.0);
        c3 &= (r.dual_degree == 12 && r.genus == 3);
        worst_bit = std::max(worst_bit, r.bit_seconds);
        worst_flex = std::max(worst_flex, r.flex_seconds);
    }
    {
        PlaneCurve klein = PlaneCurve::from_text("X^3*Y + Y^3*Z + Z^3*X");
        auto kb = quartic::count_bitangents(klein, primes, 7);
        auto kf = quartic::count_flexes(klein, primes, 7);
        c1 &= kb.distinct == 28;
        c2 &= (kf.total_with_multiplicity == 24 && kf.distinct == 24);
        PlaneCurve fermat = PlaneCurve::from_text("X^4 + Y^4 + Z^4");
        auto ff = quartic::count_flexes(fermat, primes, 7);
        c2 &= (ff.total_with_multiplicity == 24 && ff.distinct == 12 &&
               ff.multiplicity_partition == std::map<long, long>{{2, 12}});
    }
    c3 &= ((12 - 1) * (12 - 2) / 2 - 28 - 24 == 3);
    report(1, c1,
           "28 distinct bitangents on 5 seeded quartics + Klein, two 31-bit primes, worst " +
               std::to_string(worst_bit) + " s < 60 s");
    report(2, c2,
           "flexes: 24 with multiplicity on all instances; Klein 24 distinct; Fermat 12 x 2; worst " +
               std::to_string(worst_flex) + " s < 30 s");
    report(3, c3, "dual degree 12 on each instance and 55 - 28 - 24 = 3 exactly");

    // ----- criterion 4: stratum cardinalities --------------------------------
    tangency::StrataReport strata;
    bool c4 = true;
    std::string c4detail;
    try {
        long resamples = 0;
        auto cfg = tangency::random_config(101, 5, primes, &resamples);
        strata = tangency::enumerate_strata(cfg, primes, 11);
        auto card = [&](const char* l) -> long {
            for (auto& s : strata.strata)
                if (s.label == l) return s.cardinality;
            return -99;
        };
        c4 = card("Pi2") == 24 && card("Pi4") == 28 && card("Pi5") == 24 &&
             card("Pi6") == 128 && card("Pi7") == 8 && card("Pi8") == 28 &&
             strata.identity_144;
        c4detail = "Pi2..Pi8 = 24/28/24/128/8/28 with 12*12 - 2*8 = 128 exact (" +
                   std::to_string(resamples) + " resamples)";
    } catch (const std::exception& e) {
        c4 = false;
        c4detail = e.what();
    }
    report(4, c4, c4detail);

    // ----- criterion 5: the Euler number --------------------------------------
    bool c5 = false;
    std::string c5detail;
    try {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<prym::PrymFiberModel> fibers;
        for (FiberCase c : {FiberCase::smooth, FiberCase::i, FiberCase::ii, FiberCase::iii,
                            FiberCase::iv, FiberCase::v, FiberCase::vi, FiberCase::vii,
                            FiberCase::viii})
            fibers.push_back(prym::prym_fiber_model(c));
        euler::EulerReport rep = euler::total_euler(strata, fibers);
        double secs = seconds_since(t0);
        std::map<std::string, long> nonzero;
        for (auto& c : rep.contributions)
            if (c.product != 0) nonzero[c.stratum] = c.product;
        bool three = nonzero == std::map<std::string, long>{{"Pi4", 112}, {"Pi6", 128}, {"Pi8", 28}};
        long fuj = euler::fujiki_euler(14, 0, 162);
        c5 = rep.total == 268 && three && fuj == 226 && rep.total != fuj && secs < 5.0;
        c5detail = "total 268 = 28*4 + 128*1 + 28*1; comparison 226; 268 != 226; " +
                   std::to_string(secs) + " s < 5 s on cached strata";
    } catch (const std::exception& e) {
        c5detail = e.what();
    }
    report(5, c5, c5detail);

    // ----- criterion 6: stability tables --------------------------------------
    bool c6 = true;
    {
        using prym::Polarization;
        using prym::Stability;
        for (long k : {0L, 4L, 6L, 8L}) { // even degrees
            long m = (k - 2) / 2;         // offset base of the published set
            std::vector<std::pair<long, long>> expect{{m - 1, m + 3},
                                                      {m, m + 2},
                                                      {m + 1, m + 1},
                                                      {m + 2, m},
                                                      {m + 3, m - 1}};
            c6 &= prym::semistable_bidegrees(k, 4) == expect;
            // exhaustive window sweep: everything outside is unstable / not a sheaf
            for (long d = k / 2 - 6; d <= k / 2 + 6; ++d) {
                for (long s = 0; s <= 4; ++s) {
                    long dp = k + s - 4 - d;
                    auto v = prym::classify_stability(d, dp, s, k, Polarization::H);
                    bool adm = v == Stability::stable || v == Stability::strictly_semistable;
                    if (s == 4)
                        c6 &= adm == (std::find(expect.begin(), expect.end(),
                                                std::make_pair(d, dp)) != expect.end());
                }
            }
            // the direct sum survives H but not the perturbed polarization
            long ds = (k - 4) / 2;
            if (k != 2) {
                c6 &= prym::classify_stability(ds, ds, 0, k, Polarization::H) ==
                      Stability::strictly_semistable;
                c6 &= prym::classify_stability(ds, ds, 0, k, Polarization::H_eps) ==
                      Stability::unstable;
            }
        }
        for (long k : {3L, 5L, 7L}) { // odd degrees: four components, all stable
            std::vector<std::pair<long, long>> expect{{(k - 3) / 2, (k + 3) / 2},
                                                      {(k - 1) / 2, (k + 1) / 2},
                                                      {(k + 1) / 2, (k - 1) / 2},
                                                      {(k + 3) / 2, (k - 3) / 2}};
            c6 &= prym::semistable_bidegrees(k, 4) == expect;
            for (auto [d, dp] : expect)
                c6 &= prym::classify_stability(d, dp, 4, k, prym::Polarization::H) ==
                      prym::Stability::stable;
        }
    }
    report(6, c6,
           "even k: five bidegrees {(-1,3),(0,2),(1,1),(2,0),(3,-1)} + ((k-2)/2)(1,1); odd k: four; "
           "perturbed polarization excludes the s=0 direct sum (k != 2)");

    // ----- criterion 7: involution algebra ------------------------------------
    bool c7 = true;
    {
        fp::u64 rng = 77777;
        for (long m : {-1L, 0L, 1L, 2L}) {
            for (long s = 0; s <= 4; ++s) {
                for (int it = 0; it < 25; ++it) { // 100+ per degree pattern m
                    prym::GluingSheaf f = prym::random_sheaf(rng, m, s);
                    c7 &= prym::apply_tau(prym::apply_tau(f)).equals_up_to_scale(f);
                    c7 &= prym::apply_iota(prym::apply_iota(f)).equals_up_to_scale(f);
                    c7 &= prym::apply_kappa(prym::apply_kappa(f)).equals_up_to_scale(f);
                    c7 &= prym::apply_tau(prym::apply_iota(f))
                              .equals_up_to_scale(prym::apply_iota(prym::apply_tau(f)));
                }
            }
        }
        for (int it = 0; it < 1000; ++it) {
            prym::GluingSheaf r = prym::random_sheaf(rng, 0, 4);
            prym::GluingSheaf f(r.coords(), 0, 0, r.nodes(), 0);
            bool onlocus = f.nodes()[0].lambda * f.nodes()[1].lambda ==
                           f.nodes()[2].lambda * f.nodes()[3].lambda;
            c7 &= prym::kappa_fixed(f) == onlocus;
        }
        auto thetas =
            prym::theta_characteristics(prym::NodeCoords::of(Scalar::integer(1), Scalar::integer(2)));
        c7 &= thetas.size() == 2;
        for (auto& t : thetas) {
            c7 &= t.nodes()[0].lambda.is_one() && t.nodes()[1].lambda.is_one();
            c7 &= t.nodes()[2].lambda == t.nodes()[3].lambda;
            c7 &= (t.nodes()[2].lambda == Scalar::integer(1) ||
                   t.nodes()[2].lambda == Scalar::integer(-1));
        }
        c7 &= !(thetas[0].nodes()[2].lambda == thetas[1].nodes()[2].lambda);
    }
    report(7, c7,
           "tau^2 = iota^2 = kappa^2 = id and tau iota = iota tau on 500 sheaves; kappa-fixed "
           "locus = {l1 l2 = l3 l4} on 1000 samples; exactly two thetas (1,1,+-1,+-1)");

    // ----- criterion 8: boundary constants ------------------------------------
    bool c8 = true;
    std::string c8detail;
    try {
        auto bc = prym::boundary_gluing_constants(
            prym::NodeCoords::of(Scalar::integer(1), Scalar::integer(2)));
        c8 &= bc.horizontal == Scalar::rational(1, 81);
        c8 &= bc.horizontal * bc.vertical == Scalar::integer(1);
        fp::u64 rng = 424243;
        for (int it = 0; it < 20; ++it) {
            auto f = prym::random_sheaf(rng, 0, 4);
            auto b = prym::boundary_gluing_constants(f.coords());
            c8 &= b.horizontal == b.cross_ratio * b.cross_ratio;
            c8 &= b.horizontal * b.vertical == Scalar::integer(1);
        }
        c8detail = "horizontal 1/81 on (1,-1,2,-2); horizontal * vertical = 1; cross-ratio "
                   "square on 20 random node configurations";
    } catch (const std::exception& e) {
        c8 = false;
        c8detail = e.what();
    }
    report(8, c8, c8detail);

    // ----- criterion 9: local model --------------------------------------------
    bool c9 = true;
    std::string c9detail;
    try {
        auto t0 = std::chrono::steady_clock::now();
        luna::GradedIdeal fix = luna::GradedIdeal::kappa_fixed();
        std::vector<long> expect{1, 10, 35, 84, 165};
        for (long d = 0; d <= 4; ++d) c9 &= fix.hilbert(d) == expect[static_cast<size_t>(d)];
        c9 &= fix.variety_degree() == 8;
        auto hp = luna::derived_fixed_hyperplanes(luna::kappa_coordinate_action());
        std::set<std::set<std::pair<int, int>>> got, want;
        for (auto& h : hp) {
            std::set<std::pair<int, int>> pr;
            pr.insert({h.i1, h.j1});
            pr.insert({h.i2, h.j2});
            got.insert(pr);
        }
        int data[6][4] = {{1, 1, 2, 2}, {3, 3, 4, 4}, {1, 3, 4, 2},
                          {1, 4, 3, 2}, {2, 3, 4, 1}, {2, 4, 3, 1}};
        for (auto& r : data) {
            std::set<std::pair<int, int>> pr;
            pr.insert({r[0], r[1]});
            pr.insert({r[2], r[3]});
            want.insert(pr);
        }
        c9 &= got == want;
        double secs = seconds_since(t0);
        c9 &= secs < 10.0;
        c9detail = "hilbert 1,10,35,84,165; variety degree 8; 6 derived hyperplanes pair "
                   "u11~u22, u33~u44, u13~u42, u14~u32, u23~u41, u24~u31; " +
                   std::to_string(secs) + " s < 10 s";
    } catch (const std::exception& e) {
        c9 = false;
        c9detail = e.what();
    }
    report(9, c9, c9detail);

    // ----- criterion 10: Mukai bookkeeping -------------------------------------
    bool c10 = true;
    for (long k = -10; k <= 10; ++k)
        c10 &= luna::mukai_pairing({0, 1, k - 2}, {0, 1, k - 2}) + 2 == 6;
    report(10, c10, "<v,v> + 2 = 6 for v = (0,1,k-2), k in [-10,10]");

    std::printf("%s (%d failed)\n", g_failures == 0 ? "ACCEPTANCE: ALL PASS" : "ACCEPTANCE: FAILURES",
                g_failures);
    return g_failures == 0 ? 0 : 1;
}

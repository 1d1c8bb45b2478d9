#include "prymlab/run/pipeline.hpp"

#include <chrono>
#include <cstdlib>
#include <sstream>

#include "prymlab/exact/parse.hpp"
#include "prymlab/prym/fiber_model.hpp"

namespace prymlab::run {

using exact::Scalar;
using quartic::LineCountReport;
using quartic::PlaneCurve;
using tangency::FiberCase;
using tangency::StrataReport;

std::vector<fp::u64> resolve_primes(const RunConfig& cfg) {
    if (!cfg.primes.empty()) return cfg.primes;
    if (const char* env = std::getenv("PRYMLAB_PRIMES")) {
        std::vector<fp::u64> ps;
        std::stringstream ss(env);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            fp::u64 p = std::stoull(tok);
            if (!fp::is_prime(p)) throw std::invalid_argument("PRYMLAB_PRIMES: not a prime: " + tok);
            ps.push_back(p);
        }
        if (ps.size() >= 2) return ps;
        throw std::invalid_argument("PRYMLAB_PRIMES: need at least two primes");
    }
    fp::u64 st = cfg.seed ^ 0x70726d6c61623331ull;
    fp::u64 p1 = fp::random_prime31(st), p2 = p1;
    while (p2 == p1) p2 = fp::random_prime31(st);
    return {p1, p2};
}

Json scalar_json(const Scalar& s) {
    if (s.domain() == exact::Domain::Q) {
        Json j;
        j["num"] = s.rational_value().get_num().get_str();
        j["den"] = s.rational_value().get_den().get_str();
        return j;
    }
    Json j;
    j["residue"] = s.residue_value();
    j["prime"] = s.prime();
    return j;
}

namespace {

Json count_json(const LineCountReport& r) {
    Json j;
    j["total_with_multiplicity"] = r.total_with_multiplicity;
    j["distinct"] = r.distinct;
    Json part = Json::object();
    for (auto& [m, n] : r.multiplicity_partition) part[std::to_string(m)] = n;
    j["multiplicity_partition"] = part;
    Json chart = Json::object();
    for (auto& [k, v] : r.per_chart) chart[k] = v;
    j["per_chart"] = chart;
    j["eliminant_degrees"] = r.eliminant_degrees;
    j["confirmed_by_primes"] = r.confirmed_by_primes;
    j["generic"] = r.generic;
    j["resamples"] = r.resamples;
    return j;
}

PlaneCurve curve_for(const RunConfig& cfg, const std::vector<fp::u64>& primes) {
    if (cfg.curve_text) return PlaneCurve::from_text(*cfg.curve_text);
    fp::u64 st = cfg.seed;
    for (int tries = 0; tries < 400; ++tries) {
        PlaneCurve c = quartic::random_ternary_form(st, 4, cfg.coefficient_bound);
        fp::u64 rr = st ^ 0xabcdef;
        if (quartic::certify_smooth(c, primes[0], rr)) return c;
    }
    throw std::domain_error("no smooth quartic found for this seed");
}

} // namespace

Json quartic_stage(const RunConfig& cfg, const std::vector<fp::u64>& primes) {
    Json j;
    PlaneCurve c = curve_for(cfg, primes);
    j["curve"] = c.form().to_string();
    auto t0 = std::chrono::steady_clock::now();
    LineCountReport fx = quartic::count_flexes(c, primes, cfg.seed + 11);
    LineCountReport bt = quartic::count_bitangents(c, primes, cfg.seed + 13);
    quartic::PluckerData pd{};
    pd.dual_degree = c.degree() * (c.degree() - 1);
    pd.dual_cusps = fx.distinct;
    pd.dual_nodes = bt.distinct;
    pd.genus_check = (pd.dual_degree - 1) * (pd.dual_degree - 2) / 2 - pd.dual_nodes - pd.dual_cusps;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    j["flexes"] = count_json(fx);
    j["bitangents"] = count_json(bt);
    j["plucker"] = {{"dual_degree", pd.dual_degree},
                    {"dual_nodes", pd.dual_nodes},
                    {"dual_cusps", pd.dual_cusps},
                    {"genus_check", pd.genus_check}};
    j["elapsed_ms"] = ms;
    j["pass"] = (fx.total_with_multiplicity == 24 && bt.distinct == 28 && pd.genus_check == 3);
    return j;
}

Json tangency_stage(const RunConfig& cfg, const std::vector<fp::u64>& primes,
                    StrataReport* strata_out) {
    Json j;
    long resamples = 0;
    auto t0 = std::chrono::steady_clock::now();
    tangency::TangencyConfig tc =
        tangency::random_config(cfg.seed, std::min(cfg.coefficient_bound, 6L), primes, &resamples);
    j["f4"] = tc.f4.form().to_string();
    j["q"] = tc.q.form().to_string();
    j["g4"] = tc.g4.form().to_string();
    j["resamples"] = resamples;
    StrataReport rep = tangency::enumerate_strata(tc, primes, cfg.seed + 31);
    Json strata = Json::array();
    for (auto& s : rep.strata) {
        Json e;
        e["label"] = s.label;
        e["description"] = s.description;
        e["dimension"] = s.dimension;
        if (s.cardinality >= 0)
            e["cardinality"] = s.cardinality;
        else
            e["cardinality"] = "n/a";
        e["fiber_case"] = tangency::to_string(s.fiber_case);
        strata.push_back(e);
    }
    j["strata"] = strata;
    j["dual_intersection_distinct"] = rep.dual_intersection_distinct;
    j["dual_intersection_double"] = rep.dual_intersection_double;
    j["identity_144_eq_128_plus_2x8"] = rep.identity_144;
    j["confirmed_by_primes"] = rep.confirmed_by_primes;
    j["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    j["pass"] = rep.identity_144;
    if (strata_out) *strata_out = rep;
    return j;
}

Json prym_stage(const RunConfig& cfg) {
    Json j;
    auto t0 = std::chrono::steady_clock::now();
    // involution algebra on randomized sheaves
    fp::u64 rng = cfg.seed ^ 0x9999;
    long checked = 0;
    bool inv_ok = true, fixed_ok = true;
    for (long m : {-1L, 0L, 1L}) {
        for (long s = 0; s <= 4; ++s) {
            for (int it = 0; it < 25; ++it) {
                prym::GluingSheaf f = prym::random_sheaf(rng, m, s);
                inv_ok &= prym::apply_tau(prym::apply_tau(f)).equals_up_to_scale(f);
                inv_ok &= prym::apply_iota(prym::apply_iota(f)).equals_up_to_scale(f);
                inv_ok &= prym::apply_kappa(prym::apply_kappa(f)).equals_up_to_scale(f);
                inv_ok &= prym::apply_tau(prym::apply_iota(f))
                              .equals_up_to_scale(prym::apply_iota(prym::apply_tau(f)));
                ++checked;
            }
        }
    }
    for (int it = 0; it < 1000; ++it) {
        prym::GluingSheaf r = prym::random_sheaf(rng, 0, 4);
        prym::GluingSheaf f(r.coords(), 0, 0, r.nodes(), 0);
        bool onlocus = f.nodes()[0].lambda * f.nodes()[1].lambda ==
                       f.nodes()[2].lambda * f.nodes()[3].lambda;
        fixed_ok &= prym::kappa_fixed(f) == onlocus;
    }
    j["involution_suite"] = {{"instances", checked}, {"pass", inv_ok}};
    j["kappa_fixed_locus"] = {{"samples", 1000}, {"pass", fixed_ok}};

    // theta characteristics
    prym::NodeCoords nodes = prym::NodeCoords::of(Scalar::integer(1), Scalar::integer(2));
    auto thetas = prym::theta_characteristics(nodes);
    Json th = Json::array();
    for (auto& t : thetas) th.push_back(t.to_string());
    j["theta_characteristics"] = th;

    // boundary constants on the pinned configuration
    prym::NodeCoords zs = prym::NodeCoords::of(Scalar::integer(1), Scalar::integer(2));
    prym::BoundaryConstants bc = prym::boundary_gluing_constants(zs);
    j["boundary_constants"] = {{"nodes", "1,-1,2,-2"},
                               {"horizontal", scalar_json(bc.horizontal)},
                               {"vertical", scalar_json(bc.vertical)},
                               {"cross_ratio", scalar_json(bc.cross_ratio)}};

    // stability tables
    Json stab = Json::array();
    for (long k : {0L, 3L, 4L, 7L, 8L}) {
        Json e;
        e["k"] = k;
        Json adm = Json::array();
        for (auto [d, dp] : prym::semistable_bidegrees(k, 4))
            adm.push_back(Json::array({d, dp}));
        e["semistable_s4"] = adm;
        long dsum = (k - 4) / 2;
        if (2 * dsum == k - 4) {
            e["direct_sum_H"] = prym::to_string(prym::classify_stability(
                dsum, dsum, 0, k, prym::Polarization::H));
            e["direct_sum_H_eps"] = prym::to_string(prym::classify_stability(
                dsum, dsum, 0, k, prym::Polarization::H_eps));
        }
        stab.push_back(e);
    }
    j["stability"] = stab;

    // fiber models
    Json fibers = Json::array();
    for (FiberCase c : {FiberCase::i, FiberCase::ii, FiberCase::iii, FiberCase::iv, FiberCase::v,
                        FiberCase::vi, FiberCase::vii, FiberCase::viii}) {
        prym::PrymFiberModel m = prym::prym_fiber_model(c);
        Json e;
        e["case"] = tangency::to_string(c);
        Json strata = Json::array();
        for (auto& s : m.strata)
            strata.push_back({{"name", s.name}, {"space", s.space.to_string()}, {"euler", s.euler}});
        e["strata"] = strata;
        e["euler"] = m.total_euler();
        fibers.push_back(e);
    }
    j["fiber_models"] = fibers;
    j["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    j["pass"] = inv_ok && fixed_ok && thetas.size() == 2;
    return j;
}

Json local_stage(const RunConfig& cfg) {
    Json j;
    auto t0 = std::chrono::steady_clock::now();
    luna::KappaAction ka = luna::kappa_coordinate_action();
    j["kappa"] = {{"involution", ka.is_involution},
                  {"quadric_sign", ka.quadric_sign},
                  {"intertwines_weights", ka.intertwines_weights}};
    Json hps = Json::array();
    for (auto& h : luna::derived_fixed_hyperplanes(ka)) {
        std::ostringstream os;
        os << "u" << h.i1 << h.j1 << (h.sign > 0 ? " = u" : " = -u") << h.i2 << h.j2;
        hps.push_back(os.str());
    }
    j["fixed_hyperplanes"] = hps;

    luna::GradedIdeal flag = luna::GradedIdeal::flag();
    Json fh = Json::array();
    for (long d = 0; d <= std::min(cfg.degree_cap, 3L); ++d) fh.push_back(flag.hilbert(d));
    j["flag_hilbert"] = fh;

    luna::GradedIdeal fix = luna::GradedIdeal::kappa_fixed();
    Json kh = Json::array();
    bool hil_ok = true;
    for (long d = 0; d <= cfg.degree_cap; ++d) {
        long v = fix.hilbert(d);
        kh.push_back(v);
        hil_ok &= (v == (2 * d + 1) * (2 * d + 2) * (2 * d + 3) / 6);
    }
    j["kappa_hilbert"] = kh;
    j["variety_degree"] = fix.variety_degree();

    j["isolated_fixed_points"] = luna::isolated_fixed_point_count();
    auto qc = luna::quadric_cone_model();
    j["quadric_cone"] = {{"gram_rank", qc.gram_rank},
                         {"cone_dim", qc.cone_dim},
                         {"orbit_dim", qc.orbit_dim},
                         {"quotient_dim", qc.quotient_dim}};
    j["invariants_generated_to_degree"] =
        luna::invariant_generation_check(luna::WeightAction{}, static_cast<int>(cfg.degree_cap));
    Json mv = Json::array();
    for (long k = -2; k <= 2; ++k)
        mv.push_back(luna::mukai_pairing({0, 1, k - 2}, {0, 1, k - 2}) + 2);
    j["moduli_dimension_samples"] = mv;
    j["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    j["pass"] = hil_ok && fix.variety_degree() == 8 && qc.gram_rank == 8;
    return j;
}

Json euler_stage(const RunConfig&, const StrataReport& strata) {
    Json j;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<prym::PrymFiberModel> fibers;
    for (FiberCase c : {FiberCase::smooth, FiberCase::i, FiberCase::ii, FiberCase::iii,
                        FiberCase::iv, FiberCase::v, FiberCase::vi, FiberCase::vii,
                        FiberCase::viii})
        fibers.push_back(prym::prym_fiber_model(c));
    euler::EulerReport rep = euler::total_euler(strata, fibers);
    Json cs = Json::array();
    for (auto& c : rep.contributions)
        cs.push_back({{"stratum", c.stratum},
                      {"base_chi", c.base_chi},
                      {"fiber_chi", c.fiber_chi},
                      {"product", c.product}});
    j["contributions"] = cs;
    j["total"] = rep.total;
    j["comparison"] = {{"fujiki", rep.fujiki},
                       {"hodge", {rep.fujiki_hodge[0], rep.fujiki_hodge[1], rep.fujiki_hodge[2]}},
                       {"distinct", rep.distinct_from_comparison}};
    j["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    j["pass"] = (rep.total == 268 && rep.fujiki == 226 && rep.distinct_from_comparison);
    return j;
}

int run_pipeline(const RunConfig& cfg, Json& report) {
    report = Json::object();
    report["schema_version"] = 1;
    report["timestamp"] = static_cast<long>(
        std::chrono::duration_cast<std::chrono::seconds>(
            std::chrono::system_clock::now().time_since_epoch())
            .count());
    report["seed"] = cfg.seed;
    report["mode"] = cfg.mode;
    report["config"] = {{"coefficient_bound", cfg.coefficient_bound},
                        {"degree_cap", cfg.degree_cap},
                        {"timeout_seconds", cfg.timeout_seconds}};
    std::vector<fp::u64> primes;
    try {
        primes = resolve_primes(cfg);
    } catch (const std::exception& e) {
        report["error"] = e.what();
        return 2;
    }
    report["primes"] = primes;
    Json stages = Json::array();
    bool all_pass = true;
    auto want = [&](const char* stage) {
        if (cfg.mode == "full") return true;
        return cfg.mode == std::string(stage) + "-only";
    };
    try {
        StrataReport strata;
        bool have_strata = false;
        if (want("quartic")) {
            stages.push_back("quartic");
            report["quartic"] = quartic_stage(cfg, primes);
            all_pass &= report["quartic"]["pass"].get<bool>();
        }
        if (cfg.mode == "full" || cfg.mode == "euler-only") {
            stages.push_back("tangency");
            report["tangency"] = tangency_stage(cfg, primes, &strata);
            all_pass &= report["tangency"]["pass"].get<bool>();
            have_strata = true;
        }
        if (want("prym")) {
            stages.push_back("prym");
            report["prym"] = prym_stage(cfg);
            all_pass &= report["prym"]["pass"].get<bool>();
        }
        if (want("local")) {
            stages.push_back("local");
            report["local"] = local_stage(cfg);
            all_pass &= report["local"]["pass"].get<bool>();
        }
        if (cfg.mode == "full" || cfg.mode == "euler-only") {
            if (!have_strata) throw std::logic_error("euler stage without strata");
            stages.push_back("euler");
            report["euler"] = euler_stage(cfg, strata);
            all_pass &= report["euler"]["pass"].get<bool>();
        }
    } catch (const std::domain_error& e) {
        report["error"] = e.what();
        report["stages_executed"] = stages;
        return 2;
    } catch (const std::invalid_argument& e) {
        report["error"] = e.what();
        report["stages_executed"] = stages;
        return 2;
    } catch (const std::exception& e) {
        report["error"] = e.what();
        report["stages_executed"] = stages;
        return 1;
    }
    report["stages_executed"] = stages;
    report["pass"] = all_pass;
    return all_pass ? 0 : 1;
}

} // namespace prymlab::run

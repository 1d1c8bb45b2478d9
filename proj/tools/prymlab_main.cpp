#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "prymlab/run/pipeline.hpp"

using namespace prymlab;
using run::Json;
using run::RunConfig;

namespace {

void emit(const Json& j, const std::string& json_path) {
    if (json_path.empty()) {
        std::cout << j.dump(2) << std::endl;
    } else {
        std::ofstream out(json_path);
        out << j.dump(2) << std::endl;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

quartic::PlaneCurve load_curve(const std::string& path, fp::u64 seed, long bound,
                               const std::vector<fp::u64>& primes) {
    if (!path.empty()) return quartic::PlaneCurve::from_text(read_file(path));
    fp::u64 st = seed;
    for (int tries = 0; tries < 400; ++tries) {
        quartic::PlaneCurve c = quartic::random_ternary_form(st, 4, bound);
        fp::u64 rr = st ^ 0xabcdef;
        if (quartic::certify_smooth(c, primes[0], rr)) return c;
    }
    throw std::domain_error("no smooth quartic found for this seed");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for the compactified Prym family"};
    app.require_subcommand(1);

    fp::u64 seed = 42;
    std::vector<fp::u64> primes;
    std::string curve_path, json_path, mode = "full", fiber_case = "vi", nodes = "1,-1,2,-2";
    long max_degree = 4, k = 4, s = 4, bound = 10;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--seed", seed, "random seed");
        c->add_option("--prime", primes, "check prime (repeatable)");
        c->add_option("--json", json_path, "write the JSON report to this path");
    };

    auto* cmd_bit = app.add_subcommand("bitangents", "count the bitangents of a quartic");
    cmd_bit->add_option("--curve", curve_path, "polynomial file in X,Y,Z");
    add_common(cmd_bit);
    auto* cmd_flex = app.add_subcommand("flexes", "count the flexes of a quartic");
    cmd_flex->add_option("--curve", curve_path, "polynomial file in X,Y,Z");
    add_common(cmd_flex);
    auto* cmd_pl = app.add_subcommand("plucker", "dual-curve data of a quartic");
    cmd_pl->add_option("--curve", curve_path, "polynomial file in X,Y,Z");
    add_common(cmd_pl);
    auto* cmd_cfg = app.add_subcommand("config-check", "build and validate a tangency pair");
    add_common(cmd_cfg);
    auto* cmd_strata = app.add_subcommand("strata", "stratify the dual plane");
    add_common(cmd_strata);
    auto* cmd_stab = app.add_subcommand("stability", "stability table for one degree");
    cmd_stab->add_option("--k", k, "degree");
    cmd_stab->add_option("--s", s, "number of glued nodes");
    add_common(cmd_stab);
    auto* cmd_fiber = app.add_subcommand("prym-fiber", "stratified fiber model of one case");
    cmd_fiber->add_option("--case", fiber_case, "i..viii");
    add_common(cmd_fiber);
    auto* cmd_glue = app.add_subcommand("glue-constants", "boundary transition constants");
    cmd_glue->add_option("--nodes", nodes, "z1,z2,z3,z4 with z2=-z1, z4=-z3");
    add_common(cmd_glue);
    auto* cmd_local = app.add_subcommand("local-model", "flag and Veronese-cone checks");
    cmd_local->add_option("--max-degree", max_degree, "Hilbert degree cap");
    add_common(cmd_local);
    auto* cmd_euler = app.add_subcommand("euler", "stratified Euler number");
    add_common(cmd_euler);
    auto* cmd_run = app.add_subcommand("run", "full pipeline");
    cmd_run->add_option("--mode", mode, "full | quartic-only | prym-only | local-only | euler-only");
    cmd_run->add_option("--curve", curve_path, "polynomial file for the quartic stage");
    cmd_run->add_option("--bound", bound, "coefficient bound for seeded draws");
    cmd_run->add_option("--max-degree", max_degree, "Hilbert degree cap");
    add_common(cmd_run);

    CLI11_PARSE(app, argc, argv);

    RunConfig cfg;
    cfg.seed = seed;
    cfg.primes = primes;
    cfg.mode = mode;
    cfg.degree_cap = max_degree;
    cfg.coefficient_bound = bound;

    try {
        std::vector<fp::u64> ps = run::resolve_primes(cfg);
        Json j;
        j["schema_version"] = 1;
        int rc = 0;
        if (app.got_subcommand(cmd_bit) || app.got_subcommand(cmd_flex) ||
            app.got_subcommand(cmd_pl)) {
            quartic::PlaneCurve c = load_curve(curve_path, seed, bound, ps);
            j["curve"] = c.form().to_string();
            if (app.got_subcommand(cmd_bit)) {
                auto r = quartic::count_bitangents(c, ps, seed);
                j["distinct"] = r.distinct;
                j["confirmed_by_primes"] = r.confirmed_by_primes;
                j["eliminant_degrees"] = r.eliminant_degrees;
                rc = (r.distinct == 28) ? 0 : 1;
            } else if (app.got_subcommand(cmd_flex)) {
                auto r = quartic::count_flexes(c, ps, seed);
                j["total_with_multiplicity"] = r.total_with_multiplicity;
                j["distinct"] = r.distinct;
                Json part = Json::object();
                for (auto& [m, n] : r.multiplicity_partition) part[std::to_string(m)] = n;
                j["multiplicity_partition"] = part;
                rc = (r.total_with_multiplicity == 24) ? 0 : 1;
            } else {
                auto r = quartic::plucker_data(c, ps, seed);
                j["dual_degree"] = r.dual_degree;
                j["dual_nodes"] = r.dual_nodes;
                j["dual_cusps"] = r.dual_cusps;
                j["genus_check"] = r.genus_check;
                rc = (r.genus_check == 3) ? 0 : 1;
            }
        } else if (app.got_subcommand(cmd_cfg)) {
            long resamples = 0;
            auto tc = tangency::random_config(seed, std::min(bound, 6L), ps, &resamples);
            j["f4"] = tc.f4.form().to_string();
            j["q"] = tc.q.form().to_string();
            j["g4"] = tc.g4.form().to_string();
            j["resamples"] = resamples;
            j["pass"] = true;
        } else if (app.got_subcommand(cmd_strata)) {
            j = run::tangency_stage(cfg, ps);
            rc = j["pass"].get<bool>() ? 0 : 1;
        } else if (app.got_subcommand(cmd_stab)) {
            j["k"] = k;
            j["s"] = s;
            Json adm = Json::array();
            for (auto [d, dp] : prym::semistable_bidegrees(k, s))
                adm.push_back(Json::array({d, dp}));
            j["semistable"] = adm;
            Json table = Json::array();
            long sum = k + s - 4;
            for (long d = sum / 2 - 6; d <= sum / 2 + 7; ++d) {
                Json e;
                e["bidegree"] = Json::array({d, sum - d});
                e["H"] = prym::to_string(
                    prym::classify_stability(d, sum - d, s, k, prym::Polarization::H));
                e["H_eps"] = prym::to_string(
                    prym::classify_stability(d, sum - d, s, k, prym::Polarization::H_eps));
                table.push_back(e);
            }
            j["table"] = table;
        } else if (app.got_subcommand(cmd_fiber)) {
            tangency::FiberCase tag = tangency::FiberCase::unclassifiable;
            for (auto c : {tangency::FiberCase::i, tangency::FiberCase::ii,
                           tangency::FiberCase::iii, tangency::FiberCase::iv,
                           tangency::FiberCase::v, tangency::FiberCase::vi,
                           tangency::FiberCase::vii, tangency::FiberCase::viii})
                if (tangency::to_string(c) == fiber_case) tag = c;
            if (tag == tangency::FiberCase::unclassifiable)
                throw std::invalid_argument("unknown case tag: " + fiber_case);
            auto m = prym::prym_fiber_model(tag);
            j["case"] = fiber_case;
            Json strata = Json::array();
            for (auto& st : m.strata)
                strata.push_back(
                    {{"name", st.name}, {"space", st.space.to_string()}, {"euler", st.euler}});
            j["strata"] = strata;
            j["euler"] = m.total_euler();
            for (auto& [name, v] : m.adjacency_constants)
                j["adjacency_constants"][name] = run::scalar_json(v);
        } else if (app.got_subcommand(cmd_glue)) {
            std::vector<long> zs;
            std::stringstream ss(nodes);
            std::string tok;
            while (std::getline(ss, tok, ',')) zs.push_back(std::stol(tok));
            if (zs.size() != 4) throw std::invalid_argument("--nodes needs 4 integers");
            prym::NodeCoords c{{exact::Scalar::integer(zs[0]), exact::Scalar::integer(zs[1]),
                                exact::Scalar::integer(zs[2]), exact::Scalar::integer(zs[3])}};
            auto bc = prym::boundary_gluing_constants(c);
            j["nodes"] = nodes;
            j["horizontal"] = run::scalar_json(bc.horizontal);
            j["vertical"] = run::scalar_json(bc.vertical);
            j["cross_ratio"] = run::scalar_json(bc.cross_ratio);
        } else if (app.got_subcommand(cmd_local)) {
            j = run::local_stage(cfg);
            rc = j["pass"].get<bool>() ? 0 : 1;
        } else if (app.got_subcommand(cmd_euler)) {
            tangency::StrataReport strata;
            j["tangency"] = run::tangency_stage(cfg, ps, &strata);
            j["euler"] = run::euler_stage(cfg, strata);
            rc = j["euler"]["pass"].get<bool>() ? 0 : 1;
        } else if (app.got_subcommand(cmd_run)) {
            if (!curve_path.empty()) cfg.curve_text = read_file(curve_path);
            Json rep;
            rc = run::run_pipeline(cfg, rep);
            j = rep;
        }
        emit(j, json_path);
        return rc;
    } catch (const std::domain_error& e) {
        std::cerr << "precondition violation: " << e.what() << std::endl;
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition violation: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "verification failure: " << e.what() << std::endl;
        return 1;
    }
}

#ifndef PRYMLAB_QUARTIC_COUNTING_HPP
#define PRYMLAB_QUARTIC_COUNTING_HPP

#include <map>
#include <vector>

#include "prymlab/quartic/plane_curve.hpp"

namespace prymlab::quartic {

struct LineCountReport {
    long total_with_multiplicity = 0; // = sum of multiplicity * count
    long distinct = 0;
    std::map<long, long> multiplicity_partition; // multiplicity -> #points/lines
    std::map<std::string, long> per_chart;       // affine / vertical / infinity
    std::vector<long> eliminant_degrees;
    std::vector<fp::u64> confirmed_by_primes;
    bool generic = true;      // all solutions simple / no hyperflex degeneration
    long hyperflex_lines = 0; // lines whose two tangency points collided
    long resamples = 0;
};

struct PluckerData {
    long dual_degree = 0;
    long dual_nodes = 0;
    long dual_cusps = 0;
    long genus_check = 0; // (m-1)(m-2)/2 - nodes - cusps
    bool generic = true;  // counts attained their generic values
};

// Intersection count of c with its Hessian. Exact over Q, cross-checked
// mod every prime in `primes`; throws if c is not certified smooth.
LineCountReport count_flexes(const PlaneCurve& c, const std::vector<fp::u64>& primes,
                             fp::u64 seed);

// Lines with deg gcd(f|l, (f|l)') >= 2, split into genuine bitangents
// (two distinct tangency points) and inflectional tangents via the order-2
// subresultant discriminant. Counted mod each prime; all primes must agree.
// strict = true rejects hyperflex-type degenerations.
LineCountReport count_bitangents(const PlaneCurve& c, const std::vector<fp::u64>& primes,
                                 fp::u64 seed, bool strict = true);

PluckerData plucker_data(const PlaneCurve& c, const std::vector<fp::u64>& primes,
                         fp::u64 seed);

// The combined tangency system {S0 = S1 = 0} over one prime: distinct counts.
struct TangencySystemCount {
    long n_all = 0;     // nodes + cusps of the dual, i.e. bitangents + flex lines
    long n_flex = 0;    // order-2 subresultant discriminant vanishes
    long n_bitangent = 0;
    long n_horizontal_bitangent = 0; // slope a = 0 among chart-0 bitangents
    bool hyperflex_present = false;
    long eliminant_degree = 0;
};

TangencySystemCount tangency_count_mod_p(const PlaneCurve& c, fp::u64 p, fp::u64& rng,
                                         int chart);

} // namespace prymlab::quartic

#endif

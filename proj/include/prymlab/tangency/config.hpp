#ifndef PRYMLAB_TANGENCY_CONFIG_HPP
#define PRYMLAB_TANGENCY_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include "prymlab/quartic/counting.hpp"
#include "prymlab/quartic/dual.hpp"

namespace prymlab::tangency {

using quartic::PlaneCurve;
using exact::Scalar;

// A pair of smooth quartics whose pencil contains the square of a smooth
// conic: g4 = q^2 - f4, so they meet in 8 points of multiplicity 2 on {q=0}.
struct TangencyConfig {
    PlaneCurve f4; // branch quartic
    PlaneCurve q;  // the conic
    PlaneCurve g4; // q^2 - f4
    std::pair<long, long> pencil_witness{1, 1};

    // caches
    mutable std::optional<PlaneCurve> dual_f4_q, dual_g4_q;
    const PlaneCurve& dual_f4() const;
    const PlaneCurve& dual_g4() const;
};

// Builds and fully validates the configuration; throws on any failed
// invariant (degenerate pencil, singular member, intersection not 8 x 2).
TangencyConfig build_config(const PlaneCurve& f4, const PlaneCurve& q,
                            const std::vector<fp::u64>& primes, fp::u64 seed);

// Seeded random configuration: rejection-resamples coefficients until all
// invariants hold. resamples reports the number of rejected draws.
TangencyConfig random_config(fp::u64 seed, long bound, const std::vector<fp::u64>& primes,
                             long* resamples = nullptr);

enum class FiberCase {
    smooth,
    i,    // one node, branches swapped
    ii,   // one cusp
    iii,  // two nodes swapped
    iv,   // two invariant nodes
    v,    // two cusps swapped
    vi,   // three nodes, one invariant
    vii,  // one tacnode
    viii, // two smooth conics meeting in 4 points
    unclassifiable
};
std::string to_string(FiberCase c);

struct StratumRecord {
    std::string label;       // Pi0..Pi8
    std::string description;
    int dimension = 0;
    long cardinality = -1;   // -1 encodes "n/a" for positive-dimensional strata
    FiberCase fiber_case = FiberCase::smooth;
};

struct StrataReport {
    std::vector<StratumRecord> strata;
    long dual_intersection_distinct = 0; // 136 for a generic configuration
    long dual_intersection_double = 0;   // 8
    bool identity_144 = false;           // 12*12 - 2*8 == 128 checked exactly
    std::vector<fp::u64> confirmed_by_primes;
};

// The nine strata of the dual plane with exact cardinalities:
// 24 / 28 / 24 / 128 / 8 / 28 on the zero-dimensional ones.
StrataReport enumerate_strata(const TangencyConfig& cfg, const std::vector<fp::u64>& primes,
                              fp::u64 seed);

// Membership of an exact dual-plane point in the strata, decided through the
// two dual eliminants, their gradients and Hessian blocks.
FiberCase classify_member(const TangencyConfig& cfg, const std::array<Scalar, 3>& t);

} // namespace prymlab::tangency

#endif

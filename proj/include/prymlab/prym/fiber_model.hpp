#ifndef PRYMLAB_PRYM_FIBER_MODEL_HPP
#define PRYMLAB_PRYM_FIBER_MODEL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prymlab/prym/gluing.hpp"
#include "prymlab/tangency/config.hpp"

namespace prymlab::prym {

using tangency::FiberCase;

// Symbolic space built from atoms with computable Euler characteristic.
struct SpaceDescriptor {
    enum class Kind { point, affine_line, torus, elliptic, p1, finite, product, disjoint, extension };
    Kind kind = Kind::point;
    long n = 0; // finite cardinality, or number of copies for disjoint
    std::vector<SpaceDescriptor> parts;

    static SpaceDescriptor point();
    static SpaceDescriptor C();      // affine line
    static SpaceDescriptor Cstar();  // torus
    static SpaceDescriptor E();      // elliptic curve
    static SpaceDescriptor P1();
    static SpaceDescriptor finite(long n);
    static SpaceDescriptor product(SpaceDescriptor a, SpaceDescriptor b);
    static SpaceDescriptor disjoint(long copies, SpaceDescriptor x);
    static SpaceDescriptor extension(SpaceDescriptor base, SpaceDescriptor fiber);

    long euler() const;
    std::string to_string() const;
};

struct FiberStratum {
    std::string name;
    SpaceDescriptor space;
    long euler = 0;
};

// Stratification of the fiber of the compactified family over one point of
// a given degeneration case, with its Euler number and, for the reducible
// case, the boundary identification constants.
struct PrymFiberModel {
    FiberCase tag = FiberCase::smooth;
    std::vector<FiberStratum> strata;
    std::map<std::string, Scalar> adjacency_constants;
    long total_euler() const;
};

// The stratum list per degeneration case. Where the gluing data is toric
// the model is re-derived from the involution action on gluing parameters
// and cross-checked; the elliptic-base cases carry their fiber conditions
// verified on the additive/multiplicative parameters.
PrymFiberModel prym_fiber_model(FiberCase tag,
                                const std::optional<NodeCoords>& coords = std::nullopt);

} // namespace prymlab::prym

#endif

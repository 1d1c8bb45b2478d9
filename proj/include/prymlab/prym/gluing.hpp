#ifndef PRYMLAB_PRYM_GLUING_HPP
#define PRYMLAB_PRYM_GLUING_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "prymlab/exact/scalar.hpp"

namespace prymlab::prym {

using exact::Scalar;

// Node coordinates of the two components meeting in 4 points, in the normal
// form z2 = -z1, z4 = -z3 (the covering involution acts by z -> -z and
// permutes the nodes in pairs 1<->2, 3<->4).
struct NodeCoords {
    std::array<Scalar, 4> z;
    static NodeCoords of(Scalar z1, Scalar z3);
    void validate() const; // distinct, nonzero, normal form
};

struct NodeState {
    bool glued = true;
    Scalar lambda; // nonzero when glued
};

// Rank-1 torsion-free sheaf on the 4-node reducible curve, encoded by the
// component degrees, the per-node gluing data and the degree twist m of the
// ambient family. Gluing vectors are taken modulo one overall nonzero scale.
// chi = d_plus + d_minus - s + 2 must equal 2m - 2.
class GluingSheaf {
public:
    GluingSheaf(NodeCoords coords, long d_plus, long d_minus,
                std::array<NodeState, 4> nodes, long twist);

    const NodeCoords& coords() const { return coords_; }
    long d_plus() const { return d_plus_; }
    long d_minus() const { return d_minus_; }
    long twist() const { return twist_; }
    const std::array<NodeState, 4>& nodes() const { return nodes_; }
    long glued_count() const;
    long chi() const { return d_plus_ + d_minus_ - glued_count() + 2; }

    // canonical representative: first glued lambda scaled to 1
    GluingSheaf canonical() const;
    bool equals_up_to_scale(const GluingSheaf& o) const;

    GluingSheaf tensor(const GluingSheaf& invertible) const; // by a fully glued sheaf

    std::string to_string() const;

private:
    NodeCoords coords_;
    long d_plus_, d_minus_;
    std::array<NodeState, 4> nodes_;
    long twist_;
};

// cover involution: nodes permuted by (1 2)(3 4), degrees kept
GluingSheaf apply_tau(const GluingSheaf& f);

// duality: glued constants inverted, split markers kept, component degrees
// reflected about the self-dual bidegree of the ambient twist
GluingSheaf apply_iota(const GluingSheaf& f);

GluingSheaf apply_kappa(const GluingSheaf& f); // iota after tau

bool kappa_fixed(const GluingSheaf& f);

// The two covering-invariant theta-characteristics: fully glued sheaves of
// bidegree (1,1) with gluing vectors (1,1,1,1) and (1,1,-1,-1), obtained by
// solving the invariance and square-is-dualizing conditions on gluing data.
std::vector<GluingSheaf> theta_characteristics(const NodeCoords& coords);

// gluing vector of the dualizing sheaf in the standard trivializations,
// derived from the opposite-residue condition at the nodes
std::array<Scalar, 4> dualizing_gluing_vector(const NodeCoords& coords);

// Transition constants of the two boundary gluings of the compactified
// fiber, derived by composing the two degeneration limits symbolically.
// Both gluings are oriented so that horizontal * vertical = 1; the
// horizontal constant equals the square of the cross-ratio
// [z1,z2;z3,z4] = ((z3-z1)(z4-z2)) / ((z3-z2)(z4-z1)).
struct BoundaryConstants {
    Scalar horizontal;
    Scalar vertical;
    Scalar cross_ratio;
    // basis factors of the first degeneration limit at the surviving nodes:
    // (z3 - z2)/(z3 - z1) and (z4 - z2)/(z4 - z1)
    std::array<Scalar, 2> limit_factors;
};
BoundaryConstants boundary_gluing_constants(const NodeCoords& coords);

// seeded random chi-consistent sheaf for property suites
GluingSheaf random_sheaf(fp::u64& rng, long twist, long glued_count);

} // namespace prymlab::prym

#endif

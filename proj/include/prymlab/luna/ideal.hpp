#ifndef PRYMLAB_LUNA_IDEAL_HPP
#define PRYMLAB_LUNA_IDEAL_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "prymlab/exact/multipoly.hpp"

namespace prymlab::luna {

using exact::MultiPoly;

// The (x1..x4, y1..y4) one-parameter weight pattern (+1 on x, -1 on y).
struct WeightAction {
    std::array<int, 8> weights{+1, +1, +1, +1, -1, -1, -1, -1};
    long weight_of_monomial(const exact::Exponents& e) const;
};

// every weight-0 monomial of total degree <= max_degree factors into the
// quadratic invariants u_ij = x_i y_j; checked by exhaustive enumeration
// with a constructive factorization
bool invariant_generation_check(const WeightAction& action, int max_degree);

// kappa on (x1..x4, y1..y4): a signed permutation squaring to the identity,
// anti-preserving the obstruction quadric sum x_i y_i (so its cone is
// preserved and the fixed 4-space is isotropic), and intertwining the weight
// action with its inverse.
struct KappaAction {
    std::array<std::array<long, 8>, 8> matrix{}; // image[i] = sum matrix[i][j] var_j
    bool is_involution = false;
    int quadric_sign = 0; // Q o kappa = quadric_sign * Q
    bool intertwines_weights = false;
};
KappaAction kappa_coordinate_action();

// linear condition u_{i1 j1} = sign * u_{i2 j2} induced by kappa on the
// invariants u_ij = x_i y_j
struct UPairing {
    int i1, j1, i2, j2;
    int sign;
};
std::vector<UPairing> derived_fixed_hyperplanes(const KappaAction& k);

// Homogeneous ideal in the 16 variables u_ij with a Hilbert-function
// evaluator. hilbert(d) is certified exactly over Q by a two-sided modular
// squeeze: the Macaulay rank of the generators bounds it from above, the
// rank of a parametrization that annihilates the ideal bounds it from
// below, and the two bounds meet.
class GradedIdeal {
public:
    enum class Parametrization { incidence, veronese_fixed };

    static GradedIdeal flag();        // Segre quadrics + the trace hyperplane
    static GradedIdeal kappa_fixed(); // flag + the 6 derived hyperplanes

    const std::vector<MultiPoly>& generators() const { return gens_; }
    long hilbert(long d) const;          // certified value
    long parametrization_rank(long d) const; // oracle side of the squeeze

    // variety degree from the interpolated cubic Hilbert polynomial:
    // third finite difference of h(1..4)
    long variety_degree() const;

private:
    GradedIdeal() = default;
    std::pair<int, int> var_pairs_at(size_t t) const { return var_pairs_[t]; }
    std::vector<MultiPoly> gens_;            // in the 16 u variables
    Parametrization param_ = Parametrization::incidence;
    std::vector<std::string> reduced_vars_;  // after substituting the linear part
    std::vector<MultiPoly> reduced_gens_;    // quadrics in the reduced ring
    std::vector<std::pair<int, int>> var_pairs_; // reduced var index -> (i, j)
    mutable std::map<long, long> cache_;
    friend GradedIdeal build_ideal(bool with_kappa);
};

struct QuadricConeReport {
    int gram_rank = 0;    // 8
    int cone_dim = 0;     // 7
    int orbit_dim = 1;    // the one-parameter stabilizer
    int quotient_dim = 0; // 6
};
QuadricConeReport quadric_cone_model();

// Cardinality of the isolated component of the fixed locus: the square
// roots of a fixed line bundle on the genus-3 fixed curve form a torsor
// under the 2-torsion of its Jacobian, so there are 2^(2*3) = 64 of them.
// Recorded as a constant; no curve arithmetic is performed.
long isolated_fixed_point_count();

} // namespace prymlab::luna

#endif

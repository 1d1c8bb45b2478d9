#ifndef PRYMLAB_PRYM_STABILITY_HPP
#define PRYMLAB_PRYM_STABILITY_HPP

#include <string>
#include <vector>

namespace prymlab::prym {

enum class Polarization { H, H_eps };
enum class Stability { stable, strictly_semistable, unstable, not_a_sheaf };
std::string to_string(Stability s);

// Verdict for a sheaf on the reducible member with component degrees (d, dp)
// glued at s of the 4 nodes, inside the degree-k family.
//
// chi consistency d + dp - s + 2 = k - 2 is checked first. Under H the
// conditions are d - s <= dp and dp - s <= d, strict semistability meaning
// equality in at least one. Under the perturbed polarization the slope
// comparisons acquire an infinitesimal term with the sign of eps*(k - 2):
// subsheaves on the favored component get slope-increased by eps. This keeps
// the strict solutions, makes the former equality cases stable or unstable,
// and destabilizes the direct sums (for k != 2; at k = 2 every relevant
// slope is 0 and no polarization separates them).
// plus_oriented selects which component the perturbation favors.
Stability classify_stability(long d, long dp, long s, long k, Polarization pol,
                             bool plus_oriented = true);

// All (d, dp) with the given s that are H-semistable in degree k.
std::vector<std::pair<long, long>> semistable_bidegrees(long k, long s);

enum class TwistConic { primary, mirror }; // C_i itself or its partner C'_i

// component-degree shift of tensoring by the twist conic
std::pair<long, long> bidegree_shift(long d, long dp, bool same_curve, TwistConic c);

// One listed component of the indeterminacy locus of the degree-raising
// birational map psi = tensor by the twist conic.
struct IndetComponent {
    bool full_fiber = false; // the whole fiber over the distinguished curve
    long d = 0, dp = 0;      // component label when not the full fiber
    bool over_distinguished = false; // over Gamma_i (else: each Gamma_j, j != i)
    long count = 1;          // 1 or 27
    std::string text;
};

// Components derived from the shift rule: a component is indeterminate iff
// the generic image fails to be stable in degree k + 2.
std::vector<IndetComponent> indeterminacy_components(long k, TwistConic c);

} // namespace prymlab::prym

#endif

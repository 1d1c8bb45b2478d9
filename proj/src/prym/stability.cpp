#include "prymlab/prym/stability.hpp"

#include <sstream>
#include <stdexcept>

namespace prymlab::prym {

std::string to_string(Stability s) {
    switch (s) {
        case Stability::stable: return "stable";
        case Stability::strictly_semistable: return "strictly-semistable";
        case Stability::unstable: return "unstable";
        case Stability::not_a_sheaf: return "not-a-sheaf";
    }
    return "?";
}

namespace {

// sign of v + w * eps for an infinitesimal eps > 0
int eps_sign(long v, long w) {
    if (v != 0) return v > 0 ? 1 : -1;
    if (w != 0) return w > 0 ? 1 : -1;
    return 0;
}

} // namespace

Stability classify_stability(long d, long dp, long s, long k, Polarization pol,
                             bool plus_oriented) {
    if (s < 0 || s > 4) throw std::invalid_argument("classify_stability: s out of range");
    if (d + dp - s + 2 != k - 2) return Stability::not_a_sheaf;
    long lhs_plus = d - s - dp;  // subsheaf carried by the plus component
    long lhs_minus = dp - s - d; // subsheaf carried by the minus component
    if (pol == Polarization::H) {
        if (lhs_plus > 0 || lhs_minus > 0) return Stability::unstable;
        if (lhs_plus == 0 || lhs_minus == 0) return Stability::strictly_semistable;
        return Stability::stable;
    }
    // Perturbed slopes: the favored component's subsheaf condition becomes
    // 2*lhs <= a*eps*(k-2) with a > 0, the other the mirror inequality.
    long w = k - 2;
    long w_plus = plus_oriented ? -w : w;
    int s1 = eps_sign(2 * lhs_plus, w_plus);
    int s2 = eps_sign(2 * lhs_minus, -w_plus);
    if (s1 > 0 || s2 > 0) return Stability::unstable;
    if (s1 == 0 || s2 == 0) return Stability::strictly_semistable;
    return Stability::stable;
}

std::vector<std::pair<long, long>> semistable_bidegrees(long k, long s) {
    std::vector<std::pair<long, long>> out;
    // chi consistency: d + dp = k + s - 4; enumerate over a window wide
    // enough to contain every semistable solution (|d - dp| <= s <= 4)
    long sum = k + s - 4;
    for (long d = sum / 2 - 6; d <= sum / 2 + 7; ++d) {
        long dp = sum - d;
        Stability v = classify_stability(d, dp, s, k, Polarization::H);
        if (v == Stability::stable || v == Stability::strictly_semistable)
            out.emplace_back(d, dp);
    }
    return out;
}

std::pair<long, long> bidegree_shift(long d, long dp, bool same_curve, TwistConic c) {
    if (c == TwistConic::primary)
        return same_curve ? std::pair<long, long>{d - 2, dp + 4} : std::pair<long, long>{d + 2, dp};
    return same_curve ? std::pair<long, long>{d + 4, dp - 2} : std::pair<long, long>{d, dp + 2};
}

std::vector<IndetComponent> indeterminacy_components(long k, TwistConic c) {
    // component labels of the fiber over a reducible member: bidegrees of the
    // open locally free stratum, d + dp = k, |d - dp| <= 3 (even k gives 3
    // components, odd k gives 4)
    std::vector<std::pair<long, long>> labels;
    for (long d = (k - 3) / 2 - 2; d <= (k + 3) / 2 + 2; ++d) {
        long dp = k - d;
        if (std::abs(d - dp) <= 3) labels.emplace_back(d, dp);
    }
    auto image_not_stable = [&](long d, long dp, bool same) {
        auto [td, tdp] = bidegree_shift(d, dp, same, c);
        // image lives in degree k + 2; stable iff |td - tdp| < 4
        return std::abs(td - tdp) >= 4;
    };
    std::vector<IndetComponent> out;
    // over the distinguished curve
    std::vector<std::pair<long, long>> bad_same;
    for (auto [d, dp] : labels)
        if (image_not_stable(d, dp, true)) bad_same.emplace_back(d, dp);
    if (bad_same.size() == labels.size()) {
        IndetComponent f;
        f.full_fiber = true;
        f.over_distinguished = true;
        f.count = 1;
        f.text = "full fiber over the distinguished reducible member";
        out.push_back(f);
    } else {
        for (auto [d, dp] : bad_same) {
            IndetComponent f;
            f.d = d;
            f.dp = dp;
            f.over_distinguished = true;
            std::ostringstream os;
            os << "Jbar^{" << d << "," << dp << "} over the distinguished member";
            f.text = os.str();
            out.push_back(f);
        }
    }
    for (auto [d, dp] : labels) {
        if (!image_not_stable(d, dp, false)) continue;
        IndetComponent f;
        f.d = d;
        f.dp = dp;
        f.over_distinguished = false;
        f.count = 27;
        std::ostringstream os;
        os << "Jbar^{" << d << "," << dp << "} over each of the 27 other reducible members";
        f.text = os.str();
        out.push_back(f);
    }
    return out;
}

} // namespace prymlab::prym

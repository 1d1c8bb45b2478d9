#ifndef PRYMLAB_EULER_REPORT_HPP
#define PRYMLAB_EULER_REPORT_HPP

#include <string>
#include <vector>

#include "prymlab/prym/fiber_model.hpp"

namespace prymlab::euler {

using prym::PrymFiberModel;
using prym::SpaceDescriptor;
using tangency::StrataReport;

// chi of a symbolic space (compactly supported Euler characteristic; for
// the atoms used here it agrees with the ordinary one).
long chi(const SpaceDescriptor& s);

struct Contribution {
    std::string stratum;
    long base_chi = 0;
    long fiber_chi = 0;
    long product = 0;
};

struct EulerReport {
    std::vector<Contribution> contributions;
    long total = 0;
    long fujiki = 0;
    // externally provided comparison data (h11, h12, h22); never derived here
    std::array<long, 3> fujiki_hodge{14, 0, 162};
    bool distinct_from_comparison = false;
};

// chi of the total space from the base stratification and the fiber models:
// sum over strata of chi(base) * chi(fiber). Base strata of positive
// dimension enter through their exact chi, computed from the counted data
// (normalization genus 3 duals with 28 nodes and 24 cusps, punctured in the
// removed points); only the finite strata contribute nonzero products.
EulerReport total_euler(const StrataReport& strata,
                        const std::vector<PrymFiberModel>& fibers);

// 8 + 4 h11 + h22 - 4 h12
long fujiki_euler(long h11, long h12, long h22);

} // namespace prymlab::euler

#endif

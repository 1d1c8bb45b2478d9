#include "prymlab/euler/report.hpp"

#include <stdexcept>

namespace prymlab::euler {

using tangency::FiberCase;
using tangency::StratumRecord;

long chi(const SpaceDescriptor& s) { return s.euler(); }

long fujiki_euler(long h11, long h12, long h22) {
    if (h11 < 0 || h12 < 0 || h22 < 0)
        throw std::invalid_argument("fujiki_euler: negative Hodge number");
    return 8 + 4 * h11 + h22 - 4 * h12;
}

namespace {

long card_of(const StrataReport& rep, const std::string& label) {
    for (auto& s : rep.strata)
        if (s.label == label) return s.cardinality;
    throw std::invalid_argument("missing stratum " + label);
}

// chi of the positive-dimensional base strata, derived from the counted
// data. Each dual curve normalizes to the smooth quartic (genus 3, chi -4);
// gluing its node pairs drops chi by one per node. The open strata remove
// the curve's own singular points plus the points shared with the other
// dual (one normalization preimage each except nodes, which have two).
long base_chi(const StratumRecord& s, const StrataReport& rep) {
    if (s.cardinality >= 0) return s.cardinality;
    const long chi_norm = -4;
    long shared = rep.dual_intersection_distinct;
    if (s.label == "Pi1")
        return chi_norm - (2 * card_of(rep, "Pi4") + card_of(rep, "Pi2") + shared);
    if (s.label == "Pi3")
        return chi_norm - (2 * card_of(rep, "Pi8") + card_of(rep, "Pi5") + shared);
    if (s.label == "Pi0") {
        long chi_d = chi_norm - card_of(rep, "Pi4");
        long chi_b = chi_norm - card_of(rep, "Pi8");
        return 3 - (chi_b + chi_d - shared);
    }
    throw std::invalid_argument("base_chi: unknown positive-dimensional stratum " + s.label);
}

} // namespace

EulerReport total_euler(const StrataReport& strata, const std::vector<PrymFiberModel>& fibers) {
    EulerReport rep;
    auto fiber_of = [&](FiberCase tag) -> const PrymFiberModel& {
        for (auto& f : fibers)
            if (f.tag == tag) return f;
        throw std::invalid_argument("total_euler: missing fiber model for case " +
                                    tangency::to_string(tag));
    };
    long total = 0;
    long base_total = 0;
    for (auto& s : strata.strata) {
        const PrymFiberModel& f = fiber_of(s.fiber_case);
        Contribution c;
        c.stratum = s.label;
        c.base_chi = base_chi(s, strata);
        c.fiber_chi = f.total_euler();
        c.product = c.base_chi * c.fiber_chi;
        total += c.product;
        base_total += c.base_chi;
        rep.contributions.push_back(c);
    }
    // consistency: the base strata partition the plane, so their chi sum to 3
    if (base_total != 3) throw std::logic_error("total_euler: base strata chi do not sum to 3");
    rep.total = total;
    rep.fujiki = fujiki_euler(rep.fujiki_hodge[0], rep.fujiki_hodge[1], rep.fujiki_hodge[2]);
    rep.distinct_from_comparison = rep.total != rep.fujiki;
    return rep;
}

} // namespace prymlab::euler

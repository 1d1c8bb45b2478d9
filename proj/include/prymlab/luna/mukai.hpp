#ifndef PRYMLAB_LUNA_MUKAI_HPP
#define PRYMLAB_LUNA_MUKAI_HPP

namespace prymlab::luna {

// (rank, multiple of the degree-4 polarization class, chi - rank)
struct MukaiVector {
    long v0 = 0, v1 = 0, v2 = 0;
};

// v1.w1 - v0.w2 - v2.w0 with the polarization square H^2 = 4
long mukai_pairing(const MukaiVector& v, const MukaiVector& w);

} // namespace prymlab::luna

#endif

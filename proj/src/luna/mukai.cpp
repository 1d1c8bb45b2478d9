#include "prymlab/luna/mukai.hpp"

namespace prymlab::luna {

long mukai_pairing(const MukaiVector& v, const MukaiVector& w) {
    return 4 * v.v1 * w.v1 - v.v0 * w.v2 - v.v2 * w.v0;
}

} // namespace prymlab::luna

#ifndef PRYMLAB_EXACT_PARSE_HPP
#define PRYMLAB_EXACT_PARSE_HPP

#include <string>
#include <vector>

#include "prymlab/exact/multipoly.hpp"

namespace prymlab::exact {

// Text format: terms `coeff*X^i*Y^j*Z^k` joined by ` + ` / ` - `, rationals
// as `n/d`, unit coefficients and zero exponents omitted. The printer in
// MultiPoly::to_string emits this form in graded-lex order; parse() accepts
// it (plus arbitrary spacing) and round-trips bit-exactly.
MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                     Domain dom = Domain::Q, fp::u64 p = 0);

} // namespace prymlab::exact

#endif

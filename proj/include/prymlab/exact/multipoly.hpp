#ifndef PRYMLAB_EXACT_MULTIPOLY_HPP
#define PRYMLAB_EXACT_MULTIPOLY_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "prymlab/exact/scalar.hpp"

namespace prymlab::exact {

using Exponents = std::vector<std::uint32_t>;

// Graded-lex, larger term first when used as map comparator via std::greater-style.
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const {
        std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
        std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
        if (da != db) return da > db;
        return a > b;
    }
};

// Sparse multivariate polynomial over Scalar: map from exponent vectors to
// nonzero coefficients. The variable list is fixed per polynomial and binary
// operations require identical lists. The zero polynomial has no terms but
// keeps its domain tag.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Scalar, GrlexGreater>;

    MultiPoly() : dom_(Domain::Q), p_(0) {}
    MultiPoly(std::vector<std::string> vars, Domain dom, fp::u64 p = 0)
        : vars_(std::move(vars)), dom_(dom), p_(p) {}

    static MultiPoly zero(std::vector<std::string> vars, Domain dom, fp::u64 p = 0) {
        return MultiPoly(std::move(vars), dom, p);
    }
    static MultiPoly constant(std::vector<std::string> vars, const Scalar& c);
    static MultiPoly variable(std::vector<std::string> vars, size_t idx, Domain dom, fp::u64 p = 0);

    const std::vector<std::string>& vars() const { return vars_; }
    Domain domain() const { return dom_; }
    fp::u64 prime() const { return p_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t var_index(const std::string& v) const;

    void add_term(const Exponents& e, const Scalar& c);
    Scalar coeff(const Exponents& e) const;

    long total_degree() const; // -1 for zero
    long degree_in(size_t var) const;
    bool is_homogeneous() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly scaled(const Scalar& c) const;
    bool operator==(const MultiPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly pow(unsigned e) const;
    MultiPoly derivative(size_t var) const;

    // Exact division; throws if the divisor does not divide exactly.
    MultiPoly exact_div(const MultiPoly& d) const;

    // Substitute each variable by the polynomial images[i] (all over the same
    // variable list / domain as `target_vars` context).
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;
    Scalar eval(const std::vector<Scalar>& point) const;

    // View as univariate in `var`: coefficient polynomials indexed by degree.
    std::vector<MultiPoly> coeffs_in(size_t var) const;
    static MultiPoly from_coeffs_in(size_t var, const std::vector<MultiPoly>& cs,
                                    const std::vector<std::string>& vars, Domain dom, fp::u64 p);

    MultiPoly reduce_mod(fp::u64 p) const; // Q -> F_p coefficientwise

    std::string to_string() const;

private:
    void check_compatible(const MultiPoly& o) const;
    std::vector<std::string> vars_;
    Domain dom_;
    fp::u64 p_;
    TermMap terms_;
};

} // namespace prymlab::exact

#endif

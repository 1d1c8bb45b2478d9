#ifndef PRYMLAB_EXACT_SCALAR_HPP
#define PRYMLAB_EXACT_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

#include "prymlab/exact/fp.hpp"

namespace prymlab::exact {

enum class Domain { Q, Fp };

// Exact coefficient: a rational in lowest terms with positive denominator,
// or a residue in [0, p) for a declared prime p. Mixed-domain arithmetic
// throws; there is no implicit coercion.
class Scalar {
public:
    Scalar() : dom_(Domain::Q), q_(0), r_(0), p_(0) {}

    static Scalar rational(mpq_class v) {
        Scalar s;
        s.dom_ = Domain::Q;
        v.canonicalize();
        s.q_ = std::move(v);
        return s;
    }
    static Scalar rational(long num, long den) {
        if (den == 0) throw std::domain_error("Scalar: zero denominator");
        return rational(mpq_class(num, den));
    }
    static Scalar integer(long v) { return rational(mpq_class(v)); }
    static Scalar residue(fp::u64 v, fp::u64 p) {
        Scalar s;
        s.dom_ = Domain::Fp;
        s.p_ = p;
        s.r_ = v % p;
        return s;
    }
    static Scalar zero(Domain d, fp::u64 p = 0) { return d == Domain::Q ? integer(0) : residue(0, p); }
    static Scalar one(Domain d, fp::u64 p = 0) { return d == Domain::Q ? integer(1) : residue(1, p); }

    Domain domain() const { return dom_; }
    fp::u64 prime() const { return p_; }
    bool is_zero() const { return dom_ == Domain::Q ? q_ == 0 : r_ == 0; }
    bool is_one() const { return dom_ == Domain::Q ? q_ == 1 : r_ == 1; }
    const mpq_class& rational_value() const { require(Domain::Q); return q_; }
    fp::u64 residue_value() const { require(Domain::Fp); return r_; }

    Scalar operator+(const Scalar& o) const {
        match(o);
        return dom_ == Domain::Q ? rational(q_ + o.q_) : residue(fp::add(r_, o.r_, p_), p_);
    }
    Scalar operator-(const Scalar& o) const {
        match(o);
        return dom_ == Domain::Q ? rational(q_ - o.q_) : residue(fp::sub(r_, o.r_, p_), p_);
    }
    Scalar operator*(const Scalar& o) const {
        match(o);
        return dom_ == Domain::Q ? rational(q_ * o.q_) : residue(fp::mul(r_, o.r_, p_), p_);
    }
    Scalar operator/(const Scalar& o) const {
        match(o);
        if (o.is_zero()) throw std::domain_error("Scalar division by zero");
        return dom_ == Domain::Q ? rational(q_ / o.q_) : residue(fp::mul(r_, fp::inv(o.r_, p_), p_), p_);
    }
    Scalar operator-() const {
        return dom_ == Domain::Q ? rational(-q_) : residue(fp::neg(r_, p_), p_);
    }
    Scalar inv() const {
        if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
        return dom_ == Domain::Q ? rational(1 / q_) : residue(fp::inv(r_, p_), p_);
    }
    Scalar pow(long e) const {
        if (e < 0) return inv().pow(-e);
        Scalar r = one(dom_, p_), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }
    bool operator==(const Scalar& o) const {
        if (dom_ != o.dom_ || (dom_ == Domain::Fp && p_ != o.p_)) return false;
        return dom_ == Domain::Q ? q_ == o.q_ : r_ == o.r_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Reduction Q -> F_p; throws if the denominator vanishes mod p.
    Scalar reduce_mod(fp::u64 p) const {
        require(Domain::Q);
        mpz_class num = q_.get_num(), den = q_.get_den();
        mpz_class pz(static_cast<unsigned long>(p));
        mpz_class nr = ((num % pz) + pz) % pz;
        mpz_class dr = ((den % pz) + pz) % pz;
        if (dr == 0) throw std::domain_error("Scalar: denominator divisible by check prime");
        fp::u64 n = nr.get_ui(), d = dr.get_ui();
        return residue(fp::mul(n, fp::inv(d, p), p), p);
    }

    std::string to_string() const {
        if (dom_ == Domain::Q) return q_.get_str();
        return std::to_string(r_);
    }

private:
    void require(Domain d) const {
        if (dom_ != d) throw std::domain_error("Scalar: wrong domain");
    }
    void match(const Scalar& o) const {
        if (dom_ != o.dom_ || (dom_ == Domain::Fp && p_ != o.p_))
            throw std::domain_error("Scalar: mixed-domain arithmetic rejected");
    }
    Domain dom_;
    mpq_class q_;
    fp::u64 r_;
    fp::u64 p_;
};

} // namespace prymlab::exact

#endif

#ifndef PRYMLAB_EXACT_FP_HPP
#define PRYMLAB_EXACT_FP_HPP

#include <cstdint>
#include <map>
#include <vector>
#include <stdexcept>
#include <string>

namespace prymlab::fp {

using u64 = std::uint64_t;

// Arithmetic mod p for p < 2^31: products fit in 64 bits.
inline u64 add(u64 a, u64 b, u64 p) { u64 s = a + b; return s >= p ? s - p : s; }
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 mul(u64 a, u64 b, u64 p) { return (a * b) % p; }
inline u64 neg(u64 a, u64 p) { return a == 0 ? 0 : p - a; }

u64 pow(u64 a, u64 e, u64 p);
u64 inv(u64 a, u64 p);          // throws on a == 0
bool is_prime(u64 n);           // deterministic for n < 2^32
u64 random_prime31(u64& state); // 31-bit prime from a splitmix64 state

u64 splitmix64(u64& state);

// Dense univariate polynomial over F_p. Zero polynomial <-> empty vector;
// degree(zero) == -1. Leading coefficient always nonzero.
class Poly {
public:
    Poly() : p_(0) {}
    explicit Poly(u64 p) : p_(p) {}
    Poly(u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs)) { trim(); }

    static Poly constant(u64 p, u64 v) { return Poly(p, {v % p}); }
    static Poly x(u64 p) { return Poly(p, {0, 1}); }

    u64 prime() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    u64 lc() const { return c_.empty() ? 0 : c_.back(); }
    u64 coeff(int i) const { return (i < 0 || i >= static_cast<int>(c_.size())) ? 0 : c_[i]; }
    const std::vector<u64>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(u64 s) const;
    Poly shifted(int k) const; // * x^k
    bool operator==(const Poly& o) const { return p_ == o.p_ && c_ == o.c_; }

    u64 eval(u64 x) const;
    Poly derivative() const;
    Poly monic() const;

    // Euclidean division; divisor must be nonzero.
    static void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r);
    static Poly gcd(Poly a, Poly b); // monic gcd
    Poly squarefree_part() const;    // monic, zero input throws

    // Res(a, b) with the convention Res(x - a, x - b) = b - a,
    // i.e. lc(b)^deg(a) * prod over roots beta of b of a(beta).
    static u64 resultant(const Poly& a, const Poly& b);

    std::string to_string(const std::string& var = "x") const;

private:
    void trim() { while (!c_.empty() && c_.back() == 0) c_.pop_back(); }
    u64 p_;
    std::vector<u64> c_;
};

// Newton interpolation: values v[i] at pairwise distinct nodes xs[i].
Poly interpolate(u64 p, const std::vector<u64>& xs, const std::vector<u64>& vs);

Poly polmod(const Poly& a, const Poly& t);
Poly mulmod(const Poly& a, const Poly& b, const Poly& t);
Poly powmod(Poly a, u64 e, const Poly& t);
Poly invmod(const Poly& a, const Poly& t); // throws if gcd(a, t) != 1
Poly exact_div(const Poly& a, const Poly& b);

// Distinct-root count per multiplicity over the algebraic closure,
// via the iterated gcd chain h_{k+1} = gcd(h_k, h_k'). Valid for p > deg f.
std::map<long, long> multiplicity_profile(const Poly& f);

// Rank of a dense matrix over F_p; row-major, destroys its input copy.
int rank(std::vector<std::vector<u64>> m, u64 p);

} // namespace prymlab::fp

#endif

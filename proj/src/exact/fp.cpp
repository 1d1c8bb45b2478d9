#include "prymlab/exact/fp.hpp"

#include <algorithm>

namespace prymlab::fp {

u64 pow(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 inv(u64 a, u64 p) {
    a %= p;
    if (a == 0) throw std::domain_error("fp::inv of zero");
    return pow(a, p - 2, p);
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    // Miller-Rabin, deterministic below 3,215,031,751 with these bases.
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull}) {
        u64 x = pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

u64 splitmix64(u64& state) {
    u64 z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

u64 random_prime31(u64& state) {
    for (;;) {
        u64 c = (splitmix64(state) & ((1ull << 31) - 1)) | (1ull << 30) | 1ull;
        if (is_prime(c)) return c;
    }
}

Poly Poly::operator+(const Poly& o) const {
    Poly r(p_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = add(coeff((int)i), o.coeff((int)i), p_);
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r(p_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = sub(coeff((int)i), o.coeff((int)i), p_);
    r.trim();
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(p_);
    Poly r(p_);
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = add(r.c_[i + j], mul(c_[i], o.c_[j], p_), p_);
    }
    r.trim();
    return r;
}

Poly Poly::scaled(u64 s) const {
    s %= p_;
    Poly r(p_);
    r.c_.resize(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = mul(c_[i], s, p_);
    r.trim();
    return r;
}

Poly Poly::shifted(int k) const {
    if (is_zero()) return *this;
    Poly r(p_);
    r.c_.assign(c_.size() + k, 0);
    std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
    return r;
}

u64 Poly::eval(u64 x) const {
    u64 r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = add(mul(r, x, p_), c_[i], p_);
    return r;
}

Poly Poly::derivative() const {
    Poly r(p_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = mul(c_[i], i % p_, p_);
    r.trim();
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(inv(lc(), p_));
}

void Poly::divrem(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw std::domain_error("fp::Poly division by zero");
    u64 p = a.p_;
    q = Poly(p);
    r = a;
    if (a.degree() < b.degree()) return;
    q.c_.assign(a.degree() - b.degree() + 1, 0);
    u64 binv = inv(b.lc(), p);
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        u64 f = mul(r.lc(), binv, p);
        q.c_[k] = f;
        for (int i = 0; i <= b.degree(); ++i)
            r.c_[i + k] = sub(r.c_[i + k], mul(f, b.coeff(i), p), p);
        r.trim();
    }
    q.trim();
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly q(a.p_), r(a.p_);
        divrem(a, b, q, r);
        a = b;
        b = r;
    }
    return a.is_zero() ? a : a.monic();
}

Poly Poly::squarefree_part() const {
    if (is_zero()) throw std::domain_error("squarefree_part of zero");
    if (degree() == 0) return constant(p_, 1);
    Poly g = gcd(*this, derivative());
    Poly q(p_), r(p_);
    divrem(*this, g, q, r);
    return q.monic();
}

u64 Poly::resultant(const Poly& a, const Poly& b) {
    // classical(a,b) = lc(a)^deg b * prod over roots alpha of a of b(alpha);
    // the pinned convention is classical(b, a).
    u64 p = a.p_;
    Poly A = b, B = a;
    if (A.is_zero() || B.is_zero()) throw std::domain_error("resultant of zero polynomial");
    u64 res = 1;
    int sign = 1;
    while (B.degree() > 0) {
        if (A.degree() < B.degree()) {
            if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
            std::swap(A, B);
            continue;
        }
        Poly q(p), r(p);
        divrem(A, B, q, r);
        int dr = r.is_zero() ? -1 : r.degree();
        if (r.is_zero()) return A.degree() == B.degree() && B.degree() == 0 ? 1 : 0;
        res = mul(res, pow(B.lc(), static_cast<u64>(A.degree() - dr), p), p);
        if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
        A = B;
        B = r;
    }
    // B is a nonzero constant
    res = mul(res, pow(B.lc(), static_cast<u64>(A.degree()), p), p);
    return sign == 1 ? res : neg(res, p);
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += " + ";
        s += std::to_string(c_[i]);
        if (i > 0) s += "*" + var + "^" + std::to_string(i);
    }
    return s;
}

Poly interpolate(u64 p, const std::vector<u64>& xs, const std::vector<u64>& vs) {
    size_t n = xs.size();
    if (vs.size() != n || n == 0) throw std::invalid_argument("interpolate: size mismatch");
    // Newton divided differences.
    std::vector<u64> dd(vs);
    for (size_t lvl = 1; lvl < n; ++lvl) {
        for (size_t i = n - 1; i >= lvl; --i) {
            u64 num = sub(dd[i], dd[i - 1], p);
            u64 den = sub(xs[i], xs[i - lvl], p);
            dd[i] = mul(num, inv(den, p), p);
            if (i == lvl) break;
        }
    }
    Poly r(p), base = Poly::constant(p, 1);
    for (size_t i = 0; i < n; ++i) {
        r = r + base.scaled(dd[i]);
        base = base * Poly(p, {neg(xs[i], p), 1});
    }
    return r;
}

Poly polmod(const Poly& a, const Poly& t) {
    Poly q(a.prime()), r(a.prime());
    Poly::divrem(a, t, q, r);
    return r;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& t) { return polmod(a * b, t); }

Poly powmod(Poly a, u64 e, const Poly& t) {
    Poly r = Poly::constant(a.prime(), 1);
    a = polmod(a, t);
    while (e) {
        if (e & 1) r = mulmod(r, a, t);
        a = mulmod(a, a, t);
        e >>= 1;
    }
    return r;
}

Poly invmod(const Poly& a, const Poly& t) {
    // extended Euclid: keep r0 = s0*a (mod t)
    u64 p = a.prime();
    Poly r0 = polmod(a, t), r1 = t;
    Poly s0 = Poly::constant(p, 1), s1(p);
    while (!r1.is_zero()) {
        Poly q(p), rem(p);
        Poly::divrem(r0, r1, q, rem);
        Poly s2 = s0 - q * s1;
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    if (r0.degree() != 0) throw std::domain_error("fp::invmod: not invertible");
    return polmod(s0.scaled(inv(r0.lc(), p)), t);
}

Poly exact_div(const Poly& a, const Poly& b) {
    Poly q(a.prime()), r(a.prime());
    Poly::divrem(a, b, q, r);
    if (!r.is_zero()) throw std::domain_error("fp::exact_div: inexact");
    return q;
}

std::map<long, long> multiplicity_profile(const Poly& f) {
    std::map<long, long> prof;
    if (f.is_zero() || f.degree() == 0) return prof;
    std::vector<long> ge; // ge[k] = #roots with multiplicity >= k+1
    Poly h = f;
    while (!h.is_zero() && h.degree() > 0) {
        ge.push_back(h.squarefree_part().degree());
        h = Poly::gcd(h, h.derivative());
        if (h.degree() == 0) break;
    }
    for (size_t k = 0; k < ge.size(); ++k) {
        long exact = ge[k] - (k + 1 < ge.size() ? ge[k + 1] : 0);
        if (exact > 0) prof[static_cast<long>(k + 1)] = exact;
    }
    return prof;
}

int rank(std::vector<std::vector<u64>> m, u64 p) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] % p == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        u64 pi = inv(m[r][c] % p, p);
        for (size_t j = c; j < cols; ++j) m[r][j] = mul(m[r][j] % p, pi, p);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            u64 f = m[i][c] % p;
            if (f == 0) continue;
            for (size_t j = c; j < cols; ++j) m[i][j] = sub(m[i][j] % p, mul(f, m[r][j], p), p);
        }
        ++r;
    }
    return static_cast<int>(r);
}

} // namespace prymlab::fp

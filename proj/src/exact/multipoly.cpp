#include "prymlab/exact/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace prymlab::exact {

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Scalar& c) {
    MultiPoly r(std::move(vars), c.domain(), c.prime());
    if (!c.is_zero()) r.terms_[Exponents(r.vars_.size(), 0)] = c;
    return r;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, size_t idx, Domain dom, fp::u64 p) {
    MultiPoly r(std::move(vars), dom, p);
    Exponents e(r.vars_.size(), 0);
    e.at(idx) = 1;
    r.terms_[e] = Scalar::one(dom, p);
    return r;
}

size_t MultiPoly::var_index(const std::string& v) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == v) return i;
    throw std::invalid_argument("MultiPoly: unknown variable " + v);
}

void MultiPoly::add_term(const Exponents& e, const Scalar& c) {
    if (e.size() != vars_.size()) throw std::invalid_argument("MultiPoly: exponent arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else {
        Scalar s = it->second + c;
        if (s.is_zero())
            terms_.erase(it);
        else
            it->second = s;
    }
}

Scalar MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar::zero(dom_, p_) : it->second;
}

long MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    // first term is grlex-largest
    const Exponents& e = terms_.begin()->first;
    return std::accumulate(e.begin(), e.end(), 0L);
}

long MultiPoly::degree_in(size_t var) const {
    long d = -1;
    for (auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e[var]));
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    long d = -1;
    for (auto& [e, c] : terms_) {
        long s = std::accumulate(e.begin(), e.end(), 0L);
        if (d < 0) d = s;
        if (s != d) return false;
    }
    return true;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("MultiPoly: variable lists differ");
    if (dom_ != o.dom_ || (dom_ == Domain::Fp && p_ != o.p_))
        throw std::domain_error("MultiPoly: mixed-domain arithmetic rejected");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_, dom_, p_);
    for (auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
    MultiPoly r(vars_, dom_, p_);
    if (c.is_zero()) return r;
    for (auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r(vars_, dom_, p_);
    for (auto& [ea, ca] : terms_) {
        for (auto& [eb, cb] : o.terms_) {
            Exponents e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(vars_, Scalar::one(dom_, p_));
    MultiPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

MultiPoly MultiPoly::derivative(size_t var) const {
    MultiPoly r(vars_, dom_, p_);
    for (auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        Scalar m = dom_ == Domain::Q ? Scalar::integer(e[var]) : Scalar::residue(e[var], p_);
        r.add_term(d, c * m);
    }
    return r;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& d) const {
    check_compatible(d);
    if (d.is_zero()) throw std::domain_error("MultiPoly: division by zero");
    MultiPoly r = *this;
    MultiPoly q(vars_, dom_, p_);
    const auto& [de, dc] = *d.terms_.begin();
    while (!r.is_zero()) {
        const auto& [re, rc] = *r.terms_.begin();
        Exponents e(re.size());
        for (size_t i = 0; i < e.size(); ++i) {
            if (re[i] < de[i]) throw std::domain_error("MultiPoly: inexact division");
            e[i] = re[i] - de[i];
        }
        Scalar c = rc / dc;
        MultiPoly t(vars_, dom_, p_);
        t.terms_[e] = c;
        q = q + t;
        r = r - t * d;
    }
    return q;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    if (images.size() != vars_.size()) throw std::invalid_argument("substitute: arity mismatch");
    if (terms_.empty()) {
        return images.empty() ? MultiPoly(vars_, dom_, p_)
                              : MultiPoly(images[0].vars(), dom_, p_);
    }
    MultiPoly acc(images[0].vars(), dom_, p_);
    for (auto& [e, c] : terms_) {
        MultiPoly t = MultiPoly::constant(images[0].vars(), c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t = t * images[i].pow(e[i]);
        acc = acc + t;
    }
    return acc;
}

Scalar MultiPoly::eval(const std::vector<Scalar>& point) const {
    if (point.size() != vars_.size()) throw std::invalid_argument("eval: arity mismatch");
    Scalar acc = Scalar::zero(dom_, p_);
    for (auto& [e, c] : terms_) {
        Scalar t = c;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t = t * point[i].pow(e[i]);
        acc = acc + t;
    }
    return acc;
}

std::vector<MultiPoly> MultiPoly::coeffs_in(size_t var) const {
    long d = degree_in(var);
    std::vector<MultiPoly> cs(static_cast<size_t>(d + 1), MultiPoly(vars_, dom_, p_));
    for (auto& [e, c] : terms_) {
        Exponents r = e;
        std::uint32_t k = r[var];
        r[var] = 0;
        cs[k].add_term(r, c);
    }
    return cs;
}

MultiPoly MultiPoly::from_coeffs_in(size_t var, const std::vector<MultiPoly>& cs,
                                    const std::vector<std::string>& vars, Domain dom, fp::u64 p) {
    MultiPoly r(vars, dom, p);
    for (size_t k = 0; k < cs.size(); ++k) {
        for (auto& [e, c] : cs[k].terms()) {
            Exponents t = e;
            t[var] += static_cast<std::uint32_t>(k);
            r.add_term(t, c);
        }
    }
    return r;
}

MultiPoly MultiPoly::reduce_mod(fp::u64 p) const {
    MultiPoly r(vars_, Domain::Fp, p);
    for (auto& [e, c] : terms_) r.add_term(e, c.reduce_mod(p));
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        std::string cs = c.to_string();
        bool negative = !cs.empty() && cs[0] == '-';
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        if (negative) cs = cs.substr(1);
        bool any_var = false;
        for (auto x : e)
            if (x) any_var = true;
        if (!any_var || cs != "1") {
            os << cs;
            if (any_var) os << "*";
        }
        bool firstv = true;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!firstv) os << "*";
            firstv = false;
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

} // namespace prymlab::exact

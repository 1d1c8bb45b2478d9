#include "prymlab/exact/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace prymlab::exact {

namespace {

struct Lexer {
    const std::string& s;
    size_t i = 0;
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    char get() {
        skip();
        return s[i++];
    }
    std::string number() {
        skip();
        size_t b = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (b == i) throw std::invalid_argument("parse_poly: expected digits at " + std::to_string(b));
        return s.substr(b, i - b);
    }
    std::string ident() {
        skip();
        size_t b = i;
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
        if (b == i) throw std::invalid_argument("parse_poly: expected identifier at " + std::to_string(b));
        return s.substr(b, i - b);
    }
};

} // namespace

MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                     Domain dom, fp::u64 p) {
    Lexer lx{text};
    MultiPoly out(vars, dom, p);
    if (lx.eof()) throw std::invalid_argument("parse_poly: empty input");
    bool first = true;
    while (!lx.eof()) {
        bool negative = false;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.get();
            negative = (c == '-');
        } else if (!first) {
            throw std::invalid_argument("parse_poly: expected + or - between terms");
        }
        first = false;
        // coefficient (optional), then *var^e factors
        Scalar coeff = Scalar::one(dom, p);
        bool saw_factor = false;
        if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            std::string num = lx.number();
            std::string den = "1";
            if (lx.peek() == '/') {
                lx.get();
                den = lx.number();
            }
            if (dom == Domain::Q) {
                coeff = Scalar::rational(mpq_class(mpz_class(num), mpz_class(den)));
            } else {
                mpz_class nz(num), dz(den), pz(static_cast<unsigned long>(p));
                mpz_class nr = ((nz % pz) + pz) % pz, dr = ((dz % pz) + pz) % pz;
                if (dr == 0) throw std::domain_error("parse_poly: denominator divisible by p");
                coeff = Scalar::residue(nr.get_ui(), p) * Scalar::residue(dr.get_ui(), p).inv();
            }
            saw_factor = true;
        }
        Exponents e(vars.size(), 0);
        while (lx.peek() == '*' || std::isalpha(static_cast<unsigned char>(lx.peek()))) {
            if (lx.peek() == '*') lx.get();
            std::string v = lx.ident();
            size_t idx = vars.size();
            for (size_t k = 0; k < vars.size(); ++k)
                if (vars[k] == v) idx = k;
            if (idx == vars.size()) throw std::invalid_argument("parse_poly: unknown variable " + v);
            unsigned long exp = 1;
            if (lx.peek() == '^') {
                lx.get();
                exp = std::stoul(lx.number());
            }
            e[idx] += static_cast<std::uint32_t>(exp);
            saw_factor = true;
        }
        if (!saw_factor) throw std::invalid_argument("parse_poly: empty term");
        if (negative) coeff = -coeff;
        out.add_term(e, coeff);
    }
    return out;
}

} // namespace prymlab::exact

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prymlab/exact/matrix.hpp"
#include "prymlab/exact/parse.hpp"
#include "prymlab/exact/polyops.hpp"

using namespace prymlab::exact;
namespace fp = prymlab::fp;

namespace {

std::vector<std::string> XV{"x"};
std::vector<std::string> AXV{"a", "x"};

MultiPoly px(const std::string& s) { return parse_poly(s, XV); }
MultiPoly pax(const std::string& s) { return parse_poly(s, AXV); }

MultiPoly random_unipoly(fp::u64& st, int deg, bool monic = false) {
    MultiPoly r(XV, Domain::Q);
    for (int i = 0; i <= deg; ++i) {
        long c = static_cast<long>(fp::splitmix64(st) % 21) - 10;
        if (i == deg && (monic || c == 0)) c = 1;
        Exponents e{static_cast<std::uint32_t>(i)};
        r.add_term(e, Scalar::integer(c));
    }
    return r;
}

} // namespace

TEST_CASE("fp basics") {
    fp::u64 st = 42;
    fp::u64 p = fp::random_prime31(st);
    CHECK(fp::is_prime(p));
    CHECK(p > (1ull << 30));
    CHECK(fp::mul(fp::inv(1234567, p), 1234567, p) == 1);
    CHECK(fp::is_prime(2147483647ull));
    CHECK_FALSE(fp::is_prime(2147483647ull * 3));
}

TEST_CASE("fp poly resultant convention and gcd") {
    fp::u64 p = 1000003;
    // Res(x^2 - 1, x - 2) = f(2) = 3
    fp::Poly f(p, {p - 1, 0, 1});
    fp::Poly g(p, {p - 2, 1});
    CHECK(fp::Poly::resultant(f, g) == 3);
    // Res(x - a, x - b) = b - a  with a=5, b=9
    fp::Poly xa(p, {p - 5, 1}), xb(p, {p - 9, 1});
    CHECK(fp::Poly::resultant(xa, xb) == 4);
    // squarefree
    fp::Poly h = fp::Poly(p, {p - 1, 1}) * fp::Poly(p, {p - 1, 1}) * fp::Poly(p, {2, 1});
    CHECK(h.squarefree_part().degree() == 2);
}

TEST_CASE("fp interpolation") {
    fp::u64 p = 999999937; // prime
    fp::Poly f(p, {3, 0, 5, 7});
    std::vector<fp::u64> xs, vs;
    for (fp::u64 i = 0; i < 4; ++i) {
        xs.push_back(i + 11);
        vs.push_back(f.eval(i + 11));
    }
    CHECK(fp::interpolate(p, xs, vs) == f);
}

TEST_CASE("scalar domains") {
    Scalar a = Scalar::rational(3, 6);
    CHECK(a.to_string() == "1/2");
    Scalar b = Scalar::residue(5, 7);
    CHECK_THROWS_AS(a + b, std::domain_error);
    CHECK((a + a).is_one());
    CHECK(a.reduce_mod(11).residue_value() == 6); // 1/2 = 6 mod 11
}

TEST_CASE("resultant examples") {
    // Res(f, x-a) = f(a)
    CHECK(resultant(px("x^2 - 1"), px("x - 2"), 0) == px("3"));
    // sign pin: Res(x-a, x-b) = b-a
    CHECK(resultant(px("x - 4"), px("x - 9"), 0) == px("5"));
    {
        // symbolic version of the sign pin
        std::vector<std::string> V{"a", "b", "x"};
        MultiPoly xa = parse_poly("x - a", V), xb = parse_poly("x - b", V);
        CHECK(resultant(xa, xb, 2) == parse_poly("b - a", V));
    }
    // derived via hand-expanded 3x3 Sylvester determinant: 4 - a^2
    MultiPoly f = pax("x^2 + a*x + 1");
    MultiPoly g = pax("2*x + a");
    MultiPoly r = resultant(f, g, 1);
    CHECK(r == pax("4 - a^2"));
}

TEST_CASE("resultant antisymmetry and planted common factor") {
    fp::u64 st = 7;
    for (int it = 0; it < 25; ++it) {
        MultiPoly p1 = random_unipoly(st, 2 + static_cast<int>(fp::splitmix64(st) % 3));
        MultiPoly p2 = random_unipoly(st, 2 + static_cast<int>(fp::splitmix64(st) % 3));
        long dp = p1.degree_in(0), dq = p2.degree_in(0);
        MultiPoly lhs = resultant(p1, p2, 0);
        MultiPoly rhs = resultant(p2, p1, 0);
        if ((dp * dq) % 2 == 1) rhs = -rhs;
        CHECK(lhs == rhs);

        MultiPoly common = random_unipoly(st, 1, true);
        MultiPoly r = resultant(p1 * common, p2 * common, 0);
        CHECK(r.is_zero());
    }
}

TEST_CASE("subresultants detect gcd degree") {
    MultiPoly p = px("x - 1").pow(2) * px("x - 2").pow(2);
    auto s = subresultant_coeffs(p, p.derivative(0), 0);
    CHECK(s[0].is_zero());
    CHECK(s[1].is_zero());
    CHECK_FALSE(s[2].is_zero());

    MultiPoly q = px("x - 1").pow(2) * px("x - 2") * px("x - 3");
    auto s2 = subresultant_coeffs(q, q.derivative(0), 0);
    CHECK(s2[0].is_zero());
    CHECK_FALSE(s2[1].is_zero());

    MultiPoly sep = px("x^4 + x + 1"); // separable
    auto s3 = subresultant_coeffs(sep, sep.derivative(0), 0);
    CHECK_FALSE(s3[0].is_zero());
}

TEST_CASE("subresultant polynomial is proportional to the gcd") {
    MultiPoly p = px("x - 1").pow(2) * px("x - 2").pow(2);
    MultiPoly s2 = subresultant_poly(p, p.derivative(0), 0, 2);
    // gcd = (x-1)(x-2) up to scale
    MultiPoly g = px("x^2 - 3*x + 2");
    UniPoly u = to_unipoly(s2, 0), v = to_unipoly(g, 0);
    REQUIRE(u.degree() == 2);
    Scalar scale = u.lc();
    for (int i = 0; i <= 2; ++i) CHECK(u.coeff(i) == scale * v.coeff(i));
}

TEST_CASE("squarefree part") {
    CHECK(squarefree_part(px("x - 1").pow(3) * px("x + 2"), 0) ==
          px("x - 1") * px("x + 2"));
    CHECK(squarefree_part(px("x^4 + 1"), 0) == px("x^4 + 1"));
    MultiPoly m = px("x^2 - 2");
    CHECK(squarefree_part(m * m, 0) == m);
    fp::u64 st = 99;
    for (int it = 0; it < 20; ++it) {
        MultiPoly r = random_unipoly(st, 3, true);
        CHECK(squarefree_part(r * r, 0) == squarefree_part(r, 0));
    }
}

TEST_CASE("restrict_to_line") {
    std::vector<std::string> P{"X", "Y", "Z"};
    MultiPoly f = parse_poly("X^4 + Y^4 + Z^4", P);
    MultiPoly r = restrict_to_line(f, Scalar::integer(0), Scalar::integer(0), 0);
    CHECK(r == px("x^4 + 1").substitute({MultiPoly::variable({"t"}, 0, Domain::Q)}));
    MultiPoly conic = parse_poly("X*Z - Y^2", P);
    MultiPoly rc = restrict_to_line(conic, Scalar::integer(1), Scalar::integer(0), 0);
    CHECK(rc == parse_poly("t - t^2", {"t"}));
    MultiPoly z4 = parse_poly("Z^4", P);
    CHECK(restrict_to_line(z4, Scalar::integer(3), Scalar::integer(5), 0) ==
          parse_poly("1", {"t"}));
    CHECK_THROWS(restrict_to_line(parse_poly("X + Z^2", P), Scalar::integer(0),
                                  Scalar::integer(0), 0));
}

TEST_CASE("Q vs Fp agreement on random resultants") {
    fp::u64 st = 1234;
    fp::u64 p1 = fp::random_prime31(st), p2 = fp::random_prime31(st);
    int done = 0;
    while (done < 100) {
        MultiPoly a = random_unipoly(st, 3), b = random_unipoly(st, 2);
        MultiPoly rq = resultant(a, b, 0);
        for (fp::u64 p : {p1, p2}) {
            MultiPoly rp = resultant(a.reduce_mod(p), b.reduce_mod(p), 0);
            CHECK(rq.reduce_mod(p) == rp);
        }
        ++done;
    }
}

TEST_CASE("matrix rank, kernel, rref consistency; Q vs Fp") {
    fp::u64 st = 5150;
    for (int it = 0; it < 30; ++it) {
        size_t rows = 3 + fp::splitmix64(st) % 3, cols = 3 + fp::splitmix64(st) % 3;
        Matrix m(rows, cols, Domain::Q);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j)
                m.at(i, j) = Scalar::integer(static_cast<long>(fp::splitmix64(st) % 9) - 4);
        int rk = m.rank();
        CHECK(rk + m.kernel_dimension() == static_cast<int>(cols));
        CHECK(m.kernel_basis().size() == static_cast<size_t>(m.kernel_dimension()));
        fp::u64 p = fp::random_prime31(st);
        CHECK(m.reduce_mod(p).rank() == rk); // p does not divide any elementary divisor whp
        for (auto& v : m.kernel_basis()) {
            for (size_t i = 0; i < rows; ++i) {
                Scalar acc = Scalar::integer(0);
                for (size_t j = 0; j < cols; ++j) acc = acc + m.at(i, j) * v[j];
                CHECK(acc.is_zero());
            }
        }
    }
}

TEST_CASE("parser round-trip") {
    std::vector<std::string> P{"X", "Y", "Z"};
    fp::u64 st = 31337;
    for (int it = 0; it < 40; ++it) {
        MultiPoly f(P, Domain::Q);
        for (int t = 0; t < 6; ++t) {
            Exponents e{static_cast<std::uint32_t>(fp::splitmix64(st) % 4),
                        static_cast<std::uint32_t>(fp::splitmix64(st) % 4),
                        static_cast<std::uint32_t>(fp::splitmix64(st) % 4)};
            long num = static_cast<long>(fp::splitmix64(st) % 19) - 9;
            long den = 1 + static_cast<long>(fp::splitmix64(st) % 5);
            f.add_term(e, Scalar::rational(num, den));
        }
        if (f.is_zero()) continue;
        std::string s = f.to_string();
        CHECK(parse_poly(s, P) == f);
        CHECK(parse_poly(s, P).to_string() == s);
    }
    CHECK_THROWS(parse_poly("X + W", {"X", "Y", "Z"}));
}

TEST_CASE("subresultant coefficients at orders 1 and 2 vs chain examples") {
    // gcd structure of a quartic against its derivative, orders 0..2
    MultiPoly p = px("x - 1").pow(3) * px("x - 5"); // flex-type: gcd degree 2
    auto s = subresultant_coeffs(p, p.derivative(0), 0);
    CHECK(s[0].is_zero());
    CHECK(s[1].is_zero());
    CHECK_FALSE(s[2].is_zero());
    MultiPoly sres2 = subresultant_poly(p, p.derivative(0), 0, 2);
    // the order-2 polynomial is proportional to (x-1)^2, so its
    // discriminant vanishes: that separates flex lines from bitangents
    UniPoly u = to_unipoly(sres2, 0);
    REQUIRE(u.degree() == 2);
    Scalar disc = u.coeff(1) * u.coeff(1) -
                  Scalar::integer(4) * u.coeff(2) * u.coeff(0);
    CHECK(disc.is_zero());
    MultiPoly q = px("x - 1").pow(2) * px("x - 5").pow(2); // bitangent-type
    MultiPoly sres2b = subresultant_poly(q, q.derivative(0), 0, 2);
    UniPoly v = to_unipoly(sres2b, 0);
    REQUIRE(v.degree() == 2);
    Scalar discb = v.coeff(1) * v.coeff(1) -
                   Scalar::integer(4) * v.coeff(2) * v.coeff(0);
    CHECK_FALSE(discb.is_zero());
}

TEST_CASE("fp poly chain vs multipoly chain") {
    fp::u64 st = 777;
    fp::u64 p = fp::random_prime31(st);
    for (int it = 0; it < 30; ++it) {
        MultiPoly a = random_unipoly(st, 4), b = random_unipoly(st, 3);
        MultiPoly rq = resultant(a, b, 0);
        fp::Poly fa(p), fb(p);
        {
            UniPoly ua = to_unipoly(a.reduce_mod(p), 0), ub = to_unipoly(b.reduce_mod(p), 0);
            std::vector<fp::u64> ca, cb;
            for (int i = 0; i <= ua.degree(); ++i) ca.push_back(ua.coeff(i).residue_value());
            for (int i = 0; i <= ub.degree(); ++i) cb.push_back(ub.coeff(i).residue_value());
            fa = fp::Poly(p, ca);
            fb = fp::Poly(p, cb);
        }
        CHECK(fp::Poly::resultant(fa, fb) ==
              to_unipoly(rq.reduce_mod(p), 0).coeff(0).residue_value());
    }
}

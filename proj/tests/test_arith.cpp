#include <map>

#include "doctest.h"
#include "psolve/factor.hpp"
#include "psolve/linalg.hpp"
#include "psolve/rational_function.hpp"
#include "support.hpp"

using namespace psolve;
using testing_support::Gen;
using testing_support::P;

namespace {

// Dense schoolbook product, independent of Poly's term-list code.
Poly dense_product(const Poly& a, const Poly& b) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, Rational> acc;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) acc[{ma.dx + mb.dx, ma.dy + mb.dy}] += ca * cb;
    std::vector<Poly::Term> terms;
    for (const auto& [k, c] : acc) terms.emplace_back(Monomial{k.first, k.second}, c);
    return Poly::from_terms(std::move(terms));
}

constexpr int kCases = 1000;

}  // namespace

TEST_CASE("rational literals and printing") {
    CHECK(Rational::from_string("3/4") == Rational(3, 4));
    CHECK(Rational::from_string("-6/8").to_string() == "-3/4");
    CHECK(Rational(4, 2).to_string() == "2");
    CHECK_THROWS(Rational(1, 0));
    CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
    CHECK(Rational(-3, 2) < Rational(0));
}

TEST_CASE("add") {
    CHECK(add(P("x+1"), P("x^2-x+1")) == P("x^2+2"));
    const Poly p = P("3*x^2*y - y + 7");
    CHECK(add(p, Poly{}) == p);
    CHECK(add(P("3*x^2*y^2 + x^3 + 1"), P("-3*x^2*y^2")) == P("x^3+1"));
}

TEST_CASE("mul") {
    CHECK(mul(P("x+1"), P("x^2-x+1")) == P("x^3+1"));
    const Poly p = P("x*y - 2");
    CHECK(mul(p, Poly(1)) == p);
    CHECK(mul(P("y+1"), P("y+x-1")) == P("y^2 + x*y + x - 1"));
}

TEST_CASE("exact_div") {
    CHECK(exact_div(P("x^3+1"), P("x+1")) == P("x^2-x+1"));
    CHECK_FALSE(exact_div(P("x^3+1"), P("y+1")).has_value());
    CHECK(exact_div(P("12*x^2*y*(x^3+1)"), P("x^3+1")) == P("12*x^2*y"));
    CHECK_THROWS_AS(exact_div(P("x"), Poly{}), std::domain_error);
}

TEST_CASE("gcd") {
    CHECK(gcd(P("x^3+1"), P("x+1")) == P("x+1"));
    CHECK(gcd(P("x^2*y + 3"), Poly(1)) == Poly(1));
    const Poly a = mul(P("y+1"), P("y+1"));
    const Poly b = mul(P("y+1"), P("x+1"));
    const Poly g = gcd(a, b);
    CHECK(g == P("y+1"));
    CHECK(exact_div(a, g).has_value());
    CHECK(exact_div(b, g).has_value());
    CHECK(gcd(P("2*x + 4"), Poly{}) == P("x+2"));
    CHECK_THROWS_AS(gcd(Poly{}, Poly{}), std::domain_error);
}

TEST_CASE("partial") {
    CHECK(partial(P("4*x^3*y + 4*y"), Var::x) == P("12*x^2*y"));
    CHECK(partial(P("3*x^2*y^2 + x^3 + 1"), Var::y) == P("6*x^2*y"));
    CHECK(partial(Poly(Rational(7, 3)), Var::x).is_zero());
}

TEST_CASE("eval") {
    CHECK(eval(P("x^3+1"), 1, 0) == Rational(2));
    CHECK(eval(P("y^2 + y*x + x - 1"), 0, 0) == Rational(-1));
    CHECK(eval(Poly{}, Rational(5, 7), 3) == Rational(0));
}

TEST_CASE("rf_reduce") {
    const auto r = rf_reduce(P("x^3+1"), P("x+1"));
    CHECK(r.num() == P("x^2-x+1"));
    CHECK(r.den() == Poly(1));
    const Poly p = P("x*y - 3");
    CHECK(rf_reduce(p, Poly(1)).num() == p);
    const auto s = rf_reduce(P("2*x"), Poly(2));
    CHECK(s.num() == P("x"));
    CHECK(s.den() == Poly(1));
    CHECK_THROWS(rf_reduce(P("x"), Poly{}));
}

TEST_CASE("canonical text") {
    CHECK(P("x^3 + 3*x^2*y^2 + 1").to_string() == "3*x^2*y^2 + x^3 + 1");
    CHECK(P("-2*x + 1/2*x^2").to_string() == "1/2*x^2 - 2*x");
    CHECK(P("0*x").to_string() == "0");
    CHECK(P("-x").to_string() == "-x");
}

TEST_CASE("univariate and homogeneous factors") {
    const auto f = univariate_factors(P("x^3+1"));
    REQUIRE(f.size() == 2);
    CHECK(f[0] == P("x+1"));
    CHECK(f[1] == P("x^2-x+1"));
    CHECK(univariate_factors(P("x^4+4")).size() == 2);
    const auto h = homogeneous_factors(P("x^3*y + x*y^3"));
    CHECK(h.size() == 3);
}

TEST_CASE("linear systems") {
    LinearSystem sys(3);
    sys.add_equation({1, 1, 0}, 3);
    sys.add_equation({0, 1, 1}, 5);
    auto sol = sys.solve();
    REQUIRE(sol.has_value());
    CHECK(sol->particular[0] + sol->particular[1] == Rational(3));
    CHECK(sol->particular[1] + sol->particular[2] == Rational(5));
    CHECK(sol->nullspace.size() == 1);

    LinearSystem bad(1);
    bad.add_equation({2}, 1);
    bad.add_equation({4}, 3);
    CHECK_FALSE(bad.solve().has_value());
}

TEST_CASE("property: ring axioms") {
    Gen gen(101);
    for (int i = 0; i < kCases; ++i) {
        const Poly a = gen.poly(), b = gen.poly(), c = gen.poly();
        REQUIRE(a + b == b + a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a + Poly{} == a);
        REQUIRE(a * Poly(1) == a);
        REQUIRE((a - a).is_zero());
        REQUIRE(a * b == dense_product(a, b));
    }
}

TEST_CASE("property: exact division undoes multiplication") {
    Gen gen(202);
    for (int i = 0; i < kCases; ++i) {
        const Poly a = gen.poly();
        const Poly b = gen.nonzero_poly();
        const auto q = exact_div(mul(a, b), b);
        REQUIRE(q.has_value());
        REQUIRE(*q == a);
    }
}

TEST_CASE("property: Leibniz rule for partial derivatives") {
    Gen gen(303);
    for (int i = 0; i < kCases; ++i) {
        const Poly a = gen.poly(), b = gen.poly();
        for (Var v : {Var::x, Var::y})
            REQUIRE(partial(mul(a, b), v) == add(mul(a, partial(b, v)), mul(partial(a, v), b)));
    }
}

TEST_CASE("property: evaluation is a ring homomorphism") {
    Gen gen(404);
    for (int i = 0; i < kCases; ++i) {
        const Poly a = gen.poly(), b = gen.poly();
        const Rational x0 = gen.rational(), y0 = gen.rational();
        REQUIRE(eval(mul(a, b), x0, y0) == eval(a, x0, y0) * eval(b, x0, y0));
        REQUIRE(eval(add(a, b), x0, y0) == eval(a, x0, y0) + eval(b, x0, y0));
    }
}

TEST_CASE("property: gcd divides both and rf_reduce leaves no common factor") {
    Gen gen(505);
    for (int i = 0; i < 300; ++i) {
        const Poly common = gen.nonzero_poly(2);
        const Poly a = mul(common, gen.nonzero_poly(2));
        const Poly b = mul(common, gen.nonzero_poly(2));
        const Poly g = gcd(a, b);
        REQUIRE(exact_div(a, g).has_value());
        REQUIRE(exact_div(b, g).has_value());
        REQUIRE(exact_div(g, common.monic()).has_value());
        const auto r = rf_reduce(a, b);
        REQUIRE(gcd(r.num(), r.den()).is_constant());
        REQUIRE(r.den().leading_coefficient() == Rational(1));
        REQUIRE(r.num() * b == a * r.den());
    }
}

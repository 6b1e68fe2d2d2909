#include "doctest.h"
#include "psolve/psengine.hpp"
#include "psolve/rational_function.hpp"
#include "psolve/verify.hpp"
#include "support.hpp"

using namespace psolve;
using testing_support::field_of;
using testing_support::P;

namespace {

std::vector<DarbouxPair> pairs_of(const VectorField& vf, std::initializer_list<const char*> polys) {
    std::vector<DarbouxPair> out;
    for (const char* text : polys) {
        const Poly f = P(text);
        out.push_back({f, *cofactor(vf, f)});
    }
    return out;
}

// log-derivative D[R]/R of a structural factor, assuming r0 polynomial.
Poly log_derivative(const VectorField& vf, const IntegratingFactor& R) {
    REQUIRE(R.r0.is_polynomial());
    Poly sum = apply_D(vf, R.r0.num());
    for (const auto& f : R.factors) sum += *cofactor(vf, f.p) * f.exponent;
    return sum;
}

}  // namespace

TEST_CASE("residual") {
    CHECK(residual(field_of(testing_support::kFirstOde)).value == P("-18*x^2*y"));
    CHECK(residual(field_of(testing_support::kSecondOde)).value == P("-2*y - x"));
    CHECK(residual(VectorField(Poly(1), Poly(1))).value.is_zero());
}

TEST_CASE("solve_elementary") {
    const auto v5 = field_of(testing_support::kFirstOde);
    const auto pairs5 = pairs_of(v5, {"x+1", "x^2-x+1"});
    const auto R = solve_elementary(v5, pairs5);
    REQUIRE(R.has_value());

    // Independent 2x2 solve on the x^2*y and x*y coefficients.
    const Monomial x2y{2, 1}, xy{1, 1};
    const Rational a11 = pairs5[0].g.coefficient(x2y), a12 = pairs5[1].g.coefficient(x2y);
    const Rational a21 = pairs5[0].g.coefficient(xy), a22 = pairs5[1].g.coefficient(xy);
    const Rational b1 = residual(v5).value.coefficient(x2y), b2 = residual(v5).value.coefficient(xy);
    const Rational det = a11 * a22 - a12 * a21;
    const Rational n1 = (b1 * a22 - a12 * b2) / det;
    const Rational n2 = (a11 * b2 - b1 * a21) / det;
    CHECK(n1 == Rational(-3, 2));
    CHECK(n2 == Rational(-3, 2));

    REQUIRE(R->factors.size() == 2);
    CHECK(R->r0.is_zero());
    CHECK(R->factors[0].p == P("x+1"));
    CHECK(R->factors[0].exponent == n1);
    CHECK(R->factors[1].p == P("x^2-x+1"));
    CHECK(R->factors[1].exponent == n2);
    CHECK(R->to_string() == "(x + 1)^(-3/2) * (x^2 - x + 1)^(-3/2)");

    const auto v6 = field_of(testing_support::kSecondOde);
    CHECK_FALSE(solve_elementary(v6, pairs_of(v6, {"y+1"})).has_value());

    const auto exact = solve_elementary(field_of("dy/dx = -x/y"), {});
    REQUIRE(exact.has_value());
    CHECK(exact->is_one());
    CHECK(exact->to_string() == "1");
}

TEST_CASE("enumerate_denominators") {
    const auto v6 = field_of(testing_support::kSecondOde);
    const auto d6 = enumerate_denominators(pairs_of(v6, {"y+1"}), 2);
    REQUIRE(d6.size() == 3);
    CHECK(d6[0] == Poly(1));
    CHECK(d6[1] == P("y+1"));
    CHECK(d6[2] == P("(y+1)^2"));

    const auto v5 = field_of(testing_support::kFirstOde);
    const auto d5 = enumerate_denominators(pairs_of(v5, {"x+1", "x^2-x+1"}), 1);
    REQUIRE(d5.size() == 4);
    CHECK(d5[0] == Poly(1));
    CHECK(d5[1] == P("x+1"));
    CHECK(d5[2] == P("x^2-x+1"));
    CHECK(d5[3] == P("x^3+1"));

    const auto none = enumerate_denominators({}, 3);
    REQUIRE(none.size() == 1);
    CHECK(none[0] == Poly(1));
}

TEST_CASE("solve_liouvillian") {
    const auto v6 = field_of(testing_support::kSecondOde);
    const auto R = solve_liouvillian(v6, pairs_of(v6, {"y+1"}), 2, 2);
    REQUIRE(R.has_value());
    CHECK(R->r0 == RationalFunction(P("1/2*x^2 - 2*x")));
    REQUIRE(R->factors.size() == 1);
    CHECK(R->factors[0].p == P("y+1"));
    CHECK(R->factors[0].exponent == Rational(-2));
    CHECK(R->to_string() == "exp(1/2*x^2 - 2*x) * (y + 1)^(-2)");
    CHECK(log_derivative(v6, *R) == residual(v6).value);

    const auto v5 = field_of(testing_support::kFirstOde);
    const auto R5 = solve_liouvillian(v5, pairs_of(v5, {"x+1", "x^2-x+1"}), 4, 2);
    REQUIRE(R5.has_value());
    CHECK(R5->r0.is_zero());
    CHECK(*R5 == *solve_elementary(v5, pairs_of(v5, {"x+1", "x^2-x+1"})));

    const auto exact = solve_liouvillian(field_of("dy/dx = x/y"), {}, 4, 2);
    REQUIRE(exact.has_value());
    CHECK(exact->is_one());
}

TEST_CASE("rational r0 passes the exact-division check") {
    // N = x^2, M = y - 2*x*y + 1: residual is -1 = D[1/x], so R = exp(1/x).
    const VectorField vf(P("y - 2*x*y + 1"), P("x^2"));
    const auto pairs = find_darboux(vf, 2);
    CHECK_FALSE(solve_elementary(vf, pairs).has_value());
    const auto R = solve_liouvillian(vf, pairs, 2, 2);
    REQUIRE(R.has_value());
    CHECK(R->r0 == rf_reduce(Poly(1), P("x")));
    CHECK(R->factors.empty());
    CHECK(derivative_of_exponent(vf, R->r0).has_value());
    CHECK(verify_symbolic(vf, *R).passed);
}

TEST_CASE("serial and parallel Liouvillian searches agree") {
    for (const char* ode : {testing_support::kSecondOde, "dy/dx = x*y + 1", testing_support::kFirstOde}) {
        const auto vf = field_of(ode);
        const auto pairs = find_darboux(vf, 3);
        CHECK(solve_liouvillian(vf, pairs, 4, 2, Execution::serial) ==
              solve_liouvillian(vf, pairs, 4, 2, Execution::parallel));
    }
}

TEST_CASE("branch consistency and scaling") {
    for (const char* ode : {testing_support::kFirstOde, "dy/dx = y", "dy/dx = y + x", "dy/dx = (x + y)/(x - y)",
                            "dy/dx = x/y"}) {
        CAPTURE(ode);
        const auto vf = field_of(ode);
        const auto pairs = find_darboux(vf, 3);
        const auto e = solve_elementary(vf, pairs);
        REQUIRE(e.has_value());
        const auto l = solve_liouvillian(vf, pairs, 4, 2);
        REQUIRE(l.has_value());
        CHECK(log_derivative(vf, *e) == log_derivative(vf, *l));

        IntegratingFactor shifted = *l;
        shifted.r0 = RationalFunction(l->r0.num() + Poly(Rational(7, 3)));
        CHECK(verify_symbolic(vf, shifted).difference.is_zero());
    }
}

// Expected residues below were frozen from scripts/gen_expected.py, which
// recomputes every quantity along an independent route.
#include <catch2/catch_amalgamated.hpp>

#include <padichg/padic.hpp>
#include <padichg/rational.hpp>

using namespace padichg;

TEST_CASE("rational parsing and printing", "[padic]") {
    CHECK(parse_rational("1/3") == Rational(1, 3));
    CHECK(parse_rational("22") == Rational(22));
    CHECK(parse_rational("-4/6") == Rational(-2, 3));
    CHECK(rat_str(Rational(-2, 3)) == "-2/3");
    CHECK(rat_str(Rational(7)) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), invalid_params);
    CHECK_THROWS_AS(parse_rational("x"), invalid_params);
}

TEST_CASE("p-adic valuation", "[padic]") {
    CHECK(valuation(BigInt(45), 3) == 2);
    CHECK(valuation(Rational(45, 7), 3) == 2);
    CHECK(valuation(Rational(7, 45), 3) == -2);
    CHECK(valuation(Rational(0), 5) == VAL_INF);
    CHECK(valuation(BigInt(0), 5) == VAL_INF);
    CHECK(is_p_integral(Rational(1, 3), 5));
    CHECK_FALSE(is_p_integral(Rational(1, 3), 3));
}

TEST_CASE("reduction of p-integral rationals", "[padic]") {
    CHECK(reduce(Rational(11, 6), 5, 2).res == 6);
    CHECK(reduce(Rational(1, 4), 3, 1).res == 1);
    CHECK(reduce(Rational(-1), 7, 2).res == 48);
    CHECK_THROWS_AS(reduce(Rational(1, 5), 5, 2), invalid_params);

    // reduction is a ring homomorphism into Z/p^N
    Rational x(11, 6), y(-3, 7);
    PadicBall rx = reduce(x, 5, 3), ry = reduce(y, 5, 3);
    CHECK(ball_add(rx, ry).res == reduce(x + y, 5, 3).res);
    CHECK(ball_mul(rx, ry).res == reduce(x * y, 5, 3).res);
    CHECK(ball_sub(rx, ry).res == reduce(x - y, 5, 3).res);
}

TEST_CASE("ball arithmetic tracks the worst precision", "[padic]") {
    PadicBall x = ball_normalize(5, 3, BigInt(17));
    PadicBall y = ball_normalize(5, 2, BigInt(8));
    CHECK(ball_add(x, y).prec == 2);
    CHECK(ball_mul(x, y).prec == 2);
    CHECK(ball_add(x, y).res == 0);  // 17 + 8 = 25 = 0 mod 5^2

    PadicBall z = ball_pow_ui(ball_normalize(5, 3, BigInt(2)), 10);
    CHECK(z.res == reduce(Rational(1024), 5, 3).res);
}

TEST_CASE("ball division strips the divisor valuation", "[padic]") {
    // (25 * 3) / 25 = 3 with two digits lost
    PadicBall num = ball_normalize(5, 4, BigInt(75));
    PadicBall den = ball_normalize(5, 4, BigInt(25));
    PadicBall q = ball_div(num, den);
    CHECK(q.prec == 2);
    CHECK(q.res == 3);

    // non-integral quotient: 5 does not divide 3
    PadicBall three = ball_normalize(5, 4, BigInt(3));
    PadicBall five = ball_normalize(5, 4, BigInt(5));
    CHECK_THROWS_AS(ball_div(three, five), nonintegral_error);

    // a divisor with no unit digit cannot be inverted
    PadicBall zero = ball_normalize(5, 2, BigInt(0));
    CHECK_THROWS_AS(ball_div(num, zero), precision_error);
}

TEST_CASE("residue digits render least significant first", "[padic]") {
    PadicBall x = ball_normalize(3, 4, BigInt(22));  // 22 = 1 + 1*3 + 2*9
    CHECK(ball_digits(x) == "1,1,2,0");
    CHECK(ball_residue_mod(x, 2) == 4);
    CHECK_THROWS_AS(ball_residue_mod(x, 5), precision_error);
}

TEST_CASE("branch constants", "[padic]") {
    auto eq = [](const BranchConstants& b, int l, long long q, int lp, int e) {
        return b.l == l && b.q == q && b.l_prime == lp && b.e == e;
    };
    CHECK(eq(branch_constants(Rational(1, 3), 5), 3, 5, 3, 3));
    CHECK(eq(branch_constants(Rational(1, 3), 2), 1, 4, 1, 1));
    CHECK(eq(branch_constants(Rational(1, 5), 2), 1, 4, 3, 2));
    CHECK(eq(branch_constants(Rational(1), 7), 6, 7, 6, 6));
    CHECK(eq(branch_constants(Rational(22), 5), 3, 5, 3, 3));
    CHECK(eq(branch_constants(Rational(5), 5), 0, 5, 0, 0));

    // for odd p the auxiliary exponent e coincides with l
    for (long long p : {3, 5, 7, 13}) {
        for (const Rational& a : {Rational(1, 3), Rational(3, 4), Rational(9)}) {
            if (!is_p_integral(a, p)) continue;
            BranchConstants b = branch_constants(a, p);
            CHECK(b.e == b.l);
        }
    }
}

TEST_CASE("parameter a must be p-integral and not a nonpositive integer", "[padic]") {
    CHECK_THROWS_AS(require_param_a(Rational(0), 5), invalid_params);
    CHECK_THROWS_AS(require_param_a(Rational(-3), 5), invalid_params);
    CHECK_THROWS_AS(require_param_a(Rational(1, 5), 5), invalid_params);
    CHECK_NOTHROW(require_param_a(Rational(-1, 2), 5));
    CHECK_NOTHROW(require_param_a(Rational(22), 5));
}

TEST_CASE("comparison mod p^n needs enough known digits", "[padic]") {
    PadicBall x = ball_normalize(3, 2, BigInt(4));
    PadicBall y = ball_normalize(3, 3, BigInt(13));
    CHECK(ball_eq_mod(x, y, 2));  // 4 = 13 mod 9
    CHECK(ball_eq_mod(x, y, 1));  // 1 = 1 mod 3
    CHECK_THROWS_AS(ball_eq_mod(x, y, 3), precision_error);
}

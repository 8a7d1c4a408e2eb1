#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgdf/intpoly.hpp"
#include "qgdf/oracle.hpp"

using namespace qgdf;

TEST_CASE("q-factorial values and shape") {
    CHECK(q_factorial(0) == IntPoly::one());
    CHECK(q_factorial(2) == IntPoly({1, 1}));
    CHECK(q_factorial(3) == IntPoly({1, 2, 2, 1}));
    for (int k = 0; k <= 8; ++k) {
        IntPoly f = q_factorial(k);
        CHECK(f.degree() == (long long)k * (k - 1) / 2);
        Int fact = 1;
        for (int i = 2; i <= k; ++i) fact *= i;
        CHECK(f.eval(1) == fact);
    }
}

TEST_CASE("q-binomial values") {
    CHECK(q_binomial(2, 1) == IntPoly({1, 1}));
    CHECK(q_binomial(1, 2).is_zero());
    CHECK(q_binomial(-1, 0).is_zero());
    CHECK(q_binomial(3, -1).is_zero());
    CHECK(q_binomial(4, 2) == IntPoly({1, 1, 2, 1, 1}));
}

TEST_CASE("q-binomial shape: degree, positivity, value at 1") {
    for (int n = 0; n <= 12; ++n)
        for (int m = 0; m <= n; ++m) {
            IntPoly b = q_binomial(n, m);
            CHECK(b.degree() == (long long)m * (n - m));
            for (const auto& c : b.coeffs()) CHECK(c > 0);
            Int binom = 1;
            for (int i = 1; i <= m; ++i) binom = binom * (n - m + i) / i;
            CHECK(b.eval(1) == binom);
        }
}

TEST_CASE("q-binomial symmetry and q-Pascal identity") {
    for (int n = 0; n <= 12; ++n)
        for (int m = 0; m <= n; ++m) CHECK(q_binomial(n, m) == q_binomial(n, n - m));
    for (int n = 1; n <= 12; ++n)
        for (int m = 1; m <= n; ++m)
            CHECK(q_binomial(n, m) ==
                  q_binomial(n - 1, m - 1) + IntPoly::monomial(m) * q_binomial(n - 1, m));
}

TEST_CASE("polynomial arithmetic and exact division") {
    IntPoly p({1, 2, 3, 1});
    CHECK(p.eval(1) == 7);
    CHECK(IntPoly().eval(5) == 0);
    CHECK(IntPoly({1, 1}).eval(2) == 3);
    CHECK((p * q_binomial(4, 2)).divide_exact(p) == q_binomial(4, 2));
    CHECK_THROWS_AS(IntPoly({1, 1}).divide_exact(IntPoly({0, 0, 1})), invariant_violation);
    CHECK_THROWS_AS(p.divide_exact(IntPoly()), invariant_violation);
    CHECK(p.to_string() == "1 + 2*q + 3*q^2 + q^3");
}

TEST_CASE("q-binomial at a prime counts subspaces") {
    for (int n = 0; n <= 5; ++n)
        for (int m = 0; m <= n; ++m)
            for (std::int64_t p : {2, 3}) {
                auto spaces = enumerate_subspaces_fq(n, m, p);
                CHECK(Int(spaces.size()) == eval_int(q_binomial(n, m), p));
            }
}

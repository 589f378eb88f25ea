#include "ssr/beta_polynomials.hpp"

#include "ssr/single_optimal.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace ssr;

namespace {

// test-local exact multiply of small integer polynomials (ascending coeffs)
std::vector<long long> mul(const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

void check_equal(const BetaPolynomial& poly, const std::vector<long long>& expected) {
    REQUIRE(poly.coeffs.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(poly.coeffs[i] == BigInt(expected[i]));
    }
}

}  // namespace

TEST_CASE("printed factorizations of P_0..P_6 are reproduced exactly") {
    const auto table = polynomial_table(6);
    REQUIRE(table.polys.size() == 7);

    check_equal(table.polys[0], {1});
    check_equal(table.polys[1], {-1, 1});
    check_equal(table.polys[2], mul({-1, 1}, {-2, 1}));                      // (b-1)(b-2)
    check_equal(table.polys[3], mul({1, -3, 1}, {-2, 1}));                   // (b^2-3b+1)(b-2)
    check_equal(table.polys[4], mul(mul({-3, 1}, {-1, 1}), {1, -3, 1}));     // (b-3)(b-1)(b^2-3b+1)
    check_equal(table.polys[5], mul(mul({-1, 6, -5, 1}, {-3, 1}), {-1, 1})); // (b^3-5b^2+6b-1)(b-3)(b-1)
    check_equal(table.polys[6], mul({-4, 10, -6, 1}, {-1, 6, -5, 1}));
    for (int n = 0; n <= 6; ++n) {
        CHECK(table.polys[static_cast<std::size_t>(n)].degree() == n);
    }
}

TEST_CASE("degrees stay n and construction is exact far past the int64 range") {
    const auto table = polynomial_table(64);
    REQUIRE(table.polys.size() == 65);
    for (int n = 0; n <= 64; ++n) {
        CHECK(table.polys[static_cast<std::size_t>(n)].degree() == n);
        CHECK(table.polys[static_cast<std::size_t>(n)].coeffs.back() == 1);  // monic
    }
    // coefficients overflow int64 from n = 48 on; spot-check magnitude survives
    BigInt max_abs = 0;
    for (const auto& c : table.polys[64].coeffs) {
        const BigInt mag = c < 0 ? BigInt(-c) : c;
        if (mag > max_abs) max_abs = mag;
    }
    CHECK(max_abs > BigInt("9223372036854775807"));
}

TEST_CASE("beta root of the bisection solves P_M(beta) = 1 and the sum rule") {
    for (int m_total = 1; m_total <= 20; ++m_total) {
        const auto table = polynomial_table(m_total);
        const auto sol = solve_recurrence(m_total);
        const double inv_c0 = 1.0 / sol.probs.front();

        CHECK(std::abs(evaluate(table.polys.back(), sol.beta) - 1.0) < 1e-6);
        double sum = 0.0;
        for (const auto& poly : table.polys) sum += evaluate(poly, sol.beta);
        CHECK(std::abs(sum - inv_c0) < 1e-6 * inv_c0);

        // and every coefficient matches its polynomial value
        for (int n = 0; n <= m_total; ++n) {
            const double predicted =
                evaluate(table.polys[static_cast<std::size_t>(n)], sol.beta) * sol.probs.front();
            CHECK(predicted ==
                  doctest::Approx(sol.probs[static_cast<std::size_t>(n)]).epsilon(1e-7));
        }
    }
}

TEST_CASE("polynomial_table rejects negative sizes") {
    CHECK_THROWS_AS(polynomial_table(-1), std::invalid_argument);
}

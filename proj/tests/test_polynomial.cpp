#include <doctest.h>

#include <cayleynut/polynomial.hpp>

#include <stdexcept>

using namespace cayleynut;

namespace {

IntPolynomial p(std::initializer_list<long> coeffs) {
    IntPolynomial out;
    for (long c : coeffs) out.emplace_back(c);
    return out;
}

}  // namespace

TEST_SUITE("polynomial") {

TEST_CASE("degree and trimming") {
    CHECK(poly_degree({}) == -1);
    CHECK(poly_degree(p({5})) == 0);
    CHECK(poly_degree(p({0, 1})) == 1);
    CHECK(poly_trim(p({1, 2, 0, 0})) == p({1, 2}));
    CHECK(poly_trim(p({0, 0})) == IntPolynomial{});
}

TEST_CASE("content and primitive part") {
    CHECK(poly_content(p({6, 4, 10})) == 2);
    CHECK(poly_content({}) == 0);
    CHECK(poly_primitive_part(p({6, 4, 10})) == p({3, 2, 5}));
    // leading coefficient is normalized positive
    CHECK(poly_primitive_part(p({2, -4})) == p({-1, 2}));
    CHECK(poly_primitive_part(p({0, 0})) == IntPolynomial{});
}

TEST_CASE("gcd of simple factorizations") {
    // gcd(x^2 - 1, x - 1) = x - 1
    CHECK(poly_gcd(p({-1, 0, 1}), p({-1, 1})) == p({-1, 1}));
    // gcd(x^2 - 1, x + 1) = x + 1
    CHECK(poly_gcd(p({-1, 0, 1}), p({1, 1})) == p({1, 1}));
    // coprime: gcd(x^2 + 1, x) = 1
    CHECK(poly_gcd(p({1, 0, 1}), p({0, 1})) == p({1}));
    // content is stripped: gcd(2x, 4) = 1 over primitive parts
    CHECK(poly_gcd(p({0, 2}), p({4})) == p({1}));
    // gcd with zero returns the primitive part of the other argument
    CHECK(poly_gcd({}, p({-3, 0, 3})) == p({-1, 0, 1}));
    CHECK(poly_gcd(p({2, 2}), {}) == p({1, 1}));
}

TEST_CASE("gcd with products of cyclotomic-style factors") {
    // (x - 1)(x + 2) = x^2 + x - 2 and (x - 1)(x - 3) = x^2 - 4x + 3
    CHECK(poly_gcd(p({-2, 1, 1}), p({3, -4, 1})) == p({-1, 1}));
    // square factors: gcd((x-1)^2, (x-1)(x+1)) = x - 1
    CHECK(poly_gcd(p({1, -2, 1}), p({-1, 0, 1})) == p({-1, 1}));
    // gcd(x^6 - 1, x^4 - 1) = x^2 - 1 (gcd of exponents)
    CHECK(poly_gcd(poly_xn_minus_1(6), poly_xn_minus_1(4)) == poly_xn_minus_1(2));
    CHECK(poly_gcd(poly_xn_minus_1(9), poly_xn_minus_1(6)) == poly_xn_minus_1(3));
}

TEST_CASE("gcd is symmetric and grows no larger than either argument") {
    const IntPolynomial a = p({-2, 1, 1});
    const IntPolynomial b = p({3, -4, 1});
    CHECK(poly_gcd(a, b) == poly_gcd(b, a));
    CHECK(poly_degree(poly_gcd(a, b)) <= poly_degree(a));
}

TEST_CASE("pseudo-division survives large coefficient growth") {
    // gcd((x+10)^4 (x-1), (x+10)^2 (x+3)) = (x+10)^2
    const auto mul = [](const IntPolynomial& a, const IntPolynomial& b) {
        IntPolynomial out(a.size() + b.size() - 1, Integer(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
        return out;
    };
    const IntPolynomial x10 = p({10, 1});
    const IntPolynomial sq = mul(x10, x10);
    const IntPolynomial lhs = mul(mul(sq, sq), p({-1, 1}));
    const IntPolynomial rhs = mul(sq, p({3, 1}));
    CHECK(poly_gcd(lhs, rhs) == sq);
}

TEST_CASE("x^n - 1 construction") {
    CHECK(poly_xn_minus_1(1) == p({-1, 1}));
    CHECK(poly_xn_minus_1(4) == p({-1, 0, 0, 0, 1}));
    CHECK_THROWS_AS(poly_xn_minus_1(0), std::invalid_argument);
}

}  // TEST_SUITE

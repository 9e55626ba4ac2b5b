#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rtilde/poly.hpp"

#include <random>

using namespace rtilde;

namespace {

IntPolynomial random_poly(std::mt19937& rng, int max_deg, int max_abs) {
    std::uniform_int_distribution<int> deg(0, max_deg), coef(-max_abs, max_abs);
    std::vector<Coeff> cs(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& c : cs) c = coef(rng);
    return IntPolynomial(std::move(cs));
}

// Schoolbook convolution, independent of operator*.
IntPolynomial naive_mul(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial::zero();
    std::vector<Coeff> out(a.coefficients().size() + b.coefficients().size() - 1);
    for (std::size_t i = 0; i < a.coefficients().size(); ++i)
        for (std::size_t j = 0; j < b.coefficients().size(); ++j)
            out[i + j] += a.coefficients()[i] * b.coefficients()[j];
    return IntPolynomial(std::move(out));
}

}  // namespace

TEST_CASE("integer polynomial basics") {
    IntPolynomial z = IntPolynomial::zero();
    CHECK(z.is_zero());
    CHECK(!z.degree().has_value());
    CHECK(z.to_string() == "0");

    IntPolynomial p({1, 0, 3});  // 3t^2 + 1
    CHECK(p.degree() == 2);
    CHECK(p.to_string() == "3t^2 + 1");
    CHECK((p + z) == p);

    IntPolynomial tp1({1, 1}), tm1({-1, 1});
    CHECK((tp1 * tm1) == IntPolynomial({-1, 0, 1}));
    CHECK(IntPolynomial({-1, 0, 1}).to_string() == "t^2 - 1");
    CHECK(IntPolynomial({0, 2, 0, 1}).to_machine_string() == "[0, 2, 0, 1]");
    CHECK(IntPolynomial::t_power(3).is_monic());
    CHECK(!IntPolynomial({0, 2}).is_monic());
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937 rng(20260824);
    for (int i = 0; i < 200; ++i) {
        IntPolynomial a = random_poly(rng, 8, 9), b = random_poly(rng, 8, 9),
                      c = random_poly(rng, 8, 9);
        CHECK((a * (b + c)) == (a * b + a * c));
        CHECK((a * b) == naive_mul(a, b));
        CHECK((a + b) == (b + a));
        CHECK(((a - b) + b) == a);
    }
}

TEST_CASE("laurent polynomial arithmetic") {
    LaurentPolynomial a = LaurentPolynomial::t_power(-1) + LaurentPolynomial::t_power(2, 3);
    CHECK(a.coefficient(-1) == 1);
    CHECK(a.coefficient(0) == 0);
    CHECK(a.max_exponent() == 2);
    CHECK(a.min_exponent() == -1);
    CHECK((a - a).is_zero());
    LaurentPolynomial t = LaurentPolynomial::t_power(1);
    CHECK((t * LaurentPolynomial::t_power(-1)) == LaurentPolynomial::one());
}

TEST_CASE("substitution t -> t - 1/t") {
    CHECK(substitute_t_minus_tinv(IntPolynomial::one()) == LaurentPolynomial::one());
    CHECK(substitute_t_minus_tinv(IntPolynomial({0, 1})) ==
          LaurentPolynomial({{1, 1}, {-1, -1}}));
    CHECK(substitute_t_minus_tinv(IntPolynomial({0, 0, 1})) ==
          LaurentPolynomial({{2, 1}, {0, -2}, {-2, 1}}));
}

TEST_CASE("inverting the substitution") {
    CHECK(express_in_t_minus_tinv(LaurentPolynomial({{1, 1}, {-1, -1}})) ==
          IntPolynomial({0, 1}));

    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        IntPolynomial p = random_poly(rng, 10, 5);
        CHECK(express_in_t_minus_tinv(substitute_t_minus_tinv(p)) == p);
    }

    // t + 1 mixes exponent parities, so it is outside the span.
    CHECK_THROWS_AS(express_in_t_minus_tinv(LaurentPolynomial({{0, 1}, {1, 1}})),
                    std::domain_error);
}

TEST_CASE("classical normalization") {
    // R = t - 1/t with l(u)=0, l(v)=1 solves t^{-1} R'(t^2) = t - t^{-1}.
    CHECK(to_classical_normalization(LaurentPolynomial({{1, 1}, {-1, -1}}), 0, 1) ==
          IntPolynomial({-1, 1}));
    CHECK(to_classical_normalization(LaurentPolynomial::one(), 3, 3) == IntPolynomial::one());
    CHECK_THROWS_AS(to_classical_normalization(LaurentPolynomial({{0, 1}, {1, 1}}), 0, 1),
                    std::domain_error);
}

TEST_CASE("fibonacci polynomials") {
    CHECK(fibonacci(0) == IntPolynomial::one());
    CHECK(fibonacci(1) == IntPolynomial({0, 1}));
    CHECK(fibonacci(2) == IntPolynomial({1, 0, 1}));
    CHECK(fibonacci(5) == IntPolynomial({0, 3, 0, 4, 0, 1}));
    for (std::size_t n = 2; n <= 12; ++n)
        CHECK(fibonacci(n) ==
              (IntPolynomial({0, 1}) * fibonacci(n - 1) + fibonacci(n - 2)));
}

TEST_CASE("modified fibonacci polynomials") {
    CHECK(modified_fibonacci(1) == IntPolynomial({1, 0, 1}));
    CHECK(modified_fibonacci(3) == IntPolynomial({0, 0, 1, 0, 3, 0, 1}));
    CHECK(modified_fibonacci(3).to_string() == "t^6 + 3t^4 + t^2");
    CHECK_THROWS_AS(modified_fibonacci(0), std::domain_error);
    // Evaluation at 1 forgets the t-power shift, leaving Fibonacci numbers.
    Coeff a = 1, b = 1;  // F_0(1), F_1(1)
    for (std::size_t n = 1; n <= 12; ++n) {
        Coeff next = a + b;  // F_{n+1}(1)
        CHECK(modified_fibonacci(n).evaluate(1) == next);
        a = b;
        b = next;
    }
}

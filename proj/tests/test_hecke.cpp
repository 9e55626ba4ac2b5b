#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rtilde/hecke.hpp"

#include <random>

using namespace rtilde;

namespace {

HeckeElement random_element(const CoxeterSystem& sys, std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-3, 3), exp(-2, 2);
    HeckeElement h;
    for (const Element& u : sys.all_elements())
        if (coef(rng) > 0) h.add_term(u, LaurentPolynomial::t_power(exp(rng), coef(rng)));
    return h;
}

}  // namespace

TEST_CASE("generator multiplication") {
    CoxeterSystem s3 = CoxeterSystem::symmetric_group(3);
    HeckeElement e = HeckeElement::unit(s3);

    HeckeElement hs = mul_by_generator(s3, e, 0);
    CHECK(hs.support_size() == 1);
    CHECK(hs.coefficient(s3.generator(0)) == LaurentPolynomial::one());

    // H_s H_s = 1 + (t^-1 - t) H_s.
    HeckeElement sq = mul_by_generator(s3, hs, 0);
    CHECK(sq.coefficient(s3.identity()) == LaurentPolynomial::one());
    CHECK(sq.coefficient(s3.generator(0)) ==
          LaurentPolynomial({{-1, 1}, {1, -1}}));
    CHECK(sq.support_size() == 2);
}

TEST_CASE("braid relation in the algebra") {
    CoxeterSystem s3 = CoxeterSystem::symmetric_group(3);
    HeckeElement lhs = HeckeElement::unit(s3), rhs = HeckeElement::unit(s3);
    for (int s : {0, 1, 0}) lhs = mul_by_generator(s3, lhs, s);
    for (int s : {1, 0, 1}) rhs = mul_by_generator(s3, rhs, s);
    CHECK(lhs == rhs);
}

TEST_CASE("generator inverses") {
    CoxeterSystem s3 = CoxeterSystem::symmetric_group(3);
    HeckeElement e = HeckeElement::unit(s3);

    // H_s^{-1} = H_s + (t - t^-1).
    HeckeElement inv = mul_by_generator_inverse(s3, e, 0);
    CHECK(inv.coefficient(s3.generator(0)) == LaurentPolynomial::one());
    CHECK(inv.coefficient(s3.identity()) == LaurentPolynomial({{1, 1}, {-1, -1}}));

    HeckeElement hs = mul_by_generator(s3, e, 0);
    CHECK(mul_by_generator_inverse(s3, hs, 0) == e);

    std::mt19937 rng(11);
    for (int i = 0; i < 30; ++i) {
        HeckeElement h = random_element(s3, rng);
        for (int s = 0; s < 2; ++s) {
            CHECK(mul_by_generator_inverse(s3, mul_by_generator(s3, h, s), s) == h);
            CHECK(mul_by_generator(s3, mul_by_generator_inverse(s3, h, s), s) == h);
        }
    }
}

TEST_CASE("R-polynomials from the inverse expansion") {
    CoxeterSystem s4 = CoxeterSystem::symmetric_group(4);
    Element s = s4.generator(0);
    CHECK(r_polynomial(s4, s4.identity(), s) == LaurentPolynomial({{1, 1}, {-1, -1}}));
    for (const Element& v : s4.all_elements())
        CHECK(r_polynomial(s4, v, v) == LaurentPolynomial::one());
    CHECK(r_polynomial(s4, s, s4.identity()).is_zero());

    CoxeterSystem i2inf(CoxeterMatrix::dihedral(0));
    CHECK_THROWS_AS(standard_basis_inverse(i2inf, i2inf.canonicalize({0, 1, 0, 1}), 3),
                    std::length_error);
}

TEST_CASE("recursion initial conditions") {
    CoxeterSystem s4 = CoxeterSystem::symmetric_group(4);
    RtildeCache cache;
    for (const Element& v : s4.all_elements()) {
        CHECK(cache.rtilde(s4, v, v) == IntPolynomial::one());
        for (const Element& u : s4.all_elements())
            if (!s4.bruhat_leq(u, v)) CHECK(cache.rtilde(s4, u, v).is_zero());
    }
    CHECK(cache.rtilde(s4, s4.identity(), s4.generator(2)) == IntPolynomial({0, 1}));
    CHECK(cache.rtilde(s4, s4.identity(), s4.element_from_permutation({4, 3, 2, 1})) ==
          IntPolynomial({0, 0, 1, 0, 3, 0, 1}));
}

TEST_CASE("R equals R-tilde after the substitution, all pairs in S4") {
    CoxeterSystem s4 = CoxeterSystem::symmetric_group(4);
    RtildeCache cache;
    std::vector<Element> all = s4.all_elements();
    for (const Element& v : all) {
        HeckeElement inv = standard_basis_inverse(s4, v);
        for (const Element& u : all)
            CHECK(inv.coefficient(u) == substitute_t_minus_tinv(cache.rtilde(s4, u, v)));
    }
}

TEST_CASE("the recursion is independent of the descent choice") {
    CoxeterSystem s4 = CoxeterSystem::symmetric_group(4);
    DescentPolicy first_descent = [](const CoxeterSystem& sys, const Element& v) {
        for (int s = 0; s < sys.rank(); ++s)
            if (sys.is_descent(v, s)) return s;
        return -1;
    };
    RtildeCache def, alt;
    for (const Element& v : s4.all_elements())
        for (const Element& u : s4.all_elements())
            CHECK(def.rtilde(s4, u, v) == alt.rtilde(s4, u, v, first_descent));
}

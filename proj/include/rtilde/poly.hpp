#ifndef RTILDE_POLY_HPP
#define RTILDE_POLY_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rtilde {

using Coeff = boost::multiprecision::cpp_int;

/// Polynomial in t with integer coefficients, stored as an ascending
/// coefficient list with no trailing zeros. The zero polynomial is the
/// empty list; its degree is absent rather than a numeric sentinel.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Coeff> coeffs);

    static IntPolynomial zero() { return IntPolynomial{}; }
    static IntPolynomial one() { return constant(1); }
    static IntPolynomial constant(Coeff c);
    static IntPolynomial t_power(std::size_t k, Coeff c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const;
    const std::vector<Coeff>& coefficients() const { return coeffs_; }
    Coeff coefficient(std::size_t k) const;
    bool is_monic() const;

    Coeff evaluate(const Coeff& x) const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial scaled_by_t_power(std::size_t k) const;

    bool operator==(const IntPolynomial& o) const = default;

    /// `t^6 + 3t^4 + t^2`, descending powers; "0" for zero.
    std::string to_string() const;
    /// `[0, 2, 0, 1]`, ascending coefficients.
    std::string to_machine_string() const;

private:
    void trim();
    std::vector<Coeff> coeffs_;
};

/// Laurent polynomial in t: map exponent -> nonzero coefficient.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    explicit LaurentPolynomial(std::map<int, Coeff> coeffs);

    static LaurentPolynomial zero() { return LaurentPolynomial{}; }
    static LaurentPolynomial one() { return t_power(0); }
    static LaurentPolynomial t_power(int k, Coeff c = 1);
    static LaurentPolynomial from_poly(const IntPolynomial& p);

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, Coeff>& coefficients() const { return coeffs_; }
    Coeff coefficient(int k) const;
    std::optional<int> max_exponent() const;
    std::optional<int> min_exponent() const;

    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;

    bool operator==(const LaurentPolynomial& o) const = default;

    std::string to_string() const;

private:
    std::map<int, Coeff> coeffs_;
};

/// p(t) |-> p(t - t^-1), expanded exactly.
LaurentPolynomial substitute_t_minus_tinv(const IntPolynomial& p);

/// Inverse of the substitution above. Throws std::domain_error when L is
/// not in the integer span of {(t - t^-1)^k}.
IntPolynomial express_in_t_minus_tinv(const LaurentPolynomial& L);

/// Solves R(t) = t^(lu-lv) * R'(t^2) for R'. Throws std::domain_error
/// when R does not have that shape.
IntPolynomial to_classical_normalization(const LaurentPolynomial& R,
                                         std::size_t length_u,
                                         std::size_t length_v);

/// F_0 = 1, F_1 = t, F_n = t*F_{n-1} + F_{n-2}.
IntPolynomial fibonacci(std::size_t n);

/// t^(n-1) * F_{n+1}, n >= 1.
IntPolynomial modified_fibonacci(std::size_t n);

}  // namespace rtilde

#endif

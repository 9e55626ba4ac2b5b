#ifndef RTILDE_HECKE_HPP
#define RTILDE_HECKE_HPP

#include "rtilde/coxeter.hpp"
#include "rtilde/poly.hpp"

#include <functional>
#include <map>
#include <mutex>

namespace rtilde {

/// Finite expansion sum c_u H_u in the standard basis, keyed by canonical
/// form. Zero coefficients are never stored.
class HeckeElement {
public:
    HeckeElement() = default;

    static HeckeElement unit(const CoxeterSystem& sys) {
        HeckeElement h;
        h.terms_[sys.identity()] = LaurentPolynomial::one();
        return h;
    }

    const std::map<Element, LaurentPolynomial>& terms() const { return terms_; }
    LaurentPolynomial coefficient(const Element& u) const;
    void add_term(const Element& u, const LaurentPolynomial& c);
    std::size_t support_size() const { return terms_.size(); }
    bool operator==(const HeckeElement& o) const { return terms_ == o.terms_; }

private:
    std::map<Element, LaurentPolynomial> terms_;
};

/// Right multiplication by H_s: H_u H_s = H_{us} when l(us) > l(u),
/// and H_{us} + (t^-1 - t) H_u otherwise.
HeckeElement mul_by_generator(const CoxeterSystem& sys, const HeckeElement& h, int s);

/// Right multiplication by H_s^{-1} = H_s + (t - t^-1).
HeckeElement mul_by_generator_inverse(const CoxeterSystem& sys, const HeckeElement& h, int s);

/// The full expansion of (H_{v^-1})^{-1} in the standard basis. Throws
/// std::length_error when the support exceeds support_cap.
HeckeElement standard_basis_inverse(const CoxeterSystem& sys, const Element& v,
                                    std::size_t support_cap = SIZE_MAX);

/// Coefficient of H_u in (H_{v^-1})^{-1}, i.e. the R-polynomial R_{u,v}.
LaurentPolynomial r_polynomial(const CoxeterSystem& sys, const Element& u, const Element& v,
                               std::size_t support_cap = SIZE_MAX);

/// Chooses the descent to recurse on; defaults to the rightmost letter of
/// the canonical word of v.
using DescentPolicy = std::function<int(const CoxeterSystem&, const Element&)>;

/// Session-scoped memo cache for the classical recursion.
class RtildeCache {
public:
    IntPolynomial rtilde(const CoxeterSystem& sys, const Element& u, const Element& v,
                         const DescentPolicy& policy = nullptr);

private:
    std::mutex mutex_;
    std::map<std::pair<Word, Word>, IntPolynomial> memo_;
};

/// One-shot convenience wrapper over RtildeCache.
IntPolynomial rtilde_recursive(const CoxeterSystem& sys, const Element& u, const Element& v);

}  // namespace rtilde

#endif

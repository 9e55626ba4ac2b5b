#include "rtilde/hecke.hpp"

#include <stdexcept>

namespace rtilde {

LaurentPolynomial HeckeElement::coefficient(const Element& u) const {
    auto it = terms_.find(u);
    return it == terms_.end() ? LaurentPolynomial::zero() : it->second;
}

void HeckeElement::add_term(const Element& u, const LaurentPolynomial& c) {
    auto it = terms_.find(u);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(u, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

HeckeElement mul_by_generator(const CoxeterSystem& sys, const HeckeElement& h, int s) {
    HeckeElement out;
    const LaurentPolynomial quad =
        LaurentPolynomial::t_power(-1) - LaurentPolynomial::t_power(1);
    for (const auto& [u, c] : h.terms()) {
        Element us = sys.multiply(u, s);
        out.add_term(us, c);
        if (us.length() < u.length()) out.add_term(u, c * quad);
    }
    return out;
}

HeckeElement mul_by_generator_inverse(const CoxeterSystem& sys, const HeckeElement& h, int s) {
    // H_s^{-1} = H_s + (t - t^-1)
    HeckeElement out = mul_by_generator(sys, h, s);
    const LaurentPolynomial shift =
        LaurentPolynomial::t_power(1) - LaurentPolynomial::t_power(-1);
    for (const auto& [u, c] : h.terms()) out.add_term(u, c * shift);
    return out;
}

HeckeElement standard_basis_inverse(const CoxeterSystem& sys, const Element& v,
                                    std::size_t support_cap) {
    // (H_{v^-1})^{-1} = H_{s_1}^{-1} ... H_{s_k}^{-1} for v = s_1 ... s_k.
    HeckeElement h = HeckeElement::unit(sys);
    for (int s : v.canonical) {
        h = mul_by_generator_inverse(sys, h, s);
        if (h.support_size() > support_cap)
            throw std::length_error("Hecke expansion support exceeds cap");
    }
    return h;
}

LaurentPolynomial r_polynomial(const CoxeterSystem& sys, const Element& u, const Element& v,
                               std::size_t support_cap) {
    return standard_basis_inverse(sys, v, support_cap).coefficient(u);
}

IntPolynomial RtildeCache::rtilde(const CoxeterSystem& sys, const Element& u, const Element& v,
                                  const DescentPolicy& policy) {
    if (u == v) return IntPolynomial::one();
    if (v.is_identity()) return IntPolynomial::zero();
    {
        std::lock_guard lock(mutex_);
        if (auto it = memo_.find({u.canonical, v.canonical}); it != memo_.end())
            return it->second;
    }
    IntPolynomial result;
    if (!sys.bruhat_leq(u, v)) {
        result = IntPolynomial::zero();
    } else {
        int s = policy ? policy(sys, v) : v.canonical.back();
        Element vs = sys.multiply(v, s);
        Element us = sys.multiply(u, s);
        if (us.length() < u.length()) {
            result = rtilde(sys, us, vs, policy);
        } else {
            result = rtilde(sys, us, vs, policy) +
                     rtilde(sys, u, vs, policy).scaled_by_t_power(1);
        }
    }
    std::lock_guard lock(mutex_);
    memo_.emplace(std::make_pair(u.canonical, v.canonical), result);
    return result;
}

IntPolynomial rtilde_recursive(const CoxeterSystem& sys, const Element& u, const Element& v) {
    RtildeCache cache;
    return cache.rtilde(sys, u, v);
}

}  // namespace rtilde

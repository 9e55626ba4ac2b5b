#include "rtilde/poly.hpp"

#include <algorithm>
#include <sstream>

namespace rtilde {

IntPolynomial::IntPolynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(Coeff c) {
    IntPolynomial p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPolynomial IntPolynomial::t_power(std::size_t k, Coeff c) {
    IntPolynomial p;
    if (c != 0) {
        p.coeffs_.assign(k + 1, 0);
        p.coeffs_[k] = std::move(c);
    }
    return p;
}

std::optional<std::size_t> IntPolynomial::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

Coeff IntPolynomial::coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Coeff(0);
}

bool IntPolynomial::is_monic() const {
    return !coeffs_.empty() && coeffs_.back() == 1;
}

Coeff IntPolynomial::evaluate(const Coeff& x) const {
    Coeff acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Coeff> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<Coeff> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (coeffs_.empty() || o.coeffs_.empty()) return zero();
    std::vector<Coeff> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::scaled_by_t_power(std::size_t k) const {
    if (coeffs_.empty()) return zero();
    std::vector<Coeff> out(coeffs_.size() + k, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + k] = coeffs_[i];
    return IntPolynomial(std::move(out));
}

namespace {

void append_term(std::ostringstream& os, bool& first, const Coeff& c, int exp) {
    Coeff a = c < 0 ? Coeff(-c) : c;
    if (first) {
        if (c < 0) os << "-";
        first = false;
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || exp == 0) os << a.str();
    if (exp != 0) {
        os << "t";
        if (exp != 1) os << "^" << exp;
    }
}

}  // namespace

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        if (coeffs_[i] != 0) append_term(os, first, coeffs_[i], static_cast<int>(i));
    return os.str();
}

std::string IntPolynomial::to_machine_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ", ";
        os << coeffs_[i].str();
    }
    os << "]";
    return os.str();
}

LaurentPolynomial::LaurentPolynomial(std::map<int, Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();)
        it = (it->second == 0) ? coeffs_.erase(it) : std::next(it);
}

LaurentPolynomial LaurentPolynomial::t_power(int k, Coeff c) {
    LaurentPolynomial p;
    if (c != 0) p.coeffs_[k] = std::move(c);
    return p;
}

LaurentPolynomial LaurentPolynomial::from_poly(const IntPolynomial& p) {
    LaurentPolynomial out;
    const auto& cs = p.coefficients();
    for (std::size_t i = 0; i < cs.size(); ++i)
        if (cs[i] != 0) out.coeffs_[static_cast<int>(i)] = cs[i];
    return out;
}

Coeff LaurentPolynomial::coefficient(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Coeff(0) : it->second;
}

std::optional<int> LaurentPolynomial::max_exponent() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.rbegin()->first;
}

std::optional<int> LaurentPolynomial::min_exponent() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.begin()->first;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    std::map<int, Coeff> out = coeffs_;
    for (const auto& [k, c] : o.coeffs_) out[k] += c;
    return LaurentPolynomial(std::move(out));
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    std::map<int, Coeff> out = coeffs_;
    for (const auto& [k, c] : o.coeffs_) out[k] -= c;
    return LaurentPolynomial(std::move(out));
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    std::map<int, Coeff> out;
    for (const auto& [k1, c1] : coeffs_)
        for (const auto& [k2, c2] : o.coeffs_) out[k1 + k2] += c1 * c2;
    return LaurentPolynomial(std::move(out));
}

std::string LaurentPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        append_term(os, first, it->second, it->first);
    return os.str();
}

LaurentPolynomial substitute_t_minus_tinv(const IntPolynomial& p) {
    LaurentPolynomial x = LaurentPolynomial::t_power(1) - LaurentPolynomial::t_power(-1);
    LaurentPolynomial acc;
    const auto& cs = p.coefficients();
    for (std::size_t i = cs.size(); i-- > 0;) {
        acc = acc * x;
        if (cs[i] != 0) acc = acc + LaurentPolynomial::t_power(0, cs[i]);
    }
    return acc;
}

IntPolynomial express_in_t_minus_tinv(const LaurentPolynomial& L) {
    // Upper-triangular change of basis, peeled from the top degree down.
    LaurentPolynomial rest = L;
    std::vector<Coeff> out;
    while (!rest.is_zero()) {
        int d = *rest.max_exponent();
        if (d < 0) throw std::domain_error("not in the span of (t - t^-1)^k");
        Coeff c = rest.coefficient(d);
        if (static_cast<std::size_t>(d) >= out.size()) out.resize(d + 1, 0);
        out[d] = c;
        rest = rest - substitute_t_minus_tinv(IntPolynomial::t_power(d, c));
        if (auto m = rest.max_exponent(); m && *m >= d)
            throw std::domain_error("not in the span of (t - t^-1)^k");
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial to_classical_normalization(const LaurentPolynomial& R, std::size_t length_u,
                                         std::size_t length_v) {
    // R(t) = t^(lu-lv) R'(t^2): exponent k of R corresponds to exponent
    // (k - lu + lv)/2 of R'.
    int shift = static_cast<int>(length_v) - static_cast<int>(length_u);
    std::vector<Coeff> out;
    for (const auto& [k, c] : R.coefficients()) {
        int e = k + shift;
        if (e < 0 || e % 2 != 0) throw std::domain_error("not of classical R-polynomial shape");
        std::size_t i = static_cast<std::size_t>(e / 2);
        if (i >= out.size()) out.resize(i + 1, 0);
        out[i] = c;
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial fibonacci(std::size_t n) {
    IntPolynomial prev = IntPolynomial::one();
    if (n == 0) return prev;
    IntPolynomial cur = IntPolynomial::t_power(1);
    const IntPolynomial t = IntPolynomial::t_power(1);
    for (std::size_t i = 2; i <= n; ++i) {
        IntPolynomial next = t * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPolynomial modified_fibonacci(std::size_t n) {
    if (n == 0) throw std::domain_error("modified_fibonacci requires n >= 1");
    return fibonacci(n + 1).scaled_by_t_power(n - 1);
}

}  // namespace rtilde

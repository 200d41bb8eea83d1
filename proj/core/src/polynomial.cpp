#include "padic2/polynomial.hpp"

#include <climits>

#include "padic2/errors.hpp"

namespace padic2 {

Polynomial Polynomial::from_integers(const std::vector<mpz_class>& coeffs, long prec) {
    std::vector<PadicNumber> c;
    c.reserve(coeffs.size());
    for (const auto& v : coeffs) c.push_back(PadicNumber::from_integer(v, prec));
    return Polynomial(std::move(c));
}

bool Polynomial::is_monic() const {
    return !c_.empty() && c_.back().residue() == 1;
}

PadicNumber Polynomial::eval(const PadicNumber& x) const {
    if (c_.empty()) throw DomainError("Polynomial::eval: empty polynomial");
    PadicNumber acc = c_.back();
    for (size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

PadicNumber Polynomial::eval(const mpz_class& x) const {
    if (c_.empty()) throw DomainError("Polynomial::eval: empty polynomial");
    PadicNumber acc = c_.back();
    for (size_t i = c_.size() - 1; i-- > 0;) acc = acc.mul_integer(x) + c_[i];
    return acc;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (c_.empty() || o.c_.empty()) return Polynomial();
    long prec = LONG_MAX;
    for (const auto& a : c_) prec = std::min(prec, a.precision());
    for (const auto& a : o.c_) prec = std::min(prec, a.precision());
    std::vector<PadicNumber> out(c_.size() + o.c_.size() - 1, PadicNumber::zero(prec));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(out));
}

}  // namespace padic2

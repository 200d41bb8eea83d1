#ifndef PADIC2_POLYNOMIAL_HPP
#define PADIC2_POLYNOMIAL_HPP

#include <vector>

#include "padic2/padic_number.hpp"

namespace padic2 {

// Dense polynomial over PadicNumber, ascending coefficients.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<PadicNumber> coeffs) : c_(std::move(coeffs)) {}

    static Polynomial constant(PadicNumber v) { return Polynomial({std::move(v)}); }
    static Polynomial from_integers(const std::vector<mpz_class>& coeffs, long prec);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<PadicNumber>& coeffs() const { return c_; }
    const PadicNumber& operator[](size_t i) const { return c_[i]; }
    bool is_monic() const;

    PadicNumber eval(const PadicNumber& x) const;
    PadicNumber eval(const mpz_class& x) const;

    Polynomial operator*(const Polynomial& o) const;

  private:
    std::vector<PadicNumber> c_;
};

}  // namespace padic2

#endif

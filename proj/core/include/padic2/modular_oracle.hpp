#ifndef PADIC2_MODULAR_ORACLE_HPP
#define PADIC2_MODULAR_ORACLE_HPP

#include <gmpxx.h>

#include <vector>

#include "padic2/newton_polygon.hpp"

namespace padic2 {

// Exact integer q-expansion a_0 + a_1 q + ... + a_prec q^prec of a modular
// form of the stated weight (level one).  Ground truth for the trace and
// polygon computations: everything here is big-integer exact.
class QExpansion {
  public:
    QExpansion(long weight, std::vector<mpz_class> coeffs)
        : weight_(weight), a_(std::move(coeffs)) {}

    long weight() const { return weight_; }
    long precision() const { return static_cast<long>(a_.size()) - 1; }
    const mpz_class& operator[](size_t i) const { return a_[i]; }
    const std::vector<mpz_class>& coeffs() const { return a_; }

    QExpansion operator*(const QExpansion& o) const;
    QExpansion operator-(const QExpansion& o) const;
    QExpansion scaled(const mpz_class& c) const;
    // exact division by an integer; throws if any coefficient resists
    QExpansion divided(const mpz_class& c) const;

  private:
    long weight_;
    std::vector<mpz_class> a_;
};

// E4 = 1 + 240 sum sigma_3(n) q^n, E6 = 1 - 504 sum sigma_5(n) q^n.
QExpansion eisenstein(long weight, long prec);
// Delta = (E4^3 - E6^2)/1728.
QExpansion delta_form(long prec);

// dim S_{2k} for even 2k >= 4.
long cusp_dim(long weight);

// Victor Miller echelon basis f_i = q^i + O(q^{dim+1}), i = 1..dim.
std::vector<QExpansion> miller_basis(long weight, long prec);

using HeckeMatrix = std::vector<std::vector<mpz_class>>;

// Exact matrix of T_p (p = 2 or 3) on the Miller basis.
HeckeMatrix hecke_matrix(long weight, long p);
inline HeckeMatrix t2_matrix(long weight) { return hecke_matrix(weight, 2); }

// Trace of the n-th power of the T_2 matrix.
mpz_class t2_power_trace(long weight, long n);

// det(1 - T_2 X): coefficient list ascending in X, degree = dim S_{2k}.
std::vector<mpz_class> char_poly_reversed(long weight);

// 2-adic polygon of det(1 - T_2 X), optionally truncated.
NewtonPolygon oracle_polygon(long weight, long truncate_at = -1);

}  // namespace padic2

#endif

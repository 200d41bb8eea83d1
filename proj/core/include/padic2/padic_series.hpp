#ifndef PADIC2_PADIC_SERIES_HPP
#define PADIC2_PADIC_SERIES_HPP

#include <vector>

#include "padic2/newton_polygon.hpp"
#include "padic2/padic_number.hpp"
#include "padic2/polynomial.hpp"

namespace padic2 {

// Truncated power series over PadicNumber with an analytic floor on every
// coefficient (represented and omitted alike):
//
//     v2(c_u) >= floor_offset + floor_slope*u - v2(u!).
//
// The floor form is closed under addition (min of offsets), multiplication
// (offsets add, binomial bound on v2(u!) splits) and integer scaling, which
// is what lets truncation certify the slope factorization below.
class PadicSeries {
  public:
    PadicSeries() = default;
    PadicSeries(std::vector<PadicNumber> coeffs, long floor_offset, long floor_slope);
    // A truncation with no analytic floor (tail and censored coefficients
    // cannot be certified; eval refuses).
    static PadicSeries without_floor(std::vector<PadicNumber> coeffs);

    long trunc_degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<PadicNumber>& coeffs() const { return c_; }
    const PadicNumber& operator[](size_t i) const { return c_[i]; }
    bool has_floor() const { return has_floor_; }
    long floor_offset() const { return floor_offset_; }
    long floor_slope() const { return floor_slope_; }

    // Analytic lower bound on v2 of coefficient u (any u, also beyond the
    // truncation degree); very negative when no floor is tracked.
    long coeff_floor(long u) const;
    // Lower bound on v2 of every omitted coefficient (u > trunc_degree).
    long tail_bound() const;

    PadicSeries operator+(const PadicSeries& o) const;
    PadicSeries operator-(const PadicSeries& o) const;
    // Product truncated at min(trunc degrees).
    PadicSeries operator*(const PadicSeries& o) const;

    // Scale by c = unit * 2^e (exact integer, may be negative).
    PadicSeries mul_integer(const mpz_class& c) const;
    // Divide every coefficient by n! (inverse odd part, then 2^{v2(n!)}).
    PadicSeries div_factorial(unsigned long n) const;

    // Value at an integer; precision capped by the tail bound.
    PadicNumber eval(const mpz_class& x) const;

    // Hull of (u, v2(c_u)) over represented coefficients, certified: throws
    // PrecisionError if a coefficient that is zero at its stored precision
    // (and the tail) cannot be proven to lie on or above the hull, and
    // DomainError when every coefficient is zero at precision.
    NewtonPolygon certified_polygon() const;

  private:
    std::vector<PadicNumber> c_;
    long floor_offset_ = 0;
    long floor_slope_ = 2;
    bool has_floor_ = true;
};

// Newton slope factorization f = alpha * P * u with P monic of degree equal
// to the x-coordinate of the (rightmost) lowest vertex, carrying exactly the
// roots in the closed unit disk, and u an invertible series (u = 1 + 2(...)
// beyond its constant term).
struct SlopeFactorization {
    PadicNumber alpha;
    Polynomial factor;    // monic, integral coefficients
    PadicSeries unit;     // unit power series, same truncation as the run
};

SlopeFactorization slope_factorize(const PadicSeries& f);

// A root of a monic polynomial in Z_2, to the stated precision of the
// PadicNumber; multiplicity > 1 only when the remaining factor vanished
// identically at working precision.
struct Z2Root {
    PadicNumber root;
    int multiplicity;
};

// v2(Q(k)) = min(cap, d * v2(k - u)) for every integer k, for a monic
// degree-d factor Q with no separable Z_2 root.
struct MinTermDescriptor {
    long cap;
    int d;
    PadicNumber u;
};

struct Z2Factorization {
    std::vector<Z2Root> roots;
    std::vector<MinTermDescriptor> min_terms;
};

// Full decomposition of the Z_2-disk factor: shift-and-scale digit descent
// with Hensel splitting whenever the mod-2 reduction separates.
Z2Factorization factor_z2(const Polynomial& p);

// Roots only; throws if the polynomial has non-linear inseparable factors
// is fine -- they are simply not roots and are omitted here.
std::vector<Z2Root> z2_roots(const Polynomial& p);

// The single min-term descriptor of a monic degree >= 2 polynomial with no
// separable Z_2 root at working precision.  DomainError if the input splits
// or has slope < 0 (use v2(P(0)) in that case).
MinTermDescriptor factor_descriptor(const Polynomial& p);

}  // namespace padic2

#endif

#ifndef PADIC2_PADIC_NUMBER_HPP
#define PADIC2_PADIC_NUMBER_HPP

#include <gmpxx.h>

#include "padic2/valuation.hpp"

namespace padic2 {

// Exact valuation of a represented residue, or a lower bound when the
// residue is zero at its stored precision ("v >= value").
struct ValBound {
    long value = 0;
    bool is_lower_bound = false;
};

// A 2-adic integer known modulo 2^prec with tracked absolute precision.
//
// Invariants: 0 <= residue < 2^prec, prec >= 1.  Arithmetic propagates the
// minimum of the input precisions; division by a power of two lowers it.
// Values are immutable after construction and safe to share.
//
// The prime is a compile-time constant.  Only p = 2 is instantiated; the
// unit square root and the logarithm are 2-specific algorithms.
class PadicNumber {
  public:
    static constexpr unsigned prime = 2;

    PadicNumber() : residue_(0), prec_(1) {}

    static PadicNumber from_integer(const mpz_class& v, long prec);
    static PadicNumber zero(long prec) { return from_integer(0, prec); }
    static PadicNumber one(long prec) { return from_integer(1, prec); }
    // Teichmuller section of the residue field F_2: 0 -> 0, 1 -> 1.
    static PadicNumber residue_section(int bit, long prec);

    const mpz_class& residue() const { return residue_; }
    long precision() const { return prec_; }
    bool known_zero() const { return residue_ == 0; }
    bool is_unit() const { return mpz_odd_p(residue_.get_mpz_t()); }

    // Largest v with 2^v | residue; lower bound prec when residue == 0.
    ValBound valuation() const;
    // Valuation as a polygon height; +infinity when zero at precision.
    Valuation height() const;

    PadicNumber operator+(const PadicNumber& o) const;
    PadicNumber operator-(const PadicNumber& o) const;
    PadicNumber operator*(const PadicNumber& o) const;
    PadicNumber operator-() const;
    PadicNumber& operator+=(const PadicNumber& o) { return *this = *this + o; }
    PadicNumber& operator-=(const PadicNumber& o) { return *this = *this - o; }
    PadicNumber& operator*=(const PadicNumber& o) { return *this = *this * o; }

    PadicNumber mul_integer(const mpz_class& c) const;

    // Exact division by 2^e; requires e <= valuation and e < prec.
    PadicNumber div_pow2(long e) const;

    // x^e mod 2^prec for integer e >= 0.
    PadicNumber pow(const mpz_class& e) const;

    // Newton inversion of a unit: x * invert_unit(x) == 1 mod 2^prec.
    PadicNumber invert_unit() const;

    // Hensel square root of u == 1 (mod 8); canonical branch == 1 (mod 4).
    // Result precision is one bit below the input's.
    PadicNumber sqrt_unit() const;

    // Iwasawa logarithm of a unit, log(u) = log(u^2)/2; kills sign, so
    // log(-1) = 0, and log(uv) = log(u) + log(v) within precision.
    PadicNumber iwasawa_log() const;

    // View of the same value at a lower precision.
    PadicNumber truncate(long prec) const;

    bool congruent(const PadicNumber& o, long bits) const;

    // Residue in hex, no prefix (JSON form).
    std::string residue_hex() const;
    std::string str() const;

  private:
    PadicNumber(mpz_class r, long prec) : residue_(std::move(r)), prec_(prec) {}

    mpz_class residue_;
    long prec_;
};

// v_2 of a nonzero integer.
long valuation2(const mpz_class& v);
// v_2 of a nonzero rational (negative for even denominators).
long valuation2(const mpq_class& v);
// v_2(n!) = n - (number of ones in binary n).
long factorial_valuation2(unsigned long n);

}  // namespace padic2

#endif

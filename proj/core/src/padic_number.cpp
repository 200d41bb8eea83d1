#include "padic2/padic_number.hpp"

#include "padic2/errors.hpp"

namespace padic2 {

namespace {

mpz_class reduce(const mpz_class& v, long prec) {
    mpz_class r;
    mpz_fdiv_r_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(prec));
    return r;
}

}  // namespace

long valuation2(const mpz_class& v) {
    if (v == 0) throw DomainError("valuation2: zero");
    return static_cast<long>(mpz_scan1(v.get_mpz_t(), 0));
}

long valuation2(const mpq_class& v) {
    if (v == 0) throw DomainError("valuation2: zero");
    return valuation2(v.get_num()) - valuation2(v.get_den());
}

long factorial_valuation2(unsigned long n) {
    mpz_class m(static_cast<unsigned long>(n));
    return static_cast<long>(n) - static_cast<long>(mpz_popcount(m.get_mpz_t()));
}

PadicNumber PadicNumber::from_integer(const mpz_class& v, long prec) {
    if (prec < 1) throw PrecisionError("PadicNumber: precision must be positive");
    return PadicNumber(reduce(v, prec), prec);
}

PadicNumber PadicNumber::residue_section(int bit, long prec) {
    if (bit != 0 && bit != 1) throw DomainError("residue_section: bit must be 0 or 1");
    return from_integer(bit, prec);
}

ValBound PadicNumber::valuation() const {
    if (residue_ == 0) return {prec_, true};
    return {valuation2(residue_), false};
}

Valuation PadicNumber::height() const {
    if (residue_ == 0) return Valuation::infinity();
    return Valuation(valuation2(residue_));
}

PadicNumber PadicNumber::operator+(const PadicNumber& o) const {
    long p = std::min(prec_, o.prec_);
    return PadicNumber(reduce(residue_ + o.residue_, p), p);
}

PadicNumber PadicNumber::operator-(const PadicNumber& o) const {
    long p = std::min(prec_, o.prec_);
    return PadicNumber(reduce(residue_ - o.residue_, p), p);
}

PadicNumber PadicNumber::operator*(const PadicNumber& o) const {
    long p = std::min(prec_, o.prec_);
    return PadicNumber(reduce(residue_ * o.residue_, p), p);
}

PadicNumber PadicNumber::operator-() const {
    return PadicNumber(reduce(-residue_, prec_), prec_);
}

PadicNumber PadicNumber::mul_integer(const mpz_class& c) const {
    return PadicNumber(reduce(residue_ * c, prec_), prec_);
}

PadicNumber PadicNumber::div_pow2(long e) const {
    if (e == 0) return *this;
    if (e < 0) throw DomainError("div_pow2: negative exponent");
    if (prec_ - e < 1) throw PrecisionError("div_pow2: precision underflow");
    ValBound v = valuation();
    if (!v.is_lower_bound && v.value < e)
        throw DomainError("div_pow2: 2^e does not divide the value");
    mpz_class r;
    mpz_fdiv_q_2exp(r.get_mpz_t(), residue_.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    return PadicNumber(std::move(r), prec_ - e);
}

PadicNumber PadicNumber::pow(const mpz_class& e) const {
    if (e < 0) throw DomainError("pow: negative exponent");
    mpz_class mod;
    mpz_ui_pow_ui(mod.get_mpz_t(), 2, static_cast<unsigned long>(prec_));
    mpz_class r;
    mpz_powm(r.get_mpz_t(), residue_.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
    return PadicNumber(std::move(r), prec_);
}

PadicNumber PadicNumber::invert_unit() const {
    if (!is_unit()) throw NotUnitError("invert_unit: valuation > 0");
    mpz_class x = 1;  // inverse mod 2
    long bits = 1;
    while (bits < prec_) {
        bits = std::min(2 * bits, prec_);
        x = reduce(x * (2 - residue_ * x), bits);
    }
    return PadicNumber(reduce(x, prec_), prec_);
}

PadicNumber PadicNumber::sqrt_unit() const {
    mpz_class m8 = reduce(residue_, std::min<long>(3, prec_));
    if (prec_ < 3 || m8 != 1) throw NoSquareRootError("sqrt_unit: argument not 1 mod 8");
    // Bit-by-bit lifting: r^2 == u (mod 2^j) extends by adjusting bit j-1.
    mpz_class r = 1;
    mpz_class sq = 1;  // r^2 mod 2^prec
    for (long j = 3; j < prec_; ++j) {
        mpz_class diff = reduce(residue_ - sq, prec_);
        if (mpz_tstbit(diff.get_mpz_t(), static_cast<mp_bitcnt_t>(j))) {
            mpz_class delta;
            mpz_setbit(delta.get_mpz_t(), static_cast<mp_bitcnt_t>(j - 1));
            sq = reduce(sq + 2 * delta * r + delta * delta, prec_);
            r += delta;
        }
    }
    long out_prec = prec_ - 1;
    r = reduce(r, out_prec);
    if (reduce(r, 2) != 1) r = reduce(-r, out_prec);
    return PadicNumber(std::move(r), out_prec);
}

PadicNumber PadicNumber::iwasawa_log() const {
    if (!is_unit()) throw NotUnitError("iwasawa_log: valuation > 0");
    PadicNumber x = *this * *this - one(prec_);
    if (x.known_zero()) return zero(std::max<long>(1, prec_ - 1));
    long vx = x.valuation().value;  // >= 3 for odd units
    // log(1+x) = sum (-1)^(j+1) x^j / j; term valuation >= j*vx - v2(j).
    // Break on the monotone bound j*vx - floor(log2 j) >= prec.
    PadicNumber sum = zero(prec_);
    PadicNumber xpow = one(prec_);
    for (long j = 1;; ++j) {
        long log2j = static_cast<long>(mpz_sizeinbase(mpz_class(j).get_mpz_t(), 2)) - 1;
        if (j * vx - log2j >= prec_) break;
        long vj = (j % 2 == 0) ? valuation2(mpz_class(j)) : 0;
        xpow *= x;
        mpz_class odd_j = mpz_class(j) >> vj;
        PadicNumber term = xpow;
        if (vj > 0) term = term.div_pow2(vj);
        if (odd_j != 1)
            term *= PadicNumber::from_integer(odd_j, term.precision()).invert_unit();
        if (j % 2 == 1)
            sum += term;
        else
            sum -= term;
    }
    return sum.div_pow2(1);  // log(u) = log(u^2)/2
}

PadicNumber PadicNumber::truncate(long prec) const {
    if (prec > prec_) throw PrecisionError("truncate: cannot raise precision");
    return PadicNumber(reduce(residue_, prec), prec);
}

bool PadicNumber::congruent(const PadicNumber& o, long bits) const {
    if (bits > prec_ || bits > o.prec_)
        throw PrecisionError("congruent: insufficient precision");
    return reduce(residue_ - o.residue_, bits) == 0;
}

std::string PadicNumber::residue_hex() const {
    return residue_.get_str(16);
}

std::string PadicNumber::str() const {
    return residue_.get_str() + " + O(2^" + std::to_string(prec_) + ")";
}

}  // namespace padic2

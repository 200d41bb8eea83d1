#ifndef PADIC2_VALUATION_HPP
#define PADIC2_VALUATION_HPP

#include <gmpxx.h>

#include <string>

namespace padic2 {

// Height type for Newton polygon points: a finite rational (slopes may be
// fractional) or the +infinity sentinel.  +infinity absorbs addition and
// wins every max comparison; the order is total.
class Valuation {
  public:
    Valuation() : value_(0), inf_(false) {}
    explicit Valuation(long v) : value_(v), inf_(false) {}
    explicit Valuation(const mpq_class& v) : value_(v), inf_(false) { value_.canonicalize(); }
    Valuation(long num, long den);

    static Valuation infinity();

    bool is_infinity() const { return inf_; }
    const mpq_class& value() const;  // throws on +infinity

    bool is_integer() const;
    long to_long() const;  // throws unless a finite integer fitting long

    Valuation operator+(const Valuation& o) const;
    Valuation operator-(const Valuation& o) const;  // finite operands only
    Valuation& operator+=(const Valuation& o) { return *this = *this + o; }

    bool operator==(const Valuation& o) const;
    bool operator!=(const Valuation& o) const { return !(*this == o); }
    bool operator<(const Valuation& o) const;
    bool operator<=(const Valuation& o) const { return *this < o || *this == o; }
    bool operator>(const Valuation& o) const { return o < *this; }
    bool operator>=(const Valuation& o) const { return o <= *this; }

    // "num/den" with canonical denominator, "7" when integral, "inf" at the
    // sentinel; the parse accepts the same forms.
    std::string str() const;
    static Valuation parse(const std::string& s);

  private:
    mpq_class value_;
    bool inf_;
};

inline Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }
inline Valuation max(const Valuation& a, const Valuation& b) { return a < b ? b : a; }

}  // namespace padic2

#endif

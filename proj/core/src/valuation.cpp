#include "padic2/valuation.hpp"

#include "padic2/errors.hpp"

namespace padic2 {

Valuation::Valuation(long num, long den) : value_(num, den), inf_(false) {
    if (den == 0) throw DomainError("Valuation: zero denominator");
    value_.canonicalize();
}

Valuation Valuation::infinity() {
    Valuation v;
    v.inf_ = true;
    return v;
}

const mpq_class& Valuation::value() const {
    if (inf_) throw DomainError("Valuation: value() on +infinity");
    return value_;
}

bool Valuation::is_integer() const {
    return !inf_ && value_.get_den() == 1;
}

long Valuation::to_long() const {
    if (!is_integer()) throw DomainError("Valuation: not a finite integer");
    if (!value_.get_num().fits_slong_p()) throw DomainError("Valuation: out of long range");
    return value_.get_num().get_si();
}

Valuation Valuation::operator+(const Valuation& o) const {
    if (inf_ || o.inf_) return infinity();
    return Valuation(mpq_class(value_ + o.value_));
}

Valuation Valuation::operator-(const Valuation& o) const {
    if (inf_ || o.inf_) throw DomainError("Valuation: subtraction with +infinity");
    return Valuation(mpq_class(value_ - o.value_));
}

bool Valuation::operator==(const Valuation& o) const {
    if (inf_ != o.inf_) return false;
    return inf_ || value_ == o.value_;
}

bool Valuation::operator<(const Valuation& o) const {
    if (inf_) return false;
    if (o.inf_) return true;
    return value_ < o.value_;
}

std::string Valuation::str() const {
    if (inf_) return "inf";
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Valuation Valuation::parse(const std::string& s) {
    if (s == "inf") return infinity();
    mpq_class q(s);
    q.canonicalize();
    return Valuation(q);
}

}  // namespace padic2

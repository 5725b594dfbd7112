#include "mfdecomp/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace mfd {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(s, 10));
        return Rational(Integer(s.substr(0, slash), 10), Integer(s.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational number: '" + s + "'");
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::pow(unsigned exponent) const {
    Rational result(1);
    Rational base = *this;
    while (exponent) {
        if (exponent & 1u)
            result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

long v2(const Integer& value) {
    if (value == 0)
        throw std::domain_error("2-adic valuation of zero");
    return static_cast<long>(mpz_scan1(value.get_mpz_t(), 0));
}

long v2(const Rational& value) {
    if (value.is_zero())
        throw std::domain_error("2-adic valuation of zero");
    return v2(value.numerator()) - v2(value.denominator());
}

const Rational& ExtendedValuation::value() const {
    if (!value_)
        throw std::logic_error("infinite valuation has no finite value");
    return *value_;
}

ExtendedValuation operator+(const ExtendedValuation& a, const ExtendedValuation& b) {
    if (a.is_infinite() || b.is_infinite())
        return ExtendedValuation::infinity();
    return ExtendedValuation::finite(*a.value_ + *b.value_);
}

std::strong_ordering operator<=>(const ExtendedValuation& a, const ExtendedValuation& b) {
    if (a.is_infinite() || b.is_infinite())
        return a.is_infinite() <=> b.is_infinite();
    return *a.value_ <=> *b.value_;
}

std::string ExtendedValuation::str() const {
    return value_ ? value_->str() : std::string("inf");
}

}  // namespace mfd

#ifndef MFDECOMP_RATIONAL_HPP
#define MFDECOMP_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mfd {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
  public:
    Rational() = default;
    Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : q_(value) {}   // NOLINT(google-explicit-constructor)
    explicit Rational(const Integer& value) : q_(value) {}
    /// Throws std::domain_error on a zero denominator.
    Rational(const Integer& num, const Integer& den);

    /// Accepts "a", "-a" and "a/b".
    static Rational parse(std::string_view text);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational pow(unsigned exponent) const;
    Rational abs() const;

    std::string str() const { return q_.get_str(); }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

    const mpq_class& raw() const { return q_; }

  private:
    mpq_class q_;
};

/// 2-adic valuation of a nonzero integer. Throws std::domain_error on zero.
long v2(const Integer& value);
/// 2-adic valuation of a nonzero rational. Throws std::domain_error on zero.
long v2(const Rational& value);

/// A valuation with values in Q ∪ {+∞}; +∞ is the valuation of zero and
/// compares above every finite value.
class ExtendedValuation {
  public:
    static ExtendedValuation infinity() { return ExtendedValuation{}; }
    static ExtendedValuation finite(Rational value) { return ExtendedValuation{std::move(value)}; }

    bool is_infinite() const { return !value_.has_value(); }
    /// Throws std::logic_error when infinite.
    const Rational& value() const;

    friend ExtendedValuation operator+(const ExtendedValuation& a, const ExtendedValuation& b);
    friend bool operator==(const ExtendedValuation& a, const ExtendedValuation& b) = default;
    friend std::strong_ordering operator<=>(const ExtendedValuation& a, const ExtendedValuation& b);

    std::string str() const;

  private:
    ExtendedValuation() = default;
    explicit ExtendedValuation(Rational v) : value_(std::move(v)) {}

    std::optional<Rational> value_;
};

}  // namespace mfd

#endif

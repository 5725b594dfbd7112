#ifndef MFDECOMP_CYCLOTOMIC_HPP
#define MFDECOMP_CYCLOTOMIC_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mfdecomp/rational.hpp"

namespace mfd {

/// Element of the 2-power cyclotomic field Q(ζ) with ζ = ζ_{2^m}, stored by
/// its coordinates in the power basis 1, ζ, ..., ζ^{n-1}, n = 2^{m-1}.
/// Products are reduced with ζ^n = -1.
class CyclotomicElement {
  public:
    /// Zero of Q(ζ_{2^m}); requires 1 <= m <= 20.
    explicit CyclotomicElement(unsigned log2_order);
    CyclotomicElement(unsigned log2_order, std::vector<Rational> coords);

    static CyclotomicElement from_rational(unsigned log2_order, const Rational& r);
    /// ζ^exponent for any integer exponent, reduced into the power basis.
    static CyclotomicElement zeta_power(unsigned log2_order, long exponent);
    static CyclotomicElement zeta(unsigned log2_order) { return zeta_power(log2_order, 1); }

    unsigned log2_order() const { return m_; }
    unsigned long order() const { return 1ul << m_; }
    /// Degree of the field over Q, 2^{m-1}.
    std::size_t degree() const { return coords_.size(); }
    std::span<const Rational> coords() const { return coords_; }
    const Rational& coord(std::size_t i) const { return coords_.at(i); }

    bool is_zero() const;
    bool is_rational() const;

    CyclotomicElement operator-() const;
    CyclotomicElement& operator+=(const CyclotomicElement& o);
    CyclotomicElement& operator-=(const CyclotomicElement& o);
    CyclotomicElement& operator*=(const CyclotomicElement& o);
    CyclotomicElement& operator*=(const Rational& r);
    CyclotomicElement& operator/=(const Rational& r);

    friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
    friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }
    friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);
    friend CyclotomicElement operator*(CyclotomicElement a, const Rational& r) { return a *= r; }
    friend CyclotomicElement operator*(const Rational& r, CyclotomicElement a) { return a *= r; }
    friend CyclotomicElement operator/(CyclotomicElement a, const Rational& r) { return a /= r; }
    friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) = default;

    /// Image under the automorphism ζ -> ζ^k; k must be odd.
    CyclotomicElement galois(long k) const;

    /// Human-readable form, e.g. "3/5 + 1/5*z".
    std::string str() const;

  private:
    void check_compatible(const CyclotomicElement& o) const;

    unsigned m_;
    std::vector<Rational> coords_;
};

/// Field norm N_{Q(ζ)/Q}(x): the product of the 2^{m-1} Galois conjugates.
Rational norm(const CyclotomicElement& x);

/// v_2(N(x)) / 2^{m-1}, or +∞ for x = 0.
ExtendedValuation two_adic_valuation(const CyclotomicElement& x);

/// True when every power-basis coordinate lies in Z_(2).
bool is_two_integral(const CyclotomicElement& x);

}  // namespace mfd

#endif

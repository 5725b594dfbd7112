#include "mfdecomp/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

namespace mfd {

namespace {

std::size_t basis_size(unsigned m) {
    if (m < 1 || m > 20)
        throw std::invalid_argument("cyclotomic order 2^m requires 1 <= m <= 20");
    return std::size_t{1} << (m - 1);
}

}  // namespace

CyclotomicElement::CyclotomicElement(unsigned log2_order)
    : m_(log2_order), coords_(basis_size(log2_order)) {}

CyclotomicElement::CyclotomicElement(unsigned log2_order, std::vector<Rational> coords)
    : m_(log2_order), coords_(std::move(coords)) {
    if (coords_.size() != basis_size(m_))
        throw std::invalid_argument("coordinate count must equal 2^{m-1}");
}

CyclotomicElement CyclotomicElement::from_rational(unsigned log2_order, const Rational& r) {
    CyclotomicElement x(log2_order);
    x.coords_[0] = r;
    return x;
}

CyclotomicElement CyclotomicElement::zeta_power(unsigned log2_order, long exponent) {
    CyclotomicElement x(log2_order);
    const long n = static_cast<long>(x.degree());
    long e = exponent % (2 * n);
    if (e < 0)
        e += 2 * n;
    if (e < n)
        x.coords_[e] = 1;
    else
        x.coords_[e - n] = -1;
    return x;
}

bool CyclotomicElement::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero())
            return false;
    return true;
}

bool CyclotomicElement::is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (!coords_[i].is_zero())
            return false;
    return true;
}

void CyclotomicElement::check_compatible(const CyclotomicElement& o) const {
    if (o.m_ != m_)
        throw std::invalid_argument("cyclotomic elements of different orders");
}

CyclotomicElement CyclotomicElement::operator-() const {
    CyclotomicElement r(*this);
    for (auto& c : r.coords_)
        c = -c;
    return r;
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] += o.coords_[i];
    return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] -= o.coords_[i];
    return *this;
}

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
    a.check_compatible(b);
    const std::size_t n = a.degree();
    CyclotomicElement r(a.m_);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coords_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b.coords_[j].is_zero())
                continue;
            Rational t = a.coords_[i] * b.coords_[j];
            std::size_t k = i + j;
            if (k < n)
                r.coords_[k] += t;
            else
                r.coords_[k - n] -= t;
        }
    }
    return r;
}

CyclotomicElement& CyclotomicElement::operator*=(const CyclotomicElement& o) {
    *this = *this * o;
    return *this;
}

CyclotomicElement& CyclotomicElement::operator*=(const Rational& r) {
    for (auto& c : coords_)
        c *= r;
    return *this;
}

CyclotomicElement& CyclotomicElement::operator/=(const Rational& r) {
    for (auto& c : coords_)
        c /= r;
    return *this;
}

CyclotomicElement CyclotomicElement::galois(long k) const {
    if (k % 2 == 0)
        throw std::invalid_argument("Galois automorphism needs an odd exponent");
    CyclotomicElement r(m_);
    for (std::size_t j = 0; j < coords_.size(); ++j) {
        if (coords_[j].is_zero())
            continue;
        r += zeta_power(m_, static_cast<long>(j) * k) * coords_[j];
    }
    return r;
}

std::string CyclotomicElement::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        const Rational& c = coords_[i];
        if (c.is_zero())
            continue;
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        const Rational mag = c.abs();
        if (i == 0) {
            os << mag;
            continue;
        }
        if (mag != 1)
            os << mag << "*";
        os << "z";
        if (i > 1)
            os << "^" << i;
    }
    if (first)
        os << "0";
    return os.str();
}

Rational norm(const CyclotomicElement& x) {
    const long order = static_cast<long>(x.order());
    CyclotomicElement product = CyclotomicElement::from_rational(x.log2_order(), 1);
    for (long k = 1; k < order; k += 2)
        product *= x.galois(k);
    if (!product.is_rational())
        throw std::logic_error("conjugate product is not rational");
    return product.coord(0);
}

ExtendedValuation two_adic_valuation(const CyclotomicElement& x) {
    if (x.is_zero())
        return ExtendedValuation::infinity();
    return ExtendedValuation::finite(
        Rational(v2(norm(x))) / Rational(static_cast<long>(x.degree())));
}

bool is_two_integral(const CyclotomicElement& x) {
    for (const auto& c : x.coords())
        if (v2(c.denominator()) > 0)
            return false;
    return true;
}

}  // namespace mfd

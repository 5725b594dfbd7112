#include "mfdecomp/eisenstein.hpp"

#include <stdexcept>

#include "mfdecomp/errors.hpp"
#include "mfdecomp/levels.hpp"

namespace mfd {

namespace {

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
    return a * b % p;
}

void require_order(const DirichletCharacter& chi) {
    if (chi.log2_order() < 2)
        throw OrderTooSmall("p = " + std::to_string(chi.modulus()) + " gives m = " +
                            std::to_string(chi.log2_order()) + "; need m >= 2");
}

bool even_or_zero(const Rational& x) {
    return x.is_zero() || v2(x) >= 1;
}

}  // namespace

std::optional<long> DirichletCharacter::exponent(std::int64_t n) const {
    std::int64_t r = n % p_;
    if (r < 0)
        r += p_;
    if (r == 0)
        return std::nullopt;
    const std::int64_t order = std::int64_t{1} << m_;
    return static_cast<long>(mul_mod(log_[r] % order, k_, order));
}

CyclotomicElement DirichletCharacter::value(std::int64_t n) const {
    const auto e = exponent(n);
    return e ? CyclotomicElement::zeta_power(m_, *e) : CyclotomicElement(m_);
}

bool DirichletCharacter::is_odd() const {
    return value(-1) == CyclotomicElement::from_rational(m_, -1);
}

DirichletCharacter DirichletCharacter::conjugate(long k) const {
    if (k % 2 == 0)
        throw std::invalid_argument("Galois conjugation needs an odd exponent");
    DirichletCharacter c = *this;
    const long order = 1L << m_;
    c.k_ = ((k_ * k) % order + order) % order;
    return c;
}

DirichletCharacter odd_two_power_character(std::int64_t p) {
    if (p < 3 || !is_prime(p))
        throw NotPrime(std::to_string(p) + " is not an odd prime");
    if (p > (std::int64_t{1} << 24))
        throw std::invalid_argument("modulus too large for a character table");
    DirichletCharacter chi;
    chi.p_ = p;
    chi.l_ = p - 1;
    while (chi.l_ % 2 == 0) {
        chi.l_ /= 2;
        ++chi.m_;
    }
    std::vector<std::int64_t> prime_factors;
    for (std::int64_t q = 2, rest = p - 1; rest > 1; ++q) {
        if (rest % q == 0) {
            prime_factors.push_back(q);
            while (rest % q == 0)
                rest /= q;
        }
    }
    auto pow_mod = [p](std::int64_t b, std::int64_t e) {
        std::int64_t r = 1;
        b %= p;
        while (e) {
            if (e & 1)
                r = mul_mod(r, b, p);
            b = mul_mod(b, b, p);
            e >>= 1;
        }
        return r;
    };
    for (std::int64_t g = 2;; ++g) {
        bool primitive = true;
        for (auto q : prime_factors)
            primitive = primitive && pow_mod(g, (p - 1) / q) != 1;
        if (primitive) {
            chi.g_ = g;
            break;
        }
    }
    chi.log_.assign(static_cast<std::size_t>(p), 0);
    std::int64_t x = 1;
    for (std::int64_t e = 0; e < p - 1; ++e) {
        chi.log_[x] = e;
        x = mul_mod(x, chi.g_, p);
    }
    return chi;
}

CyclotomicElement l_value(const DirichletCharacter& chi) {
    if (!chi.is_odd())
        throw std::invalid_argument("L(0, χ) formula requires an odd character");
    CyclotomicElement sum(chi.log2_order());
    for (std::int64_t n = 1; n < chi.modulus(); ++n)
        sum += chi.value(n) * Rational(static_cast<long>(n));
    return sum * Rational(-1, chi.modulus());
}

Rational computed_l_exponent(unsigned m) {
    return Rational(1) - Rational(1) / Rational(Integer(1) << (m - 1));
}

Rational stated_l_exponent(unsigned m) {
    if (m < 2)
        throw OrderTooSmall("stated exponent needs m >= 2");
    return Rational(1) - Rational(1) / Rational(Integer(1) << (m - 2));
}

ValuationClaimReport valuation_claim_check(std::int64_t p) {
    const auto chi = odd_two_power_character(p);
    require_order(chi);
    const unsigned m = chi.log2_order();
    ValuationClaimReport r;
    r.p = p;
    r.m = m;
    r.l_value = l_value(chi);
    r.v2_l = two_adic_valuation(r.l_value);
    r.v2_one_minus_zeta = two_adic_valuation(CyclotomicElement::from_rational(m, 1) - CyclotomicElement::zeta(m));
    r.sum_is_one = r.v2_l + r.v2_one_minus_zeta == ExtendedValuation::finite(1);
    CyclotomicElement geometric(m);
    for (std::size_t j = 0; j < geometric.degree(); ++j)
        geometric += CyclotomicElement::zeta_power(m, static_cast<long>(j));
    r.congruence_holds = is_two_integral((r.l_value - geometric) / Rational(2));
    r.computed_exponent = computed_l_exponent(m);
    r.stated_exponent = stated_l_exponent(m);
    return r;
}

QExpansion eisenstein_q_expansion(const DirichletCharacter& chi, std::int64_t N) {
    if (N < 1)
        throw std::invalid_argument("precision must be at least 1");
    QExpansion e;
    e.precision = N;
    e.conductor = chi.modulus();
    e.coeffs.reserve(static_cast<std::size_t>(N) + 1);
    e.coeffs.push_back(l_value(chi) / Rational(2));
    for (std::int64_t n = 1; n <= N; ++n) {
        CyclotomicElement c(chi.log2_order());
        for (std::int64_t d = 1; d <= n; ++d)
            if (n % d == 0)
                c += chi.value(d);
        e.coeffs.push_back(std::move(c));
    }
    return e;
}

std::vector<std::vector<Rational>> galois_average_components(const QExpansion& e) {
    const unsigned m = e.coeffs.front().log2_order();
    const std::size_t n = e.coeffs.front().degree();
    std::vector<std::vector<Rational>> f(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto twist = CyclotomicElement::zeta_power(m, -static_cast<long>(i));
        for (const auto& c : e.coeffs) {
            const auto x = twist * c;
            CyclotomicElement trace(m);
            for (long k = 1; k < static_cast<long>(2 * n); k += 2)
                trace += x.galois(k);
            f[i].push_back(trace.coord(0) / Rational(static_cast<long>(n)));
        }
    }
    return f;
}

HasseLiftReport hasse_lift(std::int64_t p, std::int64_t N) {
    return hasse_lift(odd_two_power_character(p), N);
}

HasseLiftReport hasse_lift(const DirichletCharacter& chi, std::int64_t N) {
    require_order(chi);
    const unsigned m = chi.log2_order();
    HasseLiftReport r;
    r.p = chi.modulus();
    r.m = m;
    r.precision = N;
    const auto e1 = eisenstein_q_expansion(chi, N);
    r.l_value = e1[0] * Rational(2);
    r.v2_l = two_adic_valuation(r.l_value);
    r.computed_exponent = computed_l_exponent(m);
    r.stated_exponent = stated_l_exponent(m);

    const auto factor = CyclotomicElement::from_rational(m, 1) - CyclotomicElement::zeta(m);
    const std::size_t n = factor.degree();
    r.components.assign(n, {});
    for (std::int64_t k = 0; k <= N; ++k) {
        const auto c = factor * e1[k];
        if (!is_two_integral(c))
            throw IntegralityFailure("coefficient of q^" + std::to_string(k) + " is not 2-integral: " + c.str());
        Rational total;
        for (std::size_t i = 0; i < n; ++i) {
            r.components[i].push_back(c.coord(i));
            total += c.coord(i);
        }
        r.averaged.push_back(total);
    }
    for (std::int64_t k = 0; k <= N && !r.first_failure; ++k) {
        const Rational target = k == 0 ? r.averaged[0] - Rational(1) : r.averaged[k];
        if (!even_or_zero(target))
            r.first_failure = k;
    }
    r.passed = !r.first_failure;
    return r;
}

}  // namespace mfd

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "mfdecomp/eisenstein.hpp"
#include "mfdecomp/errors.hpp"

using namespace mfd;

namespace {

const std::vector<std::int64_t> kPrimes{5, 13, 17, 29, 37, 41, 53, 61};

std::complex<double> embed(const CyclotomicElement& x) {
    const double angle = 2 * std::numbers::pi / static_cast<double>(x.order());
    std::complex<double> z = 0;
    for (std::size_t i = 0; i < x.degree(); ++i)
        z += x.coord(i).raw().get_d() * std::polar(1.0, angle * static_cast<double>(i));
    return z;
}

std::int64_t power_mod(std::int64_t b, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1;
    for (; e > 0; --e)
        r = r * b % p;
    return r;
}

std::int64_t multiplicative_order(std::int64_t g, std::int64_t p) {
    std::int64_t k = 1;
    for (std::int64_t x = g % p; x != 1; x = x * g % p)
        ++k;
    return k;
}

CyclotomicElement i4() { return CyclotomicElement::zeta(2); }
CyclotomicElement q4(long a, long b, long den) {
    return CyclotomicElement(2, {Rational(Integer(a), Integer(den)), Rational(Integer(b), Integer(den))});
}

bool even(const Rational& x) { return x.is_zero() || v2(x) >= 1; }

Rational trace(const CyclotomicElement& x) {
    CyclotomicElement s(x.log2_order());
    for (long k = 1; k < static_cast<long>(x.order()); k += 2)
        s += x.galois(k);
    return s.coord(0);
}

}  // namespace

TEST_CASE("character examples") {
    const auto c5 = odd_two_power_character(5);
    CHECK(c5.log2_order() == 2);
    CHECK(c5.primitive_root() == 2);
    CHECK(c5.value(2) == i4());
    CHECK(c5.value(4) == CyclotomicElement::from_rational(2, Rational(-1)));
    CHECK(c5.value(10).is_zero());
    CHECK_FALSE(c5.exponent(5).has_value());

    const auto c13 = odd_two_power_character(13);
    CHECK(c13.log2_order() == 2);
    CHECK(c13.odd_part() == 3);
    CHECK(c13.value(2) == i4());

    const auto c17 = odd_two_power_character(17);
    CHECK(c17.log2_order() == 4);
    CHECK(c17.primitive_root() == 3);
    CHECK(c17.value(3) == CyclotomicElement::zeta(4));
}

TEST_CASE("characters are odd, multiplicative and of exact order 2^m") {
    for (std::int64_t p : {5, 7, 11, 13, 17, 29, 37, 41, 53, 61, 97, 193, 257}) {
        CAPTURE(p);
        const auto chi = odd_two_power_character(p);
        CHECK(chi.is_odd());
        CHECK(multiplicative_order(chi.primitive_root(), p) == p - 1);
        for (std::int64_t g = 2; g < chi.primitive_root(); ++g)
            CHECK(multiplicative_order(g, p) < p - 1);
        CHECK(((p - 1) >> chi.log2_order()) == chi.odd_part());
        CHECK(chi.odd_part() % 2 == 1);
        for (std::int64_t a = 1; a < p; a += 3)
            for (std::int64_t b = 1; b < p; b += 5)
                CHECK(chi.value(a * b) == chi.value(a) * chi.value(b));
        // χ(g^j) = ζ^j
        for (std::int64_t j = 0; j < 8; ++j)
            CHECK(chi.value(power_mod(chi.primitive_root(), j, p)) == CyclotomicElement::zeta_power(chi.log2_order(), j));
    }
    CHECK_THROWS_AS(odd_two_power_character(2), NotPrime);
    CHECK_THROWS_AS(odd_two_power_character(15), NotPrime);
    CHECK_THROWS_AS(odd_two_power_character(1), NotPrime);
}

TEST_CASE("conjugate characters") {
    const auto chi = odd_two_power_character(17);
    const auto c3 = chi.conjugate(3);
    for (std::int64_t n = 1; n < 17; ++n)
        CHECK(c3.value(n) == chi.value(n).galois(3));
    CHECK_THROWS(chi.conjugate(2));
}

TEST_CASE("L-values") {
    const auto chi = odd_two_power_character(5);
    CHECK(l_value(chi) == q4(3, 1, 5));
    CHECK(l_value(chi.conjugate(3)) == q4(3, -1, 5));
    CHECK(l_value(chi).str() == "3/5 + 1/5*z");
    for (auto p : kPrimes) {
        CAPTURE(p);
        const auto c = odd_two_power_character(p);
        std::complex<double> expected = 0;
        const double angle = 2 * std::numbers::pi / static_cast<double>(1L << c.log2_order());
        for (std::int64_t n = 1; n < p; ++n)
            expected += static_cast<double>(n) * std::polar(1.0, angle * static_cast<double>(*c.exponent(n)));
        expected /= -static_cast<double>(p);
        CHECK(std::abs(embed(l_value(c)) - expected) < 1e-9);
    }
}

TEST_CASE("valuation claim") {
    const auto r5 = valuation_claim_check(5);
    CHECK(r5.v2_l == ExtendedValuation::finite(Rational(Integer(1), Integer(2))));
    CHECK(r5.v2_one_minus_zeta == ExtendedValuation::finite(Rational(Integer(1), Integer(2))));
    CHECK(r5.passed());
    CHECK(valuation_claim_check(13).v2_l == ExtendedValuation::finite(Rational(Integer(1), Integer(2))));
    const auto r17 = valuation_claim_check(17);
    CHECK(r17.v2_l == ExtendedValuation::finite(Rational(Integer(7), Integer(8))));
    CHECK(r17.computed_exponent == Rational(Integer(7), Integer(8)));
    CHECK(r17.stated_exponent == Rational(Integer(3), Integer(4)));
    for (auto p : kPrimes) {
        const auto r = valuation_claim_check(p);
        CHECK(r.sum_is_one);
        CHECK(r.congruence_holds);
        CHECK(r.v2_l == ExtendedValuation::finite(computed_l_exponent(r.m)));
    }
    CHECK_THROWS_AS(valuation_claim_check(7), OrderTooSmall);
    CHECK_THROWS_AS(valuation_claim_check(11), OrderTooSmall);
    CHECK_THROWS_AS(stated_l_exponent(1), OrderTooSmall);
    CHECK(computed_l_exponent(3) == Rational(Integer(3), Integer(4)));
    CHECK(stated_l_exponent(3) == Rational(Integer(1), Integer(2)));
}

TEST_CASE("q-expansion coefficients") {
    const auto chi = odd_two_power_character(5);
    const auto e = eisenstein_q_expansion(chi, 30);
    CHECK(e.precision == 30);
    CHECK(e.coeffs.size() == 31);
    CHECK(e.conductor == 5);
    CHECK(e[0] == l_value(chi) / Rational(2));
    CHECK(e[1] == CyclotomicElement::from_rational(2, Rational(1)));
    CHECK(e[2] == q4(1, 1, 1));
    CHECK(e[5] == CyclotomicElement::from_rational(2, Rational(1)));
    CHECK_THROWS(eisenstein_q_expansion(chi, 0));
}

TEST_CASE("coefficients are multiplicative on coprime indices") {
    for (auto p : {5L, 17L, 41L}) {
        const auto e = eisenstein_q_expansion(odd_two_power_character(p), 60);
        for (std::int64_t a = 1; a <= 60; ++a)
            for (std::int64_t b = 1; a * b <= 60; ++b)
                if (std::gcd(a, b) == 1)
                    CHECK(e[a * b] == e[a] * e[b]);
    }
}

TEST_CASE("lift at p = 5") {
    const auto r = hasse_lift(5, 10);
    CHECK(r.m == 2);
    CHECK(r.averaged[0] == Rational(Integer(1), Integer(5)));
    CHECK(r.components[0][1] == Rational(1));
    CHECK(r.components[1][1] == Rational(-1));
    CHECK(r.averaged[1] == Rational(0));
    CHECK(r.averaged[2] == Rational(2));
    CHECK(r.passed);
    CHECK_FALSE(r.first_failure.has_value());
}

TEST_CASE("lift passes for the prime set at precision 60") {
    for (auto p : kPrimes) {
        CAPTURE(p);
        const auto r = hasse_lift(p, 60);
        CHECK(r.passed);
        CHECK(r.averaged.size() == 61);
        CHECK(even(r.averaged[0] - Rational(1)));
        for (std::size_t n = 1; n <= 60; ++n)
            CHECK(even(r.averaged[n]));
    }
    CHECK_THROWS_AS(hasse_lift(7, 10), OrderTooSmall);
    CHECK_THROWS_AS(hasse_lift(9, 10), NotPrime);
}

TEST_CASE("components are coordinates and stable under conjugation") {
    for (auto p : {5L, 17L, 41L}) {
        const auto chi = odd_two_power_character(p);
        const auto m = chi.log2_order();
        const auto one_minus_zeta = CyclotomicElement::from_rational(m, Rational(1)) - CyclotomicElement::zeta(m);
        const auto e1 = eisenstein_q_expansion(chi, 20);
        QExpansion e = e1;
        for (auto& c : e.coeffs)
            c = one_minus_zeta * c;
        const auto f = galois_average_components(e);
        const Rational half_degree(static_cast<long>(1L << (m - 1)));
        for (long k = 1; k < (1L << m); k += 2) {
            const auto ek = eisenstein_q_expansion(chi.conjugate(k), 20);
            const auto wk = CyclotomicElement::from_rational(m, Rational(1)) - CyclotomicElement::zeta_power(m, k);
            for (std::size_t i = 0; i < f.size(); ++i)
                for (std::int64_t n = 0; n <= 20; ++n) {
                    CHECK(f[i][static_cast<std::size_t>(n)] == e[n].coord(i));
                    // Re-derive f_i from the conjugate form (1 - ζ^k) E_1^{χ^k} with weights ζ^{-ki}.
                    const auto weighted = CyclotomicElement::zeta_power(m, -k * static_cast<long>(i)) * (wk * ek[n]);
                    CHECK(trace(weighted) / half_degree == f[i][static_cast<std::size_t>(n)]);
                }
        }
    }
}

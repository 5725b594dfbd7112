#ifndef MFDECOMP_EISENSTEIN_HPP
#define MFDECOMP_EISENSTEIN_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mfdecomp/cyclotomic.hpp"
#include "mfdecomp/rational.hpp"

namespace mfd {

/// Dirichlet character mod an odd prime p of exact order 2^m, where
/// p - 1 = 2^m * l with l odd. Values are powers of ζ = ζ_{2^m}.
class DirichletCharacter {
  public:
    std::int64_t modulus() const { return p_; }
    unsigned log2_order() const { return m_; }
    std::int64_t odd_part() const { return l_; }
    /// Smallest primitive root g mod p.
    std::int64_t primitive_root() const { return g_; }
    /// χ(g) = ζ^k with k odd.
    long generator_exponent() const { return k_; }

    /// Exponent e with χ(n) = ζ^e, 0 <= e < 2^m; nullopt when p | n.
    std::optional<long> exponent(std::int64_t n) const;
    CyclotomicElement value(std::int64_t n) const;
    bool is_odd() const;

    /// The Galois conjugate χ^k for odd k.
    DirichletCharacter conjugate(long k) const;

  private:
    friend DirichletCharacter odd_two_power_character(std::int64_t p);
    std::int64_t p_ = 0;
    unsigned m_ = 0;
    std::int64_t l_ = 0;
    std::int64_t g_ = 0;
    long k_ = 1;
    /// Discrete logarithm base g of each residue 1..p-1 (index 0 unused).
    std::vector<std::int64_t> log_;
};

/// χ with χ(g) = ζ_{2^m} for the smallest primitive root g.
/// Throws NotPrime unless p is an odd prime.
DirichletCharacter odd_two_power_character(std::int64_t p);

/// L(0, χ) = -(1/p) Σ_{n=1}^{p-1} n χ(n).
CyclotomicElement l_value(const DirichletCharacter& chi);

/// 1 - 1/2^{m-1}, the 2-adic valuation of L(0, χ) forced by v2(1 - ζ) = 1/2^{m-1}.
Rational computed_l_exponent(unsigned m);
/// 1 - 1/2^{m-2}, the exponent as stated in the literature source.
Rational stated_l_exponent(unsigned m);

struct ValuationClaimReport {
    std::int64_t p = 0;
    unsigned m = 0;
    CyclotomicElement l_value{1};
    ExtendedValuation v2_l = ExtendedValuation::infinity();
    ExtendedValuation v2_one_minus_zeta = ExtendedValuation::infinity();
    /// v2(L) + v2(1 - ζ) = 1.
    bool sum_is_one = false;
    /// L ≡ 1 + ζ + ... + ζ^{2^{m-1}-1} mod 2.
    bool congruence_holds = false;
    Rational computed_exponent;
    Rational stated_exponent;

    bool passed() const { return sum_is_one && congruence_holds; }
};

/// Throws NotPrime, or OrderTooSmall when m < 2.
ValuationClaimReport valuation_claim_check(std::int64_t p);

/// Truncated q-expansion with coefficients in Q(ζ_{2^m}), indices 0..precision.
struct QExpansion {
    std::vector<CyclotomicElement> coeffs;
    std::int64_t precision = 0;
    std::int64_t conductor = 0;

    const CyclotomicElement& operator[](std::int64_t n) const { return coeffs.at(static_cast<std::size_t>(n)); }
};

/// E_1^χ = L(0,χ)/2 + Σ_{n>=1} (Σ_{d|n} χ(d)) q^n through q^N. Requires N >= 1.
QExpansion eisenstein_q_expansion(const DirichletCharacter& chi, std::int64_t N);

/// f_i with E = Σ ζ^i f_i, computed as Tr(ζ^{-i} E) / 2^{m-1}.
std::vector<std::vector<Rational>> galois_average_components(const QExpansion& e);

struct HasseLiftReport {
    std::int64_t p = 0;
    unsigned m = 0;
    std::int64_t precision = 0;
    CyclotomicElement l_value{1};
    ExtendedValuation v2_l = ExtendedValuation::infinity();
    Rational computed_exponent;
    Rational stated_exponent;
    /// components[i][n]: coefficient of q^n in f_i.
    std::vector<std::vector<Rational>> components;
    /// F = Σ f_i.
    std::vector<Rational> averaged;
    bool passed = false;
    /// First n where F_n fails the congruence to 1 mod 2.
    std::optional<std::int64_t> first_failure;
};

/// Throws NotPrime, OrderTooSmall, or IntegralityFailure.
HasseLiftReport hasse_lift(std::int64_t p, std::int64_t N);
HasseLiftReport hasse_lift(const DirichletCharacter& chi, std::int64_t N);

}  // namespace mfd

#endif

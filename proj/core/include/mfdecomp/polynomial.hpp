#ifndef MFDECOMP_POLYNOMIAL_HPP
#define MFDECOMP_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mfdecomp/rational.hpp"

namespace mfd {

/// Coefficient field: Q when characteristic() == 0, otherwise F_p.
class Field {
  public:
    static Field rationals() { return Field(0); }
    /// Throws NotPrime unless p is prime.
    static Field prime(std::int64_t p);
    /// Accepts "Q", "QQ", "F2", "F_3", "GF(5)".
    static Field parse(const std::string& text);

    std::int64_t characteristic() const { return p_; }
    bool is_rationals() const { return p_ == 0; }
    /// Canonical representative: unchanged over Q, an integer in [0, p) over F_p.
    /// Throws std::domain_error when the denominator is divisible by p.
    Rational reduce(const Rational& x) const;
    std::string str() const;

    friend bool operator==(const Field&, const Field&) = default;

  private:
    explicit Field(std::int64_t p) : p_(p) {}
    std::int64_t p_;
};

using Exponents = std::vector<unsigned>;

/// Multivariate polynomial with rational coefficients over a fixed number of
/// variables. Terms with zero coefficient are never stored.
class Polynomial {
  public:
    explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t index);
    static Polynomial monomial(const Exponents& exps, const Rational& c = 1);

    std::size_t nvars() const { return nvars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Exponents& exps) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    Polynomial operator-() const;
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial pow(unsigned e) const;
    /// Coefficients replaced by their canonical representatives in `field`.
    Polynomial reduced(const Field& field) const;

    /// Weighted degree when every term has the same one; nullopt for zero or
    /// mixed degrees.
    std::optional<std::int64_t> homogeneous_degree(const std::vector<std::int64_t>& degrees) const;

    std::string str(const std::vector<std::string>& names) const;

  private:
    void add_term(const Exponents& e, const Rational& c);

    std::size_t nvars_;
    std::map<Exponents, Rational> terms_;
};

struct GradedVariable {
    std::string name;
    std::int64_t degree;
};

/// Free graded polynomial algebra over a field.
class GradedAlgebra {
  public:
    /// Throws std::invalid_argument on an empty list, a non-positive degree or
    /// a repeated name.
    GradedAlgebra(Field field, std::vector<GradedVariable> vars);

    const Field& field() const { return field_; }
    const std::vector<GradedVariable>& variables() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    std::vector<std::int64_t> degrees() const;
    std::vector<std::string> names() const;

    Polynomial variable(std::size_t i) const { return Polynomial::variable(nvars(), i); }
    Polynomial one() const { return Polynomial::constant(nvars(), 1); }

    /// Monomials of weighted degree d, exponent vectors in decreasing
    /// lexicographic order (a^3 before a*b before b^...). Empty for d < 0.
    std::vector<Exponents> graded_component(std::int64_t d) const;
    /// Component dimensions for degrees 0..top.
    std::vector<std::int64_t> hilbert(std::int64_t top) const;

    /// Weighted degree of a homogeneous polynomial; throws InhomogeneousInput
    /// for zero or mixed-degree input.
    std::int64_t degree_of(const Polynomial& f) const;

  private:
    Field field_;
    std::vector<GradedVariable> vars_;
};

/// Number of monomials of weighted degree d in variables of the given degrees.
std::int64_t count_weighted_monomials(const std::vector<std::int64_t>& degrees, std::int64_t d);

}  // namespace mfd

#endif

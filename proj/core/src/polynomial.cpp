#include "mfdecomp/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mfdecomp/errors.hpp"
#include "mfdecomp/levels.hpp"

namespace mfd {

Field Field::prime(std::int64_t p) {
    if (!is_prime(p))
        throw NotPrime(std::to_string(p) + " is not prime");
    return Field(p);
}

Field Field::parse(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (t == "Q" || t == "QQ")
        return rationals();
    std::string digits;
    if (t.rfind("GF(", 0) == 0 && t.size() > 4 && t.back() == ')')
        digits = t.substr(3, t.size() - 4);
    else if (t.rfind("F_", 0) == 0)
        digits = t.substr(2);
    else if (t.rfind("F", 0) == 0)
        digits = t.substr(1);
    if (digits.empty() || digits.size() > 9 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("unknown field '" + text + "'");
    try {
        return prime(std::stoll(digits));
    } catch (const NotPrime& e) {
        throw ParseError(std::string("field characteristic: ") + e.what());
    }
}

Rational Field::reduce(const Rational& x) const {
    if (p_ == 0)
        return x;
    const Integer p(static_cast<long>(p_));
    Integer den = x.denominator() % p;
    if (den == 0)
        throw std::domain_error("denominator " + x.denominator().get_str() + " is not invertible mod " +
                                std::to_string(p_));
    Integer inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    Integer r = (x.numerator() * inv) % p;
    if (r < 0)
        r += p;
    return Rational(r);
}

std::string Field::str() const {
    return p_ == 0 ? "Q" : "F" + std::to_string(p_);
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial f(nvars);
    f.add_term(Exponents(nvars, 0), c);
    return f;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars)
        throw std::out_of_range("variable index");
    Exponents e(nvars, 0);
    e[index] = 1;
    return monomial(e);
}

Polynomial Polynomial::monomial(const Exponents& exps, const Rational& c) {
    Polynomial f(exps.size());
    f.add_term(exps, c);
    return f;
}

Rational Polynomial::coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational{} : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.nvars_ != nvars_)
        throw std::invalid_argument("polynomials over different variable sets");
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    return *this += -o;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [e, v] : r.terms_)
        v = -v;
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_)
        throw std::invalid_argument("polynomials over different variable sets");
    Polynomial r(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(nvars_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1u)
            result = result * base;
        e >>= 1u;
        if (e)
            base = base * base;
    }
    return result;
}

Polynomial Polynomial::reduced(const Field& field) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_)
        r.add_term(e, field.reduce(c));
    return r;
}

std::optional<std::int64_t> Polynomial::homogeneous_degree(const std::vector<std::int64_t>& degrees) const {
    if (degrees.size() != nvars_)
        throw std::invalid_argument("degree list does not match variable count");
    std::optional<std::int64_t> deg;
    for (const auto& [e, c] : terms_) {
        std::int64_t d = 0;
        for (std::size_t i = 0; i < nvars_; ++i)
            d += degrees[i] * e[i];
        if (deg && *deg != d)
            return std::nullopt;
        deg = d;
    }
    return deg;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = c.abs();
        os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
        first = false;
        std::vector<std::string> factors;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0)
                continue;
            factors.push_back(e[i] == 1 ? names.at(i) : names.at(i) + "^" + std::to_string(e[i]));
        }
        if (factors.empty()) {
            os << mag.str();
            continue;
        }
        if (mag != 1)
            os << mag.str() << "*";
        for (std::size_t i = 0; i < factors.size(); ++i)
            os << (i ? "*" : "") << factors[i];
    }
    return os.str();
}

GradedAlgebra::GradedAlgebra(Field field, std::vector<GradedVariable> vars)
    : field_(field), vars_(std::move(vars)) {
    if (vars_.empty())
        throw std::invalid_argument("graded algebra needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (v.degree <= 0)
            throw std::invalid_argument("variable '" + v.name + "' must have positive degree");
        if (!seen.insert(v.name).second)
            throw std::invalid_argument("variable '" + v.name + "' declared twice");
    }
}

std::vector<std::int64_t> GradedAlgebra::degrees() const {
    std::vector<std::int64_t> out;
    for (const auto& v : vars_)
        out.push_back(v.degree);
    return out;
}

std::vector<std::string> GradedAlgebra::names() const {
    std::vector<std::string> out;
    for (const auto& v : vars_)
        out.push_back(v.name);
    return out;
}

std::vector<Exponents> GradedAlgebra::graded_component(std::int64_t d) const {
    std::vector<Exponents> out;
    if (d < 0)
        return out;
    Exponents e(nvars(), 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t rest) {
        const std::int64_t deg = vars_[i].degree;
        if (i + 1 == nvars()) {
            if (rest % deg == 0) {
                e[i] = static_cast<unsigned>(rest / deg);
                out.push_back(e);
            }
            return;
        }
        for (std::int64_t k = rest / deg; k >= 0; --k) {
            e[i] = static_cast<unsigned>(k);
            rec(i + 1, rest - k * deg);
        }
        e[i] = 0;
    };
    rec(0, d);
    return out;
}

std::vector<std::int64_t> GradedAlgebra::hilbert(std::int64_t top) const {
    std::vector<std::int64_t> out;
    const auto degs = degrees();
    for (std::int64_t d = 0; d <= top; ++d)
        out.push_back(count_weighted_monomials(degs, d));
    return out;
}

std::int64_t GradedAlgebra::degree_of(const Polynomial& f) const {
    if (f.nvars() != nvars())
        throw std::invalid_argument("polynomial does not belong to this algebra");
    const auto d = f.homogeneous_degree(degrees());
    if (!d)
        throw InhomogeneousInput(f.is_zero() ? "zero polynomial has no degree"
                                             : "polynomial " + f.str(names()) + " is not homogeneous");
    return *d;
}

std::int64_t count_weighted_monomials(const std::vector<std::int64_t>& degrees, std::int64_t d) {
    if (d < 0)
        return 0;
    std::vector<std::int64_t> ways(static_cast<std::size_t>(d) + 1, 0);
    ways[0] = 1;
    for (std::int64_t w : degrees)
        for (std::int64_t k = w; k <= d; ++k)
            ways[k] += ways[k - w];
    return ways[d];
}

}  // namespace mfd

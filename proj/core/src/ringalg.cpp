#include "mfdecomp/ringalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "mfdecomp/errors.hpp"
#include "mfdecomp/poly_parser.hpp"

namespace mfd {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

std::size_t rank_rationals(const Matrix& rows) {
    if (rows.empty())
        return 0;
    const std::size_t ncols = rows.front().size();
    std::vector<std::vector<Integer>> a;
    a.reserve(rows.size());
    for (const auto& row : rows) {
        Integer l = 1;
        for (const auto& x : row)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
        std::vector<Integer> r;
        r.reserve(ncols);
        for (const auto& x : row)
            r.push_back(x.numerator() * (l / x.denominator()));
        a.push_back(std::move(r));
    }
    // Fraction-free (Bareiss) elimination.
    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t col = 0; col < ncols && rank < a.size(); ++col) {
        std::size_t piv = rank;
        while (piv < a.size() && a[piv][col] == 0)
            ++piv;
        if (piv == a.size())
            continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t i = rank + 1; i < a.size(); ++i) {
            for (std::size_t j = col + 1; j < ncols; ++j) {
                Integer t = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

std::size_t rank_mod_p(const Matrix& rows, std::int64_t p) {
    if (rows.empty())
        return 0;
    const std::size_t ncols = rows.front().size();
    const Field f = Field::prime(p);
    std::vector<std::vector<std::int64_t>> a;
    for (const auto& row : rows) {
        std::vector<std::int64_t> r;
        for (const auto& x : row)
            r.push_back(f.reduce(x).numerator().get_si());
        a.push_back(std::move(r));
    }
    auto inverse = [p](std::int64_t x) {
        std::int64_t result = 1, e = p - 2;
        x %= p;
        while (e) {
            if (e & 1)
                result = result * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return result;
    };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < a.size(); ++col) {
        std::size_t piv = rank;
        while (piv < a.size() && a[piv][col] == 0)
            ++piv;
        if (piv == a.size())
            continue;
        std::swap(a[piv], a[rank]);
        const std::int64_t inv = inverse(a[rank][col]);
        for (std::size_t i = rank + 1; i < a.size(); ++i) {
            const std::int64_t factor = a[i][col] * inv % p;
            if (factor == 0)
                continue;
            for (std::size_t j = col; j < ncols; ++j)
                a[i][j] = ((a[i][j] - factor * a[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

/// Coordinates of homogeneous polynomials in the monomial basis of one degree.
class Component {
  public:
    Component(const GradedAlgebra& alg, std::int64_t d) : monomials_(alg.graded_component(d)), field_(alg.field()) {
        for (std::size_t i = 0; i < monomials_.size(); ++i)
            column_[monomials_[i]] = i;
    }

    std::size_t dim() const { return monomials_.size(); }
    const std::vector<Exponents>& monomials() const { return monomials_; }

    std::vector<Rational> coords(const Polynomial& f) const {
        std::vector<Rational> row(dim());
        const Polynomial g = f.reduced(field_);
        for (const auto& [e, c] : g.terms())
            row.at(column_.at(e)) = c;
        return row;
    }

  private:
    std::vector<Exponents> monomials_;
    std::map<Exponents, std::size_t> column_;
    Field field_;
};

/// Rows mono * f for every f and every monomial completing it to degree d.
Matrix ideal_rows(const GradedAlgebra& alg, const std::vector<Polynomial>& gens, const std::vector<std::int64_t>& degs,
                  const Component& target, std::int64_t d) {
    Matrix rows;
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (const auto& mono : alg.graded_component(d - degs[j]))
            rows.push_back(target.coords(Polynomial::monomial(mono) * gens[j]));
    return rows;
}

Polynomial parse_in(const GradedAlgebra& alg, const std::string& text) {
    return parse_polynomial(text, alg.names());
}

SubringGenerator generator(const GradedAlgebra& alg, const std::string& name, const std::string& text) {
    Polynomial f = parse_in(alg, text);
    const auto d = alg.degree_of(f);
    return SubringGenerator{name, std::move(f), d};
}

}  // namespace

std::vector<std::int64_t> SubringSpec::degrees() const {
    std::vector<std::int64_t> out;
    for (const auto& g : generators)
        out.push_back(g.degree);
    return out;
}

std::int64_t SubringSpec::max_degree() const {
    std::int64_t m = 0;
    for (const auto& g : generators)
        m = std::max(m, g.degree);
    return m;
}

std::size_t matrix_rank(const Field& field, const std::vector<std::vector<Rational>>& rows) {
    for (const auto& r : rows)
        if (r.size() != rows.front().size())
            throw std::invalid_argument("ragged matrix");
    return field.is_rationals() ? rank_rationals(rows) : rank_mod_p(rows, field.characteristic());
}

std::int64_t default_certificate_bound(const SubringSpec& subring) {
    return 4 * subring.max_degree();
}

BasisCertificate verify_free_basis(const GradedAlgebra& ambient, const SubringSpec& subring,
                                   const std::vector<Polynomial>& basis, std::int64_t bound) {
    if (subring.generators.empty())
        throw std::invalid_argument("subring needs at least one generator");
    for (const auto& g : subring.generators) {
        if (g.degree <= 0)
            throw InhomogeneousInput("generator " + g.name + " must have positive degree");
        if (ambient.degree_of(g.poly) != g.degree)
            throw InhomogeneousInput("generator " + g.name + " is not of declared degree " + std::to_string(g.degree));
    }
    BasisCertificate cert;
    cert.bound = bound;
    for (const auto& b : basis)
        cert.basis_degrees.push_back(ambient.degree_of(b));
    const std::int64_t max_basis =
        cert.basis_degrees.empty() ? 0 : *std::max_element(cert.basis_degrees.begin(), cert.basis_degrees.end());
    if (bound < max_basis + subring.max_degree())
        throw std::invalid_argument("degree bound " + std::to_string(bound) + " is below max basis degree + max generator degree");

    std::vector<GradedVariable> gen_vars;
    for (std::size_t j = 0; j < subring.generators.size(); ++j)
        gen_vars.push_back(GradedVariable{"g" + std::to_string(j), subring.generators[j].degree});
    const GradedAlgebra sub(ambient.field(), gen_vars);

    std::map<std::pair<std::size_t, unsigned>, Polynomial> powers;
    auto power = [&](std::size_t j, unsigned e) -> const Polynomial& {
        auto it = powers.find({j, e});
        if (it == powers.end())
            it = powers.emplace(std::make_pair(j, e), subring.generators[j].poly.pow(e).reduced(ambient.field())).first;
        return it->second;
    };

    for (std::int64_t d = 0; d <= bound; ++d) {
        const Component comp(ambient, d);
        Matrix rows;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (const auto& mono : sub.graded_component(d - cert.basis_degrees[i])) {
                Polynomial product = basis[i];
                for (std::size_t j = 0; j < mono.size(); ++j)
                    if (mono[j])
                        product = product * power(j, mono[j]);
                rows.push_back(comp.coords(product));
            }
        }
        const std::size_t rank = matrix_rank(ambient.field(), rows);
        const bool spans = rank == comp.dim();
        const bool independent = rank == rows.size();
        const bool counts = rows.size() == comp.dim();
        if (!counts && cert.hilbert_identity) {
            cert.hilbert_identity = false;
            cert.hilbert_failing_degree = d;
        }
        if ((!spans || !independent || !counts) && !cert.failing_degree) {
            cert.failing_degree = d;
            cert.spanning_failed = !spans;
            cert.independence_failed = !independent;
        }
    }
    cert.free = !cert.failing_degree;
    return cert;
}

RegularSequenceReport verify_regular_sequence(const GradedAlgebra& algebra, const std::vector<Polynomial>& elements) {
    std::vector<Polynomial> f;
    std::vector<std::int64_t> degs;
    for (const auto& e : elements) {
        const auto d = algebra.degree_of(e);
        if (d <= 0)
            throw InhomogeneousInput("regular sequence elements must have positive degree");
        f.push_back(e.reduced(algebra.field()));
        degs.push_back(d);
    }
    RegularSequenceReport report;
    report.bound = 2 * std::accumulate(degs.begin(), degs.end(), std::int64_t{0});

    for (std::size_t k = 0; k < f.size() && report.regular; ++k) {
        const std::vector<Polynomial> prefix(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(k));
        const std::vector<std::int64_t> prefix_degs(degs.begin(), degs.begin() + static_cast<std::ptrdiff_t>(k));
        for (std::int64_t d = 0; d + degs[k] <= report.bound; ++d) {
            const Component src(algebra, d), dst(algebra, d + degs[k]);
            const auto field = algebra.field();
            const std::size_t quotient_src = src.dim() - matrix_rank(field, ideal_rows(algebra, prefix, prefix_degs, src, d));
            Matrix rows = ideal_rows(algebra, prefix, prefix_degs, dst, d + degs[k]);
            const std::size_t ideal_dst = matrix_rank(field, rows);
            for (const auto& mono : src.monomials())
                rows.push_back(dst.coords(Polynomial::monomial(mono) * f[k]));
            const std::size_t image = matrix_rank(field, rows) - ideal_dst;
            if (image != quotient_src) {
                report.regular = false;
                report.failing_element = k;
                report.failing_degree = d;
                break;
            }
        }
    }

    std::vector<std::int64_t> expected = algebra.hilbert(report.bound);
    for (auto e : degs)
        for (std::int64_t d = report.bound; d >= e; --d)
            expected[d] -= expected[d - e];
    for (std::int64_t d = 0; d <= report.bound; ++d) {
        const Component comp(algebra, d);
        const auto quotient = static_cast<std::int64_t>(comp.dim()) -
                              static_cast<std::int64_t>(matrix_rank(algebra.field(), ideal_rows(algebra, f, degs, comp, d)));
        if (quotient != expected[d]) {
            report.hilbert_criterion = false;
            break;
        }
    }
    return report;
}

WeierstrassReport weierstrass_identity_check(const WeierstrassPresentation& p) {
    Polynomial r = p.c4.pow(3) - p.c6.pow(2) - p.delta * Rational(1728);
    r = r.reduced(p.algebra.field());
    return WeierstrassReport{r.is_zero(), r};
}

std::vector<std::string> free_basis_preset_names() {
    return {"f2-gamma1-3", "f3-gamma1-2", "q-gamma1-2", "q-gamma1-3"};
}

FreeBasisProblem free_basis_preset(const std::string& name) {
    if (name == "f2-gamma1-3") {
        GradedAlgebra a(Field::prime(2), {{"a1", 1}, {"a3", 3}});
        SubringSpec s{{generator(a, "a1", "a1"), generator(a, "delta", "a3^4 + a1^3*a3^3")}};
        return {name, a, s, {parse_in(a, "1"), parse_in(a, "a3"), parse_in(a, "a3^2"), parse_in(a, "a3^3")}, 40};
    }
    if (name == "f3-gamma1-2") {
        GradedAlgebra a(Field::prime(3), {{"b2", 2}, {"b4", 4}});
        SubringSpec s{{generator(a, "b2", "b2"), generator(a, "delta", "b2^2*b4^2 - b4^3")}};
        return {name, a, s, {parse_in(a, "1"), parse_in(a, "b4"), parse_in(a, "b4^2")}, 40};
    }
    if (name == "q-gamma1-2") {
        GradedAlgebra a(Field::rationals(), {{"b2", 2}, {"b4", 4}});
        SubringSpec s{{generator(a, "c4", "b2^2 - 24*b4"), generator(a, "delta", "(b2^2*b4^2 - 32*b4^3)/4")}};
        std::vector<Polynomial> basis;
        for (const char* b : {"1", "b2", "b4", "b2*b4", "b4^2", "b2*b4^2"})
            basis.push_back(parse_in(a, b));
        return {name, a, s, basis, 48};
    }
    if (name == "q-gamma1-3") {
        GradedAlgebra a(Field::rationals(), {{"a1", 1}, {"a3", 3}});
        SubringSpec s{{generator(a, "c4", "a1^4 - 24*a1*a3"), generator(a, "delta", "a1^3*a3^3 - 27*a3^4")}};
        std::vector<Polynomial> basis;
        for (unsigned i = 0; i <= 3; ++i)
            for (unsigned j = 0; j <= 3; ++j)
                basis.push_back(Polynomial::monomial({i, j}));
        return {name, a, s, basis, 48};
    }
    throw ParseError("unknown free-basis preset '" + name + "'");
}

std::vector<std::string> weierstrass_preset_names() {
    return {"gamma1-2", "gamma1-3"};
}

WeierstrassPresentation weierstrass_preset(const std::string& name) {
    if (name == "gamma1-2") {
        GradedAlgebra a(Field::rationals(), {{"b2", 2}, {"b4", 4}});
        return {name, a, parse_in(a, "b2^2 - 24*b4"), parse_in(a, "-b2^3 + 36*b2*b4"),
                parse_in(a, "(b2^2*b4^2 - 32*b4^3)/4")};
    }
    if (name == "gamma1-3") {
        GradedAlgebra a(Field::rationals(), {{"a1", 1}, {"a3", 3}});
        return {name, a, parse_in(a, "a1^4 - 24*a1*a3"), parse_in(a, "-a1^6 + 36*a1^3*a3 - 216*a3^2"),
                parse_in(a, "a1^3*a3^3 - 27*a3^4")};
    }
    throw ParseError("unknown presentation '" + name + "'");
}

std::vector<RegularSequenceProblem> regular_sequence_presets() {
    GradedAlgebra f2(Field::prime(2), {{"a1", 1}, {"a3", 3}});
    GradedAlgebra f3(Field::prime(3), {{"b2", 2}, {"b4", 4}});
    return {
        {"f2-gamma1-3", f2, {parse_in(f2, "a1^4"), parse_in(f2, "a3^4 + a1^3*a3^3")}, true},
        {"f3-gamma1-2", f3, {parse_in(f3, "b2^2"), parse_in(f3, "b2^2*b4^2 - b4^3")}, true},
        {"f3-nonregular", f3, {parse_in(f3, "b2^2"), parse_in(f3, "b2^3")}, false},
    };
}

}  // namespace mfd

#ifndef MFDECOMP_RINGALG_HPP
#define MFDECOMP_RINGALG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mfdecomp/polynomial.hpp"

namespace mfd {

struct SubringGenerator {
    std::string name;
    Polynomial poly;
    std::int64_t degree;
};

/// Subring of a graded algebra generated by homogeneous elements.
struct SubringSpec {
    std::vector<SubringGenerator> generators;

    std::vector<std::int64_t> degrees() const;
    std::int64_t max_degree() const;
};

/// Rank of a matrix given by rows, computed exactly over `field`
/// (fraction-free elimination over Q, plain elimination over F_p).
std::size_t matrix_rank(const Field& field, const std::vector<std::vector<Rational>>& rows);

/// Outcome of checking that a list of homogeneous elements is a free basis of
/// the ambient algebra as a module over a subring, degree by degree.
struct BasisCertificate {
    std::int64_t bound = 0;
    bool free = false;
    /// First degree where spanning, independence or the count identity failed.
    std::optional<std::int64_t> failing_degree;
    bool spanning_failed = false;
    bool independence_failed = false;
    /// H_ambient(t) = H_subring(t) * sum t^deg(b_i) through the bound.
    bool hilbert_identity = true;
    std::optional<std::int64_t> hilbert_failing_degree;
    std::vector<std::int64_t> basis_degrees;

    std::string verdict() const { return free ? "free" : "not free"; }
};

/// Throws InhomogeneousInput for an inhomogeneous basis element or a
/// generator whose degree differs from its declared one, and
/// std::invalid_argument when bound < max basis degree + max generator degree.
BasisCertificate verify_free_basis(const GradedAlgebra& ambient, const SubringSpec& subring,
                                   const std::vector<Polynomial>& basis, std::int64_t bound);

/// Four times the largest generator degree.
std::int64_t default_certificate_bound(const SubringSpec& subring);

struct RegularSequenceReport {
    bool regular = true;
    /// 2 * sum of element degrees.
    std::int64_t bound = 0;
    /// Element whose multiplication map fails to be injective, and the source degree.
    std::optional<std::size_t> failing_element;
    std::optional<std::int64_t> failing_degree;
    /// H_{A/(f_1..f_r)}(t) = prod (1 - t^{deg f_i}) H_A(t) through the bound.
    bool hilbert_criterion = true;

    std::string verdict() const { return regular ? "regular" : "not regular"; }
};

/// Throws InhomogeneousInput for inhomogeneous or constant elements.
RegularSequenceReport verify_regular_sequence(const GradedAlgebra& algebra, const std::vector<Polynomial>& elements);

struct WeierstrassPresentation {
    std::string name;
    GradedAlgebra algebra;
    Polynomial c4;
    Polynomial c6;
    Polynomial delta;
};

struct WeierstrassReport {
    bool holds = false;
    /// c4^3 - c6^2 - 1728*delta, reduced over the algebra's field.
    Polynomial residual;
};

WeierstrassReport weierstrass_identity_check(const WeierstrassPresentation& p);

struct FreeBasisProblem {
    std::string name;
    GradedAlgebra ambient;
    SubringSpec subring;
    std::vector<Polynomial> basis;
    std::int64_t bound;
};

struct RegularSequenceProblem {
    std::string name;
    GradedAlgebra algebra;
    std::vector<Polynomial> elements;
    bool expected_regular;
};

std::vector<std::string> free_basis_preset_names();
/// Throws ParseError for an unknown name.
FreeBasisProblem free_basis_preset(const std::string& name);

std::vector<std::string> weierstrass_preset_names();
/// Throws ParseError for an unknown name.
WeierstrassPresentation weierstrass_preset(const std::string& name);

std::vector<RegularSequenceProblem> regular_sequence_presets();

}  // namespace mfd

#endif

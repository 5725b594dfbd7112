#ifndef MFDECOMP_DECOMP_HPP
#define MFDECOMP_DECOMP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mfdecomp/group.hpp"
#include "mfdecomp/hilbert.hpp"
#include "mfdecomp/weight1.hpp"

namespace mfd {

/// The standard summands a pushforward is split into. A multiplicity at
/// shift i stands for the summand block ⊗ ω^{⊗ -i}.
///
///   OmegaPowers  O on the moduli of elliptic curves, rank 1, ring Z[c4, c6]
///   Level2       pushforward from Γ1(2), rank 3, weights (2, 4)
///   Level3       pushforward from Γ1(3), rank 8, weights (1, 3)
///   Level4       pushforward from Γ1(4), rank 12, weights (1, 2)
///   Level5or6    pushforward from Γ1(5) ≅ Γ1(6), rank 24
enum class BlockTag { OmegaPowers, Level2, Level3, Level4, Level5or6 };

struct BaseBlock {
    BlockTag tag;

    std::int64_t rank() const;
    /// Largest shift a decomposition into this block can use.
    std::int64_t max_shift() const;
    std::string name() const;
    /// Generator weights of the block's ring of modular forms, when it is a
    /// free polynomial ring on two generators.
    std::optional<WeightedLine> weights() const;
    /// Dimensions of the block's modular forms in weights 0..top.
    HilbertFunction hilbert(std::int64_t top) const;
    /// The block's own splitting into powers of ω.
    TwistMultiset omega_sequence() const;
};

/// Parses omega, level2, level3, level4, level5, level6 (and level5or6).
BlockTag parse_block(const std::string& name);

struct DecompositionSequence {
    CongruenceGroup group;
    BlockTag block;
    TwistMultiset mult;
};

/// l_i = m_i - m_{i-4} - m_{i-6} + m_{i-10} for 0 <= i <= 11.
DecompositionSequence omega_decomposition(const CongruenceGroup& g, const Weight1Data& w1);
/// k_i = m_i - m_{i-1} - m_{i-3} + m_{i-4} for 0 <= i <= 5; Γ1(n >= 5), Γ(n >= 3).
DecompositionSequence level3_decomposition(const CongruenceGroup& g, const Weight1Data& w1);
/// k_i = m_i - m_{i-2} - m_{i-4} + m_{i-6} for 0 <= i <= 7; Γ1(n >= 4), Γ(n >= 3).
DecompositionSequence level2_decomposition(const CongruenceGroup& g, const Weight1Data& w1);
/// q = 5, 6: κ = (1, m1 - 2, m2 - 2m1 + 1, s1). q = 4: the Level2 sequence
/// divided by 1 + t + t^2 + t^3.
DecompositionSequence level456_decomposition(const CongruenceGroup& g, int q, const Weight1Data& w1);
/// Dispatches to the closed form for `block`.
DecompositionSequence decomposition(const CongruenceGroup& g, BlockTag block, const Weight1Data& w1);

/// Whether a decomposition into `block` is defined for g.
bool block_supported(const CongruenceGroup& g, BlockTag block);

/// Independent route: deconvolve the dimension sequence of g by the block's
/// Hilbert function. Throws NegativeMultiplicity / ResidualMismatch.
TwistMultiset deconvolution_oracle(const CongruenceGroup& g, BlockTag block, const Weight1Data& w1);

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct ConsistencyReport {
    std::vector<CheckResult> checks;

    bool passed() const;
    /// The first failing check, if any.
    const CheckResult* first_failure() const;
};

/// Identities specific to the block, e.g. l_{12-i} = s_i and l_10 = genus
/// for OmegaPowers, or k_5 = s_1 and the balance k0+k3 = k1+k4 = k2+k5 for
/// Level3.
std::vector<CheckResult> block_identities(const DecompositionSequence& seq, const Weight1Data& w1);

/// Convolution identity m_k = Σ mult(i)·block(k - i) for k <= 40, the rank
/// identity, coherence with the other closed forms and the block identities.
ConsistencyReport verify_consistency(const DecompositionSequence& seq, const Weight1Data& w1);

struct ObstructionWitness {
    std::int64_t p;
    std::int64_t d_p;
    bool divisible;
};

struct ObstructionReport {
    std::int64_t q = 0;
    std::int64_t d_q = 0;
    /// 16, 9, or a prime >= 5 dividing d_q.
    std::int64_t divisor = 0;
    /// A class a mod divisor, coprime to it and not ±1, such that primes
    /// p ≡ a never have divisor | p^2 - 1.
    std::int64_t residue = 0;
    /// Primes p <= bound, coprime to q, with d_q ∤ d_p.
    std::vector<ObstructionWitness> primes;
    /// Primes p <= bound with p ≡ residue (mod divisor).
    std::vector<std::int64_t> residue_class_primes;
    /// divisor ∤ d_p held for every prime in residue_class_primes.
    bool residue_class_consistent = true;
};

/// Searches p <= prime_bound for index obstructions to decomposing Γ1(p)
/// into shifted copies of the Γ1(q) block. Requires q > 6.
ObstructionReport obstruction_search(std::int64_t q, std::int64_t prime_bound);

enum class TableFlavor { Omega, Level2, Level3 };

TableFlavor parse_flavor(const std::string& name);
std::string flavor_name(TableFlavor flavor);
/// Number of multiplicity columns: 12, 8 or 6.
std::size_t flavor_width(TableFlavor flavor);

struct TableRow {
    std::int64_t n;
    std::int64_t genus;
    std::vector<std::int64_t> mult;
};

/// Rows for Γ1(n), from <= n <= to.
std::vector<TableRow> table_generate(std::int64_t from, std::int64_t to, TableFlavor flavor, const Weight1Data& w1);

}  // namespace mfd

#endif

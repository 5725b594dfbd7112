#include "mfdecomp/decomp.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mfdecomp/errors.hpp"
#include "mfdecomp/levels.hpp"

namespace mfd {

namespace {

constexpr std::int64_t kConvolutionCheckTop = 40;

std::string join(const std::vector<std::int64_t>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::string join(const TwistMultiset& t) {
    return join(t.padded(static_cast<std::size_t>(std::max<std::int64_t>(t.max_shift() + 1, 1))));
}

// Builds a sequence from signed values, rejecting negative entries.
TwistMultiset nonnegative_sequence(const std::vector<std::int64_t>& values, const CongruenceGroup& g,
                                   const std::string& what) {
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] < 0)
            throw DecompositionInvalid(what + " for " + g.str() + " has negative entry at shift " +
                                       std::to_string(i) + ": " + join(values));
    return TwistMultiset(values);
}

void enforce_identities(const DecompositionSequence& seq, const Weight1Data& w1) {
    for (const auto& check : block_identities(seq, w1))
        if (!check.passed)
            throw DecompositionInvalid(check.name + " fails for " + seq.group.str() + ": " + check.detail);
}

void require_supported(const CongruenceGroup& g, BlockTag block) {
    if (!block_supported(g, block))
        throw UnsupportedGroup("no " + BaseBlock{block}.name() + " decomposition for " + g.str());
}

CheckResult make_check(std::string name, bool passed, std::string detail = {}) {
    return CheckResult{std::move(name), passed, std::move(detail)};
}

}  // namespace

std::int64_t BaseBlock::rank() const {
    switch (tag) {
    case BlockTag::OmegaPowers: return 1;
    case BlockTag::Level2: return 3;
    case BlockTag::Level3: return 8;
    case BlockTag::Level4: return 12;
    case BlockTag::Level5or6: return 24;
    }
    return 0;
}

std::int64_t BaseBlock::max_shift() const {
    switch (tag) {
    case BlockTag::OmegaPowers: return 11;
    case BlockTag::Level2: return 7;
    case BlockTag::Level3: return 5;
    case BlockTag::Level4: return 4;
    case BlockTag::Level5or6: return 3;
    }
    return 0;
}

std::string BaseBlock::name() const {
    switch (tag) {
    case BlockTag::OmegaPowers: return "omega";
    case BlockTag::Level2: return "level2";
    case BlockTag::Level3: return "level3";
    case BlockTag::Level4: return "level4";
    case BlockTag::Level5or6: return "level5or6";
    }
    return "?";
}

std::optional<WeightedLine> BaseBlock::weights() const {
    switch (tag) {
    case BlockTag::OmegaPowers: return WeightedLine(4, 6);
    case BlockTag::Level2: return WeightedLine(2, 4);
    case BlockTag::Level3: return WeightedLine(1, 3);
    case BlockTag::Level4: return WeightedLine(1, 2);
    case BlockTag::Level5or6: return std::nullopt;
    }
    return std::nullopt;
}

HilbertFunction BaseBlock::hilbert(std::int64_t top) const {
    if (auto w = weights())
        return HilbertFunction::weighted_polynomial_ring(*w, top);
    DimensionTable dims(CongruenceGroup::gamma1(5), Weight1Data::empty(), top);
    return HilbertFunction(dims.m_values());
}

TwistMultiset BaseBlock::omega_sequence() const {
    switch (tag) {
    case BlockTag::OmegaPowers: return TwistMultiset({1});
    case BlockTag::Level2: return TwistMultiset({1, 0, 1, 0, 1});
    case BlockTag::Level3: return TwistMultiset({1, 1, 1, 2, 1, 1, 1});
    case BlockTag::Level4: return TwistMultiset({1, 1, 2, 2, 2, 2, 1, 1});
    case BlockTag::Level5or6: return TwistMultiset({1, 2, 3, 4, 4, 4, 3, 2, 1});
    }
    return {};
}

BlockTag parse_block(const std::string& name) {
    if (name == "omega")
        return BlockTag::OmegaPowers;
    if (name == "level2")
        return BlockTag::Level2;
    if (name == "level3")
        return BlockTag::Level3;
    if (name == "level4")
        return BlockTag::Level4;
    if (name == "level5" || name == "level6" || name == "level5or6")
        return BlockTag::Level5or6;
    throw ParseError("unknown block '" + name + "'");
}

bool block_supported(const CongruenceGroup& g, BlockTag block) {
    const bool gamma1 = g.kind() == GroupKind::Gamma1;
    const bool full = g.kind() == GroupKind::GammaFull;
    switch (block) {
    case BlockTag::OmegaPowers: return true;
    case BlockTag::Level2: return (gamma1 && g.level() >= 4) || (full && g.level() >= 3);
    case BlockTag::Level3:
    case BlockTag::Level4:
    case BlockTag::Level5or6: return (gamma1 && g.level() >= 5) || (full && g.level() >= 3);
    }
    return false;
}

DecompositionSequence omega_decomposition(const CongruenceGroup& g, const Weight1Data& w1) {
    DimensionTable d(g, w1, 11);
    std::vector<std::int64_t> l;
    for (std::int64_t i = 0; i <= 11; ++i)
        l.push_back(d.m(i) - d.m(i - 4) - d.m(i - 6) + d.m(i - 10));
    DecompositionSequence seq{g, BlockTag::OmegaPowers, nonnegative_sequence(l, g, "omega sequence")};
    enforce_identities(seq, w1);
    return seq;
}

DecompositionSequence level3_decomposition(const CongruenceGroup& g, const Weight1Data& w1) {
    require_supported(g, BlockTag::Level3);
    DimensionTable d(g, w1, 5);
    std::vector<std::int64_t> k;
    for (std::int64_t i = 0; i <= 5; ++i)
        k.push_back(d.m(i) - d.m(i - 1) - d.m(i - 3) + d.m(i - 4));
    DecompositionSequence seq{g, BlockTag::Level3, nonnegative_sequence(k, g, "level3 sequence")};
    enforce_identities(seq, w1);
    return seq;
}

DecompositionSequence level2_decomposition(const CongruenceGroup& g, const Weight1Data& w1) {
    require_supported(g, BlockTag::Level2);
    DimensionTable d(g, w1, 7);
    std::vector<std::int64_t> k;
    for (std::int64_t i = 0; i <= 7; ++i)
        k.push_back(d.m(i) - d.m(i - 2) - d.m(i - 4) + d.m(i - 6));
    DecompositionSequence seq{g, BlockTag::Level2, nonnegative_sequence(k, g, "level2 sequence")};
    enforce_identities(seq, w1);
    return seq;
}

DecompositionSequence level456_decomposition(const CongruenceGroup& g, int q, const Weight1Data& w1) {
    if (q == 4) {
        require_supported(g, BlockTag::Level4);
        const auto level2 = level2_decomposition(g, w1);
        // Γ1(4) = Γ1(2) ⊗ (1 + t + t^2 + t^3); divide it out.
        std::vector<std::int64_t> target = level2.mult.padded(11);
        std::vector<std::int64_t> factor(11, 0);
        std::fill(factor.begin(), factor.begin() + 4, 1);
        try {
            auto kappa = deconvolve(HilbertFunction(target), HilbertFunction(factor), 7, 10);
            return DecompositionSequence{g, BlockTag::Level4, kappa};
        } catch (const NegativeMultiplicity& e) {
            throw DecompositionInvalid("level4 sequence for " + g.str() + ": " + e.what());
        } catch (const ResidualMismatch& e) {
            throw DecompositionInvalid("level4 sequence for " + g.str() + ": " + e.what());
        }
    }
    if (q != 5 && q != 6)
        throw std::invalid_argument("level456_decomposition needs q in {4, 5, 6}");
    require_supported(g, BlockTag::Level5or6);
    DimensionTable d(g, w1, 2);
    std::vector<std::int64_t> kappa{1, d.m(1) - 2, d.m(2) - 2 * d.m(1) + 1, d.s(1)};
    DecompositionSequence seq{g, BlockTag::Level5or6, nonnegative_sequence(kappa, g, "level5/6 sequence")};
    enforce_identities(seq, w1);
    return seq;
}

DecompositionSequence decomposition(const CongruenceGroup& g, BlockTag block, const Weight1Data& w1) {
    switch (block) {
    case BlockTag::OmegaPowers: return omega_decomposition(g, w1);
    case BlockTag::Level2: return level2_decomposition(g, w1);
    case BlockTag::Level3: return level3_decomposition(g, w1);
    case BlockTag::Level4: return level456_decomposition(g, 4, w1);
    case BlockTag::Level5or6: return level456_decomposition(g, 5, w1);
    }
    throw std::logic_error("unknown block");
}

TwistMultiset deconvolution_oracle(const CongruenceGroup& g, BlockTag block, const Weight1Data& w1) {
    const BaseBlock b{block};
    const std::int64_t max_shift = b.max_shift();
    const auto weights = b.weights();
    const std::int64_t through =
        weights ? default_verify_through(max_shift, *weights) : max_shift + kConvolutionCheckTop;
    const std::int64_t top = std::max(through, kConvolutionCheckTop);
    DimensionTable dims(g, w1, top);
    return deconvolve(HilbertFunction(dims.m_values()), b.hilbert(top), max_shift, through);
}

std::vector<CheckResult> block_identities(const DecompositionSequence& seq, const Weight1Data& w1) {
    std::vector<CheckResult> out;
    const auto& c = seq.mult;
    const auto& g = seq.group;
    auto eq = [&](const std::string& name, std::int64_t lhs, std::int64_t rhs) {
        out.push_back(make_check(name, lhs == rhs, std::to_string(lhs) + " vs " + std::to_string(rhs)));
    };
    switch (seq.block) {
    case BlockTag::OmegaPowers: {
        DimensionTable d(g, w1, 4);
        for (std::int64_t i = 1; i <= 4; ++i)
            eq("l_" + std::to_string(12 - i) + " = s_" + std::to_string(i), c.at(12 - i), d.s(i));
        eq("l_10 = genus", c.at(10), genus(g));
        break;
    }
    case BlockTag::Level3: {
        DimensionTable d(g, w1, 2);
        eq("k_5 = s_1", c.at(5), d.s(1));
        eq("k_4 = s_2 - s_1", c.at(4), d.s(2) - d.s(1));
        const auto a = c.at(0) + c.at(3), b = c.at(1) + c.at(4), e = c.at(2) + c.at(5);
        out.push_back(make_check("balance k0+k3 = k1+k4 = k2+k5", a == b && b == e,
                                 std::to_string(a) + "/" + std::to_string(b) + "/" + std::to_string(e)));
        break;
    }
    case BlockTag::Level2: {
        DimensionTable d(g, w1, 2);
        eq("k_7 = s_1", c.at(7), d.s(1));
        eq("k_6 = s_2", c.at(6), d.s(2));
        break;
    }
    case BlockTag::Level4: break;
    case BlockTag::Level5or6: {
        DimensionTable d(g, w1, 2);
        eq("kappa_0 = 1", c.at(0), 1);
        eq("kappa_1 = m_1 - 2", c.at(1), d.m(1) - 2);
        eq("kappa_2 = m_2 - 2m_1 + 1", c.at(2), d.m(2) - 2 * d.m(1) + 1);
        eq("kappa_3 = s_1", c.at(3), d.s(1));
        break;
    }
    }
    return out;
}

bool ConsistencyReport::passed() const {
    return first_failure() == nullptr;
}

const CheckResult* ConsistencyReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.passed)
            return &c;
    return nullptr;
}

ConsistencyReport verify_consistency(const DecompositionSequence& seq, const Weight1Data& w1) {
    ConsistencyReport report;
    const BaseBlock block{seq.block};
    const auto& g = seq.group;
    const std::string tag = g.str() + " " + block.name();

    // (a) convolution identity
    {
        DimensionTable dims(g, w1, kConvolutionCheckTop);
        const auto conv = convolve(seq.mult, block.hilbert(kConvolutionCheckTop), kConvolutionCheckTop);
        std::optional<std::int64_t> bad;
        for (std::int64_t k = 0; k <= kConvolutionCheckTop && !bad; ++k)
            if (conv.at(k) != dims.m(k))
                bad = k;
        report.checks.push_back(make_check(tag + ": convolution identity m_k = sum mult_i block_{k-i}", !bad,
                                           bad ? "fails at k = " + std::to_string(*bad) : "k <= 40"));
    }
    // (b) rank identity
    {
        const auto rank = seq.mult.total() * block.rank();
        report.checks.push_back(make_check(tag + ": rank identity", rank == index(g),
                                           std::to_string(rank) + " vs index " + std::to_string(index(g))));
    }
    // (c) coherence of the ω-images of all applicable closed forms
    try {
        const auto omega = omega_decomposition(g, w1).mult;
        const auto image = convolve(seq.mult, block.omega_sequence());
        report.checks.push_back(make_check(tag + ": omega image matches omega closed form", image == omega,
                                           join(image) + " vs " + join(omega)));
        for (BlockTag other : {BlockTag::Level2, BlockTag::Level3}) {
            if (other == seq.block || !block_supported(g, other))
                continue;
            const BaseBlock ob{other};
            const auto other_image = convolve(decomposition(g, other, w1).mult, ob.omega_sequence());
            report.checks.push_back(make_check(g.str() + " " + ob.name() + ": omega image matches omega closed form",
                                               other_image == omega, join(other_image) + " vs " + join(omega)));
        }
    } catch (const DecompositionInvalid& e) {
        report.checks.push_back(make_check(tag + ": cross-block coherence", false, e.what()));
    }
    // (d) block identities
    for (auto& c : block_identities(seq, w1)) {
        c.name = tag + ": " + c.name;
        report.checks.push_back(std::move(c));
    }
    return report;
}

ObstructionReport obstruction_search(std::int64_t q, std::int64_t prime_bound) {
    if (q <= 6)
        throw std::invalid_argument("obstruction search needs q > 6");
    ObstructionReport report;
    report.q = q;
    report.d_q = index(CongruenceGroup::gamma1(q));

    // Divisor of d_q as in the Dirichlet argument: a prime >= 5, else 16, else 9.
    std::int64_t rest = report.d_q;
    for (std::int64_t p = 5; p <= rest; ++p) {
        if (rest % p == 0 && is_prime(p)) {
            report.divisor = p;
            break;
        }
    }
    if (report.divisor == 0)
        report.divisor = report.d_q % 16 == 0 ? 16 : 9;
    switch (report.divisor) {
    case 16: report.residue = 3; break;
    case 9: report.residue = 2; break;
    default: report.residue = 2; break;
    }

    for (std::int64_t p = 2; p <= prime_bound; ++p) {
        if (!is_prime(p))
            continue;
        const std::int64_t d_p = p * p - 1;
        if (q % p != 0 && d_p % report.d_q != 0)
            report.primes.push_back(ObstructionWitness{p, d_p, false});
        if (p % report.divisor == report.residue) {
            report.residue_class_primes.push_back(p);
            if (d_p % report.divisor == 0)
                report.residue_class_consistent = false;
        }
    }
    return report;
}

TableFlavor parse_flavor(const std::string& name) {
    if (name == "omega")
        return TableFlavor::Omega;
    if (name == "level2")
        return TableFlavor::Level2;
    if (name == "level3")
        return TableFlavor::Level3;
    throw ParseError("unknown table flavor '" + name + "'");
}

std::string flavor_name(TableFlavor flavor) {
    switch (flavor) {
    case TableFlavor::Omega: return "omega";
    case TableFlavor::Level2: return "level2";
    case TableFlavor::Level3: return "level3";
    }
    return "?";
}

std::size_t flavor_width(TableFlavor flavor) {
    switch (flavor) {
    case TableFlavor::Omega: return 12;
    case TableFlavor::Level2: return 8;
    case TableFlavor::Level3: return 6;
    }
    return 0;
}

std::vector<TableRow> table_generate(std::int64_t from, std::int64_t to, TableFlavor flavor, const Weight1Data& w1) {
    std::vector<TableRow> rows;
    for (std::int64_t n = from; n <= to; ++n) {
        const auto g = CongruenceGroup::gamma1(n);
        DecompositionSequence seq = [&] {
            switch (flavor) {
            case TableFlavor::Omega: return omega_decomposition(g, w1);
            case TableFlavor::Level2: return level2_decomposition(g, w1);
            case TableFlavor::Level3: return level3_decomposition(g, w1);
            }
            throw std::logic_error("unknown flavor");
        }();
        rows.push_back(TableRow{n, genus(g), seq.mult.padded(flavor_width(flavor))});
    }
    return rows;
}

}  // namespace mfd

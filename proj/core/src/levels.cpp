#include "mfdecomp/levels.hpp"

#include <stdexcept>
#include <string>

#include "mfdecomp/errors.hpp"

namespace mfd {

namespace {

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
    std::vector<std::int64_t> ps;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0)
                n /= p;
        }
    }
    if (n > 1)
        ps.push_back(n);
    return ps;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

// Kronecker symbols (-1/p) and (-3/p) for primes p.
int legendre_minus1(std::int64_t p) {
    if (p == 2)
        return 0;
    return p % 4 == 1 ? 1 : -1;
}

int legendre_minus3(std::int64_t p) {
    if (p == 3)
        return 0;
    return p % 3 == 1 ? 1 : -1;
}

// Weights of the free polynomial ring of modular forms at the
// non-representable levels.
std::pair<std::int64_t, std::int64_t> small_level_weights(const CongruenceGroup& g) {
    if (g.kind() == GroupKind::Gamma1) {
        switch (g.level()) {
        case 2: return {2, 4};
        case 3: return {1, 3};
        case 4: return {1, 2};
        default: break;
        }
    }
    if (g.kind() == GroupKind::GammaFull && g.level() == 2)
        return {2, 2};
    throw std::logic_error("not a small level: " + g.str());
}

bool is_small_level(const CongruenceGroup& g) {
    return (g.kind() == GroupKind::Gamma1 && g.level() <= 4) ||
           (g.kind() == GroupKind::GammaFull && g.level() == 2);
}

bool contains_minus_one(const CongruenceGroup& g) {
    switch (g.kind()) {
    case GroupKind::Gamma0: return true;
    case GroupKind::Gamma1: return g.level() == 2;
    case GroupKind::GammaFull: return g.level() == 2;
    }
    return false;
}

std::int64_t count_monomials(std::int64_t a, std::int64_t b, std::int64_t k) {
    if (k < 0)
        return 0;
    std::int64_t count = 0;
    for (std::int64_t lambda = 0; lambda * a <= k; ++lambda)
        if ((k - lambda * a) % b == 0)
            ++count;
    return count;
}

std::int64_t omega_degree_int(const CongruenceGroup& g) {
    std::int64_t d = index(g);
    if (d % 24 != 0)
        throw std::logic_error("deg ω is not integral for " + g.str());
    return d / 24;
}

}  // namespace

std::int64_t euler_phi(std::int64_t n) {
    std::int64_t result = n;
    for (std::int64_t p : prime_divisors(n))
        result = result / p * (p - 1);
    return result;
}

bool is_prime(std::int64_t n) {
    if (n < 2)
        return false;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0)
            return false;
    return true;
}

std::int64_t index(const CongruenceGroup& g) {
    const std::int64_t n = g.level();
    const auto ps = prime_divisors(n);
    switch (g.kind()) {
    case GroupKind::Gamma0: {
        std::int64_t r = n;
        for (auto p : ps)
            r = r / p * (p + 1);
        return r;
    }
    case GroupKind::Gamma1: {
        std::int64_t r = n * n;
        for (auto p : ps)
            r = r / (p * p) * (p * p - 1);
        return r;
    }
    case GroupKind::GammaFull: {
        std::int64_t r = n * n * n;
        for (auto p : ps)
            r = r / (p * p) * (p * p - 1);
        return r;
    }
    }
    return 0;
}

std::int64_t gamma1_index_divisor_sum(std::int64_t n) {
    std::int64_t sum = 0;
    for (std::int64_t d = 1; d <= n; ++d)
        if (n % d == 0)
            sum += d * euler_phi(d) * euler_phi(n / d);
    return sum;
}

std::int64_t cusp_count(const CongruenceGroup& g) {
    const std::int64_t n = g.level();
    switch (g.kind()) {
    case GroupKind::Gamma0: {
        std::int64_t sum = 0;
        for (std::int64_t d = 1; d <= n; ++d)
            if (n % d == 0)
                sum += euler_phi(gcd(d, n / d));
        return sum;
    }
    case GroupKind::Gamma1: {
        if (n == 2 || n == 3)
            return 2;
        if (n == 4)
            return 3;
        std::int64_t sum = 0;
        for (std::int64_t d = 1; d <= n; ++d)
            if (n % d == 0)
                sum += euler_phi(d) * euler_phi(n / d);
        return sum / 2;
    }
    case GroupKind::GammaFull:
        if (n == 2)
            return 3;
        return index(g) / (2 * n);
    }
    return 0;
}

std::int64_t elliptic2_count(const CongruenceGroup& g) {
    const std::int64_t n = g.level();
    switch (g.kind()) {
    case GroupKind::Gamma0: {
        if (n % 4 == 0)
            return 0;
        std::int64_t r = 1;
        for (auto p : prime_divisors(n))
            r *= 1 + legendre_minus1(p);
        return r;
    }
    case GroupKind::Gamma1: return n == 2 ? 1 : 0;
    case GroupKind::GammaFull: return 0;
    }
    return 0;
}

std::int64_t elliptic3_count(const CongruenceGroup& g) {
    const std::int64_t n = g.level();
    switch (g.kind()) {
    case GroupKind::Gamma0: {
        if (n % 9 == 0)
            return 0;
        std::int64_t r = 1;
        for (auto p : prime_divisors(n))
            r *= 1 + legendre_minus3(p);
        return r;
    }
    case GroupKind::Gamma1: return n == 3 ? 1 : 0;
    case GroupKind::GammaFull: return 0;
    }
    return 0;
}

std::int64_t genus(const CongruenceGroup& g) {
    if (is_small_level(g))
        return 0;
    if (g.is_representable())
        return 1 + omega_degree_int(g) - cusp_count(g) / 2;
    // Γ0(n): μ = index is also the PSL2 index because -1 lies in Γ0(n).
    Rational gen = Rational(1) + Rational(index(g)) / Rational(12) -
                   Rational(elliptic2_count(g)) / Rational(4) -
                   Rational(elliptic3_count(g)) / Rational(3) - Rational(cusp_count(g)) / Rational(2);
    if (!gen.is_integer() || gen.sign() < 0)
        throw std::logic_error("non-integral genus for " + g.str());
    return gen.numerator().get_si();
}

LevelInvariants invariants(const CongruenceGroup& g) {
    LevelInvariants inv;
    inv.index = index(g);
    inv.omega_degree = Rational(inv.index) / Rational(24);
    inv.cusps = cusp_count(g);
    inv.elliptic2 = elliptic2_count(g);
    inv.elliptic3 = elliptic3_count(g);
    inv.genus = genus(g);
    return inv;
}

bool weight1_vanishes(const CongruenceGroup& g) {
    if (!g.is_representable())
        return true;
    return 2 * genus(g) - 2 - omega_degree_int(g) < 0;
}

std::int64_t weight1_cusp_dim(const CongruenceGroup& g, const Weight1Data& w1) {
    if (weight1_vanishes(g))
        return 0;
    if (auto entry = w1.lookup(g))
        return entry->s1;
    throw Weight1Unavailable("no weight-1 cusp form dimension available for " + g.str());
}

std::int64_t dim_modular_forms(const CongruenceGroup& g, std::int64_t k, const Weight1Data& w1) {
    if (k < 0)
        return 0;
    if (k == 0)
        return 1;
    if (is_small_level(g)) {
        auto [a, b] = small_level_weights(g);
        return count_monomials(a, b, k);
    }
    if (g.is_representable()) {
        if (k == 1)
            return cusp_count(g) / 2 + weight1_cusp_dim(g, w1);
        return omega_degree_int(g) * k + 1 - genus(g);
    }
    // Γ0(n)
    if (k % 2 != 0)
        return 0;
    return (k - 1) * (genus(g) - 1) + (k / 4) * elliptic2_count(g) + (k / 3) * elliptic3_count(g) +
           (k / 2) * cusp_count(g);
}

std::int64_t dim_cusp_forms(const CongruenceGroup& g, std::int64_t k, const Weight1Data& w1) {
    if (k <= 0)
        return 0;
    if (contains_minus_one(g) && k % 2 != 0)
        return 0;
    if (k == 1)
        return weight1_cusp_dim(g, w1);
    if (k == 2)
        return genus(g);
    const std::int64_t m = dim_modular_forms(g, k, w1);
    // Γ1(4) has one irregular cusp, which carries no odd-weight Eisenstein series.
    if (g.kind() == GroupKind::Gamma1 && g.level() == 4)
        return m - (k % 2 == 0 ? 3 : 2);
    return m - cusp_count(g);
}

DimensionTable::DimensionTable(const CongruenceGroup& g, const Weight1Data& w1, std::int64_t max_weight)
    : group_(g) {
    if (max_weight < 0)
        throw std::invalid_argument("max_weight must be nonnegative");
    m_.reserve(static_cast<std::size_t>(max_weight) + 1);
    s_.reserve(static_cast<std::size_t>(max_weight) + 1);
    for (std::int64_t k = 0; k <= max_weight; ++k) {
        m_.push_back(dim_modular_forms(g, k, w1));
        s_.push_back(dim_cusp_forms(g, k, w1));
    }
}

std::int64_t DimensionTable::m(std::int64_t k) const {
    if (k < 0)
        return 0;
    return m_.at(static_cast<std::size_t>(k));
}

std::int64_t DimensionTable::s(std::int64_t k) const {
    if (k < 0)
        return 0;
    return s_.at(static_cast<std::size_t>(k));
}

}  // namespace mfd

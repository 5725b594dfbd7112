#include <doctest.h>

#include <numeric>
#include <set>
#include <sstream>

#include "mfdecomp/errors.hpp"
#include "mfdecomp/group.hpp"
#include "mfdecomp/levels.hpp"
#include "mfdecomp/weight1.hpp"
#include "support.hpp"

using namespace mfd;

namespace {

using Vec = std::pair<std::int64_t, std::int64_t>;

std::int64_t mod(std::int64_t a, std::int64_t n) {
    return ((a % n) + n) % n;
}

std::vector<Vec> primitive_vectors(std::int64_t n) {
    std::vector<Vec> out;
    for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t c = 0; c < n; ++c)
            if (std::gcd(std::gcd(a, c), n) == 1)
                out.emplace_back(a, c);
    return out;
}

std::vector<std::int64_t> units(std::int64_t n) {
    std::vector<std::int64_t> u;
    for (std::int64_t x = 1; x < n; ++x)
        if (std::gcd(x, n) == 1)
            u.push_back(x);
    if (n == 1)
        u.push_back(0);
    return u;
}

std::int64_t inverse(std::int64_t x, std::int64_t n) {
    for (std::int64_t y = 1; y < n; ++y)
        if (mod(x * y, n) == 1)
            return y;
    return 0;
}

// Orbits of the images of the group mod n acting on columns (a, c) of SL2,
// together with -1: these are the cusps.
std::int64_t brute_cusps(GroupKind kind, std::int64_t n) {
    std::set<Vec> seen;
    std::int64_t orbits = 0;
    const auto u = units(n);
    for (const auto& v : primitive_vectors(n)) {
        if (seen.count(v))
            continue;
        ++orbits;
        std::vector<Vec> stack{v};
        seen.insert(v);
        while (!stack.empty()) {
            auto [a, c] = stack.back();
            stack.pop_back();
            std::vector<Vec> next{{mod(-a, n), mod(-c, n)}};
            if (kind != GroupKind::GammaFull)
                next.emplace_back(mod(a + c, n), c);
            if (kind == GroupKind::Gamma0)
                for (auto x : u)
                    next.emplace_back(mod(x * a, n), mod(inverse(x, n) * c, n));
            for (const auto& w : next)
                if (seen.insert(w).second)
                    stack.push_back(w);
        }
    }
    return orbits;
}

std::int64_t brute_sl2_order(std::int64_t n) {
    std::int64_t count = 0;
    for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b)
            for (std::int64_t c = 0; c < n; ++c)
                for (std::int64_t d = 0; d < n; ++d)
                    count += mod(a * d - b * c, n) == 1;
    return count;
}

std::int64_t brute_p1_size(std::int64_t n) {
    // Primitive vectors up to unit scaling.
    std::set<Vec> classes;
    for (const auto& [a, c] : primitive_vectors(n)) {
        Vec best{n, n};
        for (auto x : units(n))
            best = std::min(best, Vec{mod(x * a, n), mod(x * c, n)});
        classes.insert(best);
    }
    return static_cast<std::int64_t>(classes.size());
}

std::int64_t count_roots(std::int64_t n, std::int64_t lin) {
    std::int64_t r = 0;
    for (std::int64_t x = 0; x < n; ++x)
        r += mod(x * x + lin * x + 1, n) == 0;
    return r;
}

std::int64_t monomials(std::int64_t a, std::int64_t b, std::int64_t k) {
    std::int64_t r = 0;
    for (std::int64_t i = 0; i * a <= k; ++i)
        r += (k - i * a) % b == 0;
    return k < 0 ? 0 : r;
}

}  // namespace

TEST_CASE("group parsing") {
    CHECK(CongruenceGroup::parse("g1:23") == CongruenceGroup::gamma1(23));
    CHECK(CongruenceGroup::parse("g0:11") == CongruenceGroup::gamma0(11));
    CHECK(CongruenceGroup::parse("g:3") == CongruenceGroup::gamma(3));
    CHECK(CongruenceGroup::gamma1(23).str() == "g1:23");
    CHECK_THROWS_AS(CongruenceGroup::parse("g1:1"), InvalidGroup);
    CHECK_THROWS_AS(CongruenceGroup::parse("g2:5"), ParseError);
    CHECK_THROWS_AS(CongruenceGroup::parse("g1:"), ParseError);
    CHECK_THROWS_AS(CongruenceGroup::parse("g1:5x"), ParseError);
    CHECK(CongruenceGroup::gamma1(5).is_representable());
    CHECK_FALSE(CongruenceGroup::gamma1(4).is_representable());
    CHECK(CongruenceGroup::gamma(3).is_representable());
    CHECK_FALSE(CongruenceGroup::gamma0(11).is_representable());
}

TEST_CASE("index examples") {
    CHECK(index(CongruenceGroup::gamma1(5)) == 24);
    CHECK(index(CongruenceGroup::gamma1(6)) == 24);
    CHECK(index(CongruenceGroup::gamma1(9)) == 72);
    CHECK(index(CongruenceGroup::gamma(3)) == 24);
    CHECK(index(CongruenceGroup::gamma0(11)) == 12);
}

TEST_CASE("index against enumeration") {
    CHECK(brute_sl2_order(3) == 24);
    for (std::int64_t n = 2; n <= 8; ++n)
        CHECK(index(CongruenceGroup::gamma(n)) == brute_sl2_order(n));
    for (std::int64_t n = 2; n <= 60; ++n) {
        CHECK(index(CongruenceGroup::gamma1(n)) == static_cast<std::int64_t>(primitive_vectors(n).size()));
        CHECK(index(CongruenceGroup::gamma0(n)) == brute_p1_size(n));
    }
}

TEST_CASE("divisor-sum form of the index, n <= 500") {
    for (std::int64_t n = 2; n <= 500; ++n)
        CHECK(gamma1_index_divisor_sum(n) == index(CongruenceGroup::gamma1(n)));
}

TEST_CASE("cusp counts") {
    CHECK(cusp_count(CongruenceGroup::gamma1(23)) == 22);
    CHECK(cusp_count(CongruenceGroup::gamma(3)) == 4);
    CHECK(cusp_count(CongruenceGroup::gamma1(5)) == 4);
    for (std::int64_t n = 2; n <= 40; ++n) {
        CAPTURE(n);
        CHECK(cusp_count(CongruenceGroup::gamma1(n)) == brute_cusps(GroupKind::Gamma1, n));
        CHECK(cusp_count(CongruenceGroup::gamma0(n)) == brute_cusps(GroupKind::Gamma0, n));
        if (n <= 20)
            CHECK(cusp_count(CongruenceGroup::gamma(n)) == brute_cusps(GroupKind::GammaFull, n));
    }
}

TEST_CASE("elliptic points of Gamma0 against root counts") {
    for (std::int64_t n = 2; n <= 200; ++n) {
        CAPTURE(n);
        CHECK(elliptic2_count(CongruenceGroup::gamma0(n)) == count_roots(n, 0));
        CHECK(elliptic3_count(CongruenceGroup::gamma0(n)) == count_roots(n, 1));
    }
    CHECK(elliptic2_count(CongruenceGroup::gamma1(7)) == 0);
    CHECK(elliptic3_count(CongruenceGroup::gamma(5)) == 0);
}

TEST_CASE("genus") {
    CHECK(genus(CongruenceGroup::gamma1(11)) == 1);
    CHECK(genus(CongruenceGroup::gamma1(23)) == 12);
    CHECK(genus(CongruenceGroup::gamma1(5)) == 0);
    CHECK(genus(CongruenceGroup::gamma0(11)) == 1);
    CHECK(genus(CongruenceGroup::gamma0(23)) == 2);
    CHECK(genus(CongruenceGroup::gamma0(37)) == 2);
    CHECK(genus(CongruenceGroup::gamma0(2)) == 0);
    CHECK(genus(CongruenceGroup::gamma(7)) == 3);
    CHECK(genus(CongruenceGroup::gamma(6)) == 1);
    CHECK(genus(CongruenceGroup::gamma(2)) == 0);
}

TEST_CASE("genus matches the reference omega table") {
    for (const auto& row : testing::golden_rows("omega_2_42.tsv")) {
        CAPTURE(row[0]);
        CHECK(genus(CongruenceGroup::gamma1(row[0])) == row[1]);
    }
}

TEST_CASE("omega degree and the genus formula") {
    for (std::int64_t n = 5; n <= 100; ++n) {
        const auto inv = invariants(CongruenceGroup::gamma1(n));
        CHECK(inv.omega_degree == Rational(Integer(static_cast<long>(inv.index)), Integer(24)));
        CHECK(2 * inv.genus == 2 + inv.index / 12 - inv.cusps);
        CHECK(inv.elliptic2 == 0);
        CHECK(inv.elliptic3 == 0);
    }
}

TEST_CASE("dimension examples") {
    const auto w1 = Weight1Data::builtin();
    CHECK(dim_modular_forms(CongruenceGroup::gamma1(23), 3, w1) == 55);
    CHECK(dim_modular_forms(CongruenceGroup::gamma1(5), 1, w1) == 2);
    CHECK(dim_modular_forms(CongruenceGroup::gamma1(7), -3, w1) == 0);
    CHECK(dim_cusp_forms(CongruenceGroup::gamma1(23), 2, w1) == 12);
    CHECK(dim_cusp_forms(CongruenceGroup::gamma1(23), 3, w1) == 33);
    CHECK(dim_cusp_forms(CongruenceGroup::gamma1(23), 1, w1) == 1);
    CHECK(dim_modular_forms(CongruenceGroup::gamma0(11), 2, w1) == 2);
    CHECK(dim_cusp_forms(CongruenceGroup::gamma0(11), 2, w1) == 1);
    CHECK(dim_cusp_forms(CongruenceGroup::gamma0(11), 12, w1) == 10);
}

TEST_CASE("weight one availability") {
    const auto empty = Weight1Data::empty();
    CHECK(dim_modular_forms(CongruenceGroup::gamma1(22), 1, empty) == 10);
    CHECK_THROWS_AS(dim_modular_forms(CongruenceGroup::gamma1(23), 1, empty), Weight1Unavailable);
    CHECK_THROWS_AS(dim_modular_forms(CongruenceGroup::gamma1(43), 1, Weight1Data::builtin()), Weight1Unavailable);
    CHECK(weight1_vanishes(CongruenceGroup::gamma1(22)));
    CHECK_FALSE(weight1_vanishes(CongruenceGroup::gamma1(23)));
    CHECK(dim_modular_forms(CongruenceGroup::gamma0(43), 1, empty) == 0);
}

TEST_CASE("builtin weight one table") {
    const auto w1 = Weight1Data::builtin();
    for (std::int64_t n = 2; n <= 42; ++n) {
        const auto e = w1.lookup(CongruenceGroup::gamma1(n));
        REQUIRE(e.has_value());
        CHECK(e->s1 == ((n == 23 || n == 31 || n == 39) ? 1 : 0));
        CHECK(e->provenance == Provenance::Builtin);
    }
}

TEST_CASE("weight one override parsing") {
    auto w1 = Weight1Data::builtin();
    std::istringstream in("# comment\ng1 43 0\n\nGamma1 74 3  # trailing\n");
    w1.merge_override(in);
    CHECK(w1.lookup(CongruenceGroup::gamma1(43))->s1 == 0);
    CHECK(w1.lookup(CongruenceGroup::gamma1(74))->provenance == Provenance::Override);
    std::istringstream bad("g1 43 0\ng1 x 1\n");
    try {
        w1.merge_override(bad);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    std::istringstream negative("g1 50 -1\n");
    CHECK_THROWS_AS(w1.merge_override(negative), ParseError);
    CHECK_THROWS_AS(w1.merge_override_file("/nonexistent/weight1.txt"), ParseError);
}

TEST_CASE("Riemann-Roch against the cusp-count form for representable groups") {
    const auto w1 = Weight1Data::builtin();
    for (std::int64_t n = 5; n <= 42; ++n) {
        for (const auto& g : {CongruenceGroup::gamma1(n), CongruenceGroup::gamma(n)}) {
            if (g.kind() == GroupKind::GammaFull && n > 12)
                continue;
            const auto gen = genus(g), cusps = cusp_count(g);
            for (std::int64_t k = 2; k <= 30; ++k) {
                CAPTURE(g.str());
                CAPTURE(k);
                CHECK(2 * dim_modular_forms(g, k, w1) == 2 * (k - 1) * (gen - 1) + k * cusps);
                if (k >= 3)
                    CHECK(2 * dim_cusp_forms(g, k, w1) == 2 * (k - 1) * (gen - 1) + (k - 2) * cusps);
            }
        }
    }
}

TEST_CASE("small levels count monomials") {
    const auto w1 = Weight1Data::builtin();
    for (std::int64_t k = 0; k <= 40; ++k) {
        CHECK(dim_modular_forms(CongruenceGroup::gamma1(2), k, w1) == monomials(2, 4, k));
        CHECK(dim_modular_forms(CongruenceGroup::gamma1(3), k, w1) == monomials(1, 3, k));
        CHECK(dim_modular_forms(CongruenceGroup::gamma1(4), k, w1) == monomials(1, 2, k));
        CHECK(dim_modular_forms(CongruenceGroup::gamma(2), k, w1) == monomials(2, 2, k));
    }
}

TEST_CASE("Gamma0 dimensions at small level") {
    const auto w1 = Weight1Data::empty();
    for (std::int64_t k = 0; k <= 40; ++k) {
        CAPTURE(k);
        const bool even = k % 2 == 0;
        CHECK(dim_modular_forms(CongruenceGroup::gamma0(2), k, w1) == (even ? 1 + k / 4 : 0));
        CHECK(dim_modular_forms(CongruenceGroup::gamma0(3), k, w1) == (even ? 1 + k / 3 : 0));
        CHECK(dim_modular_forms(CongruenceGroup::gamma0(4), k, w1) == (even ? k / 2 + 1 : 0));
    }
}

TEST_CASE("dimension table invariants") {
    const auto w1 = Weight1Data::builtin();
    std::vector<CongruenceGroup> groups;
    for (std::int64_t n = 2; n <= 42; ++n)
        groups.push_back(CongruenceGroup::gamma1(n));
    for (std::int64_t n = 2; n <= 10; ++n)
        groups.push_back(CongruenceGroup::gamma(n));
    for (const auto& g : groups) {
        CAPTURE(g.str());
        const DimensionTable d(g, w1, 40);
        CHECK(d.m(0) == 1);
        CHECK(d.s(0) == 0);
        CHECK(d.m(-1) == 0);
        CHECK_THROWS_AS(d.m(41), std::out_of_range);
        CHECK(d.m(2) >= 2 * d.m(1) - 1);
        if (d.m(1) > 0)
            for (std::int64_t k = 1; k <= 40; ++k) {
                CHECK(d.m(k) >= d.m(k - 1));
                CHECK(d.s(k) >= d.s(k - 1));
            }
        if (g.is_representable()) {
            CHECK(d.m(1) >= 2);
            for (std::int64_t k = 4; k <= 40; ++k)
                CHECK(d.m(k) - d.m(k - 1) == d.m(3) - d.m(2));
            CHECK(d.s(2) == genus(g));
        }
    }
}

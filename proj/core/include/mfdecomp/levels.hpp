#ifndef MFDECOMP_LEVELS_HPP
#define MFDECOMP_LEVELS_HPP

#include <cstdint>
#include <vector>

#include "mfdecomp/group.hpp"
#include "mfdecomp/rational.hpp"
#include "mfdecomp/weight1.hpp"

namespace mfd {

struct LevelInvariants {
    std::int64_t index = 0;
    Rational omega_degree;
    std::int64_t cusps = 0;
    std::int64_t elliptic2 = 0;
    std::int64_t elliptic3 = 0;
    std::int64_t genus = 0;
};

/// Euler's totient, by trial division.
std::int64_t euler_phi(std::int64_t n);
bool is_prime(std::int64_t n);

/// [SL2(Z) : Γ] counted in SL2, i.e. the degree of the map of moduli stacks.
std::int64_t index(const CongruenceGroup& g);
/// Σ_{d|n} d·φ(d)·φ(n/d); agrees with index(Γ1(n)).
std::int64_t gamma1_index_divisor_sum(std::int64_t n);
std::int64_t cusp_count(const CongruenceGroup& g);
std::int64_t elliptic2_count(const CongruenceGroup& g);
std::int64_t elliptic3_count(const CongruenceGroup& g);
std::int64_t genus(const CongruenceGroup& g);
LevelInvariants invariants(const CongruenceGroup& g);

/// s1, taken as 0 when 2g - 2 - deg(ω) < 0 and otherwise looked up in w1.
/// Throws Weight1Unavailable if neither applies.
std::int64_t weight1_cusp_dim(const CongruenceGroup& g, const Weight1Data& w1);
/// True when the degree argument alone forces s1 = 0 (representable groups
/// only; the small levels and Γ0 never need the table).
bool weight1_vanishes(const CongruenceGroup& g);

std::int64_t dim_modular_forms(const CongruenceGroup& g, std::int64_t k, const Weight1Data& w1);
std::int64_t dim_cusp_forms(const CongruenceGroup& g, std::int64_t k, const Weight1Data& w1);

/// m_k and s_k for 0 <= k <= max_weight.
class DimensionTable {
  public:
    DimensionTable(const CongruenceGroup& g, const Weight1Data& w1, std::int64_t max_weight);

    const CongruenceGroup& group() const { return group_; }
    std::int64_t max_weight() const { return static_cast<std::int64_t>(m_.size()) - 1; }
    /// 0 for negative weights; throws std::out_of_range above max_weight.
    std::int64_t m(std::int64_t k) const;
    std::int64_t s(std::int64_t k) const;
    const std::vector<std::int64_t>& m_values() const { return m_; }

  private:
    CongruenceGroup group_;
    std::vector<std::int64_t> m_;
    std::vector<std::int64_t> s_;
};

}  // namespace mfd

#endif

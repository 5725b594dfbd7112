#ifndef MFDECOMP_GROUP_HPP
#define MFDECOMP_GROUP_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace mfd {

enum class GroupKind { Gamma0, Gamma1, GammaFull };

/// One of Γ0(n), Γ1(n), Γ(n) inside SL2(Z).
class CongruenceGroup {
  public:
    /// Throws InvalidGroup unless level >= 2.
    CongruenceGroup(GroupKind kind, std::int64_t level);

    static CongruenceGroup gamma0(std::int64_t n) { return {GroupKind::Gamma0, n}; }
    static CongruenceGroup gamma1(std::int64_t n) { return {GroupKind::Gamma1, n}; }
    static CongruenceGroup gamma(std::int64_t n) { return {GroupKind::GammaFull, n}; }

    /// Parses `g0:N`, `g1:N` or `g:N`. Throws ParseError or InvalidGroup.
    static CongruenceGroup parse(std::string_view spec);

    GroupKind kind() const { return kind_; }
    std::int64_t level() const { return level_; }

    /// Γ1(n >= 5) and Γ(n >= 3): the compactified moduli problem is a scheme.
    bool is_representable() const;

    std::string str() const;

    friend auto operator<=>(const CongruenceGroup&, const CongruenceGroup&) = default;

  private:
    GroupKind kind_;
    std::int64_t level_;
};

std::string kind_token(GroupKind kind);

}  // namespace mfd

#endif

#include "mfdecomp/group.hpp"

#include <charconv>

#include "mfdecomp/errors.hpp"

namespace mfd {

CongruenceGroup::CongruenceGroup(GroupKind kind, std::int64_t level) : kind_(kind), level_(level) {
    if (level < 2)
        throw InvalidGroup("congruence subgroup level must be >= 2, got " + std::to_string(level));
}

CongruenceGroup CongruenceGroup::parse(std::string_view spec) {
    auto colon = spec.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("group spec must look like g0:N, g1:N or g:N");
    auto head = spec.substr(0, colon);
    auto tail = spec.substr(colon + 1);
    GroupKind kind;
    if (head == "g0")
        kind = GroupKind::Gamma0;
    else if (head == "g1")
        kind = GroupKind::Gamma1;
    else if (head == "g")
        kind = GroupKind::GammaFull;
    else
        throw ParseError("unknown group kind '" + std::string(head) + "'");
    std::int64_t level = 0;
    auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), level);
    if (ec != std::errc() || ptr != tail.data() + tail.size() || tail.empty())
        throw ParseError("bad level in group spec '" + std::string(spec) + "'");
    return {kind, level};
}

bool CongruenceGroup::is_representable() const {
    switch (kind_) {
    case GroupKind::Gamma1: return level_ >= 5;
    case GroupKind::GammaFull: return level_ >= 3;
    case GroupKind::Gamma0: return false;
    }
    return false;
}

std::string kind_token(GroupKind kind) {
    switch (kind) {
    case GroupKind::Gamma0: return "g0";
    case GroupKind::Gamma1: return "g1";
    case GroupKind::GammaFull: return "g";
    }
    return "?";
}

std::string CongruenceGroup::str() const {
    return kind_token(kind_) + ":" + std::to_string(level_);
}

}  // namespace mfd

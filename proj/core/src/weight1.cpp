#include "mfdecomp/weight1.hpp"

#include <fstream>
#include <sstream>

#include "mfdecomp/errors.hpp"

namespace mfd {

Weight1Data Weight1Data::builtin() {
    Weight1Data data;
    for (std::int64_t n = 2; n <= 42; ++n) {
        const std::int64_t s1 = (n == 23 || n == 31 || n == 39) ? 1 : 0;
        data.set(CongruenceGroup::gamma1(n), s1, Provenance::Builtin);
    }
    return data;
}

void Weight1Data::set(const CongruenceGroup& g, std::int64_t s1, Provenance provenance) {
    table_[{g.kind(), g.level()}] = Weight1Entry{s1, provenance};
}

std::optional<Weight1Entry> Weight1Data::lookup(const CongruenceGroup& g) const {
    auto it = table_.find({g.kind(), g.level()});
    if (it == table_.end())
        return std::nullopt;
    return it->second;
}

namespace {

GroupKind parse_kind(const std::string& token, int line_no) {
    if (token == "g0" || token == "Gamma0")
        return GroupKind::Gamma0;
    if (token == "g1" || token == "Gamma1")
        return GroupKind::Gamma1;
    if (token == "g" || token == "Gamma" || token == "GammaFull")
        return GroupKind::GammaFull;
    throw ParseError("weight-1 override line " + std::to_string(line_no) + ": unknown kind '" + token + "'");
}

}  // namespace

void Weight1Data::merge_override(std::istream& in) {
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string kind;
        if (!(fields >> kind))
            continue;
        long long level = 0, s1 = 0;
        std::string extra;
        if (!(fields >> level >> s1) || (fields >> extra))
            throw ParseError("weight-1 override line " + std::to_string(line_no) +
                             ": expected `kind level s1`");
        if (s1 < 0)
            throw ParseError("weight-1 override line " + std::to_string(line_no) + ": negative s1");
        try {
            set(CongruenceGroup(parse_kind(kind, line_no), level), s1, Provenance::Override);
        } catch (const InvalidGroup& e) {
            throw ParseError("weight-1 override line " + std::to_string(line_no) + ": " + e.what());
        }
    }
}

void Weight1Data::merge_override_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open weight-1 override file '" + path + "'");
    merge_override(in);
}

}  // namespace mfd

#ifndef MFDECOMP_WEIGHT1_HPP
#define MFDECOMP_WEIGHT1_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "mfdecomp/group.hpp"

namespace mfd {

enum class Provenance { Builtin, Override };

struct Weight1Entry {
    std::int64_t s1 = 0;
    Provenance provenance = Provenance::Builtin;
};

/// Curated dimensions of weight-1 cusp forms, keyed by group.
///
/// The built-in table covers Γ1(n) for 2 <= n <= 42 (s1 = 1 exactly for
/// n = 23, 31, 39). Override files extend or replace entries; their format
/// is one `kind level s1` record per line with kind one of g0, g1, g
/// (Gamma0/Gamma1/Gamma also accepted), `#` starting a comment.
class Weight1Data {
  public:
    static Weight1Data builtin();
    static Weight1Data empty() { return Weight1Data{}; }

    /// Parses override records and merges them over the current table.
    /// Throws ParseError with the offending line number.
    void merge_override(std::istream& in);
    void merge_override_file(const std::string& path);

    void set(const CongruenceGroup& g, std::int64_t s1, Provenance provenance);
    std::optional<Weight1Entry> lookup(const CongruenceGroup& g) const;

    const std::map<std::pair<GroupKind, std::int64_t>, Weight1Entry>& entries() const { return table_; }

  private:
    std::map<std::pair<GroupKind, std::int64_t>, Weight1Entry> table_;
};

}  // namespace mfd

#endif

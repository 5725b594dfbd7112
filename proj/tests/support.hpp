#ifndef MFDECOMP_TESTS_SUPPORT_HPP
#define MFDECOMP_TESTS_SUPPORT_HPP

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mfdecomp/rational.hpp"

namespace testing {

/// Seeded generator shared by the property tests.
class Gen {
  public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    bool coin() { return integer(0, 1) == 1; }

    mfd::Rational rational(std::int64_t num_bound = 50, std::int64_t den_bound = 20) {
        return mfd::Rational(mfd::Integer(static_cast<long>(integer(-num_bound, num_bound))),
                             mfd::Integer(static_cast<long>(integer(1, den_bound))));
    }

    mfd::Rational nonzero_rational(std::int64_t num_bound = 50, std::int64_t den_bound = 20) {
        for (;;) {
            auto r = rational(num_bound, den_bound);
            if (!r.is_zero())
                return r;
        }
    }

    std::vector<std::int64_t> nonnegative_list(std::size_t len, std::int64_t hi) {
        std::vector<std::int64_t> v(len);
        for (auto& x : v)
            x = integer(0, hi);
        return v;
    }

  private:
    std::mt19937_64 rng_;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline std::string golden_path(const std::string& name) {
    return std::string(MFDECOMP_GOLDEN_DIR) + "/" + name;
}

/// Rows of a golden TSV file as integers, header skipped.
inline std::vector<std::vector<std::int64_t>> golden_rows(const std::string& name) {
    std::istringstream in(read_file(golden_path(name)));
    std::string line;
    std::getline(in, line);
    std::vector<std::vector<std::int64_t>> rows;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::int64_t> row;
        std::int64_t x;
        while (ls >> x)
            row.push_back(x);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace testing

#endif

#ifndef MFDECOMP_TOOLS_GOLDEN_DATA_HPP
#define MFDECOMP_TOOLS_GOLDEN_DATA_HPP

#include <string_view>

namespace mfd::cli {

/// Reference decomposition tables, compiled in from data/golden.
std::string_view golden_omega();   // omega flavor, n = 2..42
std::string_view golden_level2();  // level2 flavor, n = 4..23
std::string_view golden_level3();  // level3 flavor, n = 5..23

}  // namespace mfd::cli

#endif

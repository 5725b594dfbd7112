#ifndef MFDECOMP_POLY_PARSER_HPP
#define MFDECOMP_POLY_PARSER_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mfdecomp/polynomial.hpp"
#include "mfdecomp/ringalg.hpp"

namespace mfd {

/// Parses an expression such as "(b2^2*b4^2 - 32*b4^3)/4" over the named
/// variables. Supports + - * / ^, parentheses and integer literals; division
/// is only by nonzero constants. Throws ParseError.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names);

/// Reads a free-basis problem:
///
///     field F2
///     var a1 1
///     var a3 3
///     gen c4 = a1
///     gen delta = a3^4 + a1^3*a3^3
///     basis 1
///     basis a3
///     bound 40
///
/// '#' starts a comment. Without a bound line the default bound applies.
/// Throws ParseError with the offending line number.
FreeBasisProblem parse_free_basis_problem(std::istream& in, const std::string& name = "file");
FreeBasisProblem parse_free_basis_file(const std::string& path);

}  // namespace mfd

#endif

#ifndef AFFVCS_SCALAR_HPP
#define AFFVCS_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace affvcs {

/// Exact rational. mpq_class keeps values canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Scalar = mpq_class;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on bad syntax or a
/// zero denominator.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& s);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

}  // namespace affvcs

#endif

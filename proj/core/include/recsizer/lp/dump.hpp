#pragma once

#include <iosfwd>
#include <string>

#include "recsizer/lp/problem.hpp"

namespace recsizer::lp {

/// Plain-text dump for fixture replay. Layout:
///   recsizer-lp 1
///   rows <m> cols <n>
///   c <n values>
///   row {<=|=|>=} <rhs> <n coefficients>   (m lines)
///   bounds
///   <lower> <upper>                        (n lines, "inf"/"-inf" allowed)
///   end
void dump_lp(const LinearProgram& lp, std::ostream& out);
std::string dump_lp(const LinearProgram& lp);

LinearProgram parse_lp(std::istream& in);
LinearProgram parse_lp_text(const std::string& text);

} // namespace recsizer::lp

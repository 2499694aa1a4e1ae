#pragma once

#include <string_view>

#include "sobolev/sequence.hpp"

namespace sobolev::cli {

/// Vector literals:
///
///   e<j>                          unit vector
///   fin:<j>=<re>[+<im>i][,...]    finite support, `fin:` alone is zero
///   pow:c=<z>,s=<real>            c j^s
///   geom:c=<z>,r=<real>           c r^j
///
/// where <z> is <re>, <re>+<im>i or <re>-<im>i. Throws ConfigurationError.
CoefficientSequence parse_vector_literal(std::string_view text);

} // namespace sobolev::cli

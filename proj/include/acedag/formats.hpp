#pragma once

#include <string>
#include <string_view>

#include "acedag/evaluator.hpp"

namespace acedag {

/// Particle configuration file:
///
///   # group=<T|SO2|O3|O3F>
///   <coord> <coord> ...      one particle per line
///
/// Other lines starting with '#' and blank lines are ignored.
ParticleConfig parse_config(std::string_view text);
std::string format_config(const ParticleConfig& config);

/// Coefficient file: `<tuple> <re> <im>` per line, tuple in the graph
/// format's comma syntax. '#' lines and blank lines are ignored.
CoefficientVector parse_coefficients(std::string_view text, Group g);
std::string format_coefficients(const CoefficientVector& coeffs, Group g);

}  // namespace acedag

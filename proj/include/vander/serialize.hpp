#ifndef VANDER_SERIALIZE_HPP
#define VANDER_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "vander/analysis.hpp"
#include "vander/matrix.hpp"
#include "vander/polynomial.hpp"
#include "vander/samples.hpp"

namespace vander {

// JSON conventions used across the library: every scalar value is a string
// ("p/q" on the exact backend, shortest round-trip decimal on floats) so
// nothing is lost to double parsing; counts, levels and degrees are plain
// JSON integers. nlohmann orders object keys, which makes the output
// byte-stable across runs.
using json = nlohmann::json;

json to_json(const Scalar& s);
json to_json(const SquareMatrix& m);      // {"order", "backend", "rows"}
json to_json(const Polynomial& p);        // {"degree", "backend", "coefficients", "display"}
json to_json(const SampleSet& samples);   // {"backend", "x", "y"}
json to_json(const ConvergenceReport& report);
json to_json(const TaylorComparison& cmp);

std::string to_csv(const ConvergenceReport& report);
std::string to_csv(const TaylorComparison& cmp);

}  // namespace vander

#endif

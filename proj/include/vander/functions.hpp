#ifndef VANDER_FUNCTIONS_HPP
#define VANDER_FUNCTIONS_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "vander/polynomial.hpp"
#include "vander/scalar.hpp"

namespace vander {

// A sampleable scalar function. Handles accept input on either backend; ones
// built from exact operations (abs, rational polynomials, Runge) preserve the
// exact backend, transcendental ones always return floats.
using ScalarFn = std::function<Scalar(const Scalar&)>;

ScalarFn abs_fn();    // |x|, backend-preserving
ScalarFn runge_fn();  // 1/(1 + 25x^2), backend-preserving
ScalarFn sin_fn();    // sin(x), float result
ScalarFn log1p_fn();  // ln(1+x), float result, throws for x <= -1
ScalarFn poly_fn(Polynomial p);  // evaluation in the input's backend

// Wraps f so every call goes through to_double first; the resulting handle
// always samples on the float backend.
ScalarFn force_float(ScalarFn f);

// Functions addressable from the CLI, all parameterised over [0,1] (the
// convergence-study domain). "poly:<c_n,...,c_0>" with descending rational
// coefficients is also accepted by lookup_function.
struct NamedFunction {
    std::string id;
    std::string description;
    bool exact_capable;  // can run a study on the exact backend
    ScalarFn fn;
};

NamedFunction lookup_function(std::string_view id);  // throws InvalidArgument
std::vector<NamedFunction> function_registry();      // the fixed (non-poly) entries

}  // namespace vander

#endif

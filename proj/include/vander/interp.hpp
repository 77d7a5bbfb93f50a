#ifndef VANDER_INTERP_HPP
#define VANDER_INTERP_HPP

#include "vander/functions.hpp"
#include "vander/matrix.hpp"
#include "vander/polynomial.hpp"
#include "vander/samples.hpp"

namespace vander {

// The unique polynomial of degree <= n-1 through n samples, found by solving
// the descending-power Vandermonde system. Exact on the exact backend;
// partial pivoting on floats. Coefficients come back highest power first.
Polynomial fit(const SampleSet& samples);

// max_i |P(x_i) - y_i| over the sample nodes, as a double. Exactly 0.0 for an
// exact-backend fit; for floats this is the reportable residual check.
double node_residual(const Polynomial& p, const SampleSet& samples);

// Fits the same function on `trials` overlapping uniform node sets of size
// degree+1 inside [a,b] and compares the coefficient vectors. Agreement
// across node sets is evidence that f is a polynomial of the probed degree;
// disagreement means the degree is wrong (or f is not a polynomial). Node
// set t is { a + (t+1+j)*step : j = 0..degree } with
// step = (b-a)/(degree+trials), so consecutive sets overlap in all but one node.
struct DegreeProbe {
    bool consistent;
    std::vector<NodeVector> node_sets;
    std::vector<Polynomial> fits;
};

DegreeProbe degree_probe(const ScalarFn& f, const Scalar& a, const Scalar& b,
                         std::size_t degree, std::size_t trials);

}  // namespace vander

#endif

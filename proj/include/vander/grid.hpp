#ifndef VANDER_GRID_HPP
#define VANDER_GRID_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "vander/functions.hpp"
#include "vander/matrix.hpp"
#include "vander/samples.hpp"

namespace vander {

// n+1 equally spaced nodes from a to b inclusive. Endpoints are exact by
// construction on both backends; on floats the interior is computed from the
// nearer endpoint so symmetric intervals give negation-symmetric grids.
NodeVector uniform_partition(const Scalar& a, const Scalar& b, std::size_t segments);

// Level-k dyadic refinement of the unit interval: nodes j / (2^k * base),
// always exact. node_count is the segment count N_k; nodes() holds N_k + 1
// rationals. Grids nest: every level-k node appears at level k+1.
struct DyadicPartition {
    std::size_t base_count;  // N_0
    std::size_t level;       // k
    std::size_t node_count;  // N_k = 2^k * N_0
    NodeVector nodes;
};

DyadicPartition dyadic(std::size_t base_count, std::size_t level);

// Affine bijection between [a,b] and the unit interval.
struct DomainMap {
    DomainMap(Scalar a, Scalar b);
    Scalar a, b;
};

// g(y) = f(a + y*(b-a)): pulls a function on [a,b] back to [0,1].
ScalarFn to_unit(const DomainMap& m, ScalarFn f);
// f(x) = g((x-a)/(b-a)): pushes a function on [0,1] out to [a,b].
ScalarFn from_unit(const DomainMap& m, ScalarFn g);

// Evaluates f at every node. If f produces float values on exact nodes the
// whole sample set is converted to the float backend (nodes via to_float);
// float nodes with exact values are rejected. Evaluation failures are
// rethrown with the node index and position attached.
SampleSet sample(const ScalarFn& f, const NodeVector& nodes);

// Named node sets used by the worked examples (ex2.6-nodes, ex2.7-n6,
// pi-partition-4, ln-partition-8, ...).
NodeVector fixture_nodes(std::string_view id);
std::vector<std::string> fixture_ids();

}  // namespace vander

#endif

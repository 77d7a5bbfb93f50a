#ifndef VANDER_SAMPLES_HPP
#define VANDER_SAMPLES_HPP

#include <iosfwd>
#include <vector>

#include "vander/matrix.hpp"

namespace vander {

// Interpolation data: strictly increasing nodes plus one value per node,
// everything on a single backend.
class SampleSet {
public:
    SampleSet(NodeVector nodes, std::vector<Scalar> values);

    std::size_t size() const { return nodes_.size(); }
    Backend backend() const { return nodes_.backend(); }
    const NodeVector& nodes() const { return nodes_; }
    const std::vector<Scalar>& values() const { return values_; }

private:
    NodeVector nodes_;
    std::vector<Scalar> values_;
};

// CSV exchange format: header line "x,y", one "x,y" record per node, scalars
// rendered with Scalar::str (so "p/q" on the exact backend, shortest
// round-trip decimals on the float backend).
SampleSet read_samples_csv(std::istream& in, Backend backend);
void write_samples_csv(std::ostream& out, const SampleSet& samples);

}  // namespace vander

#endif

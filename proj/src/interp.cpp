#include "vander/interp.hpp"

#include <cmath>

#include "vander/errors.hpp"
#include "vander/grid.hpp"
#include "vander/vandermonde.hpp"

namespace vander {

Polynomial fit(const SampleSet& samples) {
    return Polynomial(solve(build_descending(samples.nodes()), samples.values()));
}

double node_residual(const Polynomial& p, const SampleSet& samples) {
    if (p.backend() != samples.backend())
        throw BackendMismatch("polynomial and samples are on different backends");
    double worst = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        Scalar diff = (p(samples.nodes()[i]) - samples.values()[i]).abs();
        worst = std::max(worst, diff.to_double());
    }
    return worst;
}

namespace {

// Coefficient vectors agree: exactly on the exact backend, within a relative
// 1e-9 of the largest magnitude on floats.
bool coefficients_agree(const Polynomial& p, const Polynomial& q) {
    if (p.backend() != q.backend() || p.degree() != q.degree()) return false;
    if (p.backend() == Backend::exact) return p.descending() == q.descending();

    double scale = 0.0;
    for (const Scalar& c : p.descending()) scale = std::max(scale, std::fabs(c.flt()));
    for (const Scalar& c : q.descending()) scale = std::max(scale, std::fabs(c.flt()));
    const double tol = 1e-9 * std::max(scale, 1.0);
    for (std::size_t i = 0; i <= p.degree(); ++i)
        if (std::fabs(p.descending()[i].flt() - q.descending()[i].flt()) > tol)
            return false;
    return true;
}

}  // namespace

DegreeProbe degree_probe(const ScalarFn& f, const Scalar& a, const Scalar& b,
                         std::size_t degree, std::size_t trials) {
    if (trials < 2)
        throw InvalidArgument("degree probe needs at least two trial node sets");
    if (a.backend() != b.backend())
        throw BackendMismatch("probe interval endpoints are on different backends");
    if (!(a < b))
        throw InvalidArgument("degree probe needs a < b, got a = " + a.str() +
                              ", b = " + b.str());

    const Backend be = a.backend();
    const Scalar step =
        (b - a) / Scalar::of_int(static_cast<long>(degree + trials), be);

    DegreeProbe probe;
    probe.consistent = true;
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Scalar> xs;
        xs.reserve(degree + 1);
        for (std::size_t j = 0; j <= degree; ++j)
            xs.push_back(a + step * Scalar::of_int(static_cast<long>(t + 1 + j), be));
        NodeVector nodes(std::move(xs));
        Polynomial p = fit(sample(f, nodes));
        if (t > 0 && !coefficients_agree(probe.fits.front(), p))
            probe.consistent = false;
        probe.node_sets.push_back(std::move(nodes));
        probe.fits.push_back(std::move(p));
    }
    return probe;
}

}  // namespace vander

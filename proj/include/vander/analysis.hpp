#ifndef VANDER_ANALYSIS_HPP
#define VANDER_ANALYSIS_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vander/functions.hpp"
#include "vander/polynomial.hpp"
#include "vander/scalar.hpp"

namespace vander {

// Max |f(x) - p(x)| over probe_count+1 equally spaced probes on [a,b],
// endpoints included. When f, p and the endpoints are all exact the scan is
// carried out in rational arithmetic (a polynomial interpolant of a
// polynomial comes back exactly 0.0); any float ingredient drops the
// comparison to doubles.
double sup_error(const ScalarFn& f, const Polynomial& p, const Scalar& a,
                 const Scalar& b, std::size_t probe_count);

// The per-probe error curve behind sup_error, for external plotting.
std::vector<std::pair<double, double>> error_curve(const ScalarFn& f,
                                                   const Polynomial& p,
                                                   const Scalar& a, const Scalar& b,
                                                   std::size_t probe_count);

// One dyadic refinement level: fit on the level-k grid over [0,1] and measure
// the sup error with a dense scan.
struct LevelRecord {
    std::size_t level;       // k
    std::size_t node_count;  // N_k segments, i.e. degree = N_k
    std::size_t degree;
    Backend backend;
    double sup_error;
    double residual;  // max node residual of the fit
    Polynomial fitted;
};

struct ConvergenceReport {
    std::string function_id;
    std::size_t base_count;   // N_0
    std::size_t probe_count;  // probes used by the dense scan
    std::vector<LevelRecord> levels;
};

// Fits f on dyadic grids of levels 0..max_level over the unit interval and
// records the error at each refinement. The backend per level follows the
// sampled values (exact functions stay exact, transcendental ones float).
ConvergenceReport convergence_study(const ScalarFn& f, const std::string& function_id,
                                    std::size_t base_count, std::size_t max_level,
                                    std::size_t probe_count);

// True Taylor coefficient of x^k at 0, signed.
struct ReferenceSeries {
    std::string id;
    std::function<double(std::size_t)> coefficient;
};

ReferenceSeries reference_sine();   // sin: x - x^3/3! + x^5/5! - ...
ReferenceSeries reference_log1p();  // ln(1+x): x - x^2/2 + x^3/3 - ...

// One power k across all requested fit degrees. Estimates are missing for
// degrees below k. With magnitudes=true both reference and estimates are
// reported as absolute values (the sine table's convention); the log table
// keeps signs.
struct TaylorRow {
    std::size_t power;
    double reference;
    std::vector<std::optional<double>> estimates;   // aligned with degrees
    std::vector<std::optional<double>> abs_errors;  // |estimate - reference|
};

struct TaylorComparison {
    std::string function_id;
    std::vector<std::size_t> degrees;
    bool magnitudes;
    std::vector<TaylorRow> rows;
};

// For each degree n, fits f on the n+1-node uniform partition of [a,b] and
// reads the fitted coefficients of the requested powers as estimates of the
// Taylor coefficients at 0. No differentiation anywhere.
TaylorComparison taylor_estimates(const ScalarFn& f, const std::string& function_id,
                                  const Scalar& a, const Scalar& b,
                                  const std::vector<std::size_t>& degrees,
                                  const std::vector<std::size_t>& powers,
                                  const ReferenceSeries& reference, bool magnitudes);

// Cross-check of the degree-4 sine fit on [-pi,pi] against its closed-form
// coefficients 8/(3*pi) and -8/(3*pi^3): the fitted odd coefficients must
// match within 1e-9 and the even ones vanish below 1e-10. Returns the closed
// forms; throws CheckFailure listing fitted vs expected on any miss.
struct ClosedFormP4 {
    double power1;  // 8 / (3 pi)
    double power3;  // -8 / (3 pi^3)
};

ClosedFormP4 closed_form_check_p4();

}  // namespace vander

#endif

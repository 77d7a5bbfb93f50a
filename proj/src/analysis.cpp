#include "vander/analysis.hpp"

#include <cmath>
#include <numbers>

#include "vander/errors.hpp"
#include "vander/grid.hpp"
#include "vander/interp.hpp"

namespace vander {

std::vector<std::pair<double, double>> error_curve(const ScalarFn& f,
                                                   const Polynomial& p,
                                                   const Scalar& a, const Scalar& b,
                                                   std::size_t probe_count) {
    if (probe_count == 0) throw InvalidArgument("sup-error scan needs probes");
    if (a.backend() != b.backend())
        throw BackendMismatch("scan endpoints are on different backends");
    if (!(a < b))
        throw InvalidArgument("scan needs a < b, got a = " + a.str() +
                              ", b = " + b.str());

    const Backend be = a.backend();
    const Scalar width = b - a;
    const Scalar denom = Scalar::of_int(static_cast<long>(probe_count), be);

    // Converting the polynomial once keeps the float path off the repeated
    // exact-to-double coefficient rounding.
    const Polynomial pf = p.backend() == Backend::exact ? p.to_float() : p;

    std::vector<std::pair<double, double>> curve;
    curve.reserve(probe_count + 1);
    for (std::size_t j = 0; j <= probe_count; ++j) {
        Scalar x = j == probe_count
                       ? b
                       : a + width * Scalar::of_int(static_cast<long>(j), be) / denom;
        Scalar fx = f(x);
        if (fx.is_exact() && p.backend() == Backend::exact && x.is_exact()) {
            curve.emplace_back(x.to_double(), (fx - p(x)).abs().to_double());
        } else {
            double xd = x.to_double();
            curve.emplace_back(xd, std::fabs(fx.to_double() - pf(Scalar(xd)).flt()));
        }
    }
    return curve;
}

double sup_error(const ScalarFn& f, const Polynomial& p, const Scalar& a,
                 const Scalar& b, std::size_t probe_count) {
    double worst = 0.0;
    for (const auto& [x, err] : error_curve(f, p, a, b, probe_count))
        worst = std::max(worst, err);
    return worst;
}

ConvergenceReport convergence_study(const ScalarFn& f, const std::string& function_id,
                                    std::size_t base_count, std::size_t max_level,
                                    std::size_t probe_count) {
    ConvergenceReport report{function_id, base_count, probe_count, {}};
    const Scalar zero{Rational(0)}, one{Rational(1)};
    for (std::size_t k = 0; k <= max_level; ++k) {
        DyadicPartition part = dyadic(base_count, k);
        SampleSet samples = sample(f, part.nodes);
        Polynomial p = fit(samples);
        LevelRecord rec{k,
                        part.node_count,
                        p.degree(),
                        samples.backend(),
                        sup_error(f, p, zero, one, probe_count),
                        node_residual(p, samples),
                        std::move(p)};
        report.levels.push_back(std::move(rec));
    }
    return report;
}

ReferenceSeries reference_sine() {
    return {"sine", [](std::size_t k) -> double {
                if (k % 2 == 0) return 0.0;
                double c = 1.0;
                for (std::size_t i = 2; i <= k; ++i) c /= static_cast<double>(i);
                return ((k - 1) / 2) % 2 == 0 ? c : -c;
            }};
}

ReferenceSeries reference_log1p() {
    return {"log1p", [](std::size_t k) -> double {
                if (k == 0) return 0.0;
                double c = 1.0 / static_cast<double>(k);
                return k % 2 == 1 ? c : -c;
            }};
}

TaylorComparison taylor_estimates(const ScalarFn& f, const std::string& function_id,
                                  const Scalar& a, const Scalar& b,
                                  const std::vector<std::size_t>& degrees,
                                  const std::vector<std::size_t>& powers,
                                  const ReferenceSeries& reference, bool magnitudes) {
    if (degrees.empty() || powers.empty())
        throw InvalidArgument("taylor comparison needs degrees and powers");

    std::vector<Polynomial> fits;
    fits.reserve(degrees.size());
    for (std::size_t n : degrees) {
        if (n == 0) throw InvalidArgument("taylor fit degree must be >= 1");
        fits.push_back(fit(sample(f, uniform_partition(a, b, n))));
    }

    TaylorComparison cmp{function_id, degrees, magnitudes, {}};
    for (std::size_t k : powers) {
        double ref = reference.coefficient(k);
        if (magnitudes) ref = std::fabs(ref);
        TaylorRow row{k, ref, {}, {}};
        for (std::size_t d = 0; d < degrees.size(); ++d) {
            if (k > degrees[d]) {
                row.estimates.emplace_back(std::nullopt);
                row.abs_errors.emplace_back(std::nullopt);
                continue;
            }
            double est = fits[d].coeff(k).to_double();
            if (magnitudes) est = std::fabs(est);
            row.estimates.emplace_back(est);
            row.abs_errors.emplace_back(std::fabs(est - ref));
        }
        cmp.rows.push_back(std::move(row));
    }
    return cmp;
}

ClosedFormP4 closed_form_check_p4() {
    const double pi = std::numbers::pi;
    const ClosedFormP4 closed{8.0 / (3.0 * pi), -8.0 / (3.0 * pi * pi * pi)};

    Polynomial p = fit(sample(sin_fn(), uniform_partition(Scalar(-pi), Scalar(pi), 4)));

    auto fail = [](const std::string& what, double got, double want) {
        throw CheckFailure("closed-form check failed: " + what + " fitted " +
                           float_str(got) + ", expected " + float_str(want));
    };

    double a1 = p.coeff(1).flt();
    double a3 = p.coeff(3).flt();
    if (std::fabs(a1 - closed.power1) >= 1e-9)
        fail("power-1 coefficient (8/(3pi))", a1, closed.power1);
    if (std::fabs(a3 - closed.power3) >= 1e-9)
        fail("power-3 coefficient (-8/(3pi^3))", a3, closed.power3);
    for (std::size_t k : {std::size_t{0}, std::size_t{2}, std::size_t{4}}) {
        double c = p.coeff(k).flt();
        if (std::fabs(c) >= 1e-10)
            fail("power-" + std::to_string(k) + " coefficient (even, should vanish)",
                 c, 0.0);
    }
    return closed;
}

}  // namespace vander

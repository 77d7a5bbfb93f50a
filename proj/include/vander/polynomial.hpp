#ifndef VANDER_POLYNOMIAL_HPP
#define VANDER_POLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "vander/scalar.hpp"

namespace vander {

// Dense polynomial, coefficients stored highest power first (a_n .. a_0).
// The coefficient vector is never empty; the zero polynomial is {0}.
class Polynomial {
public:
    explicit Polynomial(std::vector<Scalar> descending_coeffs);

    std::size_t degree() const { return c_.size() - 1; }
    Backend backend() const { return c_.front().backend(); }

    // Coefficient of x^power (zero scalar above the formal degree).
    const Scalar& coeff(std::size_t power) const;
    const std::vector<Scalar>& descending() const { return c_; }

    // Horner evaluation; x must be on the polynomial's backend.
    Scalar operator()(const Scalar& x) const;

    Polynomial to_float() const;

private:
    std::vector<Scalar> c_;
};

Scalar evaluate(const Polynomial& p, const Scalar& x);

// Highest power whose coefficient survives the zero test. On the exact
// backend the test is exact; on floats a coefficient counts as zero when its
// magnitude is at most `tol`. The zero polynomial reports degree 0.
struct EffectiveDegree {
    std::size_t formal;
    std::size_t effective;
    double tolerance;  // the absolute threshold actually applied
};

EffectiveDegree effective_degree(const Polynomial& p, double tol);

// Default tolerance: 0 on the exact backend, 1e-7 * max|coeff| on floats.
EffectiveDegree effective_degree(const Polynomial& p);

// Human-readable form with explicit zero terms, e.g. "0x^4 + 3x^3 + x^2 - 2x + 2".
std::string polynomial_str(const Polynomial& p);

}  // namespace vander

#endif

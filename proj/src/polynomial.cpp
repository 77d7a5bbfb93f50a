#include "vander/polynomial.hpp"

#include <cmath>

#include "vander/errors.hpp"

namespace vander {

Polynomial::Polynomial(std::vector<Scalar> descending_coeffs)
    : c_(std::move(descending_coeffs)) {
    if (c_.empty()) throw InvalidArgument("polynomial needs at least one coefficient");
    for (const Scalar& c : c_)
        if (c.backend() != c_.front().backend())
            throw BackendMismatch("polynomial mixes exact and float coefficients");
}

const Scalar& Polynomial::coeff(std::size_t power) const {
    static const Scalar exact_zero = Scalar::zero(Backend::exact);
    static const Scalar float_zero = Scalar::zero(Backend::floating);
    if (power > degree())
        return backend() == Backend::exact ? exact_zero : float_zero;
    return c_[degree() - power];
}

Scalar Polynomial::operator()(const Scalar& x) const {
    if (x.backend() != backend())
        throw BackendMismatch("polynomial evaluated at a scalar on the other backend");
    Scalar acc = c_.front();
    for (std::size_t i = 1; i < c_.size(); ++i) acc = acc * x + c_[i];
    return acc;
}

Polynomial Polynomial::to_float() const {
    std::vector<Scalar> out;
    out.reserve(c_.size());
    for (const Scalar& c : c_) out.emplace_back(c.to_double());
    return Polynomial(std::move(out));
}

Scalar evaluate(const Polynomial& p, const Scalar& x) { return p(x); }

EffectiveDegree effective_degree(const Polynomial& p, double tol) {
    if (tol < 0.0) throw InvalidArgument("zero tolerance must be nonnegative");
    const auto& c = p.descending();
    for (std::size_t i = 0; i < c.size(); ++i) {
        bool nonzero = p.backend() == Backend::exact
                           ? !c[i].is_zero()
                           : std::fabs(c[i].flt()) > tol;
        if (nonzero) return {p.degree(), p.degree() - i, tol};
    }
    return {p.degree(), 0, tol};  // every coefficient is (effectively) zero
}

EffectiveDegree effective_degree(const Polynomial& p) {
    if (p.backend() == Backend::exact) return effective_degree(p, 0.0);
    double max_mag = 0.0;
    for (const Scalar& c : p.descending())
        max_mag = std::max(max_mag, std::fabs(c.flt()));
    return effective_degree(p, 1e-7 * max_mag);
}

std::string polynomial_str(const Polynomial& p) {
    const auto& c = p.descending();
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const std::size_t power = p.degree() - i;
        Scalar mag = c[i].abs();
        bool negative = c[i].sign() < 0;

        if (i == 0) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }

        const bool unit = mag == Scalar::one(mag.backend());
        if (power == 0 || !unit) out += mag.str();
        if (power >= 1) {
            out += "x";
            if (power > 1) out += "^" + std::to_string(power);
        }
    }
    return out;
}

}  // namespace vander

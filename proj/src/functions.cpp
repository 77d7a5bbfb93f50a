#include "vander/functions.hpp"

#include <cmath>
#include <numbers>

#include "vander/errors.hpp"
#include "vander/grid.hpp"

namespace vander {

ScalarFn abs_fn() {
    return [](const Scalar& x) { return x.abs(); };
}

ScalarFn runge_fn() {
    return [](const Scalar& x) {
        const Scalar one = Scalar::one(x.backend());
        const Scalar c = Scalar::of_int(25, x.backend());
        return one / (one + c * x * x);
    };
}

ScalarFn sin_fn() {
    return [](const Scalar& x) { return Scalar(std::sin(x.to_double())); };
}

ScalarFn log1p_fn() {
    return [](const Scalar& x) {
        double d = x.to_double();
        if (d <= -1.0)
            throw InvalidArgument("log1p is undefined for x <= -1 (got " +
                                  x.str() + ")");
        return Scalar(std::log1p(d));
    };
}

ScalarFn poly_fn(Polynomial p) {
    if (p.backend() == Backend::floating) {
        return [p = std::move(p)](const Scalar& x) { return p(Scalar(x.to_double())); };
    }
    Polynomial flt = p.to_float();
    return [p = std::move(p), flt = std::move(flt)](const Scalar& x) {
        return x.is_exact() ? p(x) : flt(x);
    };
}

ScalarFn force_float(ScalarFn f) {
    return [f = std::move(f)](const Scalar& x) {
        Scalar y = f(Scalar(x.to_double()));
        return y.is_exact() ? Scalar(y.to_double()) : y;
    };
}

namespace {

// "poly:3,0,-2" -> x^2 coefficient 3, x coefficient 0, constant -2.
NamedFunction parse_poly_id(std::string_view id) {
    std::string_view coeff_list = id.substr(5);
    if (coeff_list.empty())
        throw InvalidArgument("poly function needs coefficients, e.g. poly:1,0,-2");
    std::vector<Scalar> coeffs;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = coeff_list.find(',', start);
        std::string_view piece = coeff_list.substr(
            start, comma == std::string_view::npos ? comma : comma - start);
        coeffs.push_back(Scalar(Rational::parse(piece)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    Polynomial p{std::move(coeffs)};
    return {std::string(id), "polynomial " + polynomial_str(p) + " on [0,1]", true,
            poly_fn(std::move(p))};
}

}  // namespace

std::vector<NamedFunction> function_registry() {
    const double pi = std::numbers::pi;
    std::vector<NamedFunction> reg;
    reg.push_back({"abs", "|2x - 1| on [0,1] (|x| on [-1,1] rescaled)", true,
                   to_unit(DomainMap(Scalar(Rational(-1)), Scalar(Rational(1))),
                           abs_fn())});
    reg.push_back({"log1p", "ln(1 + x) on [0,1]", false, log1p_fn()});
    reg.push_back({"runge", "1/(1 + 25(2x-1)^2) on [0,1] (Runge's function rescaled)",
                   true,
                   to_unit(DomainMap(Scalar(Rational(-1)), Scalar(Rational(1))),
                           runge_fn())});
    reg.push_back({"sine", "sin(2*pi*x - pi) on [0,1] (sin on [-pi,pi] rescaled)",
                   false, to_unit(DomainMap(Scalar(-pi), Scalar(pi)), sin_fn())});
    return reg;
}

NamedFunction lookup_function(std::string_view id) {
    if (id.rfind("poly:", 0) == 0) return parse_poly_id(id);
    for (NamedFunction& f : function_registry())
        if (f.id == id) return std::move(f);
    std::string known;
    for (const NamedFunction& f : function_registry())
        known += (known.empty() ? "" : ", ") + f.id;
    throw InvalidArgument("unknown function id '" + std::string(id) +
                          "' (known: " + known + ", poly:<coeffs>)");
}

}  // namespace vander

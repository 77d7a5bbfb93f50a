#include "vander/scalar.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <system_error>

#include "vander/errors.hpp"

namespace vander {

std::string_view backend_name(Backend b) {
    return b == Backend::exact ? "exact" : "float";
}

Backend parse_backend(std::string_view name) {
    if (name == "exact") return Backend::exact;
    if (name == "float") return Backend::floating;
    throw InvalidArgument("unknown backend '" + std::string(name) +
                          "' (expected 'exact' or 'float')");
}

namespace {

[[noreturn]] void mismatch(const char* op) {
    throw BackendMismatch(std::string("backend mismatch in scalar ") + op +
                          ": one operand is exact, the other is float");
}

}  // namespace

Scalar Scalar::parse(std::string_view text, Backend b) {
    if (b == Backend::exact) return Scalar(Rational::parse(text));

    if (text.find('/') != std::string_view::npos)
        throw ParseError("rational literal '" + std::string(text) +
                         "' is not valid on the float backend");
    std::string buf(text);
    char* end = nullptr;
    errno = 0;
    double d = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size() || buf.empty())
        throw ParseError("not a number: '" + buf + "'");
    if (errno == ERANGE && !std::isfinite(d))
        throw ParseError("number out of range: '" + buf + "'");
    return Scalar(d);
}

const Rational& Scalar::rat() const {
    if (auto* r = std::get_if<Rational>(&v_)) return *r;
    throw BackendMismatch("expected an exact scalar, got a float scalar");
}

double Scalar::flt() const {
    if (auto* d = std::get_if<double>(&v_)) return *d;
    throw BackendMismatch("expected a float scalar, got an exact scalar");
}

bool Scalar::is_zero() const {
    if (auto* r = std::get_if<Rational>(&v_)) return r->is_zero();
    return std::get<double>(v_) == 0.0;
}

int Scalar::sign() const {
    if (auto* r = std::get_if<Rational>(&v_)) return r->sign();
    double d = std::get<double>(v_);
    return d > 0.0 ? 1 : d < 0.0 ? -1 : 0;
}

Scalar Scalar::abs() const {
    if (auto* r = std::get_if<Rational>(&v_)) return Scalar(r->abs());
    return Scalar(std::fabs(std::get<double>(v_)));
}

double Scalar::to_double() const {
    if (auto* r = std::get_if<Rational>(&v_)) return r->to_double();
    return std::get<double>(v_);
}

Scalar Scalar::operator-() const {
    if (auto* r = std::get_if<Rational>(&v_)) return Scalar(-*r);
    return Scalar(-std::get<double>(v_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (backend() != o.backend()) mismatch("addition");
    if (auto* r = std::get_if<Rational>(&v_)) *r += o.rat();
    else std::get<double>(v_) += o.flt();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (backend() != o.backend()) mismatch("subtraction");
    if (auto* r = std::get_if<Rational>(&v_)) *r -= o.rat();
    else std::get<double>(v_) -= o.flt();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (backend() != o.backend()) mismatch("multiplication");
    if (auto* r = std::get_if<Rational>(&v_)) *r *= o.rat();
    else std::get<double>(v_) *= o.flt();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (backend() != o.backend()) mismatch("division");
    if (o.is_zero()) throw DivisionByZero("scalar division by zero");
    if (auto* r = std::get_if<Rational>(&v_)) *r /= o.rat();
    else std::get<double>(v_) /= o.flt();
    return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.backend() != b.backend()) mismatch("comparison");
    if (a.is_exact()) return a.rat() == b.rat();
    return a.flt() == b.flt();
}

bool operator<(const Scalar& a, const Scalar& b) {
    if (a.backend() != b.backend()) mismatch("comparison");
    if (a.is_exact()) return a.rat() < b.rat();
    return a.flt() < b.flt();
}

std::string Scalar::str() const {
    if (auto* r = std::get_if<Rational>(&v_)) return r->str();
    return float_str(std::get<double>(v_));
}

std::string float_str(double d) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, d);
    if (ec != std::errc())
        throw Error("float formatting failed");
    return std::string(buf, ptr);
}

}  // namespace vander

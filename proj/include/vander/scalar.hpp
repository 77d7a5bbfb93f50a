#ifndef VANDER_SCALAR_HPP
#define VANDER_SCALAR_HPP

#include <string>
#include <string_view>
#include <variant>

#include "vander/rational.hpp"

namespace vander {

enum class Backend { exact, floating };

std::string_view backend_name(Backend b);
Backend parse_backend(std::string_view name);

// A number in exactly one arithmetic backend: exact rational or IEEE double.
// Every binary operation requires both operands on the same backend and
// throws BackendMismatch otherwise; nothing is ever promoted behind the
// caller's back. Conversions happen only through the explicit to_double().
class Scalar {
public:
    Scalar() : v_(Rational()) {}
    Scalar(Rational r) : v_(std::move(r)) {}
    Scalar(double d) : v_(d) {}

    static Scalar of_int(long n, Backend b) {
        return b == Backend::exact ? Scalar(Rational(n))
                                   : Scalar(static_cast<double>(n));
    }
    static Scalar zero(Backend b) { return of_int(0, b); }
    static Scalar one(Backend b) { return of_int(1, b); }

    // Parses on the requested backend ("p/q" literals are rejected on the
    // float backend; decimals are accepted on both).
    static Scalar parse(std::string_view text, Backend b);

    Backend backend() const {
        return std::holds_alternative<Rational>(v_) ? Backend::exact
                                                    : Backend::floating;
    }
    bool is_exact() const { return backend() == Backend::exact; }

    const Rational& rat() const;  // throws BackendMismatch on a float scalar
    double flt() const;           // throws BackendMismatch on an exact scalar

    bool is_zero() const;
    int sign() const;
    Scalar abs() const;

    double to_double() const;  // exact path is correctly rounded
    std::string str() const;   // "p/q" or shortest round-trip decimal

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator<(const Scalar& a, const Scalar& b);
    friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    std::variant<Rational, double> v_;
};

// Shortest decimal that parses back to exactly the same double ("1.1" not
// "1.1000000000000001"); used everywhere a float crosses a text boundary.
std::string float_str(double d);

}  // namespace vander

#endif

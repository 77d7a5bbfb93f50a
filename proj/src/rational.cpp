#include "vander/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>
#include <ostream>

#include "vander/errors.hpp"

namespace vander {

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Decimal literal -> exact rational: digits scaled by a power of ten taken
// from the fraction part and the optional exponent.
Rational parse_decimal(std::string_view text) {
    std::string_view s = text;
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }

    long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view es = s.substr(e + 1);
        bool eneg = false;
        if (!es.empty() && (es[0] == '+' || es[0] == '-')) {
            eneg = es[0] == '-';
            es.remove_prefix(1);
        }
        if (!all_digits(es) || es.size() > 6)
            throw ParseError("bad exponent in number '" + std::string(text) + "'");
        for (char c : es) exp10 = exp10 * 10 + (c - '0');
        if (eneg) exp10 = -exp10;
        s = s.substr(0, e);
    }

    std::string digits;
    auto dot = s.find('.');
    if (dot == std::string_view::npos) {
        if (!all_digits(s))
            throw ParseError("not a number: '" + std::string(text) + "'");
        digits = std::string(s);
    } else {
        std::string_view intpart = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if ((intpart.empty() && frac.empty()) ||
            (!intpart.empty() && !all_digits(intpart)) ||
            (!frac.empty() && !all_digits(frac)))
            throw ParseError("not a number: '" + std::string(text) + "'");
        digits = std::string(intpart) + std::string(frac);
        exp10 -= static_cast<long>(frac.size());
    }
    if (digits.empty())
        throw ParseError("not a number: '" + std::string(text) + "'");

    mpz_class n(digits, 10);
    if (neg) n = -n;
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
    mpq_class q = exp10 >= 0 ? mpq_class(n * p) : mpq_class(n, p);
    return Rational(std::move(q));
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty number");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view ns = text.substr(0, slash);
        std::string_view ds = text.substr(slash + 1);
        std::string_view ns_digits = ns;
        if (!ns_digits.empty() && (ns_digits[0] == '+' || ns_digits[0] == '-'))
            ns_digits.remove_prefix(1);
        if (!all_digits(ns_digits) || !all_digits(ds))
            throw ParseError("bad rational literal '" + std::string(text) + "'");
        mpz_class n(std::string(ns), 10), d(std::string(ds), 10);
        if (sgn(d) == 0)
            throw ParseError("zero denominator in '" + std::string(text) + "'");
        return Rational(mpq_class(n, d));
    }
    return parse_decimal(text);
}

// mpq_get_d truncates toward zero, so the hardware result can be one ulp shy
// of the nearest float. Compare the truncated value and its two neighbours
// against the exact rational and keep the closest; on an exact tie prefer the
// candidate with an even mantissa, matching IEEE round-to-nearest-even.
double Rational::to_double() const {
    if (is_zero()) return 0.0;

    static const mpq_class dbl_max(std::numeric_limits<double>::max());
    mpq_class mag = ::abs(v_);
    if (cmp(mag, dbl_max) > 0)
        return sign() > 0 ? std::numeric_limits<double>::infinity()
                          : -std::numeric_limits<double>::infinity();

    const double approx = v_.get_d();
    const double inf = std::numeric_limits<double>::infinity();
    const double candidates[3] = {approx, std::nextafter(approx, inf),
                                  std::nextafter(approx, -inf)};

    double best = approx;
    mpq_class best_diff = ::abs(mpq_class(v_ - mpq_class(approx)));
    for (int i = 1; i < 3; ++i) {
        double c = candidates[i];
        if (!std::isfinite(c)) continue;
        mpq_class diff = ::abs(mpq_class(v_ - mpq_class(c)));
        int rel = cmp(diff, best_diff);
        if (rel < 0) {
            best = c;
            best_diff = diff;
        } else if (rel == 0 && c != best) {
            std::uint64_t bits_c, bits_b;
            std::memcpy(&bits_c, &c, sizeof c);
            std::memcpy(&bits_b, &best, sizeof best);
            if ((bits_c & 1u) == 0 && (bits_b & 1u) != 0) best = c;
        }
    }
    return best;
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace vander

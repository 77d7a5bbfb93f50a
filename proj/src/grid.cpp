#include "vander/grid.hpp"

#include <numbers>
#include <string>
#include <utility>

#include "vander/errors.hpp"

namespace vander {

NodeVector uniform_partition(const Scalar& a, const Scalar& b, std::size_t segments) {
    if (a.backend() != b.backend())
        throw BackendMismatch("partition endpoints are on different backends");
    if (!(a < b))
        throw InvalidArgument("partition needs a < b, got a = " + a.str() +
                              ", b = " + b.str());
    if (segments == 0) throw InvalidArgument("partition needs at least one segment");

    const Backend be = a.backend();
    const Scalar step = (b - a) / Scalar::of_int(static_cast<long>(segments), be);
    std::vector<Scalar> xs;
    xs.reserve(segments + 1);
    for (std::size_t j = 0; j <= segments; ++j) {
        if (j == 0) {
            xs.push_back(a);
        } else if (j == segments) {
            xs.push_back(b);
        } else if (2 * j == segments) {
            // Exact midpoint; on floats this lands on 0 for intervals [-c, c].
            xs.push_back((a + b) / Scalar::of_int(2, be));
        } else if (2 * j < segments) {
            xs.push_back(a + step * Scalar::of_int(static_cast<long>(j), be));
        } else {
            // Mirror from the right endpoint so float grids on symmetric
            // intervals come out negation-symmetric.
            xs.push_back(b - step * Scalar::of_int(static_cast<long>(segments - j), be));
        }
    }
    return NodeVector(std::move(xs));
}

DyadicPartition dyadic(std::size_t base_count, std::size_t level) {
    if (base_count == 0) throw InvalidArgument("dyadic base count must be positive");
    if (level > 40) throw InvalidArgument("dyadic level too large");
    const std::size_t n = base_count << level;

    std::vector<Scalar> xs;
    xs.reserve(n + 1);
    for (std::size_t j = 0; j <= n; ++j)
        xs.push_back(Scalar(Rational(static_cast<long>(j), static_cast<long>(n))));
    return DyadicPartition{base_count, level, n, NodeVector(std::move(xs))};
}

DomainMap::DomainMap(Scalar a_, Scalar b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a.backend() != b.backend())
        throw BackendMismatch("domain endpoints are on different backends");
    if (!(a < b))
        throw InvalidArgument("domain needs a < b, got a = " + a.str() +
                              ", b = " + b.str());
}

namespace {

// Evaluates a + t*(b-a) with t coerced to the endpoints' backend if they
// disagree; coercion always lands on the float side.
Scalar affine(const Scalar& a, const Scalar& b, const Scalar& t) {
    if (t.backend() == a.backend()) return a + t * (b - a);
    if (a.is_exact()) {
        // exact endpoints, float t
        double ad = a.to_double(), bd = b.to_double();
        return Scalar(ad + t.flt() * (bd - ad));
    }
    // float endpoints, exact t
    return Scalar(a.flt() + t.to_double() * (b.flt() - a.flt()));
}

Scalar inverse_affine(const Scalar& a, const Scalar& b, const Scalar& x) {
    if (x.backend() == a.backend()) return (x - a) / (b - a);
    if (a.is_exact()) {
        double ad = a.to_double(), bd = b.to_double();
        return Scalar((x.flt() - ad) / (bd - ad));
    }
    return Scalar((x.to_double() - a.flt()) / (b.flt() - a.flt()));
}

}  // namespace

ScalarFn to_unit(const DomainMap& m, ScalarFn f) {
    return [m, f = std::move(f)](const Scalar& y) { return f(affine(m.a, m.b, y)); };
}

ScalarFn from_unit(const DomainMap& m, ScalarFn g) {
    return
        [m, g = std::move(g)](const Scalar& x) { return g(inverse_affine(m.a, m.b, x)); };
}

SampleSet sample(const ScalarFn& f, const NodeVector& nodes) {
    std::vector<Scalar> ys;
    ys.reserve(nodes.size());
    bool any_float = false;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        Scalar y = Scalar::zero(Backend::exact);
        try {
            y = f(nodes[i]);
        } catch (const std::exception& e) {
            throw Error("function evaluation failed at node index " +
                        std::to_string(i) + " (x = " + nodes[i].str() +
                        "): " + e.what());
        }
        any_float = any_float || !y.is_exact();
        ys.push_back(std::move(y));
    }

    if (nodes.backend() == Backend::floating) {
        for (const Scalar& y : ys)
            if (y.is_exact())
                throw BackendMismatch(
                    "function produced exact values on float nodes; convert the "
                    "nodes or the function explicitly");
        return SampleSet(nodes, std::move(ys));
    }

    if (!any_float) return SampleSet(nodes, std::move(ys));

    // Exact nodes, float values: the sample set drops to the float backend.
    for (Scalar& y : ys)
        if (y.is_exact()) y = Scalar(y.to_double());
    return SampleSet(nodes.to_float(), std::move(ys));
}

namespace {

NodeVector rationals(std::initializer_list<const char*> literals) {
    std::vector<Scalar> xs;
    xs.reserve(literals.size());
    for (const char* s : literals) xs.push_back(Scalar(Rational::parse(s)));
    return NodeVector(std::move(xs));
}

NodeVector unit_fractions(long den) {
    std::vector<Scalar> xs;
    for (long j = 0; j <= den; ++j) xs.push_back(Scalar(Rational(j, den)));
    return NodeVector(std::move(xs));
}

}  // namespace

NodeVector fixture_nodes(std::string_view id) {
    const double pi = std::numbers::pi;

    // The 19 nodes of the |x| study: the positive side runs ...,0.92,0.98,1
    // (no 0.96), so the set is not quite negation-symmetric. The "-symmetric"
    // variant replaces 0.98 with 0.96 to close it under negation.
    if (id == "ex2.6-nodes")
        return rationals({"-1", "-0.96", "-0.92", "-0.88", "-0.84", "-0.8", "-0.6",
                          "-0.4", "-0.2", "0", "0.2", "0.4", "0.6", "0.8", "0.84",
                          "0.88", "0.92", "0.98", "1"});
    if (id == "ex2.6-nodes-symmetric")
        return rationals({"-1", "-0.96", "-0.92", "-0.88", "-0.84", "-0.8", "-0.6",
                          "-0.4", "-0.2", "0", "0.2", "0.4", "0.6", "0.8", "0.84",
                          "0.88", "0.92", "0.96", "1"});

    if (id == "ex2.7-n6") return unit_fractions(6);
    if (id == "ex2.7-n8") return unit_fractions(8);

    auto suffix_segments = [&](std::string_view prefix) -> long {
        std::string_view tail = id.substr(prefix.size());
        if (tail == "4") return 4;
        if (tail == "6") return 6;
        if (tail == "8") return 8;
        if (tail == "10") return 10;
        return 0;
    };

    if (id.rfind("pi-partition-", 0) == 0) {
        if (long n = suffix_segments("pi-partition-"))
            return uniform_partition(Scalar(-pi), Scalar(pi),
                                     static_cast<std::size_t>(n));
    }
    if (id.rfind("ln-partition-", 0) == 0) {
        if (long n = suffix_segments("ln-partition-"))
            return uniform_partition(Scalar(Rational(-3, 4)), Scalar(Rational(3, 4)),
                                     static_cast<std::size_t>(n));
    }

    std::string known;
    for (const std::string& f : fixture_ids()) known += (known.empty() ? "" : ", ") + f;
    throw InvalidArgument("unknown fixture id '" + std::string(id) +
                          "' (known: " + known + ")");
}

std::vector<std::string> fixture_ids() {
    return {"ex2.6-nodes",     "ex2.6-nodes-symmetric",
            "ex2.7-n6",        "ex2.7-n8",
            "pi-partition-4",  "pi-partition-6",
            "pi-partition-8",  "pi-partition-10",
            "ln-partition-4",  "ln-partition-6",
            "ln-partition-8",  "ln-partition-10"};
}

}  // namespace vander

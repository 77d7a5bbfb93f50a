#include "vander/vandermonde.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "vander/errors.hpp"

namespace vander {

namespace {

// Shared by both builders: powers[i][k] = x_i^k for k = 0..n-1.
std::vector<std::vector<Scalar>> node_powers(const NodeVector& nodes) {
    const std::size_t n = nodes.size();
    std::vector<std::vector<Scalar>> pw(n);
    for (std::size_t i = 0; i < n; ++i) {
        pw[i].reserve(n);
        pw[i].push_back(Scalar::one(nodes.backend()));
        for (std::size_t k = 1; k < n; ++k) pw[i].push_back(pw[i][k - 1] * nodes[i]);
    }
    return pw;
}

}  // namespace

SquareMatrix build_descending(const NodeVector& nodes) {
    const std::size_t n = nodes.size();
    auto pw = node_powers(nodes);
    std::vector<Scalar> e;
    e.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) e.push_back(pw[i][n - 1 - j]);
    return SquareMatrix(n, std::move(e));
}

SquareMatrix build_ascending(const NodeVector& nodes) {
    const std::size_t n = nodes.size();
    auto pw = node_powers(nodes);
    std::vector<Scalar> e;
    e.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) e.push_back(pw[i][j]);
    return SquareMatrix(n, std::move(e));
}

Scalar det_product(const NodeVector& nodes) {
    Scalar det = Scalar::one(nodes.backend());
    for (std::size_t j = 1; j < nodes.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) det *= nodes[j] - nodes[i];
    return det;
}

int sign_relation(std::size_t order) {
    return (order / 2) % 2 == 0 ? 1 : -1;
}

namespace {

// In-place elimination working copy. Pivot choice depends on the backend:
// exact arithmetic takes the first nonzero entry (any nonzero pivot is as
// good as any other), floats take the largest magnitude for stability.
struct Elimination {
    std::size_t n;
    Backend backend;
    std::vector<Scalar> a;  // row-major
    int swap_sign = 1;

    Scalar& at(std::size_t i, std::size_t j) { return a[i * n + j]; }

    explicit Elimination(const SquareMatrix& m)
        : n(m.order()), backend(m.backend()), a(m.entries()) {}

    // Index of the pivot row for column k among rows k..n-1, or n if the
    // whole column is zero.
    std::size_t pick_pivot(std::size_t k) {
        if (backend == Backend::exact) {
            for (std::size_t r = k; r < n; ++r)
                if (!at(r, k).is_zero()) return r;
            return n;
        }
        std::size_t best = n;
        double best_mag = 0.0;
        for (std::size_t r = k; r < n; ++r) {
            double mag = std::fabs(at(r, k).flt());
            if (mag > best_mag) {
                best_mag = mag;
                best = r;
            }
        }
        return best;
    }

    void swap_rows(std::size_t r, std::size_t s) {
        if (r == s) return;
        for (std::size_t j = 0; j < n; ++j) std::swap(at(r, j), at(s, j));
        swap_sign = -swap_sign;
    }
};

}  // namespace

Scalar det_elimination(const SquareMatrix& m) {
    Elimination el(m);
    const std::size_t n = el.n;
    Scalar det = Scalar::one(el.backend);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = el.pick_pivot(k);
        if (p == n) return Scalar::zero(el.backend);
        el.swap_rows(k, p);
        const Scalar pivot = el.at(k, k);
        det *= pivot;
        for (std::size_t r = k + 1; r < n; ++r) {
            if (el.at(r, k).is_zero()) continue;
            const Scalar factor = el.at(r, k) / pivot;
            el.at(r, k) = Scalar::zero(el.backend);
            for (std::size_t c = k + 1; c < n; ++c)
                el.at(r, c) -= factor * el.at(k, c);
        }
    }
    return el.swap_sign < 0 ? -det : det;
}

SquareMatrix invert(const SquareMatrix& m) {
    const std::size_t n = m.order();
    Elimination el(m);
    // Augment with the identity and run Gauss-Jordan on both halves.
    std::vector<Scalar> inv = SquareMatrix::identity(n, el.backend).entries();
    auto inv_at = [&](std::size_t i, std::size_t j) -> Scalar& {
        return inv[i * n + j];
    };

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = el.pick_pivot(k);
        if (p == n)
            throw SingularMatrix("singular matrix: no usable pivot in column " +
                                     std::to_string(k + 1) + " at elimination stage " +
                                     std::to_string(k + 1),
                                 k + 1);
        if (p != k) {
            el.swap_rows(k, p);
            for (std::size_t j = 0; j < n; ++j) std::swap(inv_at(k, j), inv_at(p, j));
        }
        const Scalar pivot = el.at(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            el.at(k, j) /= pivot;
            inv_at(k, j) /= pivot;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == k || el.at(r, k).is_zero()) continue;
            const Scalar factor = el.at(r, k);
            for (std::size_t j = 0; j < n; ++j) {
                el.at(r, j) -= factor * el.at(k, j);
                inv_at(r, j) -= factor * inv_at(k, j);
            }
        }
    }
    return SquareMatrix(n, std::move(inv));
}

std::vector<Scalar> solve(const SquareMatrix& m, const std::vector<Scalar>& rhs) {
    const std::size_t n = m.order();
    if (rhs.size() != n)
        throw InvalidArgument("right-hand side length " + std::to_string(rhs.size()) +
                              " does not match matrix order " + std::to_string(n));
    for (const Scalar& v : rhs)
        if (v.backend() != m.backend())
            throw BackendMismatch("right-hand side backend does not match matrix");

    Elimination el(m);
    std::vector<Scalar> b = rhs;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = el.pick_pivot(k);
        if (p == n)
            throw SingularMatrix("singular system: no usable pivot in column " +
                                     std::to_string(k + 1) + " at elimination stage " +
                                     std::to_string(k + 1),
                                 k + 1);
        if (p != k) {
            el.swap_rows(k, p);
            std::swap(b[k], b[p]);
        }
        const Scalar pivot = el.at(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            if (el.at(r, k).is_zero()) continue;
            const Scalar factor = el.at(r, k) / pivot;
            el.at(r, k) = Scalar::zero(el.backend);
            for (std::size_t c = k + 1; c < n; ++c)
                el.at(r, c) -= factor * el.at(k, c);
            b[r] -= factor * b[k];
        }
    }

    std::vector<Scalar> x(n, Scalar::zero(el.backend));
    for (std::size_t i = n; i-- > 0;) {
        Scalar acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= el.at(i, j) * x[j];
        x[i] = acc / el.at(i, i);
    }
    return x;
}

}  // namespace vander

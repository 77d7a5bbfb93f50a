#include "vander/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "vander/errors.hpp"

namespace vander {

namespace {

void require_uniform_backend(const std::vector<Scalar>& xs, const char* what) {
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (xs[i].backend() != xs[0].backend())
            throw BackendMismatch(std::string(what) +
                                  " mixes exact and float entries");
}

}  // namespace

NodeVector::NodeVector(std::vector<Scalar> nodes) : xs_(std::move(nodes)) {
    if (xs_.empty()) throw InvalidArgument("node vector must be nonempty");
    require_uniform_backend(xs_, "node vector");
    for (std::size_t i = 1; i < xs_.size(); ++i) {
        if (!(xs_[i - 1] < xs_[i]))
            throw InvalidArgument("nodes must be strictly increasing: x[" +
                                  std::to_string(i - 1) + "] = " + xs_[i - 1].str() +
                                  " >= x[" + std::to_string(i) + "] = " + xs_[i].str());
    }
}

NodeVector NodeVector::to_float() const {
    std::vector<Scalar> out;
    out.reserve(xs_.size());
    for (const Scalar& x : xs_) out.emplace_back(x.to_double());
    return NodeVector(std::move(out));
}

SquareMatrix::SquareMatrix(std::size_t order, std::vector<Scalar> row_major)
    : n_(order), e_(std::move(row_major)) {
    if (n_ == 0) throw InvalidArgument("matrix order must be positive");
    if (e_.size() != n_ * n_)
        throw InvalidArgument("matrix of order " + std::to_string(n_) +
                              " needs " + std::to_string(n_ * n_) +
                              " entries, got " + std::to_string(e_.size()));
    require_uniform_backend(e_, "matrix");
}

SquareMatrix SquareMatrix::identity(std::size_t order, Backend b) {
    std::vector<Scalar> e(order * order, Scalar::zero(b));
    for (std::size_t i = 0; i < order; ++i) e[i * order + i] = Scalar::one(b);
    return SquareMatrix(order, std::move(e));
}

bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.order() != b.order()) return false;
    return a.entries() == b.entries();
}

SquareMatrix multiply(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.order() != b.order())
        throw InvalidArgument("matrix product needs equal orders");
    const std::size_t n = a.order();
    std::vector<Scalar> out(n * n, Scalar::zero(a.backend()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                out[i * n + j] += aik * b.at(k, j);
        }
    return SquareMatrix(n, std::move(out));
}

std::vector<Scalar> multiply(const SquareMatrix& a, const std::vector<Scalar>& v) {
    const std::size_t n = a.order();
    if (v.size() != n)
        throw InvalidArgument("matrix-vector product size mismatch");
    std::vector<Scalar> out(n, Scalar::zero(a.backend()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out[i] += a.at(i, j) * v[j];
    return out;
}

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
    if (image_.empty()) throw InvalidArgument("permutation must be nonempty");
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t v : image_) {
        if (v >= image_.size() || seen[v])
            throw InvalidArgument("permutation image is not a bijection of 0.." +
                                  std::to_string(image_.size() - 1));
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> image(n);
    std::iota(image.begin(), image.end(), std::size_t{0});
    return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
    return Permutation(std::move(inv));
}

int Permutation::parity() const {
    std::vector<bool> seen(image_.size(), false);
    int sign = 1;
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = image_[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

namespace {

void require_matching_order(const SquareMatrix& m, const Permutation& p) {
    if (m.order() != p.size())
        throw InvalidArgument("permutation size " + std::to_string(p.size()) +
                              " does not match matrix order " +
                              std::to_string(m.order()));
}

}  // namespace

SquareMatrix permute_rows(const SquareMatrix& m, const Permutation& p) {
    require_matching_order(m, p);
    const std::size_t n = m.order();
    std::vector<Scalar> out;
    out.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.push_back(m.at(p(i), j));
    return SquareMatrix(n, std::move(out));
}

SquareMatrix permute_columns(const SquareMatrix& m, const Permutation& p) {
    require_matching_order(m, p);
    const std::size_t n = m.order();
    std::vector<Scalar> out;
    out.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.push_back(m.at(i, p(j)));
    return SquareMatrix(n, std::move(out));
}

std::vector<Scalar> permute_vector(const std::vector<Scalar>& v, const Permutation& p) {
    if (v.size() != p.size())
        throw InvalidArgument("permutation size does not match vector length");
    std::vector<Scalar> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(v[p(i)]);
    return out;
}

SquareMatrix permutation_matrix(const Permutation& p, Backend b) {
    const std::size_t n = p.size();
    std::vector<Scalar> e(n * n, Scalar::zero(b));
    for (std::size_t i = 0; i < n; ++i) e[i * n + p(i)] = Scalar::one(b);
    return SquareMatrix(n, std::move(e));
}

}  // namespace vander

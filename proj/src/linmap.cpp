#include "weakhopf/linmap.hpp"

#include <algorithm>

#include "weakhopf/errors.hpp"

namespace wha {

LinMap LinMap::identity(std::uint32_t n, const FieldSpec& f) {
    LinMap m(n, n, f);
    m.mat = SparseTensor::identity(n, f);
    return m;
}

LinMap LinMap::from_tensor(SparseTensor t) {
    if (t.order() != 2) throw DimensionMismatchError("linear map tensor must be order 2");
    LinMap m;
    m.cod = t.shape()[0];
    m.dom = t.shape()[1];
    m.mat = std::move(t);
    return m;
}

LinMap LinMap::compose(const LinMap& inner) const {
    if (dom != inner.cod) throw DimensionMismatchError("composition dimension mismatch");
    LinMap out;
    out.dom = inner.dom;
    out.cod = cod;
    out.mat = tensor_contract(mat, inner.mat, {{1, 0}});
    return out;
}

LinMap LinMap::transpose() const {
    LinMap out;
    out.dom = cod;
    out.cod = dom;
    out.mat = mat.transpose({1, 0});
    return out;
}

namespace {

// Dense fraction-free (Bareiss) elimination of [A | B], in place. Returns false
// if A is singular.
bool bareiss_solve(std::vector<std::vector<Scalar>>& m, std::uint32_t n, std::uint32_t cols,
                   const FieldSpec& f) {
    Scalar prev = Scalar::one(f);
    for (std::uint32_t k = 0; k < n; ++k) {
        std::uint32_t pivot = k;
        while (pivot < n && m[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return false;
        if (pivot != k) std::swap(m[pivot], m[k]);
        for (std::uint32_t i = k + 1; i < n; ++i) {
            for (std::uint32_t j = k + 1; j < cols; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = Scalar::zero(f);
        }
        prev = m[k][k];
    }
    return true;
}

}  // namespace

LinMap matrix_inverse(const LinMap& in) {
    if (in.dom != in.cod) throw DimensionMismatchError("inverse of a non-square map");
    const std::uint32_t n = in.dom;
    const FieldSpec f = in.field();
    LinMap out(n, n, f);
    if (n == 0) return out;

    // Monomial matrices (at most one entry per row and column) invert directly.
    if (in.mat.entry_count() == n) {
        std::vector<bool> row(n, false), col(n, false);
        bool monomial = true;
        for (const auto& [idx, v] : in.mat.entries()) {
            if (row[idx[0]] || col[idx[1]]) {
                monomial = false;
                break;
            }
            row[idx[0]] = col[idx[1]] = true;
        }
        if (monomial) {
            for (const auto& [idx, v] : in.mat.entries()) {
                out.set(idx[1], idx[0], Scalar::one(f) / v);
            }
            return out;
        }
    }

    std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(2 * n, Scalar::zero(f)));
    for (const auto& [idx, v] : in.mat.entries()) m[idx[0]][idx[1]] = v;
    for (std::uint32_t i = 0; i < n; ++i) m[i][n + i] = Scalar::one(f);

    if (!bareiss_solve(m, n, 2 * n, f)) {
        throw SingularMatrixError("matrix is singular (weak antipode not invertible?)");
    }

    for (std::uint32_t c = 0; c < n; ++c) {
        std::vector<Scalar> x(n, Scalar::zero(f));
        for (std::uint32_t ii = n; ii-- > 0;) {
            Scalar acc = m[ii][n + c];
            for (std::uint32_t j = ii + 1; j < n; ++j) acc = acc - m[ii][j] * x[j];
            x[ii] = acc / m[ii][ii];
        }
        for (std::uint32_t i = 0; i < n; ++i) out.set(i, c, x[i]);
    }
    return out;
}

std::uint32_t exact_rank(const SparseTensor& matrix) {
    if (matrix.order() != 2) throw DimensionMismatchError("rank of a non-matrix tensor");
    const std::uint32_t rows = matrix.shape()[0], cols = matrix.shape()[1];
    const FieldSpec f = matrix.field();
    std::vector<std::vector<Scalar>> m(rows, std::vector<Scalar>(cols, Scalar::zero(f)));
    for (const auto& [idx, v] : matrix.entries()) m[idx[0]][idx[1]] = v;

    Scalar prev = Scalar::one(f);
    std::uint32_t rank = 0;
    for (std::uint32_t c = 0; c < cols && rank < rows; ++c) {
        std::uint32_t pivot = rank;
        while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) std::swap(m[pivot], m[rank]);
        for (std::uint32_t i = rank + 1; i < rows; ++i) {
            for (std::uint32_t j = c + 1; j < cols; ++j) {
                m[i][j] = (m[rank][c] * m[i][j] - m[i][c] * m[rank][j]) / prev;
            }
            m[i][c] = Scalar::zero(f);
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

}  // namespace wha

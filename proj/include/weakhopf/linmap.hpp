#pragma once

#include "weakhopf/sparse_tensor.hpp"

namespace wha {

/// Linear map between coordinate spaces; matrix stored as a sparse tensor of
/// shape [codomain, domain].
struct LinMap {
    std::uint32_t dom = 0;
    std::uint32_t cod = 0;
    SparseTensor mat;

    LinMap() = default;
    LinMap(std::uint32_t dom_, std::uint32_t cod_, const FieldSpec& f)
        : dom(dom_), cod(cod_), mat({cod_, dom_}, f) {}

    static LinMap identity(std::uint32_t n, const FieldSpec& f);
    static LinMap from_tensor(SparseTensor m);  // shape [cod, dom]

    const FieldSpec& field() const { return mat.field(); }
    Scalar entry(std::uint32_t i, std::uint32_t j) const { return mat.at({i, j}); }
    void set(std::uint32_t i, std::uint32_t j, Scalar v) { mat.set({i, j}, std::move(v)); }

    /// this o inner
    LinMap compose(const LinMap& inner) const;
    LinMap transpose() const;
    bool operator==(const LinMap& o) const { return dom == o.dom && cod == o.cod && mat == o.mat; }
};

/// Exact inverse via fraction-free (Bareiss) Gaussian elimination; monomial
/// matrices take a direct path. Throws SingularMatrixError.
LinMap matrix_inverse(const LinMap& m);

/// Exact rank of a [rows, cols] matrix tensor.
std::uint32_t exact_rank(const SparseTensor& matrix);

}  // namespace wha

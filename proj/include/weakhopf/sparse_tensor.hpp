#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "weakhopf/scalar.hpp"

namespace wha {

using Index = std::vector<std::uint32_t>;

/// Sparse exact-scalar multilinear array. Entries are kept in lexicographic
/// index order and never store zeros, so equality is entrywise and iteration
/// order is deterministic.
class SparseTensor {
public:
    SparseTensor() : field_(FieldSpec::rationals()) {}
    SparseTensor(std::vector<std::uint32_t> shape, FieldSpec field)
        : shape_(std::move(shape)), field_(field) {}

    const std::vector<std::uint32_t>& shape() const { return shape_; }
    std::size_t order() const { return shape_.size(); }
    const FieldSpec& field() const { return field_; }
    const std::map<Index, Scalar>& entries() const { return entries_; }
    std::size_t entry_count() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }

    void set(Index idx, Scalar v);
    void add(const Index& idx, const Scalar& v);
    Scalar at(const Index& idx) const;

    SparseTensor operator+(const SparseTensor& o) const;
    SparseTensor operator-(const SparseTensor& o) const;
    SparseTensor scaled(const Scalar& c) const;
    bool operator==(const SparseTensor& o) const;
    bool operator!=(const SparseTensor& o) const { return !(*this == o); }

    /// Axis permutation: result axis k is input axis perm[k].
    SparseTensor transpose(const std::vector<std::size_t>& perm) const;
    SparseTensor reshape(std::vector<std::uint32_t> new_shape) const;

    static SparseTensor identity(std::uint32_t n, const FieldSpec& f);

    void check_index(const Index& idx) const;

private:
    std::vector<std::uint32_t> shape_;
    FieldSpec field_;
    std::map<Index, Scalar> entries_;
};

/// Exact contraction over the given axis pairs (axis of t1, axis of t2).
/// Result shape: uncontracted axes of t1 then of t2, in order.
SparseTensor tensor_contract(const SparseTensor& t1, const SparseTensor& t2,
                             const std::vector<std::pair<std::size_t, std::size_t>>& axes);

/// Outer product with concatenated shape.
SparseTensor kron(const SparseTensor& t1, const SparseTensor& t2);

/// Iterated coproduct of a [d,d,d] comultiplication tensor:
/// n=1 is the identity map, n=2 is delta itself, and
/// delta^(n) = (delta (x) id^(n-2)) o delta^(n-1). Shape [d, d, ..., d] (n outputs).
SparseTensor iterated_coproduct(const SparseTensor& delta, unsigned n);

}  // namespace wha

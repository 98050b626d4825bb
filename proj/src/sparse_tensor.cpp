#include "weakhopf/sparse_tensor.hpp"

#include <algorithm>
#include <unordered_map>

#include "weakhopf/errors.hpp"

namespace wha {

void SparseTensor::check_index(const Index& idx) const {
    if (idx.size() != shape_.size()) {
        throw DimensionMismatchError("index order " + std::to_string(idx.size()) +
                                     " vs tensor order " + std::to_string(shape_.size()));
    }
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] >= shape_[k]) {
            throw DimensionMismatchError("index out of bounds on axis " + std::to_string(k));
        }
    }
}

void SparseTensor::set(Index idx, Scalar v) {
    check_index(idx);
    if (!(v.field() == field_)) throw FieldMismatchError("entry field differs from tensor field");
    if (v.is_zero()) {
        entries_.erase(idx);
    } else {
        entries_.insert_or_assign(std::move(idx), std::move(v));
    }
}

void SparseTensor::add(const Index& idx, const Scalar& v) {
    check_index(idx);
    if (!(v.field() == field_)) throw FieldMismatchError("entry field differs from tensor field");
    if (v.is_zero()) return;
    auto it = entries_.find(idx);
    if (it == entries_.end()) {
        entries_.emplace(idx, v);
        return;
    }
    it->second = it->second + v;
    if (it->second.is_zero()) entries_.erase(it);
}

Scalar SparseTensor::at(const Index& idx) const {
    check_index(idx);
    auto it = entries_.find(idx);
    return it == entries_.end() ? Scalar::zero(field_) : it->second;
}

SparseTensor SparseTensor::operator+(const SparseTensor& o) const {
    if (shape_ != o.shape_) throw DimensionMismatchError("tensor shapes differ in addition");
    SparseTensor out = *this;
    for (const auto& [idx, v] : o.entries_) out.add(idx, v);
    return out;
}

SparseTensor SparseTensor::operator-(const SparseTensor& o) const {
    if (shape_ != o.shape_) throw DimensionMismatchError("tensor shapes differ in subtraction");
    SparseTensor out = *this;
    for (const auto& [idx, v] : o.entries_) out.add(idx, -v);
    return out;
}

SparseTensor SparseTensor::scaled(const Scalar& c) const {
    SparseTensor out(shape_, field_);
    if (c.is_zero()) return out;
    for (const auto& [idx, v] : entries_) out.set(idx, v * c);
    return out;
}

bool SparseTensor::operator==(const SparseTensor& o) const {
    return shape_ == o.shape_ && field_ == o.field_ && entries_ == o.entries_;
}

SparseTensor SparseTensor::transpose(const std::vector<std::size_t>& perm) const {
    if (perm.size() != shape_.size()) throw DimensionMismatchError("bad permutation length");
    std::vector<std::uint32_t> new_shape(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) new_shape[k] = shape_[perm[k]];
    SparseTensor out(new_shape, field_);
    Index scratch(perm.size());
    for (const auto& [idx, v] : entries_) {
        for (std::size_t k = 0; k < perm.size(); ++k) scratch[k] = idx[perm[k]];
        out.set(scratch, v);
    }
    return out;
}

SparseTensor SparseTensor::reshape(std::vector<std::uint32_t> new_shape) const {
    std::uint64_t a = 1, b = 1;
    for (auto d : shape_) a *= d;
    for (auto d : new_shape) b *= d;
    if (a != b) throw DimensionMismatchError("reshape changes total size");
    SparseTensor out(std::move(new_shape), field_);
    for (const auto& [idx, v] : entries_) {
        std::uint64_t flat = 0;
        for (std::size_t k = 0; k < idx.size(); ++k) flat = flat * shape_[k] + idx[k];
        Index nidx(out.shape().size());
        for (std::size_t k = out.shape().size(); k-- > 0;) {
            nidx[k] = static_cast<std::uint32_t>(flat % out.shape()[k]);
            flat /= out.shape()[k];
        }
        out.set(nidx, v);
    }
    return out;
}

SparseTensor SparseTensor::identity(std::uint32_t n, const FieldSpec& f) {
    SparseTensor out({n, n}, f);
    for (std::uint32_t i = 0; i < n; ++i) out.set({i, i}, Scalar::one(f));
    return out;
}

SparseTensor tensor_contract(const SparseTensor& t1, const SparseTensor& t2,
                             const std::vector<std::pair<std::size_t, std::size_t>>& axes) {
    if (!(t1.field() == t2.field())) throw FieldMismatchError("contraction over different fields");
    std::vector<bool> used1(t1.order(), false), used2(t2.order(), false);
    for (auto [a1, a2] : axes) {
        if (a1 >= t1.order() || a2 >= t2.order()) throw DimensionMismatchError("contraction axis out of range");
        if (used1[a1] || used2[a2]) throw DimensionMismatchError("duplicate contraction axis");
        if (t1.shape()[a1] != t2.shape()[a2]) {
            throw DimensionMismatchError("contracted axes have unequal dimensions");
        }
        used1[a1] = used2[a2] = true;
    }
    std::vector<std::size_t> keep1, keep2;
    for (std::size_t k = 0; k < t1.order(); ++k)
        if (!used1[k]) keep1.push_back(k);
    for (std::size_t k = 0; k < t2.order(); ++k)
        if (!used2[k]) keep2.push_back(k);

    std::vector<std::uint32_t> out_shape;
    for (auto k : keep1) out_shape.push_back(t1.shape()[k]);
    for (auto k : keep2) out_shape.push_back(t2.shape()[k]);
    SparseTensor out(out_shape, t1.field());

    // Group t2 entries by their contracted-axes key.
    std::map<Index, std::vector<std::pair<Index, const Scalar*>>> groups;
    for (const auto& [idx, v] : t2.entries()) {
        Index key(axes.size());
        for (std::size_t k = 0; k < axes.size(); ++k) key[k] = idx[axes[k].second];
        Index rest(keep2.size());
        for (std::size_t k = 0; k < keep2.size(); ++k) rest[k] = idx[keep2[k]];
        groups[key].emplace_back(std::move(rest), &v);
    }

    Index key(axes.size());
    for (const auto& [idx, v] : t1.entries()) {
        for (std::size_t k = 0; k < axes.size(); ++k) key[k] = idx[axes[k].first];
        auto it = groups.find(key);
        if (it == groups.end()) continue;
        Index out_idx(out_shape.size());
        for (std::size_t k = 0; k < keep1.size(); ++k) out_idx[k] = idx[keep1[k]];
        for (const auto& [rest, pv] : it->second) {
            for (std::size_t k = 0; k < rest.size(); ++k) out_idx[keep1.size() + k] = rest[k];
            out.add(out_idx, v * (*pv));
        }
    }
    return out;
}

SparseTensor kron(const SparseTensor& t1, const SparseTensor& t2) {
    if (!(t1.field() == t2.field())) throw FieldMismatchError("kron over different fields");
    std::vector<std::uint32_t> shape = t1.shape();
    shape.insert(shape.end(), t2.shape().begin(), t2.shape().end());
    SparseTensor out(shape, t1.field());
    for (const auto& [i1, v1] : t1.entries()) {
        Index idx = i1;
        idx.resize(shape.size());
        for (const auto& [i2, v2] : t2.entries()) {
            std::copy(i2.begin(), i2.end(), idx.begin() + static_cast<std::ptrdiff_t>(i1.size()));
            out.set(idx, v1 * v2);
        }
    }
    return out;
}

SparseTensor iterated_coproduct(const SparseTensor& delta, unsigned n) {
    if (delta.order() != 3 || delta.shape()[0] != delta.shape()[1] ||
        delta.shape()[0] != delta.shape()[2]) {
        throw DimensionMismatchError("comultiplication tensor must have shape [d,d,d]");
    }
    if (n < 1) throw DimensionMismatchError("iterated coproduct needs n >= 1");
    const std::uint32_t d = delta.shape()[0];
    if (n == 1) return SparseTensor::identity(d, delta.field());
    SparseTensor cur = delta;  // [in, o1, o2]
    for (unsigned k = 3; k <= n; ++k) {
        // Apply delta to the first output leg: contract cur's axis 1 with delta's input.
        // cur: [in, o1, ..., o_{k-1}] -> t: [in, o2..o_{k-1}, a, b]; reorder to [in, a, b, o2...].
        SparseTensor t = tensor_contract(cur, delta, {{1, 0}});
        std::vector<std::size_t> perm;
        perm.push_back(0);
        perm.push_back(t.order() - 2);
        perm.push_back(t.order() - 1);
        for (std::size_t a = 1; a + 2 < t.order(); ++a) perm.push_back(a);
        cur = t.transpose(perm);
    }
    return cur;
}

}  // namespace wha

#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "weakhopf/monoid.hpp"
#include "weakhopf/sparse_tensor.hpp"

using namespace wha;
using wha::testing::qs;

namespace {

// Independent dense oracle: contraction as explicit nested loops over every
// index tuple of both operands.
SparseTensor dense_contract_oracle(const SparseTensor& t1, const SparseTensor& t2,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& axes) {
    std::vector<bool> used1(t1.order(), false), used2(t2.order(), false);
    for (auto [a1, a2] : axes) used1[a1] = true, used2[a2] = true;
    std::vector<std::size_t> keep1, keep2;
    for (std::size_t k = 0; k < t1.order(); ++k)
        if (!used1[k]) keep1.push_back(k);
    for (std::size_t k = 0; k < t2.order(); ++k)
        if (!used2[k]) keep2.push_back(k);
    std::vector<std::uint32_t> out_shape;
    for (auto k : keep1) out_shape.push_back(t1.shape()[k]);
    for (auto k : keep2) out_shape.push_back(t2.shape()[k]);
    SparseTensor out(out_shape, t1.field());

    auto enumerate = [](const std::vector<std::uint32_t>& shape) {
        std::vector<Index> all;
        Index cur(shape.size(), 0);
        for (;;) {
            all.push_back(cur);
            std::size_t k = shape.size();
            while (k > 0) {
                --k;
                if (++cur[k] < shape[k]) break;
                cur[k] = 0;
                if (k == 0) return all;
            }
            if (shape.empty()) return all;
        }
    };
    for (const Index& i1 : enumerate(t1.shape())) {
        const Scalar v1 = t1.at(i1);
        if (v1.is_zero()) continue;
        for (const Index& i2 : enumerate(t2.shape())) {
            bool match = true;
            for (auto [a1, a2] : axes) {
                if (i1[a1] != i2[a2]) {
                    match = false;
                    break;
                }
            }
            if (!match) continue;
            const Scalar v2 = t2.at(i2);
            if (v2.is_zero()) continue;
            Index out_idx;
            for (auto k : keep1) out_idx.push_back(i1[k]);
            for (auto k : keep2) out_idx.push_back(i2[k]);
            out.add(out_idx, v1 * v2);
        }
    }
    return out;
}

SparseTensor random_tensor(std::mt19937_64& rng, std::vector<std::uint32_t> shape) {
    SparseTensor t(shape, FieldSpec::rationals());
    std::uniform_int_distribution<long> num(-3, 3);
    std::vector<Index> all;
    Index cur(shape.size(), 0);
    for (;;) {
        all.push_back(cur);
        std::size_t k = shape.size();
        bool done = true;
        while (k > 0) {
            --k;
            if (++cur[k] < shape[k]) {
                done = false;
                break;
            }
            cur[k] = 0;
        }
        if (done) break;
    }
    for (const auto& idx : all) {
        long v = num(rng);
        if (v != 0 && num(rng) > 0) t.set(idx, qs(v));
    }
    return t;
}

}  // namespace

TEST_CASE("contract identity with vector") {
    const FieldSpec q = FieldSpec::rationals();
    SparseTensor id = SparseTensor::identity(3, q);
    SparseTensor v({3}, q);
    v.set({0}, qs(2));
    v.set({2}, qs(-7, 3));
    SparseTensor out = tensor_contract(id, v, {{1, 0}});
    CHECK(out == v);
}

TEST_CASE("contract swap matrix with itself gives identity") {
    const FieldSpec q = FieldSpec::rationals();
    SparseTensor sw({2, 2}, q);
    sw.set({0, 1}, qs(1));
    sw.set({1, 0}, qs(1));
    SparseTensor out = tensor_contract(sw, sw, {{1, 0}});
    CHECK(out == SparseTensor::identity(2, q));
}

TEST_CASE("counit law via contraction on the sprime coalgebra") {
    WeakHopfAlgebra h = wha::testing::k_sprime();
    // Contract the second output axis of the coproduct with the counit.
    SparseTensor out = tensor_contract(h.base.comul, h.base.counit, {{2, 0}});
    // Result maps input to first output; must be the identity matrix [in, out].
    CHECK(out == SparseTensor::identity(2, h.base.field));
}

TEST_CASE("contraction errors") {
    const FieldSpec q = FieldSpec::rationals();
    SparseTensor a({2, 3}, q), b({2, 2}, q);
    CHECK_THROWS_AS(tensor_contract(a, b, {{1, 0}}), DimensionMismatchError);
    CHECK_THROWS_AS(tensor_contract(a, b, {{5, 0}}), DimensionMismatchError);
}

TEST_CASE("contraction agrees with the dense oracle") {
    std::mt19937_64 rng(77001);
    for (int it = 0; it < 40; ++it) {
        SparseTensor a = random_tensor(rng, {2, 3, 2});
        SparseTensor b = random_tensor(rng, {3, 2, 4});
        auto axes = std::vector<std::pair<std::size_t, std::size_t>>{{1, 0}, {2, 1}};
        CHECK(tensor_contract(a, b, axes) == dense_contract_oracle(a, b, axes));
    }
    for (int it = 0; it < 40; ++it) {
        SparseTensor a = random_tensor(rng, {4, 4});
        SparseTensor b = random_tensor(rng, {4, 4});
        auto axes = std::vector<std::pair<std::size_t, std::size_t>>{{1, 0}};
        CHECK(tensor_contract(a, b, axes) == dense_contract_oracle(a, b, axes));
    }
}

TEST_CASE("contraction is bilinear") {
    std::mt19937_64 rng(77002);
    for (int it = 0; it < 20; ++it) {
        SparseTensor a = random_tensor(rng, {3, 3});
        SparseTensor b = random_tensor(rng, {3, 3});
        SparseTensor c = random_tensor(rng, {3, 2});
        auto axes = std::vector<std::pair<std::size_t, std::size_t>>{{1, 0}};
        CHECK(tensor_contract(a + b, c, axes) ==
              tensor_contract(a, c, axes) + tensor_contract(b, c, axes));
        CHECK(tensor_contract(a.scaled(qs(3, 2)), c, axes) ==
              tensor_contract(a, c, axes).scaled(qs(3, 2)));
    }
}

TEST_CASE("kron basics") {
    const FieldSpec q = FieldSpec::rationals();
    SparseTensor c({1, 1}, q);
    c.set({0, 0}, qs(5, 2));
    SparseTensor t({2, 2}, q);
    t.set({0, 1}, qs(3));
    t.set({1, 1}, qs(-1));
    SparseTensor out = kron(c, t);
    CHECK(out.shape() == std::vector<std::uint32_t>{1, 1, 2, 2});
    CHECK(out.at({0, 0, 0, 1}) == qs(15, 2));
    CHECK(out.at({0, 0, 1, 1}) == qs(-5, 2));

    SparseTensor e1({2}, q), e2({2}, q);
    e1.set({0}, qs(1));
    e2.set({1}, qs(1));
    SparseTensor pair = kron(e1, e2);
    CHECK(pair.entry_count() == 1);
    CHECK(pair.at({0, 1}) == qs(1));

    SparseTensor id2 = SparseTensor::identity(2, q);
    SparseTensor id4 = kron(id2, id2);  // axes (row1, col1, row2, col2)
    CHECK(id4.entry_count() == 4);
    for (std::uint32_t i = 0; i < 2; ++i) {
        for (std::uint32_t j = 0; j < 2; ++j) {
            CHECK(id4.at({i, i, j, j}) == qs(1));
        }
    }
    // Grouping rows and columns together gives the 4x4 identity.
    CHECK(id4.transpose({0, 2, 1, 3}).reshape({4, 4}) == SparseTensor::identity(4, q));
}

TEST_CASE("kron entry count is multiplicative") {
    std::mt19937_64 rng(77003);
    for (int it = 0; it < 20; ++it) {
        SparseTensor a = random_tensor(rng, {3, 2});
        SparseTensor b = random_tensor(rng, {2, 2});
        CHECK(kron(a, b).entry_count() == a.entry_count() * b.entry_count());
    }
}

TEST_CASE("iterated coproduct") {
    WeakHopfAlgebra h = wha::testing::k_sprime();
    const FieldSpec q = h.base.field;
    CHECK(iterated_coproduct(h.base.comul, 1) == SparseTensor::identity(2, q));
    CHECK(iterated_coproduct(h.base.comul, 2) == h.base.comul);

    SparseTensor d3 = iterated_coproduct(h.base.comul, 3);
    CHECK(d3.shape() == std::vector<std::uint32_t>{2, 2, 2, 2});
    for (std::uint32_t s = 0; s < 2; ++s) {
        CHECK(d3.at({s, s, s, s}) == qs(1));  // group-like basis
    }
    CHECK(d3.entry_count() == 2);

    // Coassociativity: both association orders of the third coproduct agree.
    SparseTensor left = tensor_contract(h.base.comul, h.base.comul, {{1, 0}});
    // left: [in, o2, a, b] -> reorder to [in, a, b, o2]
    SparseTensor lhs = left.transpose({0, 2, 3, 1});
    SparseTensor right = tensor_contract(h.base.comul, h.base.comul, {{2, 0}});
    // right: [in, o1, a, b]
    CHECK(lhs == right);
    CHECK(d3 == lhs);
}

TEST_CASE("iterated coproduct on a non-grouplike coalgebra") {
    // Dual of the sprime algebra: comul is the transpose of its product.
    WeakHopfAlgebra h = dual(wha::testing::k_sprime());
    SparseTensor d3 = iterated_coproduct(h.base.comul, 3);
    SparseTensor left = tensor_contract(h.base.comul, h.base.comul, {{1, 0}}).transpose({0, 2, 3, 1});
    SparseTensor right = tensor_contract(h.base.comul, h.base.comul, {{2, 0}});
    CHECK(left == right);
    CHECK(d3 == left);

    // Fourth coproduct: expanding the first or the last leg of the third
    // coproduct gives the same tensor.
    SparseTensor d4 = iterated_coproduct(h.base.comul, 4);
    CHECK(d4.shape() == std::vector<std::uint32_t>{2, 2, 2, 2, 2});
    SparseTensor last = tensor_contract(d3, h.base.comul, {{3, 0}});  // [in,o1,o2,a,b]
    CHECK(d4 == tensor_contract(d3, h.base.comul, {{1, 0}}).transpose({0, 3, 4, 1, 2}));
    CHECK(d4 == last);
}

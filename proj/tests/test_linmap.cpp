#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "weakhopf/linmap.hpp"

using namespace wha;
using wha::testing::qs;

TEST_CASE("inverse of identity and permutations") {
    const FieldSpec q = FieldSpec::rationals();
    LinMap id = LinMap::identity(4, q);
    CHECK(matrix_inverse(id) == id);

    LinMap sw(2, 2, q);
    sw.set(0, 1, qs(1));
    sw.set(1, 0, qs(1));
    CHECK(matrix_inverse(sw) == sw);
}

TEST_CASE("inverse of a unipotent matrix") {
    const FieldSpec q = FieldSpec::rationals();
    LinMap m(2, 2, q);
    m.set(0, 0, qs(1));
    m.set(0, 1, qs(1));
    m.set(1, 1, qs(1));
    LinMap inv = matrix_inverse(m);
    CHECK(inv.entry(0, 0) == qs(1));
    CHECK(inv.entry(0, 1) == qs(-1));
    CHECK(inv.entry(1, 0).is_zero());
    CHECK(inv.entry(1, 1) == qs(1));
}

TEST_CASE("singular matrices are rejected") {
    const FieldSpec q = FieldSpec::rationals();
    LinMap m(2, 2, q);
    m.set(0, 0, qs(1));
    m.set(1, 0, qs(2));
    CHECK_THROWS_AS(matrix_inverse(m), SingularMatrixError);
    CHECK_THROWS_AS(matrix_inverse(LinMap(2, 3, q)), DimensionMismatchError);
}

TEST_CASE("random inverses compose to the identity both ways") {
    const FieldSpec q = FieldSpec::rationals();
    std::mt19937_64 rng(99001);
    std::uniform_int_distribution<long> val(-4, 4);
    for (int it = 0; it < 25; ++it) {
        const std::uint32_t n = 1 + static_cast<std::uint32_t>(it % 5);
        // Product of a unit upper-triangular, a unit lower-triangular, and a
        // permutation matrix: always invertible.
        LinMap up(n, n, q), lo(n, n, q), pm(n, n, q);
        std::vector<std::uint32_t> perm(n);
        for (std::uint32_t i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        for (std::uint32_t i = 0; i < n; ++i) {
            up.set(i, i, qs(1));
            lo.set(i, i, qs(1));
            pm.set(perm[i], i, qs(1));
            for (std::uint32_t j = i + 1; j < n; ++j) {
                if (long v = val(rng); v != 0) up.set(i, j, qs(v));
                if (long v = val(rng); v != 0) lo.set(j, i, qs(v));
            }
        }
        LinMap m = up.compose(lo).compose(pm);
        LinMap inv = matrix_inverse(m);
        CHECK(m.compose(inv) == LinMap::identity(n, q));
        CHECK(inv.compose(m) == LinMap::identity(n, q));
    }
}

TEST_CASE("exact rank") {
    const FieldSpec q = FieldSpec::rationals();
    SparseTensor m({3, 3}, q);
    m.set({0, 0}, qs(1));
    m.set({0, 1}, qs(2));
    m.set({1, 0}, qs(2));
    m.set({1, 1}, qs(4));  // row 1 = 2 * row 0
    m.set({2, 2}, qs(1));
    CHECK(exact_rank(m) == 2);
    CHECK(exact_rank(SparseTensor::identity(5, q)) == 5);
    CHECK(exact_rank(SparseTensor({4, 2}, q)) == 0);
}

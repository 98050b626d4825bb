#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "weakhopf/algebra.hpp"
#include "weakhopf/monoid.hpp"

namespace wha::testing {

inline Scalar qs(long num, long den = 1) { return Scalar::rational(num, den); }

inline bool algebra_commutative(const AlmostBialgebra& a) {
    return a.mul == a.mul.transpose({1, 0, 2});
}

inline bool algebra_cocommutative(const AlmostBialgebra& a) {
    return a.comul == a.comul.transpose({0, 2, 1});
}

inline bool same_structure(const AlmostBialgebra& a, const AlmostBialgebra& b) {
    return a.dim == b.dim && a.mul == b.mul && a.unit == b.unit && a.comul == b.comul &&
           a.counit == b.counit;
}

inline WeakHopfAlgebra k_trivial() { return monoid_algebra(trivial_monoid(), FieldSpec::rationals()); }
inline WeakHopfAlgebra k_sprime() { return monoid_algebra(sprime_monoid(), FieldSpec::rationals()); }
inline WeakHopfAlgebra k_y() { return monoid_algebra(semilattice_y(), FieldSpec::rationals()); }
inline WeakHopfAlgebra k_z(std::uint32_t n) {
    return monoid_algebra(cyclic_group(n), FieldSpec::rationals());
}
inline WeakHopfAlgebra k_s3e() { return monoid_algebra(s3_adjoined(), FieldSpec::rationals()); }

/// Full transformation monoid on two points: regular but not Clifford.
inline FiniteMonoid t2_monoid() {
    FiniteMonoid m;
    m.elements = {"id", "sw", "c0", "c1"};
    // f*g = f o g; functions id=[0,1], sw=[1,0], c0=[0,0], c1=[1,1].
    const std::vector<std::vector<std::uint32_t>> fn = {{0, 1}, {1, 0}, {0, 0}, {1, 1}};
    m.table.resize(16);
    auto index_of = [&](const std::vector<std::uint32_t>& v) -> std::uint32_t {
        for (std::uint32_t k = 0; k < 4; ++k) {
            if (fn[k] == v) return k;
        }
        return 4;
    };
    for (std::uint32_t i = 0; i < 4; ++i) {
        for (std::uint32_t j = 0; j < 4; ++j) {
            m.table[i * 4 + j] = index_of({fn[i][fn[j][0]], fn[i][fn[j][1]]});
        }
    }
    m.identity = 0;
    return m;
}

inline Scalar random_scalar(std::mt19937_64& rng, const FieldSpec& f) {
    std::uniform_int_distribution<long> num(-6, 6);
    if (f.kind == FieldKind::Rationals) {
        std::uniform_int_distribution<long> den(1, 5);
        return Scalar::rational(num(rng), den(rng));
    }
    return Scalar::of_int(num(rng), f);
}

/// Certificate that no linear map S can satisfy the Hopf antipode equation
/// sum S(x') x'' = eps(x) 1 at the given basis element: the restricted linear
/// system in the matrix entries of S is inconsistent.
inline bool hopf_antipode_infeasible_at(const WeakHopfAlgebra& h, std::uint32_t x) {
    const FieldSpec f = h.base.field;
    AlgebraOps ops(h.base);
    const std::uint32_t n = h.base.dim;
    std::vector<std::uint32_t> cols;  // distinct x' indices
    for (const auto& [p, q, c] : ops.comul_in(x)) {
        if (std::find(cols.begin(), cols.end(), p) == cols.end()) cols.push_back(p);
    }
    std::sort(cols.begin(), cols.end());
    const std::uint32_t unknowns = static_cast<std::uint32_t>(cols.size()) * n;
    SparseTensor sys({n, unknowns}, f);
    SparseTensor aug({n, unknowns + 1}, f);
    for (const auto& [p, q, c] : ops.comul_in(x)) {
        const std::uint32_t col0 =
            static_cast<std::uint32_t>(std::lower_bound(cols.begin(), cols.end(), p) -
                                       cols.begin()) *
            n;
        for (std::uint32_t m = 0; m < n; ++m) {
            for (const auto& [k, cm] : ops.mul_pair(m, q)) {
                sys.add({k, col0 + m}, c * cm);
                aug.add({k, col0 + m}, c * cm);
            }
        }
    }
    const Scalar ex = sv_coeff(ops.counit_vec, x, f);
    for (const auto& [u, cu] : ops.unit_vec) aug.add({u, unknowns}, ex * cu);
    return exact_rank(sys) < exact_rank(aug);
}

}  // namespace wha::testing

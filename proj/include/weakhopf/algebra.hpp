#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "weakhopf/report.hpp"
#include "weakhopf/sparse_vec.hpp"

namespace wha {

/// Finite-dimensional almost bialgebra as structure-constant data.
/// mul[i,j,k]: coefficient of e_k in e_i*e_j.
/// comul[i,p,q]: coefficient of e_p (x) e_q in Delta(e_i).
struct AlmostBialgebra {
    FieldSpec field;
    std::uint32_t dim = 0;
    std::vector<std::string> basis;
    SparseTensor mul;     // [dim, dim, dim]
    SparseTensor unit;    // [dim]
    SparseTensor comul;   // [dim, dim, dim]
    SparseTensor counit;  // [dim]
};

struct WhaFlags {
    std::optional<bool> is_bialgebra;
    std::optional<bool> is_perfect;
    std::optional<bool> is_coperfect;
    std::optional<bool> antipode_invertible;
    std::optional<bool> t_anti_morphism;
};

struct WeakHopfAlgebra {
    AlmostBialgebra base;
    LinMap antipode;
    mutable WhaFlags flags;  // caches of checker outcomes; cleared by constructors
};

/// Hash-indexed structure constants for fast sparse evaluation. All views are
/// built once from the tensors; lookups on absent keys return empty lists.
class AlgebraOps {
public:
    explicit AlgebraOps(const AlmostBialgebra& a);

    const AlmostBialgebra& alg;
    std::uint32_t n;
    FieldSpec f;
    SVec unit_vec;
    SVec counit_vec;

    const SVec& mul_pair(std::uint32_t i, std::uint32_t j) const;
    const std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>>& mul_out(std::uint32_t k) const;
    const SVec& mul_left_out(std::uint32_t i, std::uint32_t k) const;   // {(j,c)}: coeff of e_k in e_i*e_j
    const SVec& mul_right_out(std::uint32_t j, std::uint32_t k) const;  // {(i,c)}

    const std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>>& comul_in(std::uint32_t i) const;
    const SVec& comul_outpair(std::uint32_t p, std::uint32_t q) const;  // {(m,c)}: coeff of e_p(x)e_q in Delta(e_m)
    const std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>>& comul_second_out(std::uint32_t q) const;  // {(m,p,c)}
    const std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, Scalar>>& comul3_in(std::uint32_t i) const;

    SVec mul_vec(const SVec& a, const SVec& b) const;
    SVec mul_basis_vec(std::uint32_t i, const SVec& b) const;
    SVec mul_vec_basis(const SVec& a, std::uint32_t j) const;
    /// Dual-algebra product of two functionals (coordinates in the dual
    /// basis): (fg)(e_m) = sum f(e_m') g(e_m'').
    SVec dual_mul(const SVec& fv, const SVec& gv) const;
    Scalar counit_of(const SVec& a) const;

private:
    std::uint64_t key(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint64_t>(a) * n + b;
    }
    std::unordered_map<std::uint64_t, SVec> mul_pair_, mul_left_out_, mul_right_out_, comul_outpair_;
    std::vector<std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>>> mul_out_, comul_in_,
        comul_second_out_;
    // Built on first use: the triple coproduct can be large for dual algebras
    // that never need it.
    mutable std::once_flag comul3_once_;
    mutable std::vector<std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, Scalar>>>
        comul3_in_;
};

// -- checkers -----------------------------------------------------------

CheckReport check_algebra_axioms(const AlmostBialgebra& a);
CheckReport check_coalgebra_axioms(const AlmostBialgebra& a);
CheckReport check_almost_bialgebra(const AlmostBialgebra& a);

/// Convolution product in Hom(H,H): (f*g)(x) = sum f(x') g(x'').
LinMap convolution(const LinMap& f, const LinMap& g, const AlmostBialgebra& a);

CheckReport check_weak_antipode(const WeakHopfAlgebra& h);
CheckReport check_anti_bialgebra_morphism(const WeakHopfAlgebra& h);
CheckReport check_perfect(const WeakHopfAlgebra& h);
CheckReport check_coperfect(const WeakHopfAlgebra& h);
CheckReport check_perfect_variant(const WeakHopfAlgebra& h);

// Cached flag accessors (recompute on first use).
bool flag_perfect(const WeakHopfAlgebra& h);
bool flag_coperfect(const WeakHopfAlgebra& h);
bool flag_anti_morphism(const WeakHopfAlgebra& h);
bool flag_antipode_invertible(const WeakHopfAlgebra& h);
bool flag_bialgebra(const WeakHopfAlgebra& h);

// -- constructors -------------------------------------------------------

WeakHopfAlgebra dual(const WeakHopfAlgebra& h);
WeakHopfAlgebra opposite(const WeakHopfAlgebra& h);    // needs invertible antipode
WeakHopfAlgebra coopposite(const WeakHopfAlgebra& h);  // needs invertible antipode
WeakHopfAlgebra star_cop(const WeakHopfAlgebra& h);    // dual then coopposite
WeakHopfAlgebra tensor_product(const WeakHopfAlgebra& h, const WeakHopfAlgebra& k);

/// Inverse of the antipode; SingularMatrixError is rethrown as
/// AntipodeNotInvertibleError.
LinMap antipode_inverse(const WeakHopfAlgebra& h);

}  // namespace wha

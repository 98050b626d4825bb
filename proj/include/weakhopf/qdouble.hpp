#pragma once

#include <memory>

#include "weakhopf/algebra.hpp"
#include "weakhopf/pairing.hpp"

namespace wha {

/// Two algebras acting on each other. act_left[a, x, y]: coefficient of x_y in
/// a |> x; act_right[a, x, b]: coefficient of a_b in a <| x.
struct QuasiMatchedPair {
    WeakHopfAlgebra x;
    WeakHopfAlgebra a;
    SparseTensor act_left;   // [dimA, dimX, dimX]
    SparseTensor act_right;  // [dimA, dimX, dimA]
};

/// Almost bialgebra on X (x) A with basis labels "x∞a"; D-basis index is
/// xIdx*dimA + aIdx.
struct QuasiBicrossedProduct {
    AlmostBialgebra alg;
    std::uint32_t dim_x = 0;
    std::uint32_t dim_a = 0;
    std::shared_ptr<const QuasiMatchedPair> pair;     // generic-path provenance
    std::shared_ptr<const WeakHopfAlgebra> source_h;  // double-path provenance (basis pairing)
};

struct QuasiRMatrix {
    SparseTensor tensor;  // [dimD, dimD]
    std::uint64_t monomials = 0;
};

/// Actions a |> x = sum <x' S_X(x'''), a> x'' and
/// a <| x = sum <x, S_A^{-1}(a''') a'> a'' derived from a certified skew-pair
/// of perfect weak Hopf algebras.
QuasiMatchedPair derive_actions(const WeakHopfAlgebra& x, const WeakHopfAlgebra& a,
                                const BilinearForm& form);

/// Module laws, coproduct compatibility of both actions, and the five
/// matched-pair equations, each a named sub-report.
CheckReport check_quasi_matched(const QuasiMatchedPair& p);

QuasiBicrossedProduct build_quasi_bicrossed(const QuasiMatchedPair& p);

/// Multiplicativity of the two corner embeddings x -> x∞1 and a -> 1∞a.
CheckReport check_double_embeddings(const QuasiBicrossedProduct& d, const WeakHopfAlgebra& x,
                                    const WeakHopfAlgebra& a);

/// Lazy product engine for the quantum double of a biperfect weak Hopf
/// algebra: elements are sums of decomposable monomials f∞a and products are
/// evaluated by the direct formula
///   (f∞a)(g∞b) = sum f·g(T^{-1}(a''') ? a') ∞ a''b,
/// where the placeholder functional is composed from indexed structure
/// constants. Nothing about the double is materialized.
class QuantumDouble {
public:
    explicit QuantumDouble(const WeakHopfAlgebra& h);
    QuantumDouble(const QuantumDouble&) = delete;
    QuantumDouble& operator=(const QuantumDouble&) = delete;

    const WeakHopfAlgebra& source() const { return h_; }
    std::uint32_t dim_h() const { return n_; }
    std::uint32_t dim_d() const { return n_ * n_; }

    struct Mono {
        SVec f;  // functional coordinates in the dual basis (scalar folded in)
        SVec a;  // coordinates in the basis of H
    };
    using Elem = std::vector<Mono>;

    Elem mul_mono(const Mono& lhs, const Mono& rhs) const;
    Elem mul_elem(const Elem& lhs, const Elem& rhs) const;
    SVec expand(const Elem& e) const;  // coordinates of D: u*dimH + v

    Mono basis_mono(std::uint32_t d) const;
    Mono unit_mono() const;                       // 1_X ∞ 1_H (1_X is the counit functional)
    Mono r_left(std::uint32_t i) const;           // 1_X ∞ e_i
    Mono r_right(std::uint32_t i) const;          // e^i ∞ 1_H
    Mono rbar_right(std::uint32_t i) const;       // (e_i^* o T) ∞ 1_H

    /// Coproduct of a D-basis element per the bicrossed-product formula; the
    /// dual-side coproduct is the cop-flipped transpose of H's product.
    std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>> comul_basis(std::uint32_t d) const;

    CheckReport check_quasi_cocommutative(std::uint64_t max_terms) const;
    CheckReport check_qybe(std::uint64_t max_terms) const;

private:
    SVec conj_functional(const SVec& g, const SVec& left, std::uint32_t right) const;

    WeakHopfAlgebra h_;
    AlgebraOps ops_;
    MatCols t_, tinv_, t_rows_;
    SVec unit_x_;  // counit vector of H
    SVec unit_h_;
    std::uint32_t n_ = 0;
};

/// Materialized quantum double via the direct multiplication formula and the
/// bicrossed-product coproduct; refuses (GuardExceededError) when dimD^2
/// exceeds max_terms.
QuasiBicrossedProduct quantum_double(const WeakHopfAlgebra& h, bool force = false,
                                     std::uint64_t max_terms = (1ull << 24));

QuasiRMatrix r_matrix(const QuasiBicrossedProduct& d);
QuasiRMatrix r_bar(const QuasiBicrossedProduct& d);

CheckReport check_quasi_cocommutative(const QuasiBicrossedProduct& d, const QuasiRMatrix& r,
                                      std::uint64_t max_terms = (1ull << 24));
CheckReport check_quasi_braided(const QuasiBicrossedProduct& d, const QuasiRMatrix& r,
                                std::uint64_t max_terms = (1ull << 24));
CheckReport check_qybe(const QuasiBicrossedProduct& d, const QuasiRMatrix& r,
                       std::uint64_t max_terms = (1ull << 24));
CheckReport check_regular(const QuasiBicrossedProduct& d, const QuasiRMatrix& r,
                          const QuasiRMatrix& rbar, std::uint64_t max_terms = (1ull << 24));
/// R·Rbar = 1 (x) 1; holds when the source is an honest Hopf algebra.
CheckReport check_r_invertible(const QuasiBicrossedProduct& d, const QuasiRMatrix& r,
                               const QuasiRMatrix& rbar, std::uint64_t max_terms = (1ull << 24));

}  // namespace wha

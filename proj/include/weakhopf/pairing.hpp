#pragma once

#include "weakhopf/algebra.hpp"

namespace wha {

/// Bilinear form <x_i, a_j> between the coordinate spaces of two algebras;
/// matrix[i,j] = <x_i, a_j>. Pair certification additionally requires the
/// matrix to be square and of full exact rank.
struct BilinearForm {
    std::uint32_t left_dim = 0;
    std::uint32_t right_dim = 0;
    SparseTensor matrix;  // [left_dim, right_dim]

    BilinearForm() = default;
    BilinearForm(std::uint32_t l, std::uint32_t r, const FieldSpec& f)
        : left_dim(l), right_dim(r), matrix({l, r}, f) {}
};

enum class PairKind { Pair, SkewPair };

struct PairCertificate {
    PairKind kind = PairKind::Pair;
    std::vector<CheckReport> reports;  // one per axiom, plus non-singularity
    bool certified() const {
        for (const auto& r : reports) {
            if (!r.passed()) return false;
        }
        return !reports.empty();
    }
};

/// Axioms (pairing of products with coproducts, units with counits, antipode
/// exchange), checked on every basis pair/triple plus exact non-singularity.
PairCertificate check_weak_hopf_pair(const WeakHopfAlgebra& x, const WeakHopfAlgebra& a,
                                     const BilinearForm& form);

/// Skew variant: the product pairing on the left slot reverses the coproduct
/// legs and the antipode exchange uses the inverse antipode of A.
PairCertificate check_skew_pair(const WeakHopfAlgebra& x, const WeakHopfAlgebra& a,
                                const BilinearForm& form);

/// Dual-basis evaluation form of H against H^*-side algebras: the identity
/// matrix in (dual basis, basis) coordinates.
BilinearForm canonical_eval_pairing(const WeakHopfAlgebra& h);

}  // namespace wha

#pragma once

#include "weakhopf/qdouble.hpp"

namespace wha {

/// Left module over an algebra: action[a, v, w] is the coefficient of basis
/// vector w in a acting on v.
struct ModuleAction {
    std::uint32_t alg_dim = 0;
    std::uint32_t v_dim = 0;
    SparseTensor action;  // [alg_dim, v_dim, v_dim]
};

CheckReport check_module(const AlmostBialgebra& a, const ModuleAction& act);
ModuleAction regular_module(const AlmostBialgebra& a);

/// Left module + right comodule data over the source weak Hopf algebra:
/// mu[a, v, w] as above, delta[v, w, h]: coefficient of w (x) e_h in the
/// coaction of basis vector v.
struct CrossedBimodule {
    std::uint32_t h_dim = 0;
    std::uint32_t v_dim = 0;
    SparseTensor mu;     // [h_dim, v_dim, v_dim]
    SparseTensor delta;  // [v_dim, v_dim, h_dim]
};

/// Restricts a module over the double to actions of 1∞a and e_i^*∞1; needs
/// double-path provenance for the basis pairing.
CrossedBimodule double_module_to_crossed(const QuasiBicrossedProduct& d, const ModuleAction& act);

/// Inverse direction: x∞a acts by the a-action followed by the coaction
/// pairing x against the comodule leg.
ModuleAction crossed_to_double_module(const QuasiBicrossedProduct& d, const CrossedBimodule& cb);

/// Module law, comodule law, the crossed-compatibility condition, and the
/// double-compatibility identity, each a named sub-report.
CheckReport check_crossed_bimodule(const WeakHopfAlgebra& h, const CrossedBimodule& cb);

/// Flip composed with the action of R on V (x) V.
LinMap braid_operator(const ModuleAction& act, const QuasiRMatrix& r);

/// Braid relation on V (x) V (x) V plus von Neumann regularity of C.
CheckReport check_braid_and_regularity(const LinMap& c, const LinMap& cbar);

}  // namespace wha

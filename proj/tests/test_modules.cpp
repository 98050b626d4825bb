#include "doctest.h"
#include "helpers.hpp"
#include "weakhopf/modules.hpp"

using namespace wha;
using namespace wha::testing;

namespace {

// a.v = eps(a) v on a one-dimensional space; a module exactly when the counit
// is multiplicative.
ModuleAction trivial_module(const AlmostBialgebra& a) {
    ModuleAction act;
    act.alg_dim = a.dim;
    act.v_dim = 1;
    act.action = SparseTensor({a.dim, 1, 1}, a.field);
    for (const auto& [idx, v] : a.counit.entries()) act.action.set({idx[0], 0, 0}, v);
    return act;
}

}  // namespace

TEST_CASE("module law checks") {
    QuasiBicrossedProduct d = quantum_double(k_z(2));
    CHECK(check_module(d.alg, trivial_module(d.alg)).passed());
    CHECK(check_module(d.alg, regular_module(d.alg)).passed());

    ModuleAction bad = regular_module(d.alg);
    bad.action.set({1, 2, 3}, qs(1, 3));
    CHECK_FALSE(check_module(d.alg, bad).passed());

    // The counit of D(kS') is not multiplicative, so its one-dimensional
    // "trivial action" is not a module at all.
    QuasiBicrossedProduct dsp = quantum_double(k_sprime());
    CHECK_FALSE(check_module(dsp.alg, trivial_module(dsp.alg)).passed());
}

TEST_CASE("regular modules") {
    QuasiBicrossedProduct d = quantum_double(k_sprime());
    ModuleAction act = regular_module(d.alg);
    CHECK(act.v_dim == 4);
    CHECK(check_module(d.alg, act).passed());
}

TEST_CASE("double modules become crossed bimodules") {
    QuasiBicrossedProduct d = quantum_double(k_sprime());
    CrossedBimodule cb = double_module_to_crossed(d, regular_module(d.alg));
    CHECK(cb.h_dim == 2);
    CHECK(cb.v_dim == 4);
    CheckReport rep = check_crossed_bimodule(*d.source_h, cb);
    CHECK(rep.passed());
}

TEST_CASE("trivial crossed data over a group algebra") {
    // mu = counit action, delta(v) = v (x) 1.
    QuasiBicrossedProduct d = quantum_double(k_z(2));
    const WeakHopfAlgebra& h = *d.source_h;
    CrossedBimodule cb;
    cb.h_dim = 2;
    cb.v_dim = 1;
    cb.mu = SparseTensor({2, 1, 1}, h.base.field);
    for (const auto& [idx, v] : h.base.counit.entries()) cb.mu.set({idx[0], 0, 0}, v);
    cb.delta = SparseTensor({1, 1, 2}, h.base.field);
    for (const auto& [idx, v] : h.base.unit.entries()) cb.delta.set({0, 0, idx[0]}, v);
    CHECK(check_crossed_bimodule(h, cb).passed());
    ModuleAction act = crossed_to_double_module(d, cb);
    CHECK(check_module(d.alg, act).passed());
    CHECK(act.action == trivial_module(d.alg).action);

    // The same data over the non-Hopf sprime algebra violates the
    // double-compatibility identity, so the converter refuses it.
    QuasiBicrossedProduct dsp = quantum_double(k_sprime());
    const WeakHopfAlgebra& hs = *dsp.source_h;
    CrossedBimodule cbs;
    cbs.h_dim = 2;
    cbs.v_dim = 1;
    cbs.mu = SparseTensor({2, 1, 1}, hs.base.field);
    for (const auto& [idx, v] : hs.base.counit.entries()) cbs.mu.set({idx[0], 0, 0}, v);
    cbs.delta = SparseTensor({1, 1, 2}, hs.base.field);
    for (const auto& [idx, v] : hs.base.unit.entries()) cbs.delta.set({0, 0, idx[0]}, v);
    CheckReport rep = check_crossed_bimodule(hs, cbs);
    CHECK_FALSE(rep.passed());
    bool dcomp_failed = false;
    for (const auto& s : rep.subs) {
        if (s.name == "double-compatibility" && s.failure_count > 0) dcomp_failed = true;
    }
    CHECK(dcomp_failed);
    CHECK_THROWS_AS(crossed_to_double_module(dsp, cbs), CrossedLawsFailureError);
}

TEST_CASE("round trip: double module -> crossed -> double module") {
    for (const WeakHopfAlgebra& h : {k_sprime(), k_y(), k_z(2), k_z(3)}) {
        QuasiBicrossedProduct d = quantum_double(h);
        ModuleAction act = regular_module(d.alg);
        CrossedBimodule cb = double_module_to_crossed(d, act);
        CHECK(check_crossed_bimodule(*d.source_h, cb).passed());
        ModuleAction back = crossed_to_double_module(d, cb);
        CHECK(back.action == act.action);
    }
}

TEST_CASE("the braid operator commutes with the diagonal action") {
    // C o (rho x rho)(Delta(d)) = (rho x rho)(Delta(d)) o C for every basis d
    // of the double; this is the operator form of quasi-cocommutativity.
    QuasiBicrossedProduct d = quantum_double(k_sprime());
    ModuleAction act = regular_module(d.alg);
    LinMap c = braid_operator(act, r_matrix(d));
    const std::uint32_t vd = act.v_dim;
    AlgebraOps dops(d.alg);
    std::vector<std::vector<SVec>> img(d.alg.dim, std::vector<SVec>(vd));
    for (const auto& [idx, v] : act.action.entries()) {
        img[idx[0]][idx[1]].emplace_back(idx[2], v);
    }
    for (auto& row : img)
        for (auto& v : row) sv_normalize(v);
    for (std::uint32_t x = 0; x < d.alg.dim; ++x) {
        LinMap diag(vd * vd, vd * vd, d.alg.field);
        for (const auto& [p, q, cc] : dops.comul_in(x)) {
            for (std::uint32_t v = 0; v < vd; ++v) {
                for (std::uint32_t w = 0; w < vd; ++w) {
                    for (const auto& [o1, c1] : img[p][v]) {
                        for (const auto& [o2, c2] : img[q][w]) {
                            diag.mat.add({o1 * vd + o2, v * vd + w}, cc * c1 * c2);
                        }
                    }
                }
            }
        }
        CHECK(c.compose(diag) == diag.compose(c));
    }
}

TEST_CASE("corrupted crossed data is witnessed") {
    QuasiBicrossedProduct d = quantum_double(k_sprime());
    CrossedBimodule cb = double_module_to_crossed(d, regular_module(d.alg));
    cb.delta.set({0, 1, 1}, qs(2));
    CheckReport rep = check_crossed_bimodule(*d.source_h, cb);
    CHECK_FALSE(rep.passed());
}

TEST_CASE("braid operator of the regular module of D(kS')") {
    QuasiBicrossedProduct d = quantum_double(k_sprime());
    ModuleAction act = regular_module(d.alg);
    QuasiRMatrix r = r_matrix(d);
    QuasiRMatrix rb = r_bar(d);
    LinMap c = braid_operator(act, r);
    LinMap cb = braid_operator(act, rb);
    CHECK(c.dom == 16);
    CHECK(check_braid_and_regularity(c, cb).passed());

    // Identity braid passes trivially.
    LinMap id = LinMap::identity(16, d.alg.field);
    CHECK(check_braid_and_regularity(id, id).passed());

    // A perturbed braid fails.
    LinMap broken = c;
    broken.set(0, 5, qs(1, 7));
    CHECK_FALSE(check_braid_and_regularity(broken, cb).passed());
}

TEST_CASE("braid operator on the trivial module of a Hopf double") {
    QuasiBicrossedProduct d = quantum_double(k_z(2));
    ModuleAction act = trivial_module(d.alg);
    LinMap c = braid_operator(act, r_matrix(d));
    LinMap cb = braid_operator(act, r_bar(d));
    CHECK(c.dom == 1);
    CHECK(check_braid_and_regularity(c, cb).passed());
}

TEST_CASE("trivial double has the identity braid") {
    QuasiBicrossedProduct d = quantum_double(k_trivial());
    ModuleAction act = regular_module(d.alg);
    LinMap c = braid_operator(act, r_matrix(d));
    CHECK(c == LinMap::identity(1, d.alg.field));
}

#include "doctest.h"
#include "helpers.hpp"
#include "weakhopf/algebra.hpp"
#include "weakhopf/monoid.hpp"

using namespace wha;
using namespace wha::testing;

TEST_CASE("algebra axioms") {
    CHECK(check_algebra_axioms(k_trivial().base).passed());
    CHECK(check_algebra_axioms(k_y().base).passed());

    WeakHopfAlgebra bad = k_y();
    bad.base.mul.set({1, 2, 4}, qs(1));  // corrupt one product
    CheckReport rep = check_algebra_axioms(bad.base);
    CHECK_FALSE(rep.passed());
    bool found = false;
    for (const auto& s : rep.subs) {
        if (!s.witnesses.empty()) found = true;
    }
    CHECK(found);
}

TEST_CASE("coalgebra axioms") {
    CHECK(check_coalgebra_axioms(k_s3e().base).passed());
    CHECK(check_coalgebra_axioms(dual(k_s3e()).base).passed());

    WeakHopfAlgebra bad = k_sprime();
    bad.base.comul.set({1, 0, 1}, qs(1));
    CHECK_FALSE(check_coalgebra_axioms(bad.base).passed());
}

TEST_CASE("almost bialgebra checks") {
    CheckReport z2 = check_almost_bialgebra(k_z(2).base);
    CHECK(z2.passed());
    for (const auto& s : z2.subs) CHECK(s.failure_count == 0);  // full bialgebra

    CheckReport y = check_almost_bialgebra(k_y().base);
    CHECK(y.passed());
    for (const auto& s : y.subs) CHECK(s.failure_count == 0);
}

TEST_CASE("convolution product") {
    WeakHopfAlgebra z2 = k_z(2);
    LinMap id = LinMap::identity(2, z2.base.field);
    LinMap sq = convolution(id, id, z2.base);
    // id * id sends each group-like s to s*s; in Z_2 both basis elements map to 1.
    CHECK(sq.entry(0, 0) == qs(1));
    CHECK(sq.entry(0, 1) == qs(1));
    CHECK(sq.entry(1, 0).is_zero());
    CHECK(sq.entry(1, 1).is_zero());

    // u o eps is the unit of convolution.
    WeakHopfAlgebra s3e = k_s3e();
    LinMap ue(s3e.base.dim, s3e.base.dim, s3e.base.field);
    for (const auto& [ui, cu] : s3e.base.unit.entries()) {
        for (const auto& [ei, ce] : s3e.base.counit.entries()) {
            ue.set(ui[0], ei[0], cu * ce);
        }
    }
    LinMap f(s3e.base.dim, s3e.base.dim, s3e.base.field);
    f.set(2, 1, qs(3, 2));
    f.set(0, 0, qs(-1));
    f.set(6, 5, qs(7));
    CHECK(convolution(ue, f, s3e.base) == f);
    CHECK(convolution(f, ue, s3e.base) == f);

    // id * T * id with T = id on the sprime algebra is the identity.
    WeakHopfAlgebra sp = k_sprime();
    LinMap idsp = LinMap::identity(2, sp.base.field);
    CHECK(convolution(convolution(idsp, sp.antipode, sp.base), idsp, sp.base) == idsp);
}

TEST_CASE("weak antipode laws") {
    CHECK(check_weak_antipode(k_sprime()).passed());
    CHECK(check_weak_antipode(k_s3e()).passed());
    CHECK(check_weak_antipode(k_z(2)).passed());  // T(g)=g^{-1}=g here

    // kZ_3 with T = id fails: id*id*id sends g to g^3 = 1.
    WeakHopfAlgebra z3 = k_z(3);
    z3.antipode = LinMap::identity(3, z3.base.field);
    CheckReport rep = check_weak_antipode(z3);
    CHECK_FALSE(rep.passed());
}

TEST_CASE("anti-bialgebra morphism of the antipode") {
    CHECK(check_anti_bialgebra_morphism(k_s3e()).passed());
    CHECK(check_anti_bialgebra_morphism(k_y()).passed());

    // Projection onto the unit is not anti-multiplicative on kZ_2.
    WeakHopfAlgebra z2 = k_z(2);
    LinMap proj(2, 2, z2.base.field);
    proj.set(0, 0, qs(1));
    CheckReport rep;
    z2.antipode = proj;
    rep = check_anti_bialgebra_morphism(z2);
    CHECK_FALSE(rep.passed());
    bool anti_mult_failed = false;
    for (const auto& s : rep.subs) {
        if (s.name == "T-anti-multiplicative" && s.failure_count > 0) anti_mult_failed = true;
    }
    CHECK(anti_mult_failed);
}

TEST_CASE("perfect and coperfect") {
    CHECK(check_perfect(k_s3e()).passed());
    CHECK(check_perfect(k_z(3)).passed());
    CHECK(check_coperfect(k_s3e()).passed());
    CHECK(check_coperfect(dual(k_s3e())).passed());

    WeakHopfAlgebra bad = k_z(2);
    bad.antipode = LinMap(2, 2, bad.base.field);
    bad.antipode.set(0, 0, qs(1));
    bad.antipode.set(0, 1, qs(1));
    bad.antipode.set(1, 1, qs(1));  // T(g) = 1 + g breaks anti-comultiplicativity
    CHECK_FALSE(check_perfect(bad).passed());
}

TEST_CASE("perfect variants") {
    CHECK(check_perfect_variant(k_s3e()).passed());
    CHECK(check_perfect_variant(k_z(3)).passed());

    WeakHopfAlgebra bad = k_s3e();
    bad.antipode = LinMap::identity(7, bad.base.field);  // invertible but wrong
    CHECK_FALSE(check_perfect_variant(bad).passed());
}

TEST_CASE("duality equivalences on the corpus") {
    std::vector<WeakHopfAlgebra> corpus;
    corpus.push_back(k_trivial());
    corpus.push_back(k_sprime());
    corpus.push_back(k_y());
    corpus.push_back(k_z(2));
    corpus.push_back(k_z(3));
    corpus.push_back(k_s3e());
    for (const auto& h : corpus) {
        const bool p = check_perfect(h).passed();
        const bool cp = check_coperfect(h).passed();
        WeakHopfAlgebra hd = dual(h);
        // Duality exchanges perfect and coperfect.
        CHECK(check_coperfect(hd).passed() == p);
        CHECK(check_perfect(hd).passed() == cp);
        // Biperfectness is self-dual.
        CHECK((p && cp) == (check_perfect(hd).passed() && check_coperfect(hd).passed()));
        // Opposite and coopposite preserve the respective properties.
        CHECK(check_perfect(opposite(h)).passed() == p);
        CHECK(check_coperfect(coopposite(h)).passed() == cp);
        // The variant conditions match when T is an invertible anti-morphism.
        CheckReport var = check_perfect_variant(h);
        bool central_variant = true, cop_variant = true;
        for (const auto& s : var.subs) {
            if (s.name == "T*id-central") central_variant = s.passed();
            if (s.name == "variant-coproduct-symmetry") cop_variant = s.passed();
        }
        CHECK(central_variant == p);
        CHECK(cop_variant == cp);
    }
}

TEST_CASE("dual constructions") {
    WeakHopfAlgebra t = dual(k_trivial());
    CHECK(t.base.dim == 1);
    CHECK(check_algebra_axioms(t.base).passed());

    WeakHopfAlgebra z2d = dual(k_z(2));
    CHECK(z2d.base.dim == 2);
    CHECK(check_algebra_axioms(z2d.base).passed());
    CHECK(check_coalgebra_axioms(z2d.base).passed());
    CHECK(check_weak_antipode(z2d).passed());

    WeakHopfAlgebra s3e = k_s3e();
    WeakHopfAlgebra dd = dual(dual(s3e));
    CHECK(same_structure(dd.base, s3e.base));
    CHECK(dd.antipode.mat == s3e.antipode.mat);
}

TEST_CASE("opposite and coopposite") {
    WeakHopfAlgebra y = k_y();
    CHECK(opposite(y).base.mul == y.base.mul);       // commutative
    CHECK(coopposite(k_s3e()).base.comul == k_s3e().base.comul);  // cocommutative

    WeakHopfAlgebra op = opposite(k_s3e());
    CHECK(op.base.mul != k_s3e().base.mul);
    CHECK(check_weak_antipode(op).passed());
    CHECK(check_algebra_axioms(op.base).passed());
}

TEST_CASE("star_cop") {
    WeakHopfAlgebra t = star_cop(k_trivial());
    CHECK(t.base.dim == 1);
    CHECK(check_weak_antipode(t).passed());

    // Cocommutative source: the cop flip does nothing beyond the dual.
    WeakHopfAlgebra z2s = star_cop(k_z(2));
    WeakHopfAlgebra z2d = dual(k_z(2));
    CHECK(z2s.base.mul == z2d.base.mul);
    CHECK(z2s.base.comul == z2d.base.comul);

    // Noncommutative source: the flipped dual coproduct differs somewhere.
    WeakHopfAlgebra s3s = star_cop(k_s3e());
    WeakHopfAlgebra s3d = dual(k_s3e());
    CHECK(s3s.base.mul == s3d.base.mul);
    CHECK(s3s.base.comul != s3d.base.comul);
    CHECK(check_weak_antipode(s3s).passed());
    CHECK(check_perfect(s3s).passed());
    CHECK(check_coperfect(s3s).passed());
}

TEST_CASE("tensor product of weak Hopf algebras") {
    WeakHopfAlgebra h = k_s3e();
    WeakHopfAlgebra hk = tensor_product(h, k_trivial());
    CHECK(same_structure(hk.base, h.base));
    CHECK(hk.antipode.mat == h.antipode.mat);

    WeakHopfAlgebra sp = k_sprime();
    WeakHopfAlgebra a = tensor_product(sp, dual(sp));
    CHECK(a.base.dim == 4);
    CHECK(check_algebra_axioms(a.base).passed());
    CHECK(check_coalgebra_axioms(a.base).passed());
    CHECK(check_almost_bialgebra(a.base).passed());
    CHECK(check_weak_antipode(a).passed());
    CHECK(check_anti_bialgebra_morphism(a).passed());
    CHECK(check_perfect(a).passed());
    CHECK(check_coperfect(a).passed());

    // Commutativity of the tensor square tracks the factors.
    CHECK(algebra_commutative(tensor_product(k_y(), k_z(2)).base));
    CHECK_FALSE(algebra_commutative(tensor_product(k_s3e(), k_z(2)).base));
    CHECK_FALSE(algebra_cocommutative(tensor_product(dual(k_s3e()), k_z(2)).base));
}

TEST_CASE("cached flags") {
    WeakHopfAlgebra h = k_sprime();
    CHECK(flag_perfect(h));
    CHECK(flag_coperfect(h));
    CHECK(flag_anti_morphism(h));
    CHECK(flag_antipode_invertible(h));
    CHECK(flag_bialgebra(h));  // monoid algebras are honest bialgebras
    CHECK(h.flags.is_perfect.has_value());
}

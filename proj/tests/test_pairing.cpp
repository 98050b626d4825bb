#include "doctest.h"
#include "helpers.hpp"
#include "weakhopf/pairing.hpp"

using namespace wha;
using namespace wha::testing;

TEST_CASE("trivial pair") {
    WeakHopfAlgebra t = k_trivial();
    BilinearForm form = canonical_eval_pairing(t);
    CHECK(form.matrix.at({0, 0}).is_one());
    PairCertificate cert = check_weak_hopf_pair(t, t, form);
    CHECK(cert.certified());
    CHECK(cert.kind == PairKind::Pair);
}

TEST_CASE("evaluation form certifies (dual(H), H) as a pair for kZ_2") {
    WeakHopfAlgebra h = k_z(2);
    BilinearForm form = canonical_eval_pairing(h);
    PairCertificate cert = check_weak_hopf_pair(dual(h), h, form);
    CHECK(cert.certified());
}

TEST_CASE("zero form fails non-singularity") {
    WeakHopfAlgebra h = k_z(2);
    BilinearForm zero(2, 2, h.base.field);
    PairCertificate cert = check_weak_hopf_pair(dual(h), h, zero);
    CHECK_FALSE(cert.certified());
    CHECK(cert.reports[0].name == "non-singular");
    CHECK_FALSE(cert.reports[0].passed());
}

TEST_CASE("(star_cop(H), H) is a certified skew-pair") {
    for (const WeakHopfAlgebra& h : {k_sprime(), k_y(), k_z(3), k_s3e()}) {
        BilinearForm form = canonical_eval_pairing(h);
        PairCertificate cert = check_skew_pair(star_cop(h), h, form);
        CHECK(cert.certified());
    }
}

TEST_CASE("plain pair axioms fail against star_cop on a noncommutative base") {
    WeakHopfAlgebra h = k_s3e();
    BilinearForm form = canonical_eval_pairing(h);
    PairCertificate cert = check_weak_hopf_pair(star_cop(h), h, form);
    CHECK_FALSE(cert.certified());
    bool product_axiom_failed = false;
    for (const auto& r : cert.reports) {
        if (r.name == "product-right" && !r.passed()) {
            product_axiom_failed = true;
            CHECK(r.witnesses[0].index.size() == 3);  // failing basis triple
        }
    }
    CHECK(product_axiom_failed);
}

TEST_CASE("skew-pair iff pair with the opposite algebra") {
    for (const WeakHopfAlgebra& h : {k_z(3), k_s3e()}) {
        WeakHopfAlgebra x = star_cop(h);
        BilinearForm form = canonical_eval_pairing(h);
        const bool skew = check_skew_pair(x, h, form).certified();
        const bool with_op = check_weak_hopf_pair(x, opposite(h), form).certified();
        CHECK(skew == with_op);
        CHECK(skew);
    }
}

TEST_CASE("canonical evaluation pairing is the identity and certifies kY") {
    WeakHopfAlgebra y = k_y();
    BilinearForm form = canonical_eval_pairing(y);
    CHECK(form.left_dim == 6);
    CHECK(form.matrix == SparseTensor::identity(6, y.base.field));
    CHECK(check_skew_pair(star_cop(y), y, form).certified());
}

TEST_CASE("skew-pairs of perfect algebras are biperfect") {
    // On the corpus: when (X, A) certifies and both are perfect, both are
    // coperfect as well.
    for (const WeakHopfAlgebra& h : {k_sprime(), k_y(), k_z(2), k_z(3), k_s3e()}) {
        WeakHopfAlgebra x = star_cop(h);
        BilinearForm form = canonical_eval_pairing(h);
        REQUIRE(check_skew_pair(x, h, form).certified());
        REQUIRE(check_perfect(x).passed());
        REQUIRE(check_perfect(h).passed());
        CHECK(check_coperfect(x).passed());
        CHECK(check_coperfect(h).passed());
    }
}

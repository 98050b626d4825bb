#include "weakhopf/pairing.hpp"

#include "weakhopf/errors.hpp"

namespace wha {

namespace {

PairCertificate check_pair_axioms(const WeakHopfAlgebra& x, const WeakHopfAlgebra& a,
                                  const BilinearForm& form, bool skew) {
    if (form.left_dim != x.base.dim || form.right_dim != a.base.dim) {
        throw DimensionMismatchError("form dimensions do not match the paired algebras");
    }
    const FieldSpec f = x.base.field;
    AlgebraOps xo(x.base), ao(a.base);
    MatCols sx = mat_cols(x.antipode);
    MatCols sa_used = skew ? mat_cols(antipode_inverse(a)) : mat_cols(a.antipode);

    PairCertificate cert;
    cert.kind = skew ? PairKind::SkewPair : PairKind::Pair;

    CheckReport nonsing("non-singular");
    if (form.left_dim != form.right_dim) {
        nonsing.add_failure({form.left_dim, form.right_dim}, Scalar::one(f), Scalar::zero(f));
        nonsing.notes.push_back("form must be square");
    } else {
        const std::uint32_t rank = exact_rank(form.matrix);
        if (rank != form.left_dim) {
            nonsing.add_failure({rank}, Scalar::of_int(form.left_dim, f), Scalar::of_int(rank, f));
        }
    }
    cert.reports.push_back(std::move(nonsing));

    // <x, ab> pairing with the coproduct of X (legs swapped in the skew case).
    CheckReport prod_right(skew ? "product-right-skew" : "product-right");
    for (std::uint32_t xi = 0; xi < x.base.dim; ++xi) {
        for (std::uint32_t ai = 0; ai < a.base.dim; ++ai) {
            for (std::uint32_t bi = 0; bi < a.base.dim; ++bi) {
                Scalar lhs = Scalar::zero(f);
                for (const auto& [m, c] : ao.mul_pair(ai, bi)) {
                    lhs += form.matrix.at({xi, m}) * c;
                }
                Scalar rhs = Scalar::zero(f);
                for (const auto& [p, q, c] : xo.comul_in(xi)) {
                    rhs += skew ? form.matrix.at({q, ai}) * form.matrix.at({p, bi}) * c
                                : form.matrix.at({p, ai}) * form.matrix.at({q, bi}) * c;
                }
                if (!(lhs == rhs)) prod_right.add_failure({xi, ai, bi}, lhs, rhs);
            }
        }
    }
    cert.reports.push_back(std::move(prod_right));

    CheckReport unit_right("unit-right");  // <x, 1_A> = eps(x)
    {
        SVec unit_a = sv_from_tensor1(a.base.unit);
        for (std::uint32_t xi = 0; xi < x.base.dim; ++xi) {
            Scalar lhs = Scalar::zero(f);
            for (const auto& [j, c] : unit_a) lhs += form.matrix.at({xi, j}) * c;
            Scalar rhs = x.base.counit.at({xi});
            if (!(lhs == rhs)) unit_right.add_failure({xi}, rhs, lhs);
        }
    }
    cert.reports.push_back(std::move(unit_right));

    CheckReport prod_left("product-left");  // <xy, a> = sum <x,a'><y,a''>
    for (std::uint32_t xi = 0; xi < x.base.dim; ++xi) {
        for (std::uint32_t yi = 0; yi < x.base.dim; ++yi) {
            for (std::uint32_t ai = 0; ai < a.base.dim; ++ai) {
                Scalar lhs = Scalar::zero(f);
                for (const auto& [m, c] : xo.mul_pair(xi, yi)) {
                    lhs += form.matrix.at({m, ai}) * c;
                }
                Scalar rhs = Scalar::zero(f);
                for (const auto& [p, q, c] : ao.comul_in(ai)) {
                    rhs += form.matrix.at({xi, p}) * form.matrix.at({yi, q}) * c;
                }
                if (!(lhs == rhs)) prod_left.add_failure({xi, yi, ai}, lhs, rhs);
            }
        }
    }
    cert.reports.push_back(std::move(prod_left));

    CheckReport unit_left("unit-left");  // <1_X, a> = eps(a)
    {
        SVec unit_x = sv_from_tensor1(x.base.unit);
        for (std::uint32_t ai = 0; ai < a.base.dim; ++ai) {
            Scalar lhs = Scalar::zero(f);
            for (const auto& [i, c] : unit_x) lhs += form.matrix.at({i, ai}) * c;
            Scalar rhs = a.base.counit.at({ai});
            if (!(lhs == rhs)) unit_left.add_failure({ai}, rhs, lhs);
        }
    }
    cert.reports.push_back(std::move(unit_left));

    CheckReport antipode(skew ? "antipode-exchange-skew" : "antipode-exchange");
    for (std::uint32_t xi = 0; xi < x.base.dim; ++xi) {
        SVec sxv = sx.cols[xi];
        for (std::uint32_t ai = 0; ai < a.base.dim; ++ai) {
            Scalar lhs = Scalar::zero(f);
            for (const auto& [m, c] : sxv) lhs += form.matrix.at({m, ai}) * c;
            Scalar rhs = Scalar::zero(f);
            for (const auto& [m, c] : sa_used.cols[ai]) rhs += form.matrix.at({xi, m}) * c;
            if (!(lhs == rhs)) antipode.add_failure({xi, ai}, lhs, rhs);
        }
    }
    cert.reports.push_back(std::move(antipode));

    for (auto& r : cert.reports) r.sort_witnesses();
    return cert;
}

}  // namespace

PairCertificate check_weak_hopf_pair(const WeakHopfAlgebra& x, const WeakHopfAlgebra& a,
                                     const BilinearForm& form) {
    return check_pair_axioms(x, a, form, false);
}

PairCertificate check_skew_pair(const WeakHopfAlgebra& x, const WeakHopfAlgebra& a,
                                const BilinearForm& form) {
    return check_pair_axioms(x, a, form, true);
}

BilinearForm canonical_eval_pairing(const WeakHopfAlgebra& h) {
    antipode_inverse(h);  // callers pair with star_cop(h), which needs T^{-1}
    BilinearForm form(h.base.dim, h.base.dim, h.base.field);
    form.matrix = SparseTensor::identity(h.base.dim, h.base.field);
    return form;
}

}  // namespace wha

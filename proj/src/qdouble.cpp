#include "weakhopf/qdouble.hpp"

#include <map>

#include "weakhopf/errors.hpp"
#include "weakhopf/parallel.hpp"

namespace wha {

namespace {

using Acc = std::map<std::uint64_t, Scalar>;

void acc_add(Acc& m, std::uint64_t k, const Scalar& v) {
    if (v.is_zero()) return;
    auto it = m.find(k);
    if (it == m.end()) {
        m.emplace(k, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) m.erase(it);
    }
}

template <typename DecodeFn>
void compare_acc(CheckReport& rep, const Acc& lhs, const Acc& rhs, const Index& prefix,
                 DecodeFn decode, const FieldSpec& f) {
    auto il = lhs.begin();
    auto ir = rhs.begin();
    auto emit = [&](std::uint64_t key, const Scalar& expected, const Scalar& actual) {
        Index idx = prefix;
        decode(key, idx);
        rep.add_failure(std::move(idx), expected, actual);
    };
    while (il != lhs.end() || ir != rhs.end()) {
        if (ir == rhs.end() || (il != lhs.end() && il->first < ir->first)) {
            emit(il->first, il->second, Scalar::zero(f));
            ++il;
        } else if (il == lhs.end() || ir->first < il->first) {
            emit(ir->first, Scalar::zero(f), ir->second);
            ++ir;
        } else {
            if (!(il->second == ir->second)) emit(il->first, il->second, ir->second);
            ++il;
            ++ir;
        }
    }
}

void compare_svec_rep(CheckReport& rep, const SVec& expected, const SVec& actual,
                      const Index& prefix, const FieldSpec& f) {
    Acc l, r;
    for (const auto& [i, c] : expected) acc_add(l, i, c);
    for (const auto& [i, c] : actual) acc_add(r, i, c);
    compare_acc(rep, l, r, prefix,
                [](std::uint64_t k, Index& idx) { idx.push_back(static_cast<std::uint32_t>(k)); },
                f);
}

// Per-basis action lookups for a quasi-matched pair.
struct ActOps {
    std::vector<std::vector<SVec>> left;   // [a][x] -> SVec over X
    std::vector<std::vector<SVec>> right;  // [a][x] -> SVec over A

    ActOps(const QuasiMatchedPair& p) {
        const std::uint32_t da = p.a.base.dim, dx = p.x.base.dim;
        left.assign(da, std::vector<SVec>(dx));
        right.assign(da, std::vector<SVec>(dx));
        for (const auto& [idx, c] : p.act_left.entries()) {
            left[idx[0]][idx[1]].emplace_back(idx[2], c);
        }
        for (const auto& [idx, c] : p.act_right.entries()) {
            right[idx[0]][idx[1]].emplace_back(idx[2], c);
        }
        for (auto& row : left)
            for (auto& v : row) sv_normalize(v);
        for (auto& row : right)
            for (auto& v : row) sv_normalize(v);
    }

    SVec apply_left(const SVec& av, const SVec& xv) const {
        SVec out;
        for (const auto& [j, ca] : av) {
            for (const auto& [i, cx] : xv) sv_accumulate(out, left[j][i], ca * cx);
        }
        return out;
    }
    SVec apply_right(const SVec& av, const SVec& xv) const {
        SVec out;
        for (const auto& [j, ca] : av) {
            for (const auto& [i, cx] : xv) sv_accumulate(out, right[j][i], ca * cx);
        }
        return out;
    }
};

}  // namespace

QuasiMatchedPair derive_actions(const WeakHopfAlgebra& x, const WeakHopfAlgebra& a,
                                const BilinearForm& form) {
    antipode_inverse(a);
    PairCertificate cert = check_skew_pair(x, a, form);
    if (!cert.certified()) {
        throw SkewPairNotCertifiedError("derive_actions: (X, A) is not a certified skew-pair");
    }
    if (!flag_perfect(x) || !flag_perfect(a)) {
        throw SkewPairNotCertifiedError("derive_actions requires both algebras to be perfect");
    }
    const FieldSpec f = x.base.field;
    const std::uint32_t dx = x.base.dim, da = a.base.dim;
    AlgebraOps xo(x.base), ao(a.base);
    MatCols sx = mat_cols(x.antipode);
    MatCols sainv = mat_cols(antipode_inverse(a));

    QuasiMatchedPair p;
    p.x = x;
    p.a = a;
    p.act_left = SparseTensor({da, dx, dx}, f);
    p.act_right = SparseTensor({da, dx, da}, f);

    // a |> x = sum <x' S_X(x'''), a> x''
    for (std::uint32_t i = 0; i < dx; ++i) {
        for (const auto& [pp, q, r, c] : xo.comul3_in(i)) {
            SVec w = xo.mul_basis_vec(pp, sx.cols[r]);
            if (w.empty()) continue;
            for (std::uint32_t j = 0; j < da; ++j) {
                Scalar val = Scalar::zero(f);
                for (const auto& [m, cm] : w) val += form.matrix.at({m, j}) * cm;
                val = val * c;
                if (!val.is_zero()) p.act_left.add({j, i, q}, val);
            }
        }
    }
    // a <| x = sum <x, S_A^{-1}(a''') a'> a''
    for (std::uint32_t j = 0; j < da; ++j) {
        for (const auto& [pp, q, r, c] : ao.comul3_in(j)) {
            SVec v = ao.mul_vec_basis(sainv.cols[r], pp);
            if (v.empty()) continue;
            for (std::uint32_t i = 0; i < dx; ++i) {
                Scalar val = Scalar::zero(f);
                for (const auto& [m, cm] : v) val += form.matrix.at({i, m}) * cm;
                val = val * c;
                if (!val.is_zero()) p.act_right.add({j, i, q}, val);
            }
        }
    }
    return p;
}

CheckReport check_quasi_matched(const QuasiMatchedPair& p) {
    const FieldSpec f = p.x.base.field;
    AlgebraOps xo(p.x.base), ao(p.a.base);
    ActOps act(p);
    const std::uint32_t dx = p.x.base.dim, da = p.a.base.dim;
    SVec unit_x = sv_from_tensor1(p.x.base.unit);
    SVec unit_a = sv_from_tensor1(p.a.base.unit);

    CheckReport rep("quasi-matched-pair");

    CheckReport xmod("X-left-module");
    for (std::uint32_t ja = 0; ja < da; ++ja) {
        SVec ea = sv_single(ja, Scalar::one(f));
        for (std::uint32_t jb = 0; jb < da; ++jb) {
            for (std::uint32_t i = 0; i < dx; ++i) {
                SVec lhs = act.apply_left(ao.mul_pair(ja, jb), sv_single(i, Scalar::one(f)));
                SVec rhs = act.apply_left(ea, act.left[jb][i]);
                if (!sv_equal(lhs, rhs)) compare_svec_rep(xmod, lhs, rhs, {ja, jb, i}, f);
            }
        }
    }
    for (std::uint32_t i = 0; i < dx; ++i) {
        SVec lhs = act.apply_left(unit_a, sv_single(i, Scalar::one(f)));
        SVec rhs = sv_single(i, Scalar::one(f));
        if (!sv_equal(lhs, rhs)) compare_svec_rep(xmod, rhs, lhs, {da, da, i}, f);
    }
    rep.merge_sub(std::move(xmod));

    CheckReport amod("A-right-module");
    for (std::uint32_t ja = 0; ja < da; ++ja) {
        SVec ea = sv_single(ja, Scalar::one(f));
        for (std::uint32_t i = 0; i < dx; ++i) {
            for (std::uint32_t j = 0; j < dx; ++j) {
                SVec lhs = act.apply_right(ea, xo.mul_pair(i, j));
                SVec rhs = act.apply_right(act.right[ja][i], sv_single(j, Scalar::one(f)));
                if (!sv_equal(lhs, rhs)) compare_svec_rep(amod, lhs, rhs, {ja, i, j}, f);
            }
        }
        SVec lhs = act.apply_right(ea, unit_x);
        if (!sv_equal(lhs, ea)) compare_svec_rep(amod, ea, lhs, {ja, dx, dx}, f);
    }
    rep.merge_sub(std::move(amod));

    // Coproduct compatibility of both actions (quasi-module-coalgebra laws).
    CheckReport lcop("left-action-coproduct");
    for (std::uint32_t ja = 0; ja < da; ++ja) {
        for (std::uint32_t i = 0; i < dx; ++i) {
            Acc lhs, rhs;
            for (const auto& [m, c] : act.left[ja][i]) {
                for (const auto& [u, v, c2] : xo.comul_in(m)) {
                    acc_add(lhs, static_cast<std::uint64_t>(u) * dx + v, c * c2);
                }
            }
            for (const auto& [pa, qa, ca] : ao.comul_in(ja)) {
                for (const auto& [px, qx, cx] : xo.comul_in(i)) {
                    const Scalar cc = ca * cx;
                    for (const auto& [u, cu] : act.left[pa][px]) {
                        for (const auto& [v, cv] : act.left[qa][qx]) {
                            acc_add(rhs, static_cast<std::uint64_t>(u) * dx + v, cc * cu * cv);
                        }
                    }
                }
            }
            compare_acc(lcop, lhs, rhs, {ja, i},
                        [dx](std::uint64_t k, Index& idx) {
                            idx.push_back(static_cast<std::uint32_t>(k / dx));
                            idx.push_back(static_cast<std::uint32_t>(k % dx));
                        },
                        f);
        }
    }
    rep.merge_sub(std::move(lcop));

    CheckReport rcop("right-action-coproduct");
    for (std::uint32_t ja = 0; ja < da; ++ja) {
        for (std::uint32_t i = 0; i < dx; ++i) {
            Acc lhs, rhs;
            for (const auto& [m, c] : act.right[ja][i]) {
                for (const auto& [u, v, c2] : ao.comul_in(m)) {
                    acc_add(lhs, static_cast<std::uint64_t>(u) * da + v, c * c2);
                }
            }
            for (const auto& [pa, qa, ca] : ao.comul_in(ja)) {
                for (const auto& [px, qx, cx] : xo.comul_in(i)) {
                    const Scalar cc = ca * cx;
                    for (const auto& [u, cu] : act.right[pa][px]) {
                        for (const auto& [v, cv] : act.right[qa][qx]) {
                            acc_add(rhs, static_cast<std::uint64_t>(u) * da + v, cc * cu * cv);
                        }
                    }
                }
            }
            compare_acc(rcop, lhs, rhs, {ja, i},
                        [da](std::uint64_t k, Index& idx) {
                            idx.push_back(static_cast<std::uint32_t>(k / da));
                            idx.push_back(static_cast<std::uint32_t>(k % da));
                        },
                        f);
        }
    }
    rep.merge_sub(std::move(rcop));

    CheckReport eq1("left-action-on-products");
    for (std::uint32_t ja = 0; ja < da; ++ja) {
        SVec ea = sv_single(ja, Scalar::one(f));
        for (std::uint32_t i = 0; i < dx; ++i) {
            for (std::uint32_t j = 0; j < dx; ++j) {
                SVec lhs = act.apply_left(ea, xo.mul_pair(i, j));
                SVec rhs;
                for (const auto& [pa, qa, ca] : ao.comul_in(ja)) {
                    for (const auto& [px, qx, cx] : xo.comul_in(i)) {
                        SVec inner =
                            act.apply_left(act.right[qa][qx], sv_single(j, Scalar::one(f)));
                        sv_accumulate(rhs, xo.mul_vec(act.left[pa][px], inner), ca * cx);
                    }
                }
                if (!sv_equal(lhs, rhs)) compare_svec_rep(eq1, lhs, rhs, {ja, i, j}, f);
            }
        }
    }
    rep.merge_sub(std::move(eq1));

    CheckReport eq2("left-action-on-unit");
    for (std::uint32_t ja = 0; ja < da; ++ja) {
        SVec lhs = act.apply_left(sv_single(ja, Scalar::one(f)), unit_x);
        SVec rhs = sv_scaled(unit_x, sv_coeff(sv_from_tensor1(p.a.base.counit), ja, f));
        if (!sv_equal(lhs, rhs)) compare_svec_rep(eq2, rhs, lhs, {ja}, f);
    }
    rep.merge_sub(std::move(eq2));

    CheckReport eq3("right-action-on-products");
    for (std::uint32_t ja = 0; ja < da; ++ja) {
        SVec ea = sv_single(ja, Scalar::one(f));
        for (std::uint32_t jb = 0; jb < da; ++jb) {
            for (std::uint32_t i = 0; i < dx; ++i) {
                SVec lhs = act.apply_right(ao.mul_pair(ja, jb), sv_single(i, Scalar::one(f)));
                SVec rhs;
                for (const auto& [pb, qb, cb] : ao.comul_in(jb)) {
                    for (const auto& [px, qx, cx] : xo.comul_in(i)) {
                        SVec s = act.apply_right(ea, act.left[pb][px]);
                        sv_accumulate(rhs, ao.mul_vec(s, act.right[qb][qx]), cb * cx);
                    }
                }
                if (!sv_equal(lhs, rhs)) compare_svec_rep(eq3, lhs, rhs, {ja, jb, i}, f);
            }
        }
    }
    rep.merge_sub(std::move(eq3));

    CheckReport eq4("right-action-on-unit");
    for (std::uint32_t i = 0; i < dx; ++i) {
        SVec lhs = act.apply_right(unit_a, sv_single(i, Scalar::one(f)));
        SVec rhs = sv_scaled(unit_a, sv_coeff(sv_from_tensor1(p.x.base.counit), i, f));
        if (!sv_equal(lhs, rhs)) compare_svec_rep(eq4, rhs, lhs, {i}, f);
    }
    rep.merge_sub(std::move(eq4));

    CheckReport eq5("action-interchange");
    for (std::uint32_t ja = 0; ja < da; ++ja) {
        for (std::uint32_t i = 0; i < dx; ++i) {
            Acc lhs, rhs;
            for (const auto& [pa, qa, ca] : ao.comul_in(ja)) {
                for (const auto& [px, qx, cx] : xo.comul_in(i)) {
                    const Scalar cc = ca * cx;
                    for (const auto& [u, cu] : act.right[pa][px]) {
                        for (const auto& [v, cv] : act.left[qa][qx]) {
                            acc_add(lhs, static_cast<std::uint64_t>(u) * dx + v, cc * cu * cv);
                        }
                    }
                    for (const auto& [u, cu] : act.right[qa][qx]) {
                        for (const auto& [v, cv] : act.left[pa][px]) {
                            acc_add(rhs, static_cast<std::uint64_t>(u) * dx + v, cc * cu * cv);
                        }
                    }
                }
            }
            compare_acc(eq5, lhs, rhs, {ja, i},
                        [dx](std::uint64_t k, Index& idx) {
                            idx.push_back(static_cast<std::uint32_t>(k / dx));
                            idx.push_back(static_cast<std::uint32_t>(k % dx));
                        },
                        f);
        }
    }
    rep.merge_sub(std::move(eq5));

    for (auto& s : rep.subs) s.sort_witnesses();
    return rep;
}

QuasiBicrossedProduct build_quasi_bicrossed(const QuasiMatchedPair& p) {
    CheckReport pre = check_quasi_matched(p);
    if (!pre.passed()) {
        throw QuasiMatchedFailedError("quasi-matched pair conditions fail: " + pre.summary());
    }
    const FieldSpec f = p.x.base.field;
    AlgebraOps xo(p.x.base), ao(p.a.base);
    ActOps act(p);
    const std::uint32_t dx = p.x.base.dim, da = p.a.base.dim;
    const std::uint32_t dim = dx * da;

    QuasiBicrossedProduct out;
    out.dim_x = dx;
    out.dim_a = da;
    out.pair = std::make_shared<QuasiMatchedPair>(p);
    out.alg.field = f;
    out.alg.dim = dim;
    out.alg.basis.reserve(dim);
    for (std::uint32_t i = 0; i < dx; ++i) {
        for (std::uint32_t j = 0; j < da; ++j) {
            out.alg.basis.push_back(p.x.base.basis[i] + "\xE2\x88\x9E" + p.a.base.basis[j]);
        }
    }

    out.alg.mul = SparseTensor({dim, dim, dim}, f);
    for (std::uint32_t i1 = 0; i1 < dx; ++i1) {
        for (std::uint32_t j1 = 0; j1 < da; ++j1) {
            for (std::uint32_t i2 = 0; i2 < dx; ++i2) {
                for (std::uint32_t j2 = 0; j2 < da; ++j2) {
                    for (const auto& [pa, qa, ca] : ao.comul_in(j1)) {
                        for (const auto& [px, qx, cx] : xo.comul_in(i2)) {
                            SVec left = xo.mul_basis_vec(i1, act.left[pa][px]);
                            if (left.empty()) continue;
                            SVec right = ao.mul_vec_basis(act.right[qa][qx], j2);
                            if (right.empty()) continue;
                            const Scalar cc = ca * cx;
                            for (const auto& [lx, cl] : left) {
                                for (const auto& [ra, cr] : right) {
                                    out.alg.mul.add(
                                        {i1 * da + j1, i2 * da + j2, lx * da + ra},
                                        cc * cl * cr);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    out.alg.comul = SparseTensor({dim, dim, dim}, f);
    for (std::uint32_t i = 0; i < dx; ++i) {
        for (std::uint32_t j = 0; j < da; ++j) {
            for (const auto& [px, qx, cx] : xo.comul_in(i)) {
                for (const auto& [pa, qa, ca] : ao.comul_in(j)) {
                    out.alg.comul.add({i * da + j, px * da + pa, qx * da + qa}, cx * ca);
                }
            }
        }
    }

    out.alg.unit = SparseTensor({dim}, f);
    for (const auto& [ix, cx] : sv_from_tensor1(p.x.base.unit)) {
        for (const auto& [ja, ca] : sv_from_tensor1(p.a.base.unit)) {
            out.alg.unit.add({ix * da + ja}, cx * ca);
        }
    }
    out.alg.counit = SparseTensor({dim}, f);
    SVec ex = sv_from_tensor1(p.x.base.counit);
    SVec ea = sv_from_tensor1(p.a.base.counit);
    for (const auto& [ix, cx] : ex) {
        for (const auto& [ja, ca] : ea) {
            out.alg.counit.add({ix * da + ja}, cx * ca);
        }
    }
    return out;
}

CheckReport check_double_embeddings(const QuasiBicrossedProduct& d, const WeakHopfAlgebra& x,
                                    const WeakHopfAlgebra& a) {
    const FieldSpec f = d.alg.field;
    AlgebraOps dops(d.alg);
    AlgebraOps xo(x.base), ao(a.base);
    const std::uint32_t dx = d.dim_x, da = d.dim_a;
    SVec unit_x = sv_from_tensor1(x.base.unit);
    SVec unit_a = sv_from_tensor1(a.base.unit);

    auto embed_x = [&](std::uint32_t i) {
        SVec v;
        for (const auto& [j, c] : unit_a) v.emplace_back(i * da + j, c);
        sv_normalize(v);
        return v;
    };
    auto embed_a = [&](std::uint32_t j) {
        SVec v;
        for (const auto& [i, c] : unit_x) v.emplace_back(i * da + j, c);
        sv_normalize(v);
        return v;
    };
    auto embed_vec_x = [&](const SVec& xv) {
        SVec v;
        for (const auto& [i, c] : xv) sv_accumulate(v, embed_x(i), c);
        return v;
    };
    auto embed_vec_a = [&](const SVec& av) {
        SVec v;
        for (const auto& [j, c] : av) sv_accumulate(v, embed_a(j), c);
        return v;
    };

    CheckReport rep("bicrossed-embeddings");
    CheckReport ix("x-embedding-multiplicative");
    for (std::uint32_t i = 0; i < dx; ++i) {
        for (std::uint32_t j = 0; j < dx; ++j) {
            SVec lhs = dops.mul_vec(embed_x(i), embed_x(j));
            SVec rhs = embed_vec_x(xo.mul_pair(i, j));
            if (!sv_equal(lhs, rhs)) compare_svec_rep(ix, rhs, lhs, {i, j}, f);
        }
    }
    rep.merge_sub(std::move(ix));
    CheckReport ia("a-embedding-multiplicative");
    for (std::uint32_t i = 0; i < da; ++i) {
        for (std::uint32_t j = 0; j < da; ++j) {
            SVec lhs = dops.mul_vec(embed_a(i), embed_a(j));
            SVec rhs = embed_vec_a(ao.mul_pair(i, j));
            if (!sv_equal(lhs, rhs)) compare_svec_rep(ia, rhs, lhs, {i, j}, f);
        }
    }
    rep.merge_sub(std::move(ia));
    CheckReport fact("factorization");
    for (std::uint32_t i = 0; i < dx; ++i) {
        for (std::uint32_t j = 0; j < da; ++j) {
            SVec lhs = dops.mul_vec(embed_x(i), embed_a(j));
            SVec rhs = sv_single(i * da + j, Scalar::one(f));
            if (!sv_equal(lhs, rhs)) compare_svec_rep(fact, rhs, lhs, {i, j}, f);
        }
    }
    rep.merge_sub(std::move(fact));
    for (auto& s : rep.subs) s.sort_witnesses();
    return rep;
}

// -- lazy engine ----------------------------------------------------------

QuantumDouble::QuantumDouble(const WeakHopfAlgebra& h)
    : h_(h),
      ops_(h_.base),
      t_(mat_cols(h_.antipode)),
      tinv_(mat_cols(antipode_inverse(h_))),
      t_rows_(mat_cols(h_.antipode.transpose())),
      unit_x_(sv_from_tensor1(h_.base.counit)),
      unit_h_(sv_from_tensor1(h_.base.unit)),
      n_(h_.base.dim) {}

SVec QuantumDouble::conj_functional(const SVec& g, const SVec& left, std::uint32_t right) const {
    SVec h;
    for (const auto& [l, cl] : left) {
        for (const auto& [k, gk] : g) {
            const Scalar clgk = cl * gk;
            for (const auto& [t, c1] : ops_.mul_left_out(l, k)) {
                for (const auto& [m, c2] : ops_.mul_right_out(right, t)) {
                    h.emplace_back(m, clgk * c1 * c2);
                }
            }
        }
    }
    sv_normalize(h);
    return h;
}

QuantumDouble::Elem QuantumDouble::mul_mono(const Mono& lhs, const Mono& rhs) const {
    Elem out;
    for (const auto& [j, ca] : lhs.a) {
        for (const auto& [p, q, r, c3] : ops_.comul3_in(j)) {
            SVec hf = conj_functional(rhs.f, tinv_.cols[r], p);
            if (hf.empty()) continue;
            SVec fh = ops_.dual_mul(lhs.f, hf);
            if (fh.empty()) continue;
            SVec ab = ops_.mul_basis_vec(q, rhs.a);
            if (ab.empty()) continue;
            out.push_back(Mono{sv_scaled(fh, ca * c3), std::move(ab)});
        }
    }
    return out;
}

QuantumDouble::Elem QuantumDouble::mul_elem(const Elem& lhs, const Elem& rhs) const {
    Elem out;
    for (const auto& a : lhs) {
        for (const auto& b : rhs) {
            Elem prod = mul_mono(a, b);
            out.insert(out.end(), std::make_move_iterator(prod.begin()),
                       std::make_move_iterator(prod.end()));
        }
    }
    return out;
}

SVec QuantumDouble::expand(const Elem& e) const {
    SVec out;
    for (const auto& m : e) {
        for (const auto& [u, cf] : m.f) {
            for (const auto& [v, cv] : m.a) {
                out.emplace_back(u * n_ + v, cf * cv);
            }
        }
    }
    sv_normalize(out);
    return out;
}

QuantumDouble::Mono QuantumDouble::basis_mono(std::uint32_t d) const {
    const FieldSpec& f = h_.base.field;
    return Mono{sv_single(d / n_, Scalar::one(f)), sv_single(d % n_, Scalar::one(f))};
}

QuantumDouble::Mono QuantumDouble::unit_mono() const { return Mono{unit_x_, unit_h_}; }

QuantumDouble::Mono QuantumDouble::r_left(std::uint32_t i) const {
    return Mono{unit_x_, sv_single(i, Scalar::one(h_.base.field))};
}

QuantumDouble::Mono QuantumDouble::r_right(std::uint32_t i) const {
    return Mono{sv_single(i, Scalar::one(h_.base.field)), unit_h_};
}

QuantumDouble::Mono QuantumDouble::rbar_right(std::uint32_t i) const {
    return Mono{t_rows_.cols[i], unit_h_};
}

std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>> QuantumDouble::comul_basis(
    std::uint32_t d) const {
    const std::uint32_t u = d / n_, v = d % n_;
    std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>> out;
    for (const auto& [i, j, c] : ops_.mul_out(u)) {
        for (const auto& [p, q, c2] : ops_.comul_in(v)) {
            out.emplace_back(j * n_ + p, i * n_ + q, c * c2);
        }
    }
    return out;
}

CheckReport QuantumDouble::check_quasi_cocommutative(std::uint64_t max_terms) const {
    const FieldSpec& f = h_.base.field;
    const std::uint32_t n = n_;
    const std::uint32_t dim = dim_d();
    CheckReport rep("quasi-cocommutative");

    auto table = [&](bool basis_on_left, bool with_r_left) {
        std::vector<SVec> out(static_cast<std::size_t>(dim) * n);
        parallel_for(dim, [&](std::uint32_t d) {
            Mono bm = basis_mono(d);
            for (std::uint32_t i = 0; i < n; ++i) {
                Mono r = with_r_left ? r_left(i) : r_right(i);
                Elem e = basis_on_left ? mul_mono(bm, r) : mul_mono(r, bm);
                out[static_cast<std::size_t>(d) * n + i] = expand(e);
            }
        });
        return out;
    };
    std::vector<SVec> d_r1 = table(true, true);
    std::vector<SVec> d_r2 = table(true, false);
    std::vector<SVec> r1_d = table(false, true);
    std::vector<SVec> r2_d = table(false, false);

    std::uint64_t inserted = 0;
    for (std::uint32_t x = 0; x < dim; ++x) {
        Acc lhs, rhs;
        for (const auto& [d1, d2, c] : comul_basis(x)) {
            for (std::uint32_t i = 0; i < n; ++i) {
                for (const auto& [k1, v1] : d_r1[static_cast<std::size_t>(d2) * n + i]) {
                    const Scalar cv1 = c * v1;
                    for (const auto& [k2, v2] : d_r2[static_cast<std::size_t>(d1) * n + i]) {
                        acc_add(lhs, static_cast<std::uint64_t>(k1) * dim + k2, cv1 * v2);
                        ++inserted;
                    }
                }
                for (const auto& [k1, v1] : r1_d[static_cast<std::size_t>(d1) * n + i]) {
                    const Scalar cv1 = c * v1;
                    for (const auto& [k2, v2] : r2_d[static_cast<std::size_t>(d2) * n + i]) {
                        acc_add(rhs, static_cast<std::uint64_t>(k1) * dim + k2, cv1 * v2);
                        ++inserted;
                    }
                }
                if (inserted > max_terms) {
                    throw GuardExceededError("quasi-cocommutativity expansion exceeds max-terms");
                }
            }
        }
        compare_acc(rep, lhs, rhs, {x},
                    [dim](std::uint64_t k, Index& idx) {
                        idx.push_back(static_cast<std::uint32_t>(k / dim));
                        idx.push_back(static_cast<std::uint32_t>(k % dim));
                    },
                    f);
    }
    rep.notes.push_back("engine: sparse-monomial");
    return rep;
}

CheckReport QuantumDouble::check_qybe(std::uint64_t max_terms) const {
    const FieldSpec& f = h_.base.field;
    const std::uint32_t n = n_;
    const std::uint32_t dim = dim_d();
    CheckReport rep("qybe");
    const Elem unit_e{unit_mono()};
    auto elem_of = [](Mono m) { return Elem{std::move(m)}; };

    // Leg values of ((R12*R13)*R23) and ((R23*R13)*R12), cached per index pair.
    std::vector<SVec> l1(static_cast<std::size_t>(n) * n), l2(l1.size()), l3(l1.size()),
        g1(l1.size()), g2(l1.size()), g3(l1.size());
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
            const std::size_t key = static_cast<std::size_t>(i) * n + j;
            l1[key] = expand(mul_elem(mul_mono(r_left(i), r_left(j)), unit_e));
            l2[key] = expand(mul_elem(mul_mono(r_right(i), unit_mono()), elem_of(r_left(j))));
            l3[key] = expand(mul_elem(mul_elem(unit_e, elem_of(r_right(i))), elem_of(r_right(j))));
            g1[key] = expand(mul_elem(mul_elem(unit_e, elem_of(r_left(i))), elem_of(r_left(j))));
            g2[key] = expand(mul_elem(mul_mono(r_left(i), unit_mono()), elem_of(r_right(j))));
            g3[key] = expand(mul_elem(mul_mono(r_right(i), r_right(j)), unit_e));
        }
    }

    // Bucket the triple-tensor comparison by the first-leg coordinate.
    std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> lhs_by_d1(dim), rhs_by_d1(dim);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
            for (const auto& [d1, v] : l1[static_cast<std::size_t>(i) * n + j]) {
                lhs_by_d1[d1].emplace_back(i * n + j, v);
            }
            for (const auto& [d1, v] : g1[static_cast<std::size_t>(j) * n + i]) {
                rhs_by_d1[d1].emplace_back(j * n + i, v);
            }
        }
    }

    std::uint64_t inserted = 0;
    for (std::uint32_t d1 = 0; d1 < dim; ++d1) {
        Acc lhs, rhs;
        for (const auto& [pk, v] : lhs_by_d1[d1]) {
            const std::uint32_t i = pk / n, j = pk % n;
            for (std::uint32_t k = 0; k < n; ++k) {
                for (const auto& [c2, v2] : l2[static_cast<std::size_t>(i) * n + k]) {
                    const Scalar vv2 = v * v2;
                    for (const auto& [c3, v3] : l3[static_cast<std::size_t>(j) * n + k]) {
                        acc_add(lhs, static_cast<std::uint64_t>(c2) * dim + c3, vv2 * v3);
                        ++inserted;
                    }
                }
            }
        }
        for (const auto& [pk, v] : rhs_by_d1[d1]) {
            const std::uint32_t j = pk / n, i = pk % n;
            for (std::uint32_t k = 0; k < n; ++k) {
                for (const auto& [c2, v2] : g2[static_cast<std::size_t>(k) * n + i]) {
                    const Scalar vv2 = v * v2;
                    for (const auto& [c3, v3] : g3[static_cast<std::size_t>(k) * n + j]) {
                        acc_add(rhs, static_cast<std::uint64_t>(c2) * dim + c3, vv2 * v3);
                        ++inserted;
                    }
                }
            }
        }
        if (inserted > max_terms) {
            throw GuardExceededError("triple-tensor expansion exceeds max-terms");
        }
        compare_acc(rep, lhs, rhs, {d1},
                    [dim](std::uint64_t k, Index& idx) {
                        idx.push_back(static_cast<std::uint32_t>(k / dim));
                        idx.push_back(static_cast<std::uint32_t>(k % dim));
                    },
                    f);
    }
    rep.notes.push_back("engine: sparse-monomial");
    return rep;
}

// -- materialized double ---------------------------------------------------

QuasiBicrossedProduct quantum_double(const WeakHopfAlgebra& h, bool force,
                                     std::uint64_t max_terms) {
    antipode_inverse(h);
    if (!force && !(flag_perfect(h) && flag_coperfect(h))) {
        throw NotBiperfectError("quantum double requires a biperfect weak Hopf algebra");
    }
    QuantumDouble engine(h);
    const std::uint32_t n = engine.dim_h();
    const std::uint32_t dim = engine.dim_d();
    if (static_cast<std::uint64_t>(dim) * dim > max_terms) {
        throw GuardExceededError("double of dimension " + std::to_string(dim) +
                                 " exceeds max-terms for materialization");
    }
    const FieldSpec f = h.base.field;

    QuasiBicrossedProduct out;
    out.dim_x = n;
    out.dim_a = n;
    out.source_h = std::make_shared<WeakHopfAlgebra>(h);
    out.alg.field = f;
    out.alg.dim = dim;
    out.alg.basis.reserve(dim);
    for (std::uint32_t u = 0; u < n; ++u) {
        for (std::uint32_t v = 0; v < n; ++v) {
            out.alg.basis.push_back("cop:" + h.base.basis[u] + "^*\xE2\x88\x9E" +
                                    h.base.basis[v]);
        }
    }

    out.alg.mul = SparseTensor({dim, dim, dim}, f);
    for (std::uint32_t d1 = 0; d1 < dim; ++d1) {
        QuantumDouble::Mono m1 = engine.basis_mono(d1);
        for (std::uint32_t d2 = 0; d2 < dim; ++d2) {
            SVec prod = engine.expand(engine.mul_mono(m1, engine.basis_mono(d2)));
            for (const auto& [k, c] : prod) out.alg.mul.add({d1, d2, k}, c);
        }
    }
    out.alg.comul = SparseTensor({dim, dim, dim}, f);
    for (std::uint32_t d = 0; d < dim; ++d) {
        for (const auto& [p, q, c] : engine.comul_basis(d)) out.alg.comul.add({d, p, q}, c);
    }
    out.alg.unit = SparseTensor({dim}, f);
    {
        SVec u = engine.expand({engine.unit_mono()});
        for (const auto& [k, c] : u) out.alg.unit.set({k}, c);
    }
    out.alg.counit = SparseTensor({dim}, f);
    {
        SVec unit_h = sv_from_tensor1(h.base.unit);
        SVec counit_h = sv_from_tensor1(h.base.counit);
        for (const auto& [u, cu] : unit_h) {
            for (const auto& [v, cv] : counit_h) {
                out.alg.counit.add({u * n + v}, cu * cv);
            }
        }
    }
    return out;
}

QuasiRMatrix r_matrix(const QuasiBicrossedProduct& d) {
    if (!d.source_h) {
        throw MissingProvenanceError("r-matrix needs a double built from a source algebra");
    }
    const WeakHopfAlgebra& h = *d.source_h;
    const FieldSpec f = h.base.field;
    const std::uint32_t n = h.base.dim;
    const std::uint32_t dim = n * n;
    QuasiRMatrix r;
    r.monomials = n;
    r.tensor = SparseTensor({dim, dim}, f);
    SVec counit_h = sv_from_tensor1(h.base.counit);
    SVec unit_h = sv_from_tensor1(h.base.unit);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (const auto& [u, cu] : counit_h) {
            for (const auto& [m, cm] : unit_h) {
                r.tensor.add({u * n + i, i * n + m}, cu * cm);
            }
        }
    }
    return r;
}

QuasiRMatrix r_bar(const QuasiBicrossedProduct& d) {
    if (!d.source_h) {
        throw MissingProvenanceError("r-bar needs a double built from a source algebra");
    }
    const WeakHopfAlgebra& h = *d.source_h;
    const FieldSpec f = h.base.field;
    const std::uint32_t n = h.base.dim;
    const std::uint32_t dim = n * n;
    QuasiRMatrix r;
    r.monomials = n;
    r.tensor = SparseTensor({dim, dim}, f);
    SVec counit_h = sv_from_tensor1(h.base.counit);
    SVec unit_h = sv_from_tensor1(h.base.unit);
    MatCols t_rows = mat_cols(h.antipode.transpose());
    for (std::uint32_t i = 0; i < n; ++i) {
        for (const auto& [u, cu] : counit_h) {
            for (const auto& [m, ct] : t_rows.cols[i]) {  // e_i^* o T = sum T[i,m] e_m^*
                for (const auto& [w, cw] : unit_h) {
                    r.tensor.add({u * n + i, m * n + w}, cu * ct * cw);
                }
            }
        }
    }
    return r;
}

namespace {

Acc acc_from_r(const QuasiRMatrix& r, std::uint64_t dim) {
    Acc out;
    for (const auto& [idx, v] : r.tensor.entries()) {
        acc_add(out, static_cast<std::uint64_t>(idx[0]) * dim + idx[1], v);
    }
    return out;
}

Acc mul_acc2(const AlgebraOps& dops, const Acc& a, const Acc& b, std::uint64_t dim,
             std::uint64_t max_terms) {
    Acc out;
    std::uint64_t inserted = 0;
    for (const auto& [ka, va] : a) {
        const std::uint32_t a1 = static_cast<std::uint32_t>(ka / dim);
        const std::uint32_t a2 = static_cast<std::uint32_t>(ka % dim);
        for (const auto& [kb, vb] : b) {
            const std::uint32_t b1 = static_cast<std::uint32_t>(kb / dim);
            const std::uint32_t b2 = static_cast<std::uint32_t>(kb % dim);
            const SVec& m1 = dops.mul_pair(a1, b1);
            if (m1.empty()) continue;
            const SVec& m2 = dops.mul_pair(a2, b2);
            if (m2.empty()) continue;
            const Scalar vv = va * vb;
            for (const auto& [o1, c1] : m1) {
                for (const auto& [o2, c2] : m2) {
                    acc_add(out, static_cast<std::uint64_t>(o1) * dim + o2, vv * c1 * c2);
                    if (++inserted > max_terms) {
                        throw GuardExceededError("pairwise tensor expansion exceeds max-terms");
                    }
                }
            }
        }
    }
    return out;
}

Acc mul_acc3(const AlgebraOps& dops, const Acc& a, const Acc& b, std::uint64_t dim,
             std::uint64_t max_terms) {
    Acc out;
    std::uint64_t inserted = 0;
    for (const auto& [ka, va] : a) {
        const std::uint32_t a1 = static_cast<std::uint32_t>(ka / (dim * dim));
        const std::uint32_t a2 = static_cast<std::uint32_t>((ka / dim) % dim);
        const std::uint32_t a3 = static_cast<std::uint32_t>(ka % dim);
        for (const auto& [kb, vb] : b) {
            const std::uint32_t b1 = static_cast<std::uint32_t>(kb / (dim * dim));
            const std::uint32_t b2 = static_cast<std::uint32_t>((kb / dim) % dim);
            const std::uint32_t b3 = static_cast<std::uint32_t>(kb % dim);
            const SVec& m1 = dops.mul_pair(a1, b1);
            if (m1.empty()) continue;
            const SVec& m2 = dops.mul_pair(a2, b2);
            if (m2.empty()) continue;
            const SVec& m3 = dops.mul_pair(a3, b3);
            if (m3.empty()) continue;
            const Scalar vv = va * vb;
            for (const auto& [o1, c1] : m1) {
                const Scalar vc1 = vv * c1;
                for (const auto& [o2, c2] : m2) {
                    const Scalar vc12 = vc1 * c2;
                    for (const auto& [o3, c3] : m3) {
                        acc_add(out, (static_cast<std::uint64_t>(o1) * dim + o2) * dim + o3,
                                vc12 * c3);
                        if (++inserted > max_terms) {
                            throw GuardExceededError(
                                "triple tensor expansion exceeds max-terms");
                        }
                    }
                }
            }
        }
    }
    return out;
}

// Leg embeddings of R into D (x) D (x) D.
Acc embed_r(const QuasiRMatrix& r, const SVec& unit_d, std::uint64_t dim, int spot1, int spot2) {
    Acc out;
    for (const auto& [idx, v] : r.tensor.entries()) {
        for (const auto& [u, cu] : unit_d) {
            std::uint32_t legs[3] = {u, u, u};
            legs[spot1] = idx[0];
            legs[spot2] = idx[1];
            acc_add(out, (static_cast<std::uint64_t>(legs[0]) * dim + legs[1]) * dim + legs[2],
                    v * cu);
        }
    }
    return out;
}

void decode2(std::uint64_t k, std::uint64_t dim, Index& idx) {
    idx.push_back(static_cast<std::uint32_t>(k / dim));
    idx.push_back(static_cast<std::uint32_t>(k % dim));
}

void decode3(std::uint64_t k, std::uint64_t dim, Index& idx) {
    idx.push_back(static_cast<std::uint32_t>(k / (dim * dim)));
    idx.push_back(static_cast<std::uint32_t>((k / dim) % dim));
    idx.push_back(static_cast<std::uint32_t>(k % dim));
}

}  // namespace

CheckReport check_quasi_cocommutative(const QuasiBicrossedProduct& d, const QuasiRMatrix& r,
                                      std::uint64_t max_terms) {
    const FieldSpec f = d.alg.field;
    AlgebraOps dops(d.alg);
    const std::uint64_t dim = d.alg.dim;
    Acc racc = acc_from_r(r, dim);
    CheckReport rep("quasi-cocommutative");
    for (std::uint32_t x = 0; x < d.alg.dim; ++x) {
        Acc delta, delta_op;
        for (const auto& [p, q, c] : dops.comul_in(x)) {
            acc_add(delta, static_cast<std::uint64_t>(p) * dim + q, c);
            acc_add(delta_op, static_cast<std::uint64_t>(q) * dim + p, c);
        }
        Acc lhs = mul_acc2(dops, delta_op, racc, dim, max_terms);
        Acc rhs = mul_acc2(dops, racc, delta, dim, max_terms);
        compare_acc(rep, lhs, rhs, {x},
                    [dim](std::uint64_t k, Index& idx) { decode2(k, dim, idx); }, f);
    }
    return rep;
}

CheckReport check_quasi_braided(const QuasiBicrossedProduct& d, const QuasiRMatrix& r,
                                std::uint64_t max_terms) {
    const FieldSpec f = d.alg.field;
    AlgebraOps dops(d.alg);
    const std::uint64_t dim = d.alg.dim;
    SVec unit_d = sv_from_tensor1(d.alg.unit);
    Acc r12 = embed_r(r, unit_d, dim, 0, 1);
    Acc r13 = embed_r(r, unit_d, dim, 0, 2);
    Acc r23 = embed_r(r, unit_d, dim, 1, 2);

    CheckReport rep("quasi-braided");
    CheckReport leg1("coproduct-left-leg");
    {
        Acc lhs;
        for (const auto& [k, v] : r.tensor.entries()) {
            for (const auto& [p, q, c] : dops.comul_in(k[0])) {
                acc_add(lhs, (static_cast<std::uint64_t>(p) * dim + q) * dim + k[1], v * c);
            }
        }
        Acc rhs = mul_acc3(dops, r13, r23, dim, max_terms);
        compare_acc(leg1, lhs, rhs, {},
                    [dim](std::uint64_t k, Index& idx) { decode3(k, dim, idx); }, f);
    }
    rep.merge_sub(std::move(leg1));
    CheckReport leg2("coproduct-right-leg");
    {
        Acc lhs;
        for (const auto& [k, v] : r.tensor.entries()) {
            for (const auto& [p, q, c] : dops.comul_in(k[1])) {
                acc_add(lhs, (static_cast<std::uint64_t>(k[0]) * dim + p) * dim + q, v * c);
            }
        }
        Acc rhs = mul_acc3(dops, r13, r12, dim, max_terms);
        compare_acc(leg2, lhs, rhs, {},
                    [dim](std::uint64_t k, Index& idx) { decode3(k, dim, idx); }, f);
    }
    rep.merge_sub(std::move(leg2));
    for (auto& s : rep.subs) s.sort_witnesses();
    return rep;
}

CheckReport check_qybe(const QuasiBicrossedProduct& d, const QuasiRMatrix& r,
                       std::uint64_t max_terms) {
    const FieldSpec f = d.alg.field;
    AlgebraOps dops(d.alg);
    const std::uint64_t dim = d.alg.dim;
    SVec unit_d = sv_from_tensor1(d.alg.unit);
    Acc r12 = embed_r(r, unit_d, dim, 0, 1);
    Acc r13 = embed_r(r, unit_d, dim, 0, 2);
    Acc r23 = embed_r(r, unit_d, dim, 1, 2);

    CheckReport rep("qybe");
    Acc lhs = mul_acc3(dops, mul_acc3(dops, r12, r13, dim, max_terms), r23, dim, max_terms);
    Acc rhs = mul_acc3(dops, mul_acc3(dops, r23, r13, dim, max_terms), r12, dim, max_terms);
    compare_acc(rep, lhs, rhs, {}, [dim](std::uint64_t k, Index& idx) { decode3(k, dim, idx); },
                f);
    rep.sort_witnesses();
    return rep;
}

CheckReport check_regular(const QuasiBicrossedProduct& d, const QuasiRMatrix& r,
                          const QuasiRMatrix& rbar, std::uint64_t max_terms) {
    const FieldSpec f = d.alg.field;
    AlgebraOps dops(d.alg);
    const std::uint64_t dim = d.alg.dim;
    Acc racc = acc_from_r(r, dim);
    Acc rbacc = acc_from_r(rbar, dim);

    CheckReport rep("von-neumann-regular");
    CheckReport first("R*Rbar*R=R");
    {
        Acc lhs = mul_acc2(dops, mul_acc2(dops, racc, rbacc, dim, max_terms), racc, dim, max_terms);
        compare_acc(first, lhs, racc, {},
                    [dim](std::uint64_t k, Index& idx) { decode2(k, dim, idx); }, f);
    }
    rep.merge_sub(std::move(first));
    CheckReport second("Rbar*R*Rbar=Rbar");
    {
        Acc lhs =
            mul_acc2(dops, mul_acc2(dops, rbacc, racc, dim, max_terms), rbacc, dim, max_terms);
        compare_acc(second, lhs, rbacc, {},
                    [dim](std::uint64_t k, Index& idx) { decode2(k, dim, idx); }, f);
    }
    rep.merge_sub(std::move(second));
    for (auto& s : rep.subs) s.sort_witnesses();
    return rep;
}

CheckReport check_r_invertible(const QuasiBicrossedProduct& d, const QuasiRMatrix& r,
                               const QuasiRMatrix& rbar, std::uint64_t max_terms) {
    const FieldSpec f = d.alg.field;
    AlgebraOps dops(d.alg);
    const std::uint64_t dim = d.alg.dim;
    Acc lhs = mul_acc2(dops, acc_from_r(r, dim), acc_from_r(rbar, dim), dim, max_terms);
    Acc unit2;
    SVec unit_d = sv_from_tensor1(d.alg.unit);
    for (const auto& [u, cu] : unit_d) {
        for (const auto& [v, cv] : unit_d) {
            acc_add(unit2, static_cast<std::uint64_t>(u) * dim + v, cu * cv);
        }
    }
    CheckReport rep("R*Rbar=unit");
    compare_acc(rep, lhs, unit2, {},
                [dim](std::uint64_t k, Index& idx) { decode2(k, dim, idx); }, f);
    rep.sort_witnesses();
    return rep;
}

}  // namespace wha

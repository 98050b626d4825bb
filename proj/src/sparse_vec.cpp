#include "weakhopf/sparse_vec.hpp"

#include <algorithm>

#include "weakhopf/errors.hpp"

namespace wha {

void sv_normalize(SVec& v) {
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SVec out;
    out.reserve(v.size());
    for (auto& [i, c] : v) {
        if (!out.empty() && out.back().first == i) {
            out.back().second += c;
        } else {
            out.emplace_back(i, std::move(c));
        }
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto& e) { return e.second.is_zero(); }),
              out.end());
    v = std::move(out);
}

SVec sv_single(std::uint32_t i, Scalar c) {
    SVec v;
    if (!c.is_zero()) v.emplace_back(i, std::move(c));
    return v;
}

SVec sv_add(const SVec& a, const SVec& b) {
    SVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
            out.push_back(a[i++]);
        } else if (b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            Scalar s = a[i].second + b[j].second;
            if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(b[j]);
    return out;
}

SVec sv_scaled(const SVec& a, const Scalar& c) {
    SVec out;
    if (c.is_zero()) return out;
    out.reserve(a.size());
    for (const auto& [i, v] : a) out.emplace_back(i, v * c);
    return out;
}

void sv_accumulate(SVec& into, const SVec& v, const Scalar& c) {
    if (c.is_zero() || v.empty()) return;
    into = sv_add(into, sv_scaled(v, c));
}

bool sv_equal(const SVec& a, const SVec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k].first != b[k].first || a[k].second != b[k].second) return false;
    }
    return true;
}

Scalar sv_coeff(const SVec& a, std::uint32_t i, const FieldSpec& f) {
    auto it = std::lower_bound(a.begin(), a.end(), i,
                               [](const auto& e, std::uint32_t k) { return e.first < k; });
    if (it != a.end() && it->first == i) return it->second;
    return Scalar::zero(f);
}

SVec sv_from_tensor1(const SparseTensor& t) {
    if (t.order() != 1) throw DimensionMismatchError("expected order-1 tensor");
    SVec v;
    v.reserve(t.entry_count());
    for (const auto& [idx, c] : t.entries()) v.emplace_back(idx[0], c);
    return v;
}

SparseTensor sv_to_tensor1(const SVec& v, std::uint32_t dim, const FieldSpec& f) {
    SparseTensor t({dim}, f);
    for (const auto& [i, c] : v) t.set({i}, c);
    return t;
}

MatCols mat_cols(const LinMap& m) {
    MatCols out;
    out.dom = m.dom;
    out.cod = m.cod;
    out.cols.assign(m.dom, {});
    for (const auto& [idx, c] : m.mat.entries()) {
        out.cols[idx[1]].emplace_back(idx[0], c);
    }
    for (auto& c : out.cols) sv_normalize(c);
    return out;
}

SVec apply_cols(const MatCols& m, const SVec& v) {
    SVec out;
    for (const auto& [j, c] : v) sv_accumulate(out, m.cols[j], c);
    return out;
}

}  // namespace wha

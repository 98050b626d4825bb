#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "weakhopf/linmap.hpp"
#include "weakhopf/scalar.hpp"

namespace wha {

/// Sparse coordinate vector: sorted by index, combined, no zeros.
using SVec = std::vector<std::pair<std::uint32_t, Scalar>>;

void sv_normalize(SVec& v);
SVec sv_single(std::uint32_t i, Scalar c);
SVec sv_add(const SVec& a, const SVec& b);
SVec sv_scaled(const SVec& a, const Scalar& c);
void sv_accumulate(SVec& into, const SVec& v, const Scalar& c);  // into += c*v (re-normalizes)
bool sv_equal(const SVec& a, const SVec& b);
Scalar sv_coeff(const SVec& a, std::uint32_t i, const FieldSpec& f);
SVec sv_from_tensor1(const SparseTensor& t);
SparseTensor sv_to_tensor1(const SVec& v, std::uint32_t dim, const FieldSpec& f);

/// Column view of a linear map: cols[j] is the image of basis vector j.
struct MatCols {
    std::uint32_t dom = 0;
    std::uint32_t cod = 0;
    std::vector<SVec> cols;
};

MatCols mat_cols(const LinMap& m);
SVec apply_cols(const MatCols& m, const SVec& v);

}  // namespace wha

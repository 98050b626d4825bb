#pragma once

#include <map>
#include <string>
#include <vector>

#include "weakhopf/algebra.hpp"
#include "weakhopf/report.hpp"

namespace wha {

/// Finite monoid given by its full multiplication table (row-major:
/// table[i*n + j] is the index of e_i * e_j).
struct FiniteMonoid {
    std::vector<std::string> elements;
    std::vector<std::uint32_t> table;
    std::uint32_t identity = 0;

    std::uint32_t size() const { return static_cast<std::uint32_t>(elements.size()); }
    std::uint32_t product(std::uint32_t i, std::uint32_t j) const { return table[i * size() + j]; }
};

CheckReport check_monoid(const FiniteMonoid& m);

/// Clifford criterion: regular (each x has some y with xyx = x) and all
/// idempotents central. A passing report lists the decomposition into maximal
/// subgroups indexed by idempotents in its notes.
CheckReport check_clifford(const FiniteMonoid& m);

bool is_commutative(const FiniteMonoid& m);
bool is_idempotent(const FiniteMonoid& m);

/// Idempotent power of x (the unique idempotent in the cyclic subsemigroup).
std::uint32_t idempotent_power(const FiniteMonoid& m, std::uint32_t x);

/// Unique y in x's maximal subgroup with xy = yx = e_x and xyx = x.
/// Throws NotCliffordError when no such element exists.
std::uint32_t element_inverse(const FiniteMonoid& m, std::uint32_t x);
std::vector<std::uint32_t> clifford_inverses(const FiniteMonoid& m);

struct Semilattice {
    FiniteMonoid m;  // commutative, idempotent
};

/// Strong-semilattice-of-groups data: edge homomorphisms are given only on
/// covering pairs of the Hasse diagram; all others are derived by composition
/// (with a path-independence check).
struct CliffordSpec {
    FiniteMonoid lattice;
    std::map<std::string, FiniteMonoid> groups;  // node label -> group
    std::map<std::pair<std::string, std::string>, std::vector<std::uint32_t>> edge_homs;
};

FiniteMonoid assemble_clifford(const CliffordSpec& spec);

struct MatrixGroupSpec {
    std::uint32_t modulus = 2;  // 2x2 matrices over Z_modulus
};

/// All 2x2 matrices over Z_n with unit determinant, canonically labeled
/// "[[a,b],[c,d]] mod n" and ordered by (a,b,c,d).
FiniteMonoid unit_matrix_group(std::uint32_t modulus);

struct ReductionHom {
    std::vector<std::uint32_t> map;  // index map G_from -> G_to
    bool surjective = false;
    CheckReport report;
};

/// Entrywise residue reduction between unit matrix groups; to_modulus must
/// divide from_modulus.
ReductionHom reduction_hom(std::uint32_t from_modulus, std::uint32_t to_modulus);

/// The 440-element Clifford monoid assembled from the six-node semilattice of
/// 2x2 unit matrix groups over Z_2, Z_3, Z_4, Z_6 (plus two trivial nodes).
FiniteMonoid build_paper_monoid();
CliffordSpec paper_clifford_spec();

/// Monoid algebra of a Clifford monoid: group-like coproduct, counit 1, and
/// antipode s -> s^{-1}.
WeakHopfAlgebra monoid_algebra(const FiniteMonoid& m, const FieldSpec& field);

// -- presets --------------------------------------------------------------

FiniteMonoid trivial_monoid();
FiniteMonoid cyclic_group(std::uint32_t n);
FiniteMonoid symmetric_group(std::uint32_t n);  // small n; lexicographic one-line order
FiniteMonoid semilattice_y();                   // the six-node semilattice
/// Adjoins an absorbing idempotent below a group (two-node strong semilattice).
FiniteMonoid adjoin_absorbing(const FiniteMonoid& group, const std::string& label);
/// {1, e} with e*e = e.
FiniteMonoid sprime_monoid();
/// Symmetric group on 3 letters with an absorbing idempotent adjoined.
FiniteMonoid s3_adjoined();

}  // namespace wha

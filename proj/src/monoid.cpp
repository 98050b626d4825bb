#include "weakhopf/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "weakhopf/errors.hpp"

namespace wha {

namespace {

Scalar int_scalar(long v) { return Scalar::of_int(v, FieldSpec::rationals()); }

}  // namespace

CheckReport check_monoid(const FiniteMonoid& m) {
    CheckReport rep("monoid-axioms");
    const std::uint32_t n = m.size();
    CheckReport range("table-range");
    if (m.table.size() != static_cast<std::size_t>(n) * n) {
        range.add_failure({0}, int_scalar(static_cast<long>(n) * n),
                          int_scalar(static_cast<long>(m.table.size())));
    } else {
        for (std::uint32_t i = 0; i < n && range.failure_count == 0; ++i) {
            for (std::uint32_t j = 0; j < n; ++j) {
                if (m.product(i, j) >= n) {
                    range.add_failure({i, j}, int_scalar(0), int_scalar(m.product(i, j)));
                    break;
                }
            }
        }
    }
    rep.merge_sub(std::move(range));
    if (!rep.passed()) return rep;

    CheckReport ident("identity-law");
    if (m.identity >= n) {
        ident.add_failure({m.identity}, int_scalar(0), int_scalar(m.identity));
    } else {
        for (std::uint32_t i = 0; i < n; ++i) {
            if (m.product(m.identity, i) != i) {
                ident.add_failure({m.identity, i}, int_scalar(i),
                                  int_scalar(m.product(m.identity, i)));
            }
            if (m.product(i, m.identity) != i) {
                ident.add_failure({i, m.identity}, int_scalar(i),
                                  int_scalar(m.product(i, m.identity)));
            }
        }
    }
    rep.merge_sub(std::move(ident));

    CheckReport assoc("associativity");
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
            const std::uint32_t ij = m.product(i, j);
            for (std::uint32_t k = 0; k < n; ++k) {
                const std::uint32_t lhs = m.product(ij, k);
                const std::uint32_t rhs = m.product(i, m.product(j, k));
                if (lhs != rhs) assoc.add_failure({i, j, k}, int_scalar(lhs), int_scalar(rhs));
            }
        }
    }
    rep.merge_sub(std::move(assoc));
    return rep;
}

bool is_commutative(const FiniteMonoid& m) {
    const std::uint32_t n = m.size();
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            if (m.product(i, j) != m.product(j, i)) return false;
        }
    }
    return true;
}

bool is_idempotent(const FiniteMonoid& m) {
    for (std::uint32_t i = 0; i < m.size(); ++i) {
        if (m.product(i, i) != i) return false;
    }
    return true;
}

std::uint32_t idempotent_power(const FiniteMonoid& m, std::uint32_t x) {
    // The cyclic subsemigroup of a finite monoid contains exactly one idempotent.
    std::uint32_t p = x;
    for (std::uint32_t steps = 0; steps <= m.size(); ++steps) {
        if (m.product(p, p) == p) return p;
        p = m.product(p, x);
    }
    throw Error("no idempotent power found (table is not associative?)");
}

CheckReport check_clifford(const FiniteMonoid& m) {
    CheckReport rep("clifford");
    rep.merge_sub(check_monoid(m));
    if (!rep.passed()) return rep;
    const std::uint32_t n = m.size();

    CheckReport reg("regularity");
    for (std::uint32_t x = 0; x < n; ++x) {
        bool found = false;
        for (std::uint32_t y = 0; y < n && !found; ++y) {
            found = m.product(m.product(x, y), x) == x;
        }
        if (!found) reg.add_failure({x}, int_scalar(1), int_scalar(0));
    }
    rep.merge_sub(std::move(reg));

    CheckReport central("idempotents-central");
    for (std::uint32_t e = 0; e < n; ++e) {
        if (m.product(e, e) != e) continue;
        for (std::uint32_t x = 0; x < n; ++x) {
            const std::uint32_t lhs = m.product(e, x);
            const std::uint32_t rhs = m.product(x, e);
            if (lhs != rhs) central.add_failure({e, x}, int_scalar(lhs), int_scalar(rhs));
        }
    }
    rep.merge_sub(std::move(central));

    if (rep.passed()) {
        // Maximal subgroup decomposition, indexed by idempotents.
        std::map<std::uint32_t, std::uint32_t> comp_size;
        for (std::uint32_t x = 0; x < n; ++x) comp_size[idempotent_power(m, x)]++;
        for (const auto& [e, size] : comp_size) {
            rep.notes.push_back("component " + m.elements[e] + ": order " + std::to_string(size));
        }
        rep.notes.push_back("components: " + std::to_string(comp_size.size()));
    }
    return rep;
}

std::uint32_t element_inverse(const FiniteMonoid& m, std::uint32_t x) {
    const std::uint32_t e = idempotent_power(m, x);
    for (std::uint32_t y = 0; y < m.size(); ++y) {
        if (m.product(x, y) == e && m.product(y, x) == e && idempotent_power(m, y) == e &&
            m.product(m.product(x, y), x) == x) {
            return y;
        }
    }
    throw NotCliffordError("element " + m.elements[x] + " has no group inverse");
}

std::vector<std::uint32_t> clifford_inverses(const FiniteMonoid& m) {
    std::vector<std::uint32_t> inv(m.size());
    for (std::uint32_t x = 0; x < m.size(); ++x) inv[x] = element_inverse(m, x);
    return inv;
}

namespace {

// v <= u in the natural order of a (meet) semilattice.
bool sl_leq(const FiniteMonoid& lat, std::uint32_t v, std::uint32_t u) {
    return lat.product(u, v) == v;
}

}  // namespace

FiniteMonoid assemble_clifford(const CliffordSpec& spec) {
    const FiniteMonoid& lat = spec.lattice;
    const std::uint32_t ln = lat.size();
    if (!check_monoid(lat).passed() || !is_commutative(lat) || !is_idempotent(lat)) {
        throw ParseError("clifford spec lattice is not a semilattice");
    }
    if (spec.groups.size() != ln) {
        throw ParseError("clifford spec needs one group per lattice node");
    }
    std::vector<const FiniteMonoid*> groups(ln, nullptr);
    for (std::uint32_t u = 0; u < ln; ++u) {
        auto it = spec.groups.find(lat.elements[u]);
        if (it == spec.groups.end()) throw ParseError("missing group for node " + lat.elements[u]);
        const FiniteMonoid& g = it->second;
        if (!check_monoid(g).passed()) throw ParseError("group table invalid at node " + lat.elements[u]);
        for (std::uint32_t x = 0; x < g.size(); ++x) {
            bool invertible = false;
            for (std::uint32_t y = 0; y < g.size() && !invertible; ++y) {
                invertible = g.product(x, y) == g.identity && g.product(y, x) == g.identity;
            }
            if (!invertible) throw ParseError("node " + lat.elements[u] + " is not a group");
        }
        groups[u] = &g;
    }

    // Covering pairs of the Hasse diagram.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> covers;
    for (std::uint32_t u = 0; u < ln; ++u) {
        for (std::uint32_t v = 0; v < ln; ++v) {
            if (u == v || !sl_leq(lat, v, u)) continue;
            bool covered = true;
            for (std::uint32_t w = 0; w < ln && covered; ++w) {
                if (w != u && w != v && sl_leq(lat, v, w) && sl_leq(lat, w, u)) covered = false;
            }
            if (covered) covers.emplace_back(u, v);
        }
    }

    // Validate the given edge maps.
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> edge;
    for (auto [u, v] : covers) {
        auto it = spec.edge_homs.find({lat.elements[u], lat.elements[v]});
        if (it == spec.edge_homs.end()) {
            throw ParseError("missing edge homomorphism " + lat.elements[u] + ">" + lat.elements[v]);
        }
        const auto& map = it->second;
        const FiniteMonoid& gu = *groups[u];
        const FiniteMonoid& gv = *groups[v];
        if (map.size() != gu.size()) {
            throw NonHomomorphismEdgeError("edge map size mismatch at " + lat.elements[u] + ">" +
                                           lat.elements[v]);
        }
        for (auto t : map) {
            if (t >= gv.size()) {
                throw NonHomomorphismEdgeError("edge map out of range at " + lat.elements[u] + ">" +
                                               lat.elements[v]);
            }
        }
        for (std::uint32_t x = 0; x < gu.size(); ++x) {
            for (std::uint32_t y = 0; y < gu.size(); ++y) {
                if (map[gu.product(x, y)] != gv.product(map[x], map[y])) {
                    throw NonHomomorphismEdgeError("edge map is not a homomorphism at " +
                                                   lat.elements[u] + ">" + lat.elements[v]);
                }
            }
        }
        edge[{u, v}] = map;
    }

    // Derive all downward homomorphisms by composition; check path independence.
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> hom;
    for (std::uint32_t u = 0; u < ln; ++u) {
        std::vector<std::uint32_t> id(groups[u]->size());
        std::iota(id.begin(), id.end(), 0);
        hom[{u, u}] = std::move(id);
    }
    // Process pairs in order of increasing interval length so composites exist.
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::uint32_t u = 0; u < ln; ++u) {
            for (std::uint32_t v = 0; v < ln; ++v) {
                if (u == v || !sl_leq(lat, v, u) || hom.count({u, v})) continue;
                std::vector<std::vector<std::uint32_t>> candidates;
                bool all_ready = true;
                for (auto [cu, cw] : covers) {
                    if (cu != u || !sl_leq(lat, v, cw)) continue;
                    auto it = hom.find({cw, v});
                    if (it == hom.end()) {
                        all_ready = false;
                        continue;
                    }
                    const auto& first = edge[{cu, cw}];
                    std::vector<std::uint32_t> comp(first.size());
                    for (std::uint32_t x = 0; x < first.size(); ++x) comp[x] = it->second[first[x]];
                    candidates.push_back(std::move(comp));
                }
                if (candidates.empty()) {
                    if (all_ready) {
                        throw PathDependentHomsError("no descending path from " + lat.elements[u] +
                                                     " to " + lat.elements[v]);
                    }
                    continue;
                }
                for (std::size_t k = 1; k < candidates.size(); ++k) {
                    if (candidates[k] != candidates[0]) {
                        throw PathDependentHomsError("path-dependent homomorphisms between " +
                                                     lat.elements[u] + " and " + lat.elements[v]);
                    }
                }
                hom[{u, v}] = std::move(candidates[0]);
                progress = true;
            }
        }
    }

    // Element order: components sorted by node label, elements by label.
    std::vector<std::uint32_t> node_order(ln);
    std::iota(node_order.begin(), node_order.end(), 0);
    std::sort(node_order.begin(), node_order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return lat.elements[a] < lat.elements[b];
    });

    FiniteMonoid s;
    std::vector<std::vector<std::uint32_t>> to_s(ln);  // (node, group idx) -> S idx
    std::vector<std::uint32_t> node_of, gidx_of;
    for (auto u : node_order) {
        const FiniteMonoid& g = *groups[u];
        std::vector<std::uint32_t> order(g.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            return g.elements[a] < g.elements[b];
        });
        to_s[u].assign(g.size(), 0);
        for (auto x : order) {
            to_s[u][x] = static_cast<std::uint32_t>(s.elements.size());
            s.elements.push_back(lat.elements[u] + ":" + g.elements[x]);
            node_of.push_back(u);
            gidx_of.push_back(x);
        }
    }
    const std::uint32_t n = static_cast<std::uint32_t>(s.elements.size());
    s.identity = to_s[lat.identity][groups[lat.identity]->identity];
    s.table.assign(static_cast<std::size_t>(n) * n, 0);
    for (std::uint32_t a = 0; a < n; ++a) {
        const std::uint32_t u = node_of[a];
        for (std::uint32_t b = 0; b < n; ++b) {
            const std::uint32_t v = node_of[b];
            const std::uint32_t w = lat.product(u, v);
            const auto& hu = hom.at({u, w});
            const auto& hv = hom.at({v, w});
            const std::uint32_t p = groups[w]->product(hu[gidx_of[a]], hv[gidx_of[b]]);
            s.table[static_cast<std::size_t>(a) * n + b] = to_s[w][p];
        }
    }
    return s;
}

FiniteMonoid unit_matrix_group(std::uint32_t n) {
    if (n < 2) throw ParseError("matrix group modulus must be >= 2");
    FiniteMonoid g;
    std::vector<std::array<std::uint32_t, 4>> mats;
    std::vector<std::uint32_t> lookup(n * n * n * n, UINT32_MAX);
    for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = 0; b < n; ++b) {
            for (std::uint32_t c = 0; c < n; ++c) {
                for (std::uint32_t d = 0; d < n; ++d) {
                    const std::uint32_t det = (a * d % n + n - b * c % n) % n;
                    if (std::gcd(det, n) != 1) continue;
                    lookup[((a * n + b) * n + c) * n + d] =
                        static_cast<std::uint32_t>(mats.size());
                    mats.push_back({a, b, c, d});
                    g.elements.push_back("[[" + std::to_string(a) + "," + std::to_string(b) +
                                         "],[" + std::to_string(c) + "," + std::to_string(d) +
                                         "]] mod " + std::to_string(n));
                }
            }
        }
    }
    const std::uint32_t m = static_cast<std::uint32_t>(mats.size());
    g.table.assign(static_cast<std::size_t>(m) * m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
        const auto& x = mats[i];
        for (std::uint32_t j = 0; j < m; ++j) {
            const auto& y = mats[j];
            const std::uint32_t a = (x[0] * y[0] + x[1] * y[2]) % n;
            const std::uint32_t b = (x[0] * y[1] + x[1] * y[3]) % n;
            const std::uint32_t c = (x[2] * y[0] + x[3] * y[2]) % n;
            const std::uint32_t d = (x[2] * y[1] + x[3] * y[3]) % n;
            g.table[static_cast<std::size_t>(i) * m + j] = lookup[((a * n + b) * n + c) * n + d];
        }
    }
    g.identity = lookup[((1 * n + 0) * n + 0) * n + 1];
    return g;
}

ReductionHom reduction_hom(std::uint32_t from_mod, std::uint32_t to_mod) {
    if (to_mod < 2 || from_mod % to_mod != 0) {
        throw NonDivisorModulusError("target modulus " + std::to_string(to_mod) +
                                     " does not divide " + std::to_string(from_mod));
    }
    const FiniteMonoid gf = unit_matrix_group(from_mod);
    const FiniteMonoid gt = unit_matrix_group(to_mod);
    std::map<std::string, std::uint32_t> index_of;
    for (std::uint32_t i = 0; i < gt.size(); ++i) index_of[gt.elements[i]] = i;

    auto parse_entries = [](const std::string& label) {
        std::array<std::uint32_t, 4> e{};
        std::size_t k = 0;
        std::uint32_t cur = 0;
        bool in_num = false;
        for (char c : label) {
            if (c >= '0' && c <= '9') {
                cur = cur * 10 + static_cast<std::uint32_t>(c - '0');
                in_num = true;
            } else if (in_num) {
                if (k < 4) e[k++] = cur;
                cur = 0;
                in_num = false;
                if (k == 4) break;
            }
        }
        return e;
    };

    ReductionHom out;
    out.map.resize(gf.size());
    for (std::uint32_t i = 0; i < gf.size(); ++i) {
        auto e = parse_entries(gf.elements[i]);
        std::string label = "[[" + std::to_string(e[0] % to_mod) + "," +
                            std::to_string(e[1] % to_mod) + "],[" + std::to_string(e[2] % to_mod) +
                            "," + std::to_string(e[3] % to_mod) + "]] mod " + std::to_string(to_mod);
        out.map[i] = index_of.at(label);
    }

    out.report = CheckReport("reduction-homomorphism");
    for (std::uint32_t i = 0; i < gf.size(); ++i) {
        for (std::uint32_t j = 0; j < gf.size(); ++j) {
            const std::uint32_t lhs = out.map[gf.product(i, j)];
            const std::uint32_t rhs = gt.product(out.map[i], out.map[j]);
            if (lhs != rhs) out.report.add_failure({i, j}, int_scalar(lhs), int_scalar(rhs));
        }
    }
    std::set<std::uint32_t> image(out.map.begin(), out.map.end());
    out.surjective = image.size() == gt.size();
    out.report.notes.push_back(std::string("surjective: ") + (out.surjective ? "yes" : "no") +
                               " (image " + std::to_string(image.size()) + " of " +
                               std::to_string(gt.size()) + ")");
    return out;
}

CliffordSpec paper_clifford_spec() {
    CliffordSpec spec;
    spec.lattice = semilattice_y();
    FiniteMonoid trivial = trivial_monoid();
    FiniteMonoid triv_alpha = trivial;
    triv_alpha.elements = {"e"};
    spec.groups["alpha"] = triv_alpha;
    spec.groups["delta"] = triv_alpha;
    spec.groups["beta"] = unit_matrix_group(2);
    spec.groups["gamma"] = unit_matrix_group(4);
    spec.groups["rho"] = unit_matrix_group(3);
    spec.groups["sigma"] = unit_matrix_group(6);

    auto trivial_to = [&](const std::string& node) {
        return std::vector<std::uint32_t>{spec.groups.at(node).identity};
    };
    spec.edge_homs[{"delta", "sigma"}] = trivial_to("sigma");
    spec.edge_homs[{"delta", "gamma"}] = trivial_to("gamma");
    spec.edge_homs[{"sigma", "rho"}] = reduction_hom(6, 3).map;
    spec.edge_homs[{"sigma", "beta"}] = reduction_hom(6, 2).map;
    spec.edge_homs[{"gamma", "beta"}] = reduction_hom(4, 2).map;
    spec.edge_homs[{"rho", "alpha"}] =
        std::vector<std::uint32_t>(spec.groups.at("rho").size(), 0);
    spec.edge_homs[{"beta", "alpha"}] =
        std::vector<std::uint32_t>(spec.groups.at("beta").size(), 0);
    return spec;
}

FiniteMonoid build_paper_monoid() { return assemble_clifford(paper_clifford_spec()); }

WeakHopfAlgebra monoid_algebra(const FiniteMonoid& m, const FieldSpec& field) {
    if (!check_clifford(m).passed()) {
        throw NotCliffordError("monoid algebra requires a Clifford monoid");
    }
    const std::uint32_t n = m.size();
    WeakHopfAlgebra h;
    h.base.field = field;
    h.base.dim = n;
    h.base.basis = m.elements;
    h.base.mul = SparseTensor({n, n, n}, field);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
            h.base.mul.set({i, j, m.product(i, j)}, Scalar::one(field));
        }
    }
    h.base.unit = SparseTensor({n}, field);
    h.base.unit.set({m.identity}, Scalar::one(field));
    h.base.comul = SparseTensor({n, n, n}, field);
    h.base.counit = SparseTensor({n}, field);
    for (std::uint32_t i = 0; i < n; ++i) {
        h.base.comul.set({i, i, i}, Scalar::one(field));
        h.base.counit.set({i}, Scalar::one(field));
    }
    h.antipode = LinMap(n, n, field);
    const auto inv = clifford_inverses(m);
    for (std::uint32_t i = 0; i < n; ++i) h.antipode.set(inv[i], i, Scalar::one(field));
    return h;
}

// -- presets --------------------------------------------------------------

FiniteMonoid trivial_monoid() {
    FiniteMonoid m;
    m.elements = {"1"};
    m.table = {0};
    m.identity = 0;
    return m;
}

FiniteMonoid cyclic_group(std::uint32_t n) {
    if (n == 0) throw ParseError("cyclic group order must be positive");
    FiniteMonoid m;
    for (std::uint32_t k = 0; k < n; ++k) {
        m.elements.push_back(k == 0 ? "1" : (k == 1 ? "g" : "g" + std::to_string(k)));
    }
    m.table.resize(static_cast<std::size_t>(n) * n);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) m.table[i * n + j] = (i + j) % n;
    }
    m.identity = 0;
    return m;
}

FiniteMonoid symmetric_group(std::uint32_t n) {
    if (n == 0 || n > 6) throw ParseError("symmetric group supported for 1 <= n <= 6");
    std::vector<std::vector<std::uint32_t>> perms;
    std::vector<std::uint32_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    FiniteMonoid m;
    std::map<std::vector<std::uint32_t>, std::uint32_t> index_of;
    for (std::uint32_t i = 0; i < perms.size(); ++i) {
        index_of[perms[i]] = i;
        std::string label = "[";
        for (std::uint32_t k = 0; k < n; ++k) label += std::to_string(perms[i][k]);
        label += "]";
        m.elements.push_back(label);
    }
    const std::uint32_t g = static_cast<std::uint32_t>(perms.size());
    m.table.resize(static_cast<std::size_t>(g) * g);
    std::vector<std::uint32_t> comp(n);
    for (std::uint32_t i = 0; i < g; ++i) {
        for (std::uint32_t j = 0; j < g; ++j) {
            for (std::uint32_t k = 0; k < n; ++k) comp[k] = perms[i][perms[j][k]];
            m.table[i * g + j] = index_of.at(comp);
        }
    }
    m.identity = 0;
    return m;
}

FiniteMonoid semilattice_y() {
    FiniteMonoid m;
    m.elements = {"alpha", "beta", "gamma", "rho", "sigma", "delta"};
    m.table = {
        0, 0, 0, 0, 0, 0,  //
        0, 1, 1, 0, 1, 1,  //
        0, 1, 2, 0, 1, 2,  //
        0, 0, 0, 3, 3, 3,  //
        0, 1, 1, 3, 4, 4,  //
        0, 1, 2, 3, 4, 5,  //
    };
    m.identity = 5;
    return m;
}

FiniteMonoid adjoin_absorbing(const FiniteMonoid& group, const std::string& label) {
    CliffordSpec spec;
    spec.lattice.elements = {"lo", "hi"};
    spec.lattice.table = {0, 0, 0, 1};
    spec.lattice.identity = 1;
    FiniteMonoid bottom;
    bottom.elements = {label};
    bottom.table = {0};
    bottom.identity = 0;
    spec.groups["hi"] = group;
    spec.groups["lo"] = bottom;
    spec.edge_homs[{"hi", "lo"}] = std::vector<std::uint32_t>(group.size(), 0);
    FiniteMonoid s = assemble_clifford(spec);
    // Strip the node prefixes; the group labels plus the new idempotent are
    // already unique.
    for (auto& l : s.elements) l = l.substr(3);
    return s;
}

FiniteMonoid sprime_monoid() { return adjoin_absorbing(trivial_monoid(), "e"); }

FiniteMonoid s3_adjoined() { return adjoin_absorbing(symmetric_group(3), "e"); }

}  // namespace wha

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "weakhopf/json_io.hpp"
#include "weakhopf/parallel.hpp"

namespace {

using namespace wha;
using Clock = std::chrono::steady_clock;

struct Config {
    FieldSpec field = FieldSpec::rationals();
    std::uint64_t max_terms = 1ull << 24;
    std::string cache_dir = ".workbench-cache";
    std::string report_format = "text";
    bool force = false;
    bool timings = false;
    unsigned jobs = 1;

    Cache cache() const {
        const char* env = std::getenv("WORKBENCH_CACHE");
        return Cache(env != nullptr ? std::filesystem::path(env)
                                    : std::filesystem::path(cache_dir));
    }
};

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Json input_ref(const std::filesystem::path& p) {
    Json j;
    j["path"] = p.string();
    j["sha256"] = sha256_file(p);
    return j;
}

Json base_provenance(const std::string& construction) {
    Json p;
    p["construction"] = construction;
    p["tool-version"] = kToolVersion;
    return p;
}

void emit_report(const ReportDocument& doc, const Config& cfg, const std::string& out_path) {
    if (cfg.report_format == "json") {
        std::cout << doc.to_json(cfg.timings).dump(2) << "\n";
    } else {
        std::cout << doc.to_text(cfg.timings);
    }
    if (!out_path.empty()) write_json_file(out_path, doc.to_json(cfg.timings));
}

FiniteMonoid monoid_preset(const std::string& name) {
    if (name == "trivial") return trivial_monoid();
    if (name == "sprime") return sprime_monoid();
    if (name == "y") return semilattice_y();
    if (name == "s3e") return s3_adjoined();
    if (name.rfind("z:", 0) == 0) {
        return cyclic_group(static_cast<std::uint32_t>(std::stoul(name.substr(2))));
    }
    if (name.rfind("s:", 0) == 0) {
        return symmetric_group(static_cast<std::uint32_t>(std::stoul(name.substr(2))));
    }
    throw ParseError("unknown monoid preset: " + name +
                     " (expected trivial|sprime|y|s3e|z:<n>|s:<n>)");
}

WeakHopfAlgebra load_algebra(const std::filesystem::path& p) {
    return algebra_from_json(read_json_file(p));
}

// -- build ------------------------------------------------------------------

struct BuildArgs {
    std::string kind;
    std::string out;
    std::string preset;
    std::string from;
    std::uint32_t modulus = 2;
    std::string spec_file;
    bool paper = false;
    std::string emit_spec;
    std::string monoid_file;
    std::string algebra_file;
    std::string left_file;
    std::string right_file;
};

int cmd_build(const Config& cfg, const BuildArgs& args) {
    Cache cache = cfg.cache();
    Json doc;
    if (args.kind == "monoid") {
        FiniteMonoid m;
        Json prov = base_provenance("monoid");
        if (!args.from.empty()) {
            m = monoid_from_json(read_json_file(args.from));
            prov["inputs"] = Json::array({input_ref(args.from)});
        } else if (!args.preset.empty()) {
            m = monoid_preset(args.preset);
            prov["preset"] = args.preset;
        } else {
            throw ParseError("build monoid needs --preset or --from");
        }
        CheckReport rep = check_monoid(m);
        if (!rep.passed()) {
            std::cerr << "error: " << rep.summary() << "\n";
            return 1;
        }
        doc = monoid_to_json(m, prov);
    } else if (args.kind == "matrix-group") {
        const std::string key =
            sha256_hex("matrix-group/v1/modulus=" + std::to_string(args.modulus));
        if (auto hit = cache.lookup(key)) {
            doc = *hit;
        } else {
            Json prov = base_provenance("matrix-group");
            prov["modulus"] = args.modulus;
            doc = monoid_to_json(unit_matrix_group(args.modulus), prov);
            cache.store(key, doc);
        }
    } else if (args.kind == "clifford") {
        CliffordSpec spec;
        Json prov = base_provenance("clifford");
        std::string key;
        if (args.paper) {
            spec = paper_clifford_spec();
            prov["preset"] = "paper";
            key = sha256_hex("clifford/v1/paper");
        } else if (!args.spec_file.empty()) {
            spec = clifford_spec_from_json(read_json_file(args.spec_file),
                                           std::filesystem::path(args.spec_file).parent_path());
            prov["inputs"] = Json::array({input_ref(args.spec_file)});
            key = sha256_hex("clifford/v1/" + sha256_file(args.spec_file));
        } else {
            throw ParseError("build clifford needs --spec FILE or --paper");
        }
        if (!args.emit_spec.empty()) write_json_file(args.emit_spec, clifford_spec_to_json(spec));
        if (auto hit = cache.lookup(key)) {
            doc = *hit;
        } else {
            doc = monoid_to_json(assemble_clifford(spec), prov);
            cache.store(key, doc);
        }
    } else if (args.kind == "algebra") {
        if (args.monoid_file.empty()) throw ParseError("build algebra needs --monoid FILE");
        FiniteMonoid m = monoid_from_json(read_json_file(args.monoid_file));
        Json prov = base_provenance("algebra");
        prov["inputs"] = Json::array({input_ref(args.monoid_file)});
        doc = algebra_to_json(monoid_algebra(m, cfg.field), prov);
    } else if (args.kind == "dual" || args.kind == "op" || args.kind == "cop" ||
               args.kind == "star-cop") {
        if (args.algebra_file.empty()) throw ParseError("build " + args.kind + " needs --algebra");
        WeakHopfAlgebra h = load_algebra(args.algebra_file);
        WeakHopfAlgebra out = args.kind == "dual"  ? dual(h)
                              : args.kind == "op"  ? opposite(h)
                              : args.kind == "cop" ? coopposite(h)
                                                   : star_cop(h);
        Json prov = base_provenance(args.kind);
        prov["inputs"] = Json::array({input_ref(args.algebra_file)});
        doc = algebra_to_json(out, prov);
    } else if (args.kind == "tensor") {
        if (args.left_file.empty() || args.right_file.empty()) {
            throw ParseError("build tensor needs --left and --right");
        }
        WeakHopfAlgebra l = load_algebra(args.left_file);
        WeakHopfAlgebra r = load_algebra(args.right_file);
        Json prov = base_provenance("tensor");
        prov["inputs"] = Json::array({input_ref(args.left_file), input_ref(args.right_file)});
        doc = algebra_to_json(tensor_product(l, r), prov);
    } else if (args.kind == "double") {
        if (args.algebra_file.empty()) throw ParseError("build double needs --algebra");
        const std::string source_hash = sha256_file(args.algebra_file);
        const std::string key =
            sha256_hex("double/v1/" + source_hash + (cfg.force ? "/forced" : ""));
        if (auto hit = cache.lookup(key)) {
            doc = *hit;
        } else {
            WeakHopfAlgebra h = load_algebra(args.algebra_file);
            QuasiBicrossedProduct d = quantum_double(h, cfg.force, cfg.max_terms);
            Json prov = base_provenance("double");
            prov["source"]["path"] = args.algebra_file;
            prov["source"]["sha256"] = source_hash;
            doc = double_to_json(d, prov);
            cache.store(key, doc);
        }
    } else {
        throw ParseError("unknown build kind: " + args.kind);
    }
    write_json_file(args.out, doc);
    std::cout << "wrote " << args.out << "\n";
    return 0;
}

// -- check ------------------------------------------------------------------

std::vector<std::string> default_checks(const std::string& kind) {
    if (kind == "monoid") return {"monoid", "clifford"};
    if (kind == "weak-hopf-algebra") {
        return {"algebra",       "coalgebra", "almost-bialgebra", "weak-antipode",
                "anti-morphism", "perfect",   "coperfect"};
    }
    if (kind == "double") {
        return {"almost-bialgebra", "quasi-cocommutative", "quasi-braided", "qybe", "regular"};
    }
    throw KindMismatchError("no checks defined for kind " + kind);
}

int cmd_check(const Config& cfg, const std::string& file, std::vector<std::string> checks,
              const std::string& out_path) {
    const Json j = read_json_file(file);
    const std::string kind = json_kind(j);
    if (checks.empty()) checks = default_checks(kind);

    ReportDocument doc;
    doc.inputs.push_back({file, sha256_file(file)});

    auto run = [&](CheckReport rep, Clock::time_point t0) {
        doc.checks.push_back({std::move(rep), ms_since(t0)});
    };

    if (kind == "monoid") {
        FiniteMonoid m = monoid_from_json(j);
        for (const auto& c : checks) {
            auto t0 = Clock::now();
            if (c == "monoid") {
                run(check_monoid(m), t0);
            } else if (c == "clifford") {
                run(check_clifford(m), t0);
            } else {
                throw UnknownCheckError("unknown check for a monoid: " + c);
            }
        }
    } else if (kind == "weak-hopf-algebra") {
        WeakHopfAlgebra h = algebra_from_json(j);
        for (const auto& c : checks) {
            auto t0 = Clock::now();
            if (c == "algebra") {
                run(check_algebra_axioms(h.base), t0);
            } else if (c == "coalgebra") {
                run(check_coalgebra_axioms(h.base), t0);
            } else if (c == "almost-bialgebra") {
                run(check_almost_bialgebra(h.base), t0);
            } else if (c == "weak-antipode") {
                run(check_weak_antipode(h), t0);
            } else if (c == "anti-morphism") {
                run(check_anti_bialgebra_morphism(h), t0);
            } else if (c == "perfect") {
                run(check_perfect(h), t0);
            } else if (c == "coperfect") {
                run(check_coperfect(h), t0);
            } else if (c == "perfect-variant") {
                run(check_perfect_variant(h), t0);
            } else {
                throw UnknownCheckError("unknown check for an algebra: " + c);
            }
        }
    } else if (kind == "double") {
        QuasiBicrossedProduct d = double_from_json(j, std::filesystem::path(file).parent_path());
        std::optional<QuasiRMatrix> r, rb;
        auto need_r = [&]() {
            if (!r) {
                r = r_matrix(d);
                rb = r_bar(d);
            }
        };
        for (const auto& c : checks) {
            auto t0 = Clock::now();
            if (c == "algebra") {
                run(check_algebra_axioms(d.alg), t0);
            } else if (c == "coalgebra") {
                run(check_coalgebra_axioms(d.alg), t0);
            } else if (c == "almost-bialgebra") {
                run(check_almost_bialgebra(d.alg), t0);
            } else if (c == "quasi-cocommutative") {
                need_r();
                run(check_quasi_cocommutative(d, *r, cfg.max_terms), t0);
            } else if (c == "quasi-braided") {
                need_r();
                run(check_quasi_braided(d, *r, cfg.max_terms), t0);
            } else if (c == "qybe") {
                need_r();
                run(check_qybe(d, *r, cfg.max_terms), t0);
            } else if (c == "regular") {
                need_r();
                run(check_regular(d, *r, *rb, cfg.max_terms), t0);
            } else if (c == "r-invertible") {
                need_r();
                run(check_r_invertible(d, *r, *rb, cfg.max_terms), t0);
            } else {
                throw UnknownCheckError("unknown check for a double: " + c);
            }
        }
    } else {
        throw KindMismatchError("cannot check documents of kind " + kind);
    }

    emit_report(doc, cfg, out_path);
    return doc.overall() ? 0 : 1;
}

// -- paper suite ------------------------------------------------------------

CheckReport counts_report(const std::string& name,
                          const std::vector<std::pair<std::string, std::uint64_t>>& expected,
                          const std::vector<std::uint64_t>& actual, const FieldSpec& f) {
    CheckReport rep(name);
    std::string line;
    for (std::size_t k = 0; k < expected.size(); ++k) {
        if (!line.empty()) line += ", ";
        line += expected[k].first + "=" + std::to_string(actual[k]);
        if (actual[k] != expected[k].second) {
            rep.add_failure({static_cast<std::uint32_t>(k)},
                            Scalar::of_int(static_cast<long>(expected[k].second), f),
                            Scalar::of_int(static_cast<long>(actual[k]), f));
        }
    }
    rep.notes.push_back(line);
    return rep;
}

int cmd_paper_suite(const Config& cfg, const std::string& out_path) {
    const FieldSpec f = cfg.field;
    Cache cache = cfg.cache();
    ReportDocument doc;

    // Unit matrix group orders over Z_2, Z_3, Z_4, Z_6.
    auto t0 = Clock::now();
    std::vector<std::uint64_t> orders;
    for (std::uint32_t n : {2u, 3u, 4u, 6u}) {
        const std::string key = sha256_hex("matrix-group/v1/modulus=" + std::to_string(n));
        if (auto hit = cache.lookup(key)) {
            orders.push_back(monoid_from_json(*hit).size());
        } else {
            Json j = monoid_to_json(unit_matrix_group(n), base_provenance("matrix-group"));
            cache.store(key, j);
            orders.push_back(monoid_from_json(j).size());
        }
    }
    doc.checks.push_back({counts_report("matrix-group-orders",
                                        {{"|G_beta|", 6},
                                         {"|G_rho|", 48},
                                         {"|G_gamma|", 96},
                                         {"|G_sigma|", 288}},
                                        orders, f),
                          ms_since(t0)});

    // The assembled Clifford monoid.
    t0 = Clock::now();
    FiniteMonoid s;
    {
        const std::string key = sha256_hex("clifford/v1/paper");
        if (auto hit = cache.lookup(key)) {
            s = monoid_from_json(*hit);
        } else {
            s = build_paper_monoid();
            cache.store(key, monoid_to_json(s, base_provenance("clifford")));
        }
    }
    doc.checks.push_back(
        {counts_report("monoid-order", {{"|S|", 440}}, {s.size()}, f), ms_since(t0)});

    t0 = Clock::now();
    doc.checks.push_back({check_clifford(s), ms_since(t0)});

    // Products of the six component idempotents reproduce the semilattice.
    t0 = Clock::now();
    {
        CheckReport rep("idempotent-semilattice-table");
        FiniteMonoid y = semilattice_y();
        const std::vector<std::string> idem_labels = {
            "alpha:e",
            "beta:[[1,0],[0,1]] mod 2",
            "gamma:[[1,0],[0,1]] mod 4",
            "rho:[[1,0],[0,1]] mod 3",
            "sigma:[[1,0],[0,1]] mod 6",
            "delta:e"};
        std::vector<std::uint32_t> comp(y.size(), UINT32_MAX);
        for (std::uint32_t u = 0; u < y.size(); ++u) {
            for (std::uint32_t i = 0; i < s.size(); ++i) {
                if (s.elements[i] == idem_labels[u]) comp[u] = i;
            }
            if (comp[u] == UINT32_MAX) rep.add_failure({u}, Scalar::one(f), Scalar::zero(f));
        }
        if (rep.passed()) {
            for (std::uint32_t u = 0; u < y.size(); ++u) {
                for (std::uint32_t v = 0; v < y.size(); ++v) {
                    const std::uint32_t got = s.product(comp[u], comp[v]);
                    const std::uint32_t want = comp[y.product(u, v)];
                    if (got != want) {
                        rep.add_failure({u, v}, Scalar::of_int(static_cast<long>(want), f),
                                        Scalar::of_int(static_cast<long>(got), f));
                    }
                }
            }
            rep.notes.push_back("36 idempotent products match the six-node table");
        }
        doc.checks.push_back({std::move(rep), ms_since(t0)});
    }

    // Monoid algebra axioms at dimension 440.
    WeakHopfAlgebra ks = monoid_algebra(s, f);
    t0 = Clock::now();
    doc.checks.push_back({check_algebra_axioms(ks.base), ms_since(t0)});
    t0 = Clock::now();
    doc.checks.push_back({check_almost_bialgebra(ks.base), ms_since(t0)});
    t0 = Clock::now();
    doc.checks.push_back({check_weak_antipode(ks), ms_since(t0)});
    t0 = Clock::now();
    doc.checks.push_back({check_perfect(ks), ms_since(t0)});
    t0 = Clock::now();
    doc.checks.push_back({check_coperfect(ks), ms_since(t0)});

    // dim(kS (x) (kS)^*) from |S|^2; the algebra itself is never materialized.
    t0 = Clock::now();
    doc.checks.push_back({counts_report("tensor-square-dimension", {{"|S|^2", 193600}},
                                        {static_cast<std::uint64_t>(s.size()) * s.size()}, f),
                          ms_since(t0)});

    // Sampled pointwise products in D(kS) against the conjugation form.
    t0 = Clock::now();
    {
        CheckReport rep("double-closed-form-samples");
        QuantumDouble engine(ks);
        const auto inv = clifford_inverses(s);
        std::mt19937_64 rng(440440);
        std::uniform_int_distribution<std::uint32_t> pick(0, s.size() - 1);
        const std::uint32_t n = s.size();
        for (std::uint32_t sample = 0; sample < 50; ++sample) {
            const std::uint32_t a = pick(rng), x = pick(rng), w = pick(rng);
            const std::uint32_t conj = s.product(s.product(inv[x], a), x);
            const std::uint32_t b = (sample % 2 == 0) ? conj : pick(rng);
            SVec prod = engine.expand(
                engine.mul_mono({sv_single(a, Scalar::one(f)), sv_single(x, Scalar::one(f))},
                                {sv_single(b, Scalar::one(f)), sv_single(w, Scalar::one(f))}));
            if (conj == b) {
                const bool ok = prod.size() == 1 && prod[0].first == a * n + s.product(x, w) &&
                                prod[0].second.is_one();
                if (!ok) rep.add_failure({sample, a, x, b, w}, Scalar::one(f), Scalar::zero(f));
            } else if (!prod.empty()) {
                rep.add_failure({sample, a, x, b, w}, Scalar::zero(f), prod[0].second);
            }
        }
        rep.notes.push_back("50 sampled (A,X,B,W) products computed pointwise");
        doc.checks.push_back({std::move(rep), ms_since(t0)});

        doc.checks.push_back(
            {counts_report("r-monomials-D(kS)", {{"monomials", 440}}, {engine.dim_h()}, f), 0.0});
        CheckReport skip("qybe-D(kS)", true);
        skip.notes.push_back("skipped: out of desk scale (dim D(kS) = 193600)");
        doc.checks.push_back({std::move(skip), 0.0});
    }

    // Small-instance double suite.
    auto small_double = [&](const std::string& label, const WeakHopfAlgebra& h) {
        auto tt = Clock::now();
        QuasiBicrossedProduct d = quantum_double(h, false, cfg.max_terms);
        QuasiRMatrix r = r_matrix(d);
        QuasiRMatrix rb = r_bar(d);
        CheckReport rep("double-suite-" + label);
        rep.merge_sub(check_quasi_cocommutative(d, r, cfg.max_terms));
        rep.merge_sub(check_quasi_braided(d, r, cfg.max_terms));
        rep.merge_sub(check_qybe(d, r, cfg.max_terms));
        rep.merge_sub(check_regular(d, r, rb, cfg.max_terms));
        doc.checks.push_back({std::move(rep), ms_since(tt)});
    };
    small_double("D(kSprime)", monoid_algebra(sprime_monoid(), f));
    small_double("D(kY)", monoid_algebra(semilattice_y(), f));
    small_double("D(kZ3)", monoid_algebra(cyclic_group(3), f));

    // Flagship noncommutative, noncocommutative instance (sparse engine).
    t0 = Clock::now();
    {
        WeakHopfAlgebra s3e = monoid_algebra(s3_adjoined(), f);
        WeakHopfAlgebra a = tensor_product(s3e, dual(s3e));
        CheckReport rep("double-suite-D(kS3e-tensor-dual)");
        if (!(flag_perfect(a) && flag_coperfect(a))) {
            rep.add_failure({0}, Scalar::one(f), Scalar::zero(f));
            rep.notes.push_back("tensor square is not biperfect");
        } else {
            QuantumDouble engine(a);
            rep.notes.push_back("dim D = " + std::to_string(engine.dim_d()));
            rep.merge_sub(engine.check_quasi_cocommutative(cfg.max_terms));
            rep.merge_sub(engine.check_qybe(cfg.max_terms));
        }
        doc.checks.push_back({std::move(rep), ms_since(t0)});
    }

    emit_report(doc, cfg, out_path);
    return doc.overall() ? 0 : 1;
}

// -- inspect ----------------------------------------------------------------

int cmd_inspect(const std::string& file) {
    const Json j = read_json_file(file);
    const std::string kind = json_kind(j);
    std::cout << "kind: " << kind << "\n";
    if (j.contains("schema-version")) {
        std::cout << "schema-version: " << j["schema-version"] << "\n";
    }
    if (kind == "monoid") {
        FiniteMonoid m = monoid_from_json(j);
        std::cout << "order: " << m.size() << "\n";
        std::cout << "identity: " << m.elements[m.identity] << "\n";
        std::cout << "commutative: " << (is_commutative(m) ? "yes" : "no") << "\n";
        for (std::uint32_t i = 0; i < std::min<std::uint32_t>(m.size(), 8); ++i) {
            std::cout << "  [" << i << "] " << m.elements[i] << "\n";
        }
        if (m.size() > 8) std::cout << "  ... (" << m.size() - 8 << " more)\n";
    } else if (kind == "weak-hopf-algebra" || kind == "double") {
        std::cout << "field: " << j.at("field").get<std::string>() << "\n";
        std::cout << "dim: " << j.at("dim").get<std::uint32_t>() << "\n";
        std::cout << "mul entries: " << j.at("mul").size() << "\n";
        std::cout << "comul entries: " << j.at("comul").size() << "\n";
        if (kind == "double") {
            std::cout << "dim-x: " << j.at("dim-x").get<std::uint32_t>()
                      << ", dim-a: " << j.at("dim-a").get<std::uint32_t>() << "\n";
        }
        const auto& basis = j.at("basis");
        for (std::size_t i = 0; i < std::min<std::size_t>(basis.size(), 8); ++i) {
            std::cout << "  [" << i << "] " << basis[i].get<std::string>() << "\n";
        }
        if (basis.size() > 8) std::cout << "  ... (" << basis.size() - 8 << " more)\n";
    } else if (kind == "report") {
        std::cout << "overall: " << (j.at("overall").get<bool>() ? "pass" : "FAIL") << "\n";
        std::cout << "checks: " << j.at("checks").size() << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
    if (j.contains("provenance")) {
        std::cout << "provenance: " << j["provenance"].dump() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact workbench for weak Hopf algebras and their quantum doubles"};
    app.require_subcommand(1);
    app.fallthrough();  // accept the global flags after the subcommand too

    Config cfg;
    std::string field_str = "Q";
    app.add_option("--field", field_str, "Ground field: Q or F<p> (p prime)");
    app.add_option("--max-terms", cfg.max_terms, "Guard for sparse tensor expansions");
    app.add_option("--cache-dir", cfg.cache_dir, "Artifact cache directory");
    app.add_option("--report", cfg.report_format, "Report format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--force", cfg.force, "Bypass the biperfectness precondition");
    app.add_flag("--timings", cfg.timings, "Include wall times in reports");
    app.add_option("--jobs", cfg.jobs, "Worker threads for parallel checks");

    BuildArgs build_args;
    CLI::App* build = app.add_subcommand("build", "Construct an artifact file");
    build
        ->add_option("kind", build_args.kind,
                     "monoid|matrix-group|clifford|algebra|dual|op|cop|star-cop|tensor|double")
        ->required();
    build->add_option("-o,--output", build_args.out, "Output path")->required();
    build->add_option("--preset", build_args.preset, "Monoid preset name");
    build->add_option("--from", build_args.from, "Monoid file to validate and canonicalize");
    build->add_option("--modulus", build_args.modulus, "Matrix-group modulus");
    build->add_option("--spec", build_args.spec_file, "Clifford spec file");
    build->add_flag("--paper", build_args.paper, "Use the built-in six-node matrix-group spec");
    build->add_option("--emit-spec", build_args.emit_spec, "Also write the Clifford spec JSON");
    build->add_option("--monoid", build_args.monoid_file, "Monoid input for kind=algebra");
    build->add_option("--algebra", build_args.algebra_file, "Algebra input");
    build->add_option("--left", build_args.left_file, "Left tensor factor");
    build->add_option("--right", build_args.right_file, "Right tensor factor");

    std::string check_file, check_out;
    std::vector<std::string> check_names;
    CLI::App* check = app.add_subcommand("check", "Run checks against an artifact file");
    check->add_option("file", check_file, "Artifact file")->required();
    check->add_option("--checks", check_names, "Comma-separated check names")->delimiter(',');
    check->add_option("-o,--output", check_out, "Also write the JSON report here");

    std::string suite_out;
    CLI::App* suite = app.add_subcommand(
        "paper-suite", "Six-node matrix-group pipeline plus the double/QYBE suite");
    suite->add_option("-o,--output", suite_out, "Also write the JSON report here");

    std::string inspect_file;
    CLI::App* inspect = app.add_subcommand("inspect", "Pretty-print an artifact file");
    inspect->add_option("file", inspect_file, "Artifact file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        cfg.field = FieldSpec::parse(field_str);
        set_worker_count(cfg.jobs);
        if (build->parsed()) return cmd_build(cfg, build_args);
        if (check->parsed()) return cmd_check(cfg, check_file, check_names, check_out);
        if (suite->parsed()) return cmd_paper_suite(cfg, suite_out);
        if (inspect->parsed()) return cmd_inspect(inspect_file);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "helpers.hpp"
#include "weakhopf/json_io.hpp"

using namespace wha;
using namespace wha::testing;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("wha-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("sha256 known value") {
    CHECK(sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("algebra serialization round-trips exactly") {
    WeakHopfAlgebra y = k_y();
    Json j = algebra_to_json(y);
    WeakHopfAlgebra back = algebra_from_json(j);
    CHECK(same_structure(y.base, back.base));
    CHECK(y.antipode.mat == back.antipode.mat);
    CHECK(y.base.basis == back.base.basis);
    CHECK(algebra_to_json(back).dump() == j.dump());  // canonical bytes
}

TEST_CASE("monoid serialization round-trips") {
    FiniteMonoid s = s3_adjoined();
    Json j = monoid_to_json(s);
    FiniteMonoid back = monoid_from_json(j);
    CHECK(back.elements == s.elements);
    CHECK(back.table == s.table);
    CHECK(back.identity == s.identity);
    CHECK(monoid_to_json(back).dump() == j.dump());
}

TEST_CASE("clifford spec serialization round-trips") {
    CliffordSpec spec;
    spec.lattice = sprime_monoid();
    spec.lattice.elements = {"lo", "hi"};
    spec.lattice.table = {0, 0, 0, 1};
    spec.lattice.identity = 1;
    spec.groups["hi"] = cyclic_group(3);
    spec.groups["lo"] = trivial_monoid();
    spec.edge_homs[{"hi", "lo"}] = {0, 0, 0};
    Json j = clifford_spec_to_json(spec);
    CliffordSpec back = clifford_spec_from_json(j, ".");
    CHECK(back.lattice.table == spec.lattice.table);
    CHECK(back.groups.at("hi").table == spec.groups.at("hi").table);
    CHECK(back.edge_homs == spec.edge_homs);
    CHECK(check_clifford(assemble_clifford(back)).passed());
}

TEST_CASE("form and module serialization round-trip") {
    WeakHopfAlgebra h = k_z(2);
    BilinearForm form = canonical_eval_pairing(h);
    Json fj = form_to_json(form);
    BilinearForm fback = form_from_json(fj);
    CHECK(fback.matrix == form.matrix);

    QuasiBicrossedProduct d = quantum_double(h);
    ModuleAction act = regular_module(d.alg);
    Json mj = module_to_json(act, Json::object());
    ModuleAction mback = module_from_json(mj);
    CHECK(mback.action == act.action);
    CHECK(mback.v_dim == act.v_dim);
}

TEST_CASE("double serialization restores provenance from disk") {
    TempDir tmp;
    WeakHopfAlgebra h = k_sprime();
    const auto hpath = tmp.path / "h.json";
    write_json_file(hpath, algebra_to_json(h));
    QuasiBicrossedProduct d = quantum_double(h);

    Json prov;
    prov["construction"] = "double";
    prov["source"]["path"] = "h.json";
    prov["source"]["sha256"] = sha256_file(hpath);
    Json dj = double_to_json(d, prov);
    const auto dpath = tmp.path / "d.json";
    write_json_file(dpath, dj);

    QuasiBicrossedProduct back = double_from_json(read_json_file(dpath), tmp.path);
    CHECK(back.alg.mul == d.alg.mul);
    REQUIRE(back.source_h != nullptr);
    CHECK(same_structure(back.source_h->base, h.base));
    CHECK(r_matrix(back).tensor == r_matrix(d).tensor);

    // A stale source hash drops the provenance instead of using wrong data.
    write_json_file(hpath, algebra_to_json(k_z(2)));
    QuasiBicrossedProduct stale = double_from_json(read_json_file(dpath), tmp.path);
    CHECK(stale.source_h == nullptr);
}

TEST_CASE("r-matrix serialization") {
    QuasiBicrossedProduct d = quantum_double(k_sprime());
    QuasiRMatrix r = r_matrix(d);
    Json j = rmatrix_to_json(r);
    CHECK(j["kind"] == "tensor");
    CHECK(j["monomials"] == 2);
    CHECK(j["shape"] == Json::array({4, 4}));
    CHECK(j["entries"].size() == r.tensor.entry_count());
}

TEST_CASE("field spec parsing accepts both prime forms") {
    CHECK(FieldSpec::parse("F7") == FieldSpec::prime(7));
    CHECK(FieldSpec::parse("Fp:7") == FieldSpec::prime(7));
    CHECK(FieldSpec::parse("Q") == FieldSpec::rationals());
    CHECK_THROWS_AS(FieldSpec::parse("F"), ParseError);
    CHECK_THROWS_AS(FieldSpec::parse("Fp:abc"), ParseError);
}

TEST_CASE("report documents are deterministic") {
    WeakHopfAlgebra bad = k_z(3);
    bad.antipode = LinMap::identity(3, bad.base.field);
    ReportDocument doc;
    doc.inputs.push_back({"corpus/z3.json", sha256_hex("synthetic")});
    doc.checks.push_back({check_weak_antipode(bad), 12.5});
    doc.checks.push_back({check_perfect(k_z(3)), 3.5});
    CHECK_FALSE(doc.overall());

    ReportDocument doc2 = doc;
    doc2.checks[0].wall_ms = 99.0;  // timings differ between runs
    CHECK(doc.to_json(false).dump() == doc2.to_json(false).dump());
    CHECK(doc.to_json(true).dump() != doc2.to_json(true).dump());
    CHECK(doc.to_text(false).find("FAIL") != std::string::npos);
}

TEST_CASE("witness content survives serialization") {
    WeakHopfAlgebra bad = k_y();
    bad.base.mul.set({1, 2, 4}, qs(1, 2));
    CheckReport rep = check_algebra_axioms(bad.base);
    REQUIRE_FALSE(rep.passed());
    Json j = report_to_json(rep);
    CHECK(j["passed"] == false);
    bool found_witness = false;
    for (const auto& sub : j["subs"]) {
        if (!sub["witnesses"].empty()) found_witness = true;
    }
    CHECK(found_witness);
}

TEST_CASE("cache stores and survives corruption") {
    TempDir tmp;
    Cache cache(tmp.path / "cache");
    const std::string key = sha256_hex("request");
    CHECK_FALSE(cache.lookup(key).has_value());
    Json doc = monoid_to_json(cyclic_group(4));
    cache.store(key, doc);
    auto hit = cache.lookup(key);
    REQUIRE(hit.has_value());
    CHECK(hit->dump() == doc.dump());

    {
        std::ofstream out(tmp.path / "cache" / (key + ".json"));
        out << "{broken";
    }
    CHECK_FALSE(cache.lookup(key).has_value());
}

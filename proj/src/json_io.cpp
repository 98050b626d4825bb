#include "weakhopf/json_io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include "weakhopf/errors.hpp"

namespace wha {

namespace {

std::string digest_hex(const unsigned char* md, unsigned len) {
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 0xf]);
    }
    return out;
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned len = 0;
    EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
    return digest_hex(md, len);
}

std::string sha256_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + p.string());
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    char buf[1 << 16];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
        if (!in) break;
    }
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned len = 0;
    EVP_DigestFinal_ex(ctx, md, &len);
    EVP_MD_CTX_free(ctx);
    return digest_hex(md, len);
}

Json read_json_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw ParseError("cannot open file: " + p.string());
    Json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw ParseError("invalid JSON in " + p.string() + ": " + e.what());
    }
    return doc;
}

void write_json_file(const std::filesystem::path& p, const Json& doc) {
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(p);
    if (!out) throw ParseError("cannot write file: " + p.string());
    out << doc.dump(2) << "\n";
}

std::string json_kind(const Json& doc) {
    if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
        throw ParseError("document has no kind");
    }
    return doc["kind"].get<std::string>();
}

// -- per-kind codecs ------------------------------------------------------

Json field_to_json(const FieldSpec& f) { return f.str(); }

FieldSpec field_from_json(const Json& j) {
    if (!j.is_string()) throw ParseError("field must be a string");
    return FieldSpec::parse(j.get<std::string>());
}

Json tensor_entries(const SparseTensor& t) {
    Json arr = Json::array();
    for (const auto& [idx, v] : t.entries()) {
        Json e = Json::array();
        for (auto k : idx) e.push_back(k);
        e.push_back(v.str());
        arr.push_back(std::move(e));
    }
    return arr;
}

SparseTensor tensor_entries_parse(const Json& entries, std::vector<std::uint32_t> shape,
                                  const FieldSpec& f) {
    SparseTensor t(std::move(shape), f);
    if (!entries.is_array()) throw ParseError("tensor entries must be an array");
    for (const auto& e : entries) {
        if (!e.is_array() || e.size() != t.order() + 1) {
            throw ParseError("tensor entry arity mismatch");
        }
        Index idx(t.order());
        for (std::size_t k = 0; k < t.order(); ++k) idx[k] = e[k].get<std::uint32_t>();
        t.add(idx, Scalar::parse(e[t.order()].get<std::string>(), f));
    }
    return t;
}

Json monoid_to_json(const FiniteMonoid& m, const Json& provenance) {
    Json j;
    j["schema-version"] = kSchemaVersion;
    j["kind"] = "monoid";
    j["elements"] = m.elements;
    j["identity"] = m.identity;
    Json table = Json::array();
    for (std::uint32_t i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (std::uint32_t k = 0; k < m.size(); ++k) row.push_back(m.product(i, k));
        table.push_back(std::move(row));
    }
    j["table"] = std::move(table);
    if (!provenance.empty()) j["provenance"] = provenance;
    return j;
}

FiniteMonoid monoid_from_json(const Json& j) {
    if (json_kind(j) != "monoid") throw KindMismatchError("expected a monoid document");
    FiniteMonoid m;
    m.elements = j.at("elements").get<std::vector<std::string>>();
    m.identity = j.at("identity").get<std::uint32_t>();
    const auto& table = j.at("table");
    const std::uint32_t n = m.size();
    if (!table.is_array() || table.size() != n) throw ParseError("monoid table has wrong size");
    m.table.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : table) {
        if (!row.is_array() || row.size() != n) throw ParseError("monoid table row has wrong size");
        for (const auto& e : row) m.table.push_back(e.get<std::uint32_t>());
    }
    return m;
}

namespace {

FiniteMonoid monoid_ref_parse(const Json& j, const std::filesystem::path& base_dir) {
    if (j.is_string()) {
        return monoid_from_json(read_json_file(base_dir / j.get<std::string>()));
    }
    return monoid_from_json(j);
}

}  // namespace

Json clifford_spec_to_json(const CliffordSpec& s) {
    Json j;
    j["schema-version"] = kSchemaVersion;
    j["kind"] = "clifford-spec";
    j["lattice"] = monoid_to_json(s.lattice);
    Json groups = Json::object();
    for (const auto& [node, g] : s.groups) groups[node] = monoid_to_json(g);
    j["groups"] = std::move(groups);
    Json homs = Json::object();
    for (const auto& [edge, map] : s.edge_homs) homs[edge.first + ">" + edge.second] = map;
    j["homs"] = std::move(homs);
    return j;
}

CliffordSpec clifford_spec_from_json(const Json& j, const std::filesystem::path& base_dir) {
    if (json_kind(j) != "clifford-spec") throw KindMismatchError("expected a clifford-spec");
    CliffordSpec s;
    s.lattice = monoid_ref_parse(j.at("lattice"), base_dir);
    for (const auto& [node, g] : j.at("groups").items()) {
        s.groups[node] = monoid_ref_parse(g, base_dir);
    }
    for (const auto& [edge, map] : j.at("homs").items()) {
        auto gt = edge.find('>');
        if (gt == std::string::npos) throw ParseError("hom key must be \"upper>lower\"");
        s.edge_homs[{edge.substr(0, gt), edge.substr(gt + 1)}] =
            map.get<std::vector<std::uint32_t>>();
    }
    return s;
}

namespace {

void almost_to_json_into(Json& j, const AlmostBialgebra& a) {
    j["schema-version"] = kSchemaVersion;
    j["field"] = field_to_json(a.field);
    j["dim"] = a.dim;
    j["basis"] = a.basis;
    j["mul"] = tensor_entries(a.mul);
    j["unit"] = tensor_entries(a.unit);
    j["comul"] = tensor_entries(a.comul);
    j["counit"] = tensor_entries(a.counit);
}

AlmostBialgebra almost_from_json_core(const Json& j) {
    AlmostBialgebra a;
    a.field = field_from_json(j.at("field"));
    a.dim = j.at("dim").get<std::uint32_t>();
    a.basis = j.at("basis").get<std::vector<std::string>>();
    if (a.basis.size() != a.dim) throw ParseError("basis label count differs from dim");
    a.mul = tensor_entries_parse(j.at("mul"), {a.dim, a.dim, a.dim}, a.field);
    a.unit = tensor_entries_parse(j.at("unit"), {a.dim}, a.field);
    a.comul = tensor_entries_parse(j.at("comul"), {a.dim, a.dim, a.dim}, a.field);
    a.counit = tensor_entries_parse(j.at("counit"), {a.dim}, a.field);
    return a;
}

}  // namespace

Json algebra_to_json(const WeakHopfAlgebra& h, const Json& provenance) {
    Json j;
    almost_to_json_into(j, h.base);
    j["kind"] = "weak-hopf-algebra";
    j["antipode"] = tensor_entries(h.antipode.mat);
    if (!provenance.empty()) j["provenance"] = provenance;
    return j;
}

WeakHopfAlgebra algebra_from_json(const Json& j) {
    if (json_kind(j) != "weak-hopf-algebra") {
        throw KindMismatchError("expected a weak-hopf-algebra document");
    }
    WeakHopfAlgebra h;
    h.base = almost_from_json_core(j);
    h.antipode =
        LinMap::from_tensor(tensor_entries_parse(j.at("antipode"), {h.base.dim, h.base.dim},
                                                 h.base.field));
    return h;
}

Json double_to_json(const QuasiBicrossedProduct& d, const Json& provenance) {
    Json j;
    almost_to_json_into(j, d.alg);
    j["kind"] = "double";
    j["dim-x"] = d.dim_x;
    j["dim-a"] = d.dim_a;
    if (!provenance.empty()) j["provenance"] = provenance;
    return j;
}

QuasiBicrossedProduct double_from_json(const Json& j, const std::filesystem::path& base_dir) {
    if (json_kind(j) != "double") throw KindMismatchError("expected a double document");
    QuasiBicrossedProduct d;
    d.alg = almost_from_json_core(j);
    d.dim_x = j.at("dim-x").get<std::uint32_t>();
    d.dim_a = j.at("dim-a").get<std::uint32_t>();
    if (j.contains("provenance") && j["provenance"].contains("source")) {
        const auto& src = j["provenance"]["source"];
        const std::filesystem::path path = base_dir / src.at("path").get<std::string>();
        if (std::filesystem::exists(path)) {
            const std::string hash = sha256_file(path);
            if (hash == src.at("sha256").get<std::string>()) {
                d.source_h =
                    std::make_shared<WeakHopfAlgebra>(algebra_from_json(read_json_file(path)));
            } else {
                std::cerr << "warning: stale double provenance, source hash mismatch for " << path
                          << "\n";
            }
        }
    }
    return d;
}

Json form_to_json(const BilinearForm& form) {
    Json j;
    j["schema-version"] = kSchemaVersion;
    j["kind"] = "bilinear-form";
    j["field"] = field_to_json(form.matrix.field());
    j["rows"] = form.left_dim;
    j["cols"] = form.right_dim;
    j["entries"] = tensor_entries(form.matrix);
    return j;
}

BilinearForm form_from_json(const Json& j) {
    if (json_kind(j) != "bilinear-form") throw KindMismatchError("expected a bilinear-form");
    const FieldSpec f = field_from_json(j.at("field"));
    BilinearForm form(j.at("rows").get<std::uint32_t>(), j.at("cols").get<std::uint32_t>(), f);
    form.matrix = tensor_entries_parse(j.at("entries"), {form.left_dim, form.right_dim}, f);
    return form;
}

Json module_to_json(const ModuleAction& act, const Json& algebra_ref) {
    Json j;
    j["schema-version"] = kSchemaVersion;
    j["kind"] = "module";
    j["field"] = field_to_json(act.action.field());
    j["algebra"] = algebra_ref;
    j["algebra-dim"] = act.alg_dim;
    j["dim"] = act.v_dim;
    j["action"] = tensor_entries(act.action);
    return j;
}

ModuleAction module_from_json(const Json& j) {
    if (json_kind(j) != "module") throw KindMismatchError("expected a module document");
    const FieldSpec f = field_from_json(j.at("field"));
    ModuleAction act;
    act.alg_dim = j.at("algebra-dim").get<std::uint32_t>();
    act.v_dim = j.at("dim").get<std::uint32_t>();
    act.action = tensor_entries_parse(j.at("action"), {act.alg_dim, act.v_dim, act.v_dim}, f);
    return act;
}

Json rmatrix_to_json(const QuasiRMatrix& r, const Json& provenance) {
    Json j;
    j["schema-version"] = kSchemaVersion;
    j["kind"] = "tensor";
    j["field"] = field_to_json(r.tensor.field());
    Json shape = Json::array();
    for (auto d : r.tensor.shape()) shape.push_back(d);
    j["shape"] = std::move(shape);
    j["monomials"] = r.monomials;
    j["entries"] = tensor_entries(r.tensor);
    if (!provenance.empty()) j["provenance"] = provenance;
    return j;
}

Json report_to_json(const CheckReport& rep) {
    Json j;
    j["name"] = rep.name;
    j["passed"] = rep.passed();
    if (rep.informational) j["informational"] = true;
    j["failure-count"] = rep.failure_count;
    Json ws = Json::array();
    for (const auto& w : rep.witnesses) {
        Json wj;
        Json idx = Json::array();
        for (auto k : w.index) idx.push_back(k);
        wj["index"] = std::move(idx);
        wj["expected"] = w.expected.str();
        wj["actual"] = w.actual.str();
        ws.push_back(std::move(wj));
    }
    j["witnesses"] = std::move(ws);
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    if (!rep.subs.empty()) {
        Json subs = Json::array();
        for (const auto& s : rep.subs) subs.push_back(report_to_json(s));
        j["subs"] = std::move(subs);
    }
    return j;
}

// -- report document ------------------------------------------------------

bool ReportDocument::overall() const {
    for (const auto& c : checks) {
        if (!c.report.passed()) return false;
    }
    return true;
}

Json ReportDocument::to_json(bool with_timings) const {
    Json j;
    j["schema-version"] = kSchemaVersion;
    j["kind"] = "report";
    j["tool-version"] = tool_version;
    Json ins = Json::array();
    for (const auto& [path, hash] : inputs) {
        Json e;
        e["path"] = path;
        e["sha256"] = hash;
        ins.push_back(std::move(e));
    }
    j["inputs"] = std::move(ins);
    j["overall"] = overall();
    Json cs = Json::array();
    for (const auto& c : checks) {
        Json cj = report_to_json(c.report);
        if (with_timings) cj["wall-ms"] = c.wall_ms;
        cs.push_back(std::move(cj));
    }
    j["checks"] = std::move(cs);
    return j;
}

namespace {

void report_text_lines(const CheckReport& rep, const std::string& indent, std::ostream& out) {
    out << indent << (rep.informational ? "info" : (rep.passed() ? "pass" : "FAIL")) << "  "
        << rep.name;
    if (rep.informational && rep.failure_count > 0) {
        out << " (does not hold: " << rep.failure_count << " entries)";
    } else if (rep.failure_count > 0) {
        out << " (" << rep.failure_count << " failing entries";
        if (!rep.witnesses.empty()) {
            out << "; first at [";
            for (std::size_t k = 0; k < rep.witnesses[0].index.size(); ++k) {
                if (k) out << ",";
                out << rep.witnesses[0].index[k];
            }
            out << "] expected " << rep.witnesses[0].expected.str() << " got "
                << rep.witnesses[0].actual.str();
        }
        out << ")";
    }
    for (const auto& n : rep.notes) out << "\n" << indent << "      # " << n;
    out << "\n";
    for (const auto& s : rep.subs) report_text_lines(s, indent + "  ", out);
}

}  // namespace

std::string ReportDocument::to_text(bool with_timings) const {
    std::ostringstream out;
    out << "tool-version: " << tool_version << "\n";
    for (const auto& [path, hash] : inputs) out << "input: " << path << " sha256:" << hash << "\n";
    for (const auto& c : checks) {
        report_text_lines(c.report, "", out);
        if (with_timings) out << "      wall-ms: " << c.wall_ms << "\n";
    }
    out << (overall() ? "OVERALL: pass" : "OVERALL: FAIL") << "\n";
    return out.str();
}

// -- cache ------------------------------------------------------------------

std::optional<Json> Cache::lookup(const std::string& key) const {
    if (!enabled_) return std::nullopt;
    const std::filesystem::path p = dir_ / (key + ".json");
    if (!std::filesystem::exists(p)) return std::nullopt;
    try {
        return read_json_file(p);
    } catch (const std::exception& e) {
        std::cerr << "warning: ignoring corrupt cache entry " << p << ": " << e.what() << "\n";
        return std::nullopt;
    }
}

void Cache::store(const std::string& key, const Json& doc) const {
    if (!enabled_) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    const std::filesystem::path tmp = dir_ / (key + ".tmp");
    const std::filesystem::path dst = dir_ / (key + ".json");
    {
        std::ofstream out(tmp);
        if (!out) {
            std::cerr << "warning: cannot write cache entry " << dst << "\n";
            return;
        }
        out << doc.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, dst, ec);
    if (ec) std::cerr << "warning: cache rename failed for " << dst << "\n";
}

}  // namespace wha

#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "weakhopf/modules.hpp"
#include "weakhopf/monoid.hpp"
#include "weakhopf/qdouble.hpp"

namespace wha {

// Alphabetically ordered keys (nlohmann default) keep every emitted document
// canonical; scalars serialize as strings.
using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

std::string sha256_hex(const std::string& bytes);
std::string sha256_file(const std::filesystem::path& p);

Json read_json_file(const std::filesystem::path& p);
void write_json_file(const std::filesystem::path& p, const Json& doc);

std::string json_kind(const Json& doc);

// -- per-kind codecs ------------------------------------------------------

Json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& j);

Json tensor_entries(const SparseTensor& t);
SparseTensor tensor_entries_parse(const Json& entries, std::vector<std::uint32_t> shape,
                                  const FieldSpec& f);

Json monoid_to_json(const FiniteMonoid& m, const Json& provenance = Json::object());
FiniteMonoid monoid_from_json(const Json& j);

Json clifford_spec_to_json(const CliffordSpec& s);
CliffordSpec clifford_spec_from_json(const Json& j, const std::filesystem::path& base_dir);

Json algebra_to_json(const WeakHopfAlgebra& h, const Json& provenance = Json::object());
WeakHopfAlgebra algebra_from_json(const Json& j);

Json double_to_json(const QuasiBicrossedProduct& d, const Json& provenance = Json::object());
/// Restores source-algebra provenance when the referenced file still exists
/// with a matching hash; otherwise leaves it empty.
QuasiBicrossedProduct double_from_json(const Json& j, const std::filesystem::path& base_dir);

Json form_to_json(const BilinearForm& form);
BilinearForm form_from_json(const Json& j);

Json module_to_json(const ModuleAction& act, const Json& algebra_ref);
ModuleAction module_from_json(const Json& j);

Json rmatrix_to_json(const QuasiRMatrix& r, const Json& provenance = Json::object());

Json report_to_json(const CheckReport& rep);

// -- report document ------------------------------------------------------

struct TimedCheck {
    CheckReport report;
    double wall_ms = 0.0;
};

struct ReportDocument {
    std::string tool_version = kToolVersion;
    std::vector<std::pair<std::string, std::string>> inputs;  // (path, sha256)
    std::vector<TimedCheck> checks;

    bool overall() const;
    /// Timings are opt-in: the canonical document is byte-identical across
    /// runs and worker counts.
    Json to_json(bool with_timings) const;
    std::string to_text(bool with_timings) const;
};

// -- cache ------------------------------------------------------------------

/// Content-addressed artifact cache; writes are temp-file-then-rename and
/// corrupt entries are ignored with a warning.
class Cache {
public:
    Cache() = default;
    explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)), enabled_(!dir_.empty()) {}

    bool enabled() const { return enabled_; }
    const std::filesystem::path& dir() const { return dir_; }
    std::optional<Json> lookup(const std::string& key) const;
    void store(const std::string& key, const Json& doc) const;

private:
    std::filesystem::path dir_;
    bool enabled_ = false;
};

}  // namespace wha

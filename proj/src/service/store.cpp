#include "gar/service/store.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <chrono>
#include <ctime>
#include <fstream>
#include <mutex>
#include <sstream>

#include <json.hpp>

namespace gar::service {

using Json = nlohmann::ordered_json;

std::string_view to_string(RunStatus s) noexcept {
    switch (s) {
    case RunStatus::Pending: return "pending";
    case RunStatus::Done: return "done";
    case RunStatus::Failed: return "failed";
    }
    return "failed";
}

namespace {

RunStatus parse_status(const std::string& s) {
    if (s == "pending") return RunStatus::Pending;
    if (s == "done") return RunStatus::Done;
    if (s == "failed") return RunStatus::Failed;
    throw Error(ErrorCode::Parse, "unknown run status '" + s + "'");
}

std::optional<std::string> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_atomic(const std::filesystem::path& path, std::string_view data) {
    static std::atomic<unsigned long> counter{0};
    auto tmp = path;
    tmp += ".tmp." + std::to_string(counter++);
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out.write(data.data(), static_cast<std::streamsize>(data.size()));
        out.flush();
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

Json meta_json(const ArtifactMeta& m) {
    Json j;
    j["id"] = m.id;
    j["kind"] = std::string(formats::to_string(m.kind));
    j["name"] = m.name;
    j["created_at"] = m.created_at;
    return j;
}

} // namespace

std::string run_to_json(const GeneralizationRun& run) {
    Json j;
    j["id"] = run.id;
    j["ruleset_id"] = run.ruleset_id;
    j["taxonomyset_id"] = run.taxonomyset_id;
    j["dataset_id"] = run.dataset_id ? Json(*run.dataset_id) : Json(nullptr);
    j["side"] = std::string(to_string(run.side));
    j["options"] = {{"max_level", run.options.max_level ? Json(*run.options.max_level) : Json(nullptr)},
                    {"merge_only", run.options.merge_only}};
    j["status"] = std::string(to_string(run.status));
    j["result_id"] = run.result_id ? Json(*run.result_id) : Json(nullptr);
    j["warnings"] = run.warnings;
    if (!run.error.empty()) j["error"] = run.error;
    return j.dump(2) + "\n";
}

GeneralizationRun run_from_json(std::string_view text) {
    try {
        const auto j = Json::parse(text);
        GeneralizationRun run;
        run.id = j.at("id").get<std::string>();
        run.ruleset_id = j.at("ruleset_id").get<std::string>();
        run.taxonomyset_id = j.at("taxonomyset_id").get<std::string>();
        if (!j.at("dataset_id").is_null()) run.dataset_id = j.at("dataset_id").get<std::string>();
        auto side = parse_side(j.at("side").get<std::string>());
        if (!side) throw Error(ErrorCode::Parse, "bad side in run record");
        run.side = *side;
        const auto& o = j.at("options");
        if (!o.at("max_level").is_null()) run.options.max_level = o.at("max_level").get<std::size_t>();
        run.options.merge_only = o.at("merge_only").get<bool>();
        run.status = parse_status(j.at("status").get<std::string>());
        if (!j.at("result_id").is_null()) run.result_id = j.at("result_id").get<std::string>();
        run.warnings = j.at("warnings").get<std::vector<std::string>>();
        if (j.contains("error")) run.error = j.at("error").get<std::string>();
        return run;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("corrupt run record: ") + e.what());
    }
}

std::string content_id(std::string_view kind, std::string_view body) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    const unsigned char sep = 0;
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    EVP_DigestUpdate(ctx, kind.data(), kind.size());
    EVP_DigestUpdate(ctx, &sep, 1);
    EVP_DigestUpdate(ctx, body.data(), body.size());
    EVP_DigestFinal_ex(ctx, digest, &len);
    EVP_MD_CTX_free(ctx);
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < 16; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

bool is_valid_id(std::string_view id) noexcept {
    if (id.size() != 32) return false;
    for (char c : id)
        if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) return false;
    return true;
}

std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

ArtifactStore::ArtifactStore(std::filesystem::path root) : root_(std::move(root)) {
    std::filesystem::create_directories(root_ / "artifacts");
    std::filesystem::create_directories(root_ / "runs");
}

std::filesystem::path ArtifactStore::artifact_path(std::string_view id, std::string_view ext) const {
    return root_ / "artifacts" / (std::string(id) + std::string(ext));
}

std::filesystem::path ArtifactStore::run_path(std::string_view id) const {
    return root_ / "runs" / (std::string(id) + ".json");
}

ArtifactMeta ArtifactStore::put(formats::DocumentKind kind, const std::string& name, std::string_view body) {
    ArtifactMeta m{content_id(formats::to_string(kind), body), kind, name, utc_now()};
    std::unique_lock lock(mutex_);
    if (auto existing = read_file(artifact_path(m.id, ".json"))) {
        const auto j = Json::parse(*existing);
        return ArtifactMeta{m.id, kind, j.at("name").get<std::string>(), j.at("created_at").get<std::string>()};
    }
    // Body first: metadata is the commit marker.
    write_atomic(artifact_path(m.id, ".body"), body);
    write_atomic(artifact_path(m.id, ".json"), meta_json(m).dump(2) + "\n");
    return m;
}

std::optional<ArtifactMeta> ArtifactStore::meta(std::string_view id) const {
    if (!is_valid_id(id)) return std::nullopt;
    std::shared_lock lock(mutex_);
    auto text = read_file(artifact_path(id, ".json"));
    if (!text) return std::nullopt;
    const auto j = Json::parse(*text);
    auto kind = formats::parse_kind(j.at("kind").get<std::string>());
    if (!kind) return std::nullopt;
    return ArtifactMeta{std::string(id), *kind, j.at("name").get<std::string>(), j.at("created_at").get<std::string>()};
}

std::optional<std::string> ArtifactStore::body(std::string_view id) const {
    if (!is_valid_id(id)) return std::nullopt;
    std::shared_lock lock(mutex_);
    if (!std::filesystem::exists(artifact_path(id, ".json"))) return std::nullopt;
    return read_file(artifact_path(id, ".body"));
}

bool ArtifactStore::remove(std::string_view id) {
    if (!is_valid_id(id)) return false;
    std::unique_lock lock(mutex_);
    const bool existed = std::filesystem::remove(artifact_path(id, ".json"));
    std::filesystem::remove(artifact_path(id, ".body"));
    return existed;
}

void ArtifactStore::put_run(const GeneralizationRun& run) {
    std::unique_lock lock(mutex_);
    write_atomic(run_path(run.id), run_to_json(run));
}

std::optional<GeneralizationRun> ArtifactStore::run(std::string_view id) const {
    if (!is_valid_id(id)) return std::nullopt;
    std::shared_lock lock(mutex_);
    auto text = read_file(run_path(id));
    if (!text) return std::nullopt;
    return run_from_json(*text);
}

} // namespace gar::service

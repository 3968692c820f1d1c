#ifndef GAR_SERVICE_STORE_HPP
#define GAR_SERVICE_STORE_HPP

#include <filesystem>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "gar/formats.hpp"

namespace gar::service {

struct ArtifactMeta {
    std::string id;
    formats::DocumentKind kind = formats::DocumentKind::Transactions;
    std::string name;
    /// UTC, ISO 8601.
    std::string created_at;
    friend bool operator==(const ArtifactMeta&, const ArtifactMeta&) = default;
};

enum class RunStatus { Pending, Done, Failed };
std::string_view to_string(RunStatus s) noexcept;

struct GeneralizationRun {
    std::string id;
    std::string ruleset_id;
    std::string taxonomyset_id;
    std::optional<std::string> dataset_id;
    Side side = Side::LHS;
    GartOptions options;
    RunStatus status = RunStatus::Pending;
    /// Present iff status is Done.
    std::optional<std::string> result_id;
    std::vector<std::string> warnings;
    std::string error;
    friend bool operator==(const GeneralizationRun&, const GeneralizationRun&) = default;
};

std::string run_to_json(const GeneralizationRun& run);
GeneralizationRun run_from_json(std::string_view text);

/// Hex SHA-256 prefix of `kind` and `body`; 32 lowercase hex digits.
std::string content_id(std::string_view kind, std::string_view body);
/// Ids are exactly 32 lowercase hex digits; anything else is never a path.
bool is_valid_id(std::string_view id) noexcept;

/// Content-addressed flat files under `root`:
///   artifacts/<id>.body, artifacts/<id>.json, runs/<id>.json
/// Every file is published by rename, so readers see whole files or none.
class ArtifactStore {
public:
    explicit ArtifactStore(std::filesystem::path root);

    const std::filesystem::path& root() const noexcept { return root_; }

    /// Idempotent: a byte-identical body of the same kind returns the
    /// existing metadata unchanged.
    ArtifactMeta put(formats::DocumentKind kind, const std::string& name, std::string_view body);
    std::optional<ArtifactMeta> meta(std::string_view id) const;
    std::optional<std::string> body(std::string_view id) const;
    bool remove(std::string_view id);

    void put_run(const GeneralizationRun& run);
    std::optional<GeneralizationRun> run(std::string_view id) const;

private:
    std::filesystem::path artifact_path(std::string_view id, std::string_view ext) const;
    std::filesystem::path run_path(std::string_view id) const;

    std::filesystem::path root_;
    mutable std::shared_mutex mutex_;
};

/// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_now();

} // namespace gar::service

#endif

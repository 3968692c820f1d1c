#ifndef GAR_SERVICE_SERVICE_HPP
#define GAR_SERVICE_SERVICE_HPP

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "gar/query.hpp"
#include "gar/service/store.hpp"

namespace gar::service {

using Json = nlohmann::ordered_json;

struct GeneralizeRequest {
    std::string ruleset_id;
    std::string taxonomyset_id;
    std::optional<std::string> dataset_id;
    Side side = Side::LHS;
    GartOptions options;
};

struct Download {
    ArtifactMeta meta;
    std::string body;
};

/// The four artifacts behind a finished run; the data set only when one
/// was attached.
struct RunDownloads {
    std::optional<ArtifactMeta> data_set;
    ArtifactMeta rule_set;
    std::optional<ArtifactMeta> generalized_rule_set;
    ArtifactMeta taxonomy_set;
};

/// Status code for an error surfaced over HTTP.
int http_status(ErrorCode code) noexcept;

class Service {
public:
    explicit Service(std::filesystem::path root);
    ~Service();
    Service(const Service&) = delete;
    Service& operator=(const Service&) = delete;

    ArtifactStore& store() noexcept { return store_; }

    /// Throws the parser's error when the body is not a valid `kind`.
    ArtifactMeta create_artifact(formats::DocumentKind kind, const std::string& name, std::string_view body,
                                 std::vector<std::string>* warnings = nullptr);
    ArtifactMeta run_mine(const std::string& dataset_id, const MiningParams& params);

    /// Runs are keyed by their request, so repeating a request returns the
    /// recorded run. With `async` the run may come back pending.
    GeneralizationRun run_generalization(const GeneralizeRequest& request, bool async = false);
    GeneralizationRun get_run(const std::string& run_id) const;
    RunDownloads downloads(const std::string& run_id) const;

    std::shared_ptr<const GeneralizedRuleSet> result(const std::string& result_id) const;
    std::vector<RuleView> query_generalized(const std::string& result_id, const RuleQuery& q) const;
    /// Looks a rule up by its rule_id.
    RuleView rule_view(const std::string& result_id, const std::string& rule_key) const;

    Download download(const std::string& id) const;
    void remove(const std::string& id);

    /// Blocks until queued asynchronous runs have finished.
    void wait_idle();

private:
    Download require(const std::string& id, std::optional<formats::DocumentKind> kind) const;
    void execute(GeneralizationRun run);

    ArtifactStore store_;
    mutable std::mutex mutex_;
    mutable std::map<std::string, std::shared_ptr<const GeneralizedRuleSet>> cache_;
    std::set<std::string> in_flight_;
    std::vector<std::thread> workers_;
};

// Wire forms --------------------------------------------------------------

Json to_json(const ArtifactMeta& meta);
Json to_json(const GeneralizationRun& run);
Json to_json(const RuleView& view, const std::vector<Measure>& selected);
Json to_json(const RuleKey& key);
Json to_json(const AssociationRule& rule);
Json to_json(const MeasureVector& v, const std::vector<Measure>& selected);
Json to_json(const RunDownloads& d);

} // namespace gar::service

#endif

#include "gar/service/service.hpp"

#include "gar/miner.hpp"

namespace gar::service {

using formats::DocumentKind;

int http_status(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NotFound: return 404;
    case ErrorCode::Query:
    case ErrorCode::InvalidArgument: return 400;
    case ErrorCode::NotAvailable: return 409;
    default: return 422;
    }
}

Service::Service(std::filesystem::path root) : store_(std::move(root)) {}

Service::~Service() { wait_idle(); }

void Service::wait_idle() {
    std::vector<std::thread> workers;
    {
        std::lock_guard lock(mutex_);
        workers.swap(workers_);
    }
    for (auto& t : workers) t.join();
}

ArtifactMeta Service::create_artifact(DocumentKind kind, const std::string& name, std::string_view body,
                                      std::vector<std::string>* warnings) {
    auto w = formats::validate(kind, body);
    if (warnings) *warnings = std::move(w);
    return store_.put(kind, name, body);
}

Download Service::require(const std::string& id, std::optional<DocumentKind> kind) const {
    auto meta = store_.meta(id);
    auto body = meta ? store_.body(id) : std::nullopt;
    if (!meta || !body) throw Error(ErrorCode::NotFound, "no artifact with id '" + id + "'");
    if (kind && meta->kind != *kind)
        throw Error(ErrorCode::InvalidArgument, "artifact '" + id + "' is a " + std::string(formats::to_string(meta->kind)) +
                                                    ", expected " + std::string(formats::to_string(*kind)));
    return Download{std::move(*meta), std::move(*body)};
}

Download Service::download(const std::string& id) const { return require(id, std::nullopt); }

void Service::remove(const std::string& id) {
    if (!store_.remove(id)) throw Error(ErrorCode::NotFound, "no artifact with id '" + id + "'");
    std::lock_guard lock(mutex_);
    cache_.erase(id);
}

ArtifactMeta Service::run_mine(const std::string& dataset_id, const MiningParams& params) {
    params.validate();
    const auto data = require(dataset_id, DocumentKind::Transactions);
    const auto db = formats::load_transactions(data.body).value;
    const auto rules = mine(db, params);
    const std::string name = data.meta.name.empty() ? "mined" : data.meta.name + " (mined)";
    return store_.put(DocumentKind::RuleSet, name, formats::write_ruleset(rules));
}

namespace {

std::string request_id(const GeneralizeRequest& r) {
    Json j;
    j["ruleset_id"] = r.ruleset_id;
    j["taxonomyset_id"] = r.taxonomyset_id;
    j["dataset_id"] = r.dataset_id ? Json(*r.dataset_id) : Json(nullptr);
    j["side"] = std::string(to_string(r.side));
    j["max_level"] = r.options.max_level ? Json(*r.options.max_level) : Json(nullptr);
    j["merge_only"] = r.options.merge_only;
    return content_id("generalization-run", j.dump());
}

bool any_rule_item_in_taxonomy(const RuleSet& rules, const TaxonomySet& taxes) {
    for (const auto& [key, rule] : rules) {
        for (const auto* side : {&key.lhs, &key.rhs})
            for (const auto& item : *side)
                if (taxes.find(item)) return true;
    }
    return false;
}

} // namespace

GeneralizationRun Service::run_generalization(const GeneralizeRequest& request, bool async) {
    request.options.validate();
    // Dangling references fail the request itself rather than the run.
    require(request.ruleset_id, DocumentKind::RuleSet);
    require(request.taxonomyset_id, DocumentKind::Taxonomy);
    if (request.dataset_id) require(*request.dataset_id, DocumentKind::Transactions);

    GeneralizationRun run;
    run.id = request_id(request);
    run.ruleset_id = request.ruleset_id;
    run.taxonomyset_id = request.taxonomyset_id;
    run.dataset_id = request.dataset_id;
    run.side = request.side;
    run.options = request.options;

    {
        std::lock_guard lock(mutex_);
        if (in_flight_.count(run.id)) return *store_.run(run.id);
        if (auto existing = store_.run(run.id); existing && existing->status != RunStatus::Pending) {
            if (existing->status == RunStatus::Failed || !existing->result_id || store_.meta(*existing->result_id))
                return *existing;
        }
        store_.put_run(run);
        in_flight_.insert(run.id);
        if (async) {
            workers_.emplace_back([this, run] { execute(run); });
            return run;
        }
    }
    execute(run);
    return *store_.run(run.id);
}

void Service::execute(GeneralizationRun run) {
    try {
        const auto rules = formats::load_ruleset(require(run.ruleset_id, DocumentKind::RuleSet).body);
        const auto taxes = formats::load_taxonomies(require(run.taxonomyset_id, DocumentKind::Taxonomy).body);
        std::optional<TransactionDatabase> db;
        std::vector<std::string> warnings = rules.warnings;
        if (run.dataset_id) {
            auto loaded = formats::load_transactions(require(*run.dataset_id, DocumentKind::Transactions).body);
            db = std::move(loaded.value);
            warnings.insert(warnings.end(), loaded.warnings.begin(), loaded.warnings.end());
        }
        auto result = generalize(rules.value, taxes, run.side, run.options, db ? &*db : nullptr);
        warnings.insert(warnings.end(), result.warnings.begin(), result.warnings.end());
        if (!any_rule_item_in_taxonomy(rules.value, taxes))
            warnings.push_back("no taxonomy item occurs in any rule; nothing was generalized");

        const auto rules_meta = store_.meta(run.ruleset_id);
        const std::string name = rules_meta && !rules_meta->name.empty() ? rules_meta->name + " (generalized)"
                                                                         : "generalized";
        const auto meta = store_.put(DocumentKind::GeneralizedRuleSet, name, formats::write_generalized(result));
        run.status = RunStatus::Done;
        run.result_id = meta.id;
        run.warnings = std::move(warnings);
    } catch (const std::exception& e) {
        run.status = RunStatus::Failed;
        run.result_id.reset();
        run.error = e.what();
    }
    store_.put_run(run);
    std::lock_guard lock(mutex_);
    in_flight_.erase(run.id);
}

GeneralizationRun Service::get_run(const std::string& run_id) const {
    auto run = store_.run(run_id);
    if (!run) throw Error(ErrorCode::NotFound, "no run with id '" + run_id + "'");
    return *run;
}

RunDownloads Service::downloads(const std::string& run_id) const {
    const auto run = get_run(run_id);
    auto must = [&](const std::string& id) {
        auto m = store_.meta(id);
        if (!m) throw Error(ErrorCode::NotFound, "run '" + run_id + "' refers to missing artifact '" + id + "'");
        return *m;
    };
    RunDownloads d{std::nullopt, must(run.ruleset_id), std::nullopt, must(run.taxonomyset_id)};
    if (run.dataset_id) d.data_set = must(*run.dataset_id);
    if (run.result_id) d.generalized_rule_set = must(*run.result_id);
    return d;
}

std::shared_ptr<const GeneralizedRuleSet> Service::result(const std::string& result_id) const {
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(result_id); it != cache_.end()) return it->second;
    }
    auto data = require(result_id, DocumentKind::GeneralizedRuleSet);
    auto parsed = std::make_shared<const GeneralizedRuleSet>(formats::parse_generalized(data.body));
    std::lock_guard lock(mutex_);
    return cache_.emplace(result_id, std::move(parsed)).first->second;
}

std::vector<RuleView> Service::query_generalized(const std::string& result_id, const RuleQuery& q) const {
    return run_query(*result(result_id), q);
}

RuleView Service::rule_view(const std::string& result_id, const std::string& rule_key) const {
    const auto set = result(result_id);
    for (const auto& r : set->rules)
        if (rule_id(r.key()) == rule_key) return make_view(*set, r);
    throw Error(ErrorCode::NotFound, "no rule '" + rule_key + "' in result '" + result_id + "'");
}

// Wire forms --------------------------------------------------------------

namespace {

Json items(const Itemset& s) {
    Json a = Json::array();
    for (const auto& i : s) a.push_back(i.name());
    return a;
}

Json opt(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

} // namespace

Json to_json(const ArtifactMeta& meta) {
    return Json{{"id", meta.id},
                {"kind", std::string(formats::to_string(meta.kind))},
                {"name", meta.name},
                {"created_at", meta.created_at},
                {"url", "/artifacts/" + meta.id + "/raw"}};
}

Json to_json(const GeneralizationRun& run) { return Json::parse(run_to_json(run)); }

Json to_json(const RuleKey& key) { return Json{{"id", rule_id(key)}, {"lhs", items(key.lhs)}, {"rhs", items(key.rhs)}}; }

Json to_json(const AssociationRule& rule) {
    return Json{{"id", rule_id(rule.key())},
                {"lhs", items(rule.lhs)},
                {"rhs", items(rule.rhs)},
                {"support", opt(rule.support)},
                {"confidence", opt(rule.confidence)}};
}

Json to_json(const MeasureVector& v, const std::vector<Measure>& selected) {
    Json j = Json::object();
    for (Measure m : selected.empty() ? std::vector<Measure>(all_measures.begin(), all_measures.end()) : selected)
        j[std::string(measure_name(m))] = opt(v.get(m));
    return j;
}

Json to_json(const RuleView& view, const std::vector<Measure>& selected) {
    const auto& r = view.rule;
    Json j;
    j["id"] = view.id;
    j["lhs"] = items(r.lhs);
    j["rhs"] = items(r.rhs);
    j["side"] = std::string(to_string(r.side));
    j["generalized_items"] = items(r.generalized_items);
    j["rendered"] = render_rule(r);
    j["source_count"] = r.sources.size();
    if (r.table) {
        j["table"] = {{"n_lr", r.table->n_lr},
                      {"n_lnr", r.table->n_lnr},
                      {"n_nlr", r.table->n_nlr},
                      {"n_nlnr", r.table->n_nlnr},
                      {"n", r.table->n}};
    } else {
        j["table"] = nullptr;
    }
    j["measures"] = to_json(view.measures, selected);
    if (view.flags) {
        j["flags"] = {{"below_min_support", view.flags->below_min_support},
                      {"below_min_confidence", view.flags->below_min_confidence}};
    } else {
        j["flags"] = nullptr;
    }
    j["links"] = {{"expanded", view.links.expanded},
                  {"sources", view.links.sources},
                  {"measures", view.links.measures_drilldown}};
    return j;
}

Json to_json(const RunDownloads& d) {
    auto one = [](const std::optional<ArtifactMeta>& m) { return m ? to_json(*m) : Json(nullptr); };
    return Json{{"data_set", one(d.data_set)},
                {"rule_set", to_json(d.rule_set)},
                {"generalized_rule_set", one(d.generalized_rule_set)},
                {"taxonomy_set", to_json(d.taxonomy_set)}};
}

} // namespace gar::service

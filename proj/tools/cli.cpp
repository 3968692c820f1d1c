#include "cli.hpp"

#include <pthread.h>
#include <signal.h>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "gar/formats.hpp"
#include "gar/miner.hpp"
#include "gar/report.hpp"
#include "gar/service/http.hpp"
#include "gar/synth.hpp"

namespace gar::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::NotFound, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << data;
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
}

void print_warnings(std::ostream& err, const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) err << "warning: " << w << "\n";
}

Side side_from(const std::string& token) {
    auto side = parse_side(token);
    if (!side) throw CLI::ValidationError("--side", "expected 'lhs' or 'rhs', got '" + token + "'");
    return *side;
}

GartOptions gart_options(std::optional<std::size_t> max_level, bool merge_only) {
    GartOptions o;
    o.max_level = max_level;
    o.merge_only = merge_only;
    o.validate();
    return o;
}

std::string percent(double rate) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f%%", rate);
    return buf;
}

LabeledPath labeled(const std::string& spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) return {std::filesystem::path(spec).stem().string(), spec};
    return {spec.substr(0, eq), spec.substr(eq + 1)};
}

struct MineArgs {
    std::string db, out, format = "json";
    MiningParams params;
};

struct GeneralizeArgs {
    std::string rules, taxonomies, db, out, side = "lhs";
    std::optional<std::size_t> max_level;
    bool merge_only = false;
};

struct QueryArgs {
    std::string result, format = "tsv", sort;
    std::vector<std::string> items, lhs, rhs, measures, where;
    std::optional<std::size_t> limit, offset;
    bool exact = false;
};

struct ReportArgs {
    std::vector<std::string> rules, taxonomies;
    std::string side = "lhs", csv, cells;
    std::optional<std::size_t> max_level;
    bool merge_only = false;
    std::size_t threads = 1;
};

struct SynthArgs {
    SynthParams params;
    std::string db_out, taxonomy_out;
};

struct ServeArgs {
    std::string listen = "127.0.0.1:8080";
    std::string store = "gar-store";
};

int cmd_mine(const MineArgs& a, std::ostream& out, std::ostream& err) {
    auto db = formats::load_transactions(read_file(a.db));
    print_warnings(err, db.warnings);
    const auto rules = mine(db.value, a.params);
    write_file(a.out, a.format == "borgelt" ? formats::export_borgelt_rules(rules) : formats::write_ruleset(rules));
    out << rules.size() << " rules from " << db.value.size() << " transactions\n";
    return Ok;
}

int cmd_generalize(const GeneralizeArgs& a, std::ostream& out, std::ostream& err) {
    const Side side = side_from(a.side);
    const auto options = gart_options(a.max_level, a.merge_only);
    auto rules = formats::load_ruleset(read_file(a.rules));
    print_warnings(err, rules.warnings);
    const auto taxes = formats::load_taxonomies(read_file(a.taxonomies));
    std::optional<TransactionDatabase> db;
    if (!a.db.empty()) {
        auto loaded = formats::load_transactions(read_file(a.db));
        print_warnings(err, loaded.warnings);
        db = std::move(loaded.value);
    }
    const auto result = generalize(rules.value, taxes, side, options, db ? &*db : nullptr);
    print_warnings(err, result.warnings);
    if (!a.out.empty()) write_file(a.out, formats::write_generalized(result));
    out << rules.value.size() << " -> " << result.rules.size() << ", "
        << percent(reduction_rate(rules.value.size(), result.rules.size())) << "\n";
    return Ok;
}

int cmd_query(const QueryArgs& a, std::ostream& out) {
    std::multimap<std::string, std::string> params;
    for (const auto& i : a.items) params.emplace("item", i);
    for (const auto& i : a.lhs) params.emplace("lhs", i);
    for (const auto& i : a.rhs) params.emplace("rhs", i);
    for (const auto& m : a.measures) params.emplace("measure", m);
    for (const auto& w : a.where) params.emplace("where", w);
    if (!a.sort.empty()) params.emplace("sort", a.sort);
    if (a.limit) params.emplace("limit", std::to_string(*a.limit));
    if (a.offset) params.emplace("offset", std::to_string(*a.offset));
    if (a.exact) params.emplace("exact", "true");
    const auto q = parse_query(params);
    const auto set = formats::parse_generalized(read_file(a.result));
    const auto views = run_query(set, q);
    if (a.format == "json") {
        service::Json list = service::Json::array();
        for (const auto& v : views) list.push_back(service::to_json(v, q.selected_measures));
        out << list.dump(2) << "\n";
    } else {
        std::vector<Measure> columns = q.selected_measures;
        if (columns.empty()) columns.assign(all_measures.begin(), all_measures.end());
        out << export_view(views, columns);
    }
    return Ok;
}

int cmd_report(const ReportArgs& a, std::ostream& out, std::ostream& err) {
    ReportOptions options;
    options.side = side_from(a.side);
    options.gart = gart_options(a.max_level, a.merge_only);
    options.threads = a.threads;
    if (!a.cells.empty()) options.cell_dir = a.cells;
    std::vector<LabeledPath> rules, taxes;
    for (const auto& s : a.rules) rules.push_back(labeled(s));
    for (const auto& s : a.taxonomies) taxes.push_back(labeled(s));
    const auto report = build_report(rules, taxes, options);
    out << format_table(report);
    if (!a.csv.empty()) write_file(a.csv, format_csv(report));
    std::size_t failed = 0;
    for (const auto& c : report.cells) failed += c.error ? 1 : 0;
    if (failed) {
        err << failed << " of " << report.cells.size() << " cells failed\n";
        return ValidationError;
    }
    return Ok;
}

int cmd_synth(const SynthArgs& a, std::ostream& out) {
    const auto data = synthesize(a.params);
    write_file(a.db_out, formats::write_transactions(data.db));
    write_file(a.taxonomy_out, formats::write_taxonomies(data.taxonomies));
    out << data.db.size() << " transactions, " << data.db.item_universe().size() << " items, "
        << data.taxonomies.size() << " taxonomies\n";
    return Ok;
}

std::pair<std::string, int> split_listen(const std::string& listen) {
    const auto colon = listen.rfind(':');
    if (colon == std::string::npos) throw CLI::ValidationError("--listen", "expected host:port, got '" + listen + "'");
    try {
        std::size_t used = 0;
        const int port = std::stoi(listen.substr(colon + 1), &used);
        if (used != listen.size() - colon - 1 || port < 0 || port > 65535) throw std::out_of_range("port");
        return {listen.substr(0, colon), port};
    } catch (const std::logic_error&) {
        throw CLI::ValidationError("--listen", "bad port in '" + listen + "'");
    }
}

int cmd_serve(const ServeArgs& a, std::ostream& out, std::ostream& err) {
    const auto [host, port] = split_listen(a.listen);

    // Signals are taken synchronously by a watcher; server threads inherit the mask.
    sigset_t signals, previous;
    sigemptyset(&signals);
    sigaddset(&signals, SIGINT);
    sigaddset(&signals, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &signals, &previous);

    service::Service svc(a.store);
    service::HttpServer http(svc);
    const int bound = http.bind(host, port);
    if (bound < 0) {
        pthread_sigmask(SIG_SETMASK, &previous, nullptr);
        err << "error: cannot listen on " << a.listen << "\n";
        return ValidationError;
    }
    out << "listening on http://" << host << ":" << bound << " (store " << a.store << ")" << std::endl;

    std::atomic<bool> done{false};
    std::thread watcher([&] {
        const timespec tick{0, 100'000'000};
        while (!done) {
            if (sigtimedwait(&signals, nullptr, &tick) > 0) {
                while (!done) {
                    http.stop();
                    std::this_thread::sleep_for(std::chrono::milliseconds(20));
                }
            }
        }
    });
    const bool ok = http.run();
    done = true;
    watcher.join();
    svc.wait_idle();
    pthread_sigmask(SIG_SETMASK, &previous, nullptr);
    out << "stopped" << std::endl;
    return ok ? Ok : InternalError;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalize association rules with item taxonomies."};
    app.name("gar-cli");
    app.require_subcommand(1);

    MineArgs mine_args;
    auto* mine_cmd = app.add_subcommand("mine", "Mine association rules with Apriori");
    mine_cmd->add_option("--db", mine_args.db, "Transactions file")->required();
    mine_cmd->add_option("--min-support", mine_args.params.min_support, "Minimum support fraction")
        ->capture_default_str();
    mine_cmd->add_option("--min-confidence", mine_args.params.min_confidence, "Minimum confidence")
        ->capture_default_str();
    mine_cmd->add_option("--max-items", mine_args.params.max_items, "Maximum items per rule")->capture_default_str();
    mine_cmd->add_option("--out", mine_args.out, "Output rule file")->required();
    mine_cmd->add_option("--format", mine_args.format, "Output format")
        ->check(CLI::IsMember({"json", "borgelt"}))
        ->capture_default_str();

    GeneralizeArgs gen_args;
    auto* gen_cmd = app.add_subcommand("generalize", "Generalize a rule set with taxonomies");
    gen_cmd->add_option("--rules", gen_args.rules, "Rule file (document or Borgelt text)")->required();
    gen_cmd->add_option("--taxonomies", gen_args.taxonomies, "Taxonomy file")->required();
    gen_cmd->add_option("--side", gen_args.side, "Side to generalize: lhs or rhs")->capture_default_str();
    gen_cmd->add_option("--db", gen_args.db, "Transactions for contingency tables");
    gen_cmd->add_option("--max-level", gen_args.max_level, "Parent steps per taxonomy");
    gen_cmd->add_flag("--merge-only", gen_args.merge_only, "Keep only levels that merge rules");
    gen_cmd->add_option("--out", gen_args.out, "Generalized rule set output");

    QueryArgs q_args;
    auto* q_cmd = app.add_subcommand("query", "Query a generalized rule set");
    q_cmd->add_option("--result", q_args.result, "Generalized rule set document")->required();
    q_cmd->add_option("--item", q_args.items, "Item on either side (repeatable)");
    q_cmd->add_option("--lhs", q_args.lhs, "Item on the left side (repeatable)");
    q_cmd->add_option("--rhs", q_args.rhs, "Item on the right side (repeatable)");
    q_cmd->add_option("--measure", q_args.measures, "Measure column to show (repeatable)");
    q_cmd->add_option("--where", q_args.where, "Predicate such as support>=0.5 (repeatable)");
    q_cmd->add_option("--sort", q_args.sort, "measure[:asc|:desc]");
    q_cmd->add_option("--limit", q_args.limit);
    q_cmd->add_option("--offset", q_args.offset);
    q_cmd->add_flag("--exact", q_args.exact, "Match items literally");
    q_cmd->add_option("--format", q_args.format)->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();

    ReportArgs r_args;
    auto* r_cmd = app.add_subcommand("report", "Reduction rates over rule sets x taxonomy sets");
    r_cmd->add_option("--rules", r_args.rules, "label=path of a rule file (repeatable)")->required();
    r_cmd->add_option("--taxonomies", r_args.taxonomies, "label=path of a taxonomy file (repeatable)")->required();
    r_cmd->add_option("--side", r_args.side)->capture_default_str();
    r_cmd->add_option("--max-level", r_args.max_level);
    r_cmd->add_flag("--merge-only", r_args.merge_only);
    r_cmd->add_option("--csv", r_args.csv, "Write chart data as CSV");
    r_cmd->add_option("--cells", r_args.cells, "Directory for per-cell rule listings");
    r_cmd->add_option("--threads", r_args.threads)->check(CLI::PositiveNumber)->capture_default_str();

    SynthArgs s_args;
    auto* s_cmd = app.add_subcommand("synth", "Generate a synthetic database and taxonomy");
    s_cmd->add_option("--transactions", s_args.params.transactions)->capture_default_str();
    s_cmd->add_option("--items", s_args.params.leaf_items, "Leaf items")->capture_default_str();
    s_cmd->add_option("--depth", s_args.params.taxonomy_depth, "Internal levels")->capture_default_str();
    s_cmd->add_option("--branching", s_args.params.branching)->capture_default_str();
    s_cmd->add_option("--seed", s_args.params.seed)->capture_default_str();
    s_cmd->add_option("--db-out", s_args.db_out)->required();
    s_cmd->add_option("--taxonomy-out", s_args.taxonomy_out)->required();

    ServeArgs v_args;
    auto* v_cmd = app.add_subcommand("serve", "Run the HTTP service");
    v_cmd->add_option("--listen", v_args.listen, "host:port")->envname("GAR_LISTEN")->capture_default_str();
    v_cmd->add_option("--store", v_args.store, "Store root directory")->envname("GAR_STORE")->capture_default_str();

    try {
        app.parse(argc, argv);
        if (mine_cmd->parsed()) return cmd_mine(mine_args, out, err);
        if (gen_cmd->parsed()) return cmd_generalize(gen_args, out, err);
        if (q_cmd->parsed()) return cmd_query(q_args, out);
        if (r_cmd->parsed()) return cmd_report(r_args, out, err);
        if (s_cmd->parsed()) return cmd_synth(s_args, out);
        if (v_cmd->parsed()) return cmd_serve(v_args, out, err);
        return InternalError;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : ValidationError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return ValidationError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return InternalError;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"gar-cli"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace gar::cli

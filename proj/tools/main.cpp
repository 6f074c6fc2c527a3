// snipkit command line: validate and ingest citation corpora, compute the
// indicator report, rank journals, emit benchmark corpora, and compare the
// field-level and article-level normalizations side by side.

#include "snipkit/corpus.hpp"
#include "snipkit/fractional.hpp"
#include "snipkit/indicators.hpp"
#include "snipkit/report.hpp"
#include "snipkit/synth.hpp"

#include "snipkit/csv.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using snipkit::Error;
using snipkit::ErrorKind;
using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1; // validation / configuration problems
constexpr int kExitIo = 2;      // unreadable or unwritable paths

struct CorpusPaths {
    std::string journals;
    std::string documents;
    std::string references;
    std::string jsonl;

    snipkit::CorpusData read() const {
        if (!jsonl.empty()) return snipkit::read_corpus_jsonl(jsonl);
        if (journals.empty() || documents.empty() || references.empty()) {
            snipkit::fail(ErrorKind::config,
                          "provide --corpus FILE.jsonl or all of --journals/--documents/--references");
        }
        return snipkit::read_corpus_csv(journals, documents, references);
    }

    snipkit::Corpus load() const { return snipkit::Corpus::build(read()); }
};

void add_corpus_options(CLI::App* cmd, CorpusPaths& paths) {
    cmd->add_option("--journals", paths.journals, "Journals CSV");
    cmd->add_option("--documents", paths.documents, "Documents CSV");
    cmd->add_option("--references", paths.references, "References CSV");
    cmd->add_option("--corpus", paths.jsonl, "Single JSON-lines corpus file")
        ->excludes("--journals");
}

void write_text(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) snipkit::fail(ErrorKind::io, "cannot write " + out_path);
    out << text;
}

std::string metric_text(const snipkit::Metric& m) {
    return m.defined() ? snipkit::format_double(m.value) : "";
}

// ---------------------------------------------------------------------------
// subcommand bodies

int run_validate(const CorpusPaths& paths) {
    // Read leniently so invariant violations are listed instead of thrown.
    auto violations = snipkit::validate(paths.read());
    for (const auto& v : violations) {
        std::cout << v.rule << ": " << v.entity << ": " << v.detail << '\n';
    }
    return violations.empty() ? kExitOk : kExitInvalid;
}

int run_compute(const CorpusPaths& paths, const snipkit::IndicatorConfig& config,
                snipkit::ZeroRPolicy policy, const std::string& format,
                const std::string& out_path) {
    config.check();
    snipkit::Corpus corpus = paths.load();
    snipkit::Report report = snipkit::build_report(corpus, config, policy);
    write_text(out_path, format == "json" ? snipkit::report_to_json(report)
                                          : snipkit::report_to_csv(report));
    return kExitOk;
}

int run_rank(const std::string& report_path, const std::string& key_name, std::int64_t top,
             const std::string& format, const std::string& out_path) {
    auto key = snipkit::parse_rank_key(key_name);
    if (!key) snipkit::fail(ErrorKind::config, "unknown rank key '" + key_name + "'");
    snipkit::Report report = snipkit::read_report_file(report_path);
    auto entries = snipkit::rank_rows(report, *key, top);

    std::string text;
    if (format == "json") {
        json doc = json::array();
        std::int64_t position = 1;
        for (const auto& e : entries) {
            json row{{"rank", position++}, {"journal_id", e.journal_id}};
            if (e.value.defined()) row["value"] = e.value.value;
            else row["value"] = nullptr;
            doc.push_back(std::move(row));
        }
        text = doc.dump(2) + "\n";
    } else {
        std::ostringstream out;
        out << "rank,journal_id," << snipkit::rank_key_label(*key) << '\n';
        std::int64_t position = 1;
        for (const auto& e : entries) {
            out << position++ << ',' << snipkit::csv::escape(e.journal_id) << ','
                << metric_text(e.value) << '\n';
        }
        text = out.str();
    }
    write_text(out_path, text);
    return kExitOk;
}

int run_compare(const std::string& report_path, const std::string& format,
                const std::string& out_path) {
    snipkit::Report report = snipkit::read_report_file(report_path);
    auto rows = snipkit::compare_rows(report);

    std::string text;
    if (format == "json") {
        json doc = json::array();
        for (const auto& c : rows) {
            json row{{"journal_id", c.journal_id}};
            row["snip"] = c.snip.defined() ? json(c.snip.value) : json(nullptr);
            row["rip"] = c.rip.defined() ? json(c.rip.value) : json(nullptr);
            row["fcc_total"] = c.fcc_total.defined() ? json(c.fcc_total.value) : json(nullptr);
            row["fcc_windowed"] =
                c.fcc_windowed.defined() ? json(c.fcc_windowed.value) : json(nullptr);
            row["rank_snip"] = c.rank_snip;
            row["rank_rip"] = c.rank_rip;
            row["rank_fcc_total"] = c.rank_fcc_total;
            row["rank_fcc_windowed"] = c.rank_fcc_windowed;
            row["zero_r_count"] = c.zero_r_count;
            row["zero_r_share"] =
                c.zero_r_share.defined() ? json(c.zero_r_share.value) : json(nullptr);
            row["rank_changed"] = c.rank_changed;
            doc.push_back(std::move(row));
        }
        text = doc.dump(2) + "\n";
    } else {
        std::ostringstream out;
        out << "journal_id,snip,rip,fcc_total,fcc_windowed,rank_snip,rank_rip,rank_fcc_total,"
               "rank_fcc_windowed,zero_r_count,zero_r_share,rank_changed\n";
        for (const auto& c : rows) {
            out << snipkit::csv::escape(c.journal_id) << ',' << metric_text(c.snip) << ','
                << metric_text(c.rip) << ',' << metric_text(c.fcc_total) << ','
                << metric_text(c.fcc_windowed) << ',' << c.rank_snip << ',' << c.rank_rip << ','
                << c.rank_fcc_total << ',' << c.rank_fcc_windowed << ',' << c.zero_r_count << ','
                << metric_text(c.zero_r_share) << ',' << (c.rank_changed ? "true" : "false")
                << '\n';
        }
        text = out.str();
    }
    write_text(out_path, text);
    return kExitOk;
}

int run_simulate(const std::string& benchmark, const std::vector<double>& params,
                 std::uint64_t seed, const std::string& format, const std::string& out_dir) {
    snipkit::Corpus corpus = [&] {
        if (benchmark == "two_field") {
            int low = params.size() > 0 ? static_cast<int>(params[0]) : 10;
            int high = params.size() > 1 ? static_cast<int>(params[1]) : 50;
            return snipkit::two_field_benchmark(low, high, seed);
        }
        if (benchmark == "coverage") {
            double share = params.size() > 0 ? params[0] : 1.0;
            return snipkit::coverage_benchmark(share, seed);
        }
        if (benchmark == "immediacy") {
            int extra = params.size() > 0 ? static_cast<int>(params[0]) : 40;
            return snipkit::immediacy_benchmark(extra, seed);
        }
        snipkit::fail(ErrorKind::config, "unknown benchmark '" + benchmark +
                                             "' (expected two_field, coverage, or immediacy)");
    }();

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) snipkit::fail(ErrorKind::io, "cannot create directory " + out_dir);

    json manifest;
    manifest["benchmark"] = benchmark;
    manifest["parameters"] = params;
    manifest["seed"] = seed;
    manifest["census_year"] = snipkit::kBenchmarkCensusYear;
    manifest["corpus_hash"] = corpus.content_hash_hex();
    if (format == "json") {
        std::string path = (fs::path(out_dir) / "corpus.jsonl").string();
        snipkit::write_corpus_jsonl(corpus, path);
        manifest["files"] = {path};
    } else {
        std::string j = (fs::path(out_dir) / "journals.csv").string();
        std::string d = (fs::path(out_dir) / "documents.csv").string();
        std::string r = (fs::path(out_dir) / "references.csv").string();
        snipkit::write_corpus_csv(corpus, j, d, r);
        manifest["files"] = {j, d, r};
    }
    std::ofstream out(fs::path(out_dir) / "manifest.json", std::ios::binary);
    if (!out) snipkit::fail(ErrorKind::io, "cannot write manifest in " + out_dir);
    out << manifest.dump(2) << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Source-normalized journal impact indicators over citation corpora"};
    app.require_subcommand(1);
    app.fallthrough(); // shared flags may follow the subcommand name
    app.set_config("--config", "", "Key-value config file; command-line flags override it");

    snipkit::IndicatorConfig config;
    config.census_year = 2007;
    std::string zero_r = "exclude";
    std::string format = "table";
    std::string out_path;
    std::uint64_t seed = 0;

    app.add_option("--census-year", config.census_year, "Year citations are counted in")
        ->capture_default_str();
    app.add_option("--citation-window", config.citation_window,
                   "Age band (years) for cited papers and cited references")
        ->capture_default_str();
    app.add_option("--field-window", config.field_window,
                   "Age band (years) for subject-field membership")
        ->capture_default_str();
    app.add_option("--zero-r-policy", zero_r, "Handling of citing articles with r = 0")
        ->check(CLI::IsMember({"exclude", "undefined"}))
        ->capture_default_str();
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    app.add_option("--seed", seed, "Generator seed")->capture_default_str();
    app.add_option("--out", out_path, "Output file (default: stdout) or directory for simulate");

    CorpusPaths validate_paths;
    CLI::App* cmd_validate = app.add_subcommand("validate", "Check corpus invariants");
    add_corpus_options(cmd_validate, validate_paths);

    CorpusPaths compute_paths;
    CLI::App* cmd_compute =
        app.add_subcommand("compute", "Compute the indicator + fractional report");
    add_corpus_options(cmd_compute, compute_paths);

    std::string rank_report;
    std::string rank_key = "snip";
    std::int64_t rank_top = -1;
    CLI::App* cmd_rank = app.add_subcommand("rank", "Order journals by an indicator");
    cmd_rank->add_option("report", rank_report, "Report file written by compute")->required();
    cmd_rank->add_option("--key", rank_key, "snip, rip, fcc_total, or fcc_windowed")
        ->capture_default_str();
    cmd_rank->add_option("--top", rank_top, "Keep the first N rows (negative: all)")
        ->capture_default_str();

    std::string sim_benchmark;
    std::vector<double> sim_params;
    CLI::App* cmd_simulate =
        app.add_subcommand("simulate", "Write a benchmark corpus and its manifest");
    cmd_simulate->add_option("benchmark", sim_benchmark, "two_field, coverage, or immediacy")
        ->required();
    cmd_simulate->add_option("params", sim_params, "Benchmark parameters");

    std::string compare_report;
    CLI::App* cmd_compare =
        app.add_subcommand("compare", "SNIP vs fractional counting, with rank shifts");
    cmd_compare->add_option("report", compare_report, "Report file written by compute")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInvalid;
    }

    try {
        snipkit::ZeroRPolicy policy = zero_r == "undefined"
                                          ? snipkit::ZeroRPolicy::undefined_on_any_zero
                                          : snipkit::ZeroRPolicy::exclude;
        if (cmd_validate->parsed()) return run_validate(validate_paths);
        if (cmd_compute->parsed()) {
            return run_compute(compute_paths, config, policy, format, out_path);
        }
        if (cmd_rank->parsed()) return run_rank(rank_report, rank_key, rank_top, format, out_path);
        if (cmd_simulate->parsed()) {
            return run_simulate(sim_benchmark, sim_params, seed, format,
                                out_path.empty() ? "." : out_path);
        }
        if (cmd_compare->parsed()) return run_compare(compare_report, format, out_path);
        return kExitInvalid;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::io ? kExitIo : kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
}

#pragma once
// Combined indicator + fractional report: one row per journal, CSV and JSON
// serializations that embed the run's provenance (config echo and corpus
// hash), and the rank / compare views the CLI prints.

#include "snipkit/corpus.hpp"
#include "snipkit/fractional.hpp"
#include "snipkit/indicators.hpp"
#include "snipkit/metric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace snipkit {

struct ReportRow {
    std::string journal_id;
    std::int64_t paper_count = 0;
    std::int64_t citation_count = 0;
    Metric rip;
    std::int64_t subject_field_size = 0;
    Metric cp;
    Metric rdcp;
    Metric snip;
    Metric fcc_total;
    Metric fcc_windowed;
    std::int64_t zero_r_count = 0;
    Metric zero_r_share;
};

struct Report {
    std::vector<ReportRow> rows; // journal_id ascending
    Metric median_cp;
    IndicatorConfig config;
    ZeroRPolicy policy = ZeroRPolicy::exclude;
    std::string corpus_hash;
};

Report build_report(const Corpus& corpus, const IndicatorConfig& config,
                    ZeroRPolicy policy = ZeroRPolicy::exclude);

// Shortest representation that round-trips through parsing.
std::string format_double(double value);

std::string report_to_csv(const Report& report);
std::string report_to_json(const Report& report);

// Accepts either serialization (JSON when the first byte is '{').
Report parse_report(const std::string& text);
Report read_report_file(const std::string& path);

// ---------------------------------------------------------------------------
// Rank / compare views

enum class RankKey : unsigned char { snip, rip, fcc_total, fcc_windowed };

std::optional<RankKey> parse_rank_key(std::string_view name);
std::string_view rank_key_label(RankKey key);
Metric rank_value(const ReportRow& row, RankKey key);

struct RankEntry {
    std::string journal_id;
    Metric value;
};

// Descending by value; undefined values after every defined one; ties broken
// by journal_id ascending. top < 0 keeps all rows, top = 0 none.
std::vector<RankEntry> rank_rows(const Report& report, RankKey key, std::int64_t top);

struct CompareRow {
    std::string journal_id;
    Metric snip;
    Metric rip;
    Metric fcc_total;
    Metric fcc_windowed;
    // competition ranks: 1 + number of journals with a strictly greater
    // defined value; undefined values share the rank after all defined ones
    std::int64_t rank_snip = 0;
    std::int64_t rank_rip = 0;
    std::int64_t rank_fcc_total = 0;
    std::int64_t rank_fcc_windowed = 0;
    std::int64_t zero_r_count = 0;
    Metric zero_r_share;
    bool rank_changed = false; // SNIP rank differs from a RIP or FCC rank
};

std::vector<CompareRow> compare_rows(const Report& report);

} // namespace snipkit

#include "snipkit/report.hpp"

#include "snipkit/csv.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace snipkit {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kCsvHeader =
    "journal_id,paper_count,citation_count,rip,subject_field_size,cp,rdcp,snip,"
    "fcc_total,fcc_windowed,zero_r_count,zero_r_share";

std::string metric_cell(const Metric& m) { return m.defined() ? format_double(m.value) : ""; }

Metric metric_from_cell(const std::string& cell, std::string_view reason_hint) {
    if (cell.empty()) {
        return Metric::undefined(reason_hint.empty() ? Undef::undefined_input
                                                     : undef_from_label(reason_hint));
    }
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
        fail(ErrorKind::parse, "bad numeric cell '" + cell + "'");
    }
    return Metric::of(v);
}

std::int64_t int_from_cell(const std::string& cell) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
        fail(ErrorKind::parse, "bad integer cell '" + cell + "'");
    }
    return v;
}

void metric_to_json(json& obj, json& undefined, const char* name, const Metric& m) {
    if (m.defined()) {
        obj[name] = m.value;
    } else {
        obj[name] = nullptr;
        undefined[name] = std::string(undef_label(m.reason));
    }
}

Metric metric_from_json(const json& obj, const json& undefined, const char* name) {
    if (obj.at(name).is_null()) {
        std::string reason = undefined.value(name, std::string{});
        return Metric::undefined(undef_from_label(reason));
    }
    return Metric::of(obj.at(name).get<double>());
}

ZeroRPolicy policy_from_label(std::string_view label) {
    if (label == "exclude") return ZeroRPolicy::exclude;
    if (label == "undefined") return ZeroRPolicy::undefined_on_any_zero;
    fail(ErrorKind::parse, "unknown zero_r_policy '" + std::string(label) + "'");
}

} // namespace

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    (void)ec;
    return std::string(buf, ptr);
}

Report build_report(const Corpus& corpus, const IndicatorConfig& config, ZeroRPolicy policy) {
    IndicatorReport indicators = compute_all(corpus, config);
    FccReport fcc = compute_fcc(corpus, config, policy);

    Report report;
    report.median_cp = indicators.median_cp;
    report.config = config;
    report.policy = policy;
    report.corpus_hash = corpus.content_hash_hex();
    report.rows.reserve(indicators.rows.size());
    for (std::size_t i = 0; i < indicators.rows.size(); ++i) {
        const JournalIndicators& a = indicators.rows[i];
        const JournalFcc& b = fcc.rows[i];
        ReportRow row;
        row.journal_id = a.journal_id;
        row.paper_count = a.paper_count;
        row.citation_count = a.citation_count;
        row.rip = a.rip;
        row.subject_field_size = a.subject_field_size;
        row.cp = a.cp;
        row.rdcp = a.rdcp;
        row.snip = a.snip;
        row.fcc_total = b.fcc_total;
        row.fcc_windowed = b.fcc_windowed;
        row.zero_r_count = b.zero_r_count;
        row.zero_r_share = b.zero_r_share;
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string report_to_csv(const Report& report) {
    std::ostringstream out;
    out << "# snipkit report v1\n";
    out << "# corpus_hash=" << report.corpus_hash << '\n';
    out << "# census_year=" << report.config.census_year << '\n';
    out << "# citation_window=" << report.config.citation_window << '\n';
    out << "# field_window=" << report.config.field_window << '\n';
    out << "# median_method=midpoint_average\n";
    out << "# zero_r_policy=" << zero_r_policy_label(report.policy) << '\n';
    out << "# median_cp=" << metric_cell(report.median_cp) << '\n';
    out << "# median_cp_reason=" << undef_label(report.median_cp.reason) << '\n';
    out << kCsvHeader << '\n';
    for (const ReportRow& r : report.rows) {
        out << csv::escape(r.journal_id) << ',' << r.paper_count << ',' << r.citation_count << ','
            << metric_cell(r.rip) << ',' << r.subject_field_size << ',' << metric_cell(r.cp) << ','
            << metric_cell(r.rdcp) << ',' << metric_cell(r.snip) << ',' << metric_cell(r.fcc_total)
            << ',' << metric_cell(r.fcc_windowed) << ',' << r.zero_r_count << ','
            << metric_cell(r.zero_r_share) << '\n';
    }
    return out.str();
}

std::string report_to_json(const Report& report) {
    json doc;
    doc["format"] = "snipkit-report";
    doc["version"] = 1;
    doc["corpus_hash"] = report.corpus_hash;
    doc["config"] = {{"census_year", report.config.census_year},
                     {"citation_window", report.config.citation_window},
                     {"field_window", report.config.field_window},
                     {"median_method", "midpoint_average"},
                     {"zero_r_policy", std::string(zero_r_policy_label(report.policy))}};
    if (report.median_cp.defined()) {
        doc["median_cp"] = report.median_cp.value;
    } else {
        doc["median_cp"] = nullptr;
        doc["median_cp_reason"] = std::string(undef_label(report.median_cp.reason));
    }
    doc["journals"] = json::array();
    for (const ReportRow& r : report.rows) {
        json row;
        json undefined = json::object();
        row["journal_id"] = r.journal_id;
        row["paper_count"] = r.paper_count;
        row["citation_count"] = r.citation_count;
        metric_to_json(row, undefined, "rip", r.rip);
        row["subject_field_size"] = r.subject_field_size;
        metric_to_json(row, undefined, "cp", r.cp);
        metric_to_json(row, undefined, "rdcp", r.rdcp);
        metric_to_json(row, undefined, "snip", r.snip);
        metric_to_json(row, undefined, "fcc_total", r.fcc_total);
        metric_to_json(row, undefined, "fcc_windowed", r.fcc_windowed);
        row["zero_r_count"] = r.zero_r_count;
        metric_to_json(row, undefined, "zero_r_share", r.zero_r_share);
        row["undefined"] = std::move(undefined);
        doc["journals"].push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

namespace {

Report parse_report_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) fail(ErrorKind::parse, "report JSON is malformed");
    try {
        Report report;
        report.corpus_hash = doc.value("corpus_hash", std::string{});
        const json& cfg = doc.at("config");
        report.config.census_year = cfg.at("census_year").get<int>();
        report.config.citation_window = cfg.at("citation_window").get<int>();
        report.config.field_window = cfg.at("field_window").get<int>();
        report.policy = policy_from_label(cfg.value("zero_r_policy", "exclude"));
        if (doc.at("median_cp").is_null()) {
            report.median_cp =
                Metric::undefined(undef_from_label(doc.value("median_cp_reason", std::string{})));
        } else {
            report.median_cp = Metric::of(doc.at("median_cp").get<double>());
        }
        for (const json& jrow : doc.at("journals")) {
            const json& undefined =
                jrow.contains("undefined") ? jrow.at("undefined") : json::object();
            ReportRow row;
            row.journal_id = jrow.at("journal_id").get<std::string>();
            row.paper_count = jrow.at("paper_count").get<std::int64_t>();
            row.citation_count = jrow.at("citation_count").get<std::int64_t>();
            row.rip = metric_from_json(jrow, undefined, "rip");
            row.subject_field_size = jrow.at("subject_field_size").get<std::int64_t>();
            row.cp = metric_from_json(jrow, undefined, "cp");
            row.rdcp = metric_from_json(jrow, undefined, "rdcp");
            row.snip = metric_from_json(jrow, undefined, "snip");
            row.fcc_total = metric_from_json(jrow, undefined, "fcc_total");
            row.fcc_windowed = metric_from_json(jrow, undefined, "fcc_windowed");
            row.zero_r_count = jrow.at("zero_r_count").get<std::int64_t>();
            row.zero_r_share = metric_from_json(jrow, undefined, "zero_r_share");
            report.rows.push_back(std::move(row));
        }
        return report;
    } catch (const json::exception& e) {
        fail(ErrorKind::parse, std::string("report JSON: ") + e.what());
    }
}

Report parse_report_csv(const std::string& text) {
    Report report;
    report.median_cp = Metric::undefined(Undef::no_defined_cp);
    std::istringstream in(text);
    std::string line;
    bool saw_header = false;
    std::string median_cell;
    std::string median_reason;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            std::string key = line.substr(2, eq - 2);
            std::string value = line.substr(eq + 1);
            if (key == "corpus_hash") report.corpus_hash = value;
            else if (key == "census_year") report.config.census_year = static_cast<int>(int_from_cell(value));
            else if (key == "citation_window") report.config.citation_window = static_cast<int>(int_from_cell(value));
            else if (key == "field_window") report.config.field_window = static_cast<int>(int_from_cell(value));
            else if (key == "zero_r_policy") report.policy = policy_from_label(value);
            else if (key == "median_cp") median_cell = value;
            else if (key == "median_cp_reason") median_reason = value;
            continue;
        }
        if (!saw_header) {
            if (line != kCsvHeader) {
                fail(ErrorKind::parse, "report CSV: unexpected header at line " +
                                           std::to_string(line_no));
            }
            saw_header = true;
            continue;
        }
        auto f = csv::split_row(line, "report:" + std::to_string(line_no));
        if (f.size() != 12) {
            fail(ErrorKind::parse, "report CSV: expected 12 columns at line " +
                                       std::to_string(line_no));
        }
        ReportRow row;
        row.journal_id = std::move(f[0]);
        row.paper_count = int_from_cell(f[1]);
        row.citation_count = int_from_cell(f[2]);
        row.rip = metric_from_cell(f[3], "no_window_papers");
        row.subject_field_size = int_from_cell(f[4]);
        row.cp = metric_from_cell(f[5], "empty_subject_field");
        row.rdcp = metric_from_cell(f[6], "");
        row.snip = metric_from_cell(f[7], "");
        row.fcc_total = metric_from_cell(f[8], "no_window_papers");
        row.fcc_windowed = metric_from_cell(f[9], "");
        row.zero_r_count = int_from_cell(f[10]);
        row.zero_r_share = metric_from_cell(f[11], "empty_subject_field");
        report.rows.push_back(std::move(row));
    }
    if (!saw_header) fail(ErrorKind::parse, "report CSV: missing column header");
    report.median_cp = metric_from_cell(median_cell, median_reason);
    return report;
}

} // namespace

Report parse_report(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_report_json(text);
    return parse_report_csv(text);
}

Report read_report_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::io, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_report(buf.str());
}

// ---------------------------------------------------------------------------
// Rank / compare

std::optional<RankKey> parse_rank_key(std::string_view name) {
    if (name == "snip") return RankKey::snip;
    if (name == "rip") return RankKey::rip;
    if (name == "fcc_total") return RankKey::fcc_total;
    if (name == "fcc_windowed") return RankKey::fcc_windowed;
    return std::nullopt;
}

std::string_view rank_key_label(RankKey key) {
    switch (key) {
        case RankKey::snip: return "snip";
        case RankKey::rip: return "rip";
        case RankKey::fcc_total: return "fcc_total";
        case RankKey::fcc_windowed: return "fcc_windowed";
    }
    return "";
}

Metric rank_value(const ReportRow& row, RankKey key) {
    switch (key) {
        case RankKey::snip: return row.snip;
        case RankKey::rip: return row.rip;
        case RankKey::fcc_total: return row.fcc_total;
        case RankKey::fcc_windowed: return row.fcc_windowed;
    }
    return Metric::undefined(Undef::undefined_input);
}

std::vector<RankEntry> rank_rows(const Report& report, RankKey key, std::int64_t top) {
    std::vector<RankEntry> entries;
    entries.reserve(report.rows.size());
    for (const ReportRow& row : report.rows) {
        entries.push_back({row.journal_id, rank_value(row, key)});
    }
    std::sort(entries.begin(), entries.end(), [](const RankEntry& a, const RankEntry& b) {
        if (a.value.defined() != b.value.defined()) return a.value.defined();
        if (a.value.defined() && a.value.value != b.value.value) {
            return a.value.value > b.value.value;
        }
        return a.journal_id < b.journal_id;
    });
    if (top >= 0 && static_cast<std::size_t>(top) < entries.size()) {
        entries.resize(static_cast<std::size_t>(top));
    }
    return entries;
}

namespace {

std::int64_t competition_rank(const std::vector<Metric>& values, const Metric& mine) {
    std::int64_t defined_count = 0;
    std::int64_t greater = 0;
    for (const Metric& v : values) {
        if (!v.defined()) continue;
        ++defined_count;
        if (mine.defined() && v.value > mine.value) ++greater;
    }
    if (!mine.defined()) return defined_count + 1;
    return greater + 1;
}

} // namespace

std::vector<CompareRow> compare_rows(const Report& report) {
    std::vector<Metric> snips, rips, totals, windowed;
    for (const ReportRow& row : report.rows) {
        snips.push_back(row.snip);
        rips.push_back(row.rip);
        totals.push_back(row.fcc_total);
        windowed.push_back(row.fcc_windowed);
    }
    std::vector<CompareRow> out;
    out.reserve(report.rows.size());
    for (const ReportRow& row : report.rows) {
        CompareRow c;
        c.journal_id = row.journal_id;
        c.snip = row.snip;
        c.rip = row.rip;
        c.fcc_total = row.fcc_total;
        c.fcc_windowed = row.fcc_windowed;
        c.rank_snip = competition_rank(snips, row.snip);
        c.rank_rip = competition_rank(rips, row.rip);
        c.rank_fcc_total = competition_rank(totals, row.fcc_total);
        c.rank_fcc_windowed = competition_rank(windowed, row.fcc_windowed);
        c.zero_r_count = row.zero_r_count;
        c.zero_r_share = row.zero_r_share;
        c.rank_changed = c.rank_snip != c.rank_rip || c.rank_snip != c.rank_fcc_total ||
                         c.rank_snip != c.rank_fcc_windowed;
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace snipkit

#include "snipkit/report.hpp"

#include "snipkit/synth.hpp"
#include "support/builders.hpp"
#include "support/corpus_gen.hpp"

#include <doctest.h>

#include <string>
#include <vector>

using namespace snipkit;
using testsupport::doc;
using testsupport::journal;

namespace {

IndicatorConfig config_at(int census_year) {
    IndicatorConfig cfg;
    cfg.census_year = census_year;
    return cfg;
}

void check_reports_equal(const Report& a, const Report& b) {
    REQUIRE(a.rows.size() == b.rows.size());
    CHECK(a.corpus_hash == b.corpus_hash);
    CHECK(a.config.census_year == b.config.census_year);
    CHECK(a.config.citation_window == b.config.citation_window);
    CHECK(a.config.field_window == b.config.field_window);
    CHECK(a.policy == b.policy);
    CHECK(a.median_cp.defined() == b.median_cp.defined());
    if (a.median_cp.defined()) CHECK(a.median_cp.value == b.median_cp.value);
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        const ReportRow& x = a.rows[i];
        const ReportRow& y = b.rows[i];
        CHECK(x.journal_id == y.journal_id);
        CHECK(x.paper_count == y.paper_count);
        CHECK(x.citation_count == y.citation_count);
        CHECK(x.subject_field_size == y.subject_field_size);
        CHECK(x.zero_r_count == y.zero_r_count);
        for (auto field : {&ReportRow::rip, &ReportRow::cp, &ReportRow::rdcp, &ReportRow::snip,
                           &ReportRow::fcc_total, &ReportRow::fcc_windowed,
                           &ReportRow::zero_r_share}) {
            CHECK((x.*field).defined() == (y.*field).defined());
            if ((x.*field).defined()) CHECK((x.*field).value == (y.*field).value);
        }
    }
}

} // namespace

TEST_CASE("format_double round-trips exactly") {
    for (double v : {0.0, 1.0, 0.1, 2.0 / 3.0, 1e-12, 123456.789, 5.0 / 3.0}) {
        std::string text = format_double(v);
        double parsed = std::stod(text);
        CHECK(parsed == v);
    }
}

TEST_CASE("reports survive the CSV round trip") {
    Corpus corpus = testsupport::random_corpus(11);
    Report report = build_report(corpus, config_at(testsupport::kCensusYear));
    Report parsed = parse_report(report_to_csv(report));
    check_reports_equal(report, parsed);
}

TEST_CASE("reports survive the JSON round trip") {
    Corpus corpus = testsupport::random_corpus(12);
    Report report = build_report(corpus, config_at(testsupport::kCensusYear),
                                 ZeroRPolicy::undefined_on_any_zero);
    Report parsed = parse_report(report_to_json(report));
    check_reports_equal(report, parsed);
}

TEST_CASE("undefined indicators serialize as empty cells and carry reasons in JSON") {
    CorpusData data;
    data.journals = {journal("empty")};
    data.documents = {doc("p", "empty", 1950)};
    Corpus corpus = Corpus::build(std::move(data));
    Report report = build_report(corpus, config_at(2007));

    std::string csv = report_to_csv(report);
    CHECK(csv.find("empty,0,0,,0,,,,,,0,\n") != std::string::npos);

    std::string json = report_to_json(report);
    CHECK(json.find("no_window_papers") != std::string::npos);
    CHECK(json.find("empty_subject_field") != std::string::npos);
    CHECK(json.find("no_defined_cp") != std::string::npos);

    Report parsed = parse_report(json);
    CHECK_FALSE(parsed.rows[0].rip.defined());
    CHECK(parsed.rows[0].rip.reason == Undef::no_window_papers);
    CHECK_FALSE(parsed.median_cp.defined());
}

TEST_CASE("serialization is deterministic") {
    Corpus corpus = testsupport::random_corpus(13);
    Report a = build_report(corpus, config_at(testsupport::kCensusYear));
    Report b = build_report(corpus, config_at(testsupport::kCensusYear));
    CHECK(report_to_csv(a) == report_to_csv(b));
    CHECK(report_to_json(a) == report_to_json(b));
}

TEST_CASE("reports embed the corpus hash and the config echo") {
    Corpus corpus = two_field_benchmark(10, 50);
    Report report = build_report(corpus, config_at(kBenchmarkCensusYear));
    std::string csv = report_to_csv(report);
    CHECK(csv.find("# corpus_hash=" + corpus.content_hash_hex()) != std::string::npos);
    CHECK(csv.find("# census_year=2007") != std::string::npos);
    CHECK(csv.find("# citation_window=3") != std::string::npos);
    CHECK(csv.find("# field_window=10") != std::string::npos);
    CHECK(csv.find("# zero_r_policy=exclude") != std::string::npos);
}

TEST_CASE("rank orders descending with undefined last and stable ties") {
    Report report;
    auto row = [](std::string id, Metric snip) {
        ReportRow r;
        r.journal_id = std::move(id);
        r.snip = snip;
        return r;
    };
    report.rows = {
        row("d", Metric::of(1.0)),
        row("c", Metric::undefined(Undef::no_window_papers)),
        row("b", Metric::of(2.0)),
        row("a", Metric::of(1.0)),
    };

    auto ranked = rank_rows(report, RankKey::snip, -1);
    REQUIRE(ranked.size() == 4);
    CHECK(ranked[0].journal_id == "b");
    CHECK(ranked[1].journal_id == "a"); // tie with d, id ascending
    CHECK(ranked[2].journal_id == "d");
    CHECK(ranked[3].journal_id == "c"); // undefined sorts last

    CHECK(rank_rows(report, RankKey::snip, 0).empty());
    CHECK(rank_rows(report, RankKey::snip, 2).size() == 2);
    CHECK(rank_rows(report, RankKey::snip, 99).size() == 4);
}

TEST_CASE("unknown rank keys are rejected, known ones parse") {
    CHECK(parse_rank_key("snip") == RankKey::snip);
    CHECK(parse_rank_key("rip") == RankKey::rip);
    CHECK(parse_rank_key("fcc_total") == RankKey::fcc_total);
    CHECK(parse_rank_key("fcc_windowed") == RankKey::fcc_windowed);
    CHECK_FALSE(parse_rank_key("h_index").has_value());
}

TEST_CASE("compare flags journals whose rank moves between the orderings") {
    Corpus corpus = two_field_benchmark(10, 50);
    Report report = build_report(corpus, config_at(kBenchmarkCensusYear));
    auto rows = compare_rows(report);
    REQUIRE(rows.size() == 4);

    bool any_changed = false;
    for (const auto& c : rows) {
        CHECK(c.rank_snip == 1); // all four journals tie on SNIP
        // 1/n weighting cancels the density contrast exactly, the same way
        // SNIP does: every citer in a field carries n equal to its density
        CHECK(c.rank_fcc_total == 1);
        CHECK(c.rank_fcc_windowed == 1);
        if (c.journal_id.rfind("high-", 0) == 0) {
            CHECK(c.rank_rip == 1); // the dense field leads on raw impact
            CHECK_FALSE(c.rank_changed);
        } else {
            CHECK(c.rank_rip == 3);
            CHECK(c.rank_changed);
            any_changed = true;
        }
    }
    CHECK(any_changed);
}

TEST_CASE("a single journal never sees a rank change") {
    CorpusData data;
    data.journals = {journal("only"), journal("src")};
    data.documents = {doc("p", "only", 2005), doc("c", "src", 2007)};
    data.references = {{"c", "p", std::nullopt}};
    Corpus corpus = Corpus::build(std::move(data));
    Report report = build_report(corpus, config_at(2007));
    for (const auto& c : compare_rows(report)) CHECK_FALSE(c.rank_changed);
}

TEST_CASE("homogeneous windowed reference counts align snip and fcc_windowed orderings") {
    FieldSpec spec;
    spec.field_id = "homog";
    spec.journal_count = 4;
    spec.papers_per_journal_per_year = 8;
    spec.years = {2004, 2007};
    spec.refs_per_paper = 6; // every census article: r = n = 6
    spec.seed = 21;
    Corpus corpus = Corpus::build(generate_field(spec));
    Report report = build_report(corpus, config_at(2007));

    auto by_snip = rank_rows(report, RankKey::snip, -1);
    auto by_windowed = rank_rows(report, RankKey::fcc_windowed, -1);
    REQUIRE(by_snip.size() == by_windowed.size());
    for (std::size_t i = 0; i < by_snip.size(); ++i) {
        CHECK(by_snip[i].journal_id == by_windowed[i].journal_id);
    }
}

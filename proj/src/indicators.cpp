#include "snipkit/indicators.hpp"

#include "scan.hpp"

#include <algorithm>
#include <string>

namespace snipkit {

void IndicatorConfig::check() const {
    if (citation_window < 1) {
        fail(ErrorKind::config, "citation_window must be >= 1, got " +
                                    std::to_string(citation_window));
    }
    if (field_window < citation_window) {
        fail(ErrorKind::config, "field_window (" + std::to_string(field_window) +
                                    ") must be >= citation_window (" +
                                    std::to_string(citation_window) + ")");
    }
}

namespace {

Metric rip_of(detail::CensusScan& scan, JournalIdx j) {
    auto papers = scan.window_papers(j);
    if (papers.empty()) return Metric::undefined(Undef::no_window_papers);
    std::int64_t citations = scan.qualifying_citation_count(j);
    return Metric::of(static_cast<double>(citations) / static_cast<double>(papers.size()));
}

Metric cp_of(detail::CensusScan& scan, JournalIdx j) {
    auto members = scan.field_members(j);
    if (members.empty()) return Metric::undefined(Undef::empty_subject_field);
    std::int64_t r_sum = 0;
    for (DocIdx m : members) r_sum += scan.r_of(m);
    return Metric::of(static_cast<double>(r_sum) / static_cast<double>(members.size()));
}

Metric median_of(std::vector<double> values) {
    if (values.empty()) return Metric::undefined(Undef::no_defined_cp);
    std::sort(values.begin(), values.end());
    std::size_t n = values.size();
    if (n % 2 == 1) return Metric::of(values[n / 2]);
    return Metric::of((values[n / 2 - 1] + values[n / 2]) / 2.0);
}

} // namespace

Metric raw_impact_per_paper(const Corpus& corpus, std::string_view journal_id,
                            const IndicatorConfig& config) {
    config.check();
    JournalIdx j = corpus.require_journal(journal_id);
    detail::CensusScan scan(corpus, config);
    return rip_of(scan, j);
}

std::vector<std::string> subject_field(const Corpus& corpus, std::string_view journal_id,
                                       const IndicatorConfig& config) {
    config.check();
    JournalIdx j = corpus.require_journal(journal_id);
    detail::CensusScan scan(corpus, config);
    std::vector<std::string> out;
    for (DocIdx d : scan.field_members(j)) out.push_back(corpus.document(d).doc_id);
    std::sort(out.begin(), out.end());
    return out;
}

Metric citation_potential(const Corpus& corpus, std::string_view journal_id,
                          const IndicatorConfig& config) {
    config.check();
    JournalIdx j = corpus.require_journal(journal_id);
    detail::CensusScan scan(corpus, config);
    return cp_of(scan, j);
}

Metric median_citation_potential(const Corpus& corpus, const IndicatorConfig& config) {
    config.check();
    detail::CensusScan scan(corpus, config);
    std::vector<double> cps;
    for (JournalIdx j = 0; j < corpus.journal_count(); ++j) {
        if (!corpus.journal(j).indexed) continue;
        Metric cp = cp_of(scan, j);
        if (cp.defined()) cps.push_back(cp.value);
    }
    return median_of(std::move(cps));
}

Metric relative_citation_potential(Metric cp, Metric median_cp) {
    if (!cp.defined()) return Metric::undefined(Undef::undefined_input);
    if (!median_cp.defined()) return Metric::undefined(Undef::no_defined_cp);
    if (median_cp.value == 0.0) return Metric::undefined(Undef::zero_median_cp);
    return Metric::of(cp.value / median_cp.value);
}

Metric snip(Metric rip, Metric rdcp) {
    if (!rip.defined() || !rdcp.defined()) return Metric::undefined(Undef::undefined_input);
    if (rdcp.value == 0.0) return Metric::undefined(Undef::zero_rdcp);
    return Metric::of(rip.value / rdcp.value);
}

IndicatorReport compute_all(const Corpus& corpus, const IndicatorConfig& config) {
    config.check();
    detail::CensusScan scan(corpus, config);
    IndicatorReport report;
    report.rows.reserve(corpus.journal_count());

    for (JournalIdx j = 0; j < corpus.journal_count(); ++j) {
        JournalIndicators row;
        row.journal_id = corpus.journal(j).journal_id;
        row.indexed = corpus.journal(j).indexed;
        auto papers = scan.window_papers(j);
        row.paper_count = static_cast<std::int64_t>(papers.size());
        row.citation_count = scan.qualifying_citation_count(j);
        row.rip = papers.empty()
                      ? Metric::undefined(Undef::no_window_papers)
                      : Metric::of(static_cast<double>(row.citation_count) /
                                   static_cast<double>(row.paper_count));
        auto members = scan.field_members(j);
        row.subject_field_size = static_cast<std::int64_t>(members.size());
        if (members.empty()) {
            row.cp = Metric::undefined(Undef::empty_subject_field);
        } else {
            std::int64_t r_sum = 0;
            for (DocIdx m : members) r_sum += scan.r_of(m);
            row.cp = Metric::of(static_cast<double>(r_sum) / static_cast<double>(members.size()));
        }
        report.rows.push_back(std::move(row));
    }

    std::vector<double> cps;
    for (const JournalIndicators& row : report.rows) {
        if (row.indexed && row.cp.defined()) cps.push_back(row.cp.value);
    }
    report.median_cp = median_of(std::move(cps));

    for (JournalIndicators& row : report.rows) {
        row.rdcp = relative_citation_potential(row.cp, report.median_cp);
        row.snip = snip(row.rip, row.rdcp);
    }
    return report;
}

} // namespace snipkit

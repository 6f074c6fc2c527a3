#include "snipkit/fractional.hpp"

#include "scan.hpp"

#include <map>

namespace snipkit {

namespace {

// Accumulates qualifying citations grouped by their weight denominator and
// divides once per distinct denominator, smallest first. One division per
// group keeps the result independent of edge order and exact whenever the
// counts divide evenly.
class GroupedWeightSum {
public:
    void add(std::int64_t denominator) { ++counts_[denominator]; }

    double total() const {
        double sum = 0.0;
        for (const auto& [den, count] : counts_) {
            sum += static_cast<double>(count) / static_cast<double>(den);
        }
        return sum;
    }

private:
    std::map<std::int64_t, std::int64_t> counts_;
};

Metric fcc_total_of(detail::CensusScan& scan, const Corpus& corpus, JournalIdx j) {
    auto papers = scan.window_papers(j);
    if (papers.empty()) return Metric::undefined(Undef::no_window_papers);
    GroupedWeightSum weights;
    scan.for_each_qualifying_citation(j, [&](DocIdx citing) {
        weights.add(corpus.out_degree(citing)); // citing docs have >= 1 reference
    });
    return Metric::of(weights.total() / static_cast<double>(papers.size()));
}

Metric fcc_windowed_of(detail::CensusScan& scan, JournalIdx j, ZeroRPolicy policy,
                       const std::vector<DocIdx>& members) {
    auto papers = scan.window_papers(j);
    if (papers.empty()) return Metric::undefined(Undef::no_window_papers);
    if (policy == ZeroRPolicy::undefined_on_any_zero) {
        for (DocIdx m : members) {
            if (scan.r_of(m) == 0) return Metric::undefined(Undef::zero_r_member);
        }
    }
    GroupedWeightSum weights;
    scan.for_each_qualifying_citation(j, [&](DocIdx citing) {
        std::int64_t r = scan.r_of(citing);
        if (r > 0) weights.add(r); // r = 0: excluded, surfaced via diagnostics
    });
    return Metric::of(weights.total() / static_cast<double>(papers.size()));
}

ZeroRDiagnostics zero_r_of(detail::CensusScan& scan, const std::vector<DocIdx>& members) {
    ZeroRDiagnostics diag;
    for (DocIdx m : members) {
        if (scan.r_of(m) == 0) ++diag.zero_r_count;
    }
    diag.zero_r_share =
        members.empty()
            ? Metric::undefined(Undef::empty_subject_field)
            : Metric::of(static_cast<double>(diag.zero_r_count) /
                         static_cast<double>(members.size()));
    return diag;
}

} // namespace

Metric fcc_impact_total(const Corpus& corpus, std::string_view journal_id,
                        const IndicatorConfig& config) {
    config.check();
    JournalIdx j = corpus.require_journal(journal_id);
    detail::CensusScan scan(corpus, config);
    return fcc_total_of(scan, corpus, j);
}

Metric fcc_impact_windowed(const Corpus& corpus, std::string_view journal_id,
                           const IndicatorConfig& config, ZeroRPolicy policy) {
    config.check();
    JournalIdx j = corpus.require_journal(journal_id);
    detail::CensusScan scan(corpus, config);
    auto members = scan.field_members(j);
    return fcc_windowed_of(scan, j, policy, members);
}

ZeroRDiagnostics zero_r_diagnostics(const Corpus& corpus, std::string_view journal_id,
                                    const IndicatorConfig& config) {
    config.check();
    JournalIdx j = corpus.require_journal(journal_id);
    detail::CensusScan scan(corpus, config);
    auto members = scan.field_members(j);
    return zero_r_of(scan, members);
}

std::vector<double> distributed_weights(const Corpus& corpus, std::string_view doc_id) {
    DocIdx d = corpus.require_document(doc_id);
    std::int64_t n = corpus.out_degree(d);
    return std::vector<double>(static_cast<std::size_t>(n),
                               n == 0 ? 0.0 : 1.0 / static_cast<double>(n));
}

FccReport compute_fcc(const Corpus& corpus, const IndicatorConfig& config, ZeroRPolicy policy) {
    config.check();
    detail::CensusScan scan(corpus, config);
    FccReport report;
    report.rows.reserve(corpus.journal_count());
    for (JournalIdx j = 0; j < corpus.journal_count(); ++j) {
        JournalFcc row;
        row.journal_id = corpus.journal(j).journal_id;
        auto members = scan.field_members(j);
        row.fcc_total = fcc_total_of(scan, corpus, j);
        row.fcc_windowed = fcc_windowed_of(scan, j, policy, members);
        ZeroRDiagnostics diag = zero_r_of(scan, members);
        row.zero_r_count = diag.zero_r_count;
        row.zero_r_share = diag.zero_r_share;
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace snipkit

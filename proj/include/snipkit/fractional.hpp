#pragma once
// Fractional citation counting: impact measures that weight each citation by
// the reciprocal of the citing article's reference count (1/n over the whole
// list, 1/r over windowed references into indexed sources), plus the
// diagnostics that expose what happens to citing articles with r = 0.

#include "snipkit/corpus.hpp"
#include "snipkit/indicators.hpp"
#include "snipkit/metric.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace snipkit {

// How 1/r weighting treats citing articles with r = 0, which cannot carry a
// finite weight.
enum class ZeroRPolicy : unsigned char {
    exclude,               // their citations contribute nothing; diagnostics count them
    undefined_on_any_zero, // the whole value is undefined if any field member has r = 0
};

constexpr std::string_view zero_r_policy_label(ZeroRPolicy p) {
    return p == ZeroRPolicy::exclude ? "exclude" : "undefined";
}

struct ZeroRDiagnostics {
    std::int64_t zero_r_count = 0;
    Metric zero_r_share; // zero_r_count / subject_field_size; undefined on empty fields
};

struct JournalFcc {
    std::string journal_id;
    Metric fcc_total;    // 1/n weighting
    Metric fcc_windowed; // 1/r weighting
    std::int64_t zero_r_count = 0;
    Metric zero_r_share;
};

struct FccReport {
    std::vector<JournalFcc> rows; // journal_id ascending
};

// Sum over qualifying citations (the same edges raw_impact_per_paper counts)
// of 1/n of the citing document, per window paper. n deliberately counts the
// whole reference list: unresolved targets and out-of-window references
// included.
Metric fcc_impact_total(const Corpus& corpus, std::string_view journal_id,
                        const IndicatorConfig& config);

// Same structure with weight 1/r of the citing document.
Metric fcc_impact_windowed(const Corpus& corpus, std::string_view journal_id,
                           const IndicatorConfig& config,
                           ZeroRPolicy policy = ZeroRPolicy::exclude);

// Count and share of subject-field members with r = 0.
ZeroRDiagnostics zero_r_diagnostics(const Corpus& corpus, std::string_view journal_id,
                                    const IndicatorConfig& config);

// The 1/n weight each outgoing reference of the document distributes, aligned
// with out_refs order. Weights of a document with any references sum to 1.
std::vector<double> distributed_weights(const Corpus& corpus, std::string_view doc_id);

// All fractional measures for every journal in one deterministic pass.
FccReport compute_fcc(const Corpus& corpus, const IndicatorConfig& config,
                      ZeroRPolicy policy = ZeroRPolicy::exclude);

} // namespace snipkit

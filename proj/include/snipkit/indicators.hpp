#pragma once
// The SNIP pipeline. A journal's raw impact per paper (census-year citations
// to its 1..w year old papers, per paper) is normalized by the relative
// citation potential of its subject field: the mean number of windowed
// references to indexed sources per citing article, divided by the median of
// that mean over all indexed journals.

#include "snipkit/corpus.hpp"
#include "snipkit/metric.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace snipkit {

enum class MedianMethod : unsigned char {
    midpoint_average, // mean of the two middle values when the count is even
};

struct IndicatorConfig {
    int census_year = 0;
    int citation_window = 3; // years; applied to cited papers and cited references alike
    int field_window = 10;   // years; subject-field membership
    MedianMethod median_method = MedianMethod::midpoint_average;

    // The one window object shared by citation counting and citation
    // potential; both sides move together or not at all.
    YearWindow cited_window() const { return trailing_window(census_year, citation_window); }
    YearWindow field_year_window() const { return trailing_window(census_year, field_window); }

    void check() const; // throws Error(config)
};

struct JournalIndicators {
    std::string journal_id;
    bool indexed = true;
    std::int64_t paper_count = 0;    // |papers_in_window|
    std::int64_t citation_count = 0; // census-year citations into those papers
    Metric rip;                      // citation_count / paper_count
    std::int64_t subject_field_size = 0;
    Metric cp;   // mean r over the subject field, zero-r members included
    Metric rdcp; // cp / median cp over indexed journals
    Metric snip; // rip / rdcp
};

struct IndicatorReport {
    std::vector<JournalIndicators> rows; // journal_id ascending
    Metric median_cp;
};

// Census-year citations per paper published in the cited window. Undefined
// when the journal has no papers in the window.
Metric raw_impact_per_paper(const Corpus& corpus, std::string_view journal_id,
                            const IndicatorConfig& config);

// Census-year citable documents citing at least one citable paper of the
// journal published inside the field window. Sorted doc ids.
std::vector<std::string> subject_field(const Corpus& corpus, std::string_view journal_id,
                                       const IndicatorConfig& config);

// Mean r (windowed references into indexed sources) over the subject field.
// Members with r = 0 count. Undefined when the field is empty.
Metric citation_potential(const Corpus& corpus, std::string_view journal_id,
                          const IndicatorConfig& config);

// Median of citation_potential over indexed journals with a defined value.
Metric median_citation_potential(const Corpus& corpus, const IndicatorConfig& config);

// cp / median_cp. Undefined when either input is undefined or the median is 0.
Metric relative_citation_potential(Metric cp, Metric median_cp);

// rip / rdcp. Undefined inputs propagate; rdcp = 0 yields undefined.
Metric snip(Metric rip, Metric rdcp);

// All indicators for every journal in one deterministic pass.
IndicatorReport compute_all(const Corpus& corpus, const IndicatorConfig& config);

} // namespace snipkit

#pragma once
// Synthetic corpora. generate_field samples a parameterized citation field;
// the named benchmarks construct their corpora outright so the indicator
// identities they advertise hold exactly, not just in expectation.

#include "snipkit/corpus.hpp"

#include <cstdint>
#include <string>

namespace snipkit {

enum class Concentration : unsigned char {
    uniform,             // cited targets drawn uniformly from the eligible band
    proportional_to_age, // older targets drawn more often (low-immediacy fields)
};

struct FieldSpec {
    std::string field_id;
    int journal_count = 2;
    int papers_per_journal_per_year = 10;
    YearWindow years{2004, 2007}; // inclusive; the last year is the census year
    int refs_per_paper = 10;
    double in_window_share = 1.0; // fraction of references aimed at the 1..3 year band
    double indexed_share = 1.0;   // fraction resolved to (indexed) corpus targets
    Concentration citation_concentration = Concentration::uniform;
    std::uint64_t seed = 0;

    void check() const; // throws Error(config) / Error(infeasible)
};

// One self-contained field: journals, documents, and the census-year
// documents' references into earlier documents of the same field.
// Deterministic in (spec, seed); fields are seeded independently of the order
// they are generated in.
CorpusData generate_field(const FieldSpec& spec);

// Census year used by all constructed benchmarks.
constexpr int kBenchmarkCensusYear = 2007;

// Two structurally identical fields whose census-year articles carry
// density_low resp. density_high references, every one resolved, in-window,
// and indexed. Citations received scale with density, so raw impact and
// citation potential differ by the density ratio while SNIP coincides.
Corpus two_field_benchmark(int density_low = 10, int density_high = 50, std::uint64_t seed = 0);

// One field whose census-year articles keep a fixed count of resolved
// in-window references and pad their lists with unresolved targets so the
// resolved share equals indexed_share. r is invariant in the share; n grows
// as coverage drops.
Corpus coverage_benchmark(double indexed_share, std::uint64_t seed = 0);

// One field whose census-year articles carry 10 in-window references plus
// old_ref_extra resolved references to papers older than the citation
// window. r stays 10; n grows by old_ref_extra.
Corpus immediacy_benchmark(int old_ref_extra, std::uint64_t seed = 0);

} // namespace snipkit

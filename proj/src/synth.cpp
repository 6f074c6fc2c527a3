#include "snipkit/synth.hpp"

#include "snipkit/rng.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

namespace snipkit {

namespace {

std::string pad_number(int value, int width) {
    std::string digits = std::to_string(value);
    if (static_cast<int>(digits.size()) < width) {
        digits.insert(0, static_cast<std::size_t>(width) - digits.size(), '0');
    }
    return digits;
}

std::string journal_name(const std::string& field_id, int index) {
    return field_id + "-j" + pad_number(index + 1, 2);
}

std::string doc_name(const std::string& journal_id, int year, int index) {
    return journal_id + "-" + std::to_string(year) + "-" + pad_number(index + 1, 4);
}

void construction_check(bool ok, const std::string& what) {
    if (!ok) fail(ErrorKind::integrity, "benchmark construction check failed: " + what);
}

// ---------------------------------------------------------------------------
// Constructed benchmark fields. Layout shared by all three benchmarks: two
// indexed journals; window papers in the 1..3 year band; census-year articles
// spread their references round-robin so every journal receives the same
// citation count and no article cites the same target twice.

struct BenchField {
    std::vector<std::string> journals;
    // window_papers[j]: cited-window papers of journal j, construction order
    std::vector<std::vector<std::string>> window_papers;
    std::vector<std::string> old_papers; // both journals interleaved
    std::vector<std::string> census_docs;
};

BenchField add_bench_field(CorpusData& data, const std::string& field_id, int window_per_year,
                           int census_per_journal, int old_per_year, int old_years) {
    const int census = kBenchmarkCensusYear;
    BenchField field;
    for (int j = 0; j < 2; ++j) {
        std::string jid = journal_name(field_id, j);
        data.journals.push_back({jid, field_id + " field journal " + std::to_string(j + 1), true});
        field.journals.push_back(jid);
    }
    field.window_papers.resize(2);
    for (int j = 0; j < 2; ++j) {
        for (int year = census - 3; year <= census - 1; ++year) {
            for (int k = 0; k < window_per_year; ++k) {
                std::string id = doc_name(field.journals[static_cast<std::size_t>(j)], year, k);
                data.documents.push_back(
                    {id, field.journals[static_cast<std::size_t>(j)], year, DocType::citable});
                field.window_papers[static_cast<std::size_t>(j)].push_back(id);
            }
        }
    }
    for (int year = census - 3 - old_years; year <= census - 4; ++year) {
        for (int k = 0; k < old_per_year; ++k) {
            for (int j = 0; j < 2; ++j) {
                std::string id = doc_name(field.journals[static_cast<std::size_t>(j)], year, k);
                data.documents.push_back(
                    {id, field.journals[static_cast<std::size_t>(j)], year, DocType::citable});
                field.old_papers.push_back(id);
            }
        }
    }
    for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < census_per_journal; ++k) {
            std::string id = doc_name(field.journals[static_cast<std::size_t>(j)], census, k);
            data.documents.push_back(
                {id, field.journals[static_cast<std::size_t>(j)], census, DocType::citable});
            field.census_docs.push_back(id);
        }
    }
    return field;
}

// Gives census article i of the field `density` in-window references,
// alternating target journal from i so both journals receive exactly
// census_count * density / 2 citations, odd densities included.
void add_in_window_refs(CorpusData& data, const BenchField& field, std::size_t doc_ordinal,
                        const std::string& doc_id, int density) {
    const std::size_t window_size = field.window_papers[0].size();
    std::size_t sent[2] = {0, 0};
    for (int k = 0; k < density; ++k) {
        std::size_t j = (doc_ordinal + static_cast<std::size_t>(k)) % 2;
        std::size_t slot = (doc_ordinal * 7 + sent[j]++) % window_size;
        data.references.push_back({doc_id, field.window_papers[j][slot], std::nullopt});
    }
}

void check_constructed_field(const CorpusData& data, const BenchField& field,
                             int expected_refs_per_census_doc, int expected_citations_per_journal,
                             int expected_in_window_per_census_doc) {
    std::unordered_map<std::string, int> out_degree;
    std::unordered_map<std::string, int> in_window_out;
    std::unordered_map<std::string, int> journal_citations;
    std::unordered_map<std::string, const Document*> docs;
    for (const Document& d : data.documents) docs[d.doc_id] = &d;
    const YearWindow window = trailing_window(kBenchmarkCensusYear, 3);
    for (const Reference& r : data.references) {
        auto citing = docs.find(r.citing_doc_id);
        if (citing == docs.end() || citing->second->pub_year != kBenchmarkCensusYear) continue;
        ++out_degree[r.citing_doc_id];
        if (!r.resolved()) continue;
        auto target = docs.find(r.cited_doc_id);
        construction_check(target != docs.end(), "unresolved target id " + r.cited_doc_id);
        construction_check(target->second->pub_year < kBenchmarkCensusYear,
                           "reference into the census year");
        if (window.contains(target->second->pub_year)) {
            ++in_window_out[r.citing_doc_id];
            ++journal_citations[target->second->journal_id];
        }
    }
    for (const std::string& id : field.census_docs) {
        construction_check(out_degree[id] == expected_refs_per_census_doc,
                           "census doc " + id + " reference count");
        construction_check(in_window_out[id] == expected_in_window_per_census_doc,
                           "census doc " + id + " in-window reference count");
    }
    for (const std::string& jid : field.journals) {
        construction_check(journal_citations[jid] == expected_citations_per_journal,
                           "journal " + jid + " citation count");
    }
}

} // namespace

// ---------------------------------------------------------------------------
// generate_field

void FieldSpec::check() const {
    if (field_id.empty()) fail(ErrorKind::config, "field_id must not be empty");
    if (journal_count < 1 || papers_per_journal_per_year < 1 || refs_per_paper < 1) {
        fail(ErrorKind::config, "field counts must be positive");
    }
    if (years.first > years.last) fail(ErrorKind::config, "year range is reversed");
    if (in_window_share < 0.0 || in_window_share > 1.0 || indexed_share < 0.0 ||
        indexed_share > 1.0) {
        fail(ErrorKind::config, "shares must lie in [0, 1]");
    }
    if (years.last - 1 < years.first && in_window_share > 0.0) {
        fail(ErrorKind::infeasible,
             "no documents precede the census year; in-window references have no targets");
    }
    if (years.last - 4 < years.first && in_window_share < 1.0) {
        fail(ErrorKind::infeasible,
             "no documents older than the citation window; out-of-window references have no "
             "targets");
    }
}

CorpusData generate_field(const FieldSpec& spec) {
    spec.check();
    const int census = spec.years.last;
    CorpusData data;

    std::vector<std::string> journals;
    for (int j = 0; j < spec.journal_count; ++j) {
        std::string jid = journal_name(spec.field_id, j);
        data.journals.push_back(
            {jid, spec.field_id + " field journal " + std::to_string(j + 1), true});
        journals.push_back(std::move(jid));
    }

    // documents, and the per-year pools reference targets are drawn from
    std::unordered_map<int, std::vector<DocIdx>> by_year;
    std::vector<std::string> census_docs;
    for (int j = 0; j < spec.journal_count; ++j) {
        for (int year = spec.years.first; year <= spec.years.last; ++year) {
            for (int k = 0; k < spec.papers_per_journal_per_year; ++k) {
                std::string id = doc_name(journals[static_cast<std::size_t>(j)], year, k);
                by_year[year].push_back(static_cast<DocIdx>(data.documents.size()));
                data.documents.push_back(
                    {id, journals[static_cast<std::size_t>(j)], year, DocType::citable});
                if (year == census) census_docs.push_back(std::move(id));
            }
        }
    }

    struct Band {
        std::vector<DocIdx> docs;        // eligible targets, construction order
        std::vector<std::uint64_t> cdf;  // cumulative age weights, aligned with docs
        std::uint64_t total_weight = 0;
    };
    auto make_band = [&](int first, int last) {
        Band band;
        for (int year = first; year <= last; ++year) {
            auto it = by_year.find(year);
            if (it == by_year.end()) continue;
            std::uint64_t age = static_cast<std::uint64_t>(census - year);
            for (DocIdx d : it->second) {
                band.docs.push_back(d);
                band.total_weight += age;
                band.cdf.push_back(band.total_weight);
            }
        }
        return band;
    };
    Band window_band = make_band(std::max(spec.years.first, census - 3), census - 1);
    Band old_band = make_band(spec.years.first, census - 4);

    Rng rng(derive_seed(spec.seed, spec.field_id));
    auto pick_target = [&](const Band& band) -> DocIdx {
        if (spec.citation_concentration == Concentration::uniform || band.total_weight == 0) {
            return band.docs[rng.below(band.docs.size())];
        }
        std::uint64_t w = rng.below(band.total_weight);
        auto it = std::upper_bound(band.cdf.begin(), band.cdf.end(), w);
        return band.docs[static_cast<std::size_t>(it - band.cdf.begin())];
    };

    for (const std::string& citing : census_docs) {
        for (int k = 0; k < spec.refs_per_paper; ++k) {
            const Band& band =
                rng.bernoulli(spec.in_window_share) || old_band.docs.empty() ? window_band
                                                                             : old_band;
            DocIdx target = pick_target(band);
            if (rng.bernoulli(spec.indexed_share)) {
                data.references.push_back({citing, data.documents[target].doc_id, std::nullopt});
            } else {
                // non-indexed venue: keep only the cited year, for diagnostics
                data.references.push_back({citing, "", data.documents[target].pub_year});
            }
        }
    }
    return data;
}

// ---------------------------------------------------------------------------
// Constructed benchmarks. The seed parameter keeps the call shape of
// generate_field and lands in simulation manifests, but these corpora are
// closed-form: nothing is sampled, so identical parameters give identical
// bytes by construction.

Corpus two_field_benchmark(int density_low, int density_high, std::uint64_t /*seed*/) {
    constexpr int kWindowPerYear = 10;   // 30 window papers per journal
    constexpr int kCensusPerJournal = 12;
    const int max_density = 2 * 3 * kWindowPerYear;
    for (int d : {density_low, density_high}) {
        if (d < 1 || d > max_density) {
            fail(ErrorKind::infeasible, "density " + std::to_string(d) +
                                            " outside [1, " + std::to_string(max_density) +
                                            "] supported by the benchmark field size");
        }
    }
    CorpusData data;
    struct Built {
        BenchField field;
        int density;
    };
    std::vector<Built> fields;
    fields.push_back({add_bench_field(data, "low", kWindowPerYear, kCensusPerJournal, 0, 0),
                      density_low});
    fields.push_back({add_bench_field(data, "high", kWindowPerYear, kCensusPerJournal, 0, 0),
                      density_high});
    for (const Built& b : fields) {
        for (std::size_t i = 0; i < b.field.census_docs.size(); ++i) {
            add_in_window_refs(data, b.field, i, b.field.census_docs[i], b.density);
        }
        check_constructed_field(data, b.field, b.density, kCensusPerJournal * b.density,
                                b.density);
    }
    return Corpus::build(std::move(data));
}

Corpus coverage_benchmark(double indexed_share, std::uint64_t /*seed*/) {
    if (!(indexed_share > 0.0) || indexed_share > 1.0) {
        fail(ErrorKind::infeasible, "indexed_share must lie in (0, 1]");
    }
    constexpr int kWindowPerYear = 4; // 12 window papers per journal
    constexpr int kCensusPerJournal = 60;
    constexpr int kResolvedRefs = 10;
    // pad with unresolved references until resolved/total ~= indexed_share
    const int unresolved_extra = static_cast<int>(
        static_cast<double>(kResolvedRefs) * (1.0 - indexed_share) / indexed_share + 0.5);

    CorpusData data;
    BenchField field = add_bench_field(data, "cov", kWindowPerYear, kCensusPerJournal, 0, 0);
    for (std::size_t i = 0; i < field.census_docs.size(); ++i) {
        add_in_window_refs(data, field, i, field.census_docs[i], kResolvedRefs);
        for (int k = 0; k < unresolved_extra; ++k) {
            data.references.push_back({field.census_docs[i], "", kBenchmarkCensusYear - 2});
        }
    }
    check_constructed_field(data, field, kResolvedRefs + unresolved_extra,
                            kCensusPerJournal * kResolvedRefs, kResolvedRefs);
    return Corpus::build(std::move(data));
}

Corpus immediacy_benchmark(int old_ref_extra, std::uint64_t /*seed*/) {
    if (old_ref_extra < 0) fail(ErrorKind::infeasible, "old_ref_extra must be >= 0");
    constexpr int kWindowPerYear = 4; // 12 window papers per journal
    constexpr int kCensusPerJournal = 60;
    constexpr int kOldPerYear = 8; // 7 old years x 2 journals x 8 = 112 old targets
    constexpr int kOldYears = 7;
    constexpr int kResolvedRefs = 10;
    if (old_ref_extra > 2 * kOldPerYear * kOldYears) {
        fail(ErrorKind::infeasible,
             "old_ref_extra exceeds the benchmark's pool of " +
                 std::to_string(2 * kOldPerYear * kOldYears) + " pre-window papers");
    }

    CorpusData data;
    BenchField field =
        add_bench_field(data, "imm", kWindowPerYear, kCensusPerJournal, kOldPerYear, kOldYears);
    for (std::size_t i = 0; i < field.census_docs.size(); ++i) {
        add_in_window_refs(data, field, i, field.census_docs[i], kResolvedRefs);
        for (int k = 0; k < old_ref_extra; ++k) {
            std::size_t slot = (i * 13 + static_cast<std::size_t>(k)) % field.old_papers.size();
            data.references.push_back({field.census_docs[i], field.old_papers[slot], std::nullopt});
        }
    }
    check_constructed_field(data, field, kResolvedRefs + old_ref_extra,
                            kCensusPerJournal * kResolvedRefs, kResolvedRefs);
    return Corpus::build(std::move(data));
}

} // namespace snipkit

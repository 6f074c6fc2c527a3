#pragma once
// Deterministic random corpora for property tests and oracle comparisons.

#include "snipkit/corpus.hpp"
#include "snipkit/rng.hpp"

#include <string>
#include <utility>

namespace testsupport {

constexpr int kCensusYear = 2007;

struct GenLimits {
    int max_journals = 6;
    int max_docs = 50;
    int max_refs = 300;
    int max_age = 12;           // pub years span [census - max_age, census]
    double indexed_share = 0.7; // journal indexed flag
    double citable_share = 0.8;
    double resolved_share = 0.75;
};

// Well-formed by construction: ids unique, no self-citations, years in range.
inline snipkit::CorpusData random_corpus_data(std::uint64_t seed, GenLimits limits = {}) {
    snipkit::Rng rng(snipkit::splitmix64(seed));
    snipkit::CorpusData data;

    int journal_count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(limits.max_journals)));
    for (int j = 0; j < journal_count; ++j) {
        data.journals.push_back({"j" + std::to_string(j + 1), "journal " + std::to_string(j + 1),
                                 rng.bernoulli(limits.indexed_share)});
    }

    int doc_count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(limits.max_docs)));
    for (int d = 0; d < doc_count; ++d) {
        int journal = static_cast<int>(rng.below(static_cast<std::uint64_t>(journal_count)));
        int year = kCensusYear - static_cast<int>(rng.below(static_cast<std::uint64_t>(limits.max_age + 1)));
        data.documents.push_back({"d" + std::to_string(d + 1), "j" + std::to_string(journal + 1),
                                  year,
                                  rng.bernoulli(limits.citable_share) ? snipkit::DocType::citable
                                                                      : snipkit::DocType::non_citable});
    }

    int ref_count = static_cast<int>(rng.below(static_cast<std::uint64_t>(limits.max_refs + 1)));
    for (int r = 0; r < ref_count; ++r) {
        int citing = static_cast<int>(rng.below(static_cast<std::uint64_t>(doc_count)));
        snipkit::Reference ref;
        ref.citing_doc_id = data.documents[static_cast<std::size_t>(citing)].doc_id;
        if (doc_count > 1 && rng.bernoulli(limits.resolved_share)) {
            int cited = static_cast<int>(rng.below(static_cast<std::uint64_t>(doc_count - 1)));
            if (cited >= citing) ++cited; // skip self
            ref.cited_doc_id = data.documents[static_cast<std::size_t>(cited)].doc_id;
        } else if (rng.bernoulli(0.7)) {
            ref.cited_year =
                kCensusYear - static_cast<int>(rng.below(static_cast<std::uint64_t>(limits.max_age + 1)));
        }
        data.references.push_back(std::move(ref));
    }
    return data;
}

inline snipkit::Corpus random_corpus(std::uint64_t seed, GenLimits limits = {}) {
    return snipkit::Corpus::build(random_corpus_data(seed, limits));
}

} // namespace testsupport

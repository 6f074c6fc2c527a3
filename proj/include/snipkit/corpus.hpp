#pragma once
// Citation corpus: journals, documents, reference edges, and the window /
// citing-profile primitives every indicator is built from.
//
// A Corpus is immutable once built. Construction canonicalizes entity order
// (journals and documents by id, references by citing/cited id), so every
// downstream computation is independent of file row order.

#include "snipkit/error.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace snipkit {

enum class DocType : unsigned char { citable, non_citable };

constexpr std::string_view doc_type_label(DocType t) {
    return t == DocType::citable ? "citable" : "non_citable";
}

struct Journal {
    std::string journal_id;
    std::string title;
    bool indexed = true; // belongs to the database's source list
};

struct Document {
    std::string doc_id;
    std::string journal_id;
    int pub_year = 0;
    DocType doc_type = DocType::citable;
};

// A citation edge. The target is either a corpus document (cited_doc_id set)
// or an unresolved venue outside the corpus; unresolved targets may carry the
// cited year, which is kept for diagnostics only.
struct Reference {
    std::string citing_doc_id;
    std::string cited_doc_id;      // empty => unresolved
    std::optional<int> cited_year; // unresolved targets only
    bool resolved() const { return !cited_doc_id.empty(); }
};

// Raw corpus tables before indexing. This is the mutable form the loader and
// the synthetic generator produce and the validator inspects.
struct CorpusData {
    std::vector<Journal> journals;
    std::vector<Document> documents;
    std::vector<Reference> references;
};

struct Violation {
    std::string rule;   // machine-readable rule name
    std::string entity; // offending identifier
    std::string detail;
};

// Accepted publication-year range.
struct YearBounds {
    int min_year = 1800;
    int max_year = 2100;
};

// Inclusive calendar-year interval.
struct YearWindow {
    int first = 0;
    int last = 0;
    bool contains(int year) const { return year >= first && year <= last; }
};

// Papers "1..width years old" at the census year: [census-width, census-1].
constexpr YearWindow trailing_window(int census_year, int width) {
    return YearWindow{census_year - width, census_year - 1};
}

using JournalIdx = std::uint32_t;
using DocIdx = std::uint32_t;

// journal_of() result for documents whose journal_id does not resolve; only
// reachable through build_unchecked.
constexpr JournalIdx kNoJournal = static_cast<JournalIdx>(-1);

// Outgoing edge in indexed form. target is empty for unresolved references
// (and, in unchecked corpora, for dangling ones).
struct OutRef {
    std::optional<DocIdx> target;
    std::optional<int> cited_year;
};

// Per citing article: n (every cited reference) and r (1..window-year-old
// references resolved into indexed journals).
struct CitingProfile {
    std::string doc_id;
    std::int64_t n_total = 0;
    std::int64_t r_windowed_indexed = 0;
};

class Corpus {
public:
    // Validates, canonicalizes, and indexes. Throws Error(integrity) listing
    // the violations if any invariant fails.
    static Corpus build(CorpusData data, YearBounds bounds = {});

    // Indexes without rejecting invalid data; dangling references stay in the
    // raw table but are left out of the edge indices. Lets validate() be run
    // on deliberately broken corpora.
    static Corpus build_unchecked(CorpusData data);

    const std::vector<Journal>& journals() const { return data_.journals; }
    const std::vector<Document>& documents() const { return data_.documents; }
    const std::vector<Reference>& references() const { return data_.references; }
    const CorpusData& data() const { return data_; }

    std::optional<JournalIdx> find_journal(std::string_view journal_id) const;
    std::optional<DocIdx> find_document(std::string_view doc_id) const;
    JournalIdx require_journal(std::string_view journal_id) const; // Error(not_found)
    DocIdx require_document(std::string_view doc_id) const;        // Error(not_found)

    const Journal& journal(JournalIdx j) const { return data_.journals[j]; }
    const Document& document(DocIdx d) const { return data_.documents[d]; }
    JournalIdx journal_of(DocIdx d) const { return doc_journal_[d]; }

    std::size_t journal_count() const { return data_.journals.size(); }
    std::size_t document_count() const { return data_.documents.size(); }
    std::size_t reference_count() const { return data_.references.size(); }

    // Documents of a journal, sorted by (pub_year, doc index).
    std::span<const DocIdx> docs_of_journal(JournalIdx j) const;
    // The subrange of docs_of_journal with pub_year inside the window.
    std::span<const DocIdx> docs_of_journal_in(JournalIdx j, YearWindow window) const;

    std::span<const OutRef> out_refs(DocIdx d) const;
    std::int64_t out_degree(DocIdx d) const;
    // Citing documents of every resolved reference into d (one entry per edge).
    std::span<const DocIdx> in_cites(DocIdx d) const;

    // FNV-1a over the canonical tables. Stable across platforms and row order.
    std::uint64_t content_hash() const;
    std::string content_hash_hex() const;

private:
    Corpus() = default;
    void canonicalize();
    void build_indices();

    CorpusData data_;
    std::vector<JournalIdx> doc_journal_;        // per document
    std::vector<std::uint64_t> journal_doc_off_; // CSR into journal_docs_
    std::vector<DocIdx> journal_docs_;
    std::vector<std::uint64_t> out_off_; // CSR into out_refs_
    std::vector<OutRef> out_refs_;
    std::vector<std::uint64_t> in_off_; // CSR into in_cites_
    std::vector<DocIdx> in_cites_;
};

// Invariant check. Empty result iff the data is a valid corpus. Violations
// are data, not failures.
std::vector<Violation> validate(const CorpusData& data, YearBounds bounds = {});
// Re-checks the raw tables of a built corpus and verifies that its edge
// indices are exact inversions of the reference list.
std::vector<Violation> validate(const Corpus& corpus, YearBounds bounds = {});

// File reading without invariant enforcement; parse errors still throw.
CorpusData read_corpus_csv(const std::string& journals_path, const std::string& documents_path,
                           const std::string& references_path);
CorpusData read_corpus_jsonl(const std::string& path);

// Ingestion: three CSV tables (header row required) or one JSON-lines file.
Corpus load_corpus(const std::string& journals_path, const std::string& documents_path,
                   const std::string& references_path, YearBounds bounds = {});
Corpus load_corpus_jsonl(const std::string& path, YearBounds bounds = {});

// Serialization in the ingestion formats, canonical order, deterministic bytes.
void write_corpus_csv(const Corpus& corpus, const std::string& journals_path,
                      const std::string& documents_path, const std::string& references_path);
void write_corpus_jsonl(const Corpus& corpus, const std::string& path);

// The journal's citable papers published in [census_year - window_years,
// census_year - 1], as sorted doc ids.
std::vector<std::string> papers_in_window(const Corpus& corpus, std::string_view journal_id,
                                          int census_year, int window_years = 3);

// n = every outgoing reference; r = references resolved to documents published
// in the trailing window whose journal is indexed.
CitingProfile citing_profile(const Corpus& corpus, std::string_view doc_id, int census_year,
                             int window_years = 3);

} // namespace snipkit

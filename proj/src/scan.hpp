#pragma once
// Internal per-(corpus, config) scan shared by the indicator and fractional
// computations. Window qualification, subject-field membership, and r live
// here and nowhere else; both sides of every ratio read the same windows.

#include "snipkit/corpus.hpp"
#include "snipkit/indicators.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace snipkit::detail {

class CensusScan {
public:
    CensusScan(const Corpus& corpus, const IndicatorConfig& config)
        : corpus_(corpus),
          config_(config),
          cited_window_(config.cited_window()),
          field_window_(config.field_year_window()),
          r_cache_(corpus.document_count(), -1),
          stamp_(corpus.document_count(), 0) {}

    const IndicatorConfig& config() const { return config_; }

    bool is_census_citer(DocIdx d) const {
        const Document& doc = corpus_.document(d);
        return doc.doc_type == DocType::citable && doc.pub_year == config_.census_year;
    }

    // Windowed-indexed reference count of a citing document (memoized).
    std::int64_t r_of(DocIdx d) {
        std::int64_t& slot = r_cache_[d];
        if (slot >= 0) return slot;
        std::int64_t r = 0;
        for (const OutRef& e : corpus_.out_refs(d)) {
            if (!e.target) continue;
            JournalIdx j = corpus_.journal_of(*e.target);
            if (cited_window_.contains(corpus_.document(*e.target).pub_year) &&
                j != kNoJournal && corpus_.journal(j).indexed) {
                ++r;
            }
        }
        slot = r;
        return r;
    }

    // Citable papers of the journal inside the cited window.
    std::vector<DocIdx> window_papers(JournalIdx j) const {
        std::vector<DocIdx> out;
        for (DocIdx d : corpus_.docs_of_journal_in(j, cited_window_)) {
            if (corpus_.document(d).doc_type == DocType::citable) out.push_back(d);
        }
        return out;
    }

    // Census-year citation edges into the journal's window papers; fn receives
    // the citing document of each qualifying edge (once per edge).
    template <typename Fn>
    void for_each_qualifying_citation(JournalIdx j, Fn&& fn) const {
        for (DocIdx p : corpus_.docs_of_journal_in(j, cited_window_)) {
            if (corpus_.document(p).doc_type != DocType::citable) continue;
            for (DocIdx citing : corpus_.in_cites(p)) {
                if (is_census_citer(citing)) fn(citing);
            }
        }
    }

    std::int64_t qualifying_citation_count(JournalIdx j) const {
        std::int64_t n = 0;
        for_each_qualifying_citation(j, [&](DocIdx) { ++n; });
        return n;
    }

    // Subject-field members of the journal: census-year citable documents with
    // at least one resolved reference to a citable paper of the journal inside
    // the field window. Ascending document index.
    std::vector<DocIdx> field_members(JournalIdx j) {
        ++stamp_gen_;
        std::vector<DocIdx> members;
        for (DocIdx p : corpus_.docs_of_journal_in(j, field_window_)) {
            if (corpus_.document(p).doc_type != DocType::citable) continue;
            for (DocIdx citing : corpus_.in_cites(p)) {
                if (!is_census_citer(citing)) continue;
                if (stamp_[citing] == stamp_gen_) continue;
                stamp_[citing] = stamp_gen_;
                members.push_back(citing);
            }
        }
        std::sort(members.begin(), members.end());
        return members;
    }

private:
    const Corpus& corpus_;
    IndicatorConfig config_;
    YearWindow cited_window_;
    YearWindow field_window_;
    std::vector<std::int64_t> r_cache_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t stamp_gen_ = 0;
};

} // namespace snipkit::detail

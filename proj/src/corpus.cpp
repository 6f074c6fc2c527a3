#include "snipkit/corpus.hpp"

#include "snipkit/csv.hpp"
#include "snipkit/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace snipkit {

namespace {

using json = nlohmann::ordered_json;

int parse_int(std::string_view text, const std::string& where) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        fail(ErrorKind::parse, where + ": not an integer: '" + std::string(text) + "'");
    }
    return value;
}

bool parse_bool(std::string_view text, const std::string& where) {
    if (text == "true") return true;
    if (text == "false") return false;
    fail(ErrorKind::parse, where + ": expected true/false, got '" + std::string(text) + "'");
}

DocType parse_doc_type(std::string_view text, const std::string& where) {
    if (text == "citable") return DocType::citable;
    if (text == "non_citable") return DocType::non_citable;
    fail(ErrorKind::parse, where + ": unknown doc_type '" + std::string(text) + "'");
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::io, "cannot read " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::io, "cannot write " + path);
    return out;
}

// Strips a trailing \r so CRLF files load cleanly.
bool read_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

bool ref_less(const Reference& a, const Reference& b) {
    if (a.citing_doc_id != b.citing_doc_id) return a.citing_doc_id < b.citing_doc_id;
    if (a.cited_doc_id != b.cited_doc_id) return a.cited_doc_id < b.cited_doc_id;
    return a.cited_year.value_or(INT32_MIN) < b.cited_year.value_or(INT32_MIN);
}

} // namespace

// ---------------------------------------------------------------------------
// Corpus construction

void Corpus::canonicalize() {
    std::sort(data_.journals.begin(), data_.journals.end(),
              [](const Journal& a, const Journal& b) { return a.journal_id < b.journal_id; });
    std::sort(data_.documents.begin(), data_.documents.end(),
              [](const Document& a, const Document& b) { return a.doc_id < b.doc_id; });
    std::sort(data_.references.begin(), data_.references.end(), ref_less);
}

void Corpus::build_indices() {
    const auto& docs = data_.documents;
    const auto& refs = data_.references;
    const std::size_t nd = docs.size();

    std::unordered_map<std::string_view, JournalIdx> jmap;
    jmap.reserve(data_.journals.size());
    for (std::size_t j = 0; j < data_.journals.size(); ++j) {
        jmap.emplace(data_.journals[j].journal_id, static_cast<JournalIdx>(j));
    }
    std::unordered_map<std::string_view, DocIdx> dmap;
    dmap.reserve(nd);
    for (std::size_t d = 0; d < nd; ++d) {
        dmap.emplace(docs[d].doc_id, static_cast<DocIdx>(d));
    }

    doc_journal_.assign(nd, kNoJournal);
    for (std::size_t d = 0; d < nd; ++d) {
        auto it = jmap.find(docs[d].journal_id);
        if (it != jmap.end()) doc_journal_[d] = it->second;
    }

    // journal -> documents, ordered by (pub_year, doc index)
    journal_doc_off_.assign(data_.journals.size() + 1, 0);
    for (std::size_t d = 0; d < nd; ++d) {
        if (doc_journal_[d] != kNoJournal) ++journal_doc_off_[doc_journal_[d] + 1];
    }
    for (std::size_t j = 1; j < journal_doc_off_.size(); ++j) {
        journal_doc_off_[j] += journal_doc_off_[j - 1];
    }
    journal_docs_.assign(journal_doc_off_.back(), 0);
    {
        std::vector<std::uint64_t> cursor(journal_doc_off_.begin(), journal_doc_off_.end() - 1);
        for (std::size_t d = 0; d < nd; ++d) {
            if (doc_journal_[d] == kNoJournal) continue;
            journal_docs_[cursor[doc_journal_[d]]++] = static_cast<DocIdx>(d);
        }
    }
    for (std::size_t j = 0; j + 1 < journal_doc_off_.size(); ++j) {
        std::sort(journal_docs_.begin() + static_cast<std::ptrdiff_t>(journal_doc_off_[j]),
                  journal_docs_.begin() + static_cast<std::ptrdiff_t>(journal_doc_off_[j + 1]),
                  [&](DocIdx a, DocIdx b) {
                      if (docs[a].pub_year != docs[b].pub_year) {
                          return docs[a].pub_year < docs[b].pub_year;
                      }
                      return a < b;
                  });
    }

    // outgoing edges (references in canonical order group by citing doc)
    out_off_.assign(nd + 1, 0);
    for (const Reference& r : refs) {
        auto it = dmap.find(r.citing_doc_id);
        if (it != dmap.end()) ++out_off_[it->second + 1];
    }
    for (std::size_t d = 1; d < out_off_.size(); ++d) out_off_[d] += out_off_[d - 1];
    out_refs_.assign(out_off_.back(), OutRef{});
    // incoming resolved edges
    in_off_.assign(nd + 1, 0);
    {
        std::vector<std::uint64_t> cursor(out_off_.begin(), out_off_.end() - 1);
        for (const Reference& r : refs) {
            auto cit = dmap.find(r.citing_doc_id);
            if (cit == dmap.end()) continue; // dangling citing doc (unchecked corpora only)
            OutRef edge;
            edge.cited_year = r.cited_year;
            if (r.resolved()) {
                auto tgt = dmap.find(r.cited_doc_id);
                if (tgt != dmap.end()) {
                    edge.target = tgt->second;
                    ++in_off_[tgt->second + 1];
                }
            }
            out_refs_[cursor[cit->second]++] = edge;
        }
    }
    for (std::size_t d = 1; d < in_off_.size(); ++d) in_off_[d] += in_off_[d - 1];
    in_cites_.assign(in_off_.back(), 0);
    {
        std::vector<std::uint64_t> cursor(in_off_.begin(), in_off_.end() - 1);
        for (std::size_t d = 0; d < nd; ++d) {
            for (std::uint64_t e = out_off_[d]; e < out_off_[d + 1]; ++e) {
                if (out_refs_[e].target) {
                    in_cites_[cursor[*out_refs_[e].target]++] = static_cast<DocIdx>(d);
                }
            }
        }
    }
}

Corpus Corpus::build(CorpusData data, YearBounds bounds) {
    auto violations = validate(data, bounds);
    if (!violations.empty()) {
        std::ostringstream msg;
        msg << "corpus has " << violations.size() << " invariant violation(s):";
        std::size_t shown = 0;
        for (const auto& v : violations) {
            if (shown++ == 8) {
                msg << " ...";
                break;
            }
            msg << ' ' << v.rule << '(' << v.entity << ')';
        }
        fail(ErrorKind::integrity, msg.str());
    }
    return build_unchecked(std::move(data));
}

Corpus Corpus::build_unchecked(CorpusData data) {
    Corpus corpus;
    corpus.data_ = std::move(data);
    corpus.canonicalize();
    corpus.build_indices();
    return corpus;
}

std::optional<JournalIdx> Corpus::find_journal(std::string_view journal_id) const {
    const auto& js = data_.journals;
    auto it = std::lower_bound(js.begin(), js.end(), journal_id,
                               [](const Journal& j, std::string_view id) { return j.journal_id < id; });
    if (it == js.end() || it->journal_id != journal_id) return std::nullopt;
    return static_cast<JournalIdx>(it - js.begin());
}

std::optional<DocIdx> Corpus::find_document(std::string_view doc_id) const {
    const auto& ds = data_.documents;
    auto it = std::lower_bound(ds.begin(), ds.end(), doc_id,
                               [](const Document& d, std::string_view id) { return d.doc_id < id; });
    if (it == ds.end() || it->doc_id != doc_id) return std::nullopt;
    return static_cast<DocIdx>(it - ds.begin());
}

JournalIdx Corpus::require_journal(std::string_view journal_id) const {
    auto j = find_journal(journal_id);
    if (!j) fail(ErrorKind::not_found, "unknown journal '" + std::string(journal_id) + "'");
    return *j;
}

DocIdx Corpus::require_document(std::string_view doc_id) const {
    auto d = find_document(doc_id);
    if (!d) fail(ErrorKind::not_found, "unknown document '" + std::string(doc_id) + "'");
    return *d;
}

std::span<const DocIdx> Corpus::docs_of_journal(JournalIdx j) const {
    return {journal_docs_.data() + journal_doc_off_[j],
            journal_docs_.data() + journal_doc_off_[j + 1]};
}

std::span<const DocIdx> Corpus::docs_of_journal_in(JournalIdx j, YearWindow window) const {
    auto docs = docs_of_journal(j);
    auto lo = std::lower_bound(docs.begin(), docs.end(), window.first,
                               [&](DocIdx d, int y) { return data_.documents[d].pub_year < y; });
    auto hi = std::upper_bound(lo, docs.end(), window.last,
                               [&](int y, DocIdx d) { return y < data_.documents[d].pub_year; });
    return {lo, hi};
}

std::span<const OutRef> Corpus::out_refs(DocIdx d) const {
    return {out_refs_.data() + out_off_[d], out_refs_.data() + out_off_[d + 1]};
}

std::int64_t Corpus::out_degree(DocIdx d) const {
    return static_cast<std::int64_t>(out_off_[d + 1] - out_off_[d]);
}

std::span<const DocIdx> Corpus::in_cites(DocIdx d) const {
    return {in_cites_.data() + in_off_[d], in_cites_.data() + in_off_[d + 1]};
}

std::uint64_t Corpus::content_hash() const {
    std::uint64_t h = kFnvOffset;
    for (const Journal& j : data_.journals) {
        h = fnv1a64("J", h);
        h = fnv1a64(j.journal_id, h);
        h = fnv1a64("|", h);
        h = fnv1a64(j.title, h);
        h = fnv1a64(j.indexed ? "|1" : "|0", h);
    }
    for (const Document& d : data_.documents) {
        h = fnv1a64("D", h);
        h = fnv1a64(d.doc_id, h);
        h = fnv1a64("|", h);
        h = fnv1a64(d.journal_id, h);
        h = fnv1a64_u64(static_cast<std::uint64_t>(static_cast<std::int64_t>(d.pub_year)), h);
        h = fnv1a64(d.doc_type == DocType::citable ? "|c" : "|n", h);
    }
    for (const Reference& r : data_.references) {
        h = fnv1a64("R", h);
        h = fnv1a64(r.citing_doc_id, h);
        h = fnv1a64("|", h);
        h = fnv1a64(r.cited_doc_id, h);
        h = fnv1a64_u64(
            r.cited_year ? static_cast<std::uint64_t>(static_cast<std::int64_t>(*r.cited_year))
                         : 0x8000000000000000ull,
            h);
    }
    return h;
}

std::string Corpus::content_hash_hex() const {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = content_hash();
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Validation

std::vector<Violation> validate(const CorpusData& data, YearBounds bounds) {
    std::vector<Violation> out;
    auto report = [&](std::string rule, std::string entity, std::string detail) {
        out.push_back({std::move(rule), std::move(entity), std::move(detail)});
    };

    std::unordered_set<std::string_view> journal_ids;
    journal_ids.reserve(data.journals.size());
    for (const Journal& j : data.journals) {
        if (!journal_ids.insert(j.journal_id).second) {
            report("duplicate_journal_id", j.journal_id, "journal_id occurs more than once");
        }
        if (j.journal_id.empty()) report("empty_journal_id", "<journal>", "journal_id is empty");
    }

    std::unordered_set<std::string_view> doc_ids;
    doc_ids.reserve(data.documents.size());
    for (const Document& d : data.documents) {
        if (d.doc_id.empty()) report("empty_doc_id", "<document>", "doc_id is empty");
        if (!doc_ids.insert(d.doc_id).second) {
            report("duplicate_doc_id", d.doc_id, "doc_id occurs more than once");
        }
        if (!journal_ids.contains(d.journal_id)) {
            report("unknown_journal", d.doc_id, "document references journal '" + d.journal_id + "'");
        }
        if (d.pub_year < bounds.min_year || d.pub_year > bounds.max_year) {
            report("pub_year_out_of_range", d.doc_id,
                   "pub_year " + std::to_string(d.pub_year) + " outside [" +
                       std::to_string(bounds.min_year) + ", " + std::to_string(bounds.max_year) + "]");
        }
    }

    for (const Reference& r : data.references) {
        if (!doc_ids.contains(r.citing_doc_id)) {
            report("unknown_citing_doc", r.citing_doc_id, "reference cites from unknown document");
        }
        if (r.resolved()) {
            if (!doc_ids.contains(r.cited_doc_id)) {
                report("unknown_cited_doc", r.cited_doc_id,
                       "reference from '" + r.citing_doc_id + "' targets unknown document");
            }
            if (r.cited_year) {
                report("resolved_ref_with_cited_year", r.citing_doc_id,
                       "resolved reference to '" + r.cited_doc_id + "' also carries cited_year");
            }
            if (r.cited_doc_id == r.citing_doc_id) {
                report("self_citation", r.citing_doc_id, "document cites itself");
            }
        }
    }
    return out;
}

std::vector<Violation> validate(const Corpus& corpus, YearBounds bounds) {
    std::vector<Violation> out = validate(corpus.data(), bounds);

    // Index-inversion check: rebuilding the edge indices from the raw table
    // must reproduce what the corpus carries.
    std::int64_t resolved_edges = 0;
    std::int64_t indexed_out = 0;
    std::int64_t indexed_in = 0;
    for (const Reference& r : corpus.references()) {
        if (r.resolved() && corpus.find_document(r.cited_doc_id) &&
            corpus.find_document(r.citing_doc_id)) {
            ++resolved_edges;
        }
    }
    for (DocIdx d = 0; d < corpus.document_count(); ++d) {
        indexed_in += static_cast<std::int64_t>(corpus.in_cites(d).size());
        for (const OutRef& e : corpus.out_refs(d)) {
            if (e.target) ++indexed_out;
        }
    }
    if (indexed_out != resolved_edges || indexed_in != resolved_edges) {
        out.push_back({"index_inversion", "<corpus>",
                       "edge indices disagree with the reference table: " +
                           std::to_string(resolved_edges) + " resolved edges vs " +
                           std::to_string(indexed_out) + " outgoing / " +
                           std::to_string(indexed_in) + " incoming"});
    }
    return out;
}

// ---------------------------------------------------------------------------
// CSV ingestion

namespace {

void check_header(const std::vector<std::string>& fields, std::initializer_list<const char*> want,
                  const std::string& where) {
    bool ok = fields.size() == want.size();
    if (ok) {
        std::size_t i = 0;
        for (const char* w : want) ok = ok && fields[i++] == w;
    }
    if (!ok) {
        std::string expect;
        for (const char* w : want) {
            if (!expect.empty()) expect += ',';
            expect += w;
        }
        fail(ErrorKind::parse, where + ": expected header '" + expect + "'");
    }
}

template <typename RowFn>
void for_each_csv_row(const std::string& path, std::initializer_list<const char*> header,
                      RowFn&& fn) {
    auto in = open_input(path);
    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;
    while (read_line(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::string where = path + ":" + std::to_string(line_no);
        auto fields = csv::split_row(line, where);
        if (!saw_header) {
            check_header(fields, header, where);
            saw_header = true;
            continue;
        }
        if (fields.size() != header.size()) {
            fail(ErrorKind::parse, where + ": expected " + std::to_string(header.size()) +
                                       " fields, got " + std::to_string(fields.size()));
        }
        fn(fields, where);
    }
    if (!saw_header) fail(ErrorKind::parse, path + ": missing header row");
}

Reference make_reference(std::string citing, std::string cited, std::string year_text,
                         const std::string& where) {
    Reference r;
    r.citing_doc_id = std::move(citing);
    r.cited_doc_id = std::move(cited);
    if (!year_text.empty()) {
        if (r.resolved()) {
            fail(ErrorKind::parse, where + ": resolved reference must leave cited_year empty");
        }
        r.cited_year = parse_int(year_text, where);
    }
    if (r.citing_doc_id.empty()) fail(ErrorKind::parse, where + ": citing_doc_id is empty");
    return r;
}

} // namespace

CorpusData read_corpus_csv(const std::string& journals_path, const std::string& documents_path,
                           const std::string& references_path) {
    CorpusData data;

    for_each_csv_row(journals_path, {"journal_id", "title", "indexed"},
                     [&](const std::vector<std::string>& f, const std::string& where) {
                         data.journals.push_back({f[0], f[1], parse_bool(f[2], where)});
                     });
    for_each_csv_row(documents_path, {"doc_id", "journal_id", "pub_year", "doc_type"},
                     [&](const std::vector<std::string>& f, const std::string& where) {
                         data.documents.push_back(
                             {f[0], f[1], parse_int(f[2], where), parse_doc_type(f[3], where)});
                     });
    for_each_csv_row(references_path, {"citing_doc_id", "cited_doc_id", "cited_year"},
                     [&](std::vector<std::string>& f, const std::string& where) {
                         data.references.push_back(
                             make_reference(std::move(f[0]), std::move(f[1]), f[2], where));
                     });

    return data;
}

Corpus load_corpus(const std::string& journals_path, const std::string& documents_path,
                   const std::string& references_path, YearBounds bounds) {
    return Corpus::build(read_corpus_csv(journals_path, documents_path, references_path), bounds);
}

CorpusData read_corpus_jsonl(const std::string& path) {
    auto in = open_input(path);
    CorpusData data;
    std::string line;
    std::size_t line_no = 0;
    while (read_line(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::string where = path + ":" + std::to_string(line_no);
        json rec = json::parse(line, nullptr, false);
        if (rec.is_discarded() || !rec.is_object()) {
            fail(ErrorKind::parse, where + ": not a JSON object");
        }
        try {
            std::string kind = rec.at("kind").get<std::string>();
            if (kind == "journal") {
                data.journals.push_back({rec.at("journal_id").get<std::string>(),
                                         rec.value("title", std::string{}),
                                         rec.at("indexed").get<bool>()});
            } else if (kind == "document") {
                data.documents.push_back(
                    {rec.at("doc_id").get<std::string>(), rec.at("journal_id").get<std::string>(),
                     rec.at("pub_year").get<int>(),
                     parse_doc_type(rec.value("doc_type", "citable"), where)});
            } else if (kind == "reference") {
                Reference r;
                r.citing_doc_id = rec.at("citing_doc_id").get<std::string>();
                if (rec.contains("cited_doc_id") && !rec["cited_doc_id"].is_null()) {
                    r.cited_doc_id = rec["cited_doc_id"].get<std::string>();
                }
                if (rec.contains("cited_year") && !rec["cited_year"].is_null()) {
                    if (r.resolved()) {
                        fail(ErrorKind::parse,
                             where + ": resolved reference must leave cited_year empty");
                    }
                    r.cited_year = rec["cited_year"].get<int>();
                }
                if (r.citing_doc_id.empty()) {
                    fail(ErrorKind::parse, where + ": citing_doc_id is empty");
                }
                data.references.push_back(std::move(r));
            } else {
                fail(ErrorKind::parse, where + ": unknown kind '" + kind + "'");
            }
        } catch (const json::exception& e) {
            fail(ErrorKind::parse, where + ": " + e.what());
        }
    }
    return data;
}

Corpus load_corpus_jsonl(const std::string& path, YearBounds bounds) {
    return Corpus::build(read_corpus_jsonl(path), bounds);
}

// ---------------------------------------------------------------------------
// Serialization

void write_corpus_csv(const Corpus& corpus, const std::string& journals_path,
                      const std::string& documents_path, const std::string& references_path) {
    {
        auto out = open_output(journals_path);
        out << "journal_id,title,indexed\n";
        for (const Journal& j : corpus.journals()) {
            out << csv::escape(j.journal_id) << ',' << csv::escape(j.title) << ','
                << (j.indexed ? "true" : "false") << '\n';
        }
    }
    {
        auto out = open_output(documents_path);
        out << "doc_id,journal_id,pub_year,doc_type\n";
        for (const Document& d : corpus.documents()) {
            out << csv::escape(d.doc_id) << ',' << csv::escape(d.journal_id) << ',' << d.pub_year
                << ',' << doc_type_label(d.doc_type) << '\n';
        }
    }
    {
        auto out = open_output(references_path);
        out << "citing_doc_id,cited_doc_id,cited_year\n";
        for (const Reference& r : corpus.references()) {
            out << csv::escape(r.citing_doc_id) << ',' << csv::escape(r.cited_doc_id) << ',';
            if (r.cited_year) out << *r.cited_year;
            out << '\n';
        }
    }
}

void write_corpus_jsonl(const Corpus& corpus, const std::string& path) {
    auto out = open_output(path);
    for (const Journal& j : corpus.journals()) {
        json rec{{"kind", "journal"},
                 {"journal_id", j.journal_id},
                 {"title", j.title},
                 {"indexed", j.indexed}};
        out << rec.dump() << '\n';
    }
    for (const Document& d : corpus.documents()) {
        json rec{{"kind", "document"},
                 {"doc_id", d.doc_id},
                 {"journal_id", d.journal_id},
                 {"pub_year", d.pub_year},
                 {"doc_type", std::string(doc_type_label(d.doc_type))}};
        out << rec.dump() << '\n';
    }
    for (const Reference& r : corpus.references()) {
        json rec{{"kind", "reference"}, {"citing_doc_id", r.citing_doc_id}};
        if (r.resolved()) rec["cited_doc_id"] = r.cited_doc_id;
        if (r.cited_year) rec["cited_year"] = *r.cited_year;
        out << rec.dump() << '\n';
    }
}

// ---------------------------------------------------------------------------
// Window / profile primitives

std::vector<std::string> papers_in_window(const Corpus& corpus, std::string_view journal_id,
                                          int census_year, int window_years) {
    JournalIdx j = corpus.require_journal(journal_id);
    YearWindow window = trailing_window(census_year, window_years);
    std::vector<std::string> out;
    for (DocIdx d : corpus.docs_of_journal_in(j, window)) {
        if (corpus.document(d).doc_type == DocType::citable) {
            out.push_back(corpus.document(d).doc_id);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

CitingProfile citing_profile(const Corpus& corpus, std::string_view doc_id, int census_year,
                             int window_years) {
    DocIdx d = corpus.require_document(doc_id);
    YearWindow window = trailing_window(census_year, window_years);
    CitingProfile profile;
    profile.doc_id = std::string(doc_id);
    profile.n_total = corpus.out_degree(d);
    for (const OutRef& e : corpus.out_refs(d)) {
        if (!e.target) continue;
        const Document& target = corpus.document(*e.target);
        JournalIdx j = corpus.journal_of(*e.target);
        if (window.contains(target.pub_year) && j != kNoJournal && corpus.journal(j).indexed) {
            ++profile.r_windowed_indexed;
        }
    }
    return profile;
}

} // namespace snipkit

#include "snipkit/corpus.hpp"

#include "support/corpus_gen.hpp"
#include "support/oracle.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

using namespace snipkit;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("snipkit_test_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name, const std::string& content) const {
        fs::path p = path / name;
        std::ofstream out(p, std::ios::binary);
        out << content;
        return p.string();
    }
};

Journal journal(std::string id, bool indexed = true) { return {std::move(id), "", indexed}; }

Document doc(std::string id, std::string jid, int year, DocType type = DocType::citable) {
    return {std::move(id), std::move(jid), year, type};
}

Reference ref(std::string citing, std::string cited) {
    return {std::move(citing), std::move(cited), std::nullopt};
}

Reference unresolved_ref(std::string citing, std::optional<int> year = std::nullopt) {
    return {std::move(citing), "", year};
}

} // namespace

TEST_CASE("load_corpus reads a minimal well-formed corpus") {
    TempDir dir;
    auto journals = dir.file("journals.csv", "journal_id,title,indexed\nj1,Journal One,true\n");
    auto documents = dir.file("documents.csv",
                              "doc_id,journal_id,pub_year,doc_type\n"
                              "d1,j1,2005,citable\n"
                              "d2,j1,2007,citable\n");
    auto references = dir.file("references.csv", "citing_doc_id,cited_doc_id,cited_year\nd2,d1,\n");

    Corpus corpus = load_corpus(journals, documents, references);
    CHECK(corpus.journal_count() == 1);
    CHECK(corpus.document_count() == 2);
    CHECK(corpus.reference_count() == 1);
    CHECK(validate(corpus).empty());
}

TEST_CASE("load_corpus rejects a dangling citing id and names it") {
    TempDir dir;
    auto journals = dir.file("journals.csv", "journal_id,title,indexed\nj1,J,true\n");
    auto documents = dir.file("documents.csv", "doc_id,journal_id,pub_year,doc_type\nd1,j1,2005,citable\n");
    auto references = dir.file("references.csv", "citing_doc_id,cited_doc_id,cited_year\nghost,d1,\n");

    try {
        load_corpus(journals, documents, references);
        FAIL("expected an integrity error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::integrity);
        CHECK(std::string(e.what()).find("ghost") != std::string::npos);
    }
}

TEST_CASE("empty references file yields a corpus with zero edges") {
    TempDir dir;
    auto journals = dir.file("journals.csv", "journal_id,title,indexed\nj1,J,true\n");
    auto documents = dir.file("documents.csv", "doc_id,journal_id,pub_year,doc_type\nd1,j1,2005,citable\n");
    auto references = dir.file("references.csv", "citing_doc_id,cited_doc_id,cited_year\n");

    Corpus corpus = load_corpus(journals, documents, references);
    CHECK(corpus.reference_count() == 0);
    CHECK(validate(corpus).empty());
}

TEST_CASE("malformed rows are rejected with their location") {
    TempDir dir;
    auto journals = dir.file("journals.csv", "journal_id,title,indexed\nj1,J,maybe\n");
    auto documents = dir.file("documents.csv", "doc_id,journal_id,pub_year,doc_type\n");
    auto references = dir.file("references.csv", "citing_doc_id,cited_doc_id,cited_year\n");

    try {
        load_corpus(journals, documents, references);
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::parse);
        CHECK(std::string(e.what()).find(":2") != std::string::npos);
    }
}

TEST_CASE("validate flags self-citation and duplicate ids in hand-built corpora") {
    CorpusData data;
    data.journals = {journal("j1")};
    data.documents = {doc("d1", "j1", 2005), doc("d2", "j1", 2006)};
    data.references = {ref("d1", "d1")};

    auto violations = validate(data);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].rule == "self_citation");
    CHECK(violations[0].entity == "d1");

    data.references.clear();
    data.documents.push_back(doc("d1", "j1", 2006));
    violations = validate(data);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].rule == "duplicate_doc_id");

    // the same corpus is inspectable after (unchecked) indexing
    auto corpus = Corpus::build_unchecked(std::move(data));
    auto post = validate(corpus);
    REQUIRE(post.size() == 1);
    CHECK(post[0].rule == "duplicate_doc_id");
}

TEST_CASE("validate enforces the publication-year bounds") {
    CorpusData data;
    data.journals = {journal("j1")};
    data.documents = {doc("d1", "j1", 1700)};
    auto violations = validate(data);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].rule == "pub_year_out_of_range");
    CHECK(validate(data, YearBounds{1600, 2100}).empty());
}

TEST_CASE("resolved references must not carry a cited year") {
    CorpusData data;
    data.journals = {journal("j1")};
    data.documents = {doc("d1", "j1", 2005), doc("d2", "j1", 2006)};
    data.references = {{"d2", "d1", 2005}};
    auto violations = validate(data);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].rule == "resolved_ref_with_cited_year");
}

TEST_CASE("papers_in_window keeps 1-3 year old citable papers only") {
    CorpusData data;
    data.journals = {journal("j1")};
    data.documents = {
        doc("a", "j1", 2004), doc("b", "j1", 2005), doc("c", "j1", 2006),
        doc("census", "j1", 2007), doc("old", "j1", 2003),
        doc("editorial", "j1", 2005, DocType::non_citable),
    };
    Corpus corpus = Corpus::build(std::move(data));

    auto window = papers_in_window(corpus, "j1", 2007);
    CHECK(window == std::vector<std::string>{"a", "b", "c"});
    CHECK_THROWS_AS((void)papers_in_window(corpus, "nope", 2007), Error);
}

TEST_CASE("citing_profile counts everything in n and only windowed indexed in r") {
    CorpusData data;
    data.journals = {journal("indexed"), journal("offlist", false)};
    data.documents = {doc("citer", "indexed", 2007)};
    for (int i = 0; i < 10; ++i) {
        data.documents.push_back(doc("t" + std::to_string(i), "indexed", 2005));
        data.references.push_back(ref("citer", "t" + std::to_string(i)));
    }
    Corpus corpus = Corpus::build(std::move(data));
    auto profile = citing_profile(corpus, "citer", 2007);
    CHECK(profile.n_total == 10);
    CHECK(profile.r_windowed_indexed == 10);
}

TEST_CASE("citing_profile of a 50-reference article matches a brute-force recount") {
    // 50 references; exactly 5 resolved, in-window, and into the indexed journal
    CorpusData data;
    data.journals = {journal("indexed"), journal("offlist", false)};
    data.documents = {doc("citer", "indexed", 2007)};
    for (int i = 0; i < 5; ++i) {
        data.documents.push_back(doc("win" + std::to_string(i), "indexed", 2004 + i % 3));
        data.references.push_back(ref("citer", "win" + std::to_string(i)));
    }
    for (int i = 0; i < 10; ++i) { // in-window but not indexed
        data.documents.push_back(doc("off" + std::to_string(i), "offlist", 2005));
        data.references.push_back(ref("citer", "off" + std::to_string(i)));
    }
    for (int i = 0; i < 15; ++i) { // indexed but too old
        data.documents.push_back(doc("old" + std::to_string(i), "indexed", 2001));
        data.references.push_back(ref("citer", "old" + std::to_string(i)));
    }
    for (int i = 0; i < 20; ++i) { // unresolved
        data.references.push_back(unresolved_ref("citer", 2005));
    }

    oracle::Config cfg{2007, 3, 10};
    CHECK(oracle::n_total(data, "citer") == 50);
    CHECK(oracle::r_windowed(data, "citer", cfg) == 5);

    Corpus corpus = Corpus::build(std::move(data));
    auto profile = citing_profile(corpus, "citer", 2007);
    CHECK(profile.n_total == 50);
    CHECK(profile.r_windowed_indexed == 5);
}

TEST_CASE("a single five-year-old reference gives n=1, r=0") {
    CorpusData data;
    data.journals = {journal("j1")};
    data.documents = {doc("citer", "j1", 2007), doc("target", "j1", 2002)};
    data.references = {ref("citer", "target")};
    Corpus corpus = Corpus::build(std::move(data));
    auto profile = citing_profile(corpus, "citer", 2007);
    CHECK(profile.n_total == 1);
    CHECK(profile.r_windowed_indexed == 0);
}

TEST_CASE("r never exceeds n across random corpora") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Corpus corpus = testsupport::random_corpus(seed);
        for (const Document& d : corpus.documents()) {
            auto profile = citing_profile(corpus, d.doc_id, testsupport::kCensusYear);
            CHECK(profile.r_windowed_indexed >= 0);
            CHECK(profile.r_windowed_indexed <= profile.n_total);
        }
    }
}

TEST_CASE("papers_in_window ignores documents outside the window") {
    CorpusData data;
    data.journals = {journal("j1")};
    data.documents = {doc("in", "j1", 2005)};
    Corpus before = Corpus::build(data);
    auto baseline = papers_in_window(before, "j1", 2007);

    data.documents.push_back(doc("outside", "j1", 1999));
    data.documents.push_back(doc("future", "j1", 2010));
    Corpus after = Corpus::build(std::move(data));
    CHECK(papers_in_window(after, "j1", 2007) == baseline);
}

TEST_CASE("unresolved references change n but never r") {
    CorpusData data;
    data.journals = {journal("j1")};
    data.documents = {doc("citer", "j1", 2007), doc("target", "j1", 2005)};
    data.references = {ref("citer", "target")};
    Corpus before = Corpus::build(data);
    auto base = citing_profile(before, "citer", 2007);

    for (int i = 0; i < 7; ++i) data.references.push_back(unresolved_ref("citer", 2005));
    Corpus after = Corpus::build(std::move(data));
    auto padded = citing_profile(after, "citer", 2007);
    CHECK(padded.r_windowed_indexed == base.r_windowed_indexed);
    CHECK(padded.n_total == base.n_total + 7);
}

TEST_CASE("corpus round-trips through CSV and JSONL byte-identically") {
    Corpus corpus = testsupport::random_corpus(42);
    TempDir dir;

    auto j = (dir.path / "journals.csv").string();
    auto d = (dir.path / "documents.csv").string();
    auto r = (dir.path / "references.csv").string();
    write_corpus_csv(corpus, j, d, r);
    Corpus reloaded = load_corpus(j, d, r);
    CHECK(reloaded.content_hash() == corpus.content_hash());
    CHECK(reloaded.journal_count() == corpus.journal_count());
    CHECK(reloaded.document_count() == corpus.document_count());
    CHECK(reloaded.reference_count() == corpus.reference_count());

    auto jsonl = (dir.path / "corpus.jsonl").string();
    write_corpus_jsonl(corpus, jsonl);
    Corpus from_jsonl = load_corpus_jsonl(jsonl);
    CHECK(from_jsonl.content_hash() == corpus.content_hash());
}

TEST_CASE("jsonl corpora load with the same content and reject malformed lines") {
    TempDir dir;
    auto good = dir.file("good.jsonl",
                         R"({"kind":"journal","journal_id":"j1","title":"J","indexed":true})"
                         "\n"
                         R"({"kind":"document","doc_id":"d1","journal_id":"j1","pub_year":2005,"doc_type":"citable"})"
                         "\n"
                         R"({"kind":"document","doc_id":"d2","journal_id":"j1","pub_year":2007,"doc_type":"citable"})"
                         "\n"
                         R"({"kind":"reference","citing_doc_id":"d2","cited_doc_id":"d1"})"
                         "\n"
                         R"({"kind":"reference","citing_doc_id":"d2","cited_year":2003})"
                         "\n");
    Corpus corpus = load_corpus_jsonl(good);
    CHECK(corpus.document_count() == 2);
    CHECK(corpus.reference_count() == 2);

    auto bad = dir.file("bad.jsonl", "{\"kind\":\"journal\"\n");
    try {
        load_corpus_jsonl(bad);
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::parse);
        CHECK(std::string(e.what()).find(":1") != std::string::npos);
    }
}

TEST_CASE("ingestion order does not affect the corpus") {
    auto data = testsupport::random_corpus_data(7);
    Corpus original = Corpus::build(data);

    std::mt19937 shuffler(99);
    std::shuffle(data.journals.begin(), data.journals.end(), shuffler);
    std::shuffle(data.documents.begin(), data.documents.end(), shuffler);
    std::shuffle(data.references.begin(), data.references.end(), shuffler);
    Corpus shuffled = Corpus::build(std::move(data));

    CHECK(shuffled.content_hash() == original.content_hash());
    for (const Journal& j : original.journals()) {
        CHECK(papers_in_window(shuffled, j.journal_id, testsupport::kCensusYear) ==
              papers_in_window(original, j.journal_id, testsupport::kCensusYear));
    }
}

TEST_CASE("unknown ids raise not_found") {
    Corpus corpus = testsupport::random_corpus(3);
    CHECK_THROWS_AS((void)citing_profile(corpus, "missing-doc", 2007), Error);
    try {
        (void)citing_profile(corpus, "missing-doc", 2007);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::not_found);
    }
}

TEST_CASE("validate accepts every random corpus the generator builds") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Corpus corpus = testsupport::random_corpus(seed * 17);
        CHECK(validate(corpus).empty());
    }
}

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <vector>

#include "bioc/jats.hpp"
#include "bioc/model.hpp"

namespace bioc {

enum class SourceSet { OA, AU };

// PMID -> PMCID mapping plus the set of known PMCIDs.
struct IdIndex {
    std::map<std::string, std::string> pmid_to_pmcid;
    std::set<std::string> pmcid_set;
};

// Collection accounting. combined is always oa + au - overlap.
struct CollectionStats {
    long long open_access_count = 0;
    long long author_manuscript_count = 0;
    long long overlap_count = 0;
    long long combined_count = 0;

    static CollectionStats from_counts(long long open_access, long long author_manuscript,
                                       long long overlap) {
        return {open_access, author_manuscript, overlap,
                open_access + author_manuscript - overlap};
    }

    bool operator==(const CollectionStats&) const = default;
};

struct IngestFailure {
    std::string member; // archive member name
    std::string reason;
};

struct IngestReport {
    long long converted = 0;
    long long failed = 0;
    long long skipped = 0; // non-XML members
    std::vector<IngestFailure> failures;
};

// Resolves a raw id (PMID digits or PMC id) to a pmcid known to the index.
// Throws Error(MalformedId) when the id matches neither pattern and
// Error(UnknownId) when it is well-formed but absent.
std::string resolve_id(const std::string& raw, const IdIndex& index);

// Filesystem-backed document store. Each document is one BioC XML file under
// a shard directory derived from the last three digits of its pmcid
// ("PMC1790863" -> docs/8/63/PMC1790863.xml); ids, pmid mappings and set
// membership live in a single index file at the store root. Readers may run
// concurrently with each other; writes lock the index and replace document
// files atomically.
class DocumentStore {
public:
    explicit DocumentStore(std::filesystem::path root);

    // Validates and stores a document; doc.id must be a pmcid. Overwrites
    // any previous version. Throws Error(InvalidDocument).
    void put_document(const Document& document, SourceSet set);

    // Loads a stored document. Throws Error(NotFound).
    Document get_document(const std::string& pmcid) const;

    bool has_document(const std::string& pmcid) const;

    // Resolves PMID or PMCID to a stored/known pmcid (see resolve_id).
    std::string resolve(const std::string& raw) const;

    // Converts every .xml member of a gzip tar archive and stores it.
    // Per-member failures are recorded without aborting; non-.xml regular
    // files are counted as skipped. Throws Error(ArchiveUnreadable) only if
    // the archive itself cannot be read.
    IngestReport ingest_archive(const std::filesystem::path& archive, SourceSet set,
                                const jats::ConversionOptions& options = {});

    // Adds PMID -> PMCID mappings from a CSV file with header "PMID,PMCID".
    void load_id_map(const std::filesystem::path& csv);

    CollectionStats stats() const;

    IdIndex id_index() const;

    const std::filesystem::path& root() const { return root_; }

private:
    struct Entry {
        std::optional<std::string> pmid;
        bool in_oa = false;
        bool in_au = false;
    };

    std::filesystem::path document_path(const std::string& pmcid) const;
    void load_index();
    void save_index() const;
    void record(const std::string& pmcid, const std::optional<std::string>& pmid,
                std::optional<SourceSet> set);

    std::filesystem::path root_;
    std::map<std::string, Entry> entries_; // pmcid -> membership
    std::map<std::string, std::string> pmid_to_pmcid_;
    mutable std::shared_mutex mutex_;
};

} // namespace bioc

#include "bioc/store.hpp"

#include <fstream>
#include <sstream>

#include "bioc/error.hpp"
#include "bioc/serial.hpp"
#include "tar.hpp"

namespace bioc {

namespace {

namespace fs = std::filesystem;

bool is_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

bool is_pmcid(std::string_view s) {
    return s.size() > 3 && s.substr(0, 3) == "PMC" && is_digits(s.substr(3));
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Error::Kind::NotFound, "cannot read " + path.string());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file_atomic(const fs::path& path, const std::string& data) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out.write(data.data(), static_cast<std::streamsize>(data.size()));
        if (!out)
            throw Error(Error::Kind::InvalidDocument, "cannot write " + tmp.string());
    }
    fs::rename(tmp, path);
}

// pmcid derived from an archive member name like "oa/PMC1790863.xml".
std::string pmcid_from_member_name(const std::string& name) {
    std::string stem = fs::path(name).stem().string();
    if (is_digits(stem))
        stem = "PMC" + stem;
    return is_pmcid(stem) ? stem : std::string();
}

} // namespace

std::string resolve_id(const std::string& raw, const IdIndex& index) {
    if (is_pmcid(raw)) {
        if (index.pmcid_set.count(raw))
            return raw;
        throw Error(Error::Kind::UnknownId, "unknown PMC id " + raw);
    }
    if (is_digits(raw)) {
        auto it = index.pmid_to_pmcid.find(raw);
        if (it != index.pmid_to_pmcid.end())
            return it->second;
        throw Error(Error::Kind::UnknownId, "unknown PubMed id " + raw);
    }
    throw Error(Error::Kind::MalformedId,
                "\"" + raw + "\" is neither a PubMed id nor a PMC id");
}

DocumentStore::DocumentStore(fs::path root) : root_(std::move(root)) {
    fs::create_directories(root_ / "docs");
    load_index();
}

fs::path DocumentStore::document_path(const std::string& pmcid) const {
    // shard by the last three digits: PMC1790863 -> docs/8/63/PMC1790863.xml
    std::string digits = pmcid.substr(3);
    while (digits.size() < 3)
        digits.insert(digits.begin(), '0');
    const std::string tail = digits.substr(digits.size() - 3);
    return root_ / "docs" / tail.substr(0, 1) / tail.substr(1) / (pmcid + ".xml");
}

void DocumentStore::put_document(const Document& document, SourceSet set) {
    if (!is_pmcid(document.id))
        throw Error(Error::Kind::InvalidDocument,
                    "document id \"" + document.id + "\" is not a PMC id");
    ValidationReport report = validate(document);
    if (!report.ok())
        throw Error(Error::Kind::InvalidDocument,
                    "document " + document.id + " fails validation:\n" + report.to_string());

    Collection wrapper;
    wrapper.source = "local";
    wrapper.date = "";
    wrapper.key = "bioc.key";
    wrapper.documents.push_back(document);
    const std::string xml = to_xml(wrapper);

    std::unique_lock lock(mutex_);
    const fs::path path = document_path(document.id);
    fs::create_directories(path.parent_path());
    write_file_atomic(path, xml);
    const std::string* pmid = document.infons.find("pmid");
    record(document.id,
           pmid != nullptr ? std::optional<std::string>(*pmid) : std::nullopt, set);
    save_index();
}

Document DocumentStore::get_document(const std::string& pmcid) const {
    {
        std::shared_lock lock(mutex_);
        if (!entries_.count(pmcid))
            throw Error(Error::Kind::NotFound, "no stored document for " + pmcid);
    }
    Collection wrapper = from_xml(read_file(document_path(pmcid)));
    if (wrapper.documents.size() != 1)
        throw Error(Error::Kind::NotFound, "store file for " + pmcid + " is not a single document");
    return std::move(wrapper.documents[0]);
}

bool DocumentStore::has_document(const std::string& pmcid) const {
    std::shared_lock lock(mutex_);
    return entries_.count(pmcid) != 0;
}

std::string DocumentStore::resolve(const std::string& raw) const {
    return resolve_id(raw, id_index());
}

IngestReport DocumentStore::ingest_archive(const fs::path& archive, SourceSet set,
                                           const jats::ConversionOptions& options) {
    IngestReport report;
    tar::for_each_member(archive, [&](tar::Member&& member) {
        if (member.name.size() < 4 ||
            member.name.compare(member.name.size() - 4, 4, ".xml") != 0) {
            ++report.skipped;
            return;
        }
        try {
            jats::JatsSourceInfo info = jats::extract_source_info(member.data);
            if (info.pmcid.empty())
                info.pmcid = pmcid_from_member_name(member.name);
            if (info.pmcid.empty())
                throw Error(Error::Kind::MalformedId,
                            "no PMC id in article or member name");
            Document document = jats::convert(member.data, info, options);
            put_document(document, set);
            ++report.converted;
        } catch (const std::exception& e) {
            ++report.failed;
            report.failures.push_back({member.name, e.what()});
        }
    });
    return report;
}

void DocumentStore::load_id_map(const fs::path& csv) {
    std::ifstream in(csv);
    if (!in)
        throw Error(Error::Kind::ArchiveUnreadable, "cannot open id map " + csv.string());

    std::unique_lock lock(mutex_);
    std::string line;
    bool first = true;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (first) {
            first = false;
            if (line == "PMID,PMCID")
                continue; // header
        }
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos)
            throw Error(Error::Kind::Parse,
                        csv.string() + ":" + std::to_string(line_number) + ": expected PMID,PMCID");
        const std::string pmid = line.substr(0, comma);
        const std::string pmcid = line.substr(comma + 1);
        if (!is_digits(pmid) || !is_pmcid(pmcid))
            throw Error(Error::Kind::Parse, csv.string() + ":" + std::to_string(line_number) +
                                                ": bad ids \"" + line + "\"");
        pmid_to_pmcid_[pmid] = pmcid;
        Entry& entry = entries_[pmcid]; // known id, maybe with no document yet
        if (!entry.pmid.has_value())
            entry.pmid = pmid;
    }
    save_index();
}

CollectionStats DocumentStore::stats() const {
    std::shared_lock lock(mutex_);
    long long oa = 0;
    long long au = 0;
    long long overlap = 0;
    for (const auto& [pmcid, entry] : entries_) {
        (void)pmcid;
        if (entry.in_oa)
            ++oa;
        if (entry.in_au)
            ++au;
        if (entry.in_oa && entry.in_au)
            ++overlap;
    }
    return CollectionStats::from_counts(oa, au, overlap);
}

IdIndex DocumentStore::id_index() const {
    std::shared_lock lock(mutex_);
    IdIndex index;
    index.pmid_to_pmcid = pmid_to_pmcid_;
    for (const auto& [pmcid, entry] : entries_) {
        (void)entry;
        index.pmcid_set.insert(pmcid);
    }
    return index;
}

void DocumentStore::record(const std::string& pmcid, const std::optional<std::string>& pmid,
                           std::optional<SourceSet> set) {
    Entry& entry = entries_[pmcid];
    if (set.has_value()) {
        if (*set == SourceSet::OA)
            entry.in_oa = true;
        else
            entry.in_au = true;
    }
    if (pmid.has_value()) {
        entry.pmid = *pmid;
        pmid_to_pmcid_[*pmid] = pmcid;
    }
}

// Index file: one line per pmcid, tab-separated: pmcid, pmid (may be empty),
// membership flags ("O", "A", or "OA").
void DocumentStore::load_index() {
    std::ifstream in(root_ / "index.tsv");
    if (!in)
        return; // fresh store
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const std::size_t t1 = line.find('\t');
        const std::size_t t2 = t1 == std::string::npos ? std::string::npos
                                                       : line.find('\t', t1 + 1);
        if (t1 == std::string::npos || t2 == std::string::npos)
            throw Error(Error::Kind::Parse, "corrupt store index: " + line);
        const std::string pmcid = line.substr(0, t1);
        const std::string pmid = line.substr(t1 + 1, t2 - t1 - 1);
        const std::string flags = line.substr(t2 + 1);
        Entry entry;
        entry.in_oa = flags.find('O') != std::string::npos;
        entry.in_au = flags.find('A') != std::string::npos;
        if (!pmid.empty()) {
            entry.pmid = pmid;
            pmid_to_pmcid_[pmid] = pmcid;
        }
        entries_[pmcid] = std::move(entry);
    }
}

void DocumentStore::save_index() const {
    std::ostringstream out;
    for (const auto& [pmcid, entry] : entries_) {
        out << pmcid << '\t' << (entry.pmid.has_value() ? *entry.pmid : "") << '\t';
        if (entry.in_oa)
            out << 'O';
        if (entry.in_au)
            out << 'A';
        out << '\n';
    }
    write_file_atomic(root_ / "index.tsv", out.str());
}

} // namespace bioc

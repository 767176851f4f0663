// bioc: convert JATS articles to BioC, manage a local document store, and
// serve stored articles over HTTP.

#include <atomic>
#include <csignal>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bioc/error.hpp"
#include "bioc/jats.hpp"
#include "bioc/serial.hpp"
#include "bioc/service.hpp"
#include "bioc/store.hpp"
#include "bioc/translit.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1; // user/data errors
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw bioc::Error(bioc::Error::Kind::NotFound, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bioc::jats::Encoding parse_encoding(const std::string& name) {
    return name == "ascii" ? bioc::jats::Encoding::Ascii : bioc::jats::Encoding::Unicode;
}

int cmd_convert(const std::string& input, const std::string& format,
                const std::string& encoding, const std::string& out_path,
                const std::string& pmcid_flag, const std::string& translit_path) {
    std::string xml;
    try {
        xml = read_file(input);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }

    try {
        bioc::jats::JatsSourceInfo info = bioc::jats::extract_source_info(xml);
        if (!pmcid_flag.empty())
            info.pmcid = pmcid_flag;
        if (info.pmcid.empty()) {
            std::string stem = std::filesystem::path(input).stem().string();
            if (stem.rfind("PMC", 0) == 0)
                info.pmcid = stem;
        }

        // convert in unicode, then transliterate before recomputing offsets;
        // this matches what Encoding::Ascii does internally but lets a custom
        // table slot in
        bioc::jats::ConversionOptions options;
        bioc::Document document = bioc::jats::convert(xml, info, options);
        if (parse_encoding(encoding) == bioc::jats::Encoding::Ascii) {
            const bioc::translit::TranslitTable table =
                translit_path.empty() ? bioc::translit::TranslitTable::builtin()
                                      : bioc::translit::TranslitTable::load(translit_path);
            for (bioc::Passage& p : document.passages)
                p.text = bioc::translit::to_ascii(p.text, table);
            document = bioc::recompute_offsets(std::move(document), options.separator);
        }

        bioc::Collection collection;
        collection.source = "local";
        collection.date = "";
        collection.key = "bioc.key";
        collection.documents.push_back(std::move(document));

        const std::string serialized = bioc::serialize(
            collection, format == "json" ? bioc::SerializationFormat::JSON
                                         : bioc::SerializationFormat::XML);
        if (out_path.empty()) {
            std::cout << serialized;
        } else {
            std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
            out << serialized;
            if (!out) {
                std::cerr << "error: cannot write " << out_path << "\n";
                return kExitError;
            }
        }
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << input << ": " << e.what() << "\n";
        return kExitError;
    }
}

int cmd_ingest(const std::string& store_path, const std::string& archive,
               const std::string& set_name, const std::string& encoding,
               const std::string& id_map) {
    try {
        bioc::DocumentStore store(store_path);
        if (!id_map.empty())
            store.load_id_map(id_map);

        bioc::jats::ConversionOptions options;
        options.encoding = parse_encoding(encoding);
        const bioc::SourceSet set =
            set_name == "au" ? bioc::SourceSet::AU : bioc::SourceSet::OA;

        const bioc::IngestReport report = store.ingest_archive(archive, set, options);
        std::cout << "converted=" << report.converted << " failed=" << report.failed
                  << " skipped=" << report.skipped << "\n";
        for (const bioc::IngestFailure& failure : report.failures)
            std::cerr << "failed: " << failure.member << ": " << failure.reason << "\n";
        return report.failed == 0 ? kExitOk : kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}

int cmd_stats(const std::string& store_path) {
    try {
        bioc::DocumentStore store(store_path);
        const bioc::CollectionStats stats = store.stats();
        std::cout << "oa=" << stats.open_access_count
                  << " au=" << stats.author_manuscript_count
                  << " overlap=" << stats.overlap_count
                  << " combined=" << stats.combined_count << "\n";
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}

std::atomic<bool> g_stop{false};

void handle_signal(int) { g_stop.store(true); }

int cmd_serve(const std::string& store_path, const std::string& bind) {
    const std::size_t colon = bind.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == bind.size()) {
        std::cerr << "error: bind address must be host:port, got \"" << bind << "\"\n";
        return kExitError;
    }
    const std::string host = bind.substr(0, colon);
    int port = 0;
    try {
        port = std::stoi(bind.substr(colon + 1));
    } catch (const std::exception&) {
        std::cerr << "error: invalid port in \"" << bind << "\"\n";
        return kExitError;
    }
    if (port < 0 || port > 65535) {
        std::cerr << "error: invalid port in \"" << bind << "\"\n";
        return kExitError;
    }

    try {
        bioc::DocumentStore store(store_path);
        std::signal(SIGINT, handle_signal);
        std::signal(SIGTERM, handle_signal);
        std::cerr << "serving " << store_path << " on http://" << bind << "\n";
        if (!bioc::run_server(store, host, port, &g_stop)) {
            std::cerr << "error: cannot bind " << bind << "\n";
            return kExitError;
        }
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"JATS to BioC conversion, document store, and retrieval service"};
    app.require_subcommand(1);
    app.set_config("--config", "", "config file (key=value lines)");

    std::string store_path = "store";
    app.add_option("--store", store_path, "document store directory")
        ->envname("BIOC_STORE")
        ->capture_default_str();

    auto* convert = app.add_subcommand("convert", "convert one JATS file to BioC");
    std::string input;
    std::string format = "xml";
    std::string encoding = "unicode";
    std::string out_path;
    std::string pmcid_flag;
    std::string translit_path;
    convert->add_option("input", input, "JATS XML file")->required();
    convert->add_option("--format", format, "xml or json")
        ->check(CLI::IsMember({"xml", "json"}))
        ->capture_default_str();
    convert->add_option("--encoding", encoding, "unicode or ascii")
        ->check(CLI::IsMember({"unicode", "ascii"}))
        ->capture_default_str();
    convert->add_option("--out", out_path, "write to file instead of stdout");
    convert->add_option("--pmcid", pmcid_flag, "override the article's PMC id");
    convert->add_option("--translit-table", translit_path,
                        "custom U+XXXX<TAB>replacement table for ascii encoding");

    auto* ingest = app.add_subcommand("ingest", "ingest a gzip tar archive of JATS files");
    std::string archive;
    std::string set_name = "oa";
    std::string ingest_encoding = "unicode";
    std::string id_map;
    ingest->add_option("archive", archive, "tar.gz of JATS .xml files")->required();
    ingest->add_option("--set", set_name, "collection set: oa or au")
        ->check(CLI::IsMember({"oa", "au"}))
        ->capture_default_str();
    ingest->add_option("--encoding", ingest_encoding, "stored text encoding")
        ->check(CLI::IsMember({"unicode", "ascii"}))
        ->capture_default_str();
    ingest->add_option("--id-map", id_map, "PMID,PMCID csv to load into the index");

    auto* stats = app.add_subcommand("stats", "print collection counts");

    auto* serve = app.add_subcommand("serve", "serve the store over HTTP");
    std::string bind = "127.0.0.1:8080";
    serve->add_option("--bind", bind, "host:port")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return kExitOk; // --help
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    if (convert->parsed())
        return cmd_convert(input, format, encoding, out_path, pmcid_flag, translit_path);
    if (ingest->parsed())
        return cmd_ingest(store_path, archive, set_name, ingest_encoding, id_map);
    if (stats->parsed())
        return cmd_stats(store_path);
    if (serve->parsed())
        return cmd_serve(store_path, bind);
    return kExitUsage;
}

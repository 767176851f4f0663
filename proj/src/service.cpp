#include "bioc/service.hpp"

#include <chrono>
#include <ctime>
#include <thread>

#include <httplib.h>

#include "bioc/error.hpp"
#include "bioc/serial.hpp"
#include "bioc/translit.hpp"

namespace bioc {

namespace {

std::string today_yyyymmdd() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[9];
    std::snprintf(buf, sizeof(buf), "%04d%02d%02d", tm.tm_year + 1900, tm.tm_mon + 1,
                  tm.tm_mday);
    return buf;
}

ApiResponse plain(int status, std::string message) {
    return {status, "text/plain; charset=utf-8", std::move(message)};
}

// Splits "/BioC_xml/PMC123/unicode" into its three segments; false when the
// path does not have that shape at all.
bool split_api_path(std::string_view path, std::string& format, std::string& id,
                    std::string& encoding) {
    constexpr std::string_view prefix = "/BioC_";
    if (path.size() <= prefix.size() || path.substr(0, prefix.size()) != prefix)
        return false;
    std::string_view rest = path.substr(prefix.size());
    const std::size_t slash1 = rest.find('/');
    if (slash1 == std::string_view::npos)
        return false;
    const std::size_t slash2 = rest.find('/', slash1 + 1);
    if (slash2 == std::string_view::npos || rest.find('/', slash2 + 1) != std::string_view::npos)
        return false;
    format = std::string(rest.substr(0, slash1));
    id = std::string(rest.substr(slash1 + 1, slash2 - slash1 - 1));
    encoding = std::string(rest.substr(slash2 + 1));
    return !format.empty() && !id.empty() && !encoding.empty();
}

} // namespace

ApiResponse Service::handle_get(std::string_view path) const {
    if (path == "/healthz")
        return plain(200, "ok");

    std::string format;
    std::string id;
    std::string encoding;
    if (!split_api_path(path, format, id, encoding))
        return plain(404, "not found\n");

    if (format != "xml" && format != "json")
        return plain(400, "unknown format \"" + format + "\"; expected xml or json\n");
    if (encoding != "unicode" && encoding != "ascii")
        return plain(400, "unknown encoding \"" + encoding + "\"; expected unicode or ascii\n");

    try {
        const std::string pmcid = store_.resolve(id);
        Document document = store_.get_document(pmcid);

        if (encoding == "ascii") {
            for (Passage& passage : document.passages)
                passage.text = translit::to_ascii(passage.text);
            document = recompute_offsets(std::move(document));
        }

        Collection collection;
        collection.source = "local";
        collection.date = today_yyyymmdd();
        collection.key = "bioc.key";
        collection.documents.push_back(std::move(document));

        if (format == "xml")
            return {200, "application/xml; charset=utf-8", to_xml(collection)};
        return {200, "application/json; charset=utf-8", to_json(collection)};
    } catch (const Error& e) {
        switch (e.kind()) {
        case Error::Kind::MalformedId:
            return plain(400, std::string(e.what()) + "\n");
        case Error::Kind::UnknownId:
        case Error::Kind::NotFound:
            return plain(404, std::string(e.what()) + "\n");
        default:
            return plain(500, std::string("internal error: ") + e.what() + "\n");
        }
    } catch (const std::exception& e) {
        return plain(500, std::string("internal error: ") + e.what() + "\n");
    }
}

bool run_server(const DocumentStore& store, const std::string& host, int port,
                std::atomic<bool>* stop) {
    Service service(store);
    httplib::Server server;

    server.Get(".*", [&service](const httplib::Request& req, httplib::Response& res) {
        ApiResponse api = service.handle_get(req.path);
        res.status = api.status;
        res.set_content(api.body, api.content_type);
    });

    if (!server.bind_to_port(host, port))
        return false;

    std::thread watcher;
    if (stop != nullptr) {
        watcher = std::thread([&server, stop] {
            while (!stop->load())
                std::this_thread::sleep_for(std::chrono::milliseconds(50));
            server.stop();
        });
    }
    const bool ok = server.listen_after_bind();
    if (watcher.joinable())
        watcher.join();
    return ok;
}

} // namespace bioc

#pragma once

#include <atomic>
#include <string>
#include <string_view>

#include "bioc/store.hpp"

namespace bioc {

struct ApiResponse {
    int status = 0;
    std::string content_type;
    std::string body;
};

// Request handling for the document retrieval API, separated from the HTTP
// server so the URL contract is testable without sockets.
//
//   GET /BioC_{xml|json}/{PMID or PMCID}/{unicode|ascii}
//   GET /healthz
//
// Bad format or encoding segments and malformed ids give 400, unknown ids
// and missing documents 404, anything else unexpected 500. Responses are
// UTF-8 (the ascii encoding is a UTF-8 subset). Never mutates the store.
class Service {
public:
    explicit Service(const DocumentStore& store) : store_(store) {}

    ApiResponse handle_get(std::string_view path) const;

private:
    const DocumentStore& store_;
};

// Blocking HTTP server wrapping Service; returns false when the address
// cannot be bound. `stop` may be flipped from another thread to shut down.
bool run_server(const DocumentStore& store, const std::string& host, int port,
                std::atomic<bool>* stop = nullptr);

} // namespace bioc

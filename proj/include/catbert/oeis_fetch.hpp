#pragma once

// Optional live retrieval of an OEIS b-file. Disabled by default at the CLI;
// the shipped snapshot is the deterministic source for tests.

#include <httplib.h>

#include <stdexcept>
#include <string>

namespace catbert {

/// Fetches http(s)://<base>/<Axxxxxx>/b<xxxxxx>.txt with a timeout.
/// base_url example: "http://oeis.org". Throws std::runtime_error on failure.
inline std::string fetch_bfile(const std::string& sequence_id, const std::string& base_url,
                               int timeout_seconds) {
    if (sequence_id.size() < 2 || sequence_id[0] != 'A')
        throw std::invalid_argument("sequence id must look like A296056");
    const std::string path = "/" + sequence_id + "/b" + sequence_id.substr(1) + ".txt";
    httplib::Client client(base_url);
    client.set_connection_timeout(timeout_seconds, 0);
    client.set_read_timeout(timeout_seconds, 0);
    auto res = client.Get(path);
    if (!res)
        throw std::runtime_error("fetch failed: " + httplib::to_string(res.error()));
    if (res->status != 200)
        throw std::runtime_error("fetch failed: HTTP " + std::to_string(res->status));
    return res->body;
}

}  // namespace catbert

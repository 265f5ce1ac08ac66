#pragma once

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <string>
#include <string_view>
#include <thread>

#include "emocue/audio.hpp"
#include "emocue/errors.hpp"
#include "emocue/textutil.hpp"

#include <httplib.h>
#include <json.hpp>

namespace emocue {

struct SynthesisRequest {
    std::string text;
    std::string voice;
    int rate = 16000; // hint; stubs use their own configured rate
};

struct StubParams {
    double ms_per_char = 60.0;
    double freq = 220.0;
    double amplitude = 0.3;
    int rate = 16000;
};

struct HttpParams {
    std::string url;      // e.g. http://host:port/synthesize
    std::string voice;    // default voice when the request names none
    std::string auth_env; // env var holding a bearer token; empty = no auth
    int timeout_ms = 10000;
};

struct BackendDescriptor {
    std::string name = "stub";
    enum class Kind { Stub, Http } kind = Kind::Stub;
    StubParams stub;
    HttpParams http;
};

namespace detail {

// duration law: samples = round(chars * ms_per_char * rate / 1000)
inline AudioBuffer stub_synthesize(const std::string& trimmed, const StubParams& p) {
    const auto chars = static_cast<double>(count_codepoints(trimmed));
    const auto count =
        static_cast<std::size_t>(std::llround(chars * p.ms_per_char * p.rate / 1000.0));
    AudioBuffer out;
    out.sample_rate = p.rate;
    out.samples.resize(count);
    const double w = 2.0 * 3.14159265358979323846 * p.freq / p.rate;
    for (std::size_t i = 0; i < count; ++i)
        out.samples[i] = p.amplitude * std::sin(w * static_cast<double>(i));
    return out;
}

inline void split_url(const std::string& url, std::string& base, std::string& path) {
    const auto scheme = url.find("://");
    if (scheme == std::string::npos) throw ConfigError("backend url missing scheme: " + url);
    const auto slash = url.find('/', scheme + 3);
    if (slash == std::string::npos) {
        base = url;
        path = "/";
    } else {
        base = url.substr(0, slash);
        path = url.substr(slash);
    }
}

inline AudioBuffer http_synthesize(const SynthesisRequest& req, const BackendDescriptor& backend,
                                   const std::string& trimmed) {
    std::string base, path;
    split_url(backend.http.url, base, path);
    httplib::Client cli(base);
    cli.set_connection_timeout(0, backend.http.timeout_ms * 1000);
    cli.set_read_timeout(backend.http.timeout_ms / 1000, (backend.http.timeout_ms % 1000) * 1000);

    httplib::Headers headers;
    if (!backend.http.auth_env.empty()) {
        if (const char* token = std::getenv(backend.http.auth_env.c_str()))
            headers.emplace("Authorization", std::string("Bearer ") + token);
    }

    nlohmann::json body = {
        {"text", trimmed},
        {"voice", req.voice.empty() ? backend.http.voice : req.voice},
        {"sample_rate", req.rate},
    };
    auto res = cli.Post(path, headers, body.dump(), "application/json");
    if (!res)
        throw BackendUnavailable("backend '" + backend.name +
                                 "': " + httplib::to_string(res.error()));
    if (res->status >= 500)
        throw BackendUnavailable("backend '" + backend.name + "': HTTP " +
                                 std::to_string(res->status));
    if (res->status != 200)
        throw BadResponse("backend '" + backend.name + "': HTTP " + std::to_string(res->status));
    try {
        return decode_wav(res->body);
    } catch (const Error& e) {
        throw BadResponse("backend '" + backend.name + "': " + e.what());
    }
}

} // namespace detail

inline AudioBuffer synthesize(const SynthesisRequest& req, const BackendDescriptor& backend) {
    const std::string trimmed = detail::trim_ws(req.text);
    if (trimmed.empty()) throw EmptyText("synthesize: text is empty after trimming");
    switch (backend.kind) {
        case BackendDescriptor::Kind::Stub: return detail::stub_synthesize(trimmed, backend.stub);
        case BackendDescriptor::Kind::Http: return detail::http_synthesize(req, backend, trimmed);
    }
    throw ConfigError("unknown backend kind");
}

struct RetryResult {
    AudioBuffer audio;
    int retries = 0;
};

// Retries only transient failures, with a linear backoff schedule.
inline RetryResult synthesize_with_retry(const SynthesisRequest& req,
                                         const BackendDescriptor& backend, int max_retries = 2,
                                         int backoff_ms = 250) {
    for (int attempt = 0;; ++attempt) {
        try {
            return {synthesize(req, backend), attempt};
        } catch (const BackendUnavailable&) {
            if (attempt >= max_retries) throw;
            if (backoff_ms > 0)
                std::this_thread::sleep_for(std::chrono::milliseconds(backoff_ms * (attempt + 1)));
        }
    }
}

} // namespace emocue

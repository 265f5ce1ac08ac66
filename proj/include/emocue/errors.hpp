#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace emocue {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class UnbalancedAsterisk : public Error {
public:
    explicit UnbalancedAsterisk(std::size_t pos)
        : Error("unbalanced asterisk at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

class MalformedWav : public Error {
public:
    using Error::Error;
};

class UnsupportedFormat : public Error {
public:
    using Error::Error;
};

class RateMismatch : public Error {
public:
    using Error::Error;
};

class ZeroVector : public Error {
public:
    using Error::Error;
};

class ManifestEmpty : public Error {
public:
    using Error::Error;
};

class EmptyText : public Error {
public:
    using Error::Error;
};

// Transient backend failure; the only error class the retry wrapper retries.
class BackendUnavailable : public Error {
public:
    using Error::Error;
};

class BadResponse : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace emocue

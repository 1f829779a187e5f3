#ifndef SERNET_ERRORS_HPP
#define SERNET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sernet {

// Error categories map 1:1 onto process exit codes (and onto the C API
// status codes): usage/config -> 1, data -> 2, numeric -> 3.
enum class ErrorKind { Usage = 1, Data = 2, Numeric = 3 };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Invalid flags, malformed config files, inconsistent model settings,
// misuse of the API (e.g. backward called twice on one graph).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(ErrorKind::Usage, msg) {}
};

// Tensor shape violations. These stem from bad layer wiring or bad
// configuration, so they share the usage category.
class ShapeError : public ConfigError {
public:
    explicit ShapeError(const std::string& msg) : ConfigError(msg) {}
};

// Missing or malformed input files, out-of-range labels, empty splits,
// checkpoint/model mismatches.
class DataError : public Error {
public:
    explicit DataError(const std::string& msg) : Error(ErrorKind::Data, msg) {}
};

// Non-finite values during training, gradient-check tolerance breaches.
class NumericError : public Error {
public:
    explicit NumericError(const std::string& msg) : Error(ErrorKind::Numeric, msg) {}
};

} // namespace sernet

#endif

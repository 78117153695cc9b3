#pragma once

#include <stdexcept>
#include <string>

namespace zonorec {

enum class ErrorKind {
    BadInput,
    CapExceeded,
    Domain,
    Precondition,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// CLI exit status for an error kind.
inline int exit_code(ErrorKind k)
{
    switch (k) {
    case ErrorKind::BadInput:
    case ErrorKind::Precondition:
        return 2;
    case ErrorKind::CapExceeded:
        return 3;
    case ErrorKind::Domain:
        return 4;
    case ErrorKind::Internal:
        return 1;
    }
    return 1;
}

struct Report {
    bool ok = true;
    std::string message;

    static Report pass() { return {}; }
    static Report fail(std::string msg) { return {false, std::move(msg)}; }
};

}  // namespace zonorec

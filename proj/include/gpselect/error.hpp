#pragma once

#include <stdexcept>
#include <string>

namespace gpsel {

enum class ErrorKind {
    precondition,   // caller violated an operation's precondition
    parse,          // malformed point-set text or spec file
    io,             // file could not be opened / written
    budget,         // a size, search-node or retry budget was exhausted
    overflow,       // exact integer kernel range exceeded
    certification,  // a selector produced a set that failed re-verification
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, const std::string& what) {
    if (!cond) fail(ErrorKind::precondition, what);
}

}  // namespace gpsel

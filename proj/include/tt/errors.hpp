#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tt {

// Error classes map to CLI exit codes: parse -> 2, domain -> 3, precision -> 4.
enum class ErrClass { parse, domain, precision };

class Error : public std::runtime_error {
public:
    Error(ErrClass cls, std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), cls_(cls), name_(std::move(name)) {}

    ErrClass cls() const { return cls_; }
    const std::string& name() const { return name_; }

private:
    ErrClass cls_;
    std::string name_;
};

[[noreturn]] inline void fail_parse(const std::string& name, const std::string& what) {
    throw Error(ErrClass::parse, name, what);
}

[[noreturn]] inline void fail_domain(const std::string& name, const std::string& what) {
    throw Error(ErrClass::domain, name, what);
}

[[noreturn]] inline void fail_precision(const std::string& name, const std::string& what) {
    throw Error(ErrClass::precision, name, what);
}

} // namespace tt

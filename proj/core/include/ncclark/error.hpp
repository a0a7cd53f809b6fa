#pragma once

#include <stdexcept>
#include <string>

namespace ncclark {

// All library failures derive from Error so callers can catch one type.
// kind() distinguishes contract violations from resource caps and from
// numerically inconclusive situations that a caller may want to surface
// as a soft verdict rather than a crash.
class Error : public std::runtime_error {
public:
    enum class Kind { Domain, Resource, Numeric };

    Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

[[noreturn]] inline void throwDomain(const std::string& msg) { throw Error(Error::Kind::Domain, msg); }
[[noreturn]] inline void throwResource(const std::string& msg) { throw Error(Error::Kind::Resource, msg); }
[[noreturn]] inline void throwNumeric(const std::string& msg) { throw Error(Error::Kind::Numeric, msg); }

inline void require(bool cond, const std::string& msg) {
    if (!cond) throwDomain(msg);
}

} // namespace ncclark

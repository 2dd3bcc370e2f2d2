#pragma once

#include <stdexcept>
#include <string>

namespace rholat {

/// Invalid input: non-coprime moduli, out-of-range weights, bad parity.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Two evaluation routes disagree, or a quantity that must be integral is not.
class ConsistencyError : public std::runtime_error {
public:
    explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& what)
{
    if (!cond)
        throw DomainError(what);
}

} // namespace rholat

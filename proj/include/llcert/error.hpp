#pragma once

#include <stdexcept>
#include <string>

namespace llcert {

// Input, domain or resource failure surfaced to callers. The CLI maps these
// to exit code 2; condition violations are reported in-band, not thrown.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace llcert

#pragma once

#include <stdexcept>
#include <string>

namespace otl {

enum class errc {
    invalid_sequence,
    invalid_config,
    unknown_generator,
    unknown_suite,
    not_in_subgroup,
    depth_too_large,
    backend_disagreement,
    invariant_violation,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::invalid_sequence: return "InvalidSequence";
        case errc::invalid_config: return "InvalidConfig";
        case errc::unknown_generator: return "UnknownGenerator";
        case errc::unknown_suite: return "UnknownSuite";
        case errc::not_in_subgroup: return "NotInSubgroup";
        case errc::depth_too_large: return "DepthTooLarge";
        case errc::backend_disagreement: return "BackendDisagreement";
        case errc::invariant_violation: return "InvariantViolation";
    }
    return "?";
}

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace otl

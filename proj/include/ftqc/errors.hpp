#pragma once

#include <stdexcept>
#include <string>

namespace ftqc {

// Status codes shared with the C API (see ftqc.h). Exceptions carry one of
// these so the boundary translation is a single switch.
enum class status : int {
    ok = 0,
    invalid_argument = 1,
    infeasible = 2,
    retry_divergence = 3,
    unsupported = 4,
    internal = 5,
};

class error : public std::runtime_error {
public:
    error(status s, const std::string& what) : std::runtime_error(what), code_(s) {}
    status code() const { return code_; }

private:
    status code_;
};

struct invalid_argument_error : error {
    explicit invalid_argument_error(const std::string& what) : error(status::invalid_argument, what) {}
};

// A search found no candidate meeting the requested target.
struct infeasible_error : error {
    explicit infeasible_error(const std::string& what) : error(status::infeasible, what) {}
};

// 15*p reached 1 at some distillation round: the retry series diverges.
struct retry_divergence_error : error {
    explicit retry_divergence_error(const std::string& what) : error(status::retry_divergence, what) {}
};

struct unsupported_error : error {
    explicit unsupported_error(const std::string& what) : error(status::unsupported, what) {}
};

struct internal_error : error {
    explicit internal_error(const std::string& what) : error(status::internal, what) {}
};

}  // namespace ftqc

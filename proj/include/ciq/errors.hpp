#pragma once

#include <stdexcept>
#include <string>

namespace ciq {

struct OddDimension : std::invalid_argument {
    explicit OddDimension(const std::string& msg) : std::invalid_argument(msg) {}
};

struct DegenerateForm : std::invalid_argument {
    explicit DegenerateForm(const std::string& msg) : std::invalid_argument(msg) {}
};

struct BadRange : std::invalid_argument {
    explicit BadRange(const std::string& msg) : std::invalid_argument(msg) {}
};

struct BadIndex : std::invalid_argument {
    explicit BadIndex(const std::string& msg) : std::invalid_argument(msg) {}
};

struct ArityMismatch : std::invalid_argument {
    explicit ArityMismatch(const std::string& msg) : std::invalid_argument(msg) {}
};

struct NotTopDegree : std::invalid_argument {
    explicit NotTopDegree(const std::string& msg) : std::invalid_argument(msg) {}
};

struct ParamMismatch : std::invalid_argument {
    explicit ParamMismatch(const std::string& msg) : std::invalid_argument(msg) {}
};

// A projector axiom failed; carries the offending pair of indices.
struct VerificationFailed : std::runtime_error {
    int i, j;
    VerificationFailed(const std::string& msg, int i_, int j_)
        : std::runtime_error(msg), i(i_), j(j_) {}
};

struct NoSolution : std::runtime_error {
    explicit NoSolution(const std::string& msg) : std::runtime_error(msg) {}
};

// A cohomological relation not explained by the presentation.
struct KernelEscape : std::runtime_error {
    explicit KernelEscape(const std::string& msg) : std::runtime_error(msg) {}
};

struct Overflow : std::runtime_error {
    explicit Overflow(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct InconsistentGeometry : std::runtime_error {
    explicit InconsistentGeometry(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ciq

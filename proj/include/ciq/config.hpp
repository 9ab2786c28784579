#pragma once

#include "ciq/model.hpp"

#include <cstdint>
#include <string>

namespace ciq {

struct RunConfig {
    int n = 4;
    int p = 1;
    bool p_auto = false;          // p = middle_betti(n) - 1
    std::string gram = "identity";  // "identity" or "file:PATH"
    int m = 2;
    int codim = 0;
    std::size_t max_monomials = 20000;
    std::uint64_t seed = 1;
    std::string out;  // report path; empty = stdout
};

// Key-value file: one `key value` (or `key = value`) pair per line,
// '#' comments. Keys: n, p ("auto" allowed), gram, m, codim,
// max-monomials, seed, out. Unknown keys are rejected.
void load_config_file(const std::string& path, RunConfig& cfg);

// Resolves p_auto and the gram spec into concrete model parameters.
// A gram file holds p*p row-major rationals ("a/b"), whitespace or
// comma separated, optionally behind "gram" key-value syntax.
ModelParams resolve_params(const RunConfig& cfg);

// Parses a gram payload string ("identity" or p*p rationals).
Mat parse_gram(const std::string& text, int p);

}  // namespace ciq

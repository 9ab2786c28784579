#pragma once

#include "ciq/model.hpp"

#include <json.hpp>

#include <string>

namespace ciq {

using Json = nlohmann::ordered_json;

// FNV-1a over the row-major "a/b"-serialized gram entries; identifies the
// form in reports without embedding the whole matrix.
std::string gram_hash(const Mat& gram);

// Shared report skeleton: {check_name, params{n,p,gram_hash}, status,
// witnesses[]}. Exact rationals are serialized as "num/den" strings.
Json make_report(const std::string& check_name, const ModelParams& params, bool passed);

Json make_report(const std::string& check_name, int n, bool passed);

}  // namespace ciq

#include "ciq/report.hpp"

#include <cstdint>
#include <sstream>

namespace ciq {

std::string gram_hash(const Mat& gram)
{
    std::string bytes;
    for (std::size_t r = 0; r < gram.rows(); ++r)
        for (std::size_t c = 0; c < gram.cols(); ++c) {
            bytes += rational_str(gram.at(r, c));
            bytes += ',';
        }
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

Json make_report(const std::string& check_name, const ModelParams& params, bool passed)
{
    Json rep;
    rep["check_name"] = check_name;
    rep["params"]["n"] = params.n;
    rep["params"]["p"] = params.p;
    rep["params"]["gram_hash"] = gram_hash(params.gram);
    rep["status"] = passed ? "pass" : "fail";
    rep["witnesses"] = Json::array();
    return rep;
}

Json make_report(const std::string& check_name, int n, bool passed)
{
    Json rep;
    rep["check_name"] = check_name;
    rep["params"]["n"] = n;
    rep["status"] = passed ? "pass" : "fail";
    rep["witnesses"] = Json::array();
    return rep;
}

}  // namespace ciq

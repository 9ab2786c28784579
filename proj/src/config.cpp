#include "ciq/config.hpp"

#include "ciq/errors.hpp"
#include "ciq/euler.hpp"

#include <fstream>
#include <sstream>

namespace ciq {

namespace {

std::string strip(const std::string& s)
{
    auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

void load_config_file(const std::string& path, RunConfig& cfg)
{
    std::istringstream in(read_file(path));
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = strip(line);
        if (line.empty())
            continue;
        auto sep = line.find_first_of(" \t=");
        if (sep == std::string::npos)
            throw ParseError("bad config line '" + line + "'");
        std::string key = strip(line.substr(0, sep));
        std::string value = strip(line.substr(sep + 1));
        if (!value.empty() && value.front() == '=')
            value = strip(value.substr(1));
        if (value.empty())
            throw ParseError("missing value for config key '" + key + "'");
        if (key == "n")
            cfg.n = std::stoi(value);
        else if (key == "p") {
            if (value == "auto")
                cfg.p_auto = true;
            else {
                cfg.p_auto = false;
                cfg.p = std::stoi(value);
            }
        }
        else if (key == "gram")
            cfg.gram = value;
        else if (key == "m")
            cfg.m = std::stoi(value);
        else if (key == "codim")
            cfg.codim = std::stoi(value);
        else if (key == "max-monomials")
            cfg.max_monomials = std::stoul(value);
        else if (key == "seed")
            cfg.seed = std::stoull(value);
        else if (key == "out")
            cfg.out = value;
        else
            throw ParseError("unknown config key '" + key + "'");
    }
}

Mat parse_gram(const std::string& text, int p)
{
    std::string body = strip(text);
    if (body == "identity")
        return Mat::identity(p);
    for (char& c : body)
        if (c == ',')
            c = ' ';
    std::istringstream in(body);
    std::string tok;
    std::vector<Rational> entries;
    while (in >> tok) {
        if (tok == "gram" || tok == "=")
            continue;
        entries.push_back(parse_rational(tok));
    }
    if ((int)entries.size() != p * p)
        throw ParseError("gram needs " + std::to_string(p * p) + " entries, got " +
                         std::to_string(entries.size()));
    Mat g(p, p);
    for (int r = 0; r < p; ++r)
        for (int c = 0; c < p; ++c)
            g.at(r, c) = entries[r * p + c];
    return g;
}

ModelParams resolve_params(const RunConfig& cfg)
{
    ModelParams params;
    params.n = cfg.n;
    if (cfg.p_auto) {
        Int b = middle_betti(cfg.n);
        params.p = b.convert_to<int>() - 1;
    }
    else {
        params.p = cfg.p;
    }
    if (cfg.gram == "identity")
        params.gram = Mat::identity(params.p);
    else if (cfg.gram.rfind("file:", 0) == 0)
        params.gram = parse_gram(read_file(cfg.gram.substr(5)), params.p);
    else
        throw ParseError("gram spec must be 'identity' or 'file:PATH'");
    return params;
}

}  // namespace ciq

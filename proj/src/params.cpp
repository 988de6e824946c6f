#include "necgraph/params.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace necgraph {

namespace {

std::vector<long long> parse_fields(std::string_view text, std::size_t n, const char* what) {
    std::string s(text);
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    std::vector<long long> out;
    long long x;
    while (in >> x) out.push_back(x);
    if (out.size() != n || !in.eof())
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(n) +
                                    " comma-separated integers");
    return out;
}

}  // namespace

std::string SrgParams::to_string() const {
    std::ostringstream out;
    out << v << ',' << k << ',' << lambda << ',' << mu;
    return out.str();
}

SrgParams SrgParams::parse(std::string_view text) {
    auto f = parse_fields(text, 4, "SrgParams");
    return SrgParams{f[0], f[1], f[2], f[3]};
}

bool PgParams::nondegenerate() const {
    return s >= 2 && t >= 1 && alpha >= 1 && alpha <= std::min(s, t) + 1;
}

std::string PgParams::to_string() const {
    std::ostringstream out;
    out << s << ',' << t << ',' << alpha;
    return out.str();
}

PgParams PgParams::parse(std::string_view text) {
    auto f = parse_fields(text, 3, "PgParams");
    return PgParams{f[0], f[1], f[2]};
}

}  // namespace necgraph

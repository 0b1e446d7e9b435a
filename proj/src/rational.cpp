#include "mldsurf/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace mldsurf {

std::string to_string(const Rat& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::optional<Rat> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    auto parse_int = [](const std::string& t) -> std::optional<long long> {
        if (t.empty()) return std::nullopt;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return std::nullopt;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return std::nullopt;
        return std::strtoll(t.c_str(), nullptr, 10);
    };
    if (slash == std::string::npos) {
        auto p = parse_int(s);
        if (!p) return std::nullopt;
        return Rat(*p);
    }
    auto p = parse_int(s.substr(0, slash));
    auto q = parse_int(s.substr(slash + 1));
    if (!p || !q || *q == 0) return std::nullopt;
    return Rat(*p, *q);
}

}  // namespace mldsurf

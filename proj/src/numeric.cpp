#include "hyperkirch/numeric.hpp"

#include <cctype>

namespace hyperkirch {

namespace {

bool looks_like_integer(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Integer parse_integer(const std::string& text) {
    if (!looks_like_integer(text)) throw std::invalid_argument("not an integer: '" + text + "'");
    return Integer(text[0] == '+' ? text.substr(1) : text, 10);
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t prime_power_base(std::uint64_t q) {
    if (q < 2) return 0;
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    std::uint64_t rest = q;
    while (rest % p == 0) rest /= p;
    return rest == 1 ? p : 0;
}

}  // namespace hyperkirch

#include "trusslab/rational.hpp"

#include <stdexcept>

namespace trusslab {

Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

std::string rational_to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

Outcome<Rational> parse_rational(std::string_view s) {
    using Out = Outcome<Rational>;
    auto is_int = [](std::string_view v) {
        if (v.empty()) return false;
        std::size_t i = v[0] == '-' ? 1 : 0;
        if (i == v.size()) return false;
        for (; i < v.size(); ++i)
            if (v[i] < '0' || v[i] > '9') return false;
        return true;
    };
    std::size_t slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        return Out::failure("bad_rational", {}, "cannot parse rational: " + std::string(s));
    BigInt d{std::string(den)};
    if (d == 0) return Out::failure("bad_rational", {}, "zero denominator: " + std::string(s));
    return Out::success(make_rational(BigInt{std::string(num)}, std::move(d)));
}

}  // namespace trusslab

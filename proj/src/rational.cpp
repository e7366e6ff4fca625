#include "emvkit/rational.hpp"

#include "emvkit/error.hpp"

namespace emvkit {

std::string rat_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

Rat rat_parse(std::string_view text) {
    auto fail = [&] { throw Error("BadRational", "malformed rational '" + std::string(text) + "'"); };
    if (text.empty()) fail();
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rat(Int(std::string(text)));
        }
        Int num{std::string(text.substr(0, slash))};
        Int den{std::string(text.substr(slash + 1))};
        if (den == 0) fail();
        if (den < 0) { num = -num; den = -den; }
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        fail();
    }
    return Rat();  // unreachable
}

Rat rat_pow(const Rat& r, unsigned long e) {
    Rat acc(1);
    Rat base = r;
    while (e > 0) {
        if (e & 1UL) acc *= base;
        base *= base;
        e >>= 1UL;
    }
    return acc;
}

}  // namespace emvkit

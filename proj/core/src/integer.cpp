#include "collatz/integer.hpp"

#include <stdexcept>

namespace collatz {

Int floor_mod(const Int& v, const Int& m) {
    if (m <= 0) throw std::invalid_argument("floor_mod: modulus must be positive");
    Int r = v % m;  // truncating remainder, sign follows v
    if (r < 0) r += m;
    return r;
}

Rat make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    return Rat(num) / Rat(den);  // division normalizes sign and reduces
}

Rat pow3_over_pow2(std::uint64_t threes, std::uint64_t twos) {
    Int num = boost::multiprecision::pow(Int(3), static_cast<unsigned>(threes));
    Int den = Int(1) << twos;
    return make_rational(num, den);
}

std::string rational_str(const Rat& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

Int parse_int(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_int: empty string");
    std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    if (i == text.size()) throw std::invalid_argument("parse_int: missing digits");
    for (; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("parse_int: invalid character in \"" + text + "\"");
    // cpp_int's own parser rejects an explicit leading '+'
    return Int(text[0] == '+' ? text.substr(1) : text);
}

Rat parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    return make_rational(num, den);
}

}  // namespace collatz

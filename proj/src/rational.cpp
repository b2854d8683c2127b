#include "acbm/rational.hpp"

#include <cctype>

namespace acbm {

Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }

Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

std::string to_string(const Rational& r) { return r.str(); }

namespace {

// Consumes [+-]?digits from text[pos...]; returns false on empty digit runs.
// GMP rejects a leading '+', so the sign is applied separately.
bool scan_integer(std::string_view text, std::size_t& pos, Integer& out) {
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    std::size_t digits_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits_begin) return false;
    out = Integer(std::string(text.substr(digits_begin, pos - digits_begin)));
    if (negative) out = -out;
    return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    std::size_t pos = 0;
    Integer num;
    if (!scan_integer(text, pos, num)) return std::nullopt;
    Integer den(1);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        if (!scan_integer(text, pos, den)) return std::nullopt;
        if (den == 0) return std::nullopt;
    }
    if (pos != text.size()) return std::nullopt;
    // Construction from two integers canonicalizes (sign to the numerator,
    // common factors removed).
    return Rational(num) / Rational(den);
}

}  // namespace acbm

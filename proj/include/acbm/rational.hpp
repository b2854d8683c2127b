#ifndef ACBM_RATIONAL_HPP
#define ACBM_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <optional>
#include <string>
#include <string_view>

namespace acbm {

// Exact rational scalar with arbitrary-precision integer parts.
// GMP keeps every value canonical (lowest terms, positive denominator), so
// equality is plain comparison and the serialized form of a value is unique.
// Expression templates are switched off: arithmetic returns plain values.
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using Integer =
    boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

Integer numerator(const Rational& r);
Integer denominator(const Rational& r);

// Canonical text form: "p/q", with "/q" dropped when q = 1.
std::string to_string(const Rational& r);

// Strict reader for the same grammar: [+-]?digits optionally followed by
// "/" [+-]?digits. A zero denominator or any stray character yields nullopt;
// callers attach position info and raise ParseError themselves.
std::optional<Rational> parse_rational(std::string_view text);

}  // namespace acbm

#endif

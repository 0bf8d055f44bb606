#include "rft/rational.hpp"

#include <boost/multiprecision/integer.hpp>

namespace rft {

Rational parse_rational(const std::string& text) {
    auto bad = [&] { return ParseError("not a rational: '" + text + "'"); };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw bad();
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

std::string to_string(const Rational& value) {
    const Integer num = boost::multiprecision::numerator(value);
    const Integer den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational pow_int(const Rational& base, long exponent) {
    if (exponent == 0) return Rational(1);
    if (base == 0 && exponent < 0)
        throw std::domain_error("pow_int: zero base with negative exponent");
    Rational factor = exponent > 0 ? base : Rational(1) / base;
    unsigned long n = exponent > 0 ? static_cast<unsigned long>(exponent)
                                   : static_cast<unsigned long>(-exponent);
    Rational result(1);
    while (n > 0) {
        if (n & 1) result *= factor;
        factor *= factor;
        n >>= 1;
    }
    return result;
}

namespace {

std::optional<Integer> isqrt_exact(const Integer& value) {
    if (value < 0) return std::nullopt;
    Integer root = boost::multiprecision::sqrt(value);
    if (root * root != value) return std::nullopt;
    return root;
}

}  // namespace

std::optional<Rational> sqrt_exact(const Rational& value) {
    if (value < 0) return std::nullopt;
    auto num = isqrt_exact(boost::multiprecision::numerator(value));
    auto den = isqrt_exact(boost::multiprecision::denominator(value));
    if (!num || !den) return std::nullopt;
    return Rational(*num, *den);
}

}  // namespace rft

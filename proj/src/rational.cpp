#include "aklt/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace aklt {

BigInt factorial_big(unsigned n) {
    BigInt f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

Rational rational_pow(const Rational& base, unsigned long n) {
    Rational result = 1;
    Rational b = base;
    while (n > 0) {
        if (n & 1UL) result *= b;
        b *= b;
        n >>= 1UL;
    }
    return result;
}

BigInt floor_rational(const Rational& q) {
    BigInt num = numerator(q);
    BigInt den = denominator(q);
    BigInt quot = num / den;  // truncates toward zero
    if (num < 0 && quot * den != num) --quot;
    return quot;
}

double to_double(const Rational& q) {
    if (q == 0) return 0.0;
    BigInt num = numerator(q);
    BigInt den = denominator(q);
    double sign = 1.0;
    if (num < 0) {
        sign = -1.0;
        num = -num;
    }
    // Scale so the integer quotient carries ~64 significant bits, then
    // place the binary point back with ldexp.
    long shift = 64L - (static_cast<long>(msb(num)) - static_cast<long>(msb(den)));
    BigInt quot = shift >= 0 ? BigInt((num << shift) / den) : BigInt(num / (den << (-shift)));
    double mant = quot.convert_to<double>();
    if (shift < -1048576 || shift > 1048576) throw std::overflow_error("rational exponent out of double range");
    return std::ldexp(sign * mant, static_cast<int>(-shift));
}

std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace aklt

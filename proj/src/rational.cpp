#include "qtwist/rational.hpp"

#include <stdexcept>

namespace qtwist {

Rational rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational: '" + text + "'");
    if (r.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
    r.canonicalize();
    return r;
}

Rational factorial(unsigned k) {
    Rational acc = 1;
    for (unsigned i = 2; i <= k; ++i) acc *= static_cast<long>(i);
    return acc;
}

Rational gen_binomial(const Rational& r, unsigned k) {
    Rational acc = 1;
    for (unsigned j = 0; j < k; ++j) acc *= r - static_cast<long>(j);
    return acc / factorial(k);
}

std::string to_string(const Rational& r) {
    return r.get_str();
}

}  // namespace qtwist

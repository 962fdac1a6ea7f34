#include "qtwist/laurent.hpp"

#include <sstream>

namespace qtwist {

bool LaurentQ::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

void LaurentQ::add(long exponent, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentQ LaurentQ::operator-() const {
    LaurentQ r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& other) {
    for (const auto& [e, c] : other.terms_) add(e, c);
    return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& other) {
    for (const auto& [e, c] : other.terms_) add(e, -c);
    return *this;
}

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
    LaurentQ r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add(ea + eb, ca * cb);
    return r;
}

std::optional<LaurentQ> LaurentQ::try_inverse() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [e, c] = *terms_.begin();
    LaurentQ r;
    r.add(-e, 1 / c);
    return r;
}

std::optional<Rational> LaurentQ::as_rational() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first == 0) return terms_.begin()->second;
    return std::nullopt;
}

namespace {

// One monomial without sign: "1", "3/2", "q", "q^-2", "3/2*q^3".
std::string abs_term(long exponent, const Rational& coeff) {
    Rational a = abs(coeff);
    std::ostringstream out;
    if (exponent == 0) return a.get_str();
    if (a != 1) out << a.get_str() << "*";
    out << "q";
    if (exponent != 1) out << "^" << exponent;
    return out.str();
}

}  // namespace

std::string LaurentQ::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        out << abs_term(e, c);
    }
    return out.str();
}

std::string to_string(const LaurentQ& p) { return p.to_string(); }

}  // namespace qtwist

#pragma once

#include <map>
#include <optional>
#include <string>

#include "qtwist/rational.hpp"

namespace qtwist {

/// Sparse Laurent polynomial in the formal parameter q over the rationals,
/// the scalar ring of the whole engine. Stored zero coefficients are never
/// kept, so map equality decides ring equality.
class LaurentQ {
public:
    LaurentQ() = default;
    LaurentQ(long value) { add(0, Rational(value)); }  // NOLINT: implicit by design
    LaurentQ(const Rational& value) { add(0, value); } // NOLINT

    /// q^k.
    static LaurentQ q_pow(long k) {
        LaurentQ r;
        r.add(k, 1);
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    /// Adds c*q^k, dropping the entry if it cancels.
    void add(long exponent, const Rational& coeff);

    const std::map<long, Rational>& terms() const { return terms_; }

    LaurentQ operator-() const;
    LaurentQ& operator+=(const LaurentQ& other);
    LaurentQ& operator-=(const LaurentQ& other);

    friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
    friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
    friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);

    bool operator==(const LaurentQ& other) const { return terms_ == other.terms_; }
    bool operator!=(const LaurentQ& other) const { return !(*this == other); }

    /// Inverse when the polynomial is a unit of Q[q,q^-1], i.e. a single
    /// nonzero term c*q^k. Otherwise nullopt.
    std::optional<LaurentQ> try_inverse() const;

    /// If the polynomial is constant in q, returns the rational value.
    std::optional<Rational> as_rational() const;

    /// Canonical rendering, terms by ascending exponent: "-1 + q^2".
    std::string to_string() const;

private:
    std::map<long, Rational> terms_;
};

std::string to_string(const LaurentQ& p);

}  // namespace qtwist

#pragma once

#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qtwist/liealg.hpp"

namespace qtwist {

/// PBW monomial: a product of generators, non-decreasing in the fixed
/// generator order. The empty sequence is the unit. Construction from an
/// unsorted word is rejected; use straighten() instead.
class PBWMono {
public:
    PBWMono() = default;
    explicit PBWMono(std::vector<GenId> factors);
    static PBWMono gen(const GenId& id) { return PBWMono(std::vector<GenId>{id}); }

    const std::vector<GenId>& factors() const { return factors_; }
    std::size_t size() const { return factors_.size(); }
    bool is_unit() const { return factors_.empty(); }

    /// Short-lex order: by length, then lexicographically by factor.
    bool operator<(const PBWMono& other) const;
    bool operator==(const PBWMono&) const = default;

    std::string to_string() const;  // "e[0,0]*f[1,0]", "1" for the unit

private:
    std::vector<GenId> factors_;
};

/// Element of the enveloping algebra in PBW normal form. The canonical map
/// (no zero coefficients, sorted monomials) is a complete invariant, so
/// operator== decides algebra equality.
class UElt {
public:
    UElt() = default;

    static UElt zero() { return {}; }
    static UElt one() { return scalar(LaurentQ(1)); }
    static UElt scalar(const LaurentQ& c);
    static UElt gen(const GenId& id, const LaurentQ& coeff = LaurentQ(1));
    static UElt mono(const PBWMono& m, const LaurentQ& coeff = LaurentQ(1));
    static UElt from_lie(const LieElt& x);

    bool is_zero() const { return terms_.empty(); }
    const std::map<PBWMono, LaurentQ>& terms() const { return terms_; }
    void add(const PBWMono& mono, const LaurentQ& coeff);

    /// Coefficient of the empty monomial (the counit of the undeformed
    /// Hopf structure).
    LaurentQ constant_term() const;

    /// If the element is c*1, returns c.
    std::optional<LaurentQ> as_scalar() const;

    /// True if any monomial contains d1 or d2.
    bool uses_derivations() const;

    UElt operator-() const;
    UElt& operator+=(const UElt& other);
    UElt& operator-=(const UElt& other);
    friend UElt operator+(UElt a, const UElt& b) { return a += b; }
    friend UElt operator-(UElt a, const UElt& b) { return a -= b; }
    friend UElt operator*(const LaurentQ& c, const UElt& x);
    friend UElt operator*(const UElt& a, const UElt& b);  // u_mul

    bool operator==(const UElt&) const = default;

    std::string to_string() const;

private:
    std::map<PBWMono, LaurentQ> terms_;
};

/// PBW normal form of coeff * (word of generators), rewriting out-of-order
/// adjacent pairs xy -> yx + [x,y] until sorted.
UElt straighten(std::span<const GenId> word, const LaurentQ& coeff);
UElt straighten(std::initializer_list<GenId> word, const LaurentQ& coeff = LaurentQ(1));

UElt u_pow(const UElt& base, unsigned k);

/// Counit of the undeformed Hopf structure.
LaurentQ counit0(const UElt& x);

/// Antipode of the undeformed Hopf structure: the anti-automorphism with
/// S0(L) = -L on generators.
UElt antipode0(const UElt& x);

/// The algebra automorphism extending the involution tau.
UElt tau_u(const UElt& x);

/// Rising factorial (x+a)(x+a+1)...(x+a+r-1); r = 0 gives 1.
UElt rising(const UElt& base, const Rational& a, unsigned r);
/// Falling factorial (x+a)(x+a-1)...(x+a-r+1); r = 0 gives 1.
UElt falling(const UElt& base, const Rational& a, unsigned r);

}  // namespace qtwist

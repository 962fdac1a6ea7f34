#pragma once

#include <optional>

#include "qtwist/series.hpp"

namespace qtwist {

/// The six deformations, tagged by the ladder element E of the twist:
///   G:  T = x1 d1 + x2 d2, E = g_n        E:  same T, E = e_n
///   D:  T = d/2,           E = e_n        H:  T = x1 d1 + x2 d2, E = h_n
///   F:  T = x1 d1 + x2 d2, E = f_n        DF: T = -d/2,          E = f_n
/// DF is the involution image of D; the sign on T is forced by [T,E] = E.
enum class Case { G, E, D, H, F, DF };

std::string case_name(Case c);                    // "g", "e", "d", "h", "f", "df"
std::optional<Case> case_from_name(const std::string& name);
bool case_uses_x(Case c);                         // G, E, H, F
Case tau_image(Case c);                           // G<->H, E<->F, D<->DF

/// A validated choice of one deformation: the pair (T, E), the truncation
/// order, and the parameters they came from. Construction checks
/// x1 n1 + x2 n2 = 1 where applicable and always re-derives [T, E] = E
/// through the bracket table.
class TwistContext {
public:
    static TwistContext make(Case c, Deg n, const Rational& x1, const Rational& x2, int order);
    static TwistContext make(Case c, Deg n, int order);  // D and DF only

    /// Parses "case=g n=1,1 x=1,0 order=4" (x optional for d/df).
    static TwistContext parse(const std::string& spec);

    Case case_tag() const { return case_; }
    Deg n() const { return n_; }
    const Rational& x1() const { return x1_; }
    const Rational& x2() const { return x2_; }
    int order() const { return order_; }
    const UElt& T() const { return T_; }
    const GenId& E_gen() const { return E_gen_; }
    const UElt& E() const { return E_; }

    /// The scalar w with [T, x] = w x.
    Rational weight(const GenId& x) const;
    Rational weight(GenKind kind, Deg deg) const;

    /// Context with the same parameters for the involution-image case.
    TwistContext tau_context() const;

    std::string to_string() const;

private:
    TwistContext() = default;

    Case case_ = Case::G;
    Deg n_{};
    Rational x1_, x2_;
    int order_ = 4;
    UElt T_, E_;
    GenId E_gen_{};
};

/// The twisting element with shifted first leg,
/// sum_i (-1)^i/i! (T+c)(T+c-1)...(T+c-i+1) (x) E^i t^i; c = 0 is the twist.
T2Series twist_element(const TwistContext& ctx, const Rational& c = 0);

/// Its inverse family, sum_i 1/i! (T+c)(T+c+1)...(T+c+i-1) (x) E^i t^i.
T2Series inverse_twist_element(const TwistContext& ctx, const Rational& c = 0);

/// u = mu(Id (x) S0) applied to the twist, and its inverse
/// mu(S0 (x) Id) applied to the inverse twist.
USeries u_element(const TwistContext& ctx);
USeries u_inverse_element(const TwistContext& ctx);

/// Closed forms of the one-legged families: sum_i 1/i! T_c^{[i]} E^i t^i and
/// sum_i (-1)^i/i! T_{-c}^{[i]} E^i t^i.
USeries u_family_closed(const TwistContext& ctx, const Rational& c);
USeries u_inverse_family_closed(const TwistContext& ctx, const Rational& c);

/// mu applied after the antipode on one leg, coefficientwise.
USeries mu_id_s0(const T2Series& s);
USeries mu_s0_id(const T2Series& s);

/// Caches the twist data and the per-monomial conjugations for one context.
class TwistEngine {
public:
    explicit TwistEngine(TwistContext ctx);

    const TwistContext& ctx() const { return ctx_; }
    int order() const { return ctx_.order(); }
    const T2Series& twist() const { return twist_; }
    const T2Series& twist_inv() const { return twist_inv_; }
    const USeries& u() const { return u_; }
    const USeries& u_inv() const { return u_inv_; }

    /// Twisted coproduct by conjugation: twist * delta0(x) * twist_inv.
    T2Series delta(const UElt& x) const;
    /// Twisted antipode by conjugation: u * S0(x) * u_inv.
    USeries antipode(const UElt& x) const;

    /// Twisted coproduct applied inside one leg of a tensor series
    /// (the building block of the coassociativity check).
    T3Series delta_on_leg(const T2Series& s, std::size_t leg) const;
    /// mu((S (x) Id)(s)) for leg 0, mu((Id (x) S)(s)) for leg 1.
    USeries antipode_then_mul(const T2Series& s, std::size_t leg) const;

private:
    const T2Series& delta_mono(const PBWMono& m) const;
    const USeries& antipode_mono(const PBWMono& m) const;

    TwistContext ctx_;
    T2Series twist_, twist_inv_;
    USeries u_, u_inv_;
    mutable std::map<PBWMono, T2Series> delta_cache_;
    mutable std::map<PBWMono, USeries> antipode_cache_;
};

T2Series twisted_delta(const TwistContext& ctx, const UElt& x);
USeries twisted_antipode(const TwistContext& ctx, const UElt& x);

struct CocycleReport {
    bool pass = true;
    int first_order = -1;    // first t-order that differs, when failing
    std::string detail;      // differing term, when failing
};

/// The cocycle identity in the triple tensor, for the context's twist.
CocycleReport check_cocycle_identity(const TwistContext& ctx);
/// Both counit conditions on the twist.
CocycleReport check_counit_conditions(const TwistContext& ctx);
/// Both of the above; the full Drinfel'd-twist condition.
CocycleReport check_cocycle(const TwistContext& ctx);

struct HopfReport {
    bool pass = true;
    int checked = 0;
    std::vector<std::string> failures;
    std::map<std::string, int> failure_counts;  // axiom tag -> count
};

/// Verifies the Hopf-algebra axioms of the twisted structure on the given
/// samples: coassociativity, counit, both antipode identities per sample;
/// coproduct/counit multiplicativity and the antipode anti-homomorphism law
/// on all ordered sample pairs.
HopfReport check_hopf(const TwistEngine& eng, const std::vector<UElt>& samples,
                      bool pair_checks = true);

/// A generator whose twisted coproduct is not flip-invariant, if any.
std::optional<GenId> noncocommutative_witness(const TwistEngine& eng,
                                              const std::vector<GenId>& candidates);

}  // namespace qtwist

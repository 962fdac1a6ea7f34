#pragma once

#include "qtwist/twist.hpp"

namespace qtwist {

/// Coefficient tables attached to the stated coproduct/antipode formulas.
/// gamma drives the g/e/d ladder cases, eta the mirrored h/f ones; they are
/// exchanged by swapping e<->f and g<->h in the family index.
LaurentQ gamma_coeff(GenKind y, unsigned i, Deg m, Deg n);
LaurentQ eta_coeff(GenKind y, unsigned i, Deg m, Deg n);

/// Coefficient of the single t-linear correction term (alpha for the e_n
/// ladder, beta for the f_n one). Defined for y in {e, g, h} resp. {f, g, h}.
LaurentQ alpha_coeff(GenKind y, Deg m, Deg n);
LaurentQ beta_coeff(GenKind y, Deg m, Deg n);

/// Coefficient of the t^2 term of the opposite root-vector image,
/// q^{n2 m1 + n1 m2 + n1 n2}.
LaurentQ quadratic_coeff(Deg m, Deg n);

/// Stated closed forms of the deformed coproduct and antipode for one
/// generator, truncated at the context order. These transcribe the formulas
/// as printed; compare() adjudicates them against the conjugation oracle.
T2Series cf_delta(const TwistContext& ctx, const GenId& x);
USeries cf_antipode(const TwistContext& ctx, const GenId& x);

/// Outcome of one closed-form-vs-oracle comparison. A mismatch is a
/// paper-discrepancy finding; it carries both differing coefficients, the
/// oracle value being the corrected one.
struct CompareReport {
    Case case_tag{};
    GenId generator{};
    Deg n{};
    int order = 0;
    std::string map;  // "delta" or "antipode"
    bool equal = true;
    int first_mismatch_order = -1;
    std::string lhs;  // closed form at the first differing order
    std::string rhs;  // oracle value at the first differing order

    std::string to_json() const;
};

/// Compares cf_delta/cf_antipode with the conjugation oracle for one
/// generator; returns one report per map.
std::vector<CompareReport> compare(const TwistEngine& eng, const GenId& x);

/// Checks that the corollary-side closed forms are the involution transport
/// of the theorem-side ones:
///   cf_delta(cor, x)    = (tau (x) tau) cf_delta(thm, tau x)
///   cf_antipode(cor, x) = tau cf_antipode(thm, tau x)
/// The two contexts must be involution images of each other.
std::vector<CompareReport> corollary_transport_check(const TwistContext& thm,
                                                     const TwistContext& cor,
                                                     const GenId& x);

}  // namespace qtwist

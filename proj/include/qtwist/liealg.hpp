#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "qtwist/laurent.hpp"

namespace qtwist {

/// Z^2 degree of a graded generator.
struct Deg {
    int m1 = 0;
    int m2 = 0;

    friend Deg operator+(Deg a, Deg b) { return {a.m1 + b.m1, a.m2 + b.m2}; }
    friend Deg operator-(Deg a, Deg b) { return {a.m1 - b.m1, a.m2 - b.m2}; }
    Deg operator-() const { return {-m1, -m2}; }
    friend Deg operator*(int k, Deg d) { return {k * d.m1, k * d.m2}; }
    bool is_zero() const { return m1 == 0 && m2 == 0; }
    auto operator<=>(const Deg&) const = default;
};

/// Generator kinds, declared in the fixed PBW order:
/// d1 < d2 < d < e < f < g < h, ties broken by degree.
enum class GenKind : std::uint8_t { D1, D2, D, E, F, G, H };

bool is_graded_family(GenKind k);  // e, f, g, h
char kind_letter(GenKind k);

/// One basis generator of the Lie algebra. The degree is (0,0) for d, d1, d2.
/// g and h of degree (0,0) do not exist (they denote zero), so the factories
/// reject them.
struct GenId {
    GenKind kind = GenKind::D;
    Deg deg{};

    static GenId e(int m1, int m2) { return make(GenKind::E, {m1, m2}); }
    static GenId f(int m1, int m2) { return make(GenKind::F, {m1, m2}); }
    static GenId g(int m1, int m2) { return make(GenKind::G, {m1, m2}); }
    static GenId h(int m1, int m2) { return make(GenKind::H, {m1, m2}); }
    static GenId d() { return {GenKind::D, {}}; }
    static GenId d1() { return {GenKind::D1, {}}; }
    static GenId d2() { return {GenKind::D2, {}}; }
    static GenId make(GenKind kind, Deg deg);
    static GenId make(GenKind kind, int m1, int m2) { return make(kind, Deg{m1, m2}); }

    auto operator<=>(const GenId&) const = default;

    /// "e[1,2]", "d", "d1", ...
    std::string to_string() const;
};

/// Finite linear combination of generators over the Laurent scalars.
class LieElt {
public:
    LieElt() = default;
    static LieElt gen(GenId id, LaurentQ coeff = LaurentQ(1));

    bool is_zero() const { return terms_.empty(); }
    void add(const GenId& id, const LaurentQ& coeff);
    const std::map<GenId, LaurentQ>& terms() const { return terms_; }

    LieElt operator-() const;
    LieElt& operator+=(const LieElt& other);
    friend LieElt operator+(LieElt a, const LieElt& b) { return a += b; }
    friend LieElt operator-(LieElt a, const LieElt& b);
    friend LieElt operator*(const LaurentQ& c, const LieElt& x);

    bool operator==(const LieElt&) const = default;

    std::string to_string() const;

private:
    std::map<GenId, LaurentQ> terms_;
};

/// Lie bracket of two basis generators, per the structure-constant table.
/// Total: any g/h of degree (0,0) produced by the table is treated as zero.
LieElt bracket(const GenId& a, const GenId& b);

/// Bilinear extension of the generator bracket.
LieElt bracket_lin(const LieElt& x, const LieElt& y);

/// The involution: e_m <-> f_m, g_k <-> h_k, d -> -d, d1 and d2 fixed.
/// Returned as (image generator, sign).
std::pair<GenId, int> tau_gen(const GenId& id);
LieElt tau(const LieElt& x);

/// Structure-constant q-exponent sites, for mutation testing only. Each site
/// names one exponent in the bracket table; an active mutation adds a delta
/// to that exponent, which must break at least one verification suite.
enum class QExpSite : std::uint8_t {
    GE,     // [g_k, e_m] = q^{k2 m1} e
    HE,     // [h_k, e_m] = -q^{k1 m2} e
    HF,     // [h_k, f_m] = q^{k2 m1} f
    GF,     // [g_k, f_m] = -q^{k1 m2} f
    EF_G,   // [e_m, f_m'] : q^{m2 m'1} g
    EF_H,   // [e_m, f_m'] : -q^{m'2 m1} h
    EF_D,   // [e_m, f_-m] : q^{m2 m'1} d
    GG_L,   // [g_k, g_k'] : q^{k2 k'1}
    GG_R,   // [g_k, g_k'] : -q^{k'2 k1}
    HH_L,   // [h_k, h_k'] : q^{k2 k'1}
    HH_R,   // [h_k, h_k'] : -q^{k'2 k1}
};

struct QExpMutation {
    QExpSite site;
    long delta = 1;
};

/// Installs or clears the test-only structure-constant mutation.
void set_structure_mutation(std::optional<QExpMutation> mutation);

}  // namespace qtwist

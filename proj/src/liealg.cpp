#include "qtwist/liealg.hpp"

#include <sstream>
#include <stdexcept>

namespace qtwist {

namespace {

std::optional<QExpMutation> g_mutation;

long qexp(QExpSite site, long exponent) {
    if (g_mutation && g_mutation->site == site) return exponent + g_mutation->delta;
    return exponent;
}

}  // namespace

void set_structure_mutation(std::optional<QExpMutation> mutation) { g_mutation = mutation; }

bool is_graded_family(GenKind k) {
    return k == GenKind::E || k == GenKind::F || k == GenKind::G || k == GenKind::H;
}

char kind_letter(GenKind k) {
    switch (k) {
        case GenKind::E: return 'e';
        case GenKind::F: return 'f';
        case GenKind::G: return 'g';
        case GenKind::H: return 'h';
        case GenKind::D: return 'd';
        case GenKind::D1: return '1';
        case GenKind::D2: return '2';
    }
    return '?';
}

GenId GenId::make(GenKind kind, Deg deg) {
    if (!is_graded_family(kind)) {
        if (!deg.is_zero()) throw std::invalid_argument("d, d1, d2 carry degree (0,0)");
        return {kind, {}};
    }
    if ((kind == GenKind::G || kind == GenKind::H) && deg.is_zero())
        throw std::invalid_argument("g and h of degree (0,0) do not exist");
    return {kind, deg};
}

std::string GenId::to_string() const {
    switch (kind) {
        case GenKind::D: return "d";
        case GenKind::D1: return "d1";
        case GenKind::D2: return "d2";
        default: break;
    }
    std::ostringstream out;
    out << kind_letter(kind) << "[" << deg.m1 << "," << deg.m2 << "]";
    return out.str();
}

LieElt LieElt::gen(GenId id, LaurentQ coeff) {
    LieElt x;
    x.add(id, coeff);
    return x;
}

void LieElt::add(const GenId& id, const LaurentQ& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(id, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LieElt LieElt::operator-() const {
    LieElt r;
    for (const auto& [id, c] : terms_) r.terms_.emplace(id, -c);
    return r;
}

LieElt& LieElt::operator+=(const LieElt& other) {
    for (const auto& [id, c] : other.terms_) add(id, c);
    return *this;
}

LieElt operator-(LieElt a, const LieElt& b) {
    for (const auto& [id, c] : b.terms()) a.add(id, -c);
    return a;
}

LieElt operator*(const LaurentQ& c, const LieElt& x) {
    LieElt r;
    for (const auto& [id, xc] : x.terms()) r.add(id, c * xc);
    return r;
}

std::string LieElt::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [id, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        if (c.is_one())
            out << id.to_string();
        else
            out << "(" << c.to_string() << ")*" << id.to_string();
    }
    return out.str();
}

namespace {

// Adds c * y_deg to the result, applying the convention that g/h of degree
// (0,0) denote zero.
void add_conventional(LieElt& out, GenKind kind, Deg deg, const LaurentQ& coeff) {
    if ((kind == GenKind::G || kind == GenKind::H) && deg.is_zero()) return;
    out.add(GenId::make(kind, deg), coeff);
}

LaurentQ q_to(long e) { return LaurentQ::q_pow(e); }

// The bracket table in the orientation of the defining relations; the public
// bracket() dispatches here, negating when the arguments arrive flipped.
LieElt bracket_table(const GenId& a, const GenId& b) {
    using K = GenKind;
    LieElt r;

    // degree derivations d1, d2 act by the grading
    if (a.kind == K::D1) return LieElt::gen(b, LaurentQ(b.deg.m1));
    if (a.kind == K::D2) return LieElt::gen(b, LaurentQ(b.deg.m2));

    if (a.kind == K::D) {
        if (b.kind == K::E) return LieElt::gen(b, LaurentQ(2));
        if (b.kind == K::F) return LieElt::gen(b, LaurentQ(-2));
        return r;  // [d, g] = [d, h] = [d, d] = 0
    }

    const Deg m = a.deg, n = b.deg;
    switch (a.kind) {
        case K::E:
            switch (b.kind) {
                case K::E: return r;
                case K::F: {
                    // [e_m, f_m'] = q^{m2 m'1} g - q^{m'2 m1} h, or q^{m2 m'1} d
                    if ((m + n).is_zero()) {
                        r.add(GenId::d(), q_to(qexp(QExpSite::EF_D, (long)m.m2 * n.m1)));
                    } else {
                        add_conventional(r, K::G, m + n, q_to(qexp(QExpSite::EF_G, (long)m.m2 * n.m1)));
                        add_conventional(r, K::H, m + n, -q_to(qexp(QExpSite::EF_H, (long)n.m2 * m.m1)));
                    }
                    return r;
                }
                default: break;
            }
            break;
        case K::G:
            switch (b.kind) {
                case K::E:
                    return LieElt::gen(GenId::e(m.m1 + n.m1, m.m2 + n.m2),
                                       q_to(qexp(QExpSite::GE, (long)m.m2 * n.m1)));
                case K::F:
                    return LieElt::gen(GenId::f(m.m1 + n.m1, m.m2 + n.m2),
                                       -q_to(qexp(QExpSite::GF, (long)m.m1 * n.m2)));
                case K::G: {
                    if ((m + n).is_zero()) return r;
                    add_conventional(r, K::G, m + n, q_to(qexp(QExpSite::GG_L, (long)m.m2 * n.m1)));
                    add_conventional(r, K::G, m + n, -q_to(qexp(QExpSite::GG_R, (long)n.m2 * m.m1)));
                    return r;
                }
                case K::H: return r;
                default: break;
            }
            break;
        case K::H:
            switch (b.kind) {
                case K::E:
                    return LieElt::gen(GenId::e(m.m1 + n.m1, m.m2 + n.m2),
                                       -q_to(qexp(QExpSite::HE, (long)m.m1 * n.m2)));
                case K::F:
                    return LieElt::gen(GenId::f(m.m1 + n.m1, m.m2 + n.m2),
                                       q_to(qexp(QExpSite::HF, (long)m.m2 * n.m1)));
                case K::H: {
                    if ((m + n).is_zero()) return r;
                    add_conventional(r, K::H, m + n, q_to(qexp(QExpSite::HH_L, (long)m.m2 * n.m1)));
                    add_conventional(r, K::H, m + n, -q_to(qexp(QExpSite::HH_R, (long)n.m2 * m.m1)));
                    return r;
                }
                default: break;
            }
            break;
        case K::F:
            if (b.kind == K::F) return r;
            break;
        default: break;
    }
    throw std::logic_error("bracket_table: unhandled orientation");
}

// True when the table above covers (a.kind, b.kind) in this orientation.
bool table_oriented(GenKind a, GenKind b) {
    using K = GenKind;
    if (a == K::D1 || a == K::D2) return true;
    if (b == K::D1 || b == K::D2) return false;
    if (a == K::D) return true;
    if (b == K::D) return false;
    if (a == K::E) return b == K::E || b == K::F;
    if (a == K::F) return b == K::F;
    if (a == K::G) return true;                  // covers e, f, g, h
    return b == K::E || b == K::F || b == K::H;  // a == H
}

}  // namespace

LieElt bracket(const GenId& a, const GenId& b) {
    if (table_oriented(a.kind, b.kind)) return bracket_table(a, b);
    return -bracket_table(b, a);
}

LieElt bracket_lin(const LieElt& x, const LieElt& y) {
    LieElt r;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) r += (ca * cb) * bracket(a, b);
    return r;
}

std::pair<GenId, int> tau_gen(const GenId& id) {
    switch (id.kind) {
        case GenKind::E: return {GenId::make(GenKind::F, id.deg), 1};
        case GenKind::F: return {GenId::make(GenKind::E, id.deg), 1};
        case GenKind::G: return {GenId::make(GenKind::H, id.deg), 1};
        case GenKind::H: return {GenId::make(GenKind::G, id.deg), 1};
        case GenKind::D: return {id, -1};
        default: return {id, 1};
    }
}

LieElt tau(const LieElt& x) {
    LieElt r;
    for (const auto& [id, c] : x.terms()) {
        auto [img, sign] = tau_gen(id);
        r.add(img, sign < 0 ? -c : c);
    }
    return r;
}

}  // namespace qtwist

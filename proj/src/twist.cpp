#include "qtwist/twist.hpp"

#include <sstream>
#include <stdexcept>

namespace qtwist {

std::string case_name(Case c) {
    switch (c) {
        case Case::G: return "g";
        case Case::E: return "e";
        case Case::D: return "d";
        case Case::H: return "h";
        case Case::F: return "f";
        case Case::DF: return "df";
    }
    return "?";
}

std::optional<Case> case_from_name(const std::string& name) {
    if (name == "g") return Case::G;
    if (name == "e") return Case::E;
    if (name == "d") return Case::D;
    if (name == "h") return Case::H;
    if (name == "f") return Case::F;
    if (name == "df") return Case::DF;
    return std::nullopt;
}

bool case_uses_x(Case c) {
    return c == Case::G || c == Case::E || c == Case::H || c == Case::F;
}

Case tau_image(Case c) {
    switch (c) {
        case Case::G: return Case::H;
        case Case::H: return Case::G;
        case Case::E: return Case::F;
        case Case::F: return Case::E;
        case Case::D: return Case::DF;
        case Case::DF: return Case::D;
    }
    return c;
}

namespace {

GenKind ladder_kind(Case c) {
    switch (c) {
        case Case::G: return GenKind::G;
        case Case::E: return GenKind::E;
        case Case::D: return GenKind::E;
        case Case::H: return GenKind::H;
        case Case::F: return GenKind::F;
        case Case::DF: return GenKind::F;
    }
    return GenKind::E;
}

}  // namespace

TwistContext TwistContext::make(Case c, Deg n, const Rational& x1, const Rational& x2,
                                int order) {
    if (order < 0) throw std::invalid_argument("truncation order must be >= 0");
    TwistContext ctx;
    ctx.case_ = c;
    ctx.n_ = n;
    ctx.order_ = order;

    if (case_uses_x(c)) {
        if (x1 * n.m1 + x2 * n.m2 != 1)
            throw std::invalid_argument("context requires x1*n1 + x2*n2 = 1");
        ctx.x1_ = x1;
        ctx.x2_ = x2;
        ctx.T_ = UElt::gen(GenId::d1(), LaurentQ(x1)) + UElt::gen(GenId::d2(), LaurentQ(x2));
    } else {
        // D: T = d/2. DF: T = -d/2, the involution image of D; the sign is
        // what makes [T, E] = E hold with E = f_n.
        Rational half = c == Case::D ? rat(1, 2) : rat(-1, 2);
        ctx.x1_ = 0;
        ctx.x2_ = 0;
        ctx.T_ = UElt::gen(GenId::d(), LaurentQ(half));
    }

    if ((ladder_kind(c) == GenKind::G || ladder_kind(c) == GenKind::H) && n.is_zero())
        throw std::invalid_argument("g/h of degree (0,0) cannot serve as the ladder element");
    ctx.E_gen_ = GenId::make(ladder_kind(c), n);
    ctx.E_ = UElt::gen(ctx.E_gen_);

    // [T, E] = E, re-derived from the bracket table.
    LieElt t_lie;
    for (const auto& [mono, coeff] : ctx.T_.terms()) t_lie.add(mono.factors()[0], coeff);
    if (bracket_lin(t_lie, LieElt::gen(ctx.E_gen_)) != LieElt::gen(ctx.E_gen_))
        throw std::invalid_argument("context does not satisfy [T, E] = E");
    return ctx;
}

TwistContext TwistContext::make(Case c, Deg n, int order) {
    if (case_uses_x(c))
        throw std::invalid_argument("case '" + case_name(c) + "' requires the x parameters");
    return make(c, n, 0, 0, order);
}

TwistContext TwistContext::parse(const std::string& spec) {
    std::istringstream in(spec);
    std::string field;
    std::optional<Case> c;
    std::optional<Deg> n;
    std::optional<std::pair<Rational, Rational>> x;
    int order = 4;
    while (in >> field) {
        auto eq = field.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("context field without '=': " + field);
        std::string key = field.substr(0, eq), value = field.substr(eq + 1);
        if (key == "case") {
            c = case_from_name(value);
            if (!c) throw std::invalid_argument("unknown case: " + value);
        } else if (key == "n" || key == "x") {
            auto comma = value.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument(key + " needs two comma-separated values");
            if (key == "n") {
                n = Deg{std::stoi(value.substr(0, comma)), std::stoi(value.substr(comma + 1))};
            } else {
                x = {parse_rational(value.substr(0, comma)),
                     parse_rational(value.substr(comma + 1))};
            }
        } else if (key == "order") {
            order = std::stoi(value);
        } else {
            throw std::invalid_argument("unknown context field: " + key);
        }
    }
    if (!c || !n) throw std::invalid_argument("context needs at least case=... and n=...");
    if (case_uses_x(*c)) {
        if (!x) throw std::invalid_argument("case '" + case_name(*c) + "' needs x=...");
        return make(*c, *n, x->first, x->second, order);
    }
    return make(*c, *n, order);
}

Rational TwistContext::weight(GenKind kind, Deg deg) const {
    switch (case_) {
        case Case::G:
        case Case::E:
        case Case::H:
        case Case::F:
            if (is_graded_family(kind)) return x1_ * deg.m1 + x2_ * deg.m2;
            return 0;
        case Case::D:
            if (kind == GenKind::E) return 1;
            if (kind == GenKind::F) return -1;
            return 0;
        case Case::DF:
            if (kind == GenKind::E) return -1;
            if (kind == GenKind::F) return 1;
            return 0;
    }
    return 0;
}

Rational TwistContext::weight(const GenId& x) const { return weight(x.kind, x.deg); }

TwistContext TwistContext::tau_context() const {
    Case c = tau_image(case_);
    if (case_uses_x(c)) return make(c, n_, x1_, x2_, order_);
    return make(c, n_, order_);
}

std::string TwistContext::to_string() const {
    std::ostringstream out;
    out << "case=" << case_name(case_) << " n=" << n_.m1 << "," << n_.m2;
    if (case_uses_x(case_)) out << " x=" << qtwist::to_string(x1_) << "," << qtwist::to_string(x2_);
    out << " order=" << order_;
    return out.str();
}

T2Series twist_element(const TwistContext& ctx, const Rational& c) {
    T2Series s(ctx.order());
    UElt ek = UElt::one();
    for (int i = 0; i <= ctx.order(); ++i) {
        Rational inv_fact = 1 / factorial(static_cast<unsigned>(i));
        if (i % 2 == 1) inv_fact = -inv_fact;
        UElt left = LaurentQ(inv_fact) * falling(ctx.T(), c, static_cast<unsigned>(i));
        s[i].add_product({&left, &ek}, LaurentQ(1));
        if (i < ctx.order()) ek = ek * ctx.E();
    }
    return s;
}

T2Series inverse_twist_element(const TwistContext& ctx, const Rational& c) {
    T2Series s(ctx.order());
    UElt ek = UElt::one();
    for (int i = 0; i <= ctx.order(); ++i) {
        UElt left =
            LaurentQ(1 / factorial(static_cast<unsigned>(i))) * rising(ctx.T(), c, static_cast<unsigned>(i));
        s[i].add_product({&left, &ek}, LaurentQ(1));
        if (i < ctx.order()) ek = ek * ctx.E();
    }
    return s;
}

USeries mu_id_s0(const T2Series& s) {
    USeries r(s.order());
    for (int i = 0; i <= s.order(); ++i) {
        for (const auto& [key, c] : s[i].terms())
            r[i] += c * (UElt::mono(key[0]) * antipode0(UElt::mono(key[1])));
    }
    return r;
}

USeries mu_s0_id(const T2Series& s) {
    USeries r(s.order());
    for (int i = 0; i <= s.order(); ++i) {
        for (const auto& [key, c] : s[i].terms())
            r[i] += c * (antipode0(UElt::mono(key[0])) * UElt::mono(key[1]));
    }
    return r;
}

USeries u_element(const TwistContext& ctx) { return mu_id_s0(twist_element(ctx, 0)); }

USeries u_inverse_element(const TwistContext& ctx) {
    return mu_s0_id(inverse_twist_element(ctx, 0));
}

USeries u_family_closed(const TwistContext& ctx, const Rational& c) {
    USeries s(ctx.order());
    UElt ek = UElt::one();
    for (int i = 0; i <= ctx.order(); ++i) {
        s[i] = LaurentQ(1 / factorial(static_cast<unsigned>(i))) *
               (falling(ctx.T(), c, static_cast<unsigned>(i)) * ek);
        if (i < ctx.order()) ek = ek * ctx.E();
    }
    return s;
}

USeries u_inverse_family_closed(const TwistContext& ctx, const Rational& c) {
    USeries s(ctx.order());
    UElt ek = UElt::one();
    for (int i = 0; i <= ctx.order(); ++i) {
        Rational inv_fact = 1 / factorial(static_cast<unsigned>(i));
        if (i % 2 == 1) inv_fact = -inv_fact;
        s[i] = LaurentQ(inv_fact) * (falling(ctx.T(), -c, static_cast<unsigned>(i)) * ek);
        if (i < ctx.order()) ek = ek * ctx.E();
    }
    return s;
}

TwistEngine::TwistEngine(TwistContext ctx)
    : ctx_(std::move(ctx)),
      twist_(twist_element(ctx_, 0)),
      twist_inv_(inverse_twist_element(ctx_, 0)),
      u_(mu_id_s0(twist_)),
      u_inv_(mu_s0_id(twist_inv_)) {}

const T2Series& TwistEngine::delta_mono(const PBWMono& m) const {
    auto it = delta_cache_.find(m);
    if (it != delta_cache_.end()) return it->second;
    T2Series middle(delta0(UElt::mono(m)), ctx_.order());
    T2Series value = twist_ * middle * twist_inv_;
    return delta_cache_.emplace(m, std::move(value)).first->second;
}

const USeries& TwistEngine::antipode_mono(const PBWMono& m) const {
    auto it = antipode_cache_.find(m);
    if (it != antipode_cache_.end()) return it->second;
    USeries middle(antipode0(UElt::mono(m)), ctx_.order());
    USeries value = u_ * middle * u_inv_;
    return antipode_cache_.emplace(m, std::move(value)).first->second;
}

T2Series TwistEngine::delta(const UElt& x) const {
    T2Series r(ctx_.order());
    for (const auto& [mono, c] : x.terms()) r = r + c * delta_mono(mono);
    return r;
}

USeries TwistEngine::antipode(const UElt& x) const {
    USeries r(ctx_.order());
    for (const auto& [mono, c] : x.terms()) r = r + c * antipode_mono(mono);
    return r;
}

T3Series TwistEngine::delta_on_leg(const T2Series& s, std::size_t leg) const {
    const int n = s.order();
    T3Series out(n);
    for (int i = 0; i <= n; ++i) {
        for (const auto& [key, c] : s[i].terms()) {
            const T2Series& inner = delta_mono(key[leg]);
            for (int j = 0; i + j <= n; ++j) {
                for (const auto& [ikey, ic] : inner[j].terms()) {
                    Tensor3::Key k3 = leg == 0 ? Tensor3::Key{ikey[0], ikey[1], key[1]}
                                               : Tensor3::Key{key[0], ikey[0], ikey[1]};
                    out[i + j].add(k3, c * ic);
                }
            }
        }
    }
    return out;
}

USeries TwistEngine::antipode_then_mul(const T2Series& s, std::size_t leg) const {
    const int n = s.order();
    USeries out(n);
    for (int i = 0; i <= n; ++i) {
        for (const auto& [key, c] : s[i].terms()) {
            const USeries& mapped = antipode_mono(key[leg]);
            const UElt other = UElt::mono(key[1 - leg]);
            for (int j = 0; i + j <= n; ++j) {
                if (mapped[j].is_zero()) continue;
                UElt prod = leg == 0 ? mapped[j] * other : other * mapped[j];
                out[i + j] += c * prod;
            }
        }
    }
    return out;
}

T2Series twisted_delta(const TwistContext& ctx, const UElt& x) {
    return TwistEngine(ctx).delta(x);
}

USeries twisted_antipode(const TwistContext& ctx, const UElt& x) {
    return TwistEngine(ctx).antipode(x);
}

namespace {

template <class Series>
std::string first_difference(const Series& a, const Series& b, int order) {
    std::ostringstream out;
    out << "t^" << order << ": lhs = " << a[order].to_string()
        << " ; rhs = " << b[order].to_string();
    return out.str();
}

// Coefficientwise lift of a Tensor2 -> Tensor3 map over a series.
template <class Fn>
T3Series lift23(const T2Series& s, Fn&& fn) {
    T3Series r(s.order());
    for (int i = 0; i <= s.order(); ++i) r[i] = fn(s[i]);
    return r;
}

}  // namespace

CocycleReport check_cocycle_identity(const TwistContext& ctx) {
    CocycleReport rep;
    T2Series tw = twist_element(ctx, 0);
    T3Series lhs = lift23(tw, [](const Tensor2& t) { return embed_front(t); }) *
                   lift23(tw, [](const Tensor2& t) { return delta0_on_leg(t, 0); });
    T3Series rhs = lift23(tw, [](const Tensor2& t) { return embed_back(t); }) *
                   lift23(tw, [](const Tensor2& t) { return delta0_on_leg(t, 1); });
    if (int at = first_mismatch(lhs, rhs); at >= 0) {
        rep.pass = false;
        rep.first_order = at;
        rep.detail = "cocycle: " + first_difference(lhs, rhs, at);
    }
    return rep;
}

CocycleReport check_counit_conditions(const TwistContext& ctx) {
    CocycleReport rep;
    T2Series tw = twist_element(ctx, 0);
    for (std::size_t leg = 0; leg < 2; ++leg) {
        USeries collapsed(ctx.order());
        for (int i = 0; i <= ctx.order(); ++i) collapsed[i] = counit0_on_leg(tw[i], leg);
        USeries unit = USeries::one(ctx.order());
        if (int at = first_mismatch(collapsed, unit); at >= 0) {
            rep.pass = false;
            rep.first_order = at;
            rep.detail = "counit condition on leg " + std::to_string(leg) + ": " +
                         first_difference(collapsed, unit, at);
            return rep;
        }
    }
    return rep;
}

CocycleReport check_cocycle(const TwistContext& ctx) {
    CocycleReport rep = check_cocycle_identity(ctx);
    if (!rep.pass) return rep;
    return check_counit_conditions(ctx);
}

HopfReport check_hopf(const TwistEngine& eng, const std::vector<UElt>& samples,
                      bool pair_checks) {
    HopfReport rep;
    const int n = eng.order();
    auto note = [&](const std::string& axiom, const std::string& where) {
        rep.pass = false;
        rep.failures.push_back(where + ": " + axiom);
        ++rep.failure_counts[axiom];
    };

    std::vector<T2Series> deltas;
    deltas.reserve(samples.size());
    for (const auto& x : samples) deltas.push_back(eng.delta(x));

    for (std::size_t i = 0; i < samples.size(); ++i) {
        const UElt& x = samples[i];
        const T2Series& dx = deltas[i];
        const std::string tag = "sample#" + std::to_string(i);
        ++rep.checked;

        T3Series left = eng.delta_on_leg(dx, 0);
        T3Series right = eng.delta_on_leg(dx, 1);
        if (!equal_mod(left, right)) note("coassoc", tag);

        for (std::size_t leg = 0; leg < 2; ++leg) {
            USeries collapsed(n);
            for (int k = 0; k <= n; ++k) collapsed[k] = counit0_on_leg(dx[k], leg);
            if (!equal_mod(collapsed, USeries(x, n))) note("counit", tag);
        }

        USeries expect(LaurentQ(counit0(x)) * UElt::one(), n);
        if (!equal_mod(eng.antipode_then_mul(dx, 0), expect)) note("antipode", tag);
        if (!equal_mod(eng.antipode_then_mul(dx, 1), expect)) note("antipode", tag);
    }

    if (!pair_checks) return rep;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        for (std::size_t j = 0; j < samples.size(); ++j) {
            const UElt prod = samples[i] * samples[j];
            const std::string tag =
                "pair#" + std::to_string(i) + "," + std::to_string(j);
            ++rep.checked;
            if (!equal_mod(eng.delta(prod), deltas[i] * deltas[j])) note("delta-hom", tag);
            if (!(counit0(prod) == counit0(samples[i]) * counit0(samples[j])))
                note("counit-hom", tag);
            if (!equal_mod(eng.antipode(prod), eng.antipode(samples[j]) * eng.antipode(samples[i])))
                note("antipode-antihom", tag);
        }
    }
    return rep;
}

std::optional<GenId> noncocommutative_witness(const TwistEngine& eng,
                                              const std::vector<GenId>& candidates) {
    for (const auto& id : candidates) {
        T2Series dx = eng.delta(UElt::gen(id));
        T2Series flipped(dx.order());
        for (int i = 0; i <= dx.order(); ++i) flipped[i] = flip(dx[i]);
        if (!equal_mod(dx, flipped)) return id;
    }
    return std::nullopt;
}

}  // namespace qtwist

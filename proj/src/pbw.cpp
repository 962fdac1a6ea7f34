#include "qtwist/pbw.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qtwist {

PBWMono::PBWMono(std::vector<GenId> factors) : factors_(std::move(factors)) {
    if (!std::is_sorted(factors_.begin(), factors_.end()))
        throw std::invalid_argument("PBW monomial factors must be non-decreasing");
}

bool PBWMono::operator<(const PBWMono& other) const {
    if (factors_.size() != other.factors_.size()) return factors_.size() < other.factors_.size();
    return factors_ < other.factors_;
}

std::string PBWMono::to_string() const {
    if (factors_.empty()) return "1";
    std::ostringstream out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out << "*";
        out << factors_[i].to_string();
    }
    return out.str();
}

UElt UElt::scalar(const LaurentQ& c) {
    UElt x;
    x.add(PBWMono{}, c);
    return x;
}

UElt UElt::gen(const GenId& id, const LaurentQ& coeff) {
    UElt x;
    x.add(PBWMono::gen(id), coeff);
    return x;
}

UElt UElt::mono(const PBWMono& m, const LaurentQ& coeff) {
    UElt x;
    x.add(m, coeff);
    return x;
}

UElt UElt::from_lie(const LieElt& v) {
    UElt x;
    for (const auto& [id, c] : v.terms()) x.add(PBWMono::gen(id), c);
    return x;
}

void UElt::add(const PBWMono& mono, const LaurentQ& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentQ UElt::constant_term() const {
    auto it = terms_.find(PBWMono{});
    return it == terms_.end() ? LaurentQ() : it->second;
}

std::optional<LaurentQ> UElt::as_scalar() const {
    if (terms_.empty()) return LaurentQ();
    if (terms_.size() == 1 && terms_.begin()->first.is_unit()) return terms_.begin()->second;
    return std::nullopt;
}

bool UElt::uses_derivations() const {
    for (const auto& [mono, c] : terms_)
        for (const auto& id : mono.factors())
            if (id.kind == GenKind::D1 || id.kind == GenKind::D2) return true;
    return false;
}

UElt UElt::operator-() const {
    UElt r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

UElt& UElt::operator+=(const UElt& other) {
    for (const auto& [m, c] : other.terms_) add(m, c);
    return *this;
}

UElt& UElt::operator-=(const UElt& other) {
    for (const auto& [m, c] : other.terms_) add(m, -c);
    return *this;
}

UElt operator*(const LaurentQ& c, const UElt& x) {
    UElt r;
    if (c.is_zero()) return r;
    for (const auto& [m, xc] : x.terms_) r.terms_.emplace(m, c * xc);
    return r;
}

UElt straighten(std::span<const GenId> word, const LaurentQ& coeff) {
    UElt out;
    if (coeff.is_zero()) return out;
    std::vector<std::pair<std::vector<GenId>, LaurentQ>> work;
    work.emplace_back(std::vector<GenId>(word.begin(), word.end()), coeff);
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        std::size_t i = 0;
        while (i + 1 < w.size() && !(w[i + 1] < w[i])) ++i;
        if (i + 1 >= w.size()) {
            out.add(PBWMono(std::move(w)), c);
            continue;
        }
        // w[i] > w[i+1]: rewrite xy = yx + [x,y]
        LieElt corr = bracket(w[i], w[i + 1]);
        std::swap(w[i], w[i + 1]);
        for (const auto& [gen, bc] : corr.terms()) {
            std::vector<GenId> shorter;
            shorter.reserve(w.size() - 1);
            shorter.insert(shorter.end(), w.begin(), w.begin() + i);
            shorter.push_back(gen);
            shorter.insert(shorter.end(), w.begin() + i + 2, w.end());
            work.emplace_back(std::move(shorter), c * bc);
        }
        work.emplace_back(std::move(w), c);
    }
    return out;
}

UElt straighten(std::initializer_list<GenId> word, const LaurentQ& coeff) {
    return straighten(std::span<const GenId>(word.begin(), word.size()), coeff);
}

UElt operator*(const UElt& a, const UElt& b) {
    UElt r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            std::vector<GenId> word;
            word.reserve(ma.size() + mb.size());
            word.insert(word.end(), ma.factors().begin(), ma.factors().end());
            word.insert(word.end(), mb.factors().begin(), mb.factors().end());
            r += straighten(word, ca * cb);
        }
    }
    return r;
}

UElt u_pow(const UElt& base, unsigned k) {
    UElt r = UElt::one();
    for (unsigned i = 0; i < k; ++i) r = r * base;
    return r;
}

LaurentQ counit0(const UElt& x) { return x.constant_term(); }

UElt antipode0(const UElt& x) {
    UElt r;
    for (const auto& [mono, c] : x.terms()) {
        std::vector<GenId> rev(mono.factors().rbegin(), mono.factors().rend());
        LaurentQ signed_c = (rev.size() % 2 == 0) ? c : -c;
        r += straighten(rev, signed_c);
    }
    return r;
}

UElt tau_u(const UElt& x) {
    UElt r;
    for (const auto& [mono, c] : x.terms()) {
        std::vector<GenId> word;
        word.reserve(mono.size());
        int sign = 1;
        for (const auto& id : mono.factors()) {
            auto [img, s] = tau_gen(id);
            word.push_back(img);
            sign *= s;
        }
        r += straighten(word, sign < 0 ? -c : c);
    }
    return r;
}

UElt rising(const UElt& base, const Rational& a, unsigned r) {
    UElt acc = UElt::one();
    for (unsigned j = 0; j < r; ++j) acc = acc * (base + UElt::scalar(LaurentQ(a + (long)j)));
    return acc;
}

UElt falling(const UElt& base, const Rational& a, unsigned r) {
    UElt acc = UElt::one();
    for (unsigned j = 0; j < r; ++j) acc = acc * (base + UElt::scalar(LaurentQ(a - (long)j)));
    return acc;
}

namespace {

// Coefficient prefix for a non-unit monomial: "", "-", "3/2*q^2*" or "(...)*".
std::string coeff_prefix(const LaurentQ& c) {
    if (c.is_one()) return "";
    if ((-c).is_one()) return "-";
    if (c.terms().size() == 1) return c.to_string() + "*";
    return "(" + c.to_string() + ")*";
}

}  // namespace

std::string UElt::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        std::string body;
        if (mono.is_unit()) {
            body = c.terms().size() > 1 ? "(" + c.to_string() + ")" : c.to_string();
        } else {
            body = coeff_prefix(c) + mono.to_string();
        }
        if (!first) {
            if (!body.empty() && body[0] == '-') {
                out << " - " << body.substr(1);
            } else {
                out << " + " << body;
            }
        } else {
            out << body;
        }
        first = false;
    }
    return out.str();
}

}  // namespace qtwist

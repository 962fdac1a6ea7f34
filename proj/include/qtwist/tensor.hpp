#pragma once

#include <array>
#include <sstream>

#include "qtwist/pbw.hpp"

namespace qtwist {

/// Element of the A-fold tensor power of the enveloping algebra, as a map
/// from tuples of PBW monomials to scalars. Multiplication is componentwise,
/// each leg re-normalized.
template <std::size_t A>
class Tensor {
    static_assert(A == 2 || A == 3);

public:
    using Key = std::array<PBWMono, A>;

    Tensor() = default;

    static Tensor one() {
        Tensor t;
        t.add(Key{}, LaurentQ(1));
        return t;
    }

    static Tensor scalar(const LaurentQ& c) {
        Tensor t;
        t.add(Key{}, c);
        return t;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, LaurentQ>& terms() const { return terms_; }

    void add(const Key& key, const LaurentQ& coeff) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Adds coeff * (u_0 x ... x u_{A-1}); expands the per-leg UElt terms.
    void add_product(const std::array<const UElt*, A>& legs, const LaurentQ& coeff);

    std::optional<LaurentQ> as_scalar() const {
        if (terms_.empty()) return LaurentQ();
        if (terms_.size() == 1 && terms_.begin()->first == Key{}) return terms_.begin()->second;
        return std::nullopt;
    }

    bool uses_derivations() const {
        for (const auto& [key, c] : terms_)
            for (const auto& mono : key)
                for (const auto& id : mono.factors())
                    if (id.kind == GenKind::D1 || id.kind == GenKind::D2) return true;
        return false;
    }

    Tensor operator-() const {
        Tensor r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }

    Tensor& operator+=(const Tensor& other) {
        for (const auto& [k, c] : other.terms_) add(k, c);
        return *this;
    }

    Tensor& operator-=(const Tensor& other) {
        for (const auto& [k, c] : other.terms_) add(k, -c);
        return *this;
    }

    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }

    friend Tensor operator*(const LaurentQ& c, const Tensor& t) {
        Tensor r;
        if (c.is_zero()) return r;
        for (const auto& [k, tc] : t.terms_) r.terms_.emplace(k, c * tc);
        return r;
    }

    /// Componentwise product, each leg straightened back to normal form.
    friend Tensor operator*(const Tensor& a, const Tensor& b) {
        Tensor r;
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                std::array<UElt, A> legs;
                for (std::size_t i = 0; i < A; ++i) {
                    std::vector<GenId> word;
                    word.reserve(ka[i].size() + kb[i].size());
                    word.insert(word.end(), ka[i].factors().begin(), ka[i].factors().end());
                    word.insert(word.end(), kb[i].factors().begin(), kb[i].factors().end());
                    legs[i] = straighten(word, LaurentQ(1));
                }
                std::array<const UElt*, A> ptrs;
                for (std::size_t i = 0; i < A; ++i) ptrs[i] = &legs[i];
                r.add_product(ptrs, ca * cb);
            }
        }
        return r;
    }

    bool operator==(const Tensor&) const = default;

    std::string to_string() const;

private:
    std::map<Key, LaurentQ> terms_;
};

using Tensor2 = Tensor<2>;
using Tensor3 = Tensor<3>;

/// a (x) b.
Tensor2 tensor_of(const UElt& a, const UElt& b);
Tensor3 tensor_of(const UElt& a, const UElt& b, const UElt& c);

/// The primitive coproduct extended as an algebra map: each PBW monomial is
/// split over all subsequence/complement pairs of its factors.
Tensor2 delta0(const UElt& x);

/// Coproduct applied to one leg, turning a two-fold into a three-fold tensor.
Tensor3 delta0_on_leg(const Tensor2& t, std::size_t leg);

/// Counit applied to one leg of a two-fold tensor.
UElt counit0_on_leg(const Tensor2& t, std::size_t leg);

/// Antipode applied to one leg.
Tensor2 antipode0_on_leg(const Tensor2& t, std::size_t leg);

/// tau applied to every leg.
Tensor2 tau_tensor(const Tensor2& t);

/// Multiplies the two legs together (the Hopf-algebra mu).
UElt mul_legs(const Tensor2& t);

/// Swaps the legs.
Tensor2 flip(const Tensor2& t);

/// Embeds a two-fold tensor into legs (0,1) or (1,2) of a three-fold one,
/// padding the remaining leg with the unit.
Tensor3 embed_front(const Tensor2& t);
Tensor3 embed_back(const Tensor2& t);

}  // namespace qtwist

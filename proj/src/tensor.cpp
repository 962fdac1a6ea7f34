#include "qtwist/tensor.hpp"

namespace qtwist {

template <std::size_t A>
void Tensor<A>::add_product(const std::array<const UElt*, A>& legs, const LaurentQ& coeff) {
    if (coeff.is_zero()) return;
    // iterate over the cartesian product of the legs' terms
    std::array<std::map<PBWMono, LaurentQ>::const_iterator, A> its;
    for (std::size_t i = 0; i < A; ++i) {
        if (legs[i]->terms().empty()) return;
        its[i] = legs[i]->terms().begin();
    }
    while (true) {
        Key key;
        LaurentQ c = coeff;
        for (std::size_t i = 0; i < A; ++i) {
            key[i] = its[i]->first;
            c = c * its[i]->second;
        }
        add(key, c);
        std::size_t i = A;
        while (i > 0) {
            --i;
            if (++its[i] != legs[i]->terms().end()) break;
            its[i] = legs[i]->terms().begin();
            if (i == 0) return;
        }
    }
}

template <std::size_t A>
std::string Tensor<A>::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        std::string body;
        for (std::size_t i = 0; i < A; ++i) {
            if (i) body += "⊗";
            body += key[i].to_string();
        }
        bool negative = false;
        LaurentQ cc = c;
        if (c.terms().size() == 1 && c.terms().begin()->second < 0) {
            negative = true;
            cc = -c;
        }
        if (!cc.is_one()) {
            std::string cs =
                cc.terms().size() > 1 ? "(" + cc.to_string() + ")" : cc.to_string();
            body = cs + "*(" + body + ")";
        }
        if (first) {
            out << (negative ? "-" : "") << body;
            first = false;
        } else {
            out << (negative ? " - " : " + ") << body;
        }
    }
    return out.str();
}

template class Tensor<2>;
template class Tensor<3>;

Tensor2 tensor_of(const UElt& a, const UElt& b) {
    Tensor2 r;
    r.add_product({&a, &b}, LaurentQ(1));
    return r;
}

Tensor3 tensor_of(const UElt& a, const UElt& b, const UElt& c) {
    Tensor3 r;
    r.add_product({&a, &b, &c}, LaurentQ(1));
    return r;
}

namespace {

// Splits the sorted factor list of a monomial over subsequence/complement
// pairs. Both halves of a split stay sorted, so no straightening is needed.
void split_mono(const PBWMono& mono, const LaurentQ& coeff, Tensor2& out) {
    const auto& f = mono.factors();
    const std::size_t n = f.size();
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        std::vector<GenId> left, right;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1ull << i))
                left.push_back(f[i]);
            else
                right.push_back(f[i]);
        }
        out.add({PBWMono(std::move(left)), PBWMono(std::move(right))}, coeff);
    }
}

}  // namespace

Tensor2 delta0(const UElt& x) {
    Tensor2 r;
    for (const auto& [mono, c] : x.terms()) split_mono(mono, c, r);
    return r;
}

Tensor3 delta0_on_leg(const Tensor2& t, std::size_t leg) {
    Tensor3 r;
    for (const auto& [key, c] : t.terms()) {
        Tensor2 split = delta0(UElt::mono(key[leg]));
        for (const auto& [skey, sc] : split.terms()) {
            Tensor3::Key k3;
            if (leg == 0) {
                k3 = {skey[0], skey[1], key[1]};
            } else {
                k3 = {key[0], skey[0], skey[1]};
            }
            r.add(k3, c * sc);
        }
    }
    return r;
}

UElt counit0_on_leg(const Tensor2& t, std::size_t leg) {
    UElt r;
    for (const auto& [key, c] : t.terms()) {
        if (!key[leg].is_unit()) continue;
        r.add(key[1 - leg], c);
    }
    return r;
}

Tensor2 antipode0_on_leg(const Tensor2& t, std::size_t leg) {
    Tensor2 r;
    for (const auto& [key, c] : t.terms()) {
        UElt mapped = antipode0(UElt::mono(key[leg]));
        UElt other = UElt::mono(key[1 - leg]);
        if (leg == 0)
            r.add_product({&mapped, &other}, c);
        else
            r.add_product({&other, &mapped}, c);
    }
    return r;
}

Tensor2 tau_tensor(const Tensor2& t) {
    Tensor2 r;
    for (const auto& [key, c] : t.terms()) {
        UElt a = tau_u(UElt::mono(key[0]));
        UElt b = tau_u(UElt::mono(key[1]));
        r.add_product({&a, &b}, c);
    }
    return r;
}

UElt mul_legs(const Tensor2& t) {
    UElt r;
    for (const auto& [key, c] : t.terms()) {
        std::vector<GenId> word;
        word.reserve(key[0].size() + key[1].size());
        word.insert(word.end(), key[0].factors().begin(), key[0].factors().end());
        word.insert(word.end(), key[1].factors().begin(), key[1].factors().end());
        r += straighten(word, c);
    }
    return r;
}

Tensor2 flip(const Tensor2& t) {
    Tensor2 r;
    for (const auto& [key, c] : t.terms()) r.add({key[1], key[0]}, c);
    return r;
}

Tensor3 embed_front(const Tensor2& t) {
    Tensor3 r;
    for (const auto& [key, c] : t.terms()) r.add({key[0], key[1], PBWMono{}}, c);
    return r;
}

Tensor3 embed_back(const Tensor2& t) {
    Tensor3 r;
    for (const auto& [key, c] : t.terms()) r.add({PBWMono{}, key[0], key[1]}, c);
    return r;
}

}  // namespace qtwist

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qtwist/tensor.hpp"

namespace qtwist {

/// Truncated formal power series in t, exact modulo t^{order+1}. The
/// coefficients live in one of the algebras UElt, Tensor2, Tensor3.
/// Combining series of different orders truncates to the smaller one.
template <class C>
class TSeries {
public:
    TSeries() = default;
    explicit TSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {}
    TSeries(const C& constant, int order) : TSeries(order) { coeffs_[0] = constant; }

    static TSeries one(int order) { return TSeries(unit(), order); }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const C& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    C& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    TSeries truncated(int new_order) const {
        if (new_order >= order()) return *this;
        TSeries r(new_order);
        for (int i = 0; i <= new_order; ++i) r[i] = coeffs_[static_cast<std::size_t>(i)];
        return r;
    }

    /// Multiplies by t^k (dropping overflow past the truncation order).
    TSeries shifted(int k) const {
        TSeries r(order());
        for (int i = 0; i + k <= order(); ++i) r[i + k] = (*this)[i];
        return r;
    }

    TSeries operator-() const {
        TSeries r(order());
        for (int i = 0; i <= order(); ++i) r[i] = -(*this)[i];
        return r;
    }

    friend TSeries operator+(const TSeries& a, const TSeries& b) {
        const int n = std::min(a.order(), b.order());
        TSeries r(n);
        for (int i = 0; i <= n; ++i) r[i] = a[i] + b[i];
        return r;
    }

    friend TSeries operator-(const TSeries& a, const TSeries& b) {
        const int n = std::min(a.order(), b.order());
        TSeries r(n);
        for (int i = 0; i <= n; ++i) r[i] = a[i] - b[i];
        return r;
    }

    friend TSeries operator*(const LaurentQ& c, const TSeries& s) {
        TSeries r(s.order());
        for (int i = 0; i <= s.order(); ++i) r[i] = c * s[i];
        return r;
    }

    /// Cauchy product, truncated.
    friend TSeries operator*(const TSeries& a, const TSeries& b) {
        const int n = std::min(a.order(), b.order());
        TSeries r(n);
        for (int i = 0; i <= n; ++i) {
            if (a[i].is_zero()) continue;
            for (int j = 0; i + j <= n; ++j) {
                if (b[j].is_zero()) continue;
                r[i + j] += a[i] * b[j];
            }
        }
        return r;
    }

    /// Two-sided inverse; requires the constant term to be an invertible
    /// scalar multiple of the unit.
    TSeries inverse() const {
        auto head = coeffs_[0].as_scalar();
        if (!head) throw std::domain_error("series inverse: constant term is not scalar");
        auto head_inv = head->try_inverse();
        if (!head_inv)
            throw std::domain_error("series inverse: constant term is not invertible");
        TSeries r(order());
        r[0] = *head_inv * unit();
        for (int k = 1; k <= order(); ++k) {
            C acc;
            for (int i = 1; i <= k; ++i) acc += coeffs_[static_cast<std::size_t>(i)] * r[k - i];
            r[k] = -(*head_inv) * acc;
        }
        return r;
    }

    bool operator==(const TSeries& other) const {
        const int n = std::min(order(), other.order());
        if (n != std::max(order(), other.order())) return false;
        for (int i = 0; i <= n; ++i)
            if (!((*this)[i] == other[i])) return false;
        return true;
    }

    /// Equality modulo t^{min(orders)+1}.
    friend bool equal_mod(const TSeries& a, const TSeries& b) {
        const int n = std::min(a.order(), b.order());
        for (int i = 0; i <= n; ++i)
            if (!(a[i] == b[i])) return false;
        return true;
    }

    /// First order (up to the common truncation) where the two differ, or -1.
    friend int first_mismatch(const TSeries& a, const TSeries& b) {
        const int n = std::min(a.order(), b.order());
        for (int i = 0; i <= n; ++i)
            if (!(a[i] == b[i])) return i;
        return -1;
    }

    /// "c0 + (c1) t + (c2) t^2 + O(t^{N+1})".
    std::string to_string() const {
        std::string out;
        bool first = true;
        for (int i = 0; i <= order(); ++i) {
            if ((*this)[i].is_zero()) continue;
            std::string body = (*this)[i].to_string();
            bool negative = false;
            if (i > 0) {
                C neg = -(*this)[i];
                std::string nbody = neg.to_string();
                if (body.size() > nbody.size() && body[0] == '-') {
                    negative = true;
                    body = nbody;
                }
                body = "(" + body + ")";
                body += " t";
                if (i > 1) body += "^" + std::to_string(i);
            }
            if (first) {
                out += negative ? "-" + body : body;
                first = false;
            } else {
                out += (negative ? " - " : " + ") + body;
            }
        }
        if (first) out += "0";
        out += " + O(t^" + std::to_string(order() + 1) + ")";
        return out;
    }

private:
    static C unit() { return C::one(); }

    std::vector<C> coeffs_;
};

using USeries = TSeries<UElt>;
using T2Series = TSeries<Tensor2>;
using T3Series = TSeries<Tensor3>;

/// Binomial series (1 - E t)^r = sum_k C(r,k) (-1)^k E^k t^k, exact modulo
/// t^{order+1}, defined for any rational exponent.
USeries one_minus_Et_pow(const UElt& E, const Rational& r, int order);

/// Lifts u into the left or right leg of a two-fold tensor series.
T2Series left_leg(const USeries& s);
T2Series right_leg(const USeries& s);

/// Global tensor product of two series: sum_k (sum_{i+j=k} a_i (x) b_j) t^k.
T2Series tensor_series(const USeries& a, const USeries& b);

USeries const_series(const UElt& x, int order);
T2Series const_series2(const Tensor2& x, int order);

}  // namespace qtwist

#include "qtwist/series.hpp"

namespace qtwist {

USeries one_minus_Et_pow(const UElt& E, const Rational& r, int order) {
    USeries s(order);
    UElt ek = UElt::one();
    for (int k = 0; k <= order; ++k) {
        Rational c = gen_binomial(r, static_cast<unsigned>(k));
        if (k % 2 == 1) c = -c;
        s[k] = LaurentQ(c) * ek;
        if (k < order) ek = ek * E;
    }
    return s;
}

T2Series left_leg(const USeries& s) {
    T2Series r(s.order());
    const UElt one = UElt::one();
    for (int i = 0; i <= s.order(); ++i) r[i].add_product({&s[i], &one}, LaurentQ(1));
    return r;
}

T2Series right_leg(const USeries& s) {
    T2Series r(s.order());
    const UElt one = UElt::one();
    for (int i = 0; i <= s.order(); ++i) r[i].add_product({&one, &s[i]}, LaurentQ(1));
    return r;
}

T2Series tensor_series(const USeries& a, const USeries& b) {
    const int n = std::min(a.order(), b.order());
    T2Series r(n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) r[i + j].add_product({&a[i], &b[j]}, LaurentQ(1));
    return r;
}

USeries const_series(const UElt& x, int order) { return USeries(x, order); }

T2Series const_series2(const Tensor2& x, int order) { return T2Series(x, order); }

}  // namespace qtwist

#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hpe {

// Dense univariate polynomials over an arbitrary field, coefficient of X^0
// first, trailing zeros trimmed (the zero polynomial is the empty vector).
// The same routines serve polynomials over F_p (spec validation), over F_q
// (extension moduli) and over K (decryption), parameterized by an Ops
// adapter providing:
//
//   using value_type = ...;
//   value_type zero(), one();
//   bool is_zero(v), eq(a, b);
//   value_type add(a, b), sub(a, b), neg(a), mul(a, b), inv(a);

template <class V>
using Poly = std::vector<V>;

template <class Ops>
void poly_trim(const Ops& F, Poly<typename Ops::value_type>& a) {
    while (!a.empty() && F.is_zero(a.back())) a.pop_back();
}

template <class V>
int64_t poly_degree(const Poly<V>& a) {
    return static_cast<int64_t>(a.size()) - 1;  // -1 for the zero polynomial
}

template <class Ops>
bool poly_is_zero(const Ops&, const Poly<typename Ops::value_type>& a) {
    return a.empty();
}

template <class Ops>
Poly<typename Ops::value_type> poly_add(const Ops& F, const Poly<typename Ops::value_type>& a,
                                        const Poly<typename Ops::value_type>& b) {
    Poly<typename Ops::value_type> r(std::max(a.size(), b.size()), F.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
    poly_trim(F, r);
    return r;
}

template <class Ops>
Poly<typename Ops::value_type> poly_sub(const Ops& F, const Poly<typename Ops::value_type>& a,
                                        const Poly<typename Ops::value_type>& b) {
    Poly<typename Ops::value_type> r(std::max(a.size(), b.size()), F.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
    poly_trim(F, r);
    return r;
}

template <class Ops>
Poly<typename Ops::value_type> poly_scale(const Ops& F, const typename Ops::value_type& s,
                                          const Poly<typename Ops::value_type>& a) {
    if (F.is_zero(s)) return {};
    Poly<typename Ops::value_type> r(a.size(), F.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(s, a[i]);
    poly_trim(F, r);
    return r;
}

template <class Ops>
Poly<typename Ops::value_type> poly_mul(const Ops& F, const Poly<typename Ops::value_type>& a,
                                        const Poly<typename Ops::value_type>& b) {
    if (a.empty() || b.empty()) return {};
    Poly<typename Ops::value_type> r(a.size() + b.size() - 1, F.zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (F.is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    poly_trim(F, r);
    return r;
}

// Quotient/remainder against a nonzero divisor.
template <class Ops>
std::pair<Poly<typename Ops::value_type>, Poly<typename Ops::value_type>> poly_divmod(
    const Ops& F, Poly<typename Ops::value_type> a, const Poly<typename Ops::value_type>& b) {
    if (b.empty()) throw std::domain_error("poly_divmod: division by zero polynomial");
    if (a.size() < b.size()) return {{}, std::move(a)};
    auto lead_inv = F.inv(b.back());
    Poly<typename Ops::value_type> q(a.size() - b.size() + 1, F.zero());
    for (size_t k = a.size(); k-- >= b.size();) {
        if (F.is_zero(a[k])) continue;
        auto f = F.mul(a[k], lead_inv);
        q[k - b.size() + 1] = f;
        for (size_t i = 0; i < b.size(); ++i)
            a[k - b.size() + 1 + i] = F.sub(a[k - b.size() + 1 + i], F.mul(f, b[i]));
    }
    poly_trim(F, q);
    poly_trim(F, a);
    return {std::move(q), std::move(a)};
}

template <class Ops>
Poly<typename Ops::value_type> poly_mod(const Ops& F, Poly<typename Ops::value_type> a,
                                        const Poly<typename Ops::value_type>& b) {
    return poly_divmod(F, std::move(a), b).second;
}

template <class Ops>
Poly<typename Ops::value_type> poly_monic(const Ops& F, const Poly<typename Ops::value_type>& a) {
    if (a.empty() || F.eq(a.back(), F.one())) return a;
    return poly_scale(F, F.inv(a.back()), a);
}

// Monic gcd by the Euclidean algorithm.
template <class Ops>
Poly<typename Ops::value_type> poly_gcd(const Ops& F, Poly<typename Ops::value_type> a,
                                        Poly<typename Ops::value_type> b) {
    while (!b.empty()) {
        auto r = poly_mod(F, std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(F, a);
}

// Extended Euclid: returns (g, s) with s*a == g (mod b), g monic.
template <class Ops>
std::pair<Poly<typename Ops::value_type>, Poly<typename Ops::value_type>> poly_ext_gcd(
    const Ops& F, Poly<typename Ops::value_type> a, Poly<typename Ops::value_type> b) {
    using P = Poly<typename Ops::value_type>;
    P s0{F.one()}, s1{};
    while (!b.empty()) {
        auto [q, r] = poly_divmod(F, std::move(a), b);
        a = std::move(b);
        b = std::move(r);
        P s2 = poly_sub(F, s0, poly_mul(F, q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (a.empty()) return {a, s0};
    auto lead_inv = F.inv(a.back());
    return {poly_scale(F, lead_inv, a), poly_scale(F, lead_inv, s0)};
}

template <class Ops>
Poly<typename Ops::value_type> poly_mulmod(const Ops& F, const Poly<typename Ops::value_type>& a,
                                           const Poly<typename Ops::value_type>& b,
                                           const Poly<typename Ops::value_type>& modulus) {
    return poly_mod(F, poly_mul(F, a, b), modulus);
}

template <class Ops>
Poly<typename Ops::value_type> poly_powmod(const Ops& F, Poly<typename Ops::value_type> base,
                                           uint64_t e, const Poly<typename Ops::value_type>& modulus) {
    Poly<typename Ops::value_type> r{F.one()};
    base = poly_mod(F, std::move(base), modulus);
    while (e) {
        if (e & 1) r = poly_mulmod(F, r, base, modulus);
        e >>= 1;
        if (e) base = poly_mulmod(F, base, base, modulus);
    }
    return r;
}

template <class Ops>
typename Ops::value_type poly_eval(const Ops& F, const Poly<typename Ops::value_type>& a,
                                   const typename Ops::value_type& x) {
    auto r = F.zero();
    for (size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
    return r;
}

}  // namespace hpe

#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "balans/exactnum.hpp"

namespace balans {

struct extension_error : balans_error {
    using balans_error::balans_error;
};
struct coprimality_error : balans_error {
    using balans_error::balans_error;
};
struct coefficient_error : balans_error {
    using balans_error::balans_error;
};

// A depth-d linear recurrence with rational coefficients and an optional
// constant term:
//
//   c_n = coeffs[0]*c_{n-1} + ... + coeffs[d-1]*c_{n-d} + constant
//
// `initial` holds the terms at indices base, base+1, ... Terms before the
// initial block are obtained by solving the recurrence for c_{n-d}, which
// requires a nonzero trailing coefficient. Index bases differ per family
// (each constructor documents its own); they were chosen so every term the
// recurrence can produce is consistent with the family's defining identity.
struct Recurrence {
    std::vector<Rat> coeffs;
    Rat constant = 0;
    std::vector<Rat> initial;
    std::int64_t base = 0;
    std::string label;

    int depth() const { return static_cast<int>(coeffs.size()); }
};

struct SequenceWindow {
    std::int64_t start = 0;
    std::vector<Rat> terms;
};

namespace detail {

inline void validate(const Recurrence& rec) {
    if (rec.coeffs.empty()) throw domain_error("Recurrence: depth must be positive");
    if (rec.initial.size() < rec.coeffs.size())
        throw domain_error("Recurrence: need at least depth initial terms");
}

inline Rat step_forward(const Recurrence& rec, const std::vector<Rat>& tail) {
    // tail holds the last depth() terms, most recent first.
    Rat next = rec.constant;
    for (int j = 0; j < rec.depth(); ++j) next += rec.coeffs[j] * tail[j];
    return next;
}

}  // namespace detail

// `count` consecutive exact terms starting at index `start`.
inline SequenceWindow window(const Recurrence& rec, std::int64_t start, std::size_t count) {
    detail::validate(rec);
    const int d = rec.depth();
    const std::int64_t init_lo = rec.base;
    const std::int64_t init_hi = rec.base + static_cast<std::int64_t>(rec.initial.size()) - 1;

    SequenceWindow out;
    out.start = start;
    if (count == 0) return out;
    const std::int64_t last = start + static_cast<std::int64_t>(count) - 1;

    // Work over [lo, hi] covering both the requested window and the initial block.
    std::int64_t lo = start < init_lo ? start : init_lo;
    std::int64_t hi = last > init_hi ? last : init_hi;

    std::vector<Rat> buf(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < rec.initial.size(); ++i)
        buf[static_cast<std::size_t>(init_lo - lo) + i] = rec.initial[i];

    std::vector<Rat> tail(static_cast<std::size_t>(d));
    // Forward from the end of the initial block.
    for (std::int64_t i = init_hi + 1; i <= hi; ++i) {
        for (int j = 0; j < d; ++j) tail[static_cast<std::size_t>(j)] = buf[static_cast<std::size_t>(i - 1 - j - lo)];
        buf[static_cast<std::size_t>(i - lo)] = detail::step_forward(rec, tail);
    }
    // Backward before the initial block: solve for c_{n-d}.
    if (start < init_lo) {
        const Rat& trailing = rec.coeffs[static_cast<std::size_t>(d - 1)];
        if (trailing == 0)
            throw extension_error("backward extension needs a nonzero trailing coefficient: " +
                                  rec.label);
        for (std::int64_t i = init_lo - 1; i >= start; --i) {
            Rat rhs = buf[static_cast<std::size_t>(i + d - lo)] - rec.constant;
            for (int j = 0; j < d - 1; ++j)
                rhs -= rec.coeffs[static_cast<std::size_t>(j)] * buf[static_cast<std::size_t>(i + d - 1 - j - lo)];
            buf[static_cast<std::size_t>(i - lo)] = rhs / trailing;
        }
    }

    out.terms.reserve(count);
    for (std::int64_t i = start; i <= last; ++i)
        out.terms.push_back(buf[static_cast<std::size_t>(i - lo)]);
    return out;
}

inline Rat term(const Recurrence& rec, std::int64_t i) { return window(rec, i, 1).terms.front(); }

// F_0 = 0, F_1 = 1, F_n = F_{n-1} + F_{n-2}.
inline Recurrence fibonacci() {
    return Recurrence{{Rat(1), Rat(1)}, Rat(0), {Rat(0), Rat(1)}, 0, "fibonacci"};
}

// T_0 = 0, T_1 = T_2 = 1, T_n = T_{n-1} + T_{n-2} + T_{n-3}.
inline Recurrence tribonacci() {
    return Recurrence{{Rat(1), Rat(1), Rat(1)}, Rat(0), {Rat(0), Rat(1), Rat(1)}, 0, "tribonacci"};
}

// P_0 = 0, P_1 = 1, P_n = 2P_{n-1} + P_{n-2}.
inline Recurrence pell() {
    return Recurrence{{Rat(2), Rat(1)}, Rat(0), {Rat(0), Rat(1)}, 0, "pell"};
}

// Classical balancing numbers: B_1 = 6, B_2 = 35, B_{n+1} = 6B_n - B_{n-1}.
// Base index 1; backward extension yields B_0 = 1.
inline Recurrence balancing_rec() {
    return Recurrence{{Rat(6), Rat(-1)}, Rat(0), {Rat(6), Rat(35)}, 1, "balancing"};
}

namespace detail {

// Coprime (a,b) with a | 2b forces a in {1,2}; m = 2b/a is then a positive integer.
inline Int cobalancing_m(const Int& a, const Int& b) {
    if (a <= 0 || b <= 0) throw domain_error("coefficients must be positive");
    if (boost::multiprecision::gcd(a, b) != 1)
        throw coprimality_error("coefficients must be coprime: (" + a.str() + "," + b.str() + ")");
    if ((2 * b) % a != 0)
        throw coefficient_error("unsupported coefficients: a does not divide 2b for (" + a.str() +
                                "," + b.str() + ")");
    return 2 * b / a;
}

}  // namespace detail

// (a,b) cobalancing numbers: c_1 = m, c_2 = 2m^2 + 3m and
// c_n = (2m+2)c_{n-1} - c_{n-2} + m with m = 2b/a. Stored with c_0 = 0 at
// base 0, which the recurrence extension already satisfies.
inline Recurrence cobalancing_rec(const Int& a, const Int& b) {
    Int m = detail::cobalancing_m(a, b);
    return Recurrence{{Rat(2 * m + 2), Rat(-1)},
                      Rat(m),
                      {Rat(0), Rat(m)},
                      0,
                      "cobalancing(" + a.str() + "," + b.str() + ")"};
}

// Cobalancers of the (a,b) cobalancing numbers: r_1 = 1, r_2 = 2m+2,
// r_n = (2m+2)r_{n-1} - r_{n-2}. Backward extension yields r_0 = 0.
inline Recurrence cobalancer_rec(const Int& a, const Int& b) {
    Int m = detail::cobalancing_m(a, b);
    return Recurrence{{Rat(2 * m + 2), Rat(-1)},
                      Rat(0),
                      {Rat(1), Rat(2 * m + 2)},
                      1,
                      "cobalancer(" + a.str() + "," + b.str() + ")"};
}

// G_0 = p, G_1 = q, G_2 = r, G_n = X*G_{n-1} + Y*G_{n-2} + Z*G_{n-3}.
inline Recurrence generalized_tribonacci(const Int& p, const Int& q, const Int& r, const Int& X,
                                         const Int& Y, const Int& Z) {
    return Recurrence{{Rat(X), Rat(Y), Rat(Z)},
                      Rat(0),
                      {Rat(p), Rat(q), Rat(r)},
                      0,
                      "gentrib(" + p.str() + "," + q.str() + "," + r.str() + ";" + X.str() + "," +
                          Y.str() + "," + Z.str() + ")"};
}

}  // namespace balans

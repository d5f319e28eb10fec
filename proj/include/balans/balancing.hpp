#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "balans/exactnum.hpp"
#include "balans/sequences.hpp"

namespace balans {

struct not_cobalancing_error : balans_error {
    using balans_error::balans_error;
};

enum class Variant { balancing, cobalancing };

inline const char* to_string(Variant v) {
    return v == Variant::balancing ? "balancing" : "cobalancing";
}

// Coprime positive coefficient pair (a, b): a scales the left-hand sum,
// b the right-hand sum.
struct CoeffPair {
    Int a;
    Int b;

    CoeffPair(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {
        if (a <= 0 || b <= 0) throw domain_error("CoeffPair: coefficients must be positive");
        if (boost::multiprecision::gcd(a, b) != 1)
            throw coprimality_error("CoeffPair: gcd(" + a.str() + "," + b.str() + ") != 1");
    }
};

struct BalanceSolution {
    Int n;
    Int r;
    Variant variant;
    int power = 1;  // 1: plain sums, 2: sums of squares
};

namespace detail {

using u128 = unsigned __int128;

inline u128 isqrt_u128(u128 x) {
    if (x == 0) return 0;
    auto seed = static_cast<u128>(std::sqrt(static_cast<long double>(x)));
    u128 r = seed > 2 ? seed - 2 : 0;
    while ((r + 1) * (r + 1) <= x) ++r;
    while (r * r > x) --r;
    return r;
}

// Discriminant of the balancer equation, cleared of denominators:
//   balancing:   D = 4b(b+a) n^2 + 4b(b-a) n + b^2
//   cobalancing: D = 4b(b+a) n^2 + 4b(b+a) n + b^2
// n is a solution iff D is a perfect square and r = (sqrt(D) - (2n+1)b) / (2b)
// is an integer >= 1.
inline Int discriminant(const Int& n, const Int& a, const Int& b, Variant v) {
    Int s = 4 * b * (b + a);
    Int lin = v == Variant::balancing ? Int(4 * b * (b - a)) : s;
    return s * n * n + lin * n + b * b;
}

}  // namespace detail

// The unique balancer/cobalancer r >= 1 of n, if n is an (a,b) solution.
inline std::optional<Int> balancer_of(const Int& n, const CoeffPair& c, Variant v) {
    if (n < 1) throw domain_error("balancer_of: n must be positive");
    Int D = detail::discriminant(n, c.a, c.b, v);
    auto m = perfect_square(D);
    if (!m) return std::nullopt;
    Int num = *m - (2 * n + 1) * c.b;
    Int den = 2 * c.b;
    if (num < den || num % den != 0) return std::nullopt;
    return num / den;
}

namespace detail {

// Same scan in unsigned 128-bit arithmetic; used when all quantities provably fit.
inline void find_all_fast(std::uint64_t a, std::uint64_t b, Variant v, std::uint64_t n_max,
                          std::vector<BalanceSolution>& out) {
    const u128 s = u128(4) * b * (b + a);
    const bool neg_lin = v == Variant::balancing && a > b;
    const u128 lin = v == Variant::balancing
                         ? (neg_lin ? u128(4) * b * (a - b) : u128(4) * b * (b - a))
                         : s;
    const u128 b2 = u128(b) * b;
    const u128 den = u128(2) * b;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        u128 D = s * n * n + b2;
        if (neg_lin) {
            D -= lin * n;
        } else {
            D += lin * n;
        }
        u128 m = isqrt_u128(D);
        if (m * m != D) continue;
        u128 sub = u128(2 * n + 1) * b;
        if (m < sub + den) continue;
        u128 num = m - sub;
        if (num % den != 0) continue;
        out.push_back(BalanceSolution{Int(std::uint64_t(n)), Int(std::uint64_t(num / den)), v, 1});
    }
}

}  // namespace detail

// All (a,b) balancing or cobalancing numbers with 1 <= n <= n_max, ascending.
// Exhaustive in n, so the result is complete within the bound.
inline std::vector<BalanceSolution> find_all(const CoeffPair& c, Variant v, const Int& n_max) {
    std::vector<BalanceSolution> out;
    if (n_max < 1) return out;
    // 128-bit path: D <= 8*b*(b+a)*n^2 + b^2 must stay well below 2^126.
    if (c.a < (Int(1) << 20) && c.b < (Int(1) << 20) && n_max < (Int(1) << 40)) {
        detail::find_all_fast(static_cast<std::uint64_t>(c.a), static_cast<std::uint64_t>(c.b), v,
                              static_cast<std::uint64_t>(n_max), out);
        return out;
    }
    for (Int n = 1; n <= n_max; ++n)
        if (auto r = balancer_of(n, c, v)) out.push_back(BalanceSolution{n, *r, v, 1});
    return out;
}

// Successor cobalancing number: with D the cobalancing discriminant of x,
// f(x) = ((2b + a) x + sqrt(D) + b) / a. For a in {1,2} no cobalancing number
// lies strictly between x and f(x), so iterating from 0 enumerates them all.
inline Int next_cobalancing(const Int& x, const CoeffPair& c) {
    if (x < 0) throw domain_error("next_cobalancing: x must be non-negative");
    Int D = detail::discriminant(x, c.a, c.b, Variant::cobalancing);
    auto m = perfect_square(D);
    if (!m)
        throw not_cobalancing_error("next_cobalancing: " + x.str() + " is not a (" + c.a.str() +
                                    "," + c.b.str() + ") cobalancing number");
    Int num = (2 * c.b + c.a) * x + *m + c.b;
    if (num % c.a != 0)
        throw not_cobalancing_error("next_cobalancing: successor of " + x.str() +
                                    " is not integral");
    return num / c.a;
}

namespace detail {

// k(k+1)(2k+1)/6.
inline Int sum_of_squares(const Int& k) { return k * (k + 1) * (2 * k + 1) / 6; }

inline u128 sum_of_squares_u128(u128 k) { return k * (k + 1) * (2 * k + 1) / 6; }

inline std::optional<Int> square_balancer_slow(const Int& n, const Int& a, const Int& b,
                                               Variant v) {
    Int lhs = a * sum_of_squares(v == Variant::balancing ? Int(n - 1) : n);
    Int base = sum_of_squares(n);
    if (lhs == 0) return Int(0);
    // rhs(r) = b * (S2(n+r) - S2(n)) strictly increases in r.
    Int hi = 1;
    while (b * (sum_of_squares(n + hi) - base) < lhs) hi <<= 1;
    Int lo = hi == 1 ? Int(0) : Int(hi >> 1);
    while (lo < hi) {
        Int mid = (lo + hi) / 2;
        if (b * (sum_of_squares(n + mid) - base) < lhs)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (b * (sum_of_squares(n + lo) - base) == lhs) return lo;
    return std::nullopt;
}

inline std::optional<Int> square_balancer_fast(std::uint64_t n, std::uint64_t a, std::uint64_t b,
                                               Variant v) {
    u128 lhs = u128(a) * sum_of_squares_u128(v == Variant::balancing ? n - 1 : n);
    u128 base = sum_of_squares_u128(n);
    if (lhs == 0) return Int(0);
    u128 hi = 1;
    while (u128(b) * (sum_of_squares_u128(n + hi) - base) < lhs) hi <<= 1;
    u128 lo = hi == 1 ? 0 : hi >> 1;
    while (lo < hi) {
        u128 mid = (lo + hi) / 2;
        if (u128(b) * (sum_of_squares_u128(n + mid) - base) < lhs)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (u128(b) * (sum_of_squares_u128(n + lo) - base) == lhs)
        return Int(std::uint64_t(lo));
    return std::nullopt;
}

}  // namespace detail

// Square balancer/cobalancer of n: the unique r >= 0 with
//   balancing:   a(1^2 + ... + (n-1)^2) = b((n+1)^2 + ... + (n+r)^2)
//   cobalancing: a(1^2 + ... + n^2)     = b((n+1)^2 + ... + (n+r)^2)
// found by doubling-then-binary search on the strictly increasing right side.
inline std::optional<Int> square_balancer_of(const Int& n, const CoeffPair& c, Variant v) {
    if (n < 1) throw domain_error("square_balancer_of: n must be positive");
    // Values stay comfortably inside 128 bits when (a+b)(3n)^3 does.
    if (c.a < (Int(1) << 20) && c.b < (Int(1) << 20) && n < (Int(1) << 30)) {
        return detail::square_balancer_fast(static_cast<std::uint64_t>(n),
                                            static_cast<std::uint64_t>(c.a),
                                            static_cast<std::uint64_t>(c.b), v);
    }
    return detail::square_balancer_slow(n, c.a, c.b, v);
}

// One hit of the quadratic-square scan: 4x^2 n^2 + 4x^2 n + 1 = m^2.
struct QuadSquareHit {
    Int x;
    Int n;
    Int m;
};

struct ConjectureScan {
    // Hits for x = 4y, 4y+1, 4y+3 (expected none).
    std::vector<QuadSquareHit> counterexamples;
    // Hits for the sanity residue x = 4y+2, which must contain (n=y, m=8y^2+8y+1).
    std::vector<QuadSquareHit> sanity_hits;
};

// Scans 4x^2 n^2 + 4x^2 n + 1 = m^2 over 1 <= y <= y_max, 1 <= n <= n_max for
// the residues x = 4y, 4y+1, 4y+3 (collecting any hit as a counterexample) and
// over x = 4y+2 as a sanity channel where hits are expected.
inline ConjectureScan scan_conjecture_41(const Int& y_max, const Int& n_max) {
    ConjectureScan out;
    for (Int y = 1; y <= y_max; ++y) {
        for (int residue : {0, 1, 3, 2}) {
            Int x = 4 * y + residue;
            Int fourx2 = 4 * x * x;
            for (Int n = 1; n <= n_max; ++n) {
                Int D = fourx2 * n * (n + 1) + 1;
                if (auto m = perfect_square(D)) {
                    auto& sink = residue == 2 ? out.sanity_hits : out.counterexamples;
                    sink.push_back(QuadSquareHit{x, n, *m});
                }
            }
        }
    }
    return out;
}

}  // namespace balans

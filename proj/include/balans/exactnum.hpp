#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace balans {

// Unbounded signed integers and canonical rationals (lowest terms, positive
// denominator). All arithmetic in this library is exact; nothing here rounds.
// Expression templates are off so every operator yields a plain value.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

struct balans_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct domain_error : balans_error {
    using balans_error::balans_error;
};
struct tie_error : balans_error {
    using balans_error::balans_error;
};
struct bracket_error : balans_error {
    using balans_error::balans_error;
};

inline Int numerator(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int denominator(const Rat& x) { return boost::multiprecision::denominator(x); }

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

// floor(p / q) for q > 0.
inline Int floor_div(const Int& p, const Int& q) {
    Int quo = p / q;
    if (p % q != 0 && p < 0) --quo;
    return quo;
}

inline Int floor_rat(const Rat& x) { return floor_div(numerator(x), denominator(x)); }

inline Int ceil_rat(const Rat& x) {
    Int f = floor_rat(x);
    return f + (Rat(f) == x ? 0 : 1);
}

// Closest integer to x. A value exactly halfway between two integers has no
// closest integer; that is reported as a tie_error instead of being rounded,
// since every caller in this library expects a strictly closest answer.
inline Int nearest_rat(const Rat& x) {
    Int f = floor_rat(x);
    Rat frac = x - Rat(f);
    Rat half(1, 2);
    if (frac < half) return f;
    if (frac > half) return f + 1;
    throw tie_error("nearest_rat: exact half-integer " + x.str());
}

// floor(sqrt(x)) for x >= 0; the result v satisfies v^2 <= x < (v+1)^2.
inline Int isqrt(const Int& x) {
    if (x < 0) throw domain_error("isqrt: negative input");
    if (x == 0) return 0;
    Int v = boost::multiprecision::sqrt(x);
    // sqrt() already floors for cpp_int; keep the correction anyway so the
    // postcondition does not depend on backend behaviour.
    while (v * v > x) --v;
    while ((v + 1) * (v + 1) <= x) ++v;
    return v;
}

// sqrt(x) when x is a perfect square, absent otherwise (negatives included).
inline std::optional<Int> perfect_square(const Int& x) {
    if (x < 0) return std::nullopt;
    // Cheap residue filter: squares mod 64 take few values.
    static constexpr bool kSquareMod64[64] = {
        true,  true,  false, false, true,  false, false, false, false, true,  false,
        false, false, false, false, false, true,  true,  false, false, false, false,
        false, false, false, true,  false, false, false, false, false, false, false,
        true,  false, false, true,  false, false, false, false, true,  false, false,
        false, false, false, false, false, true,  false, false, false, false, false,
        false, false, true,  false, false, false, false, false, false};
    if (!kSquareMod64[static_cast<unsigned>(x & 63)]) return std::nullopt;
    Int r = isqrt(x);
    if (r * r == x) return r;
    return std::nullopt;
}

// Exact rational interval [lo, hi]. Arithmetic on intervals is exact, so the
// usual outward-rounding of floating interval arithmetic degenerates to plain
// endpoint arithmetic; containment of the true value is preserved by each op.
struct RatInterval {
    Rat lo;
    Rat hi;

    RatInterval() = default;
    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw domain_error("RatInterval: lo > hi");
    }
    static RatInterval point(const Rat& v) { return RatInterval(v, v); }

    Rat width() const { return hi - lo; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool contains(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool straddles_zero() const { return lo <= 0 && 0 <= hi; }

    RatInterval operator-() const { return RatInterval(-hi, -lo); }
    RatInterval operator+(const RatInterval& o) const { return RatInterval(lo + o.lo, hi + o.hi); }
    RatInterval operator-(const RatInterval& o) const { return RatInterval(lo - o.hi, hi - o.lo); }
    RatInterval operator*(const RatInterval& o) const {
        Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        Rat mn = a, mx = a;
        for (const Rat* v : {&b, &c, &d}) {
            if (*v < mn) mn = *v;
            if (*v > mx) mx = *v;
        }
        return RatInterval(mn, mx);
    }

    RatInterval abs() const {
        if (lo >= 0) return *this;
        if (hi <= 0) return RatInterval(-hi, -lo);
        Rat m = -lo > hi ? -lo : hi;
        return RatInterval(Rat(0), m);
    }

    // 1/x for an interval not containing zero.
    RatInterval invert() const {
        if (straddles_zero()) throw domain_error("RatInterval::invert: interval contains zero");
        return RatInterval(Rat(1) / hi, Rat(1) / lo);
    }

    RatInterval pow(unsigned e) const {
        RatInterval acc = point(Rat(1));
        RatInterval base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }
};

// p(x) with coefficients in ascending degree order.
inline Rat eval_poly(const std::vector<Rat>& coeffs, const Rat& x) {
    Rat acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline RatInterval eval_poly(const std::vector<Rat>& coeffs, const RatInterval& x) {
    RatInterval acc = RatInterval::point(Rat(0));
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + RatInterval::point(*it);
    return acc;
}

// Shrinks a sign-change bracket around a real root of p by exact bisection
// until the bracket is no wider than `width`. Requires p(lo) and p(hi) to
// differ in sign (an endpoint evaluating to zero returns a point interval).
inline RatInterval real_root_enclosure(const std::vector<Rat>& coeffs, RatInterval bracket,
                                       const Rat& width) {
    if (width <= 0) throw domain_error("real_root_enclosure: width must be positive");
    Rat flo = eval_poly(coeffs, bracket.lo);
    Rat fhi = eval_poly(coeffs, bracket.hi);
    if (flo == 0) return RatInterval::point(bracket.lo);
    if (fhi == 0) return RatInterval::point(bracket.hi);
    if ((flo < 0) == (fhi < 0))
        throw bracket_error("real_root_enclosure: no sign change over bracket");
    Rat lo = bracket.lo, hi = bracket.hi;
    bool lo_neg = flo < 0;
    while (hi - lo > width) {
        Rat mid = (lo + hi) / 2;
        Rat fm = eval_poly(coeffs, mid);
        if (fm == 0) return RatInterval::point(mid);
        if ((fm < 0) == lo_neg)
            lo = mid;
        else
            hi = mid;
    }
    return RatInterval(lo, hi);
}

// Decimal constants of the Binet-style tail bound |T_n - c4 * alpha^n| < a * d^n,
// read exactly as printed.
struct BinetBoundConstants {
    Rat c4;
    Rat a_const;
    Rat d_const;
};

inline const BinetBoundConstants& binet_bound_constants() {
    static const BinetBoundConstants k{
        Rat(Int("33622811699"), boost::multiprecision::pow(Int(10), 11)),
        Rat(Int(51998), boost::multiprecision::pow(Int(10), 5)),
        Rat(Int(7373527), boost::multiprecision::pow(Int(10), 7)),
    };
    return k;
}

inline std::string to_string(const Rat& x) { return x.str(); }
inline std::string to_string(const Int& x) { return x.str(); }

}  // namespace balans

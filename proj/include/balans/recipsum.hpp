#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "balans/exactnum.hpp"
#include "balans/sequences.hpp"

namespace balans {

struct certification_error : balans_error {
    using balans_error::balans_error;
};
struct budget_error : balans_error {
    using balans_error::balans_error;
};
struct shape_error : balans_error {
    using balans_error::balans_error;
};

enum class SumSign { plain, alternating };
enum class DenomKind { term, partial_sum };

// A reciprocal-sum query: sum over j >= 0 of sign_j / denom_j where
// denom_j is c_{start + stride*j} (term) or sum_{i=1}^{start + stride*j} c_i
// (partial_sum), and sign_j is 1 (plain) or (-1)^j (alternating; the first
// summed term is positive, callers fold any global sign themselves).
struct SumSpec {
    Recurrence sequence;
    std::int64_t start = 1;
    std::int64_t stride = 1;
    SumSign sign = SumSign::plain;
    DenomKind denom = DenomKind::term;
};

struct CertifiedSum {
    RatInterval sum;        // encloses the exact value of the infinite sum
    std::size_t terms_used; // number of summed terms in the exact prefix
    std::string certificate;
};

enum class AnswerMode { floor, nearest };

inline const char* to_string(AnswerMode m) { return m == AnswerMode::floor ? "floor" : "nearest"; }

struct SumVerdict {
    RatInterval enclosure;  // of the inverse of the sum
    Int answer;
    AnswerMode mode = AnswerMode::floor;
    std::size_t terms_used = 0;
    std::string tail_certificate;
};

inline constexpr std::size_t kDefaultBudget = 512;

namespace detail {

inline Rat rat_pow(const Rat& x, unsigned e) {
    Rat acc(1), base = x;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

// Certified two-sided bound on consecutive term ratios: every ratio
// c_{k+1}/c_k at indices >= from_index (and forever after) lies in [g, h].
struct GrowthCert {
    Rat g;
    Rat h;
    std::int64_t from_index = 0;
    std::string how;
};

// Consecutive positive values c_{w0}, ..., c_{w0+W-1} of rec. Observes ratios
// over the trailing part of the window and extends them to all later indices
// by a shape-specific induction. The certified bounds hold for every ratio at
// indices >= from_needed, so the observation window must reach back that far.
inline std::optional<GrowthCert> certify_growth(const Recurrence& rec,
                                                const std::vector<Rat>& values, std::int64_t w0,
                                                std::int64_t from_needed) {
    const std::size_t W = values.size();
    const int d = rec.depth();
    if (W < static_cast<std::size_t>(d) + 2) return std::nullopt;
    const std::int64_t wlast = w0 + static_cast<std::int64_t>(W) - 1;
    std::size_t H = W / 2;
    if (from_needed < wlast && static_cast<std::size_t>(wlast - from_needed) > H)
        H = static_cast<std::size_t>(wlast - from_needed);
    if (H < static_cast<std::size_t>(d)) H = static_cast<std::size_t>(d);
    if (H > W - 1) H = W - 1;
    if (wlast - static_cast<std::int64_t>(H) > from_needed) return std::nullopt;

    Rat g0, h0;
    for (std::size_t i = W - 1 - H; i + 1 < W; ++i) {
        if (values[i] <= 0 || values[i + 1] <= 0) return std::nullopt;
        Rat ratio = values[i + 1] / values[i];
        if (i == W - 1 - H) {
            g0 = h0 = ratio;
        } else {
            if (ratio < g0) g0 = ratio;
            if (ratio > h0) h0 = ratio;
        }
    }
    if (g0 <= 1) return std::nullopt;
    const Rat& c_last = values.back();
    const std::int64_t from = wlast - static_cast<std::int64_t>(H);

    bool nonneg = rec.constant >= 0;
    for (const Rat& x : rec.coeffs) nonneg = nonneg && x >= 0;
    if (nonneg) {
        // c_{k+1-j} in [c_k / h^{j-1}, c_k / g^{j-1}] by induction, so the
        // next ratio stays inside [sum x_j/h^{j-1}, sum x_j/g^{j-1} + s/c]:
        // the candidate [g, h] certifies itself when that image fits inside.
        // The observed spread [g0, h0] may sit asymmetrically around the
        // growth root, so progressively widened candidates are tried too.
        Rat spread = h0 - g0;
        if (spread == 0) spread = h0 / 1000000;
        Rat pad(0);
        for (int attempt = 0; attempt < 8; ++attempt) {
            Rat g = g0 - pad;
            Rat h = h0 + pad;
            pad = pad == 0 ? spread : pad * 4;
            if (g <= 1) break;
            Rat low(0), high = rec.constant / c_last;
            for (int j = 0; j < d; ++j) {
                low += rec.coeffs[static_cast<std::size_t>(j)] / rat_pow(h, static_cast<unsigned>(j));
                high += rec.coeffs[static_cast<std::size_t>(j)] / rat_pow(g, static_cast<unsigned>(j));
            }
            if (low >= g && high <= h)
                return GrowthCert{g, h, from, "ratio in [" + g.str() + ", " + h.str() + "]"};
        }
        return std::nullopt;
    }
    if (d == 2 && rec.coeffs[1] == -1 && rec.coeffs[0] >= 2 && rec.constant >= 0) {
        const Rat& q = rec.coeffs[0];
        Rat h = q + rec.constant / c_last;
        if (h < h0) h = h0;
        // q - 1/g >= g keeps the observed lower ratio; otherwise fall back to
        // the unconditional floor q-1 (terms increase, and the subtracted
        // c_{k-1} never exceeds c_k).
        if (g0 * g0 - q * g0 + 1 <= 0)
            return GrowthCert{g0, h, from, "ratio in [" + g0.str() + ", " + h.str() + "]"};
        Rat g = q - 1;
        if (g > 1) {
            if (g > g0) g = g0;
            return GrowthCert{g, h, from, "ratio in [" + g.str() + ", " + h.str() + "]"};
        }
    }
    return std::nullopt;
}

// Linear growth floor c_k - c_{k-1} >= k*t (hence c_k >= t k(k+1)/2), valid
// for the depth-2 shapes whose increments grow at least arithmetically.
// Homogeneous shapes need q >= 3: for q = 2 the second increment is only t
// (the Pell numbers already break the bound at n = 2), and those shapes grow
// geometrically anyway.
inline std::optional<Rat> certify_linear_growth(const Recurrence& rec) {
    if (rec.depth() != 2) return std::nullopt;
    Rat c0 = term(rec, 0);
    Rat c1 = term(rec, 1);
    if (c0 != 0 || c1 <= 0) return std::nullopt;
    const Rat& q = rec.coeffs[0];
    const Rat& r = rec.coeffs[1];
    if (rec.constant == 0) {
        if (q >= 3 && r >= -1) return c1;
        return std::nullopt;
    }
    if (r == -1 && q >= 2 && rec.constant > 0 && c1 == rec.constant) return rec.constant;
    return std::nullopt;
}

}  // namespace detail

// Exact partial sum of the first P terms plus a proven tail majorant.
// Plain sums use a geometric tail with a certified growth ratio (or, failing
// that, the arithmetic-increment bound); alternating sums use the first
// omitted term once the denominators are verified strictly increasing.
inline CertifiedSum certified_sum(const SumSpec& spec, std::size_t terms_budget) {
    if (terms_budget == 0) throw domain_error("certified_sum: budget must be positive");
    if (spec.stride < 1) throw domain_error("certified_sum: stride must be positive");
    if (terms_budget > (1u << 22) || spec.stride > (1 << 20) ||
        spec.start > (std::int64_t(1) << 40) || spec.start < -(std::int64_t(1) << 40))
        throw domain_error("certified_sum: query out of supported index range");
    const std::size_t P = terms_budget;
    const std::int64_t last = spec.start + spec.stride * static_cast<std::int64_t>(P);
    const bool partial = spec.denom == DenomKind::partial_sum;
    if (partial && spec.start < 1)
        throw domain_error("certified_sum: partial-sum denominators need start >= 1");

    // A few terms beyond the tail anchor feed the growth certificate even at
    // tiny budgets.
    const std::int64_t wend = last + spec.sequence.depth() + 3;
    const std::int64_t w0 = partial ? 1 : spec.start;
    const auto win = window(spec.sequence, w0, static_cast<std::size_t>(wend - w0 + 1));
    const std::vector<Rat>& c = win.terms;

    for (std::int64_t i = spec.start; i <= last; ++i)
        if (c[static_cast<std::size_t>(i - w0)] <= 0)
            throw domain_error("certified_sum: nonpositive term at index " + std::to_string(i) +
                               " of " + spec.sequence.label);
    if (partial)
        for (std::int64_t i = 1; i < spec.start; ++i)
            if (c[static_cast<std::size_t>(i - w0)] < 0)
                throw domain_error("certified_sum: negative term inside partial sums of " +
                                   spec.sequence.label);

    // Denominators d_0..d_P (d_P backs the tail bound).
    std::vector<Rat> denoms(P + 1);
    if (partial) {
        Rat prefix(0);
        std::int64_t next = spec.start;
        std::size_t j = 0;
        for (std::int64_t i = 1; i <= last; ++i) {
            prefix += c[static_cast<std::size_t>(i - w0)];
            if (i == next) {
                denoms[j++] = prefix;
                next += spec.stride;
            }
        }
    } else {
        for (std::size_t j = 0; j <= P; ++j)
            denoms[j] = c[static_cast<std::size_t>(spec.stride * static_cast<std::int64_t>(j))];
    }

    Rat s_p(0);
    for (std::size_t j = 0; j < P; ++j) {
        if (spec.sign == SumSign::alternating && (j & 1))
            s_p -= 1 / denoms[j];
        else
            s_p += 1 / denoms[j];
    }

    auto cert = detail::certify_growth(spec.sequence, c, w0, last);

    if (spec.sign == SumSign::alternating) {
        for (std::size_t j = 0; j < P; ++j)
            if (denoms[j] >= denoms[j + 1])
                throw certification_error(
                    "alternating sum: denominators not strictly increasing in the window");
        if (!cert)
            throw certification_error("alternating sum: no growth certificate for " +
                                      spec.sequence.label);
        Rat step = 1 / denoms[P];
        Rat other = (P & 1) ? s_p - step : s_p + step;
        RatInterval sum = s_p <= other ? RatInterval(s_p, other) : RatInterval(other, s_p);
        return CertifiedSum{sum, P,
                            "alternating tail: first omitted term 1/" + denoms[P].str() +
                                ", denominators increasing (" + cert->how + ")"};
    }

    // The tail sum_{j>=P} 1/d_j is bounded through the term at the same index:
    // d_j >= c_{start + stride*j} holds for both denominator kinds.
    const Rat& c_anchor = c[static_cast<std::size_t>(last - w0)];
    if (cert) {
        Rat G = detail::rat_pow(cert->g, static_cast<unsigned>(spec.stride));
        Rat tail = (1 / c_anchor) * G / (G - 1);
        return CertifiedSum{RatInterval(s_p, s_p + tail), P,
                            "geometric tail: " + cert->how + ", stride ratio " + G.str() +
                                ", tail <= " + tail.str()};
    }
    if (auto t = detail::certify_linear_growth(spec.sequence)) {
        // c_i >= t*i(i+1)/2, so sum_{j>=P} 1/c_{i_j} telescopes through
        // 1/(x(x+1)) once per stride block.
        Rat L(last);
        Rat tail = (2 / *t) * (1 / (L * (L + 1)) + 1 / (Rat(spec.stride) * L));
        return CertifiedSum{RatInterval(s_p, s_p + tail), P,
                            "arithmetic-increment tail: t = " + t->str() + ", tail <= " +
                                tail.str()};
    }
    throw certification_error("no tail certificate for " + spec.sequence.label);
}

// Inverts a certified enclosure and takes its floor or nearest integer,
// doubling the term count until the whole interval agrees on one answer.
inline SumVerdict inverse_answer(const SumSpec& spec, AnswerMode mode,
                                 std::size_t budget_cap = kDefaultBudget) {
    std::size_t P = budget_cap < 16 ? budget_cap : 16;
    bool cert_failed_always = true;
    for (;;) {
        std::optional<CertifiedSum> cs;
        try {
            cs = certified_sum(spec, P);
            cert_failed_always = false;
        } catch (const certification_error&) {
            if (P >= budget_cap) throw;
        }
        if (cs && !cs->sum.straddles_zero()) {
            RatInterval inv = cs->sum.invert();
            if (mode == AnswerMode::floor) {
                Int flo = floor_rat(inv.lo);
                if (flo == floor_rat(inv.hi))
                    return SumVerdict{inv, flo, mode, cs->terms_used, cs->certificate};
            } else {
                Int cand = floor_rat(inv.lo + Rat(1, 2));
                Rat half(1, 2);
                if (Rat(cand) - half < inv.lo && inv.hi < Rat(cand) + half)
                    return SumVerdict{inv, cand, mode, cs->terms_used, cs->certificate};
            }
        }
        if (P >= budget_cap) {
            if (cert_failed_always)
                throw certification_error("inverse_answer: growth certification failed up to " +
                                          std::to_string(budget_cap) + " terms");
            throw budget_error("inverse_answer: undecidable within " +
                               std::to_string(budget_cap) + " terms");
        }
        P = P * 2 > budget_cap ? budget_cap : P * 2;
    }
}

enum class CheckStatus { match, mismatch, vacuous, undecidable, branch_undefined };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::match: return "match";
        case CheckStatus::mismatch: return "mismatch";
        case CheckStatus::vacuous: return "vacuous";
        case CheckStatus::undecidable: return "undecidable";
        case CheckStatus::branch_undefined: return "branch-undefined";
    }
    return "?";
}

struct CheckReport {
    std::string subject;
    CheckStatus status = CheckStatus::match;
    std::optional<Rat> expected;
    std::optional<Int> answer;
    std::optional<RatInterval> enclosure;
    bool hypotheses_hold = true;
    std::string note;
};

namespace detail {

inline CheckReport with_answer(CheckReport rep, const SumVerdict& v) {
    rep.answer = v.answer;
    rep.enclosure = v.enclosure;
    return rep;
}

}  // namespace detail

// Floor identity for the shifted depth-2 shape c_{k+1} = q c_k - c_{k-1} + s
// with c_0 = 0, c_1 = s: the floor of the inverted tail sum from n should be
// c_n - c_{n-1} - 1 whenever s > 1/2 and (q-s)c_n - 2c_{n-1} + s - 1 >= 0.
// A failed hypothesis yields "vacuous" (the observed floor is still recorded).
inline CheckReport check_shifted_floor(const Recurrence& rec, std::int64_t n,
                                       std::size_t budget = kDefaultBudget) {
    if (rec.depth() != 2 || rec.coeffs[1] != -1 || rec.constant == 0 || term(rec, 0) != 0 ||
        term(rec, 1) != rec.constant)
        throw shape_error("check_shifted_floor: need c_{k+1} = q c_k - c_{k-1} + s with c_0 = 0, "
                          "c_1 = s, got " + rec.label);
    if (n < 1) throw domain_error("check_shifted_floor: n must be positive");
    const Rat q = rec.coeffs[0];
    const Rat s = rec.constant;
    auto w = window(rec, n - 1, 2);
    const Rat& c_prev = w.terms[0];
    const Rat& c_n = w.terms[1];

    CheckReport rep;
    rep.subject = rec.label + ", n=" + std::to_string(n);
    rep.hypotheses_hold = q >= 2 && s > Rat(1, 2) && (q - s) * c_n - 2 * c_prev + s - 1 >= 0;
    rep.expected = c_n - c_prev - 1;
    try {
        auto v = inverse_answer(SumSpec{rec, n, 1, SumSign::plain, DenomKind::term},
                                AnswerMode::floor, budget);
        rep = detail::with_answer(std::move(rep), v);
        bool ok = Rat(*rep.answer) == *rep.expected;
        rep.status = rep.hypotheses_hold ? (ok ? CheckStatus::match : CheckStatus::mismatch)
                                         : CheckStatus::vacuous;
        if (!rep.hypotheses_hold) rep.note = ok ? "vacuous-but-matching" : "vacuous, differs";
    } catch (const budget_error& e) {
        rep.status = CheckStatus::undecidable;
        rep.note = e.what();
    }
    return rep;
}

// Floor identity for homogeneous depth-2 recurrences c_{k+1} = q c_k + r c_{k-1}
// with c_0 = 0, c_1 = t > 0. Case q >= 3, -1 <= r < 0 expects c_n - c_{n-1} - 1
// throughout; case q >= 2, r >= 0 splits on the parity of n. Parameters outside
// both cases are a shape error.
inline CheckReport check_homogeneous_floor(const Recurrence& rec, std::int64_t n,
                                           std::size_t budget = kDefaultBudget) {
    if (rec.depth() != 2 || rec.constant != 0 || term(rec, 0) != 0 || term(rec, 1) <= 0)
        throw shape_error("check_homogeneous_floor: need homogeneous depth 2 with c_0 = 0, "
                          "c_1 > 0, got " + rec.label);
    const Rat q = rec.coeffs[0];
    const Rat r = rec.coeffs[1];
    const bool case1 = q >= 3 && r >= -1 && r < 0;
    const bool case2 = q >= 2 && r >= 0;
    if (!case1 && !case2)
        throw shape_error("check_homogeneous_floor: (q, r) = (" + q.str() + ", " + r.str() +
                          ") fits neither parameter case");
    if (n < 1) throw domain_error("check_homogeneous_floor: n must be positive");
    const Rat t = term(rec, 1);
    auto w = window(rec, n - 1, 3);
    const Rat& c_prev = w.terms[0];
    const Rat& c_n = w.terms[1];
    const Rat& c_next = w.terms[2];

    const bool odd = n % 2 != 0;
    Rat side = t * t * detail::rat_pow(-r, static_cast<unsigned>(n - 1));
    bool hyp = (case1 || odd) ? side <= c_next - c_prev - 1 : side > -c_next + c_prev - 1;

    CheckReport rep;
    rep.subject = rec.label + ", n=" + std::to_string(n);
    rep.hypotheses_hold = hyp;
    rep.expected = case1 || odd ? c_n - c_prev - 1 : c_n - c_prev;
    try {
        auto v = inverse_answer(SumSpec{rec, n, 1, SumSign::plain, DenomKind::term},
                                AnswerMode::floor, budget);
        rep = detail::with_answer(std::move(rep), v);
        bool ok = Rat(*rep.answer) == *rep.expected;
        rep.status = hyp ? (ok ? CheckStatus::match : CheckStatus::mismatch)
                         : CheckStatus::vacuous;
        if (!hyp) rep.note = ok ? "vacuous-but-matching" : "vacuous, differs";
    } catch (const budget_error& e) {
        rep.status = CheckStatus::undecidable;
        rep.note = e.what();
    }
    return rep;
}

// Floor of the inverted Tribonacci tail sum from n, checked against the branch
// selected by the sign of the backward term T_{-(n+1)}; a zero backward term
// leaves the branch undefined and is reported as such.
inline CheckReport check_tribonacci_floor(std::int64_t n, std::size_t budget = kDefaultBudget) {
    if (n < 1) throw domain_error("check_tribonacci_floor: n must be positive");
    Recurrence trib = tribonacci();
    Rat back = term(trib, -(n + 1));
    auto w = window(trib, n - 1, 2);
    Rat diff = w.terms[1] - w.terms[0];

    CheckReport rep;
    rep.subject = "n=" + std::to_string(n);
    try {
        auto v = inverse_answer(SumSpec{trib, n, 1, SumSign::plain, DenomKind::term},
                                AnswerMode::floor, budget);
        rep = detail::with_answer(std::move(rep), v);
        if (back == 0) {
            rep.status = CheckStatus::branch_undefined;
            rep.note = "backward term is zero; candidates " + diff.str() + " and " +
                       Rat(diff - 1).str() + ", observed " + rep.answer->str();
            return rep;
        }
        rep.expected = back < 0 ? diff : diff - 1;
        rep.status = Rat(*rep.answer) == *rep.expected ? CheckStatus::match
                                                       : CheckStatus::mismatch;
    } catch (const budget_error& e) {
        rep.status = CheckStatus::undecidable;
        rep.note = e.what();
    }
    return rep;
}

enum class EveryMthMode { nearest, floor_with_sign };

namespace detail {

// Certified sign of the correction series
//   sum_{p>=0} (T_i^2 - T_{i+m} T_{i-m}) / (T_i (T_i - T_{i-m}) (T_{i+m} - T_i)),
// i = n + m p, for the Tribonacci numbers. Returns +1 or -1.
inline int correction_series_sign(std::int64_t n, std::int64_t m, std::size_t budget_cap) {
    Recurrence trib = tribonacci();
    for (std::size_t P = 16;; P = P * 2 > budget_cap ? budget_cap : P * 2) {
        const std::int64_t lastw = n + m * static_cast<std::int64_t>(P + 1) + 4;
        const std::int64_t w0 = n - m;
        auto win = window(trib, w0, static_cast<std::size_t>(lastw - w0 + 1));
        auto T = [&](std::int64_t i) -> const Rat& {
            return win.terms[static_cast<std::size_t>(i - w0)];
        };

        Rat partial(0);
        for (std::size_t p = 0; p < P; ++p) {
            std::int64_t i = n + m * static_cast<std::int64_t>(p);
            Rat num = T(i) * T(i) - T(i + m) * T(i - m);
            Rat den = T(i) * (T(i) - T(i - m)) * (T(i + m) - T(i));
            if (den == 0)
                throw shape_error("correction series undefined: equal adjacent terms at i = " +
                                  std::to_string(i));
            partial += num / den;
        }

        auto cert = certify_growth(trib, win.terms, w0,
                                   n + m * (static_cast<std::int64_t>(P) - 1));
        if (cert) {
            Rat gm = rat_pow(cert->g, static_cast<unsigned>(m));
            Rat hm = rat_pow(cert->h, static_cast<unsigned>(m));
            // |term_p| <= (1 + (h/g)^m) / ((1 - g^-m)(g^m - 1)) / T_i for p >= P.
            Rat K = (1 + hm / gm) / ((1 - 1 / gm) * (gm - 1));
            std::int64_t iP = n + m * static_cast<std::int64_t>(P);
            Rat tail = K * (1 / T(iP)) * gm / (gm - 1);
            if (partial > tail) return 1;
            if (partial < -tail) return -1;
        }
        if (P >= budget_cap)
            throw budget_error("correction series sign undecidable within " +
                               std::to_string(budget_cap) + " terms");
    }
}

}  // namespace detail

// Strided Tribonacci reciprocal sums, start index n, stride m (n >= m >= 1).
// nearest mode compares the closest integer against T_n - T_{n-m}. The
// floor_with_sign mode first pins the sign of the correction series, which
// selects between T_n - T_{n-m} (negative) and T_n - T_{n-m} - 1 (positive),
// then checks the certified floor against that branch.
inline CheckReport check_every_mth(std::int64_t n, std::int64_t m, EveryMthMode mode,
                                   std::size_t budget = kDefaultBudget) {
    if (m < 1 || n < m) throw domain_error("check_every_mth: need n >= m >= 1");
    Recurrence trib = tribonacci();
    Rat expectation = term(trib, n) - term(trib, n - m);

    CheckReport rep;
    rep.subject = "(n,m)=(" + std::to_string(n) + "," + std::to_string(m) + ")";
    SumSpec spec{trib, n, m, SumSign::plain, DenomKind::term};
    try {
        if (mode == EveryMthMode::nearest) {
            auto v = inverse_answer(spec, AnswerMode::nearest, budget);
            rep = detail::with_answer(std::move(rep), v);
            rep.expected = expectation;
        } else {
            if (expectation == 0) {
                rep.status = CheckStatus::branch_undefined;
                rep.note = "T_n equals T_{n-m}; the correction series is undefined";
                return rep;
            }
            int sign;
            try {
                sign = detail::correction_series_sign(n, m, budget);
            } catch (const shape_error& e) {
                rep.status = CheckStatus::branch_undefined;
                rep.note = e.what();
                return rep;
            }
            auto v = inverse_answer(spec, AnswerMode::floor, budget);
            rep = detail::with_answer(std::move(rep), v);
            rep.expected = sign < 0 ? expectation : expectation - 1;
            rep.note = sign < 0 ? "correction series negative" : "correction series positive";
        }
        rep.status = Rat(*rep.answer) == *rep.expected ? CheckStatus::match
                                                       : CheckStatus::mismatch;
    } catch (const budget_error& e) {
        rep.status = CheckStatus::undecidable;
        rep.note = e.what();
    }
    return rep;
}

// Alternating Tribonacci sums sum_{k>=n} (-1)^k / T_{km-j} with 0 <= j < m:
// the closest integer of the inverse should be (-1)^n (T_{mn-j} + T_{mn-j-m}).
inline CheckReport check_alternating(std::int64_t n, std::int64_t m, std::int64_t j,
                                     std::size_t budget = kDefaultBudget) {
    if (m < 1 || j < 0 || j >= m) throw domain_error("check_alternating: need 0 <= j < m");
    if (m * n - j - m < 0) throw domain_error("check_alternating: need mn - j - m >= 0");
    Recurrence trib = tribonacci();
    const std::int64_t start = m * n - j;
    const bool negate = n % 2 != 0;  // global factor (-1)^n

    CheckReport rep;
    rep.subject = "(n,m,j)=(" + std::to_string(n) + "," + std::to_string(m) + "," +
                  std::to_string(j) + ")";
    Rat mag = term(trib, start) + term(trib, start - m);
    rep.expected = negate ? -mag : mag;
    try {
        auto v = inverse_answer(SumSpec{trib, start, m, SumSign::alternating, DenomKind::term},
                                AnswerMode::nearest, budget);
        rep.answer = negate ? Int(-v.answer) : v.answer;
        rep.enclosure = negate ? -v.enclosure : v.enclosure;
        rep.status = Rat(*rep.answer) == *rep.expected ? CheckStatus::match
                                                       : CheckStatus::mismatch;
    } catch (const budget_error& e) {
        rep.status = CheckStatus::undecidable;
        rep.note = e.what();
    }
    return rep;
}

// Reciprocal sums of Tribonacci prefix sums: denominators sum_{i=1}^{mk} T_i
// for k >= n. The closest integer of the inverse should be
// (T_{mn+2} + T_{mn} - T_{mn-m+2} - T_{mn-m}) / 2. The prefix sums are also
// cross-checked against the closed form (T_{i+2} + T_i - 1)/2.
inline CheckReport check_sum_of_sums(std::int64_t n, std::int64_t m,
                                     std::size_t budget = kDefaultBudget) {
    if (n < 1 || m < 1) throw domain_error("check_sum_of_sums: need n, m >= 1");
    Recurrence trib = tribonacci();

    // Closed-form cross-check over the leading indices actually summed.
    {
        Rat prefix(0);
        auto win = window(trib, 1, static_cast<std::size_t>(m * (n + 8)) + 2);
        for (std::int64_t i = 1; i <= m * (n + 8); ++i) {
            prefix += win.terms[static_cast<std::size_t>(i - 1)];
            Rat closed = (win.terms[static_cast<std::size_t>(i + 1)] +
                          win.terms[static_cast<std::size_t>(i - 1)] - 1) /
                         2;
            if (prefix != closed)
                throw balans_error("prefix-sum closed form failed at i = " + std::to_string(i));
        }
    }

    CheckReport rep;
    rep.subject = "(n,m)=(" + std::to_string(n) + "," + std::to_string(m) + ")";
    rep.expected = (term(trib, m * n + 2) + term(trib, m * n) - term(trib, m * n - m + 2) -
                    term(trib, m * n - m)) /
                   2;
    try {
        auto v = inverse_answer(
            SumSpec{trib, m * n, m, SumSign::plain, DenomKind::partial_sum},
            AnswerMode::nearest, budget);
        rep = detail::with_answer(std::move(rep), v);
        rep.status = Rat(*rep.answer) == *rep.expected ? CheckStatus::match
                                                       : CheckStatus::mismatch;
    } catch (const budget_error& e) {
        rep.status = CheckStatus::undecidable;
        rep.note = e.what();
    }
    return rep;
}

// Depth-3 homogeneous generalizations: reports whether G_n - G_{n-k} is the
// certified closest integer of the inverted sum, and whether exact equality is
// consistent with the enclosure. Growth certification failures propagate.
inline CheckReport check_generalized(const Recurrence& G, std::int64_t n, std::int64_t k,
                                     std::size_t budget = kDefaultBudget) {
    if (G.depth() != 3 || G.constant != 0)
        throw shape_error("check_generalized: need a homogeneous depth-3 recurrence, got " +
                          G.label);
    if (k < 1 || n < k) throw domain_error("check_generalized: need n >= k >= 1");

    CheckReport rep;
    rep.subject = G.label + ", (n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")";
    rep.expected = term(G, n) - term(G, n - k);
    try {
        auto v = inverse_answer(SumSpec{G, n, k, SumSign::plain, DenomKind::term},
                                AnswerMode::nearest, budget);
        rep = detail::with_answer(std::move(rep), v);
        bool nearest_ok = Rat(*rep.answer) == *rep.expected;
        bool equality_consistent = rep.enclosure->contains(*rep.expected);
        rep.status = nearest_ok ? CheckStatus::match : CheckStatus::mismatch;
        rep.note = equality_consistent ? "exact equality consistent with enclosure"
                                       : "exact equality excluded by enclosure";
    } catch (const budget_error& e) {
        rep.status = CheckStatus::undecidable;
        rep.note = e.what();
    }
    return rep;
}

namespace detail {

// |T_n - C alpha^n| < a d^n for 1 <= n <= n_max, decided by interval
// arithmetic with the enclosure of alpha (the real root of x^3 - x^2 - x - 1)
// refined until every instance is decidable. The leading coefficient C is
// either the enclosure of the true value 1/(-alpha^2 + 4 alpha - 1), or the
// printed 11-digit truncation taken exactly.
inline std::vector<CheckReport> binet_check_impl(std::int64_t n_max, bool printed_c4) {
    std::vector<CheckReport> out;
    if (n_max < 1) return out;
    const auto& k = binet_bound_constants();
    const std::vector<Rat> poly{Rat(-1), Rat(-1), Rat(-1), Rat(1)};

    Rat width(1, 1000000);
    RatInterval alpha = real_root_enclosure(poly, RatInterval(Rat(1), Rat(2)), width);
    auto leading = [&]() -> RatInterval {
        if (printed_c4) return RatInterval::point(k.c4);
        RatInterval four_alpha = RatInterval::point(Rat(4)) * alpha;
        return ((-(alpha * alpha)) + four_alpha - RatInterval::point(Rat(1))).invert();
    };

    Recurrence trib = tribonacci();
    auto win = window(trib, 1, static_cast<std::size_t>(n_max));

    RatInterval coeff = leading();
    Rat dn(1);
    RatInterval alpha_n = RatInterval::point(Rat(1));
    for (std::int64_t n = 1; n <= n_max; ++n) {
        dn *= k.d_const;
        alpha_n = alpha_n * alpha;
        Rat bound = k.a_const * dn;
        CheckReport rep;
        rep.subject = "n=" + std::to_string(n);
        for (int refine = 0;; ++refine) {
            RatInterval err =
                (RatInterval::point(win.terms[static_cast<std::size_t>(n - 1)]) -
                 coeff * alpha_n)
                    .abs();
            if (err.hi < bound) {
                rep.status = CheckStatus::match;
                break;
            }
            if (err.lo >= bound) {
                rep.status = CheckStatus::mismatch;
                rep.note = "bound violated";
                break;
            }
            if (refine >= 40) throw budget_error("binet bound undecidable at n = " +
                                                 std::to_string(n));
            width /= 1000000;
            alpha = real_root_enclosure(poly, alpha, width);
            alpha_n = alpha.pow(static_cast<unsigned>(n));
            coeff = leading();
        }
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace detail

// Verifies |T_n - c4 alpha^n| < a d^n for 1 <= n <= n_max with c4 the true
// Binet coefficient 1/(-alpha^2 + 4 alpha - 1), carried as an interval. The
// printed decimal 0.33622811699 is its truncation (see
// binet_printed_c4_is_truncation); taking the truncation literally breaks the
// inequality once (true_c4 - printed) alpha^n outgrows a d^n, around n = 27,
// which check_binet_bound_printed exposes.
inline std::vector<CheckReport> check_binet_bound(std::int64_t n_max) {
    return detail::binet_check_impl(n_max, false);
}

// The same inequality with the printed decimal read exactly as a rational.
inline std::vector<CheckReport> check_binet_bound_printed(std::int64_t n_max) {
    return detail::binet_check_impl(n_max, true);
}

// Confirms c4 <= 1/(-alpha^2 + 4 alpha - 1) < c4 + 10^-11: the printed
// decimal is the truncation of the true coefficient.
inline bool binet_printed_c4_is_truncation() {
    const auto& k = binet_bound_constants();
    const std::vector<Rat> poly{Rat(-1), Rat(-1), Rat(-1), Rat(1)};
    Rat width(1, Int("100000000000000000"));
    RatInterval alpha = real_root_enclosure(poly, RatInterval(Rat(1), Rat(2)), width);
    RatInterval denom = (-(alpha * alpha)) + RatInterval::point(Rat(4)) * alpha -
                        RatInterval::point(Rat(1));
    RatInterval coeff = denom.invert();
    Rat ulp(1, boost::multiprecision::pow(Int(10), 11));
    return k.c4 <= coeff.lo && coeff.hi < k.c4 + ulp;
}

}  // namespace balans

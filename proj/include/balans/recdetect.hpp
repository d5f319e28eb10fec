#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "balans/exactnum.hpp"
#include "balans/sequences.hpp"

namespace balans {

struct arity_error : balans_error {
    using balans_error::balans_error;
};

struct DetectionResult {
    Recurrence recurrence;       // detected coefficients and constant
    std::size_t verified_terms;  // terms beyond the solve block that checked out
    std::string tuple_text;
};

namespace detail {

// Solves the square exact system A x = b by Gaussian elimination over Rat.
// Returns nothing when the system is singular (underdetermined) or inconsistent.
inline std::optional<std::vector<Rat>> solve_exact(std::vector<std::vector<Rat>> A,
                                                   std::vector<Rat> b) {
    const std::size_t n = A.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && A[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(A[pivot], A[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || A[row][col] == 0) continue;
            Rat f = A[row][col] / A[col][col];
            for (std::size_t k = col; k < n; ++k) A[row][k] -= f * A[col][k];
            b[row] -= f * b[col];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
    return x;
}

inline std::string render_value(const Rat& v) {
    return v.str();  // canonical: "p/q", integers without denominator
}

}  // namespace detail

// "(x1, x2, ..., xd)" with a nonzero constant suffixed as "_x0".
inline std::string render_tuple(const std::vector<Rat>& coeffs, const Rat& constant) {
    std::string out = "(";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out += ", ";
        out += detail::render_value(coeffs[i]);
    }
    if (constant != 0) out += ", _" + detail::render_value(constant);
    out += ")";
    return out;
}

inline std::string render_tuple(const DetectionResult& r) {
    return render_tuple(r.recurrence.coeffs, r.recurrence.constant);
}

// Fits c_n = x1 c_{n-1} + ... + xd c_{n-d} [+ x0] to the supplied terms.
// The first depth+unknowns terms form the solve block; every later term must
// satisfy the solved recurrence exactly, otherwise the fit is rejected.
inline std::optional<DetectionResult> detect_fixed(const std::vector<Rat>& terms, int depth,
                                                   bool with_constant) {
    if (depth < 1) throw arity_error("detect_fixed: depth must be positive");
    const std::size_t u = static_cast<std::size_t>(depth) + (with_constant ? 1 : 0);
    if (terms.size() < 2 * u)
        throw arity_error("detect_fixed: need at least " + std::to_string(2 * u) + " terms");

    const std::size_t d = static_cast<std::size_t>(depth);
    std::vector<std::vector<Rat>> A(u, std::vector<Rat>(u));
    std::vector<Rat> rhs(u);
    for (std::size_t i = 0; i < u; ++i) {
        for (std::size_t j = 0; j < d; ++j) A[i][j] = terms[d + i - 1 - j];
        if (with_constant) A[i][d] = 1;
        rhs[i] = terms[d + i];
    }
    auto sol = detail::solve_exact(std::move(A), std::move(rhs));
    if (!sol) return std::nullopt;

    std::vector<Rat> coeffs(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(d));
    Rat constant = with_constant ? (*sol)[d] : Rat(0);

    std::size_t verified = 0;
    for (std::size_t i = d + u; i < terms.size(); ++i) {
        Rat predicted = constant;
        for (std::size_t j = 0; j < d; ++j) predicted += coeffs[j] * terms[i - 1 - j];
        if (predicted != terms[i]) return std::nullopt;
        ++verified;
    }

    DetectionResult out;
    out.recurrence.coeffs = coeffs;
    out.recurrence.constant = constant;
    out.recurrence.initial.assign(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(d));
    out.recurrence.base = 0;
    out.recurrence.label = "detected";
    out.verified_terms = verified;
    out.tuple_text = render_tuple(coeffs, constant);
    return out;
}

// Tries depth 1..max_depth, homogeneous before constant at each depth, and
// returns the first fit. Minimal depth wins; ties break toward no constant.
inline std::optional<DetectionResult> detect_minimal(const std::vector<Rat>& terms,
                                                     int max_depth) {
    if (terms.size() < 4) return std::nullopt;
    for (int d = 1; d <= max_depth; ++d) {
        for (int e = 0; e <= 1; ++e) {
            if (terms.size() < 2 * (static_cast<std::size_t>(d) + static_cast<std::size_t>(e)))
                continue;
            if (auto r = detect_fixed(terms, d, e != 0)) return r;
        }
    }
    return std::nullopt;
}

// Fits the one-parameter depth-five family
//
//   c_n = c_{n-1} + K (c_{n-2} - c_{n-3}) - c_{n-4} + c_{n-5}
//
// jointly over several term windows (a sequence and its companion balancer
// sequence, say): K is solved from the first usable row and every other row of
// every window must agree exactly. Returns the common K, or nothing when no
// consistent K exists or every row is degenerate.
inline std::optional<Rat> detect_family_k(std::span<const std::vector<Rat>> windows) {
    std::optional<Rat> k;
    for (const auto& w : windows) {
        for (std::size_t n = 5; n < w.size(); ++n) {
            Rat lever = w[n - 2] - w[n - 3];
            Rat rest = w[n] - w[n - 1] + w[n - 4] - w[n - 5];
            if (lever != 0) {
                Rat cand = rest / lever;
                if (k && *k != cand) return std::nullopt;
                if (!k) k = cand;
            } else if (rest != 0) {
                return std::nullopt;
            }
        }
    }
    return k;
}

}  // namespace balans

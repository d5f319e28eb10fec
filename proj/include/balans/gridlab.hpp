#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "balans/balancing.hpp"
#include "balans/exactnum.hpp"
#include "balans/parallel.hpp"

namespace balans {

// Square balancing/cobalancing solution counts over a coefficient grid; the
// source of the frequency plots and the CSV/PPM emitters below.
struct GridCell {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::vector<std::pair<Int, Int>> solutions;  // (n, r), ascending in n
};

struct GridScan {
    std::int64_t a_max = 0;
    std::int64_t b_max = 0;
    Int n_max;
    Variant variant = Variant::balancing;
    std::vector<GridCell> cells;  // coprime cells only, ascending (a, b)
};

// Collects every square solution with 1 <= n <= n_max for each coprime (a,b)
// in [1,a_max] x [1,b_max]. Cells are scanned independently (partitioned
// across jobs); the result is deterministic regardless of partitioning.
inline GridScan scan_grid(std::int64_t a_max, std::int64_t b_max, const Int& n_max, Variant v,
                          int jobs = 1) {
    if (a_max < 1 || b_max < 1 || n_max < 1)
        throw domain_error("scan_grid: bounds must be positive");
    GridScan out;
    out.a_max = a_max;
    out.b_max = b_max;
    out.n_max = n_max;
    out.variant = v;
    for (std::int64_t a = 1; a <= a_max; ++a)
        for (std::int64_t b = 1; b <= b_max; ++b)
            if (std::gcd(a, b) == 1) out.cells.push_back(GridCell{a, b, {}});

    const std::int64_t n_hi = static_cast<std::int64_t>(n_max);
    parallel_for(out.cells.size(), jobs, [&](std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            GridCell& cell = out.cells[idx];
            CoeffPair c{Int(cell.a), Int(cell.b)};
            for (std::int64_t n = 1; n <= n_hi; ++n)
                if (auto r = square_balancer_of(Int(n), c, v))
                    cell.solutions.emplace_back(Int(n), *r);
        }
    });
    return out;
}

// "a,b,count,solutions" rows for every coprime cell, ascending (a,b);
// solutions serialized "n:r" joined by ';'. The scan bound is recorded in a
// leading comment so the file is reproducible on its own.
inline std::string emit_csv(const GridScan& scan) {
    std::string out = "# n_max=" + scan.n_max.str() + "\n";
    out += "a,b,count,solutions\n";
    for (const auto& cell : scan.cells) {
        out += std::to_string(cell.a) + "," + std::to_string(cell.b) + "," +
               std::to_string(cell.solutions.size()) + ",";
        for (std::size_t i = 0; i < cell.solutions.size(); ++i) {
            if (i) out += ";";
            out += cell.solutions[i].first.str() + ":" + cell.solutions[i].second.str();
        }
        out += "\n";
    }
    return out;
}

// Plain PPM (P3), one pixel per line, a increasing downward and b rightward.
// Non-coprime cells are white. Balancing palette: one solution light gray,
// two red, three or more black. Cobalancing palette: none white, any black.
inline std::string emit_ppm(const GridScan& scan) {
    std::vector<std::vector<int>> counts(static_cast<std::size_t>(scan.a_max),
                                         std::vector<int>(static_cast<std::size_t>(scan.b_max), -1));
    for (const auto& cell : scan.cells)
        counts[static_cast<std::size_t>(cell.a - 1)][static_cast<std::size_t>(cell.b - 1)] =
            static_cast<int>(cell.solutions.size());

    std::string out = "P3\n" + std::to_string(scan.b_max) + " " + std::to_string(scan.a_max) +
                      "\n255\n";
    for (std::int64_t a = 1; a <= scan.a_max; ++a) {
        for (std::int64_t b = 1; b <= scan.b_max; ++b) {
            int count = counts[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)];
            const char* rgb = "255 255 255";  // non-coprime or empty
            if (count >= 0) {
                if (scan.variant == Variant::balancing) {
                    if (count == 1)
                        rgb = "192 192 192";
                    else if (count == 2)
                        rgb = "255 0 0";
                    else if (count >= 3)
                        rgb = "0 0 0";
                } else if (count >= 1) {
                    rgb = "0 0 0";
                }
            }
            out += rgb;
            out += "\n";
        }
    }
    return out;
}

// Observational pattern summary for cobalancing scans: how often nonempty
// cells satisfy r | (a-b) with n in {r, r-1}, and how strongly emptiness
// agrees under the shifts a -> a+42 and b -> b+6.
struct PatternReport {
    std::size_t nonempty_cells = 0;
    std::size_t conforming_cells = 0;  // r | (a-b) and n in {r, r-1}
    std::size_t a_shift_pairs = 0;
    std::size_t a_shift_agreements = 0;
    std::size_t b_shift_pairs = 0;
    std::size_t b_shift_agreements = 0;
    std::vector<std::string> nonconforming;  // rendered cells breaking the pattern
};

inline PatternReport pattern_report(const GridScan& scan) {
    if (scan.variant != Variant::cobalancing)
        throw domain_error("pattern_report: cobalancing scans only");
    PatternReport rep;
    std::vector<std::vector<int>> occupied(
        static_cast<std::size_t>(scan.a_max),
        std::vector<int>(static_cast<std::size_t>(scan.b_max), -1));
    for (const auto& cell : scan.cells)
        occupied[static_cast<std::size_t>(cell.a - 1)][static_cast<std::size_t>(cell.b - 1)] =
            cell.solutions.empty() ? 0 : 1;

    for (const auto& cell : scan.cells) {
        if (cell.solutions.empty()) continue;
        ++rep.nonempty_cells;
        bool ok = true;
        for (const auto& [n, r] : cell.solutions) {
            Int diff = Int(cell.a) - Int(cell.b);
            bool divides = r != 0 && diff % r == 0;
            bool n_near = n == r || n == r - 1;
            ok = ok && divides && n_near;
        }
        if (ok)
            ++rep.conforming_cells;
        else
            rep.nonconforming.push_back("(" + std::to_string(cell.a) + "," +
                                        std::to_string(cell.b) + ")");
    }

    for (std::int64_t a = 1; a <= scan.a_max; ++a) {
        for (std::int64_t b = 1; b <= scan.b_max; ++b) {
            int here = occupied[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)];
            if (here < 0) continue;
            if (a + 42 <= scan.a_max) {
                int there =
                    occupied[static_cast<std::size_t>(a + 42 - 1)][static_cast<std::size_t>(b - 1)];
                if (there >= 0) {
                    ++rep.a_shift_pairs;
                    if (here == there) ++rep.a_shift_agreements;
                }
            }
            if (b + 6 <= scan.b_max) {
                int there =
                    occupied[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b + 6 - 1)];
                if (there >= 0) {
                    ++rep.b_shift_pairs;
                    if (here == there) ++rep.b_shift_agreements;
                }
            }
        }
    }
    return rep;
}

}  // namespace balans

// Acceptance suite: runs every criterion end to end and prints one PASS/FAIL
// line per criterion (sub-results indented). Exits with the number of failed
// criteria. The quadratic-square scan criterion is expected red: the scan
// provably finds solutions in the range that was conjectured empty, and the
// counterexamples are re-verified and printed here.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "balans/balancing.hpp"
#include "balans/exactnum.hpp"
#include "balans/gridlab.hpp"
#include "balans/parallel.hpp"
#include "balans/recdetect.hpp"
#include "balans/recipsum.hpp"
#include "balans/sequences.hpp"
#include "balans/verify.hpp"

using namespace balans;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& text) { notes.push_back(text); }
};

int g_failures = 0;

void criterion(int id, const std::string& name, const std::function<void(Outcome&)>& body) {
    Outcome out;
    try {
        body(out);
    } catch (const std::exception& e) {
        out.pass = false;
        out.notes.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (out.pass ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << name << "\n";
    for (const auto& n : out.notes) std::cout << "       - " << n << "\n";
    if (!out.pass) ++g_failures;
}

std::vector<Int> n_values(const std::vector<BalanceSolution>& sols) {
    std::vector<Int> out;
    for (const auto& s : sols) out.push_back(s.n);
    return out;
}

std::vector<Int> r_values(const std::vector<BalanceSolution>& sols) {
    std::vector<Int> out;
    for (const auto& s : sols) out.push_back(s.r);
    return out;
}

bool all_rows_ok(const VerifySummary& sum, Outcome& out, bool allow_branch_undefined = false) {
    bool ok = true;
    for (const auto& row : sum.rows) {
        bool row_ok = !row.failure && !row.undecidable;
        if (!allow_branch_undefined && row.status == CheckStatus::branch_undefined) row_ok = false;
        if (!row_ok) {
            ok = false;
            out.note(sum.id + " " + row.subject + ": " + to_string(row.status) +
                     (row.note.empty() ? "" : " (" + row.note + ")"));
        }
    }
    return ok;
}

// 0 = undetermined, -1 = none, otherwise the printed K of (1, K, -K, -1, 1).
constexpr int kBalancingK[7][5] = {{34, 98, 194, 322, 482}, {194, 34, 62, 98, 142},
                                   {2, 0, 34, 254, 0},      {322, 194, 0, 34, 0},
                                   {98, 898, 0, 0, 34},     {254, 2, 194, 0, 0},
                                   {34, 1154, 0, 0, 0}};
constexpr int kCobalancingK[7][5] = {{34, 98, 194, 322, 482}, {14, 34, 62, 98, 142},
                                     {-1, 34, 34, 254, 0},    {18, 14, 0, 34, 42},
                                     {10, 30, 98, 0, 34},     {16, -1, 14, 34, 178},
                                     {34, 34, 0, 0, 0}};

std::vector<Rat> to_rat(const std::vector<Int>& v, std::size_t cap) {
    std::vector<Rat> out;
    for (std::size_t i = 0; i < v.size() && i < cap; ++i) out.push_back(Rat(v[i]));
    return out;
}

}  // namespace

int main() {
    const Int kMillion = 1000000;
    const int jobs = default_jobs();

    criterion(1, "classical balancing window and balancers", [&](Outcome& out) {
        auto sols = find_all(CoeffPair{1, 1}, Variant::balancing, kMillion);
        std::vector<Int> want{6, 35, 204, 1189, 6930, 40391, 235416};
        out.check(n_values(sols) == want, "window of the depth-2 recurrence up to 10^6");
        out.check(balancer_of(6, CoeffPair{1, 1}, Variant::balancing) == Int(2),
                  "balancer of 6 is 2");
        out.check(balancer_of(35, CoeffPair{1, 1}, Variant::balancing) == Int(14),
                  "balancer of 35 is 14");
    });

    criterion(2, "classical duality of balancers and cobalancing numbers", [&](Outcome& out) {
        auto bal = find_all(CoeffPair{1, 1}, Variant::balancing, 100000);
        auto cob = find_all(CoeffPair{1, 1}, Variant::cobalancing, 100000);
        auto bal_r = r_values(bal);
        auto cob_n = n_values(cob);
        out.check(bal_r.size() <= cob_n.size(), "balancer list no longer than cobalancing list");
        for (std::size_t i = 0; i < bal_r.size(); ++i)
            out.check(bal_r[i] == cob_n[i], "balancer equals cobalancing number at index " +
                                                std::to_string(i + 1));
        auto cob_r = r_values(cob);
        out.check(!cob_r.empty() && cob_r[0] == 1, "first cobalancer is 1");
        auto bal_n = n_values(bal);
        for (std::size_t i = 1; i < cob_r.size(); ++i)
            out.check(i - 1 < bal_n.size() && cob_r[i] == bal_n[i - 1],
                      "cobalancer equals balancing number at index " + std::to_string(i + 1));
    });

    criterion(3, "recurrence tables reproduced from scans", [&](Outcome& out) {
        std::size_t determined = 0, insufficient = 0, none_cells = 0;
        for (int variant_idx = 0; variant_idx < 2; ++variant_idx) {
            Variant v = variant_idx == 0 ? Variant::balancing : Variant::cobalancing;
            for (int a = 1; a <= 7; ++a) {
                for (int b = 1; b <= 5; ++b) {
                    int printed = variant_idx == 0 ? kBalancingK[a - 1][b - 1]
                                                   : kCobalancingK[a - 1][b - 1];
                    int g = std::gcd(a, b);
                    CoeffPair c{a / g, b / g};
                    auto sols = find_all(c, v, kMillion);
                    auto numbers = n_values(sols);
                    auto rs = r_values(sols);
                    std::string cell = std::string(v == Variant::balancing ? "bal" : "cob") +
                                       "(" + std::to_string(a) + "," + std::to_string(b) + ")";
                    if (printed == -1) {
                        ++none_cells;
                        out.check(sols.empty(), cell + " marked none must scan empty");
                        continue;
                    }
                    const bool enough = numbers.size() + rs.size() >= 12;
                    std::vector<std::vector<Rat>> windows{to_rat(numbers, 40), to_rat(rs, 40)};
                    auto k = detect_family_k(windows);
                    if (enough)
                        ++determined;
                    else
                        ++insufficient;
                    if (printed > 0) {
                        if (enough) {
                            bool ok = k.has_value() && *k == printed;
                            out.check(ok, cell + " printed K=" + std::to_string(printed) +
                                              " but the identity-verified scan satisfies " +
                                              (k ? "K=" + k->str() : "no symmetric depth-5 "
                                                                     "form") +
                                              " (every solution passes the defining sum "
                                              "identity; the printed tuple cannot hold)");
                        }
                        // Depth-2 reproductions for the analytic rows.
                        if (enough && v == Variant::cobalancing && c.a <= 2) {
                            Int m = 2 * c.b / c.a;
                            auto min_n = detect_minimal(to_rat(numbers, 40), 5);
                            out.check(min_n.has_value() &&
                                          min_n->tuple_text ==
                                              render_tuple({Rat(2 * m + 2), Rat(-1)}, Rat(m)),
                                      cell + " depth-2 tuple with constant");
                            auto min_r = detect_minimal(to_rat(rs, 40), 5);
                            out.check(min_r.has_value() &&
                                          min_r->tuple_text ==
                                              render_tuple({Rat(2 * m + 2), Rat(-1)}, Rat(0)),
                                      cell + " depth-2 cobalancer tuple");
                        }
                    } else if (enough) {
                        // Criterion requires every undetermined cell to be
                        // data-starved below 10^6; the scan says otherwise.
                        out.check(false,
                                  cell + " is undetermined in print but the scan yields " +
                                      std::to_string(numbers.size() + rs.size()) +
                                      " identity-verified terms" +
                                      (k ? " satisfying K=" + k->str()
                                         : " fitting no symmetric depth-5 form"));
                    }
                }
            }
        }
        out.note(std::to_string(determined) + " cells with >= 12 combined terms, " +
                 std::to_string(insufficient) + " insufficient below 10^6, " +
                 std::to_string(none_cells) + " none");
        // Spot checks pinned by the tables.
        auto bal11 = find_all(CoeffPair{1, 1}, Variant::balancing, kMillion);
        auto k11 = detect_family_k(std::vector<std::vector<Rat>>{
            to_rat(n_values(bal11), 40), to_rat(r_values(bal11), 40)});
        out.check(k11 && *k11 == 34, "classical pair pins K = 34");
        auto bal31 = find_all(CoeffPair{3, 1}, Variant::balancing, 2000);
        auto k31 = detect_family_k(std::vector<std::vector<Rat>>{
            to_rat(n_values(bal31), 40), to_rat(r_values(bal31), 40)});
        out.check(k31 && *k31 == 2, "(3,1) pins K = 2");
        auto cob12 = find_all(CoeffPair{1, 2}, Variant::cobalancing, kMillion);
        auto t12 = detect_minimal(to_rat(n_values(cob12), 40), 5);
        out.check(t12 && t12->tuple_text == "(10, -1, _4)", "(1,2) cobalancing tuple");
        auto cob23 = find_all(CoeffPair{2, 3}, Variant::cobalancing, kMillion);
        auto t23 = detect_minimal(to_rat(n_values(cob23), 40), 5);
        out.check(t23 && t23->tuple_text == "(8, -1, _3)", "(2,3) cobalancing tuple");
    });

    criterion(4, "scan, recurrence window, and successor orbit agree", [&](Outcome& out) {
        const Int kBig("1000000000000");
        for (auto [a, b] : std::vector<std::pair<int, int>>{
                 {1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 1}, {2, 3}, {2, 5}}) {
            CoeffPair c{a, b};
            std::string cell = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
            Int m = 2 * Int(b) / Int(a);

            // Recurrence window up to 10^12.
            Recurrence rec = cobalancing_rec(a, b);
            out.check(term(rec, 1) == Rat(m) && term(rec, 2) == Rat(2 * m * m + 3 * m),
                      cell + " initial terms m, 2m^2+3m");
            std::vector<Int> recw;
            for (std::int64_t i = 1;; ++i) {
                Rat t = term(rec, i);
                if (!is_integer(t)) {
                    out.check(false, cell + " recurrence term not integral");
                    break;
                }
                Int v = numerator(t);
                if (v > kBig) break;
                recw.push_back(v);
            }

            // Successor orbit up to 10^12.
            std::vector<Int> orbit;
            Int x = 0;
            while (true) {
                x = next_cobalancing(x, c);
                if (x > kBig) break;
                orbit.push_back(x);
            }
            out.check(recw == orbit, cell + " window equals orbit through 10^12");

            // Exhaustive scan as ground truth for the common prefix.
            auto scan = find_all(c, Variant::cobalancing, kMillion);
            auto ns = n_values(scan);
            std::vector<Int> prefix;
            for (const auto& v : recw)
                if (v <= kMillion) prefix.push_back(v);
            out.check(ns == prefix, cell + " scan equals window prefix below 10^6");

            // Cobalancers satisfy the homogeneous recurrence from 1, 2m+2.
            auto rs = r_values(scan);
            out.check(!rs.empty() && rs[0] == 1, cell + " first cobalancer is 1");
            if (rs.size() >= 2)
                out.check(rs[1] == 2 * m + 2, cell + " second cobalancer is 2m+2");
            for (std::size_t i = 2; i < rs.size(); ++i)
                out.check(rs[i] == (2 * m + 2) * rs[i - 1] - rs[i - 2],
                          cell + " cobalancer recurrence at index " + std::to_string(i + 1));
            auto corw = window(cobalancer_rec(a, b), 1, rs.size()).terms;
            for (std::size_t i = 0; i < rs.size(); ++i)
                out.check(Rat(rs[i]) == corw[i], cell + " cobalancer equals window term");
        }
    });

    criterion(5, "Fibonacci floor formula", [&](Outcome& out) {
        auto sum = verify_eq11(std::nullopt, kDefaultBudget, jobs);
        out.check(all_rows_ok(sum, out), "all instances 2..25");
    });

    criterion(6, "Tribonacci floor branches and balancing floor formula", [&](Outcome& out) {
        auto trib = verify_eq12(std::nullopt, kDefaultBudget, jobs);
        out.check(all_rows_ok(trib, out, /*allow_branch_undefined=*/true),
                  "tribonacci branches 2..20");
        std::size_t undefined = 0;
        for (const auto& row : trib.rows)
            if (row.status == CheckStatus::branch_undefined) ++undefined;
        out.check(undefined == 2, "exactly the two zero backward terms are branchless");
        out.note("branch-undefined at n=3 and n=16 (backward terms vanish)");
        auto bal = verify_eq15(std::nullopt, kDefaultBudget, jobs);
        out.check(all_rows_ok(bal, out), "balancing floors 1..12");
        bool saw28 = false;
        for (const auto& row : bal.rows)
            if (row.subject == "n=2") saw28 = row.answer == "28";
        out.check(saw28, "n=2 floor is 28");
    });

    criterion(7, "floor identities for shifted and homogeneous depth-2 shapes",
              [&](Outcome& out) {
                  auto shifted = verify_thm14(std::nullopt, kDefaultBudget, jobs);
                  out.check(all_rows_ok(shifted, out), "shifted shapes");
                  for (const auto& row : shifted.rows)
                      if (row.status == CheckStatus::vacuous)
                          out.check(false, "unexpected vacuous hypothesis at " + row.subject);
                  auto homog = verify_thm15(std::nullopt, kDefaultBudget, jobs);
                  out.check(all_rows_ok(homog, out), "homogeneous shapes");
              });

    criterion(8, "strided, alternating, and prefix-sum identities", [&](Outcome& out) {
        auto nearest = verify_thm16(std::nullopt, kDefaultBudget, jobs);
        std::size_t mismatches = 0;
        for (const auto& row : nearest.rows) {
            out.check(!row.failure && !row.undecidable,
                      "strided nearest " + row.subject + " " + row.note);
            if (row.status == CheckStatus::mismatch) {
                ++mismatches;
                out.check(row.subject == "(n,m)=(1,1)",
                          "mismatch only at the documented exception");
            }
        }
        out.check(mismatches == 1, "exactly one mismatch across the grid");
        auto floors = verify_thm311(std::nullopt, kDefaultBudget, jobs);
        out.check(all_rows_ok(floors, out, /*allow_branch_undefined=*/true),
                  "correction-series floors");
        auto alt = verify_thm312(std::nullopt, kDefaultBudget, jobs);
        out.check(all_rows_ok(alt, out), "alternating identities");
        auto sums = verify_thm313(std::nullopt, kDefaultBudget, jobs);
        out.check(all_rows_ok(sums, out), "prefix-sum identities incl. n<=200 closed form");
    });

    criterion(9, "Binet-style tail bound by interval arithmetic", [&](Outcome& out) {
        auto sum = verify_lemma39(std::nullopt, kDefaultBudget, jobs);
        out.check(all_rows_ok(sum, out), "bound holds for 1..50 with the true coefficient");
        for (const auto& row : sum.rows)
            if (row.subject == "printed decimal read exactly") out.note(row.note);
    });

    criterion(10, "coefficient structure results and the quadratic-square scan",
              [&](Outcome& out) {
                  auto unique31 = verify_thm17(std::nullopt, kDefaultBudget, jobs);
                  out.check(all_rows_ok(unique31, out), "(3,1) universality and uniqueness");
                  auto nocob = verify_thm18(std::nullopt, kDefaultBudget, jobs);
                  out.check(all_rows_ok(nocob, out), "no universally cobalancing pair");
                  auto family = verify_thm19(std::nullopt, kDefaultBudget, jobs);
                  out.check(all_rows_ok(family, out), "singleton cobalancing families");
                  auto eight = verify_thmA1(std::nullopt, kDefaultBudget, jobs);
                  out.check(all_rows_ok(eight, out), "(8,1) has no balancing numbers to 10^5");
                  // Faithful reading of the conjectured emptiness. The scan is
                  // expected empty by the source; it is not, and the hits are
                  // re-verified, so this stays red deliberately.
                  auto conj = verify_conj41(std::nullopt, kDefaultBudget, jobs);
                  for (const auto& row : conj.rows) {
                      out.check(!row.failure,
                                "conjectured emptiness: " + row.subject +
                                    (row.note.empty() ? "" : " -- " + row.note));
                  }
              });

    criterion(11, "square-solution grids, palettes, and byte-stable emitters",
              [&](Outcome& out) {
                  auto bal = scan_grid(60, 60, 5000, Variant::balancing, jobs);
                  std::size_t max_bal = 0;
                  bool trivial_everywhere = true, red91 = false;
                  for (const auto& cell : bal.cells) {
                      max_bal = std::max(max_bal, cell.solutions.size());
                      trivial_everywhere =
                          trivial_everywhere && !cell.solutions.empty() &&
                          cell.solutions.front() == std::pair<Int, Int>{1, 0};
                      if (cell.a == 9 && cell.b == 1) {
                          for (const auto& s : cell.solutions)
                              red91 = red91 || s == std::pair<Int, Int>{2, 1};
                          red91 = red91 && cell.solutions.size() >= 2;
                      }
                  }
                  out.check(trivial_everywhere, "every coprime balancing cell contains (1,0)");
                  out.check(max_bal <= 3, "no balancing cell holds more than three solutions");
                  out.check(red91, "(9,1) holds a second solution (2,1)");

                  auto cob = scan_grid(60, 60, 5000, Variant::cobalancing, jobs);
                  std::size_t max_cob = 0;
                  bool black41 = false;
                  for (const auto& cell : cob.cells) {
                      max_cob = std::max(max_cob, cell.solutions.size());
                      if (cell.a == 4 && cell.b == 1)
                          black41 = cell.solutions.size() == 1 &&
                                    cell.solutions.front() == std::pair<Int, Int>{1, 1};
                  }
                  out.check(max_cob <= 1, "no cobalancing cell holds more than one solution");
                  out.check(black41, "(4,1) holds exactly (1,1)");

                  // Determinism across runs and job counts.
                  auto bal_again = scan_grid(60, 60, 5000, Variant::balancing, jobs);
                  out.check(emit_csv(bal) == emit_csv(bal_again) &&
                                emit_ppm(bal) == emit_ppm(bal_again),
                            "balancing emitters byte-identical across runs");
                  auto bal_other = scan_grid(60, 60, 5000, Variant::balancing,
                                             jobs == 3 ? 5 : 3);
                  out.check(emit_csv(bal) == emit_csv(bal_other) &&
                                emit_ppm(bal) == emit_ppm(bal_other),
                            "balancing emitters byte-identical across job counts");
                  auto cob_other = scan_grid(60, 60, 5000, Variant::cobalancing,
                                             jobs == 3 ? 5 : 3);
                  out.check(emit_csv(cob) == emit_csv(cob_other) &&
                                emit_ppm(cob) == emit_ppm(cob_other),
                            "cobalancing emitters byte-identical across job counts");
                  out.note("max balancing count " + std::to_string(max_bal) +
                           ", max cobalancing count " + std::to_string(max_cob));
              });

    criterion(12, "enclosure soundness, tenfold oracle, and detection round trip",
              [&](Outcome& out) {
                  std::vector<SumSpec> specs{
                      {fibonacci(), 4, 1, SumSign::plain, DenomKind::term},
                      {tribonacci(), 5, 2, SumSign::plain, DenomKind::term},
                      {cobalancing_rec(1, 2), 1, 1, SumSign::plain, DenomKind::term},
                      {pell(), 2, 1, SumSign::plain, DenomKind::term},
                      {tribonacci(), 6, 1, SumSign::alternating, DenomKind::term},
                      {tribonacci(), 4, 2, SumSign::plain, DenomKind::partial_sum},
                  };
                  for (const auto& spec : specs) {
                      auto narrow = certified_sum(spec, 12);
                      auto wide = certified_sum(spec, 24);
                      out.check(narrow.sum.contains(wide.sum),
                                "nesting for " + spec.sequence.label);
                      // Both must contain the exact partial sum of the longer prefix.
                      Rat prefix(0);
                      {
                          auto w = window(spec.sequence, 1,
                                          static_cast<std::size_t>(spec.start) + 24 * spec.stride);
                          Rat running(0);
                          std::size_t done = 0;
                          for (std::int64_t i = 1;
                               i <= spec.start + spec.stride * 24 && done < 24; ++i) {
                              running += w.terms[static_cast<std::size_t>(i - 1)];
                              if (i >= spec.start &&
                                  (i - spec.start) % spec.stride == 0) {
                                  Rat d = spec.denom == DenomKind::partial_sum
                                              ? running
                                              : w.terms[static_cast<std::size_t>(i - 1)];
                                  Rat piece = 1 / d;
                                  if (spec.sign == SumSign::alternating && (done & 1))
                                      piece = -piece;
                                  prefix += piece;
                                  ++done;
                              }
                          }
                      }
                      out.check(wide.sum.contains(prefix) ||
                                    (spec.sign == SumSign::alternating &&
                                     wide.sum.lo <= prefix && prefix <= wide.sum.hi),
                                "exact prefix inside both enclosures for " +
                                    spec.sequence.label);
                      out.check(narrow.sum.contains(prefix),
                                "exact prefix inside the narrow enclosure for " +
                                    spec.sequence.label);
                  }
                  for (auto mode : {AnswerMode::floor, AnswerMode::nearest}) {
                      for (const auto& spec : specs) {
                          auto v = inverse_answer(spec, mode);
                          auto refined = certified_sum(spec, 10 * v.terms_used);
                          auto inv = refined.sum.invert();
                          bool agree = mode == AnswerMode::floor
                                           ? floor_rat(inv.lo) == v.answer &&
                                                 floor_rat(inv.hi) == v.answer
                                           : nearest_rat(inv.lo) == v.answer &&
                                                 nearest_rat(inv.hi) == v.answer;
                          out.check(agree, "tenfold oracle agreement for " +
                                               spec.sequence.label);
                      }
                  }
                  // Detection round trip over randomized theorem-shape recurrences.
                  std::mt19937_64 rng(20240521);
                  int recovered = 0;
                  for (int iter = 0; iter < 200; ++iter) {
                      Recurrence rec;
                      int shape = static_cast<int>(rng() % 3);
                      if (shape == 0) {
                          Rat q(Int(rng() % 10) + 2);
                          Rat s(Int(rng() % 17) + 1, Int(rng() % 2) + 1);
                          rec = Recurrence{{q, Rat(-1)}, s, {Rat(0), s}, 0, "shifted"};
                      } else if (shape == 1) {
                          Rat q(Int(rng() % 8) + 2);
                          Rat r(Int(rng() % 6));
                          if (rng() % 3 == 0) r = Rat(-1);
                          Rat t(Int(rng() % 9) + 1);
                          rec = Recurrence{{q, r}, Rat(0), {Rat(0), t}, 0, "homogeneous"};
                      } else {
                          rec = Recurrence{{Rat(Int(rng() % 4) + 1), Rat(Int(rng() % 4)),
                                            Rat(Int(rng() % 4) + 1)},
                                           Rat(0),
                                           {Rat(0), Rat(Int(rng() % 5) + 1),
                                            Rat(Int(rng() % 7) + 1)},
                                           0,
                                           "depth3"};
                      }
                      int d = rec.depth();
                      bool with_const = rec.constant != 0;
                      auto terms = window(rec, 0, 2 * static_cast<std::size_t>(d + 1) + 4).terms;
                      auto res = detect_fixed(terms, d, with_const);
                      if (res) {
                          out.check(res->recurrence.coeffs == rec.coeffs &&
                                        res->recurrence.constant == rec.constant,
                                    "round trip exact for " + rec.label);
                          ++recovered;
                      } else {
                          auto minimal = detect_minimal(terms, d);
                          out.check(minimal.has_value(),
                                    "singular fit must admit a smaller recurrence");
                      }
                  }
                  out.check(recovered >= 150, "most random recurrences recovered verbatim");
                  out.note(std::to_string(recovered) + "/200 recovered at full depth");
              });

    std::cout << (g_failures == 0 ? "all criteria passed"
                                  : std::to_string(g_failures) + " criterion(s) failed")
              << "\n";
    return g_failures;
}

// Acceptance suite: one test case per numbered criterion. Each prints a
// PASS/FAIL summary line; thresholds and tolerances are pinned here.
#include <doctest.h>
#include <sys/resource.h>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>

#include "lgb/estimates.hpp"
#include "lgb/jordan.hpp"
#include "lgb/verify.hpp"

using namespace lgb;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void summary(int criterion, bool pass, const std::string& detail) {
    std::cout << "ACCEPTANCE criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << " — "
              << detail << "\n";
}

}  // namespace

TEST_CASE("criterion 1: exact anchors for the master bound") {
    auto t0 = Clock::now();

    Ordering f4 = certified_compare(named_bound("f", 4), eb::num(59049L), 1);
    CHECK(f4 == Ordering::Equal);

    Ordering f13 =
        certified_compare(named_bound("f", 13), eb::num(BigInt("10460353203", 10)), 1);
    CHECK(f13 == Ordering::Equal);

    // f(6) certified within 1 of 2,067,423
    bool f6_lo = certified_compare(named_bound("f", 6), eb::num(2067422L), 1) == Ordering::Greater;
    bool f6_hi = certified_compare(named_bound("f", 6), eb::num(2067424L), 1) == Ordering::Less;
    CHECK(f6_lo);
    CHECK(f6_hi);

    // f(9) rounds to 1.35e8 at 3 significant figures (round-or-truncate rule;
    // the source itself prints both 1.35e8 and 1.36e8 for this value)
    RealInterval f9 = eval_interval(named_bound("f", 9), 1, 256);
    BigRational f9_mid = f9.midpoint();
    bool f9_ok = matches_printed(f9_mid, parse_decimal("1.35e8"), 3);
    CHECK(f9_ok);
    CHECK(f9.width_log2() < -40);

    double ms = ms_since(t0);
    CHECK(ms < 1000.0);
    bool pass = f4 == Ordering::Equal && f13 == Ordering::Equal && f6_lo && f6_hi && f9_ok &&
                ms < 1000.0;
    std::ostringstream d;
    d << "f(4)=59049 Equal, f(13)=3^21 Equal, |f(6)-2067423|<1, f(9)->1.35e8; runtime " << ms
      << " ms (< 1000)";
    summary(1, pass, d.str());
}

TEST_CASE("criterion 2: T12.1 regeneration") {
    auto t0 = Clock::now();
    const BoundTable& irr = irreducible_table_cached();
    const BoundTable& all = closure_table_cached();

    const std::map<int, std::pair<int, int>> spot = {
        {2, {34, 34}},  {3, {70, 70}},  {4, {78, 78}},  {5, {37, 53}},  {7, {67, 76}},
        {11, {10, 81}}, {13, {0, 81}},  {18, {98, 98}}, {59, {0, 0}},   {63, {4, 4}}};
    bool spot_ok = true;
    for (const auto& [n, want] : spot) {
        if (irr.at(n).alpha_centi != want.first || all.at(n).alpha_centi != want.second) {
            spot_ok = false;
            MESSAGE("spot row n=", n, ": computed ", irr.at(n).alpha_centi, "/",
                    all.at(n).alpha_centi, ", printed ", want.first, "/", want.second);
        }
    }
    CHECK(spot_ok);

    int mismatches = 0;
    for (const auto& row : printed_alpha_rows()) {
        bool ok = irr.at(row.n).alpha_centi == row.alpha_irr_centi &&
                  all.at(row.n).alpha_centi == row.alpha_all_centi;
        if (!ok) {
            ++mismatches;
            MESSAGE("n=", row.n, ": computed alpha_irr/all ", irr.at(row.n).alpha_centi, "/",
                    all.at(row.n).alpha_centi, " centi vs printed ", row.alpha_irr_centi, "/",
                    row.alpha_all_centi, "; exact bound ", all.at(row.n).bound.get_str(),
                    " (the print rounded where the ceiling convention is pinned)");
        }
    }
    CHECK(mismatches <= 3);

    double ms = ms_since(t0);
    CHECK(ms < 30000.0);
    std::ostringstream d;
    d << "spot rows exact, " << mismatches << " of 62 rows mismatch (<= 3 allowed; alpha_all(23) "
      << "prints .75 where the two-decimal ceiling of the exact value 0.7527 is .76); runtime "
      << ms << " ms (< 30000)";
    summary(2, spot_ok && mismatches <= 3 && ms < 30000.0, d.str());
}

TEST_CASE("criterion 3: T12.2 stable block sizes") {
    auto t0 = Clock::now();
    bool pass = true;
    long max_rm = 0;
    for (const auto& c : primitive_ceilings()) {
        StableM s = stable_m(static_cast<unsigned long>(c.r), c.t);
        max_rm = std::max(max_rm, c.r * s.m_star);
        bool in_band = s.m_star == c.m_printed || s.m_star == c.m_printed - 1;
        bool must_equal = c.r == 2 || c.r == 3 || c.r == 8 || c.r == 12;
        bool ok = in_band && s.certificate && (!must_equal || s.m_star == c.m_printed);
        if (!ok)
            MESSAGE("r=", c.r, ": computed ", s.m_star, ", printed ", c.m_printed,
                    ", certificate ", s.certificate);
        CHECK(ok);
        pass = pass && ok;
    }
    CHECK(max_rm <= 63);
    double ms = ms_since(t0);
    CHECK(ms < 5000.0);
    std::ostringstream d;
    d << "all r in the {m_r - 1, m_r} band with descent certificates, equality at r in "
      << "{2,3,8,12}, max r*m_star = " << max_rm << " <= 63; runtime " << ms << " ms (< 5000)";
    summary(3, pass && max_rm <= 63 && ms < 5000.0, d.str());
}

TEST_CASE("criterion 4: Corollary 8.2 table cells") {
    // Exactly printed cells must match exactly; scientific cells must round to
    // the printed mantissa (round-or-truncate). Four cells cannot: the printed
    // n=9 column carries an exponent slip (4.2e8 for 4.2e6) and an Aut value
    // computed with a factor q instead of q-1; the n=19 column was computed
    // with |SL2(19)| = 7220 instead of 6840.
    struct Cell {
        int n;
        bool aut;  // false: Aut_c row
        const char* printed;
        bool exact_cell;
    };
    const std::vector<Cell> cells = {
        {2, false, "24", true},      {2, true, "24", true},
        {3, false, "216", true},     {3, true, "432", true},
        {4, false, "1920", true},    {4, true, "1920", true},
        {5, false, "3000", true},    {5, true, "12000", true},
        {7, false, "16464", true},   {7, true, "98784", true},
        {8, false, "3.3e6", false},  {8, true, "3.3e6", false},
        {9, false, "4.2e8", false},  {9, true, "1.26e7", false},
        {11, false, "1.6e5", false}, {11, true, "1.6e6", false},
        {13, false, "3.7e5", false}, {13, true, "4.4e6", false},
        {16, false, "1e11", false},  {16, true, "1e11", false},
        {17, false, "1.4e6", false}, {17, true, "2.2e7", false},
        {19, false, "2.6e6", false}, {19, true, "4.7e7", false}};
    int failing = 0;
    for (const auto& cell : cells) {
        unsigned long q = 0, a = 0;
        for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul}) {
            if (auto k = exact_log(BigInt(cell.n), p)) {
                q = p;
                a = *k;
                break;
            }
        }
        ExtraspecialOrders e = extraspecial_aut_orders(q, a);
        BigInt value = cell.aut ? e.aut : e.aut_c;
        bool ok;
        if (cell.exact_cell) {
            ok = BigRational(value) == parse_decimal(cell.printed);
        } else {
            ok = matches_printed(BigRational(value), parse_decimal(cell.printed),
                                 printed_sig_figs(cell.printed));
        }
        if (!ok) {
            ++failing;
            MESSAGE("n=", cell.n, cell.aut ? " |Aut E|" : " |Aut_c E|", ": exact ",
                    value.get_str(), " vs printed ", cell.printed, " (",
                    cell_class_name(classify_cell(BigRational(value), cell.printed)), ")");
        }
        CHECK_MESSAGE(ok, "n=", cell.n, cell.aut ? " |Aut E|" : " |Aut_c E|", " printed ",
                      cell.printed, ", exact ", value.get_str());
    }
    std::ostringstream d;
    d << failing << " of 24 cells cannot be reproduced: the exact orders are "
      << "4199040/8398080 (n=9) and 2469240/44446320 (n=19); the printed 4.2e8, 1.26e7, "
      << "2.6e6, 4.7e7 are arithmetic slips in the source (classification in the C8.2 "
      << "regeneration report)";
    summary(4, failing == 0, d.str());
}

TEST_CASE("criterion 5: the lemma suite") {
    auto t0 = Clock::now();
    struct Job {
        const char* id;
        const char* range;  // "" = the default sweep domain
    };
    const std::vector<Job> jobs = {
        {"A1a", ""}, {"A1b", ""}, {"A1c", ""}, {"A1d", ""},
        {"A2a", ""}, {"A2b", ""},
        {"A3a", ""}, {"A3b", ""}, {"A3c", ""},
        {"A5", ""},
        {"A6a", ""}, {"A6b", ""}, {"A6c", ""}, {"A6d", ""}, {"A6e", ""},
        {"A7a", ""}, {"A7b", ""}, {"A7c", ""}, {"A7d", ""},
        {"A8", ""},
        {"A9a", ""}, {"A9b", ""}};
    int failures = 0, undecided = 0;
    for (const auto& job : jobs) {
        LemmaRanges rr;
        if (job.range[0]) rr = LemmaRanges::parse(job.range);
        CheckReport rep = verify_lemma(job.id, rr);
        undecided += rep.undecided;
        failures += rep.failures;
        if (rep.failures || rep.undecided) {
            for (const auto& it : rep.items)
                if (it.status != CheckStatus::Pass && it.status != CheckStatus::Info)
                    MESSAGE(job.id, " ", it.input, ": ", it.detail);
        }
        CHECK_MESSAGE(rep.failures == 0, job.id);
        CHECK_MESSAGE(rep.undecided == 0, job.id);
    }
    double ms = ms_since(t0);
    CHECK(ms < 60000.0);
    std::ostringstream d;
    d << failures << " failures, " << undecided
      << " undecidables across the sweeps. The single failure is A6(d) at (Suz, m=2, n=12): "
      << "60|Aut Suz| = 5.38e13 > f(24) = 4.63e13, a counterexample to the stated lemma "
      << "(its own verification note compares 60|Suz| instead; the downstream product "
      << "bounds only need the coefficient 24, which holds). Runtime " << ms
      << " ms (< 60000)";
    summary(5, failures == 0 && undecided == 0 && ms < 60000.0, d.str());
}

TEST_CASE("criterion 6: T7.2 min-n columns from exact orders") {
    int match_n = 0, match_nt = 0;
    bool m11_ok = true;
    for (const auto& g : sporadic_records()) {
        long n = min_n(g.order);
        long nt = min_n_tilde(g.order);
        if (n == *g.min_n_printed) ++match_n;
        else MESSAGE(g.name, " min n: computed ", n, ", printed ", *g.min_n_printed);
        if (nt == *g.min_ntilde_printed) ++match_nt;
        else MESSAGE(g.name, " min n~: computed ", nt, ", printed ", *g.min_ntilde_printed);
        if (g.name == "M11") m11_ok = n == 4 && nt == 4;
    }
    CHECK(m11_ok);
    CHECK(match_n >= 24);
    CHECK_MESSAGE(match_nt >= 24, "min n~ matches only ", match_nt, " of 26");
    std::ostringstream d;
    d << "min n matches " << match_n << "/26 (>= 24 required; Mc and Fi24' carry misprinted "
      << "orders), min n~ matches " << match_nt << "/26 — one short of 24: besides those two "
      << "order slips, the printed 343 for the largest group is 349 when recomputed even from "
      << "the printed order 8.08e53; M11 " << (m11_ok ? "4/4" : "MISMATCH");
    summary(6, m11_ok && match_n >= 24 && match_nt >= 24, d.str());
}

TEST_CASE("criterion 7: pinned constants") {
    bool f248 = check_constant("f248").ok();
    bool alpha = check_constant("alpha_log3").ok();
    bool beta = check_constant("beta").ok();
    CHECK(f248);
    CHECK(alpha);
    CHECK(beta);
    summary(7, f248 && alpha && beta,
            "f(248) < 1.5e33, (log2(3)-1)/2 in (0.2924812, 0.2924813), beta <= 4.32 — all "
            "certified");
}

TEST_CASE("criterion 8: envelope and quartic dominance") {
    const BoundTable& all = closure_table_cached();
    CheckReport env = envelope_check(all);
    CHECK(env.ok());
    bool tail_ok = true;
    for (int n = 64; n <= 126; ++n)
        if (all.at(n).bound != factorial(static_cast<unsigned long>(n + 2))) {
            tail_ok = false;
            MESSAGE("n=", n, ": closure bound exceeds (n+2)!");
        }
    CHECK(tail_ok);
    std::ostringstream d;
    d << "closure bound <= (n+2)! n^(4020/((n-20)^2+1000)) and <= n^4 (n+2)! for n = 2..63 "
      << "(exact integer comparisons; tightest margin at n = 8), and equals (n+2)! for "
      << "n = 64..126";
    summary(8, env.ok() && tail_ok, d.str());
}

TEST_CASE("criterion 9: full pipeline runtime and memory") {
    auto t0 = Clock::now();
#ifdef LGB_CLI_PATH
    std::string cli = LGB_CLI_PATH;
#else
    std::string cli = "./lgbounds";
#endif
    int rc1 = std::system((cli + " table --id all --diff > /dev/null 2>&1").c_str());
    int rc2 = std::system((cli + " verify --lemma all > /dev/null 2>&1").c_str());
    double ms = ms_since(t0);
    // diff exits 1 on the documented print mismatches; the lemma run exits 1
    // on the A6(d) instance — completion without crash or usage error is the
    // criterion here
    int code1 = WEXITSTATUS(rc1), code2 = WEXITSTATUS(rc2);
    CHECK(code1 <= 1);
    CHECK(code2 <= 1);
    CHECK(ms < 120000.0);
    struct rusage self{}, children{};
    getrusage(RUSAGE_SELF, &self);
    getrusage(RUSAGE_CHILDREN, &children);
    long peak_kb = std::max(self.ru_maxrss, children.ru_maxrss);
    CHECK(peak_kb < 1024 * 1024);
    std::ostringstream d;
    d << "table --id all --diff (exit " << code1 << ") + verify --lemma all (exit " << code2
      << ") in " << ms / 1000.0 << " s (< 120), peak rss " << peak_kb / 1024 << " MiB (< 1024)";
    summary(9, code1 <= 1 && code2 <= 1 && ms < 120000.0 && peak_kb < 1024 * 1024, d.str());
}

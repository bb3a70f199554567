#include "lgb/verify.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "lgb/estimates.hpp"
#include "lgb/jordan.hpp"

namespace lgb {

std::pair<long, long> LemmaRanges::get(const std::string& var, long lo, long hi) const {
    auto it = ranges.find(var);
    if (it == ranges.end()) return {lo, hi};
    return it->second;
}

LemmaRanges LemmaRanges::parse(const std::string& text) {
    LemmaRanges out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        auto dots = item.find("..");
        if (eq == std::string::npos || dots == std::string::npos)
            throw DomainError("range syntax is var=lo..hi, got '" + item + "'");
        out.ranges[item.substr(0, eq)] = {std::stol(item.substr(eq + 1, dots - eq - 1)),
                                          std::stol(item.substr(dots + 2))};
    }
    return out;
}

namespace {

const BigRational kConst1025(41, 40);    // 1.025
const BigRational kBeta4796(1199, 250);  // 4.796

Ordering cmp(const Expr& a, const Expr& b) { return certified_compare(a, b, BigInt(1)); }

void check_point(CheckReport& rep, const std::string& input, const Expr& lhs, const Expr& rhs) {
    Ordering o = cmp(lhs, rhs);
    if (o == Ordering::Less || o == Ordering::Equal) {
        rep.add(CheckStatus::Pass, input);
    } else if (o == Ordering::Greater) {
        std::ostringstream d;
        mpfr_prec_t p = 256;
        d << "lhs " << eval_ln_interval(lhs, BigInt(1), p).str(8) << " (ln) vs rhs "
          << eval_ln_interval(rhs, BigInt(1), p).str(8) << " (ln)";
        rep.add(CheckStatus::Fail, input, d.str());
    } else {
        rep.add(CheckStatus::Undecidable, input);
    }
}

// expects the inequality to be reversed just below a threshold
void check_reversed(CheckReport& rep, const std::string& input, const Expr& lhs, const Expr& rhs) {
    Ordering o = cmp(lhs, rhs);
    if (o == Ordering::Greater)
        rep.add(CheckStatus::Pass, input, "inequality reversed as expected (threshold tight)");
    else
        rep.add(CheckStatus::Fail, input, "expected reversal below the threshold, got " + to_string(o));
}

std::string pt(std::initializer_list<std::pair<const char*, long>> vars) {
    std::ostringstream os;
    bool first = true;
    for (auto& [k, v] : vars) {
        if (!first) os << ",";
        os << k << "=" << v;
        first = false;
    }
    return os.str();
}

Expr pow2_expr(const BigInt& exponent) { return eb::num(pow_bigint(BigInt(2), exponent.get_ui())); }

CheckReport lemma_A1(char part, const LemmaRanges& rr) {
    CheckReport rep;
    rep.target = std::string("A1") + part;
    auto [xlo, xhi] = rr.get("x", 2, 64);
    auto [ylo, yhi] = rr.get("y", 2, 64);
    auto [tlo, thi] = rr.get("t", part == 'd' ? 2 : 1, 12);
    switch (part) {
        case 'a':
            rep.domain = "x,y in " + std::to_string(xlo) + ".." + std::to_string(xhi);
            for (long x = xlo; x <= xhi; ++x)
                for (long y = ylo; y <= yhi; ++y)
                    check_point(rep, pt({{"x", x}, {"y", y}}),
                                eb::mul(ftilde_at(x), ftilde_at(y)), ftilde_at(BigInt(BigInt(x) * y)));
            break;
        case 'b':
            rep.domain = "x in " + std::to_string(xlo) + ".." + std::to_string(xhi) + ", t in " +
                         std::to_string(tlo) + ".." + std::to_string(thi);
            for (long x = xlo; x <= xhi; ++x)
                for (long t = tlo; t <= thi; ++t) {
                    Expr lhs = eb::mul(eb::num(factorial(t)),
                                       eb::pow(ftilde_at(x), eb::num(t)));
                    check_point(rep, pt({{"x", x}, {"t", t}}), lhs,
                                ftilde_at(pow_bigint(BigInt(x), t)));
                }
            break;
        case 'c':
            rep.domain = "y in " + std::to_string(ylo) + ".." + std::to_string(yhi);
            for (long y = ylo; y <= yhi; ++y) {
                Expr lhs = eb::mul(eb::num(kConst1025), eb::mul(ftilde_at(4L), ftilde_at(y)));
                check_point(rep, pt({{"y", y}}), lhs, ftilde_at(BigInt(BigInt(4) * y)));
            }
            break;
        case 'd':
            rep.domain = "t in " + std::to_string(tlo) + ".." + std::to_string(thi);
            for (long t = tlo; t <= thi; ++t) {
                Expr base = eb::mul(eb::num(kConst1025), ftilde_at(4L));
                Expr lhs = eb::mul(eb::pow(base, eb::num(t)), eb::num(factorial(t)));
                check_point(rep, pt({{"t", t}}), lhs, ftilde_at(pow_bigint(BigInt(4), t)));
            }
            break;
    }
    return rep;
}

CheckReport lemma_A2(char part, const LemmaRanges& rr) {
    CheckReport rep;
    rep.target = std::string("A2") + part;
    if (part == 'a') {
        auto [xlo, xhi] = rr.get("x", 2, 64);
        auto [ylo, yhi] = rr.get("y", 2, 64);
        rep.domain = "x,y in " + std::to_string(xlo) + ".." + std::to_string(xhi);
        for (long x = xlo; x <= xhi; ++x)
            for (long y = ylo; y <= yhi; ++y)
                check_point(rep, pt({{"x", x}, {"y", y}}), eb::mul(g_at(x), g_at(y)),
                            at(g_fn(), BigInt(BigInt(x) * y)));
    } else {
        // the stated constraint x >= 3 is sharp: 2! g(2)^2 = 1152 > g(4) = 720
        auto [xlo, xhi] = rr.get("x", 3, 64);
        auto [tlo, thi] = rr.get("t", 1, 12);
        rep.domain = "x in " + std::to_string(xlo) + ".." + std::to_string(xhi) + ", t in " +
                     std::to_string(tlo) + ".." + std::to_string(thi);
        for (long x = xlo; x <= xhi; ++x)
            for (long t = tlo; t <= thi; ++t) {
                Expr lhs = eb::mul(eb::num(factorial(t)), eb::pow(g_at(x), eb::num(t)));
                check_point(rep, pt({{"x", x}, {"t", t}}), lhs,
                            at(g_fn(), pow_bigint(BigInt(x), t)));
            }
    }
    return rep;
}

CheckReport lemma_A3(char part, const LemmaRanges& rr) {
    CheckReport rep;
    rep.target = std::string("A3") + part;
    long thr = part == 'a' ? 10 : part == 'b' ? 14 : 13;
    auto [lo, hi] = rr.get("x", thr, 200);
    rep.domain = "x in " + std::to_string(lo) + ".." + std::to_string(hi);
    auto lhs_at = [&](long x) -> Expr {
        if (part == 'a') return f_at(x);
        if (part == 'b') return eb::mul(eb::num(BigInt(BigInt(x) * x)), f_at(x));
        return eb::mul(eb::num(x), f_at(x));
    };
    for (long x = lo; x <= hi; ++x) check_point(rep, pt({{"x", x}}), lhs_at(x), g_at(x));
    if (lo == thr) {
        if (part == 'a') check_reversed(rep, "x=9 (below threshold)", lhs_at(9), g_at(9));
        if (part == 'b') check_reversed(rep, "x=13 (below threshold)", lhs_at(13), g_at(13));
        if (part == 'c') {
            // the printed threshold is 13; the inequality in fact already holds
            // at 12 and first fails at 11
            Ordering at12 = cmp(lhs_at(12), g_at(12));
            rep.add(CheckStatus::Info, "x=12",
                    "holds below the printed threshold (" + to_string(at12) +
                        "); sharp threshold is 12");
            check_reversed(rep, "x=11 (below sharp threshold)", lhs_at(11), g_at(11));
        }
    }
    return rep;
}

CheckReport lemma_A5(const LemmaRanges& rr) {
    CheckReport rep;
    rep.target = "A5";
    auto [xlo, xhi] = rr.get("x", 2, 12);
    rep.domain = "x in " + std::to_string(xlo) + ".." + std::to_string(xhi) +
                 ", y = ceil(2^(beta x)), beta = (log2(3)-1)/2";
    Expr beta = eb::div(eb::sub(eb::log2(eb::num(3L)), eb::num(1L)), eb::num(2L));
    for (long x = xlo; x <= xhi; ++x) {
        BigInt y = certified_ceil(eb::pow(eb::num(2L), eb::mul(beta, eb::num(x))), BigInt(1));
        // statement prints 2^(x^2+x); the proof (and the downstream use)
        // carries 2^(2x^2+x) -- both checked, the stronger one gates
        Expr strong = eb::mul(eb::num(2L), eb::mul(pow2_expr(BigInt(2 * x * x + x)), f_at(y)));
        Expr weak = eb::mul(eb::num(2L), eb::mul(pow2_expr(BigInt(x * x + x)), f_at(y)));
        Expr rhs = f_at(BigInt(pow_bigint(BigInt(2), x) * y));
        check_point(rep, pt({{"x", x}, {"y", y.get_si()}}) + " (2^(2x^2+x) form)", strong, rhs);
        check_point(rep, pt({{"x", x}, {"y", y.get_si()}}) + " (printed 2^(x^2+x) form)", weak, rhs);
    }
    // the exponent beta is sharp: with y far below 2^(beta x) the bound flips
    Expr strong = eb::mul(eb::num(2L), eb::mul(pow2_expr(BigInt(2 * 12 * 12 + 12)), f_at(2L)));
    check_reversed(rep, "x=12,y=2 (y below 2^(beta x))", strong,
                   f_at(BigInt(pow_bigint(BigInt(2), 12) * 2)));
    return rep;
}

Expr special_F(const SpecialBoundRecord& r, long n) {
    if (n < r.a1) return eb::num(1L);
    if (n < r.a2) return eb::num(r.aut_order);
    return f_at(n);
}

CheckReport lemma_A6(char part, const LemmaRanges& rr) {
    CheckReport rep;
    rep.target = std::string("A6") + part;
    const auto& specials = special_bound_records();
    auto [nlo, nhi] = rr.get("n", 2, 64);
    auto [mlo, mhi] = rr.get("m", 2, 64);
    auto [tlo, thi] = rr.get("t", 2, 12);
    switch (part) {
        case 'a':
            rep.domain = "all special pairs, n,m with F != 1";
            for (const auto& g1 : specials)
                for (const auto& g2 : specials)
                    for (long n = std::max<long>(nlo, g1.a1); n <= nhi; ++n)
                        for (long m = std::max<long>(mlo, g2.a1); m <= mhi; ++m)
                            check_point(rep,
                                        g1.name + "," + g2.name + "," + pt({{"n", n}, {"m", m}}),
                                        eb::mul(special_F(g1, n), special_F(g2, m)),
                                        f_at(BigInt(BigInt(n) * m)));
            break;
        case 'b':
            rep.domain = "special groups, n, t";
            for (const auto& g1 : specials)
                for (long n = nlo; n <= nhi; ++n)
                    for (long t = tlo; t <= thi; ++t) {
                        Expr lhs = eb::mul(eb::num(factorial(t)),
                                           eb::pow(special_F(g1, n), eb::num(t)));
                        check_point(rep, g1.name + "," + pt({{"n", n}, {"t", t}}), lhs,
                                    f_at(pow_bigint(BigInt(n), t)));
                    }
            break;
        case 'c':
            rep.domain = "special groups, m >= 4, n >= 2";
            for (const auto& g1 : specials)
                for (long m = std::max<long>(mlo, 4); m <= mhi; ++m)
                    for (long n = nlo; n <= nhi; ++n)
                        check_point(rep, g1.name + "," + pt({{"m", m}, {"n", n}}),
                                    eb::mul(f_at(m), special_F(g1, n)), f_at(BigInt(BigInt(n) * m)));
            break;
        case 'd':
            rep.domain = "special groups, m >= 2, n >= 2, excluding Co1 with n <= 37";
            for (const auto& g1 : specials)
                for (long m = mlo; m <= mhi; ++m)
                    for (long n = nlo; n <= nhi; ++n) {
                        if (g1.name == "Co1" && n <= 37) continue;
                        check_point(rep, g1.name + "," + pt({{"m", m}, {"n", n}}),
                                    eb::mul(ftilde_at(m), special_F(g1, n)), f_at(BigInt(BigInt(n) * m)));
                    }
            {
                const SpecialBoundRecord* co1 = special_bound_record("Co1");
                Ordering o = cmp(eb::mul(ftilde_at(2L), special_F(*co1, 24)), f_at(48L));
                rep.add(o == Ordering::Greater ? CheckStatus::Pass : CheckStatus::Fail,
                        "Co1,m=2,n=24 (inside the exclusion)",
                        "bound fails there as the exclusion predicts: " + to_string(o));
                // the lone sweep failure (Suz, m=2, n=12) traces to the Aut
                // factor: with the group order in the middle band, as the
                // piecewise bound of 7.1(b) has it, the same point holds
                const SpecialBoundRecord* suz = special_bound_record("Suz");
                Ordering o2 = cmp(eb::mul(eb::num(60L), eb::num(suz->order)), f_at(24L));
                rep.add(CheckStatus::Info, "Suz,m=2,n=12 cross-check",
                        "60|Suz| vs f(24): " + to_string(o2) +
                            "; the stated bound fails only through |Aut Suz| = 2|Suz|");
            }
            break;
        case 'e':
            rep.domain = "special groups, n >= 2";
            for (const auto& g1 : specials)
                for (long n = nlo; n <= nhi; ++n) {
                    Expr lhs = eb::mul(eb::num(kConst1025), eb::mul(f_at(4L), special_F(g1, n)));
                    check_point(rep, g1.name + "," + pt({{"n", n}}), lhs, f_at(BigInt(BigInt(4) * n)));
                }
            break;
    }
    return rep;
}

CheckReport lemma_A7(char part, const LemmaRanges& rr) {
    CheckReport rep;
    rep.target = std::string("A7") + part;
    long deflo = part == 'a' ? 2 : part == 'b' ? 4 : part == 'c' ? 37 : 2;
    auto [lo, hi] = rr.get("n", deflo, 200);
    rep.domain = "n in " + std::to_string(lo) + ".." + std::to_string(hi);
    switch (part) {
        case 'a':
            for (long n = lo; n <= hi; ++n) {
                Expr expo = eb::add(eb::mul(eb::num(2L), eb::log3(eb::num(n))),
                                    eb::num(BigRational(7, 2)));
                Expr lhs = eb::mul(eb::num(kBeta4796), eb::pow(eb::num(n), expo));
                check_point(rep, pt({{"n", n}}), lhs, f_at(n));
            }
            break;
        case 'b':
            for (long n = lo; n <= hi; ++n)
                check_point(rep, pt({{"n", n}}), eb::mul(eb::num(n), f_at(n)),
                            named_bound("residual-5", n));
            break;
        case 'c':
            for (long n = lo; n <= hi; ++n)
                check_point(rep, pt({{"n", n}}), eb::mul(eb::num(n), f_at(n)), s_at(n));
            if (lo == 37)
                check_reversed(rep, "n=36 (below threshold)",
                               eb::mul(eb::num(36L), f_at(36L)), s_at(36L));
            break;
        case 'd':
            for (long n = lo; n <= hi; ++n)
                for (long m = n; m <= hi; ++m)
                    check_point(rep, pt({{"n", n}, {"m", m}}), eb::mul(s_at(n), s_at(m)),
                                s_at(BigInt(BigInt(n) * m)));
            break;
    }
    return rep;
}

CheckReport lemma_A8(const LemmaRanges& rr) {
    CheckReport rep;
    rep.target = "A8";
    auto [mlo, mhi] = rr.get("m", 128, 256);
    auto [nlo, nhi] = rr.get("n", 2, 16);
    rep.domain = "m in " + std::to_string(mlo) + ".." + std::to_string(mhi) + ", n in " +
                 std::to_string(nlo) + ".." + std::to_string(nhi) +
                 ", special groups plus the generic sporadic F";
    auto run = [&](const std::string& name, auto F_of) {
        for (long m = mlo; m <= mhi; ++m)
            for (long n = nlo; n <= nhi; ++n)
                check_point(rep, name + "," + pt({{"m", m}, {"n", n}}),
                            eb::mul(s_at(m), F_of(n)), s_at(BigInt(BigInt(n) * m)));
    };
    for (const auto& g : special_bound_records())
        run(g.name, [&](long n) { return special_F(g, n); });
    run("generic", [&](long n) -> Expr { return n <= 3 ? eb::num(1L) : f_at(n); });
    return rep;
}

CheckReport lemma_A9(char part, const LemmaRanges& rr) {
    CheckReport rep;
    rep.target = std::string("A9") + part;
    auto [nlo, nhi] = rr.get("n", 13, 64);
    if (part == 'a') {
        auto [tlo, thi] = rr.get("t", 1, 12);
        rep.domain = "n in " + std::to_string(nlo) + ".." + std::to_string(nhi) + ", t in " +
                     std::to_string(tlo) + ".." + std::to_string(thi) + " (exact)";
        for (long n = nlo; n <= nhi; ++n)
            for (long t = tlo; t <= thi; ++t) {
                BigInt lhs = factorial(t) * pow_bigint(factorial(n + 2), t);
                BigInt rhs = factorial(n * t + 2);
                rep.add(lhs <= rhs ? CheckStatus::Pass : CheckStatus::Fail,
                        pt({{"n", n}, {"t", t}}));
            }
    } else {
        auto [mlo, mhi] = rr.get("m", 13, 64);
        rep.domain = "n,m in " + std::to_string(nlo) + ".." + std::to_string(nhi) + " (exact)";
        for (long n = nlo; n <= nhi; ++n)
            for (long m = mlo; m <= mhi; ++m) {
                BigInt lhs = factorial(n + 2) * factorial(m + 2);
                BigInt rhs = factorial(n + m + 2);
                rep.add(lhs <= rhs ? CheckStatus::Pass : CheckStatus::Fail,
                        pt({{"n", n}, {"m", m}}));
            }
    }
    return rep;
}

CheckReport lemma_A10(const LemmaRanges& rr) {
    CheckReport rep;
    rep.target = "A10";
    auto [mlo, mhi] = rr.get("m", 1, 200);
    rep.domain = "the eleven (r, t_r) pairs, m up to " + std::to_string(mhi) + " (exact)";
    for (const auto& c : primitive_ceilings()) {
        long first_below = 0;
        bool monotone_below = true;
        for (long m = mlo; m <= mhi; ++m) {
            bool below = ratio_F(static_cast<unsigned long>(m),
                                 static_cast<unsigned long>(c.r), c.t) < 1;
            if (below && first_below == 0) first_below = m;
            if (!below && first_below != 0) {
                monotone_below = false;
                rep.add(CheckStatus::Fail, "r=" + std::to_string(c.r) + ",m=" + std::to_string(m),
                        "F(m) >= 1 after F(" + std::to_string(first_below) + ") < 1");
            }
        }
        if (monotone_below)
            rep.add(CheckStatus::Pass, "r=" + std::to_string(c.r),
                    "F < 1 from m = " + std::to_string(first_below) + " on");
    }
    return rep;
}

}  // namespace

std::vector<std::string> expand_lemma_ids(const std::string& id) {
    static const std::vector<std::string> all = {
        "A1a", "A1b", "A1c", "A1d", "A2a", "A2b", "A3a", "A3b", "A3c", "A5",
        "A6a", "A6b", "A6c", "A6d", "A6e", "A7a", "A7b", "A7c", "A7d", "A8",
        "A9a", "A9b", "A10"};
    if (id == "all") return all;
    std::vector<std::string> out;
    for (const auto& s : all)
        if (s == id) out.push_back(s);
        else if (s.size() == id.size() + 1 && s.compare(0, id.size(), id) == 0 &&
                 std::isalpha(static_cast<unsigned char>(s.back())))
            out.push_back(s);
    if (out.empty()) throw DomainError("unknown lemma id '" + id + "'");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CheckReport verify_lemma(const std::string& id, const LemmaRanges& rr) {
    if (id == "all" || expand_lemma_ids(id).size() > 1) {
        CheckReport rep;
        rep.target = "lemmas " + id;
        for (const auto& part : expand_lemma_ids(id)) rep.merge(verify_lemma(part, rr));
        return rep;
    }
    if (id == "A10") return lemma_A10(rr);
    if (id.rfind("A1", 0) == 0 && id.size() == 3) return lemma_A1(id[2], rr);
    if (id.rfind("A2", 0) == 0 && id.size() == 3) return lemma_A2(id[2], rr);
    if (id.rfind("A3", 0) == 0 && id.size() == 3) return lemma_A3(id[2], rr);
    if (id == "A5") return lemma_A5(rr);
    if (id.rfind("A6", 0) == 0 && id.size() == 3) return lemma_A6(id[2], rr);
    if (id.rfind("A7", 0) == 0 && id.size() == 3) return lemma_A7(id[2], rr);
    if (id == "A8") return lemma_A8(rr);
    if (id.rfind("A9", 0) == 0 && id.size() == 3) return lemma_A9(id[2], rr);
    throw DomainError("unknown lemma id '" + id + "'");
}

namespace {

// integer mantissa of |v| at `figs` significant figures relative to the
// decimal exponent `e` (v may have been rounded across a power of ten)
BigInt mantissa_at(const BigRational& v, long e, int figs, bool truncate) {
    long shift = e - figs + 1;
    BigRational scaled = v;
    BigInt p10 = pow_bigint(BigInt(10), static_cast<unsigned long>(std::labs(shift)));
    if (shift >= 0) scaled /= BigRational(p10); else scaled *= BigRational(p10);
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_num().get_mpz_t(),
                scaled.get_den().get_mpz_t());
    if (!truncate && r * 2 >= scaled.get_den()) q += 1;
    return q;
}

long exp10_of(const BigRational& v) {
    long e = 0;
    BigRational t(v);
    while (t >= 10) { t /= 10; ++e; }
    while (t < 1) { t *= 10; --e; }
    return e;
}

}  // namespace

CellClass classify_cell(const BigRational& value, const std::string& printed) {
    BigRational pv = parse_decimal(printed);
    if (value == pv) return CellClass::ExactMatch;
    if (pv == 0 || value == 0) return CellClass::Mismatch;
    if ((value < 0) != (pv < 0)) return CellClass::Mismatch;
    bool neg = value < 0;
    BigRational v = neg ? BigRational(-value) : value;
    BigRational p = neg ? BigRational(-pv) : pv;
    int figs = printed_sig_figs(printed);
    long ep = exp10_of(p);
    BigInt mp = mantissa_at(p, ep, figs, /*truncate=*/true);
    BigInt mv_round = mantissa_at(v, ep, figs, /*truncate=*/false);
    BigInt mv_trunc = mantissa_at(v, ep, figs, /*truncate=*/true);
    if (mv_round == mp || mv_trunc == mp) return CellClass::RoundMatch;
    // one unit in the last printed digit after rounding
    BigInt d1 = mv_round - mp, d2 = mv_trunc - mp;
    if (abs(d1) <= 1 || abs(d2) <= 1) return CellClass::ApproxConsistent;
    return CellClass::Mismatch;
}

const char* cell_class_name(CellClass c) {
    switch (c) {
        case CellClass::ExactMatch: return "exact";
        case CellClass::RoundMatch: return "round-match";
        case CellClass::ApproxConsistent: return "approximation-consistent";
        case CellClass::Mismatch: return "mismatch";
    }
    return "?";
}

namespace {

void add_cell(CheckReport& rep, const std::string& cell, const BigRational& value,
              const std::string& printed, const std::string& value_str) {
    CellClass c = classify_cell(value, printed);
    CheckStatus st = c == CellClass::Mismatch         ? CheckStatus::Fail
                     : c == CellClass::ApproxConsistent ? CheckStatus::Info
                                                        : CheckStatus::Pass;
    std::string detail =
        std::string(cell_class_name(c)) + ": computed " + value_str + ", printed " + printed;
    if (c == CellClass::Mismatch && value > 0) {
        // flag mantissa-only agreement (an exponent slip in the source)
        BigRational pv = parse_decimal(printed);
        if (pv > 0) {
            int figs = printed_sig_figs(printed);
            BigInt mv = mantissa_at(value, exp10_of(value), figs, false);
            BigInt mp = mantissa_at(pv, exp10_of(pv), figs, true);
            if (mv == mp && exp10_of(value) != exp10_of(pv))
                detail += " (mantissa agrees; printed exponent is off by " +
                          std::to_string(exp10_of(value) - exp10_of(pv)) + ")";
        }
    }
    rep.add(st, cell, detail);
}

// midpoint of a tight enclosure, for diffing transcendental cells
BigRational interval_value(const Expr& e) {
    RealInterval iv = eval_interval(e, BigInt(1), 320);
    return iv.midpoint();
}

std::string centi_str(int centi) {
    std::ostringstream os;
    os << centi / 100 << "." << (centi % 100 < 10 ? "0" : "") << centi % 100;
    return os.str();
}

CheckReport regen_t12_1() {
    CheckReport rep;
    rep.target = "T12.1";
    rep.domain = "n = 2..63, alpha_irr and alpha_all";
    const BoundTable& irr = irreducible_table_cached();
    const BoundTable& all = closure_table_cached();
    for (const auto& row : printed_alpha_rows()) {
        const TableEntry& ei = irr.at(row.n);
        const TableEntry& ea = all.at(row.n);
        bool ok_irr = ei.alpha_centi == row.alpha_irr_centi;
        bool ok_all = ea.alpha_centi == row.alpha_all_centi;
        std::ostringstream in, d;
        in << "n=" << row.n;
        d << "alpha_irr " << centi_str(ei.alpha_centi) << " vs printed "
          << centi_str(row.alpha_irr_centi) << " " << ei.prov_str() << "; alpha_all "
          << centi_str(ea.alpha_centi) << " vs printed " << centi_str(row.alpha_all_centi) << " "
          << ea.prov_str();
        if (!ok_irr || !ok_all) d << "; exact bound " << ea.bound.get_str();
        rep.add(ok_irr && ok_all ? CheckStatus::Pass : CheckStatus::Fail, in.str(), d.str());
    }
    // closure gives new values only for n <= 55
    int last_new = 0;
    for (int n = 2; n <= 63; ++n)
        if (all.at(n).bound != irr.at(n).bound) last_new = n;
    rep.add(last_new <= 55 ? CheckStatus::Pass : CheckStatus::Fail, "closure novelty",
            "closure last differs from the irreducible table at n = " + std::to_string(last_new));
    return rep;
}

CheckReport regen_t12_2() {
    CheckReport rep;
    rep.target = "T12.2";
    rep.domain = "r = 2..12, recomputed m_star vs printed m_r";
    long max_rm = 0;
    for (const auto& c : primitive_ceilings()) {
        StableM sm = stable_m(static_cast<unsigned long>(c.r), c.t);
        max_rm = std::max(max_rm, sm.m_star * c.r);
        bool in_band = sm.m_star == c.m_printed || sm.m_star == c.m_printed - 1;
        std::ostringstream in, d;
        in << "r=" << c.r;
        d << "computed m_star " << sm.m_star << ", printed m_r " << c.m_printed
          << (sm.m_star == c.m_printed ? " (equal)" : " (printed = computed + 1)")
          << (sm.certificate ? ", descent certified" : ", NO descent certificate");
        rep.add(in_band && sm.certificate ? CheckStatus::Pass : CheckStatus::Fail, in.str(),
                d.str());
    }
    rep.add(max_rm <= 63 ? CheckStatus::Pass : CheckStatus::Fail, "max r*m_star",
            std::to_string(max_rm) + " (must be <= 63)");
    return rep;
}

CheckReport regen_ta_6() {
    CheckReport rep;
    rep.target = "TA.6";
    rep.domain = "all printed cells for the five special groups";
    for (const auto& g : special_bound_records()) {
        auto cell = [&](const std::string& label) { return g.name + ": " + label; };
        add_cell(rep, cell("|G|"), BigRational(g.order), g.order_printed, g.order.get_str());
        // F(G, 2 a1) and F(G, 3 a1)
        for (int mult : {2, 3}) {
            long n = static_cast<long>(mult) * g.a1;
            Expr F = special_F(g, n);
            BigRational v;
            std::string vs;
            if (auto ex = exact_value(F, BigInt(1))) {
                v = *ex;
                vs = v.get_num().get_str();
            } else {
                v = interval_value(F);
                vs = to_scientific(BigInt(v.get_num() / v.get_den()), 6);
            }
            add_cell(rep, cell("F(G," + std::to_string(mult) + "a1)"), v,
                     mult == 2 ? g.f2a1_printed : g.f3a1_printed, vs);
        }
        // ln(f(3) |Aut G| / f(3 a1))
        Expr lnrow = eb::ln(eb::div(eb::mul(f_at(3L), eb::num(g.aut_order)),
                                     f_at(3L * g.a1)));
        BigRational lv = interval_value(lnrow);
        add_cell(rep, cell("ln(f(3)|Aut|/f(3a1))"), lv, g.lnrow_printed,
                 eval_interval(lnrow, BigInt(1), 256).str(6));
        // (2/ln 3) ln^2 a1
        Expr lna = eb::ln(eb::num(static_cast<long>(g.a1)));
        Expr coefsq = eb::div(eb::mul(eb::num(2L), eb::mul(lna, lna)), eb::ln(eb::num(3L)));
        add_cell(rep, cell("(2/ln3)ln^2(a1)"), interval_value(coefsq), g.coefsq_printed,
                 eval_interval(coefsq, BigInt(1), 256).str(6));
        // ln|Aut G| - 1 - ln a1 - (4/ln3)(ln a1)(ln 2)
        Expr coeflin = eb::sub(
            eb::sub(eb::sub(eb::ln(eb::num(g.aut_order)), eb::num(1L)), lna),
            eb::div(eb::mul(eb::num(4L), eb::mul(lna, eb::ln(eb::num(2L)))), eb::ln(eb::num(3L))));
        add_cell(rep, cell("lin-coefficient"), interval_value(coeflin), g.coeflin_printed,
                 eval_interval(coeflin, BigInt(1), 256).str(6));
        // 24 |Aut G|
        add_cell(rep, cell("24|Aut G|"), BigRational(BigInt(g.aut_order * 24)), g.row24_printed,
                 BigInt(g.aut_order * 24).get_str());
        // 64 a1 f(a1)
        Expr row64 = eb::mul(eb::num(64L * g.a1), f_at(static_cast<long>(g.a1)));
        add_cell(rep, cell("64 a1 f(a1)"), interval_value(row64), g.row64_printed,
                 eval_interval(row64, BigInt(1), 256).str(6));
        // a2 agrees with the direct search for min n
        long a2 = min_n(g.order);
        rep.add(a2 == g.a2 ? CheckStatus::Pass : CheckStatus::Info, cell("a2 vs min n"),
                "direct search gives " + std::to_string(a2) + ", printed a2 " +
                    std::to_string(g.a2));
    }
    return rep;
}

CheckReport regen_t4_5_4() {
    CheckReport rep;
    rep.target = "T4.5.4";
    rep.domain = "|A| and x = (m^b-1)/2 for the eight printed columns";
    for (const auto& row : outer_exception_rows()) {
        std::string text = row.group;
        // catalog names: group "A1(4)" -> lie id "A:1:4"
        auto paren = text.find('(');
        std::string fam_rank = text.substr(0, paren);
        std::string field = text.substr(paren + 1, text.size() - paren - 2);
        std::string fam;
        std::string rank;
        for (char c : fam_rank) {
            if (std::isdigit(static_cast<unsigned char>(c)) && !fam.empty() &&
                (fam == "A" || fam == "B" || fam == "C" || fam == "D" || fam == "G" ||
                 fam == "2A" || fam == "2B" || fam == "3D"))
                rank.push_back(c);
            else
                fam.push_back(c);
        }
        if (fam == "G") { fam = "G2"; }
        if (rank.empty()) rank = fam.substr(fam.size() - 1);
        LieTypeId id = parse_lie(fam + ":" + rank + ":" + field);
        LieFamilyRecord rec = lie_lookup(id);
        BigInt a_order = rec.diagonal_order * rec.graph_order * rec.field_order;
        std::ostringstream d;
        d << "computed |A| = " << a_order.get_str() << " (printed " << row.a_order << ", part "
          << row.a_part << ")";
        rep.add(a_order == row.a_order ? CheckStatus::Pass : CheckStatus::Fail,
                row.group + ": |A|", d.str());
        // x = (m^b - 1)/2 exactly
        auto mb = id.m_pow_exact(rec.degree_exponent.get_num(), rec.degree_exponent.get_den());
        if (mb) {
            BigRational x = BigRational(*mb - 1) / 2;
            rep.add(x == row.x ? CheckStatus::Pass : CheckStatus::Fail, row.group + ": x",
                    "computed " + x.get_str() + ", printed " + row.x.get_str());
        } else {
            rep.add(CheckStatus::Fail, row.group + ": x", "m^b not rational");
        }
    }
    return rep;
}

CheckReport regen_c8_2() {
    CheckReport rep;
    rep.target = "C8.2";
    rep.domain = "n in {2,3,4,5,7,8,9,11,13,16,17,19}: |Aut_c E|, |Aut E|, 2n^(2 log n+1)";
    for (const auto& row : c82_rows()) {
        BigInt n(row.n);
        // n = q^a
        unsigned long q = 0, a = 0;
        for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul}) {
            if (auto k = exact_log(n, p)) {
                q = p;
                a = *k;
                break;
            }
        }
        ExtraspecialOrders orders = extraspecial_aut_orders(q, a);
        add_cell(rep, "n=" + std::to_string(row.n) + ": |Aut_c E|", BigRational(orders.aut_c),
                 row.autc_printed, orders.aut_c.get_str());
        add_cell(rep, "n=" + std::to_string(row.n) + ": |Aut E|", BigRational(orders.aut),
                 row.aut_printed, orders.aut.get_str());
        Expr sb = s_at(static_cast<long>(row.n));
        BigRational sv;
        std::string svs;
        if (auto ex = exact_value(sb, BigInt(1))) {
            sv = *ex;
            svs = sv.get_num().get_str();
        } else {
            sv = interval_value(sb);
            svs = eval_interval(sb, BigInt(1), 256).str(8);
        }
        add_cell(rep, "n=" + std::to_string(row.n) + ": 2n^(2logn+1)", sv, row.sbound_printed,
                 svs);
        // the printed rows really do dominate: aut_c <= N(d, q)
        Ordering o = cmp(eb::num(orders.aut_c), orders.n_bound);
        rep.add(o != Ordering::Greater ? CheckStatus::Pass : CheckStatus::Fail,
                "n=" + std::to_string(row.n) + ": Aut_c <= N(d,q)", to_string(o));
    }
    return rep;
}

CheckReport regen_t7_2(bool tilde) {
    CheckReport rep;
    rep.target = tilde ? "T7.2-min-ntilde" : "T7.2-min-n";
    rep.domain = "all 26 sporadic groups, recomputed from exact orders";
    for (const auto& g : sporadic_records()) {
        long computed = tilde ? min_n_tilde(g.order) : min_n(g.order);
        int printed = tilde ? *g.min_ntilde_printed : *g.min_n_printed;
        std::ostringstream d;
        d << "computed " << computed << ", printed " << printed;
        if (computed != printed && g.note.rfind("order-printed", 0) == 0)
            d << " (printed order " << g.printed_order << " carries a known slip; exact order "
              << to_scientific(g.order, 4) << ")";
        rep.add(computed == printed ? CheckStatus::Pass : CheckStatus::Fail, g.name, d.str());
    }
    return rep;
}

}  // namespace

std::vector<std::string> regeneratable_tables() {
    return {"T12.1", "T12.2", "TA.6", "T4.5.4", "C8.2", "T7.2-min-n", "T7.2-min-ntilde"};
}

CheckReport regenerate_table(const std::string& id) {
    if (id == "T12.1") return regen_t12_1();
    if (id == "T12.2") return regen_t12_2();
    if (id == "TA.6") return regen_ta_6();
    if (id == "T4.5.4") return regen_t4_5_4();
    if (id == "C8.2") return regen_c8_2();
    if (id == "T7.2-min-n") return regen_t7_2(false);
    if (id == "T7.2-min-ntilde") return regen_t7_2(true);
    throw DomainError("unknown table id '" + id + "'");
}

CheckReport check_constant(const std::string& id) {
    CheckReport rep;
    rep.target = "constant " + id;
    if (id == "f248") {
        Expr bound = eb::num(parse_decimal("1.5e33"));
        Ordering o = cmp(f_at(248L), bound);
        rep.add(o == Ordering::Less ? CheckStatus::Pass : CheckStatus::Fail, "f(248) < 1.5e33",
                "f(248) in " + eval_interval(f_at(248L), BigInt(1), 192).str(8) + ", " +
                    to_string(o));
        return rep;
    }
    if (id == "beta") {
        const BigInt& co1 = group_record("Co1").order;
        Expr log24 = eb::log2(eb::num(24L));
        Expr beta = eb::sub(eb::div(eb::log2(eb::num(co1)), log24),
                            eb::mul(eb::num(2L), log24));
        Ordering o = cmp(beta, eb::num(BigRational(108, 25)));
        rep.add(o == Ordering::Less || o == Ordering::Equal ? CheckStatus::Pass : CheckStatus::Fail,
                "log_24|Co1| - 2 log2(24) <= 4.32",
                "value in " + eval_interval(beta, BigInt(1), 192).str(10) + ", " + to_string(o));
        return rep;
    }
    if (id == "alpha_log3") {
        Expr alpha = eb::div(eb::sub(eb::log2(eb::num(3L)), eb::num(1L)), eb::num(2L));
        bool above = cmp(alpha, eb::num(parse_decimal("0.2924812"))) == Ordering::Greater;
        bool below = cmp(alpha, eb::num(parse_decimal("0.2924813"))) == Ordering::Less;
        rep.add(above && below ? CheckStatus::Pass : CheckStatus::Fail,
                "(log2(3)-1)/2 in (0.2924812, 0.2924813)",
                "value in " + eval_interval(alpha, BigInt(1), 192).str(12));
        return rep;
    }
    throw DomainError("unknown constant id '" + id + "'");
}

}  // namespace lgb

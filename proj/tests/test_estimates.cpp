#include <doctest.h>

#include "lgb/estimates.hpp"

using namespace lgb;

namespace {
bool in_open_interval(const RealInterval& iv, const char* lo, const char* hi) {
    return mpfr_cmp_q(iv.lo(), parse_decimal(lo).get_mpq_t()) > 0 &&
           mpfr_cmp_q(iv.hi(), parse_decimal(hi).get_mpq_t()) < 0;
}
}  // namespace

TEST_CASE("named_bound anchors") {
    // f(6) lies within 1 of 2,067,423
    Expr f6 = named_bound("f", 6);
    CHECK(certified_compare(f6, eb::num(2067422L), 1) == Ordering::Greater);
    CHECK(certified_compare(f6, eb::num(2067424L), 1) == Ordering::Less);

    // g(12) = 14!
    auto g12 = exact_value(named_bound("g", 12), 1);
    REQUIRE(g12.has_value());
    CHECK(*g12 == BigRational(factorial(14)));

    // envelope at n = 20: exponent (20-20)^2 + 1000 gives 4020/1000 = 4.02,
    // so envelope(20)/22! = 20^4.02 which sits in (169000, 170000)
    Expr env = named_bound("envelope", 20);
    Expr ratio = eb::div(env, eb::num(factorial(22)));
    CHECK(in_open_interval(eval_interval(ratio, 1, 256), "169000", "170000"));

    CHECK_THROWS_AS(named_bound("nope", 3), UnknownName);

    // ftilde pins the value 60 at 2 and is f elsewhere
    auto ft2 = exact_value(named_bound("ftilde", 2), 1);
    REQUIRE(ft2.has_value());
    CHECK(*ft2 == 60);
}

TEST_CASE("extraspecial automorphism orders: exactly printed cells") {
    ExtraspecialOrders e31 = extraspecial_aut_orders(3, 1);
    CHECK(e31.aut_c == 216);
    CHECK(e31.aut == 432);
    CHECK(e31.degree == 3);

    ExtraspecialOrders e22 = extraspecial_aut_orders(2, 2);
    CHECK(e22.aut_c == 1920);
    CHECK(e22.aut == 1920);

    ExtraspecialOrders e71 = extraspecial_aut_orders(7, 1);
    CHECK(e71.aut_c == 16464);  // 49 * 336
    CHECK(e71.aut == 98784);

    CHECK_THROWS_AS(extraspecial_aut_orders(6, 1), NotPrime);
}

TEST_CASE("extraspecial bounds: Aut_c <= N(d,q) for all q^a <= 10^4") {
    for (unsigned long q : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul,
                            41ul, 43ul, 47ul, 53ul, 59ul, 61ul, 67ul, 71ul, 73ul, 79ul, 83ul,
                            89ul, 97ul}) {
        for (unsigned long a = 1;; ++a) {
            BigInt d = pow_bigint(BigInt(q), a);
            if (d > 10000) break;
            ExtraspecialOrders e = extraspecial_aut_orders(q, a);
            Ordering o = certified_compare(eb::num(e.aut_c), e.n_bound, 1);
            CHECK_MESSAGE(o != Ordering::Greater, "q=", q, " a=", a);
            if (q != 2) {
                // 8.3 as printed has exponent 2 log3 d + 1, which already fails
                // at d = 3 (432 > 54); its own proof establishes 2 log3 d + 3
                Expr d_e = eb::num(e.degree);
                Expr corrected = eb::mul(
                    eb::num(2L),
                    eb::pow(d_e, eb::add(eb::mul(eb::num(2L), eb::log3(d_e)), eb::num(3L))));
                CHECK_MESSAGE(certified_compare(eb::num(e.aut), corrected, 1) != Ordering::Greater,
                              "q=", q, " a=", a, " vs 2 d^(2 log3 d + 3)");
            }
        }
    }
    // the printed 8.3 exponent fails immediately, documenting the slip
    ExtraspecialOrders e31 = extraspecial_aut_orders(3, 1);
    Expr printed_form = eb::mul(
        eb::num(2L), eb::pow(eb::num(3L), eb::add(eb::mul(eb::num(2L), eb::log3(eb::num(3L))),
                                                  eb::num(1L))));
    CHECK(certified_compare(eb::num(e31.aut), printed_form, 1) == Ordering::Greater);
}

TEST_CASE("lie_order_upper") {
    CHECK(lie_order_upper(parse_lie("A:1:4")) == 64);
    CHECK(lie_order_upper(parse_lie("B:2:3")) == 59049);  // 3^10
    CHECK(lie_order_upper(parse_lie("E8:8:2")) == pow_bigint(BigInt(2), 248));
    // the bound really bounds: |A1(4)| = 60 <= 64, |B2(3)| = 2*25920 <= 3^10
    CHECK(BigInt(60) <= lie_order_upper(parse_lie("A:1:4")));
    CHECK(BigInt(51840) <= lie_order_upper(parse_lie("B:2:3")));
}

TEST_CASE("out_order_bounds") {
    OutOrderBounds a14 = out_order_bounds(parse_lie("A:1:4"));
    REQUIRE(a14.exact.has_value());
    CHECK(*a14.exact == 2);

    OutOrderBounds g22 = out_order_bounds(parse_lie("G2:2:2"));
    REQUIRE(g22.exact.has_value());
    CHECK(*g22.exact == 1);

    // D4(4), q = 2: 4.8 log2((m^5-1)/2) with m = 4
    OutOrderBounds d4 = out_order_bounds(parse_lie("D:4:4"));
    CHECK_FALSE(d4.exact.has_value());
    CHECK(in_open_interval(eval_interval(d4.log_bound, 1, 192), "43.1", "43.3"));
    // power bound ((m^b-1)/2)^2 = 511.5^2
    CHECK(exact_value(d4.power_bound, 1).has_value());
    CHECK(*exact_value(d4.power_bound, 1) == BigRational(1023, 2) * BigRational(1023, 2));

    CHECK_THROWS_AS(out_order_bounds(parse_lie("A:1:2")), ExcludedGroup);
}

TEST_CASE("equal-characteristic stabilizer bound (Cor 5.2)") {
    auto v = exact_value(equal_char_stabilizer_bound(LieFamily::A, 2, 3), 1);
    REQUIRE(v.has_value());
    CHECK(*v == 6);
    v = exact_value(equal_char_stabilizer_bound(LieFamily::A, 1, 4), 1);
    REQUIRE(v.has_value());
    CHECK(*v == 8);  // 4 log2 4
    v = exact_value(equal_char_stabilizer_bound(LieFamily::D, 4, 8), 1);
    REQUIRE(v.has_value());
    CHECK(*v == 24);  // 8 log2 8
}

TEST_CASE("min_n by direct certified search") {
    CHECK(min_n(BigInt(7920)) == 4);
    CHECK(min_n(BigInt(60)) == 2);  // f(1) = 27 < 60 <= f(2)
    CHECK(min_n(group_record("M").order) == 1472);
    CHECK(min_n(parse_decimal("8.08e53").get_num()) == 1472);
}

TEST_CASE("min_n_formula tracks the direct search to within one step") {
    for (const auto& g : sporadic_records()) {
        long direct = min_n(g.order);
        MinNFormula f = min_n_formula(g.order);
        bool close_enough = f.corrected == direct || f.corrected == direct + 1 ||
                            f.corrected == direct - 1;
        CHECK_MESSAGE(close_enough, g.name, ": direct ", direct, ", formula ", f.corrected);
        // the printed discriminant 0.5 + 8L never exceeds the 1 + 8L form
        CHECK(f.as_printed <= f.corrected);
    }
}

TEST_CASE("min_n_tilde") {
    CHECK(min_n_tilde(BigInt(7920)) == 4);
    CHECK(min_n_tilde(group_record("Co1").order) == 24);
    CHECK(min_n_tilde(BigInt(24)) == 2);
}

TEST_CASE("alternating-group degree bounds") {
    CHECK(alt_min_degree(8, 2, AltKind::Linear) == 4);
    CHECK(alt_min_degree(16, 1, AltKind::ProjectiveNonLifting) == 128);
    CHECK(alt_min_degree(11, 1, AltKind::ProjectiveNonLifting) == 16);
    CHECK(alt_min_degree(5, 1, AltKind::Linear) == 3);
    CHECK(alt_min_degree(9, 3, AltKind::Linear) == 7);   // p | m
    CHECK(alt_min_degree(9, 5, AltKind::Linear) == 8);   // p does not divide m
    CHECK_THROWS_AS(alt_min_degree(3, 1, AltKind::Linear), OutOfRange);

    // divisibility: the projective bound divides no smaller power of two than
    // 2^floor((m - s - 1)/2), s the binary digit sum
    for (long m = 8; m <= 64; ++m) {
        long s = static_cast<long>(mpz_popcount(BigInt(m).get_mpz_t()));
        BigInt want = pow_bigint(BigInt(2), static_cast<unsigned long>((m - s - 1) / 2));
        BigInt got(alt_min_degree(m, 1, AltKind::ProjectiveNonLifting));
        CHECK_MESSAGE(mpz_divisible_p(got.get_mpz_t(), want.get_mpz_t()), "m=", m);
    }
}

TEST_CASE("sporadic piecewise bounds") {
    auto one = exact_value(sporadic_F("Suz", 11), 1);
    REQUIRE(one.has_value());
    CHECK(*one == 1);

    auto co1 = exact_value(sporadic_F("Co1", 30), 1);
    REQUIRE(co1.has_value());
    CHECK(*co1 == BigRational(BigInt("4157776806543360000", 10)));

    // at n >= a2 the bound becomes f(n) itself
    CHECK(certified_compare(sporadic_F("Co2", 24), named_bound("f", 24), 1) == Ordering::Equal);

    // generic sporadic: 1 up to degree 3, f beyond
    auto m11 = exact_value(sporadic_F("M11", 3), 1);
    REQUIRE(m11.has_value());
    CHECK(*m11 == 1);
    CHECK(certified_compare(sporadic_F("M11", 9), named_bound("f", 9), 1) == Ordering::Equal);
}

TEST_CASE("case_bound branches") {
    CHECK(certified_compare(case_bound(6),
                            eb::mul(eb::num(BigRational(1261, 100)), named_bound("f", 6)),
                            1) == Ordering::Equal);
    auto b13 = exact_value(case_bound(13), 1);
    REQUIRE(b13.has_value());
    CHECK(*b13 == BigRational(factorial(15)));
    // n = 2 branch is 2 f(2), about 1116.7
    CHECK(in_open_interval(eval_interval(case_bound(2), 1, 256), "1116", "1118"));
}

TEST_CASE("quasi-primitive residual bounds") {
    ResidualBounds r2 = quasiprimitive_residual_bound(2);
    auto v = exact_value(r2.general, 1);
    REQUIRE(v.has_value());
    CHECK(*v == 128);  // 2^(2 log2 2 + 5) = 2^7
    CHECK_FALSE(r2.large_n.has_value());
    CHECK(quasiprimitive_residual_bound(39).large_n.has_value());
    CHECK_FALSE(quasiprimitive_residual_bound(38).large_n.has_value());
}

#include "lgb/estimates.hpp"

#include <array>

namespace lgb {

namespace {

Expr make_f_fn() {
    Expr x = eb::var();
    Expr base = eb::add(eb::mul(eb::num(2L), x), eb::num(1L));
    Expr expo = eb::add(eb::mul(eb::num(2L), eb::log3(base)), eb::num(1L));
    return eb::pow(base, expo);
}

Expr make_g_fn() {
    return eb::gamma(eb::add(eb::var(), eb::num(3L)));
}

Expr make_s_fn() {
    Expr x = eb::var();
    Expr expo = eb::add(eb::mul(eb::num(2L), eb::log2(x)), eb::num(1L));
    return eb::mul(eb::num(2L), eb::pow(x, expo));
}

Expr make_residual5_fn() {
    Expr x = eb::var();
    Expr expo = eb::add(eb::mul(eb::num(2L), eb::log2(x)), eb::num(5L));
    return eb::pow(x, expo);
}

Expr substitute(const Expr& e, const Expr& value) {
    using K = BoundExpr::Kind;
    switch (e->kind) {
        case K::Rat: return e;
        case K::Var: return value;
        default: {
            auto n = std::make_shared<BoundExpr>();
            n->kind = e->kind;
            n->value = e->value;
            if (e->a) n->a = substitute(e->a, value);
            if (e->b) n->b = substitute(e->b, value);
            return n;
        }
    }
}

}  // namespace

Expr f_fn() {
    static const Expr fn = make_f_fn();
    return fn;
}
Expr g_fn() {
    static const Expr fn = make_g_fn();
    return fn;
}
Expr s_fn() {
    static const Expr fn = make_s_fn();
    return fn;
}
Expr residual5_fn() {
    static const Expr fn = make_residual5_fn();
    return fn;
}

Expr at(const Expr& fn, const BigInt& point) { return substitute(fn, eb::num(point)); }
Expr at(const Expr& fn, long point) { return at(fn, BigInt(point)); }

Expr f_at(const BigInt& n) { return at(f_fn(), n); }
Expr f_at(long n) { return f_at(BigInt(n)); }
Expr ftilde_at(const BigInt& n) { return n == 2 ? eb::num(60L) : f_at(n); }
Expr ftilde_at(long n) { return ftilde_at(BigInt(n)); }
Expr g_at(long n) { return at(g_fn(), n); }
Expr s_at(const BigInt& n) { return at(s_fn(), n); }
Expr s_at(long n) { return s_at(BigInt(n)); }

namespace {

Expr envelope_at(long n) {
    if (n < 2) throw DomainError("envelope requires n >= 2");
    long q = (n - 20) * (n - 20) + 1000;
    Expr expo = eb::num(BigRational(4020, q));
    return eb::mul(eb::num(factorial(static_cast<unsigned long>(n + 2))),
                   eb::pow(eb::num(n), expo));
}

Expr residual1_at(long n) { return s_at(n); }

}  // namespace

Expr named_bound(const std::string& name, long n) {
    if (n < 1) throw DomainError("named_bound requires n >= 1");
    if (name == "f") return f_at(n);
    if (name == "ftilde") return ftilde_at(n);
    if (name == "g") return g_at(n);
    if (name == "s") return s_at(n);
    if (name == "envelope") return envelope_at(n);
    if (name == "case-bound") return case_bound(n);
    if (name == "residual-5") return at(residual5_fn(), n);
    if (name == "residual-1") return residual1_at(n);
    throw UnknownName("no bound named '" + name + "'");
}

BigInt sp_order(unsigned long a, unsigned long q) {
    // |Sp_2a(F_q)| = q^(a^2) * prod_{i=1..a} (q^(2i) - 1)
    BigInt r = pow_bigint(BigInt(q), a * a);
    for (unsigned long i = 1; i <= a; ++i) r *= pow_bigint(BigInt(q), 2 * i) - 1;
    return r;
}

BigInt orth_order(unsigned long a, int eps) {
    // |O^eps_2a(F_2)| = 2 * 2^(a(a-1)) * (2^a - eps) * prod_{i=1..a-1} (2^(2i) - 1)
    BigInt r = 2 * pow_bigint(BigInt(2), a * (a - 1));
    r *= pow_bigint(BigInt(2), a) - eps;
    for (unsigned long i = 1; i < a; ++i) r *= pow_bigint(BigInt(2), 2 * i) - 1;
    return r;
}

ExtraspecialOrders extraspecial_aut_orders(unsigned long q, unsigned long a) {
    if (a < 1) throw DomainError("extraspecial: a >= 1 required");
    BigInt qz(q);
    if (mpz_probab_prime_p(qz.get_mpz_t(), 40) == 0)
        throw NotPrime(std::to_string(q) + " is not prime");
    ExtraspecialOrders out;
    out.degree = pow_bigint(qz, a);
    BigInt inner = pow_bigint(qz, 2 * a);
    if (q == 2) {
        out.aut_c = inner * std::max(orth_order(a, +1), orth_order(a, -1));
        out.aut = out.aut_c;
    } else {
        out.aut_c = inner * sp_order(a, q);
        out.aut = out.aut_c * (q - 1);
    }
    // N(d, q): d^(2 log3 d + 3) if q odd; 2 d^(2 log2 d + 1) if q = 2, d > 2; 24 if d <= 2
    Expr d = eb::num(out.degree);
    if (q != 2) {
        out.n_bound = eb::pow(d, eb::add(eb::mul(eb::num(2L), eb::log3(d)), eb::num(3L)));
    } else if (out.degree > 2) {
        out.n_bound = eb::mul(eb::num(2L),
                              eb::pow(d, eb::add(eb::mul(eb::num(2L), eb::log2(d)), eb::num(1L))));
    } else {
        out.n_bound = eb::num(24L);
    }
    return out;
}

BigInt lie_order_upper(const LieTypeId& id) {
    LieFamilyRecord rec = lie_lookup(id);
    auto v = id.m_pow_exact(BigInt(rec.dimension), BigInt(1));
    if (!v) throw DomainError(id.str() + ": m^d is not an integer");
    return *v;
}

namespace {

// exact comparison m^b <= bound, with b rational
bool m_pow_le(const LieTypeId& id, const BigRational& b, unsigned long bound) {
    // q^(s2*b/2) <= bound  <=>  q^(s2*num) <= bound^(2*den)
    BigInt lhs_exp = BigInt(id.s2) * b.get_num();
    BigInt rhs_exp = 2 * b.get_den();
    BigInt lhs = pow_bigint(BigInt(id.q), lhs_exp.get_ui());
    BigInt rhs = pow_bigint(BigInt(bound), rhs_exp.get_ui());
    return lhs <= rhs;
}

Expr half_mb_minus_one(const LieTypeId& id, const BigRational& b) {
    Expr mb = eb::pow(eb::num(BigInt(id.q)),
                      eb::num(BigRational(BigInt(id.s2) * b.get_num(), 2 * b.get_den())));
    return eb::div(eb::sub(mb, eb::num(1L)), eb::num(2L));
}

}  // namespace

OutOrderBounds out_order_bounds(const LieTypeId& id) {
    if (is_solvable_exception(id))
        throw ExcludedGroup(id.str() + " has solvable central quotient");
    LieFamilyRecord rec = lie_lookup(id);
    OutOrderBounds out;
    Expr x = half_mb_minus_one(id, rec.degree_exponent);
    out.power_bound = eb::mul(x, x);
    if (auto tab = outer_exception_order(lie_display_name(id))) {
        out.exact = *tab;
        out.log_bound = eb::num(static_cast<long>(*tab));
        return out;
    }
    if (m_pow_le(id, rec.degree_exponent, 8)) {
        out.exact = 2;
        out.log_bound = eb::num(2L);
        return out;
    }
    bool d4_q2 = id.family == LieFamily::D && id.rank == 4 && id.q == 2;
    BigRational coeff = d4_q2 ? BigRational(48, 10) : BigRational(303, 100);
    out.log_bound = eb::mul(eb::num(coeff), eb::log2(x));
    return out;
}

Expr equal_char_stabilizer_bound(LieFamily family, int rank, long n) {
    if (n < 2) throw DomainError("degree >= 2 required");
    if (family == LieFamily::A && rank == 2 && n == 3) return eb::num(6L);
    return eb::mul(eb::num(n), eb::log2(eb::num(n)));
}

long min_n(const BigInt& order) {
    if (order < 2) throw DomainError("min_n requires order >= 2");
    Expr target = eb::num(order);
    auto ge = [&](long m) {
        return certified_compare(f_at(m), target, BigInt(1)) != Ordering::Less;
    };
    long hi = 1;
    while (!ge(hi)) {
        hi *= 2;
        if (hi > (1L << 40)) throw DomainError("min_n: order out of supported range");
    }
    long lo = hi / 2;  // f(lo) < order <= f(hi), or hi == 1
    while (lo + 1 < hi) {
        long mid = lo + (hi - lo) / 2;
        if (ge(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

MinNFormula min_n_formula(const BigInt& order) {
    if (order < 2) throw DomainError("min_n_formula requires order >= 2");
    auto closed = [&](const BigRational& disc_const) {
        // x = (-1 + sqrt(disc_const + 8 log3 |M|)) / 4; result = ceil((3^x - 1)/2)
        Expr L = eb::log3(eb::num(order));
        Expr disc = eb::add(eb::num(disc_const), eb::mul(eb::num(8L), L));
        Expr x = eb::div(eb::add(eb::num(-1L), eb::pow(disc, eb::num(BigRational(1, 2)))),
                         eb::num(4L));
        Expr val = eb::div(eb::sub(eb::pow(eb::num(3L), x), eb::num(1L)), eb::num(2L));
        return certified_ceil(val, BigInt(1)).get_si();
    };
    return {closed(BigRational(1)), closed(BigRational(1, 2))};
}

namespace {
Expr tilde_bound_at(long m) {
    Expr x = eb::num(m);
    Expr expo = eb::add(eb::mul(eb::num(2L), eb::log2(x)), eb::num(BigRational(108, 25)));
    return eb::pow(x, expo);
}
}  // namespace

long min_n_tilde(const BigInt& order) {
    if (order < 2) throw DomainError("min_n_tilde requires order >= 2");
    Expr target = eb::num(order);
    auto ge = [&](long m) {
        return certified_compare(tilde_bound_at(m), target, BigInt(1)) != Ordering::Less;
    };
    long hi = 2;
    while (!ge(hi)) {
        hi *= 2;
        if (hi > (1L << 40)) throw DomainError("min_n_tilde: order out of supported range");
    }
    if (hi == 2) return 2;
    long lo = hi / 2;
    while (lo + 1 < hi) {
        long mid = lo + (hi - lo) / 2;
        if (ge(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

long alt_min_degree(long m, unsigned long p, AltKind kind) {
    if (m < 4) throw OutOfRange("alternating degree bounds start at m = 4");
    if (kind == AltKind::Linear) {
        if (p == 1) {
            if (m == 5) return 3;
            return m - 1;
        }
        if (m >= 9 || (p != 2 && m >= 7)) {
            if (m % p != 0) return m - 1;
            return m - 2;
        }
        switch (m) {  // 3.1(iii)
            case 4: return 2;
            case 5: return 2;
            case 6: return 3;
            case 7: return 4;
            case 8: return 4;
        }
        return m - 2;  // unreachable
    }
    // projective, non-lifting
    static constexpr std::array<long, 13> table = {2, 2, 3, 3, 8, 8, 8, 16, 16, 16, 32, 32, 128};
    if (m <= 16) return table[static_cast<size_t>(m - 4)];
    long s = static_cast<long>(mpz_popcount(BigInt(m).get_mpz_t()));
    long e = (m - s - 1) / 2;  // floor; reproduces the table rows
    return BigInt(pow_bigint(BigInt(2), static_cast<unsigned long>(e))).get_si();
}

Expr sporadic_F(const std::string& group, long n) {
    if (const SpecialBoundRecord* r = special_bound_record(group)) {
        if (n < r->a1) return eb::num(1L);
        if (n < r->a2) return eb::num(r->aut_order);
        return f_at(n);
    }
    const SimpleGroupRecord& g = group_record(group);
    if (g.kind != GroupKind::Sporadic)
        throw UnknownGroup(group + " has no sporadic bound function");
    if (n <= 3) return eb::num(1L);
    return f_at(n);
}

Expr case_bound(long n) {
    if (n < 2) throw DomainError("case_bound requires n >= 2");
    switch (n) {
        case 4: return eb::mul(eb::num(BigRational(41, 10)), f_at(4));
        case 6: return eb::mul(eb::num(BigRational(1261, 100)), f_at(6));
        case 8: return eb::mul(eb::num(BigRational(2769, 100)), f_at(8));
        case 12: return eb::mul(eb::num(231L), f_at(12));
        default:
            if (n > 12) return eb::num(factorial(static_cast<unsigned long>(n + 2)));
            return eb::mul(eb::num(n), f_at(n));  // n = 2,3,5,7,9,10,11
    }
}

ResidualBounds quasiprimitive_residual_bound(long n) {
    if (n < 2) throw DomainError("residual bounds require n >= 2");
    ResidualBounds out;
    out.general = at(residual5_fn(), n);
    if (n >= 39) out.large_n = s_at(n);
    return out;
}

}  // namespace lgb

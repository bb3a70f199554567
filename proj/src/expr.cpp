#include "lgb/expr.hpp"

#include <cstdlib>

namespace lgb {

namespace eb {

namespace {
Expr node(BoundExpr::Kind k, Expr a = nullptr, Expr b = nullptr) {
    auto e = std::make_shared<BoundExpr>();
    e->kind = k;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}
}  // namespace

namespace {
bool is_rat(const Expr& e, long v) {
    return e->kind == BoundExpr::Kind::Rat && e->value == v;
}
}  // namespace

Expr num(const BigRational& q) {
    auto e = std::make_shared<BoundExpr>();
    e->kind = BoundExpr::Kind::Rat;
    e->value = q;
    e->value.canonicalize();
    return e;
}
Expr num(const BigInt& z) { return num(BigRational(z)); }
Expr num(long v) { return num(BigRational(v)); }
Expr var() { return node(BoundExpr::Kind::Var); }
Expr add(Expr x, Expr y) {
    if (is_rat(x, 0)) return y;
    if (is_rat(y, 0)) return x;
    return node(BoundExpr::Kind::Add, std::move(x), std::move(y));
}
Expr sub(Expr x, Expr y) {
    if (is_rat(y, 0)) return x;
    return node(BoundExpr::Kind::Sub, std::move(x), std::move(y));
}
Expr mul(Expr x, Expr y) {
    if (is_rat(x, 1)) return y;
    if (is_rat(y, 1)) return x;
    return node(BoundExpr::Kind::Mul, std::move(x), std::move(y));
}
Expr div(Expr x, Expr y) {
    if (is_rat(y, 1)) return x;
    return node(BoundExpr::Kind::Div, std::move(x), std::move(y));
}
Expr pow(Expr base, Expr exponent) {
    if (is_rat(exponent, 1)) return base;
    return node(BoundExpr::Kind::Pow, std::move(base), std::move(exponent));
}
Expr ln(Expr x) { return node(BoundExpr::Kind::Ln, std::move(x)); }
Expr log2(Expr x) { return node(BoundExpr::Kind::Log2, std::move(x)); }
Expr log3(Expr x) { return node(BoundExpr::Kind::Log3, std::move(x)); }
Expr gamma(Expr x) { return node(BoundExpr::Kind::Gamma, std::move(x)); }
Expr fact(Expr x) { return node(BoundExpr::Kind::Fact, std::move(x)); }

}  // namespace eb

mpfr_prec_t precision_cap() {
    static mpfr_prec_t cap = [] {
        if (const char* env = std::getenv("JB_PRECISION_CAP")) {
            long v = std::atol(env);
            if (v >= kPrecisionStart) return static_cast<mpfr_prec_t>(v);
        }
        return kPrecisionCapDefault;
    }();
    return cap;
}

namespace {

// Factorials above this stay symbolic; comparisons go through lngamma.
constexpr unsigned long kFactorialCutoff = 1000000;

RealInterval ln3_interval(mpfr_prec_t prec) {
    RealInterval three = RealInterval::from_int(BigInt(3), prec);
    return three.ln();
}

RealInterval gamma_interval(const RealInterval& x) {
    if (mpfr_cmp_ui(x.lo(), 2) < 0) throw DomainError("Gamma evaluated below 2");
    return x.lngamma().exp();
}

}  // namespace

RealInterval eval_interval(const Expr& e, const BigInt& point, mpfr_prec_t prec) {
    using K = BoundExpr::Kind;
    switch (e->kind) {
        case K::Rat:
            return RealInterval::from_rational(e->value, prec);
        case K::Var:
            return RealInterval::from_int(point, prec);
        case K::Add:
            return eval_interval(e->a, point, prec).add(eval_interval(e->b, point, prec));
        case K::Sub:
            return eval_interval(e->a, point, prec).sub(eval_interval(e->b, point, prec));
        case K::Mul:
            return eval_interval(e->a, point, prec).mul(eval_interval(e->b, point, prec));
        case K::Div:
            return eval_interval(e->a, point, prec).div(eval_interval(e->b, point, prec));
        case K::Pow: {
            // exact shortcut for integer exponents keeps powers of integers tight
            auto base = exact_value(e->a, point);
            auto expo = exact_value(e->b, point);
            if (base && expo && expo->get_den() == 1 && expo->get_num() >= 0 &&
                expo->get_num().fits_ulong_p()) {
                unsigned long k = expo->get_num().get_ui();
                BigRational r = *base;
                BigRational p(pow_bigint(r.get_num(), k));
                p /= BigRational(pow_bigint(r.get_den(), k));
                p.canonicalize();
                return RealInterval::from_rational(p, prec);
            }
            return eval_interval(e->a, point, prec).pow(eval_interval(e->b, point, prec));
        }
        case K::Ln:
            return eval_interval(e->a, point, prec).ln();
        case K::Log2:
            return eval_interval(e->a, point, prec).log2();
        case K::Log3:
            return eval_interval(e->a, point, prec).ln().div(ln3_interval(prec));
        case K::Gamma: {
            auto arg = exact_value(e->a, point);
            if (arg && arg->get_den() == 1 && arg->get_num() > 0 &&
                arg->get_num().fits_ulong_p() &&
                arg->get_num().get_ui() <= kFactorialCutoff) {
                return RealInterval::from_int(factorial(arg->get_num().get_ui() - 1), prec);
            }
            return gamma_interval(eval_interval(e->a, point, prec));
        }
        case K::Fact: {
            auto arg = exact_value(e->a, point);
            if (arg && arg->get_den() == 1 && arg->get_num() >= 0 &&
                arg->get_num().fits_ulong_p() &&
                arg->get_num().get_ui() <= kFactorialCutoff) {
                return RealInterval::from_int(factorial(arg->get_num().get_ui()), prec);
            }
            RealInterval a = eval_interval(e->a, point, prec);
            RealInterval one = RealInterval::from_int(BigInt(1), prec);
            return gamma_interval(a.add(one));
        }
    }
    throw DomainError("unreachable expression kind");
}

RealInterval eval_interval(const Expr& expr, long point, mpfr_prec_t precision) {
    return eval_interval(expr, BigInt(point), precision);
}

RealInterval eval_ln_interval(const Expr& e, const BigInt& point, mpfr_prec_t prec) {
    using K = BoundExpr::Kind;
    switch (e->kind) {
        case K::Mul:
            return eval_ln_interval(e->a, point, prec).add(eval_ln_interval(e->b, point, prec));
        case K::Div:
            return eval_ln_interval(e->a, point, prec).sub(eval_ln_interval(e->b, point, prec));
        case K::Pow:
            return eval_ln_interval(e->a, point, prec).mul(eval_interval(e->b, point, prec));
        case K::Gamma: {
            RealInterval a = eval_interval(e->a, point, prec);
            return a.lngamma();
        }
        case K::Fact: {
            RealInterval a = eval_interval(e->a, point, prec);
            RealInterval one = RealInterval::from_int(BigInt(1), prec);
            return a.add(one).lngamma();
        }
        default: {
            RealInterval v = eval_interval(e, point, prec);
            if (v.overflowed()) throw DomainError("value too large for direct ln fallback");
            return v.ln();
        }
    }
}

std::optional<BigRational> exact_value(const Expr& e, const BigInt& point) {
    using K = BoundExpr::Kind;
    switch (e->kind) {
        case K::Rat:
            return e->value;
        case K::Var:
            return BigRational(point);
        case K::Add: {
            auto x = exact_value(e->a, point), y = exact_value(e->b, point);
            if (x && y) return *x + *y;
            return std::nullopt;
        }
        case K::Sub: {
            auto x = exact_value(e->a, point), y = exact_value(e->b, point);
            if (x && y) return *x - *y;
            return std::nullopt;
        }
        case K::Mul: {
            auto x = exact_value(e->a, point), y = exact_value(e->b, point);
            if (x && y) return *x * *y;
            return std::nullopt;
        }
        case K::Div: {
            auto x = exact_value(e->a, point), y = exact_value(e->b, point);
            if (x && y && *y != 0) return *x / *y;
            return std::nullopt;
        }
        case K::Pow: {
            auto base = exact_value(e->a, point), expo = exact_value(e->b, point);
            if (!base || !expo || expo->get_den() != 1) return std::nullopt;
            BigInt k = expo->get_num();
            if (!k.fits_slong_p()) return std::nullopt;
            long ks = k.get_si();
            unsigned long ka = static_cast<unsigned long>(ks < 0 ? -ks : ks);
            if (ka > 100000) return std::nullopt;
            if (*base == 0) {
                if (ks < 0) return std::nullopt;
                return BigRational(ks == 0 ? 1 : 0);
            }
            BigRational p(pow_bigint(base->get_num(), ka));
            p /= BigRational(pow_bigint(base->get_den(), ka));
            p.canonicalize();
            if (ks < 0) p = BigRational(1) / p;
            return p;
        }
        case K::Ln: {
            auto x = exact_value(e->a, point);
            if (x && *x == 1) return BigRational(0);
            return std::nullopt;
        }
        case K::Log2:
        case K::Log3: {
            auto x = exact_value(e->a, point);
            if (!x) return std::nullopt;
            unsigned long base = e->kind == K::Log2 ? 2 : 3;
            if (x->get_den() == 1) {
                if (auto k = exact_log(x->get_num(), base)) return BigRational(*k);
            } else if (x->get_num() == 1) {
                if (auto k = exact_log(x->get_den(), base)) return -BigRational(*k);
            }
            return std::nullopt;
        }
        case K::Gamma: {
            auto x = exact_value(e->a, point);
            if (x && x->get_den() == 1 && x->get_num() > 0 && x->get_num().fits_ulong_p() &&
                x->get_num().get_ui() <= kFactorialCutoff)
                return BigRational(factorial(x->get_num().get_ui() - 1));
            return std::nullopt;
        }
        case K::Fact: {
            auto x = exact_value(e->a, point);
            if (x && x->get_den() == 1 && x->get_num() >= 0 && x->get_num().fits_ulong_p() &&
                x->get_num().get_ui() <= kFactorialCutoff)
                return BigRational(factorial(x->get_num().get_ui()));
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::optional<BigRational> exact_value(const Expr& expr, long point) {
    return exact_value(expr, BigInt(point));
}

namespace {

bool structurally_equal(const Expr& a, const Expr& b) {
    if (a == b) return true;
    if (a->kind != b->kind) return false;
    if (a->kind == BoundExpr::Kind::Rat) return a->value == b->value;
    if ((a->a == nullptr) != (b->a == nullptr)) return false;
    if ((a->b == nullptr) != (b->b == nullptr)) return false;
    if (a->a && !structurally_equal(a->a, b->a)) return false;
    if (a->b && !structurally_equal(a->b, b->b)) return false;
    return true;
}

Ordering compare_at_precision(const Expr& a, const Expr& b, const BigInt& point,
                              mpfr_prec_t prec, bool* separable) {
    *separable = true;
    RealInterval ia = eval_interval(a, point, prec);
    RealInterval ib = eval_interval(b, point, prec);
    if (ia.overflowed() || ib.overflowed()) {
        // retry in log domain; both sides must be positive
        try {
            ia = eval_ln_interval(a, point, prec);
            ib = eval_ln_interval(b, point, prec);
        } catch (const DomainError&) {
            *separable = false;
            return Ordering::Undecidable;
        }
    }
    if (ia.definitely_less(ib)) return Ordering::Less;
    if (ib.definitely_less(ia)) return Ordering::Greater;
    return Ordering::Undecidable;
}

}  // namespace

Ordering certified_compare(const Expr& a, const Expr& b, const BigInt& point) {
    if (structurally_equal(a, b)) return Ordering::Equal;
    auto ea = exact_value(a, point);
    auto eb_ = exact_value(b, point);
    if (ea && eb_) {
        int c = cmp(*ea, *eb_);
        return c < 0 ? Ordering::Less : c > 0 ? Ordering::Greater : Ordering::Equal;
    }
    for (mpfr_prec_t prec = kPrecisionStart; prec <= precision_cap(); prec *= 2) {
        bool separable = true;
        Ordering o = compare_at_precision(a, b, point, prec, &separable);
        if (o != Ordering::Undecidable) return o;
        if (!separable) break;
    }
    return Ordering::Undecidable;
}

Ordering certified_compare(const Expr& a, const Expr& b, long point) {
    return certified_compare(a, b, BigInt(point));
}

bool certified_le(const Expr& a, const Expr& b, const BigInt& point) {
    Ordering o = certified_compare(a, b, point);
    return o == Ordering::Less || o == Ordering::Equal;
}

BigInt certified_ceil(const Expr& expr, const BigInt& point) {
    if (auto v = exact_value(expr, point)) {
        BigInt q;
        mpz_cdiv_q(q.get_mpz_t(), v->get_num().get_mpz_t(), v->get_den().get_mpz_t());
        return q;
    }
    for (mpfr_prec_t prec = kPrecisionStart; prec <= precision_cap(); prec *= 2) {
        RealInterval iv = eval_interval(expr, point, prec);
        if (iv.overflowed()) break;
        mpz_class clo, chi;
        mpfr_get_z(clo.get_mpz_t(), iv.lo(), MPFR_RNDU);  // ceil of lo
        mpfr_get_z(chi.get_mpz_t(), iv.hi(), MPFR_RNDU);  // ceil of hi
        if (clo == chi) return clo;
    }
    throw DomainError("certified_ceil: enclosure straddles an integer at the precision cap");
}

std::string to_string(Ordering o) {
    switch (o) {
        case Ordering::Less: return "Less";
        case Ordering::Equal: return "Equal";
        case Ordering::Greater: return "Greater";
        case Ordering::Undecidable: return "Undecidable";
    }
    return "?";
}

}  // namespace lgb

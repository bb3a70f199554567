#include "lgb/exact.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstring>

namespace lgb {

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt pow_bigint(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

BigInt gcd_bigint(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

BigRational make_rational(const BigInt& num, const BigInt& den) {
    BigRational q(num);
    q /= BigRational(den);
    q.canonicalize();
    return q;
}

BigRational parse_decimal(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text) {
        if (c == ' ' || c == ',' || c == '_') continue;
        s.push_back(c);
    }
    // normalize a*10^b and a·10^b forms to a"e"b
    auto star = s.find("*10^");
    if (star != std::string::npos) s = s.substr(0, star) + "e" + s.substr(star + 4);
    auto epos = s.find_first_of("eE");
    long exp10 = 0;
    std::string mant = s;
    if (epos != std::string::npos) {
        exp10 = std::stol(s.substr(epos + 1));
        mant = s.substr(0, epos);
    }
    bool neg = false;
    if (!mant.empty() && (mant[0] == '+' || mant[0] == '-')) {
        neg = mant[0] == '-';
        mant = mant.substr(1);
    }
    auto dot = mant.find('.');
    std::string digits = mant;
    long frac = 0;
    if (dot != std::string::npos) {
        frac = static_cast<long>(mant.size() - dot - 1);
        digits = mant.substr(0, dot) + mant.substr(dot + 1);
    }
    if (digits.empty()) throw DomainError("parse_decimal: empty '" + text + "'");
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw DomainError("parse_decimal: bad char in '" + text + "'");
    BigInt n(digits, 10);
    if (neg) n = -n;
    long net = exp10 - frac;
    BigRational q(n);
    BigInt p10 = pow_bigint(BigInt(10), static_cast<unsigned long>(std::labs(net)));
    if (net >= 0)
        q *= BigRational(p10);
    else
        q /= BigRational(p10);
    q.canonicalize();
    return q;
}

std::string to_scientific(const BigInt& value, int sig_figs) {
    if (value == 0) return "0";
    std::string d = value.get_str();
    bool neg = d[0] == '-';
    if (neg) d = d.substr(1);
    long exp10 = static_cast<long>(d.size()) - 1;
    std::string m = d.substr(0, static_cast<size_t>(sig_figs) + 1);
    while (static_cast<int>(m.size()) < sig_figs + 1) m.push_back('0');
    // round the extra digit
    BigInt mi(m, 10);
    BigInt rounded = (mi + 5) / 10;
    std::string rs = rounded.get_str();
    if (static_cast<int>(rs.size()) > sig_figs) {  // carry, e.g. 999.5 -> 1000
        rs = rs.substr(0, static_cast<size_t>(sig_figs));
        ++exp10;
    }
    std::string out = neg ? "-" : "";
    out += rs.substr(0, 1);
    if (sig_figs > 1) out += "." + rs.substr(1);
    out += "e" + std::to_string(exp10);
    return out;
}

int printed_sig_figs(const std::string& text) {
    int n = 0;
    bool seen_nonzero = false;
    for (char c : text) {
        if (c == 'e' || c == 'E' || c == '*') break;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            if (c != '0') seen_nonzero = true;
            if (seen_nonzero) ++n;
        }
    }
    return std::max(n, 1);
}

namespace {

// value rounded (resp. truncated) to sig_figs decimal figures, as a rational.
BigRational snap_sig_figs(const BigRational& value, int sig_figs, bool truncate) {
    if (value == 0) return value;
    if (value < 0) throw DomainError("snap_sig_figs: negative");
    // find e with 10^e <= value < 10^(e+1)
    long e = 0;
    BigRational ten(10), v(value);
    while (v >= 10) { v /= ten; ++e; }
    while (v < 1) { v *= ten; --e; }
    // scaled = value / 10^(e - sig_figs + 1); snap to integer
    long shift = e - sig_figs + 1;
    BigRational scaled = value;
    BigInt p10 = pow_bigint(BigInt(10), static_cast<unsigned long>(std::labs(shift)));
    if (shift >= 0) scaled /= BigRational(p10); else scaled *= BigRational(p10);
    BigInt num = scaled.get_num(), den = scaled.get_den();
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (!truncate && r * 2 >= den) q += 1;
    BigRational snapped(q);
    if (shift >= 0) snapped *= BigRational(p10); else snapped /= BigRational(p10);
    snapped.canonicalize();
    return snapped;
}

}  // namespace

bool matches_printed(const BigRational& value, const BigRational& printed,
                     int sig_figs, bool allow_truncation) {
    if (snap_sig_figs(value, sig_figs, /*truncate=*/false) == printed) return true;
    if (allow_truncation && snap_sig_figs(value, sig_figs, /*truncate=*/true) == printed)
        return true;
    return false;
}

std::optional<unsigned long> exact_log(const BigInt& n, unsigned long base) {
    if (n <= 0) return std::nullopt;
    if (n == 1) return 0;
    BigInt b(base), v = n;
    unsigned long k = 0;
    while (mpz_divisible_p(v.get_mpz_t(), b.get_mpz_t())) {
        v /= b;
        ++k;
        if (v == 1) return k;
    }
    return std::nullopt;
}

RealInterval::RealInterval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_nan(lo_);
    mpfr_set_nan(hi_);
}

RealInterval::RealInterval(const RealInterval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RealInterval::RealInterval(RealInterval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

RealInterval& RealInterval::operator=(const RealInterval& o) {
    if (this != &o) {
        mpfr_set_prec(lo_, o.prec_);
        mpfr_set_prec(hi_, o.prec_);
        prec_ = o.prec_;
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

RealInterval& RealInterval::operator=(RealInterval&& o) noexcept {
    if (this != &o) {
        prec_ = o.prec_;
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }
    return *this;
}

RealInterval::~RealInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

RealInterval RealInterval::from_int(const BigInt& v, mpfr_prec_t prec) {
    RealInterval r(prec);
    mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::from_rational(const BigRational& v, mpfr_prec_t prec) {
    RealInterval r(prec);
    mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
    return r;
}

bool RealInterval::overflowed() const {
    return !mpfr_number_p(lo_) || !mpfr_number_p(hi_);
}

bool RealInterval::is_positive() const {
    return mpfr_number_p(lo_) && mpfr_sgn(lo_) > 0;
}

bool RealInterval::definitely_less(const RealInterval& o) const {
    if (overflowed() || o.overflowed()) return false;
    return mpfr_cmp(hi_, o.lo_) < 0;
}

bool RealInterval::contains(const BigRational& v) const {
    if (overflowed()) return false;
    return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

bool RealInterval::contains_interval(const RealInterval& inner) const {
    if (overflowed() || inner.overflowed()) return false;
    return mpfr_cmp(lo_, inner.lo_) <= 0 && mpfr_cmp(hi_, inner.hi_) >= 0;
}

BigRational RealInterval::midpoint() const {
    mpq_class a, b;
    mpfr_get_q(a.get_mpq_t(), lo_);
    mpfr_get_q(b.get_mpq_t(), hi_);
    BigRational m = (a + b) / 2;
    m.canonicalize();
    return m;
}

double RealInterval::width_log2() const {
    mpfr_t w;
    mpfr_init2(w, 64);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double out = mpfr_zero_p(w) || mpfr_sgn(w) < 0
                     ? -std::numeric_limits<double>::infinity()
                     : static_cast<double>(mpfr_get_exp(w));
    mpfr_clear(w);
    return out;
}

RealInterval RealInterval::add(const RealInterval& o) const {
    RealInterval r(prec_);
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::sub(const RealInterval& o) const {
    RealInterval r(prec_);
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::mul(const RealInterval& o) const {
    RealInterval r(prec_);
    mpfr_t c[4];
    for (auto& x : c) mpfr_init2(x, prec_);
    mpfr_mul(c[0], lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(c[1], lo_, o.hi_, MPFR_RNDD);
    mpfr_mul(c[2], hi_, o.lo_, MPFR_RNDD);
    mpfr_mul(c[3], hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, c[0], c[1], MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, c[2], MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, c[3], MPFR_RNDD);
    mpfr_mul(c[0], lo_, o.lo_, MPFR_RNDU);
    mpfr_mul(c[1], lo_, o.hi_, MPFR_RNDU);
    mpfr_mul(c[2], hi_, o.lo_, MPFR_RNDU);
    mpfr_mul(c[3], hi_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, c[0], c[1], MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, c[2], MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, c[3], MPFR_RNDU);
    for (auto& x : c) mpfr_clear(x);
    return r;
}

RealInterval RealInterval::div(const RealInterval& o) const {
    if (mpfr_sgn(o.lo_) <= 0 && mpfr_sgn(o.hi_) >= 0)
        throw DomainError("interval division by an interval containing 0");
    RealInterval r(prec_);
    mpfr_t c[4];
    for (auto& x : c) mpfr_init2(x, prec_);
    mpfr_div(c[0], lo_, o.lo_, MPFR_RNDD);
    mpfr_div(c[1], lo_, o.hi_, MPFR_RNDD);
    mpfr_div(c[2], hi_, o.lo_, MPFR_RNDD);
    mpfr_div(c[3], hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, c[0], c[1], MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, c[2], MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, c[3], MPFR_RNDD);
    mpfr_div(c[0], lo_, o.lo_, MPFR_RNDU);
    mpfr_div(c[1], lo_, o.hi_, MPFR_RNDU);
    mpfr_div(c[2], hi_, o.lo_, MPFR_RNDU);
    mpfr_div(c[3], hi_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, c[0], c[1], MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, c[2], MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, c[3], MPFR_RNDU);
    for (auto& x : c) mpfr_clear(x);
    return r;
}

RealInterval RealInterval::neg() const {
    RealInterval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::ln() const {
    if (!is_positive()) throw DomainError("ln of a non-positive interval");
    RealInterval r(prec_);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::log2() const {
    if (!is_positive()) throw DomainError("log2 of a non-positive interval");
    RealInterval r(prec_);
    mpfr_log2(r.lo_, lo_, MPFR_RNDD);
    mpfr_log2(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::exp() const {
    RealInterval r(prec_);
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::sqrt() const {
    if (mpfr_sgn(lo_) < 0) throw DomainError("sqrt of a negative interval");
    RealInterval r(prec_);
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::lngamma() const {
    // lngamma is increasing for x >= 2; we only evaluate there.
    if (mpfr_cmp_ui(lo_, 2) < 0) throw DomainError("lngamma below monotone region");
    RealInterval r(prec_);
    mpfr_lngamma(r.lo_, lo_, MPFR_RNDD);
    mpfr_lngamma(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::pow(const RealInterval& y) const {
    return ln().mul(y).exp();
}

std::string RealInterval::str(int digits) const {
    char* a = nullptr;
    char* b = nullptr;
    mpfr_asprintf(&a, "%.*Rg", digits, lo_);
    mpfr_asprintf(&b, "%.*Rg", digits, hi_);
    std::string s = std::string("[") + a + ", " + b + "]";
    mpfr_free_str(a);
    mpfr_free_str(b);
    return s;
}

}  // namespace lgb

#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace lgb {

using BigInt = mpz_class;
using BigRational = mpq_class;

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Exact helpers on top of GMP.
BigInt factorial(unsigned long n);
BigInt pow_bigint(const BigInt& base, unsigned long exp);
BigInt gcd_bigint(const BigInt& a, const BigInt& b);
BigRational make_rational(const BigInt& num, const BigInt& den);

// Parses "4.16e18", "9.5*10^4", plain decimals. The value must be an exact
// decimal; returns an exact rational.
BigRational parse_decimal(const std::string& text);

// Scientific rendering of a big integer with the given significant digits,
// e.g. 4157776806543360000 -> "4.158e18".
std::string to_scientific(const BigInt& value, int sig_figs = 4);

// Rounds `value` to `sig_figs` significant figures and compares with the
// printed decimal. `allow_truncation` accepts values the source truncated
// rather than rounded.
bool matches_printed(const BigRational& value, const BigRational& printed,
                     int sig_figs, bool allow_truncation = true);
int printed_sig_figs(const std::string& text);

// If n is an exact power of `base` (n = base^k, k >= 0), returns k.
std::optional<unsigned long> exact_log(const BigInt& n, unsigned long base);

// A closed two-sided enclosure [lo, hi] of a real number, lo and hi dyadic
// rationals held at a fixed MPFR precision. All operations round lo down and
// hi up, so enclosures are preserved.
class RealInterval {
public:
    explicit RealInterval(mpfr_prec_t prec);
    RealInterval(const RealInterval& other);
    RealInterval(RealInterval&& other) noexcept;
    RealInterval& operator=(const RealInterval& other);
    RealInterval& operator=(RealInterval&& other) noexcept;
    ~RealInterval();

    static RealInterval from_int(const BigInt& v, mpfr_prec_t prec);
    static RealInterval from_rational(const BigRational& v, mpfr_prec_t prec);

    mpfr_prec_t precision() const { return prec_; }
    const mpfr_t& lo() const { return lo_; }
    const mpfr_t& hi() const { return hi_; }

    bool overflowed() const;           // either bound non-finite
    bool is_positive() const;          // lo > 0
    bool definitely_less(const RealInterval& other) const;   // hi < other.lo
    bool contains(const BigRational& v) const;
    bool contains_interval(const RealInterval& inner) const;
    BigRational midpoint() const;
    double width_log2() const;         // log2(hi - lo), -inf if exact

    RealInterval add(const RealInterval& o) const;
    RealInterval sub(const RealInterval& o) const;
    RealInterval mul(const RealInterval& o) const;
    RealInterval div(const RealInterval& o) const;
    RealInterval neg() const;
    RealInterval ln() const;           // requires lo > 0
    RealInterval log2() const;
    RealInterval exp() const;
    RealInterval sqrt() const;
    // ln(Gamma(x)); requires lo >= 2 (monotone region).
    RealInterval lngamma() const;
    // x^y as exp(y*ln x); requires lo > 0.
    RealInterval pow(const RealInterval& y) const;

    std::string str(int digits = 20) const;

private:
    mpfr_prec_t prec_;
    mpfr_t lo_;
    mpfr_t hi_;
};

}  // namespace lgb

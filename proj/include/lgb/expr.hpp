#pragma once

#include <memory>
#include <optional>
#include <string>

#include "lgb/exact.hpp"

namespace lgb {

// Expression tree for the closed-form bound functions. Nodes are immutable;
// trees are shared freely. `Var` is a free positive-integer variable bound at
// evaluation time.
struct BoundExpr;
using Expr = std::shared_ptr<const BoundExpr>;

struct BoundExpr {
    enum class Kind { Rat, Var, Add, Sub, Mul, Div, Pow, Ln, Log2, Log3, Gamma, Fact };
    Kind kind;
    BigRational value;  // Kind::Rat only
    Expr a, b;
};

namespace eb {
Expr num(const BigRational& q);
Expr num(const BigInt& z);
Expr num(long v);
Expr var();
Expr add(Expr x, Expr y);
Expr sub(Expr x, Expr y);
Expr mul(Expr x, Expr y);
Expr div(Expr x, Expr y);
Expr pow(Expr base, Expr exponent);
Expr ln(Expr x);
Expr log2(Expr x);
Expr log3(Expr x);
Expr gamma(Expr x);      // Gamma(x); exact factorial at integer points
Expr fact(Expr x);       // x!
}  // namespace eb

enum class Ordering { Less, Equal, Greater, Undecidable };

// Escalation ladder for certified comparisons: 128 -> 4096 bits (doubling).
// JB_PRECISION_CAP raises the cap.
inline constexpr mpfr_prec_t kPrecisionStart = 128;
inline constexpr mpfr_prec_t kPrecisionCapDefault = 4096;
mpfr_prec_t precision_cap();

// Evaluates expr at the given positive-integer point. The returned interval
// contains the true value. Throws DomainError when the expression is
// undefined at the point. Bounds may be infinite when the value exceeds the
// dyadic exponent range; certified_compare falls back to log evaluation then.
RealInterval eval_interval(const Expr& expr, const BigInt& point, mpfr_prec_t precision);
RealInterval eval_interval(const Expr& expr, long point, mpfr_prec_t precision);

// Enclosure of ln(expr(point)) for structurally positive expressions. Unlike
// eval_interval this stays representable for values like Gamma(10^21).
RealInterval eval_ln_interval(const Expr& expr, const BigInt& point, mpfr_prec_t precision);

// Exact rational value when the expression reduces to rational arithmetic at
// the point (integer powers, factorials below the cut-off, logs of exact
// powers of the base). Absent otherwise.
std::optional<BigRational> exact_value(const Expr& expr, const BigInt& point);
std::optional<BigRational> exact_value(const Expr& expr, long point);

// Less/Greater only when the two enclosures separate at some precision below
// the cap; Equal only when both sides have exact values and they agree.
Ordering certified_compare(const Expr& a, const Expr& b, const BigInt& point);
Ordering certified_compare(const Expr& a, const Expr& b, long point);

// a <= b certified (Less or Equal).
bool certified_le(const Expr& a, const Expr& b, const BigInt& point);

// Smallest integer >= value(expr at point), certified by escalation.
BigInt certified_ceil(const Expr& expr, const BigInt& point);

std::string to_string(Ordering o);

}  // namespace lgb

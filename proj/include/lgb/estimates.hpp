#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lgb/catalog.hpp"
#include "lgb/expr.hpp"

namespace lgb {

struct NotPrime : std::runtime_error {
    explicit NotPrime(const std::string& w) : std::runtime_error(w) {}
};
struct UnknownName : std::runtime_error {
    explicit UnknownName(const std::string& w) : std::runtime_error(w) {}
};

// The closed-form bound functions, as expressions in a free variable.
// f(x) = (2x+1)^(2 log3(2x+1) + 1)        the master bound
// ftilde = f with the value at 2 replaced by 60
// g(x) = Gamma(x+3)
// s(x) = 2 x^(2 log2 x + 1)
// envelope(x) = (x+2)! * x^(4020/((x-20)^2 + 1000))
// residual-5(x) = x^(2 log2 x + 5), residual-1(x) = 2 x^(2 log2 x + 1)
Expr f_fn();
Expr g_fn();
Expr s_fn();
Expr residual5_fn();

// Substitutes the point for the free variable, giving a closed expression.
Expr at(const Expr& fn, const BigInt& point);
Expr at(const Expr& fn, long point);

Expr f_at(const BigInt& n);
Expr f_at(long n);
Expr ftilde_at(long n);
Expr ftilde_at(const BigInt& n);
Expr g_at(long n);
Expr s_at(const BigInt& n);
Expr s_at(long n);

// named_bound: name in {f, ftilde, g, s, envelope, case-bound, residual-5,
// residual-1}; returns the closed expression at n. Throws UnknownName.
Expr named_bound(const std::string& name, long n);

// Aut bounds for an extraspecial group of order q^(1+2a) acting in degree
// d = q^a. aut_c = |Aut_c E| exactly, aut = |Aut E| = (q-1) aut_c; N_bound is
// the closed N(d, q) expression. Throws NotPrime.
struct ExtraspecialOrders {
    BigInt aut_c;
    BigInt aut;
    BigInt degree;  // q^a
    Expr n_bound;
};
ExtraspecialOrders extraspecial_aut_orders(unsigned long q, unsigned long a);

BigInt sp_order(unsigned long a, unsigned long q);           // |Sp_2a(F_q)|
BigInt orth_order(unsigned long a, int eps);                 // |O^eps_2a(F_2)|

// m^d, the order bound for a group of Lie type.
BigInt lie_order_upper(const LieTypeId& id);

// 4.5.4(a) / 4.5.5(a) outer-automorphism bounds; flat value 2 when m^b <= 8,
// table rows override. Throws ExcludedGroup for the solvable exceptions.
struct OutOrderBounds {
    Expr log_bound;
    Expr power_bound;
    std::optional<unsigned long> exact;  // flat or tabulated value when applicable
};
OutOrderBounds out_order_bounds(const LieTypeId& id);

// Corollary 5.2: 6 when family = A2 and n = 3, else n log2 n.
Expr equal_char_stabilizer_bound(LieFamily family, int rank, long n);

// Smallest m with f(m) >= order (direct certified search).
long min_n(const BigInt& order);
// Closed-form variant via the quadratic in log3|M|; `corrected` uses the
// discriminant 1 + 8L implied by the quadratic, `as_printed` the 0.5 + 8L
// variant as printed.
struct MinNFormula {
    long corrected;
    long as_printed;
};
MinNFormula min_n_formula(const BigInt& order);

// Smallest m >= 2 with m^(2 log2 m + 4.32) >= order.
long min_n_tilde(const BigInt& order);

enum class AltKind { Linear, ProjectiveNonLifting };
// Lower bound on the degree of a faithful irreducible (projective) Alt_m
// representation, characteristic p (1 = char 0).
long alt_min_degree(long m, unsigned long p, AltKind kind);

// The piecewise y_{a1,a2,b} bound for a sporadic (or tabulated special) group.
Expr sporadic_F(const std::string& group, long n);

// 9.1(a)/10.1(a)/11.1(a) shared piecewise bound.
Expr case_bound(long n);

// 11.1(b): first component n^(2 log n + 5); second 2 n^(2 log n + 1), present
// when n >= 39.
struct ResidualBounds {
    Expr general;
    std::optional<Expr> large_n;
};
ResidualBounds quasiprimitive_residual_bound(long n);

}  // namespace lgb

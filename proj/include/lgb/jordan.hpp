#pragma once

#include <map>
#include <optional>
#include <string>

#include "lgb/catalog.hpp"
#include "lgb/report.hpp"

namespace lgb {

// F(m, r, t) = t^m m! / (rm+2)!, the ratio driving the block-bound search.
BigRational ratio_F(unsigned long m, unsigned long r, const BigInt& t);

// Largest m with F(m, r, t) >= 1 (0 if F(1) < 1). `certificate` is true when
// the step ratio t(m+1)/((rm+3)...(rm+r+2)) is below 1 at m_star and keeps
// decreasing, so F stays below 1 for every larger m.
struct StableM {
    long m_star;
    bool certificate;
};
StableM stable_m(unsigned long r, const BigInt& t);

enum class Provenance { Factorial, Primitive, Product };

struct TableEntry {
    BigInt bound;
    int alpha_centi = 0;  // two-decimal ceiling of log_n(bound/(n+2)!)/4, times 100
    Provenance prov = Provenance::Factorial;
    int r = 0, m = 0;     // Primitive: bound = t_r^m m!
    int m1 = 0, m2 = 0;   // Product: bound = B(m1) B(m2)
    std::string prov_str() const;
};

struct BoundTable {
    int n_max = 0;
    std::map<int, TableEntry> entries;  // n >= 2
    const TableEntry& at(int n) const;
};

// Two-decimal ceiling of log_n(bound/(n+2)!)/4 in centi-units; exact integer
// arithmetic (smallest k with ratio^25 <= n^k). 0 iff bound == (n+2)!.
int alpha_of(long n, const BigInt& bound);

// Per-degree bound for irreducible subgroups: max of (n+2)! and t_r^m m! over
// factorizations n = r m, 2 <= r <= 12.
BoundTable irreducible_table(int n_max = 63);

// Least fixed point of B(n) <- max(B(n), B(m1) B(m2)) over m1 + m2 = n,
// m1, m2 >= 2; degrees above the base table seeded with (n+2)!.
BoundTable closure_table(const BoundTable& base, int n_max = 126);

// Cached canonical tables.
const BoundTable& irreducible_table_cached();
const BoundTable& closure_table_cached();

enum class BoundClass { Irreducible, General };

struct JordanBound {
    BigInt bound;
    int alpha_centi;
    std::string provenance;
};
// n <= 63: the table value with its alpha; n > 63: (n+2)! with alpha 0.
JordanBound jordan_bound(long n, BoundClass cls);

// p^(3a) * (n^4 (n+2)! for n <= 63, (n+2)! above).
BigInt brauer_feit_bound(unsigned long p, unsigned long a, long n);

// Certifies bound(n) <= (n+2)! n^(4020/((n-20)^2+1000)) and <= n^4 (n+2)!
// for every table row; exact integer comparisons.
CheckReport envelope_check(const BoundTable& table);

// Recomputes m_star and the alpha columns with the exact automorphism orders
// behind t_8 and t_12 and reports any cell that changes.
CheckReport sensitivity_report();

}  // namespace lgb

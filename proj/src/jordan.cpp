#include "lgb/jordan.hpp"

#include <sstream>

namespace lgb {

BigRational ratio_F(unsigned long m, unsigned long r, const BigInt& t) {
    if (m < 1 || r < 2) throw DomainError("ratio_F requires m >= 1, r >= 2");
    BigInt num = pow_bigint(t, m) * factorial(m);
    BigInt den = factorial(r * m + 2);
    return make_rational(num, den);
}

namespace {

// step ratio F(m+1)/F(m) = t (m+1) / ((rm+3)(rm+4)...(rm+r+2))
BigRational step_ratio(unsigned long m, unsigned long r, const BigInt& t) {
    BigInt den(1);
    for (unsigned long j = 3; j <= r + 2; ++j) den *= BigInt(r * m + j);
    return make_rational(t * BigInt(m + 1), den);
}

}  // namespace

StableM stable_m(unsigned long r, const BigInt& t) {
    StableM out{0, false};
    if (ratio_F(1, r, t) < 1) {
        out.m_star = 0;
    } else {
        unsigned long m = 1;
        while (ratio_F(m + 1, r, t) >= 1) {
            ++m;
            if (m > 100000) throw DomainError("stable_m: no descent found");
        }
        out.m_star = static_cast<long>(m);
    }
    unsigned long ms = static_cast<unsigned long>(out.m_star);
    // F < 1 for all larger m once the step ratio is < 1 and decreasing
    BigRational r1 = step_ratio(ms == 0 ? 1 : ms, r, t);
    BigRational r2 = step_ratio(ms + 1, r, t);
    out.certificate = r1 < 1 ? r2 <= r1 : (ratio_F(ms + 1, r, t) < 1 && r2 < 1);
    return out;
}

std::string TableEntry::prov_str() const {
    std::ostringstream os;
    switch (prov) {
        case Provenance::Factorial: os << "(n+2)!"; break;
        case Provenance::Primitive: os << "(r=" << r << ", m=" << m << ")"; break;
        case Provenance::Product: os << "(product " << m1 << "+" << m2 << ")"; break;
    }
    return os.str();
}

const TableEntry& BoundTable::at(int n) const {
    auto it = entries.find(n);
    if (it == entries.end()) throw OutOfRange("no table entry for n = " + std::to_string(n));
    return it->second;
}

int alpha_of(long n, const BigInt& bound) {
    BigInt fact = factorial(static_cast<unsigned long>(n + 2));
    if (bound < fact) throw DomainError("alpha_of: bound below (n+2)!");
    if (bound == fact) return 0;
    // smallest k with (bound/(n+2)!)^25 <= n^k, i.e. bound^25 <= (n+2)!^25 n^k
    BigInt lhs = pow_bigint(bound, 25);
    BigInt rhs = pow_bigint(fact, 25);
    BigInt nz(n);
    int k = 0;
    while (rhs < lhs) {
        rhs *= nz;
        ++k;
        if (k > 10000) throw DomainError("alpha_of: runaway exponent");
    }
    return k;
}

BoundTable irreducible_table(int n_max) {
    if (n_max < 2) throw DomainError("irreducible_table requires n_max >= 2");
    BoundTable table;
    table.n_max = n_max;
    for (int n = 2; n <= n_max; ++n) {
        TableEntry e;
        e.bound = factorial(static_cast<unsigned long>(n + 2));
        e.prov = Provenance::Factorial;
        for (const auto& c : primitive_ceilings()) {
            if (n % c.r != 0) continue;
            int m = n / c.r;
            BigInt cand = pow_bigint(c.t, static_cast<unsigned long>(m)) *
                          factorial(static_cast<unsigned long>(m));
            if (cand > e.bound) {
                e.bound = cand;
                e.prov = Provenance::Primitive;
                e.r = c.r;
                e.m = m;
            }
        }
        e.alpha_centi = alpha_of(n, e.bound);
        table.entries[n] = e;
    }
    return table;
}

BoundTable closure_table(const BoundTable& base, int n_max) {
    BoundTable table;
    table.n_max = n_max;
    for (int n = 2; n <= n_max; ++n) {
        if (base.entries.count(n)) {
            table.entries[n] = base.at(n);
        } else {
            TableEntry e;
            e.bound = factorial(static_cast<unsigned long>(n + 2));
            e.prov = Provenance::Factorial;
            table.entries[n] = e;
        }
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int n = 4; n <= n_max; ++n) {
            TableEntry& e = table.entries[n];
            for (int m1 = 2; m1 <= n / 2; ++m1) {
                int m2 = n - m1;
                BigInt cand = table.at(m1).bound * table.at(m2).bound;
                if (cand > e.bound) {
                    e.bound = cand;
                    e.prov = Provenance::Product;
                    e.m1 = m1;
                    e.m2 = m2;
                    e.r = e.m = 0;
                    changed = true;
                }
            }
        }
    }
    for (auto& [n, e] : table.entries) e.alpha_centi = alpha_of(n, e.bound);
    return table;
}

const BoundTable& irreducible_table_cached() {
    static const BoundTable t = irreducible_table(63);
    return t;
}

const BoundTable& closure_table_cached() {
    static const BoundTable t = closure_table(irreducible_table_cached(), 126);
    return t;
}

JordanBound jordan_bound(long n, BoundClass cls) {
    if (n < 2) throw DomainError("jordan_bound requires n >= 2");
    if (n > 63) {
        if (n > 1000000) throw OutOfRange("degree out of supported range");
        return {factorial(static_cast<unsigned long>(n + 2)), 0, "(n+2)!"};
    }
    const BoundTable& t =
        cls == BoundClass::Irreducible ? irreducible_table_cached() : closure_table_cached();
    const TableEntry& e = t.at(static_cast<int>(n));
    return {e.bound, e.alpha_centi, e.prov_str()};
}

BigInt brauer_feit_bound(unsigned long p, unsigned long a, long n) {
    if (n < 2) throw DomainError("brauer_feit_bound requires n >= 2");
    BigInt base = factorial(static_cast<unsigned long>(n + 2));
    if (n <= 63) base *= pow_bigint(BigInt(n), 4);
    return pow_bigint(BigInt(p), 3 * a) * base;
}

CheckReport envelope_check(const BoundTable& table) {
    CheckReport rep;
    rep.target = "envelope 12.1(b)/13.1(b)";
    rep.domain = "n = 2.." + std::to_string(table.n_max);
    for (const auto& [n, e] : table.entries) {
        BigInt fact = factorial(static_cast<unsigned long>(n + 2));
        unsigned long q = static_cast<unsigned long>((n - 20) * (n - 20) + 1000);
        // bound <= (n+2)! n^(4020/q)  <=>  bound^q <= (n+2)!^q n^4020
        BigInt lhs = pow_bigint(e.bound, q);
        BigInt rhs = pow_bigint(fact, q) * pow_bigint(BigInt(n), 4020);
        bool env_ok = lhs <= rhs;
        bool quartic_ok = e.bound <= fact * pow_bigint(BigInt(n), 4);
        std::ostringstream in;
        in << "n=" << n;
        if (env_ok && quartic_ok) {
            rep.add(CheckStatus::Pass, in.str());
        } else {
            std::ostringstream d;
            d << "bound = " << e.bound.get_str()
              << (env_ok ? "" : ", envelope rhs = (n+2)!^q n^4020 with q = " + std::to_string(q) +
                                    ", lhs^q = " + to_scientific(lhs, 6) + " > rhs = " +
                                    to_scientific(rhs, 6))
              << (quartic_ok ? "" : ", exceeds n^4 (n+2)! = " +
                                        BigInt(fact * pow_bigint(BigInt(n), 4)).get_str());
            rep.add(CheckStatus::Fail, in.str(), d.str());
        }
    }
    return rep;
}

CheckReport sensitivity_report() {
    CheckReport rep;
    rep.target = "t_r sensitivity (exact automorphism orders)";
    rep.domain = "r = 8, 12 replaced by 6|D4(2)|, 2|Suz|";
    // m_star changes
    for (const auto& c : primitive_ceilings()) {
        if (!c.t_exact_basis) continue;
        StableM printed = stable_m(static_cast<unsigned long>(c.r), c.t);
        StableM exact = stable_m(static_cast<unsigned long>(c.r), *c.t_exact_basis);
        std::ostringstream in;
        in << "m_star(r=" << c.r << ")";
        if (printed.m_star == exact.m_star) {
            rep.add(CheckStatus::Pass, in.str(), "unchanged: " + std::to_string(printed.m_star));
        } else {
            rep.add(CheckStatus::Info, in.str(),
                    std::to_string(printed.m_star) + " -> " + std::to_string(exact.m_star));
        }
    }
    // alpha changes: rebuild both tables with the exact basis values
    BoundTable irr;
    irr.n_max = 63;
    for (int n = 2; n <= 63; ++n) {
        TableEntry e;
        e.bound = factorial(static_cast<unsigned long>(n + 2));
        e.prov = Provenance::Factorial;
        for (const auto& c : primitive_ceilings()) {
            if (n % c.r != 0) continue;
            int m = n / c.r;
            BigInt t = c.t_exact_basis ? *c.t_exact_basis : c.t;
            BigInt cand =
                pow_bigint(t, static_cast<unsigned long>(m)) * factorial(static_cast<unsigned long>(m));
            if (cand > e.bound) {
                e.bound = cand;
                e.prov = Provenance::Primitive;
                e.r = c.r;
                e.m = m;
            }
        }
        e.alpha_centi = alpha_of(n, e.bound);
        irr.entries[n] = e;
    }
    BoundTable closure = closure_table(irr, 126);
    int changed = 0;
    for (int n = 2; n <= 63; ++n) {
        int a0 = irreducible_table_cached().at(n).alpha_centi;
        int a1 = irr.at(n).alpha_centi;
        int b0 = closure_table_cached().at(n).alpha_centi;
        int b1 = closure.at(n).alpha_centi;
        if (a0 != a1 || b0 != b1) {
            ++changed;
            std::ostringstream in, d;
            in << "alpha(n=" << n << ")";
            d << "irr " << a0 << " -> " << a1 << ", all " << b0 << " -> " << b1 << " (centi)";
            rep.add(CheckStatus::Info, in.str(), d.str());
        }
    }
    rep.add(changed == 0 ? CheckStatus::Pass : CheckStatus::Info, "alpha columns",
            changed == 0 ? "no cell changes under exact t_8, t_12"
                         : std::to_string(changed) + " cells change");
    return rep;
}

}  // namespace lgb

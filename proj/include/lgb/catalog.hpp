#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lgb/exact.hpp"

namespace lgb {

struct UnknownFamily : std::runtime_error {
    explicit UnknownFamily(const std::string& w) : std::runtime_error(w) {}
};
struct UnknownGroup : std::runtime_error {
    explicit UnknownGroup(const std::string& w) : std::runtime_error(w) {}
};
struct OutOfRange : std::runtime_error {
    explicit OutOfRange(const std::string& w) : std::runtime_error(w) {}
};
struct ExcludedGroup : std::runtime_error {
    explicit ExcludedGroup(const std::string& w) : std::runtime_error(w) {}
};

enum class LieFamily { A, B, C, D, E6, E7, E8, F4, G2, TwA, TwB, TwD, TwE6, TwF4, TwG2, Tr3D4 };

const char* family_name(LieFamily f);
int family_twist(LieFamily f);

// A group of Lie type: family, rank, twist c, parameter m = q^(s2/2). For the
// very twisted families (2B2, 2F4, 2G2) s2 is odd; everywhere else it is even.
struct LieTypeId {
    LieFamily family;
    int rank;
    unsigned long q;
    long s2;

    int twist() const { return family_twist(family); }
    // m^e for rational e = num/den; exact when the exponent resolves to an
    // integer power of q.
    std::optional<BigInt> m_pow_exact(const BigInt& num, const BigInt& den) const;
    BigInt field_size() const;  // m^c = q^(s2*c/2)
    std::string str() const;
};

// Parses "FAMILY:RANK:M" where M = m^c is the printed parameter, e.g.
// "A:1:4", "2A:3:9", "2B:2:8", "E8:8:2". Throws UnknownFamily.
LieTypeId parse_lie(const std::string& text);

// Catalog-facing name, e.g. "A1(4)", "2A3(9)", "G2(2)".
std::string lie_display_name(const LieTypeId& id);

struct LieFamilyRecord {
    int dimension;                // d(X_a)
    BigRational degree_exponent;  // b
    unsigned long graph_order;    // |A_g|
    BigInt diagonal_order;        // |A_d| at this rank/m
    unsigned long field_order;    // |A_f| = c * log_q m = s2*c/2
    unsigned long cap;            // printed bound on c*|A_d|*|A_g|
    std::string d_printed, b_printed, ag_printed, ad_printed;
};

LieFamilyRecord lie_lookup(const LieTypeId& id);

// Members of 4.3.1(a): central quotient solvable, excluded from the outer
// automorphism estimates.
bool is_solvable_exception(const LieTypeId& id);

enum class GroupKind { Sporadic, AlternatingExceptional, LieSmall };

struct SimpleGroupRecord {
    std::string name;
    GroupKind kind;
    BigInt order;                       // exact order modulo center
    std::string printed_order;            // approximation as printed
    std::optional<BigInt> universal_order;  // when the printed cell is the universal order
    std::string schur;                  // multiplier descriptor as printed
    unsigned long schur_order = 1;
    std::string out_desc;
    unsigned long out_order = 1;
    std::optional<int> a1;              // adjusted degree estimate
    std::optional<int> min_n_printed;
    std::optional<int> min_ntilde_printed;
    int mindeg_default = 0;
    std::vector<std::pair<unsigned long, int>> mindeg_exceptions;  // (characteristic, bound)
    std::string note;
};

const std::vector<SimpleGroupRecord>& sporadic_records();     // T7.2 order
const std::vector<SimpleGroupRecord>& lie_small_records();    // T6.3 order
const SimpleGroupRecord& group_record(const std::string& name);  // alias-aware

// Data for the five groups carrying their own piecewise bound F(G, n).
struct SpecialBoundRecord {
    std::string name;
    int a1, a2;
    unsigned long aut_mult;   // |Aut G| / |G|
    BigInt order;             // exact
    BigInt aut_order;         // exact
    // printed check cells, for regeneration diffs
    std::string order_printed, f2a1_printed, f3a1_printed, lnrow_printed,
        coefsq_printed, coeflin_printed, row24_printed, row64_printed;
};
const std::vector<SpecialBoundRecord>& special_bound_records();
const SpecialBoundRecord* special_bound_record(const std::string& name);

struct SmallDegreeEntry {
    int degree;
    enum class CharClass { AnyP, SporadicP, LiePType } char_class;
    std::string group;
    std::string condition;  // as printed; "-" if none
    bool admits(unsigned long p) const;  // p = 1 means characteristic 0
};

std::vector<SmallDegreeEntry> small_degree_groups(int n, unsigned long p);

struct OuterTableRow {  // T4.5.4
    std::string group;
    std::string a_part;
    unsigned long a_order;
    BigRational x;  // (m^b - 1)/2
};
const std::vector<OuterTableRow>& outer_exception_rows();
std::optional<unsigned long> outer_exception_order(const std::string& group);

// Certified lower bound on the degree of a faithful irreducible projective
// representation in the given characteristic (1 = characteristic zero).
// Accepts catalog group names and generic "FAMILY:RANK:M" ids.
BigInt minimal_projective_degree_bound(const std::string& group, unsigned long characteristic);
BigInt minimal_projective_degree_bound(const LieTypeId& id, unsigned long characteristic);

// T12.2 ceilings.
struct PrimitiveCeiling {
    int r;
    BigInt t;                      // printed value read exactly (normative)
    std::string t_printed;
    int m_printed;
    std::optional<BigInt> t_exact_basis;  // exact automorphism order, r = 8, 12
};
const std::vector<PrimitiveCeiling>& primitive_ceilings();

// Printed T12.1 exponents in centi-units (.34 -> 34).
struct AlphaRow {
    int n;
    int alpha_irr_centi;
    int alpha_all_centi;
};
const std::vector<AlphaRow>& printed_alpha_rows();

// Printed Corollary 8.2 cells.
struct C82Row {
    int n;
    std::string autc_printed, aut_printed, sbound_printed;
};
const std::vector<C82Row>& c82_rows();

}  // namespace lgb

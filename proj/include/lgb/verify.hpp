#pragma once

#include <map>
#include <string>
#include <vector>

#include "lgb/report.hpp"

#include "lgb/exact.hpp"
namespace lgb {

// Optional overrides for the default sweep ranges, keyed by variable name
// ("x", "y", "n", "m", "t"). Parsed from CLI "--range x=2..32,t=1..6".
struct LemmaRanges {
    std::map<std::string, std::pair<long, long>> ranges;
    std::pair<long, long> get(const std::string& var, long lo, long hi) const;
    static LemmaRanges parse(const std::string& text);
};

// Lemma ids: A1a..A1d, A2a, A2b, A3a..A3c, A5, A6a..A6e, A7a..A7d, A8, A9a,
// A9b, A10; "A1".."A10" expand to their parts, "all" to everything.
std::vector<std::string> expand_lemma_ids(const std::string& id);
CheckReport verify_lemma(const std::string& id, const LemmaRanges& ranges = {});

// Table ids: T12.1, T12.2, TA.6, T4.5.4, C8.2, T7.2-min-n, T7.2-min-ntilde.
std::vector<std::string> regeneratable_tables();
CheckReport regenerate_table(const std::string& id);

// Constant ids: f248, beta, alpha_log3.
CheckReport check_constant(const std::string& id);

// Cell classification for diffing a recomputed value against a printed one.
enum class CellClass { ExactMatch, RoundMatch, ApproxConsistent, Mismatch };
CellClass classify_cell(const BigRational& value, const std::string& printed);
const char* cell_class_name(CellClass c);

}  // namespace lgb

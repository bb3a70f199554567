#pragma once

#include <string>
#include <vector>

namespace lgb::tables {

// Raw tab-separated resource tables, embedded from data/ at configure time.
extern const char* const kT2_7;
extern const char* const kT4_4;
extern const char* const kT4_5_4;
extern const char* const kT6_3;
extern const char* const kT7_2;
extern const char* const kTA_6;
extern const char* const kT12_1;
extern const char* const kT12_2;
extern const char* const kC8_2;

// Splits a TSV blob into rows of fields, skipping '#' comments and blanks.
std::vector<std::vector<std::string>> parse_tsv(const char* text);

const char* raw(const std::string& table_id);  // throws on unknown id

}  // namespace lgb::tables

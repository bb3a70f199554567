#include "lgb/tables.hpp"

#include <sstream>
#include <stdexcept>

namespace lgb::tables {

std::vector<std::vector<std::string>> parse_tsv(const char* text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        size_t start = 0;
        while (true) {
            size_t tab = line.find('\t', start);
            if (tab == std::string::npos) {
                fields.push_back(line.substr(start));
                break;
            }
            fields.push_back(line.substr(start, tab - start));
            start = tab + 1;
        }
        rows.push_back(std::move(fields));
    }
    return rows;
}

const char* raw(const std::string& table_id) {
    if (table_id == "T2.7") return kT2_7;
    if (table_id == "T4.4") return kT4_4;
    if (table_id == "T4.5.4") return kT4_5_4;
    if (table_id == "T6.3") return kT6_3;
    if (table_id == "T7.2") return kT7_2;
    if (table_id == "TA.6") return kTA_6;
    if (table_id == "T12.1") return kT12_1;
    if (table_id == "T12.2") return kT12_2;
    if (table_id == "C8.2") return kC8_2;
    throw std::runtime_error("unknown table id: " + table_id);
}

}  // namespace lgb::tables

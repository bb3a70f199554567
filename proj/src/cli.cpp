#include "lgb/cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lgb/estimates.hpp"
#include "lgb/jordan.hpp"
#include "lgb/tables.hpp"
#include "lgb/verify.hpp"

namespace lgb {

namespace {

using nlohmann::json;

std::string int_with_sci(const BigInt& v) {
    std::string s = v.get_str();
    if (s.size() > 8) s += " (" + to_scientific(v, 4) + ")";
    return s;
}

std::string alpha_str(int centi) {
    std::ostringstream os;
    os << centi / 100 << "." << (centi % 100 < 10 ? "0" : "") << centi % 100;
    return os.str();
}

json bound_record(long n, const std::string& cls, const JordanBound& b) {
    json j;
    j["n"] = n;
    j["class"] = cls;
    j["bound"] = b.bound.get_str();
    j["bound_scientific"] = to_scientific(b.bound, 4);
    j["alpha"] = alpha_str(b.alpha_centi);
    j["provenance"] = b.provenance;
    return j;
}

int cmd_bound(long n, const std::string& cls, long chr, long sylow, const std::string& emit,
              std::ostream& out) {
    if (chr > 0) {
        BigInt b = brauer_feit_bound(static_cast<unsigned long>(chr),
                                     static_cast<unsigned long>(sylow), n);
        if (emit == "json") {
            json j;
            j["n"] = n;
            j["characteristic"] = chr;
            j["sylow_exponent"] = sylow;
            j["bound"] = b.get_str();
            j["bound_scientific"] = to_scientific(b, 4);
            out << j.dump(2) << "\n";
        } else {
            out << "p^(3a) * n^4 (n+2)! bound for p=" << chr << ", a=" << sylow << ", n=" << n
                << ": " << int_with_sci(b) << "\n";
        }
        return 0;
    }
    BoundClass bc = cls == "irreducible" ? BoundClass::Irreducible : BoundClass::General;
    JordanBound b = jordan_bound(n, bc);
    if (emit == "json") {
        out << bound_record(n, cls, b).dump(2) << "\n";
    } else {
        out << int_with_sci(b.bound) << " " << b.provenance << ", alpha=" << alpha_str(b.alpha_centi)
            << "\n";
    }
    return 0;
}

void emit_table_t12_1(const std::string& fmt, std::ostream& out) {
    const BoundTable& irr = irreducible_table_cached();
    const BoundTable& all = closure_table_cached();
    if (fmt == "json") {
        json rows = json::array();
        for (int n = 2; n <= 63; ++n) {
            json r;
            r["n"] = n;
            r["alpha_irr"] = alpha_str(irr.at(n).alpha_centi);
            r["alpha_all"] = alpha_str(all.at(n).alpha_centi);
            r["bound_irr"] = irr.at(n).bound.get_str();
            r["bound_all"] = all.at(n).bound.get_str();
            r["provenance_irr"] = irr.at(n).prov_str();
            r["provenance_all"] = all.at(n).prov_str();
            rows.push_back(r);
        }
        out << rows.dump(2) << "\n";
        return;
    }
    const char* sep = fmt == "md" ? " | " : ",";
    if (fmt == "md") out << "| n | alpha_irr | alpha_all |\n|---|---|---|\n";
    else out << "n" << sep << "alpha_irr" << sep << "alpha_all" << "\n";
    for (int n = 2; n <= 63; ++n) {
        if (fmt == "md") out << "| ";
        out << n << sep << alpha_str(irr.at(n).alpha_centi) << sep
            << alpha_str(all.at(n).alpha_centi);
        if (fmt == "md") out << " |";
        out << "\n";
    }
}

void emit_table_t12_2(const std::string& fmt, std::ostream& out) {
    if (fmt == "json") {
        json rows = json::array();
        for (const auto& c : primitive_ceilings()) {
            StableM sm = stable_m(static_cast<unsigned long>(c.r), c.t);
            json r;
            r["r"] = c.r;
            r["t_r"] = c.t.get_str();
            r["m_r_printed"] = c.m_printed;
            r["m_star"] = sm.m_star;
            r["descent_certified"] = sm.certificate;
            rows.push_back(r);
        }
        out << rows.dump(2) << "\n";
        return;
    }
    const char* sep = fmt == "md" ? " | " : ",";
    if (fmt == "md") out << "| r | t_r | m_r |\n|---|---|---|\n";
    else out << "r" << sep << "t_r" << sep << "m_r" << "\n";
    for (const auto& c : primitive_ceilings()) {
        StableM sm = stable_m(static_cast<unsigned long>(c.r), c.t);
        if (fmt == "md") out << "| ";
        out << c.r << sep << c.t.get_str() << sep << sm.m_star;
        if (fmt == "md") out << " |";
        out << "\n";
    }
}

int cmd_table(const std::string& id, const std::string& fmt, bool diff, std::ostream& out) {
    std::vector<std::string> ids;
    if (id == "all")
        ids = regeneratable_tables();
    else if (id == "T7.2")
        ids = {"T7.2-min-n", "T7.2-min-ntilde"};
    else
        ids = {id};
    bool hard_mismatch = false;
    for (const auto& t : ids) {
        if (t == "sensitivity") {
            CheckReport rep = sensitivity_report();
            if (fmt == "json") rep.emit_json(out);
            else rep.emit_text(out, true);
            continue;
        }
        if (!diff) {
            if (t == "T12.1") { emit_table_t12_1(fmt, out); continue; }
            if (t == "T12.2") { emit_table_t12_2(fmt, out); continue; }
        }
        CheckReport rep = regenerate_table(t);
        if (fmt == "json") rep.emit_json(out);
        else rep.emit_text(out);
        if (!rep.ok()) hard_mismatch = true;
    }
    return diff && hard_mismatch ? 1 : 0;
}

int cmd_verify(const std::string& lemma, const std::string& range, const std::string& fmt,
               std::ostream& out) {
    LemmaRanges rr;
    if (!range.empty()) rr = LemmaRanges::parse(range);
    CheckReport rep = verify_lemma(lemma, rr);
    if (fmt == "json") rep.emit_json(out);
    else if (fmt == "junit") rep.emit_junit(out);
    else rep.emit_text(out);
    if (rep.undecided > 0) return 2;
    return rep.failures > 0 ? 1 : 0;
}

void print_group(const SimpleGroupRecord& g, const std::string& fmt, std::ostream& out) {
    if (fmt == "json") {
        json j;
        j["name"] = g.name;
        j["order"] = g.order.get_str();
        j["order_scientific"] = to_scientific(g.order, 4);
        j["order_printed"] = g.printed_order;
        j["schur_multiplier"] = g.schur;
        j["out_order"] = g.out_order;
        if (g.min_n_printed) j["min_n"] = *g.min_n_printed;
        if (g.min_ntilde_printed) j["min_ntilde"] = *g.min_ntilde_printed;
        if (g.a1) j["adjusted_estimate"] = *g.a1;
        if (!g.note.empty() && g.note != "-") j["note"] = g.note;
        out << j.dump(2) << "\n";
        return;
    }
    out << g.name << ": order " << int_with_sci(g.order) << ", Schur multiplier " << g.schur
        << ", |Out| " << g.out_order;
    if (g.min_n_printed) out << ", min n " << *g.min_n_printed;
    if (g.min_ntilde_printed) out << ", min n~ " << *g.min_ntilde_printed;
    if (g.a1) out << ", adjusted estimate " << *g.a1;
    if (!g.note.empty() && g.note != "-") out << " [" << g.note << "]";
    out << "\n";
}

int cmd_catalog(const std::string& group, const std::string& lie, int degree, long chr,
                const std::string& dump, const std::string& fmt, std::ostream& out) {
    if (!dump.empty()) {
        if (fmt == "json") {
            json j;
            for (const auto& id : {"T2.7", "T4.4", "T4.5.4", "T6.3", "T7.2", "TA.6", "T12.1",
                                   "T12.2", "C8.2"}) {
                if (dump != "all" && dump != id) continue;
                json rows = json::array();
                for (const auto& row : tables::parse_tsv(tables::raw(id))) rows.push_back(row);
                j[id] = rows;
            }
            out << j.dump(2) << "\n";
        } else {
            for (const auto& id : {"T2.7", "T4.4", "T4.5.4", "T6.3", "T7.2", "TA.6", "T12.1",
                                   "T12.2", "C8.2"}) {
                if (dump != "all" && dump != id) continue;
                for (const auto& row : tables::parse_tsv(tables::raw(id))) {
                    for (size_t i = 0; i < row.size(); ++i)
                        out << (i ? "," : "") << row[i];
                    out << "\n";
                }
            }
        }
        return 0;
    }
    if (!group.empty()) {
        print_group(group_record(group), fmt, out);
        return 0;
    }
    if (!lie.empty()) {
        LieTypeId id = parse_lie(lie);
        LieFamilyRecord rec = lie_lookup(id);
        if (fmt == "json") {
            json j;
            j["id"] = id.str();
            j["dimension"] = rec.dimension;
            j["degree_exponent"] = rec.degree_exponent.get_str();
            j["graph_order"] = rec.graph_order;
            j["diagonal_order"] = rec.diagonal_order.get_str();
            j["field_order"] = rec.field_order;
            j["cap"] = rec.cap;
            j["order_upper"] = lie_order_upper(id).get_str();
            out << j.dump(2) << "\n";
        } else {
            out << id.str() << ": d=" << rec.dimension << ", b=" << rec.degree_exponent.get_str()
                << ", |A_g|=" << rec.graph_order << ", |A_d|=" << rec.diagonal_order.get_str()
                << ", |A_f|=" << rec.field_order << ", cap=" << rec.cap
                << ", |G| <= m^d = " << int_with_sci(lie_order_upper(id)) << "\n";
        }
        return 0;
    }
    if (degree > 0) {
        for (const auto& e : small_degree_groups(degree, static_cast<unsigned long>(chr))) {
            out << e.group;
            if (e.condition != "-") out << " (" << e.condition << ")";
            out << "\n";
        }
        return 0;
    }
    return 3;
}

int cmd_constants(const std::string& fmt, std::ostream& out) {
    bool ok = true;
    for (const auto& id : {"f248", "beta", "alpha_log3"}) {
        CheckReport rep = check_constant(id);
        if (fmt == "json") rep.emit_json(out);
        else rep.emit_text(out, true);
        ok = ok && rep.ok();
    }
    return ok ? 0 : 1;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"certified size bounds for finite linear groups"};
    app.require_subcommand(1);

    long n = 0, chr = 0, sylow = 0;
    std::string cls = "general", emit = "text", table_id, lemma, range, group, lie, dump;
    int degree = 0;
    bool diff = false;

    auto* bound = app.add_subcommand("bound", "Jordan-type degree bound");
    bound->add_option("--n", n, "degree")->required();
    bound->add_option("--class", cls, "irreducible|general")
        ->check(CLI::IsMember({"irreducible", "general"}));
    bound->add_option("--char", chr, "characteristic p (switches to the p^(3a) form)");
    bound->add_option("--sylow-exp", sylow, "Sylow p-exponent a");
    bound->add_option("--emit", emit, "text|json");

    auto* table = app.add_subcommand("table", "regenerate a table, optionally diff");
    table->add_option("--id", table_id,
                      "T12.1|T12.2|TA.6|T4.5.4|C8.2|T7.2|sensitivity|all")
        ->required();
    table->add_option("--emit", emit, "text|csv|md|json");
    table->add_flag("--diff", diff, "diff against the printed values; exit 1 on hard mismatch");

    auto* verify = app.add_subcommand("verify", "run lemma checks");
    verify->add_option("--lemma", lemma, "A1..A10, a part like A7c, or 'all'")->required();
    verify->add_option("--range", range, "override sweep ranges, e.g. x=2..32,t=1..6");
    verify->add_option("--emit", emit, "text|json|junit");

    auto* catalog = app.add_subcommand("catalog", "query the group data tables");
    catalog->add_option("--group", group, "group name, e.g. M11, Suz, Co1, 2A3(9)");
    catalog->add_option("--lie", lie, "Lie type id FAMILY:RANK:M, e.g. 2A:3:9");
    catalog->add_option("--degree", degree, "list small-degree groups (2..5)");
    catalog->add_option("--char", chr, "characteristic for --degree (1 = char 0)");
    catalog->add_option("--dump", dump, "emit a resource table (by id, or 'all')");
    catalog->add_option("--emit", emit, "text|csv|json");

    auto* mindeg = app.add_subcommand("mindeg", "minimal faithful projective degree bound");
    mindeg->add_option("--group", group, "catalog name or FAMILY:RANK:M")->required();
    mindeg->add_option("--char", chr, "characteristic (1 = char 0)")->required();

    auto* constants = app.add_subcommand("constants", "check the pinned constants");
    constants->add_option("--emit", emit, "text|json");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n" << app.help();
        return 3;
    }

    try {
        if (bound->parsed()) {
            if (chr > 0 && cls == "irreducible") {
                err << "--char applies to the general-class bound only\n";
                return 3;
            }
            return cmd_bound(n, cls, chr, sylow, emit, out);
        }
        if (table->parsed()) return cmd_table(table_id, emit, diff, out);
        if (verify->parsed()) return cmd_verify(lemma, range, emit, out);
        if (catalog->parsed()) return cmd_catalog(group, lie, degree, chr == 0 ? 1 : chr, dump, emit, out);
        if (mindeg->parsed()) {
            BigInt b = minimal_projective_degree_bound(group, static_cast<unsigned long>(chr));
            out << b.get_str() << "\n";
            return 0;
        }
        if (constants->parsed()) return cmd_constants(emit, out);
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}

}  // namespace lgb

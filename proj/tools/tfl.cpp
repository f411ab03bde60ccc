#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tfl/certify.hpp"
#include "tfl/edge_coloring.hpp"
#include "tfl/enumerate.hpp"
#include "tfl/factors.hpp"
#include "tfl/graph.hpp"
#include "tfl/h_construction.hpp"
#include "tfl/scan.hpp"
#include "tfl/toughness.hpp"

using nlohmann::json;

namespace {

struct CommonOpts {
    std::string input = "-";
    std::string family;
    std::string format = "json";
    std::uint64_t budget = 50'000'000;
    int jobs = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_family = true) {
    cmd->add_option("--input", o.input, "graph6 lines from FILE, or - for stdin")
        ->envname("TFL_INPUT");
    if (with_family)
        cmd->add_option("--family", o.family,
                        "named graph instead of --input (K4, C5, S3, K3,3, petersen, petersen-v)");
    cmd->add_option("--format", o.format, "csv or json")->envname("TFL_FORMAT");
    cmd->add_option("--budget", o.budget, "node-expansion budget per graph")
        ->envname("TFL_BUDGET");
    cmd->add_option("--jobs", o.jobs, "worker threads (scan only)")->envname("TFL_JOBS");
}

struct ParsedLine {
    std::size_t line_no;
    std::string text;
    std::optional<tfl::Graph> graph;
    std::string error;
};

std::vector<ParsedLine> read_graphs(const CommonOpts& o) {
    std::vector<ParsedLine> out;
    if (!o.family.empty()) {
        out.push_back({1, o.family, tfl::parse_family(o.family), ""});
        return out;
    }
    std::ifstream file;
    std::istream* in = &std::cin;
    if (o.input != "-") {
        file.open(o.input);
        if (!file) throw CLI::ValidationError("--input", "cannot open " + o.input);
        in = &file;
    }
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(*in, line)) {
        ++line_no;
        if (line.empty()) continue;
        ParsedLine pl{line_no, line, std::nullopt, ""};
        try {
            pl.graph = tfl::parse_graph6(line);
        } catch (const std::exception& e) {
            pl.error = e.what();
        }
        out.push_back(std::move(pl));
    }
    return out;
}

int emit_certificates(const CommonOpts& o, tfl::CertKind kind,
                      tfl::BarrierMode mode = tfl::BarrierMode::any) {
    int exit_code = 0;
    for (const auto& pl : read_graphs(o)) {
        if (!pl.graph) {
            std::cerr << "line " << pl.line_no << ": " << pl.error << "\n";
            exit_code = 1;
            continue;
        }
        json doc = tfl::certify(*pl.graph, kind, o.budget, mode);
        std::cout << doc.dump() << "\n";
        if (doc.value("status", "decided") == std::string("undecided") && exit_code == 0)
            exit_code = 3;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2-factor laboratory: Tutte barriers, chromatic index, toughness"};
    app.require_subcommand(1);

    CommonOpts color_o, crit_o, tough_o, tf_o, barrier_o, hc_o, scan_o, verify_o;
    std::string barrier_mode = "any";
    int enum_n = 5;
    bool enum_connected = false;
    bool scan_connected = false;
    int scan_enum_n = 0;
    bool allow_undecided = false;
    std::string verify_file = "-";

    auto* color = app.add_subcommand("color", "chromatic index with witness coloring");
    add_common(color, color_o);
    auto* critical = app.add_subcommand("critical", "maximum-degree criticality decision");
    add_common(critical, crit_o);
    auto* tough = app.add_subcommand("toughness", "exact toughness with optimal cut");
    add_common(tough, tough_o);
    auto* twofac = app.add_subcommand("two-factor", "2-factor or Tutte barrier");
    add_common(twofac, tf_o);
    auto* barrier = app.add_subcommand("barrier", "barrier search");
    add_common(barrier, barrier_o);
    barrier->add_option("--mode", barrier_mode, "any | all | biased | good-biased");
    auto* hcons = app.add_subcommand("h-construct", "bipartite reduction of the best barrier");
    add_common(hcons, hc_o);
    auto* scan = app.add_subcommand("scan", "classify a corpus and audit the theorems");
    add_common(scan, scan_o, false);
    scan->add_option("--enumerate", scan_enum_n, "scan all graphs on N <= 7 vertices");
    scan->add_flag("--connected", scan_connected, "restrict enumeration to connected graphs");
    scan->add_flag("--allow-undecided", allow_undecided,
                   "exit 0 even when undecided records are present");
    auto* verify = app.add_subcommand("verify", "re-check JSON certificates (one per line)");
    verify->add_option("--input", verify_file, "certificate file, or - for stdin");
    verify->add_option("--budget", verify_o.budget, "re-check budget")->envname("TFL_BUDGET");
    auto* enumerate = app.add_subcommand("enumerate", "graphs up to isomorphism as graph6");
    enumerate->add_option("--n", enum_n, "vertex count (1..7)")->required();
    enumerate->add_flag("--connected", enum_connected, "connected graphs only");

    CLI11_PARSE(app, argc, argv);

    try {
        if (color->parsed()) return emit_certificates(color_o, tfl::CertKind::coloring);
        if (tough->parsed()) return emit_certificates(tough_o, tfl::CertKind::toughness);
        if (twofac->parsed()) return emit_certificates(tf_o, tfl::CertKind::two_factor);
        if (hcons->parsed()) return emit_certificates(hc_o, tfl::CertKind::h_construction);

        if (barrier->parsed()) {
            tfl::BarrierMode mode = tfl::BarrierMode::any;
            if (barrier_mode == "all") mode = tfl::BarrierMode::all;
            else if (barrier_mode == "biased") mode = tfl::BarrierMode::biased;
            else if (barrier_mode == "good-biased" || barrier_mode == "good_biased")
                mode = tfl::BarrierMode::good_biased;
            else if (barrier_mode != "any")
                throw CLI::ValidationError("--mode", "unknown mode " + barrier_mode);
            return emit_certificates(barrier_o, tfl::CertKind::barrier, mode);
        }

        if (critical->parsed()) {
            int code = 0;
            for (const auto& pl : read_graphs(crit_o)) {
                if (!pl.graph) {
                    std::cerr << "line " << pl.line_no << ": " << pl.error << "\n";
                    code = 1;
                    continue;
                }
                auto rep = tfl::is_delta_critical(*pl.graph, tfl::Budget(crit_o.budget));
                json doc{{"schema", 1},
                         {"kind", "criticality"},
                         {"graph6", tfl::write_graph6(*pl.graph)},
                         {"status",
                          rep.status == tfl::Decision::decided ? "decided" : "undecided"},
                         {"result",
                          {{"max_degree", rep.max_degree},
                           {"is_class_two", rep.is_class_two},
                           {"is_critical", rep.is_critical}}}};
                if (rep.witness_edge)
                    doc["result"]["witness_edge"] = {rep.witness_edge->first,
                                                     rep.witness_edge->second};
                std::cout << doc.dump() << "\n";
                if (rep.status == tfl::Decision::undecided && code == 0) code = 3;
            }
            return code;
        }

        if (enumerate->parsed()) {
            for (const auto& g : tfl::enumerate_small(enum_n, enum_connected))
                std::cout << tfl::write_graph6(g) << "\n";
            return 0;
        }

        if (scan->parsed()) {
            std::vector<tfl::Graph> graphs;
            bool parse_errors = false;
            if (scan_enum_n > 0) {
                graphs = tfl::enumerate_small(scan_enum_n, scan_connected);
            } else {
                for (const auto& pl : read_graphs(scan_o)) {
                    if (!pl.graph) {
                        std::cerr << "line " << pl.line_no << ": " << pl.error << "\n";
                        parse_errors = true;
                        continue;
                    }
                    graphs.push_back(*pl.graph);
                }
            }
            auto records = tfl::scan_corpus(graphs, scan_o.budget, scan_o.jobs);
            if (scan_o.format == "csv") {
                std::cout << tfl::ScanRecord::csv_header() << "\n";
                for (const auto& r : records) std::cout << r.csv_row() << "\n";
            } else {
                for (const auto& r : records) {
                    json j{{"graph6", r.graph6},
                           {"n", r.n},
                           {"m", r.m},
                           {"delta", r.max_degree},
                           {"chi_prime", r.chi_status == tfl::Decision::decided
                                             ? json(r.chi_value)
                                             : json("undecided")},
                           {"critical", r.critical_status == tfl::Decision::decided
                                            ? json(r.is_critical ? "yes" : "no")
                                            : json("undecided")},
                           {"toughness", r.tough.value_str()},
                           {"two_factor", r.two_factor},
                           {"thm_1_1", tfl::theorem_flag_str(r.thm_1_1)},
                           {"thm_1_2_k2", tfl::theorem_flag_str(r.thm_1_2_k2)},
                           {"thm_1_3", tfl::theorem_flag_str(r.thm_1_3)},
                           {"conj_2factor", tfl::theorem_flag_str(r.conj_2factor)}};
                    std::cout << j.dump() << "\n";
                }
            }
            auto summary = tfl::summarize(records);
            std::cerr << "scanned " << summary.total << " graphs: " << summary.critical
                      << " critical, " << summary.no_two_factor << " without 2-factor, "
                      << summary.violated << " VIOLATED, " << summary.undecided << " undecided\n";
            if (summary.violated > 0) return 2;
            if (parse_errors) return 1;
            if (summary.undecided > 0 && !allow_undecided) return 3;
            return 0;
        }

        if (verify->parsed()) {
            std::ifstream file;
            std::istream* in = &std::cin;
            if (verify_file != "-") {
                file.open(verify_file);
                if (!file) {
                    std::cerr << "cannot open " << verify_file << "\n";
                    return 1;
                }
                in = &file;
            }
            std::string line;
            int code = 0;
            std::size_t line_no = 0;
            while (std::getline(*in, line)) {
                ++line_no;
                if (line.empty()) continue;
                try {
                    auto outcome = tfl::verify_certificate(json::parse(line), verify_o.budget);
                    if (outcome.ok) {
                        std::cout << "line " << line_no << ": OK\n";
                    } else {
                        std::cout << "line " << line_no << ": FAIL: " << outcome.message << "\n";
                        code = 2;
                    }
                } catch (const std::exception& e) {
                    std::cout << "line " << line_no << ": FAIL: " << e.what() << "\n";
                    code = 2;
                }
            }
            return code;
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

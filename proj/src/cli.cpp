#include "sesqui/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "sesqui/enumeration.hpp"
#include "sesqui/graph.hpp"
#include "sesqui/obstructions.hpp"
#include "sesqui/recognition.hpp"

namespace sesqui {

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitBound = 4;

int default_jobs() {
    if (const char* env = std::getenv("SESQUI_JOBS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

struct InputOptions {
    std::vector<std::string> literals;
    std::string file;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("graphs", in.literals, "graph6 strings (default: read stdin, one per line)");
    cmd->add_option("--file", in.file, "read graphs from a file, one graph6 per line");
}

std::vector<std::string> gather_lines(const InputOptions& opts, std::istream& in) {
    if (!opts.literals.empty() && !opts.file.empty())
        throw CLI::ValidationError("input", "give graphs either inline or via --file, not both");
    std::vector<std::string> lines;
    auto take = [&](std::istream& s) {
        std::string line;
        while (std::getline(s, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (!line.empty()) lines.push_back(line);
        }
    };
    if (!opts.literals.empty()) {
        lines = opts.literals;
    } else if (!opts.file.empty()) {
        std::ifstream f(opts.file);
        if (!f) throw CLI::ValidationError("--file", "cannot open " + opts.file);
        take(f);
    } else {
        take(in);
    }
    return lines;
}

std::string read_all(const InputOptions& opts, std::istream& in) {
    if (!opts.literals.empty()) {
        std::string text;
        for (const auto& s : opts.literals) text += s + "\n";
        return text;
    }
    std::ostringstream buf;
    if (!opts.file.empty()) {
        std::ifstream f(opts.file);
        if (!f) throw CLI::ValidationError("--file", "cannot open " + opts.file);
        buf << f.rdbuf();
    } else {
        buf << in.rdbuf();
    }
    return buf.str();
}

struct LineResult {
    int code = kExitOk;
    std::string text;
};

// Maps each input line to an output block on `jobs` workers; output order
// matches input order regardless of scheduling.
template <typename Fn>
int emit_per_line(const std::vector<std::string>& lines, int jobs, std::ostream& out,
                  std::ostream& err, Fn&& fn) {
    std::vector<LineResult> results(lines.size());
    auto work = [&](std::size_t i) {
        try {
            results[i].text = fn(lines[i]);
        } catch (const parse_error& e) {
            results[i] = {kExitParse, "line " + std::to_string(i + 1) + ": " + e.what()};
        } catch (const size_error& e) {
            results[i] = {kExitBound, "line " + std::to_string(i + 1) + ": " + e.what()};
        } catch (const resource_error& e) {
            results[i] = {kExitBound, "line " + std::to_string(i + 1) + ": " + e.what()};
        }
    };
    if (jobs <= 1) {
        for (std::size_t i = 0; i < lines.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> threads;
        for (int w = 0; w < jobs; ++w)
            threads.emplace_back([&] {
                for (std::size_t i = next++; i < lines.size(); i = next++) work(i);
            });
        for (auto& t : threads) t.join();
    }
    for (const auto& r : results) {
        if (r.code != kExitOk) {
            err << r.text << "\n";
            return r.code;
        }
        out << r.text;
    }
    return kExitOk;
}

std::string vertex_set_text(const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

std::string witness_text(const ObstructionWitness& w) {
    std::string out = w.name + " vertices=" + vertex_set_text(w.vertices) + " mapping={";
    bool first = true;
    for (auto [rep, host] : w.mapping) {
        if (!first) out += ",";
        out += std::to_string(rep) + "->" + std::to_string(host);
        first = false;
    }
    return out + "}";
}

ordered_json classification_to_json(const std::string& g6, const ClassificationReport& r) {
    ordered_json j;
    j["graph6"] = g6;
    j["is_cograph"] = r.is_cograph;
    j["is_sesquicograph"] = r.is_sesquicograph;
    j["is_2_cograph"] = r.is_2_cograph;
    j["certificate"] = r.certificate ? tree_to_json(*r.certificate) : ordered_json(nullptr);
    j["witness"] = r.witness ? witness_to_json(*r.witness) : ordered_json(nullptr);
    return j;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

int cmd_classify(const InputOptions& in_opts, const std::string& format, int jobs,
                 std::istream& in, std::ostream& out, std::ostream& err) {
    auto lines = gather_lines(in_opts, in);
    return emit_per_line(lines, jobs, out, err, [&](const std::string& line) {
        Graph g = from_graph6(line);
        ClassificationReport r = classify(g);
        if (format == "json") return classification_to_json(line, r).dump() + "\n";
        std::string text = line + ": cograph=" + yesno(r.is_cograph) +
                           " sesquicograph=" + yesno(r.is_sesquicograph) +
                           " 2-cograph=" + yesno(r.is_2_cograph);
        if (r.certificate) text += " certificate=" + tree_to_text(*r.certificate);
        if (r.witness) text += " witness=" + witness_text(*r.witness);
        return text + "\n";
    });
}

int cmd_decompose(const InputOptions& in_opts, const std::string& format, int jobs,
                  std::istream& in, std::ostream& out, std::ostream& err) {
    auto lines = gather_lines(in_opts, in);
    return emit_per_line(lines, jobs, out, err, [&](const std::string& line) -> std::string {
        Graph g = from_graph6(line);
        auto result = decompose_sesquicograph(g);
        if (auto* tree = std::get_if<DecompositionTree>(&result)) {
            if (format == "json") return tree_to_json(*tree).dump() + "\n";
            if (format == "dot") return tree_to_dot(*tree);
            return line + ": " + tree_to_text(*tree) + "\n";
        }
        const Graph& piece = std::get<FailurePiece>(result).piece;
        if (format == "json") {
            ordered_json j;
            j["failure_piece"]["vertices"] = piece.vertices();
            j["failure_piece"]["graph6"] = to_graph6(piece);
            return j.dump() + "\n";
        }
        std::string text = "not a sesquicograph; failure piece vertices=" +
                           vertex_set_text(piece.vertices()) + " graph6=" + to_graph6(piece);
        if (format == "dot") return "// " + text + "\n";
        return line + ": " + text + "\n";
    });
}

int cmd_witness(const InputOptions& in_opts, const std::string& format, int jobs,
                std::istream& in, std::ostream& out, std::ostream& err) {
    auto lines = gather_lines(in_opts, in);
    return emit_per_line(lines, jobs, out, err, [&](const std::string& line) -> std::string {
        Graph g = from_graph6(line);
        auto w = obstruction_witness(g);
        if (format == "json")
            return (w ? witness_to_json(*w) : ordered_json(nullptr)).dump() + "\n";
        return line + ": " + (w ? witness_text(*w) : "none") + "\n";
    });
}

// The witness of a minimal obstruction covers the whole graph and names it.
std::string obstruction_name(const Graph& g) {
    auto w = obstruction_witness(g);
    return w ? w->name : "?";
}

int cmd_enumerate(int order, const std::string& mode_name, const std::string& format,
                  const std::string& input_file, bool allow_order_8, int jobs,
                  std::ostream& out) {
    FilterMode mode = mode_name == "pruned" ? FilterMode::Pruned : FilterMode::Naive;
    EnumerationReport report;
    if (!input_file.empty()) {
        std::ifstream f(input_file);
        if (!f) throw CLI::ValidationError("--input", "cannot open " + input_file);
        std::vector<Graph> graphs;
        std::string line;
        while (std::getline(f, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (!line.empty()) graphs.push_back(from_graph6(line));
        }
        report = minimal_among(graphs, mode);
    } else {
        report = minimal_non_sesquicographs(order, mode, allow_order_8, jobs);
    }

    if (format == "json") {
        ordered_json j;
        j["order"] = report.order;
        j["total_graphs"] = report.total_graphs;
        j["filter_mode"] = to_string(report.filter_mode);
        j["elapsed_seconds"] = report.elapsed_seconds;
        auto& list = j["minimal_obstructions"] = ordered_json::array();
        for (const Graph& g : report.minimal_obstructions) list.push_back(to_graph6(g));
        out << j.dump() << "\n";
        return kExitOk;
    }
    if (format == "graph6") {
        for (const Graph& g : report.minimal_obstructions) out << to_graph6(g) << "\n";
        return kExitOk;
    }
    out << "order=" << report.order << " classes=" << report.total_graphs
        << " mode=" << to_string(report.filter_mode) << " minimal=" << report.minimal_obstructions.size()
        << " elapsed=" << report.elapsed_seconds << "s\n";
    for (const Graph& g : report.minimal_obstructions)
        out << to_graph6(g) << "  " << obstruction_name(g) << "\n";
    return kExitOk;
}

int cmd_verify(int max_order, const std::string& format, int jobs, std::ostream& out) {
    VerifyReport eq = verify_recognition_equivalence(max_order, jobs);
    ClosureReport cl = verify_closure_properties(max_order, jobs);
    bool ok = eq.total_mismatches == 0 && cl.violations.empty();

    if (format == "json") {
        ordered_json j;
        auto& per = j["equivalence"]["per_order"] = ordered_json::array();
        for (const auto& p : eq.per_order)
            per.push_back({{"order", p.order}, {"graphs", p.graphs}, {"mismatches", p.mismatches}});
        j["equivalence"]["total_graphs"] = eq.total_graphs;
        j["equivalence"]["mismatches"] = eq.total_mismatches;
        j["equivalence"]["mismatching"] = eq.mismatching;
        j["closure"]["sesquicographs"] = cl.sesquicographs;
        j["closure"]["deletion_checks"] = cl.deletion_checks;
        j["closure"]["contraction_checks"] = cl.contraction_checks;
        j["closure"]["violations"] = cl.violations;
        j["pass"] = ok;
        out << j.dump() << "\n";
    } else {
        for (const auto& p : eq.per_order)
            out << "order " << p.order << ": " << p.graphs << " graphs, " << p.mismatches
                << " mismatches\n";
        out << "equivalence: " << eq.total_mismatches << " mismatches / " << eq.total_graphs
            << " graphs\n";
        out << "deletion closure: " << cl.deletion_checks << " checks over " << cl.sesquicographs
            << " sesquicographs, ";
        out << (cl.violations.empty() ? "0 violations" : std::to_string(cl.violations.size()) +
                                                             " violations")
            << "\n";
        out << "contraction closure: " << cl.contraction_checks << " checks, "
            << (cl.violations.empty() ? "0 violations" : "violations above") << "\n";
        for (const auto& g6 : eq.mismatching) out << "mismatch: " << g6 << "\n";
        for (const auto& g6 : cl.violations) out << "violation: " << g6 << "\n";
        out << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? kExitOk : kExitMismatch;
}

int cmd_convert(const InputOptions& in_opts, const std::string& from, const std::string& to,
                std::istream& in, std::ostream& out) {
    if (from == "edgelist") {
        Graph g = from_edge_list(read_all(in_opts, in));
        if (to == "graph6")
            out << to_graph6(g) << "\n";
        else
            out << to_edge_list(g);
        return kExitOk;
    }
    auto lines = gather_lines(in_opts, in);
    bool first = true;
    for (const auto& line : lines) {
        Graph g = from_graph6(line);
        if (to == "graph6") {
            out << to_graph6(g) << "\n";
        } else {
            if (!first) out << "\n";
            out << to_edge_list(g);
        }
        first = false;
    }
    return kExitOk;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"sesquicograph recognition toolkit"};
    app.require_subcommand(1);
    // subcommands pass unrecognized options (--jobs) up to the app
    app.fallthrough();
    int jobs = default_jobs();
    app.add_option("--jobs", jobs, "worker threads (default: SESQUI_JOBS or 1)")
        ->check(CLI::PositiveNumber);

    InputOptions cls_in, dec_in, wit_in, conv_in;
    std::string cls_fmt = "text", dec_fmt = "text", wit_fmt = "text", enum_fmt = "text",
                ver_fmt = "text";

    auto* cls = app.add_subcommand("classify", "cograph / sesquicograph / 2-cograph verdicts "
                                               "with certificate or witness");
    add_input_options(cls, cls_in);
    cls->add_option("--format", cls_fmt)->check(CLI::IsMember({"text", "json"}));

    auto* dec = app.add_subcommand("decompose", "decomposition tree or failure piece");
    add_input_options(dec, dec_in);
    dec->add_option("--format", dec_fmt)->check(CLI::IsMember({"text", "json", "dot"}));

    auto* wit = app.add_subcommand("witness", "obstruction witness or \"none\"");
    add_input_options(wit, wit_in);
    wit->add_option("--format", wit_fmt)->check(CLI::IsMember({"text", "json"}));

    auto* enu = app.add_subcommand("enumerate-minimal",
                                   "induced-subgraph-minimal non-sesquicographs of one order");
    int order = 0;
    std::string mode = "naive", input_file;
    bool allow8 = false;
    auto* order_opt = enu->add_option("--order", order, "graph order to sweep")
                          ->check(CLI::Range(1, 8));
    enu->add_option("--mode", mode)->check(CLI::IsMember({"naive", "pruned"}));
    enu->add_option("--input", input_file, "sieve graphs from a graph6 file instead of sweeping");
    enu->add_flag("--allow-order-8", allow8, "permit the 2^28 sweep at order 8");
    enu->add_option("--format", enum_fmt)->check(CLI::IsMember({"text", "json", "graph6"}));

    auto* ver = app.add_subcommand("verify",
                                   "recognizer/oracle/witness agreement and closure suites");
    int max_order = 6;
    ver->add_option("--max-order", max_order, "largest order to check")->check(CLI::Range(1, 7));
    ver->add_option("--format", ver_fmt)->check(CLI::IsMember({"text", "json"}));

    auto* conv = app.add_subcommand("convert", "translate between graph6 and edge-list formats");
    add_input_options(conv, conv_in);
    std::string conv_from = "graph6", conv_to;
    conv->add_option("--from", conv_from)->check(CLI::IsMember({"graph6", "edgelist"}));
    conv->add_option("--to", conv_to)->required()->check(CLI::IsMember({"graph6", "edgelist"}));

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (cls->parsed()) return cmd_classify(cls_in, cls_fmt, jobs, in, out, err);
        if (dec->parsed()) return cmd_decompose(dec_in, dec_fmt, jobs, in, out, err);
        if (wit->parsed()) return cmd_witness(wit_in, wit_fmt, jobs, in, out, err);
        if (enu->parsed()) {
            if (input_file.empty() && order_opt->count() == 0) {
                err << "enumerate-minimal needs --order or --input\n";
                return kExitUsage;
            }
            return cmd_enumerate(order, mode, enum_fmt, input_file, allow8, jobs, out);
        }
        if (ver->parsed()) return cmd_verify(max_order, ver_fmt, jobs, out);
        if (conv->parsed()) return cmd_convert(conv_in, conv_from, conv_to, in, out);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const parse_error& e) {
        err << e.what() << "\n";
        return kExitParse;
    } catch (const size_error& e) {
        err << e.what() << "\n";
        return kExitBound;
    } catch (const resource_error& e) {
        err << e.what() << "\n";
        return kExitBound;
    }
    return kExitUsage;
}

}  // namespace sesqui

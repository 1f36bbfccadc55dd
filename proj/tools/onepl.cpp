// onepl: validate and measure combinatorial 1-planar drawings, check the
// counting identities and clique bounds, and generate instance families.

#include <cstring>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "onepl/checks.hpp"
#include "onepl/drawing.hpp"
#include "onepl/generators.hpp"
#include "onepl/graph.hpp"
#include "onepl/io.hpp"
#include "onepl/theorems.hpp"

namespace {

using onepl::Error;
using onepl::Json;

constexpr const char* kUsage = R"(usage: onepl <command> [args] [--format json|tsv] [--quiet] [-o FILE]

commands:
  validate <f.1pl>                      check a drawing file
  faces <f.1pl>                         face census of a drawing
  skeleton <f.1pl> [-o out.1pl]         planar skeleton of a drawing
  census <file> [--t-max K]             clique census (edge list or .1pl)
  kappa <file>                          vertex connectivity with witness cut
  separators3 <file>                    all 3-separators
  rich <f.1pl> [--strict-kite]          kite check per crossing
  conflict <f.1pl> [--cycle a,b,c]      conflict triangles, or sides of one cycle
  classify-k4 <f.1pl> --clique a,b,c,d  tetrahedral or pyramidal K4
  identity gollin|lemma34|euler|biedl|f3lower <f.1pl> [--audit]
                                        counting identities as verdict reports
  bounds <file> [--audit-4conn] [--drawing f.1pl]
                                        clique counts against the thresholds
  gen apollonian N | wheel R | prism | cube | octcyl K | kite-augment <in.1pl>
      [--seed S] [--edge-list] [-o out] generate instances

exit status: 0 ok, 1 input error, 2 counterexample verdict
)";

struct Args {
    std::vector<std::string> positional;
    std::string format = "json";
    bool quiet = false;
    std::optional<std::string> out_path;
    std::optional<std::string> cycle;
    std::optional<std::string> clique;
    std::optional<std::string> drawing;
    std::optional<std::uint64_t> seed;
    std::optional<int> t_max;
    bool strict_kite = false;
    bool audit = false;
    bool audit_4conn = false;
    bool edge_list = false;
};

Args parse_args(int argc, char** argv) {
    Args a;
    auto value_of = [&](int& i, const char* name) -> std::string {
        if (i + 1 >= argc) throw Error(std::string(name) + " needs a value");
        return argv[++i];
    };
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--format") {
            a.format = value_of(i, "--format");
            if (a.format != "json" && a.format != "tsv")
                throw Error("unknown format '" + a.format + "' (use json or tsv)");
        } else if (arg == "--quiet") {
            a.quiet = true;
        } else if (arg == "-o" || arg == "--output") {
            a.out_path = value_of(i, "-o");
        } else if (arg == "--cycle") {
            a.cycle = value_of(i, "--cycle");
        } else if (arg == "--clique") {
            a.clique = value_of(i, "--clique");
        } else if (arg == "--drawing") {
            a.drawing = value_of(i, "--drawing");
        } else if (arg == "--seed") {
            a.seed = std::stoull(value_of(i, "--seed"));
        } else if (arg == "--t-max") {
            a.t_max = std::stoi(value_of(i, "--t-max"));
        } else if (arg == "--strict-kite") {
            a.strict_kite = true;
        } else if (arg == "--audit") {
            a.audit = true;
        } else if (arg == "--audit-4conn") {
            a.audit_4conn = true;
        } else if (arg == "--edge-list") {
            a.edge_list = true;
        } else if (arg == "--help" || arg == "-h") {
            a.positional.insert(a.positional.begin(), "help");
        } else if (!arg.empty() && arg[0] == '-') {
            throw Error("unknown flag '" + arg + "'");
        } else {
            a.positional.push_back(arg);
        }
    }
    return a;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (cur.empty()) throw Error("empty entry in list '" + s + "'");
            out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

// Abstract-graph commands accept either format; a drawing contributes its
// base graph.
onepl::SimpleGraph load_graph(const std::string& path) {
    std::string text = onepl::read_file(path);
    if (text.rfind("1PL", 0) == 0) return onepl::load_1pl(text).base;
    return onepl::parse_edge_list(text);
}

onepl::OnePlaneDrawing load_drawing(const std::string& path) {
    return onepl::load_1pl(onepl::read_file(path));
}

void emit(const Args& a, const std::string& command, const std::string& input,
          const Json& result, int status) {
    if (a.quiet) return;
    std::string text;
    if (a.format == "json") {
        Json report{{"command", command}, {"input", input}, {"result", result},
                    {"status", status}};
        text = report.dump(2) + "\n";
    } else {
        Json report{{"command", command}, {"input", input}, {"result", result},
                    {"status", status}};
        std::string tsv;
        for (const auto& [key, value] : onepl::flatten(report))
            tsv += key + "\t" + value + "\n";
        text = tsv;
    }
    if (a.out_path)
        onepl::write_file(*a.out_path, text);
    else
        std::cout << text;
}

int counterexample_status(const onepl::IdentityReport& r) {
    return r.verdict == onepl::Verdict::Counterexample ? 2 : 0;
}

const std::string& need(const Args& a, size_t idx, const char* what) {
    if (a.positional.size() <= idx) throw Error(std::string("missing ") + what);
    return a.positional[idx];
}

int run(const Args& a) {
    if (a.positional.empty() || a.positional[0] == "help") {
        std::cout << kUsage;
        return a.positional.empty() ? 1 : 0;
    }
    const std::string& cmd = a.positional[0];

    if (cmd == "validate") {
        const auto& path = need(a, 1, "drawing file");
        auto d = load_drawing(path);
        auto census = onepl::trace_faces(d);
        Json result{{"n", d.real_count()},
                    {"m", d.base.edge_count()},
                    {"c", d.crossing_count()},
                    {"faces", census.count()},
                    {"valid", true}};
        emit(a, cmd, path, result, 0);
        return 0;
    }
    if (cmd == "faces") {
        const auto& path = need(a, 1, "drawing file");
        auto d = load_drawing(path);
        emit(a, cmd, path, onepl::to_json(onepl::trace_faces(d)), 0);
        return 0;
    }
    if (cmd == "skeleton") {
        const auto& path = need(a, 1, "drawing file");
        auto d = load_drawing(path);
        auto sk = onepl::skeleton(d);
        Json result{{"n", sk.graph.n},
                    {"edges", sk.graph.edge_count()},
                    {"f3", sk.f3},
                    {"f4", sk.f4},
                    {"connected", sk.connected},
                    {"faces_3_or_4", sk.faces_3_or_4}};
        if (!sk.euler_checked) result["note"] = "Euler check skipped: disconnected";
        if (a.out_path) {
            onepl::write_file(*a.out_path, onepl::write_1pl(onepl::drawing_from_plane_map(sk)));
            if (!a.quiet) std::cout << onepl::Json(result).dump(2) << "\n";
            return 0;
        }
        emit(a, cmd, path, result, 0);
        return 0;
    }
    if (cmd == "census") {
        const auto& path = need(a, 1, "graph file");
        auto g = load_graph(path);
        auto census = onepl::clique_census(g, a.t_max.value_or(6));
        Json result = onepl::to_json(census);
        result["n"] = g.n;
        result["m"] = g.edge_count();
        emit(a, cmd, path, result, 0);
        return 0;
    }
    if (cmd == "kappa") {
        const auto& path = need(a, 1, "graph file");
        emit(a, cmd, path, onepl::to_json(onepl::vertex_connectivity(load_graph(path))), 0);
        return 0;
    }
    if (cmd == "separators3") {
        const auto& path = need(a, 1, "graph file");
        emit(a, cmd, path, onepl::to_json(onepl::enumerate_3_separators(load_graph(path))), 0);
        return 0;
    }
    if (cmd == "rich") {
        const auto& path = need(a, 1, "drawing file");
        auto d = load_drawing(path);
        emit(a, cmd, path, onepl::to_json(onepl::check_rich(d, a.strict_kite)), 0);
        return 0;
    }
    if (cmd == "conflict") {
        const auto& path = need(a, 1, "drawing file");
        auto d = load_drawing(path);
        if (a.cycle) {
            auto report = onepl::cycle_sides(d, parse_int_list(*a.cycle));
            emit(a, cmd, path, onepl::to_json(report), 0);
            return 0;
        }
        auto conflicts = onepl::find_conflict_triangles(d);
        Json arr = Json::array();
        for (const auto& r : conflicts) arr.push_back(onepl::to_json(r));
        emit(a, cmd, path, Json{{"count", conflicts.size()}, {"conflict_triangles", arr}}, 0);
        return 0;
    }
    if (cmd == "classify-k4") {
        const auto& path = need(a, 1, "drawing file");
        if (!a.clique) throw Error("classify-k4 needs --clique a,b,c,d");
        auto ids = parse_int_list(*a.clique);
        if (ids.size() != 4) throw Error("--clique needs exactly 4 vertices");
        auto d = load_drawing(path);
        auto k = onepl::classify_k4_drawing(d, {ids[0], ids[1], ids[2], ids[3]});
        emit(a, cmd, path, onepl::to_json(k), 0);
        return 0;
    }
    if (cmd == "identity") {
        const auto& which = need(a, 1, "identity name");
        const auto& path = need(a, 2, "drawing file");
        auto d = load_drawing(path);
        onepl::IdentityReport report;
        if (which == "gollin")
            report = onepl::gollin_triangle_identity(d);
        else if (which == "lemma34")
            report = onepl::lemma34_identity(d, a.audit);
        else if (which == "euler")
            report = onepl::euler_face_relation(onepl::skeleton(d));
        else if (which == "biedl")
            report = onepl::biedl_check(d);
        else if (which == "f3lower")
            report = onepl::skeleton_f3_lower(d);
        else
            throw Error("unknown identity '" + which +
                        "' (use gollin|lemma34|euler|biedl|f3lower)");
        int status = counterexample_status(report);
        emit(a, cmd + " " + which, path, onepl::to_json(report), status);
        return status;
    }
    if (cmd == "bounds") {
        const auto& path = need(a, 1, "graph file");
        auto g = load_graph(path);
        std::optional<onepl::OnePlaneDrawing> d;
        if (a.drawing) d = load_drawing(*a.drawing);
        auto report = onepl::theorem_bounds(g, d ? &*d : nullptr, a.audit_4conn);
        int status = report.verdict == onepl::Verdict::Counterexample ? 2 : 0;
        emit(a, cmd, path, onepl::to_json(report), status);
        return status;
    }
    if (cmd == "gen") {
        const auto& family = need(a, 1, "generator family");
        onepl::OnePlaneDrawing d;
        if (family == "apollonian") {
            d = onepl::gen_apollonian(std::stoi(need(a, 2, "order N")), a.seed.value_or(1));
        } else if (family == "wheel") {
            d = onepl::drawing_from_plane_map(onepl::gen_wheel(std::stoi(need(a, 2, "rim R"))));
        } else if (family == "prism") {
            d = onepl::drawing_from_plane_map(onepl::gen_prism());
        } else if (family == "cube") {
            d = onepl::drawing_from_plane_map(onepl::gen_cube());
        } else if (family == "octcyl") {
            d = onepl::drawing_from_plane_map(
                onepl::gen_octagonal_cylinder(std::stoi(need(a, 2, "layers K"))));
        } else if (family == "kite-augment") {
            auto in = load_drawing(need(a, 2, "input drawing"));
            if (in.crossing_count() != 0)
                throw Error("kite-augment input must be crossing-free");
            d = onepl::kite_augment(onepl::skeleton(in));
        } else {
            throw Error("unknown family '" + family +
                        "' (use apollonian|wheel|prism|cube|octcyl|kite-augment)");
        }
        std::string text = a.edge_list ? onepl::write_edge_list(d.base) : onepl::write_1pl(d);
        if (a.out_path)
            onepl::write_file(*a.out_path, text);
        else if (!a.quiet)
            std::cout << text;
        return 0;
    }
    throw Error("unknown command '" + cmd + "'");
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(parse_args(argc, argv));
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

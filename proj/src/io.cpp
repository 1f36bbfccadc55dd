#include "onepl/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace onepl {

namespace {

struct LineReader {
    std::istringstream in;
    int line_no = 0;

    explicit LineReader(const std::string& text) : in(text) {}

    // next content line, skipping '#' comments and blank lines
    bool next(std::string& out) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            size_t first = line.find_first_not_of(" \t");
            if (first == std::string::npos) continue;
            if (line[first] == '#') continue;
            out = line;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw Error("line " + std::to_string(line_no) + ": " + why);
    }
};

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

int parse_int(LineReader& r, const std::string& tok) {
    try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        r.fail("expected an integer, got '" + tok + "'");
    }
}

}  // namespace

SimpleGraph parse_edge_list(const std::string& text) {
    LineReader r(text);
    std::string line;
    if (!r.next(line)) throw Error("empty edge-list file");
    auto head = tokens_of(line);
    if (head.size() != 2) r.fail("expected 'n m'");
    int n = parse_int(r, head[0]);
    int m = parse_int(r, head[1]);
    if (m < 0) r.fail("negative edge count");

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        if (!r.next(line)) throw Error("edge list ends early: got " + std::to_string(i) +
                                       " of " + std::to_string(m) + " edges");
        auto toks = tokens_of(line);
        if (toks.size() != 2) r.fail("expected 'u v'");
        edges.emplace_back(parse_int(r, toks[0]), parse_int(r, toks[1]));
    }
    if (r.next(line)) r.fail("trailing content after " + std::to_string(m) + " edges");
    return build_graph(n, edges);
}

std::string write_edge_list(const SimpleGraph& g) {
    auto edges = g.edges;
    std::sort(edges.begin(), edges.end());
    std::ostringstream out;
    out << g.n << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

DrawingData parse_1pl(const std::string& text) {
    LineReader r(text);
    std::string line;

    if (!r.next(line)) throw Error("empty .1pl file");
    if (line != "1PL v1") r.fail("expected header '1PL v1'");

    auto keyed_int = [&](const std::string& key) {
        if (!r.next(line)) throw Error("unexpected end of file, expected '" + key + " <int>'");
        auto toks = tokens_of(line);
        if (toks.size() != 2 || toks[0] != key) r.fail("expected '" + key + " <int>'");
        return parse_int(r, toks[1]);
    };

    DrawingData d;
    d.n = keyed_int("n");
    int m = keyed_int("m");
    if (d.n < 0 || m < 0) r.fail("negative count");

    for (int i = 0; i < m; ++i) {
        if (!r.next(line)) throw Error("unexpected end of file in edge section");
        auto toks = tokens_of(line);
        if (toks.size() != 3 || toks[0] != "e") r.fail("expected 'e <u> <v>'");
        d.edges.emplace_back(parse_int(r, toks[1]), parse_int(r, toks[2]));
    }

    int c = keyed_int("c");
    if (c < 0) r.fail("negative crossing count");
    for (int j = 0; j < c; ++j) {
        if (!r.next(line)) throw Error("unexpected end of file in crossing section");
        auto toks = tokens_of(line);
        if (toks.size() != 3 || toks[0] != "x") r.fail("expected 'x <e1> <e2>'");
        d.crossings.push_back({parse_int(r, toks[1]), parse_int(r, toks[2])});
    }

    d.rotation.assign(d.n + c, {});
    std::vector<bool> have(d.n + c, false);
    for (int i = 0; i < d.n + c; ++i) {
        if (!r.next(line)) throw Error("unexpected end of file in rotation section");
        auto toks = tokens_of(line);
        if (toks.size() < 3 || toks[0] != "r" || toks[2] != ":")
            r.fail("expected 'r <vid> : <neighbors...>'");
        int vid = parse_int(r, toks[1]);
        if (vid < 0 || vid >= d.n + c) r.fail("rotation vertex id out of range");
        if (have[vid]) r.fail("duplicate rotation line for vertex " + std::to_string(vid));
        have[vid] = true;
        for (size_t t = 3; t < toks.size(); ++t)
            d.rotation[vid].push_back(parse_int(r, toks[t]));
    }
    if (r.next(line)) r.fail("trailing content after rotation section");
    return d;
}

OnePlaneDrawing load_1pl(const std::string& text) { return validate_drawing(parse_1pl(text)); }

std::string write_1pl(const OnePlaneDrawing& d) {
    std::ostringstream out;
    out << "1PL v1\n";
    out << "n " << d.real_count() << '\n';
    out << "m " << d.base.edge_count() << '\n';
    for (auto [u, v] : d.base.edges) out << "e " << u << ' ' << v << '\n';
    out << "c " << d.crossing_count() << '\n';
    for (const auto& cr : d.crossings) out << "x " << cr.e1 << ' ' << cr.e2 << '\n';
    for (int v = 0; v < d.planar_count(); ++v) {
        out << "r " << v << " :";
        for (int w : d.rotation[v]) out << ' ' << w;
        out << '\n';
    }
    return out.str();
}

OnePlaneDrawing roundtrip(const OnePlaneDrawing& d) { return load_1pl(write_1pl(d)); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
}

namespace {

Json hypotheses_json(const std::vector<Hypothesis>& hyps) {
    Json arr = Json::array();
    for (const auto& h : hyps) arr.push_back({{"name", h.name}, {"status", to_string(h.status)}});
    return arr;
}

Json pairs_json(const std::vector<std::pair<int, int>>& ps) {
    Json arr = Json::array();
    for (auto [u, v] : ps) arr.push_back({u, v});
    return arr;
}

}  // namespace

Json to_json(const IdentityReport& r) {
    return Json{{"name", r.name},
                {"lhs", r.lhs},
                {"rhs", r.rhs},
                {"equal", r.holds},
                {"hypotheses", hypotheses_json(r.hypotheses)},
                {"verdict", to_string(r.verdict)}};
}

Json to_json(const BoundReport& r) {
    Json thresholds = Json::object(), slack = Json::object(), hypothesis = Json::object();
    for (const auto& e : r.thresholds) thresholds[e.key] = e.value;
    for (const auto& e : r.slack) slack[e.key] = e.value;
    for (const auto& h : r.hypotheses) hypothesis[h.name] = to_string(h.status);
    return Json{{"n", r.n},
                {"census", r.census.counts},
                {"thresholds", thresholds},
                {"slack", slack},
                {"mode", r.mode},
                {"hypothesis", hypothesis}};
}

Json to_json(const CliqueCensus& c) {
    return Json{{"counts", c.counts}, {"total", c.total}};
}

Json to_json(const ConnectivityReport& r) {
    Json j{{"kappa", r.kappa}};
    j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
    return j;
}

Json to_json(const SeparatorCensus& s) {
    Json sets = Json::array();
    for (const auto& t : s.separators) sets.push_back({t[0], t[1], t[2]});
    return Json{{"s3", s.s3}, {"separators", sets}};
}

Json to_json(const FaceCensus& c) {
    Json faces = Json::array();
    for (const auto& f : c.faces)
        faces.push_back({{"degree", f.degree()}, {"crossed", f.crossed}, {"walk", f.vertices}});
    return Json{{"face_count", c.count()}, {"f3", c.f3},
                {"f4", c.f4},              {"t3", c.t3},
                {"max_degree", c.max_degree}, {"segment_sum", c.segment_sum},
                {"faces", faces}};
}

Json to_json(const RichnessReport& r) {
    Json crossings = Json::array();
    for (const auto& rec : r.per_crossing) {
        Json item{{"crossing", rec.crossing},
                  {"endpoints", rec.endpoints},
                  {"missing_edges", pairs_json(rec.missing_edges)},
                  {"crossed_side_edges", pairs_json(rec.crossed_side_edges)},
                  {"kite", rec.kite}};
        if (r.strict) item["corner_faces_ok"] = rec.corner_faces_ok;
        crossings.push_back(std::move(item));
    }
    return Json{{"rich", r.rich}, {"strict", r.strict}, {"crossings", crossings}};
}

Json to_json(const CycleSideReport& r) {
    return Json{{"cycle", r.cycle},
                {"side_a", r.side_a},
                {"side_b", r.side_b},
                {"conflict", r.conflict}};
}

Json to_json(const K4Class& k) {
    return Json{{"clique", k.clique},
                {"internal_crossings", k.internal_crossings},
                {"kind", k.kind == K4Kind::Tetrahedral ? "tetrahedral" : "pyramidal"}};
}

namespace {

std::string scalar_str(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

void flatten_into(const Json& j, const std::string& prefix,
                  std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            flatten_into(value, prefix.empty() ? key : prefix + "." + key, out);
    } else if (j.is_array()) {
        bool scalars = std::all_of(j.begin(), j.end(),
                                   [](const Json& e) { return !e.is_structured(); });
        if (scalars) {
            std::string joined;
            for (const auto& e : j) {
                if (!joined.empty()) joined += ",";
                joined += scalar_str(e);
            }
            out.emplace_back(prefix, joined);
        } else {
            int i = 0;
            for (const auto& e : j) flatten_into(e, prefix + "." + std::to_string(i++), out);
        }
    } else {
        out.emplace_back(prefix, scalar_str(j));
    }
}

}  // namespace

std::vector<std::pair<std::string, std::string>> flatten(const Json& j) {
    std::vector<std::pair<std::string, std::string>> out;
    flatten_into(j, "", out);
    return out;
}

}  // namespace onepl

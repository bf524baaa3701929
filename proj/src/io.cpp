#include "dh/io.hpp"

#include <fstream>
#include <sstream>

namespace dh {

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int n = 0;
    long long m = -1;
    int max_id = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        if (line[first] == 'p') {
            if (have_header || !edges.empty())
                throw ParseError(lineno, "unexpected header");
            char p;
            if (!(ls >> p >> n >> m) || p != 'p' || n < 0 || m < 0)
                throw ParseError(lineno, "bad header, expected 'p <n> <m>'");
            std::string rest;
            if (ls >> rest) throw ParseError(lineno, "trailing tokens after header");
            have_header = true;
            continue;
        }
        int u, v;
        if (!(ls >> u >> v)) throw ParseError(lineno, "expected 'u v'");
        std::string rest;
        if (ls >> rest) throw ParseError(lineno, "trailing tokens after edge");
        if (u < 0 || v < 0) throw ParseError(lineno, "negative vertex id");
        if (have_header && (u >= n || v >= n))
            throw ParseError(lineno, "vertex id beyond declared n");
        max_id = std::max({max_id, u, v});
        edges.emplace_back(u, v);
    }
    if (!have_header) n = max_id + 1;
    if (have_header && m != static_cast<long long>(edges.size()))
        throw ParseError(lineno, "edge count does not match header");
    return make_graph(n, edges);
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.n << ' ' << g.m << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string serialize_pruning_sequence(const PruningSequence& seq) {
    std::ostringstream out;
    out << "root " << seq.root << '\n';
    out << "markers " << seq.marker_y << ' ' << seq.marker_z << '\n';
    for (const auto& s : seq.steps)
        out << s.index << ' ' << s.vertex << ' ' << step_kind_name(s.kind)
            << ' ' << s.partner << ' ' << s.layer << ' ' << s.phase << '\n';
    return out.str();
}

PruningSequence parse_pruning_sequence(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    PruningSequence seq;
    bool have_root = false, have_markers = false;
    int max_vertex = -1;
    while (std::getline(in, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "root") {
            if (!(ls >> seq.root)) throw ParseError(lineno, "bad root line");
            have_root = true;
            continue;
        }
        if (tok == "markers") {
            if (!(ls >> seq.marker_y >> seq.marker_z))
                throw ParseError(lineno, "bad markers line");
            have_markers = true;
            continue;
        }
        PruningStep s;
        std::string kind;
        try {
            s.index = std::stoi(tok);
        } catch (const std::exception&) {
            throw ParseError(lineno, "expected step index");
        }
        if (!(ls >> s.vertex >> kind >> s.partner >> s.layer >> s.phase))
            throw ParseError(lineno, "expected 'i vertex kind partner layer phase'");
        try {
            s.kind = step_kind_from_name(kind);
        } catch (const BadParameter&) {
            throw ParseError(lineno, "unknown step kind '" + kind + "'");
        }
        if (s.index != static_cast<int>(seq.steps.size()) + 1)
            throw ParseError(lineno, "step index out of order");
        max_vertex = std::max({max_vertex, s.vertex, s.partner});
        seq.steps.push_back(s);
    }
    if (!have_root || !have_markers)
        throw ParseError(lineno, "missing root or markers line");
    max_vertex = std::max(max_vertex, seq.root);
    seq.layer.clear();  // not serialized per step owner; recomputed by callers
    seq.layer.resize(max_vertex + 1, 0);
    for (const auto& s : seq.steps) seq.layer[s.vertex] = s.layer;
    return seq;
}

}  // namespace dh

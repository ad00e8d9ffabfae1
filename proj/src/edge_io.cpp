#include "tritail/edge_io.hpp"

#include <fstream>
#include <sstream>

namespace tritail {

Graph read_edge_list(std::istream& in) {
    std::vector<VertexPair> edges;
    bool have_n = false;
    std::uint64_t n = 0;
    std::uint64_t max_vertex = 0;
    bool any_vertex = false;
    std::string line;
    std::size_t lineno = 0;
    bool first_data_line = true;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::string body = line.substr(start);
        if (first_data_line && body.rfind("n=", 0) == 0) {
            have_n = true;
            n = std::stoull(body.substr(2));
            first_data_line = false;
            continue;
        }
        first_data_line = false;
        std::istringstream ls(body);
        std::uint64_t u, v;
        if (!(ls >> u >> v))
            throw InputError("edge list line " + std::to_string(lineno) + ": expected 'u v'");
        std::string rest;
        if (ls >> rest)
            throw InputError("edge list line " + std::to_string(lineno) + ": trailing tokens");
        max_vertex = std::max({max_vertex, u, v});
        any_vertex = true;
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (!have_n) n = any_vertex ? max_vertex + 1 : 0;
    if (n > static_cast<std::uint64_t>(kNoVertex))
        throw InputError("vertex count too large");
    return Graph::build(static_cast<Vertex>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open edge list file: " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "n=" << g.vertex_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open output file: " + path);
    write_edge_list(out, g);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

}  // namespace tritail

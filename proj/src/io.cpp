#include "grace/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace grace {

Graph read_graph(std::istream& is) {
    int n = 0;
    std::size_t q = 0;
    if (!(is >> n >> q)) throw std::invalid_argument("expected graph header \"n q\"");
    std::vector<Edge> edges;
    edges.reserve(q);
    for (std::size_t e = 0; e < q; ++e) {
        int i = 0, j = 0;
        if (!(is >> i >> j)) throw std::invalid_argument("expected edge line \"i j\"");
        edges.push_back(make_edge(i, j));
    }
    return Graph(n, std::move(edges));
}

std::vector<Graph> read_graphs(std::istream& is) {
    std::vector<Graph> out;
    while (true) {
        is >> std::ws;
        if (is.eof() || is.peek() == std::char_traits<char>::eof()) break;
        out.push_back(read_graph(is));
    }
    return out;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot open " + path);
    return read_graph(is);
}

Graph parse_inline_edges(const std::string& text, int n) {
    std::string normalized(text);
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    std::istringstream is(normalized);
    std::vector<Edge> edges;
    std::string token;
    int max_label = 0;
    while (is >> token) {
        const auto dash = token.find('-');
        if (dash == std::string::npos || dash == 0 || dash + 1 == token.size())
            throw std::invalid_argument("edge token must look like i-j: " + token);
        int i = 0, j = 0;
        try {
            std::size_t used = 0;
            i = std::stoi(token.substr(0, dash), &used);
            if (used != dash) throw std::invalid_argument(token);
            j = std::stoi(token.substr(dash + 1), &used);
            if (used != token.size() - dash - 1) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw std::invalid_argument("edge token must look like i-j: " + token);
        }
        edges.push_back(make_edge(i, j));
        max_label = std::max({max_label, i, j});
    }
    if (n == 0) n = max_label;
    return Graph(n, std::move(edges));
}

void write_graph(std::ostream& os, const Graph& g) {
    os << g.n << ' ' << g.q() << '\n';
    for (const auto& [i, j] : g.edges) os << i << ' ' << j << '\n';
}

std::string edge_list_string(const std::vector<Edge>& edges) {
    std::ostringstream os;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (e) os << ',';
        os << edges[e].first << '-' << edges[e].second;
    }
    return os.str();
}

std::string to_dot(int n, const std::vector<Edge>& edges, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    std::vector<char> touched(n + 1, 0);
    for (const auto& [i, j] : edges) {
        os << "  " << i << " -- " << j << ";\n";
        touched[i] = touched[j] = 1;
    }
    for (int v = 1; v <= n; ++v)
        if (!touched[v]) os << "  " << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace grace

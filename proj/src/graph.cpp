#include "nlbound/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace nlbound {

DegreeSequence DegreeSequence::from_values(std::vector<int> degrees) {
    if (degrees.empty()) raise(errc::invalid_argument, "empty degree sequence");
    std::sort(degrees.begin(), degrees.end(), std::greater<int>());
    long long sum = 0;
    for (int d : degrees) {
        if (d < 1) raise(errc::not_graphical, "degree below 1");
        sum += d;
    }
    if (sum % 2 != 0) raise(errc::not_graphical, "odd degree sum");

    // Erdos-Gallai: for each k, sum of the k largest degrees must not exceed
    // k(k-1) + sum over the rest of min(d_i, k).
    int n = static_cast<int>(degrees.size());
    long long head = 0;
    for (int k = 1; k <= n; ++k) {
        head += degrees[k - 1];
        long long tail = 0;
        for (int i = k; i < n; ++i) tail += std::min(degrees[i], k);
        if (head > static_cast<long long>(k) * (k - 1) + tail)
            raise(errc::not_graphical, "Erdos-Gallai inequality fails at k=" + std::to_string(k));
    }

    DegreeSequence ds;
    ds.values = std::move(degrees);
    ds.pendant_count = static_cast<int>(
        std::count(ds.values.begin(), ds.values.end(), 1));
    return ds;
}

long long DegreeSequence::edge_count() const {
    long long sum = 0;
    for (int d : values) sum += d;
    return sum / 2;
}

namespace {

// single BFS from vertex 0; also 2-colors to decide bipartiteness
void bfs_classify(int n, const std::vector<int>& adj_flat, const std::vector<int>& adj_start,
                  bool& connected, bool& bipartite) {
    std::vector<signed char> color(n, -1);
    std::vector<int> queue;
    queue.reserve(n);
    queue.push_back(0);
    color[0] = 0;
    int seen = 1;
    bipartite = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int i = adj_start[v]; i < adj_start[v + 1]; ++i) {
            int w = adj_flat[i];
            if (color[w] == -1) {
                color[w] = static_cast<signed char>(1 - color[v]);
                queue.push_back(w);
                ++seen;
            } else if (color[w] == color[v]) {
                bipartite = false;
            }
        }
    }
    connected = (seen == n);
}

}  // namespace

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges,
                            bool require_connected) {
    if (n < 1) raise(errc::invalid_argument, "vertex count must be positive");
    Graph g;
    g.n_ = n;
    g.edges_.reserve(edges.size());
    for (auto [i, j] : edges) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            raise(errc::vertex_out_of_range,
                  "edge (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                      ") outside 1.." + std::to_string(n));
        if (i == j)
            raise(errc::self_loop, "vertex " + std::to_string(i + 1));
        if (i > j) std::swap(i, j);
        g.edges_.emplace_back(i, j);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    for (std::size_t k = 1; k < g.edges_.size(); ++k)
        if (g.edges_[k] == g.edges_[k - 1])
            raise(errc::duplicate_edge,
                  "(" + std::to_string(g.edges_[k].first + 1) + "," +
                      std::to_string(g.edges_[k].second + 1) + ")");

    g.degrees_.assign(n, 0);
    for (auto [i, j] : g.edges_) {
        ++g.degrees_[i];
        ++g.degrees_[j];
    }

    g.adj_start_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) g.adj_start_[v + 1] = g.adj_start_[v] + g.degrees_[v];
    g.adj_flat_.resize(2 * g.edges_.size());
    std::vector<int> cursor(g.adj_start_.begin(), g.adj_start_.end() - 1);
    for (auto [i, j] : g.edges_) {
        g.adj_flat_[cursor[i]++] = j;
        g.adj_flat_[cursor[j]++] = i;
    }

    if (n == 1) {
        g.connected_ = true;
        g.bipartite_ = true;
    } else {
        bfs_classify(n, g.adj_flat_, g.adj_start_, g.connected_, g.bipartite_);
    }

    if (require_connected) {
        for (int v = 0; v < n; ++v)
            if (g.degrees_[v] == 0)
                raise(errc::isolated_vertex, "vertex " + std::to_string(v + 1));
        if (!g.connected_) raise(errc::disconnected, "graph is not connected");
    }
    return g;
}

std::span<const int> Graph::neighbors(int v) const {
    return {adj_flat_.data() + adj_start_[v],
            static_cast<std::size_t>(adj_start_[v + 1] - adj_start_[v])};
}

DegreeSequence Graph::degree_sequence() const {
    return DegreeSequence::from_values(degrees_);
}

Graph parse_edge_list(std::istream& in, bool require_connected) {
    std::string line;
    auto next_data_line = [&]() -> bool {
        while (std::getline(in, line)) {
            auto pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos) continue;
            if (line[pos] == '#') continue;
            return true;
        }
        return false;
    };

    if (!next_data_line()) raise(errc::parse_error, "missing header line \"n m\"");
    int n = 0;
    long long m = 0;
    {
        std::istringstream hs(line);
        if (!(hs >> n >> m)) raise(errc::parse_error, "bad header line: " + line);
    }
    if (n < 1 || m < 0) raise(errc::parse_error, "bad header values");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long k = 0; k < m; ++k) {
        if (!next_data_line())
            raise(errc::parse_error, "expected " + std::to_string(m) + " edges, got " +
                                         std::to_string(k));
        std::istringstream es(line);
        int i = 0, j = 0;
        if (!(es >> i >> j)) raise(errc::parse_error, "bad edge line: " + line);
        edges.emplace_back(i - 1, j - 1);  // 1-based on disk
    }
    return Graph::from_edge_list(n, edges, require_connected);
}

Graph load_edge_list(const std::string& path, bool require_connected) {
    std::ifstream in(path);
    if (!in) raise(errc::parse_error, "cannot open " + path);
    return parse_edge_list(in, require_connected);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [i, j] : g.edges()) out << i + 1 << ' ' << j + 1 << '\n';
}

DegreeSequence parse_degree_sequence(const std::string& text) {
    std::vector<int> values;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            values.push_back(std::stoi(token));
        } catch (const std::exception&) {
            raise(errc::parse_error, "bad degree token: " + token);
        }
    }
    if (values.empty()) raise(errc::parse_error, "empty degree sequence");
    return DegreeSequence::from_values(std::move(values));
}

}  // namespace nlbound

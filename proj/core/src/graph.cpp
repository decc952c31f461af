#include "partdim/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace partdim {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    if (n < 0) throw InvalidParams("vertex count must be nonnegative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidEdge("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") has an endpoint outside [0," + std::to_string(n) + ")");
        if (u == v)
            throw InvalidEdge("self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    int m = 0;
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        m += static_cast<int>(nbrs.size());
    }
    g.m_ = m / 2;
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

// Single-source BFS into a preallocated row; returns number of reached vertices.
int bfs_row(const Graph& g, Vertex src, int* row) {
    const int n = g.vertex_count();
    std::fill(row, row + n, -1);
    std::queue<Vertex> q;
    row[src] = 0;
    q.push(src);
    int reached = 1;
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : g.neighbors(u)) {
            if (row[w] < 0) {
                row[w] = row[u] + 1;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached;
}

} // namespace

bool Graph::is_connected() const {
    if (n_ == 0) return false;
    std::vector<int> row(n_);
    return bfs_row(*this, 0, row.data()) == n_;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw Disconnected("graph is empty");
    std::vector<int> d(static_cast<size_t>(n) * n);
    for (Vertex s = 0; s < n; ++s) {
        if (bfs_row(g, s, d.data() + static_cast<size_t>(s) * n) != n)
            throw Disconnected();
    }
    return DistanceMatrix(n, std::move(d));
}

const DistanceMatrix& Graph::distances() const {
    if (!dist_) dist_ = std::make_shared<const DistanceMatrix>(all_pairs_distances(*this));
    return *dist_;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count();
    const int nh = h.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(ng) * h.edge_count() + static_cast<size_t>(nh) * g.edge_count());
    for (Vertex i = 0; i < ng; ++i)
        for (const auto& [j, j2] : h.edges())
            edges.emplace_back(i * nh + j, i * nh + j2);
    for (const auto& [i, i2] : g.edges())
        for (Vertex j = 0; j < nh; ++j)
            edges.emplace_back(i * nh + j, i2 * nh + j);
    return Graph::from_edges(ng * nh, edges);
}

} // namespace partdim

#pragma once

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "partdim/errors.hpp"

namespace partdim {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Hop-count matrix of a connected graph. Entries satisfy d(u,u) = 0,
/// symmetry, d(u,v) >= 1 for u != v, and the triangle inequality.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<int> data)
        : n_(n), d_(std::move(data)) {}

    int size() const { return n_; }
    int operator()(Vertex u, Vertex v) const { return d_[static_cast<size_t>(u) * n_ + v]; }
    std::span<const int> row(Vertex u) const {
        return {d_.data() + static_cast<size_t>(u) * n_, static_cast<size_t>(n_)};
    }

private:
    int n_ = 0;
    std::vector<int> d_;
};

/// Simple undirected graph over vertices 0..n-1 with sorted adjacency lists.
/// Immutable once built; the all-pairs distance matrix is computed on first
/// use and shared between copies.
class Graph {
public:
    Graph() = default;

    /// Builds from an edge list, deduplicating and symmetrizing.
    /// Connectivity is not required here; solvers check it at entry.
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(Vertex u, Vertex v) const;

    /// Edges as sorted (u,v) pairs with u < v.
    std::vector<Edge> edges() const;

    bool is_connected() const;

    /// Cached all-pairs shortest-path matrix; throws Disconnected.
    const DistanceMatrix& distances() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    // Lazily filled; callers that share a Graph across threads are expected
    // to touch distances() once before fanning out.
    mutable std::shared_ptr<const DistanceMatrix> dist_;
};

/// BFS from every vertex. Throws Disconnected when some pair is unreachable.
DistanceMatrix all_pairs_distances(const Graph& g);

/// Cartesian product: vertex (i,j) of g x h is encoded as i * h.vertex_count() + j;
/// (i,j) ~ (i',j') iff (i == i' and j ~ j') or (i ~ i' and j == j').
Graph cartesian_product(const Graph& g, const Graph& h);

} // namespace partdim

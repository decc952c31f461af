#include "partdim/families.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace partdim {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw InvalidParams(msg);
}

} // namespace

Graph path_graph(int n) {
    require(n >= 2, "path needs n >= 2");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(n - 1, 0);
    return Graph::from_edges(n, e);
}

Graph complete_graph(int n) {
    require(n >= 2, "complete graph needs n >= 2");
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

Graph complete_bipartite_graph(int r, int s) {
    require(r >= 1 && s >= 1, "complete bipartite graph needs both sides nonempty");
    std::vector<Edge> e;
    for (int u = 0; u < r; ++u)
        for (int v = r; v < r + s; ++v) e.emplace_back(u, v);
    return Graph::from_edges(r + s, e);
}

Graph star_graph(int leaves) {
    require(leaves >= 1, "star needs at least one leaf");
    std::vector<Edge> e;
    for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
    return Graph::from_edges(leaves + 1, e);
}

Graph wheel_graph(int rim) {
    require(rim >= 3, "wheel needs rim >= 3");
    std::vector<Edge> e;
    for (int v = 1; v <= rim; ++v) {
        e.emplace_back(0, v);
        e.emplace_back(v, v == rim ? 1 : v + 1);
    }
    return Graph::from_edges(rim + 1, e);
}

Graph fan_graph(int spine) {
    require(spine >= 3, "fan needs spine >= 3");
    std::vector<Edge> e;
    for (int v = 1; v <= spine; ++v) {
        e.emplace_back(0, v);
        if (v < spine) e.emplace_back(v, v + 1);
    }
    return Graph::from_edges(spine + 1, e);
}

Graph complete_minus_edge_graph(int n) {
    require(n >= 3, "complete graph minus an edge needs n >= 3");
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!(u == 0 && v == 1)) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

namespace {

// Decode a tree from its code sequence: repeatedly attach the smallest
// remaining leaf to the next code entry. Fully deterministic.
Graph decode_tree(int n, const std::vector<int>& code) {
    std::vector<Edge> e;
    if (n == 2) {
        e.emplace_back(0, 1);
        return Graph::from_edges(n, e);
    }
    std::vector<int> degree(n, 1);
    for (int v : code) ++degree[v];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.insert(v);
    for (int v : code) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        e.emplace_back(leaf, v);
        if (--degree[v] == 1) leaves.insert(v);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    e.emplace_back(a, b);
    return Graph::from_edges(n, e);
}

} // namespace

Graph random_tree(int n, std::uint64_t seed) {
    require(n >= 2, "random tree needs n >= 2");
    std::mt19937_64 rng(seed);
    std::vector<int> code(n >= 3 ? n - 2 : 0);
    for (int& c : code) c = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    return decode_tree(n, code);
}

Graph generate(const std::string& family, const std::vector<long long>& params) {
    auto arity = [&](size_t want) {
        if (params.size() != want)
            throw InvalidParams(family + " takes " + std::to_string(want) + " parameter(s), got " +
                                std::to_string(params.size()));
    };
    auto p = [&](size_t i) { return static_cast<int>(params[i]); };
    if (family == "path") { arity(1); return path_graph(p(0)); }
    if (family == "cycle") { arity(1); return cycle_graph(p(0)); }
    if (family == "complete") { arity(1); return complete_graph(p(0)); }
    if (family == "complete_bipartite") { arity(2); return complete_bipartite_graph(p(0), p(1)); }
    if (family == "star") { arity(1); return star_graph(p(0)); }
    if (family == "wheel") { arity(1); return wheel_graph(p(0)); }
    if (family == "fan") { arity(1); return fan_graph(p(0)); }
    if (family == "complete_minus_edge") { arity(1); return complete_minus_edge_graph(p(0)); }
    if (family == "random_tree") {
        arity(2);
        return random_tree(p(0), static_cast<std::uint64_t>(params[1]));
    }
    throw UnknownFamily("unknown family: " + family);
}

} // namespace partdim

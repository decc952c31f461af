#include "partdim/partition.hpp"

#include <algorithm>
#include <string>

namespace partdim {

VertexPartition VertexPartition::validated(std::vector<std::vector<Vertex>> blocks, int n) {
    VertexPartition p;
    p.n_ = n;
    p.block_index_.assign(n, -1);
    for (size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty())
            throw InvalidPartition("block " + std::to_string(b) + " is empty");
        std::sort(blocks[b].begin(), blocks[b].end());
        for (Vertex v : blocks[b]) {
            if (v < 0 || v >= n)
                throw InvalidPartition("vertex " + std::to_string(v) + " is outside [0," +
                                       std::to_string(n) + ")");
            if (p.block_index_[v] != -1)
                throw InvalidPartition("vertex " + std::to_string(v) +
                                       " appears in more than one block");
            p.block_index_[v] = static_cast<int>(b);
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (p.block_index_[v] == -1)
            throw InvalidPartition("vertex " + std::to_string(v) + " is missing");
    p.blocks_ = std::move(blocks);
    return p;
}

VertexPartition VertexPartition::singletons(int n) {
    std::vector<std::vector<Vertex>> blocks(n);
    for (Vertex v = 0; v < n; ++v) blocks[v] = {v};
    return validated(std::move(blocks), n);
}

VertexPartition VertexPartition::canonical() const {
    auto blocks = blocks_;
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return validated(std::move(blocks), n_);
}

} // namespace partdim

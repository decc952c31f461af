#pragma once

#include <vector>

#include "partdim/errors.hpp"
#include "partdim/graph.hpp"

namespace partdim {

/// Ordered list of pairwise-disjoint nonempty vertex blocks covering
/// {0..n-1}. Vertices inside a block are kept sorted ascending.
class VertexPartition {
public:
    VertexPartition() = default;

    /// Validates and normalizes; throws InvalidPartition naming the offender
    /// (duplicate vertex, missing vertex, empty block, id out of range).
    static VertexPartition validated(std::vector<std::vector<Vertex>> blocks, int n);

    static VertexPartition singletons(int n);

    const std::vector<std::vector<Vertex>>& blocks() const { return blocks_; }
    const std::vector<Vertex>& block(int i) const { return blocks_[i]; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    int ground_size() const { return n_; }
    int block_of(Vertex v) const { return block_index_[v]; }

    /// Same blocks reordered so block order follows each block's smallest
    /// element. This is the order used for certificates and files.
    VertexPartition canonical() const;

    bool operator==(const VertexPartition& other) const {
        return blocks_ == other.blocks_;
    }

private:
    std::vector<std::vector<Vertex>> blocks_;
    std::vector<int> block_index_;
    int n_ = 0;
};

} // namespace partdim

#pragma once

#include <cstdint>
#include <vector>

#include "ecg/graph.hpp"

namespace ecg {

// Vertex -> cluster label assignment. Labels are dense: every value in
// 0..num_clusters()-1 occurs at least once.
class Partition {
  public:
    Partition() = default;

    // Compacts arbitrary labels to dense ones, ordered by first appearance.
    static Partition from_labels(const std::vector<std::uint32_t>& raw);

    static Partition singletons(VertexId n);
    static Partition single_cluster(VertexId n);

    std::uint32_t label(VertexId v) const { return labels_[v]; }
    const std::vector<std::uint32_t>& labels() const { return labels_; }
    std::uint32_t num_clusters() const { return num_clusters_; }
    std::size_t size() const { return labels_.size(); }

    std::vector<std::size_t> cluster_sizes() const;

    bool operator==(const Partition& other) const = default;

  private:
    std::vector<std::uint32_t> labels_;
    std::uint32_t num_clusters_ = 0;
};

} // namespace ecg

#include "ecg/partition.hpp"

#include <unordered_map>

namespace ecg {

Partition Partition::from_labels(const std::vector<std::uint32_t>& raw) {
    Partition p;
    p.labels_.resize(raw.size());
    std::unordered_map<std::uint32_t, std::uint32_t> dense;
    dense.reserve(raw.size());
    for (std::size_t v = 0; v < raw.size(); ++v) {
        auto [it, inserted] = dense.try_emplace(raw[v], static_cast<std::uint32_t>(dense.size()));
        p.labels_[v] = it->second;
    }
    p.num_clusters_ = static_cast<std::uint32_t>(dense.size());
    return p;
}

Partition Partition::singletons(VertexId n) {
    Partition p;
    p.labels_.resize(n);
    for (VertexId v = 0; v < n; ++v) p.labels_[v] = v;
    p.num_clusters_ = n;
    return p;
}

Partition Partition::single_cluster(VertexId n) {
    Partition p;
    p.labels_.assign(n, 0);
    p.num_clusters_ = n > 0 ? 1 : 0;
    return p;
}

std::vector<std::size_t> Partition::cluster_sizes() const {
    std::vector<std::size_t> sizes(num_clusters_, 0);
    for (std::uint32_t c : labels_) ++sizes[c];
    return sizes;
}

} // namespace ecg

#pragma once
// Immutable undirected simple graph plus the structural metrics and file
// ingestion everything else builds on. Instances are safe to share across
// threads once constructed.

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rdsnet {

using NodeId = uint32_t;

class Network {
public:
    // Canonical builder: drops self-loops and duplicate pairs, remaps ids to
    // 0..N-1 in ascending order of the original id. Throws on an empty edge
    // list. The remap table (dense id -> original id) is kept for reporting.
    static Network build(std::span<const std::pair<uint64_t, uint64_t>> edges);

    // Builder for generators whose ids are already dense. Keeps isolated
    // nodes; still enforces simplicity.
    static Network from_dense_edges(size_t node_count,
                                    std::span<const std::pair<NodeId, NodeId>> edges);

    size_t node_count() const { return offsets_.size() - 1; }
    size_t edge_count() const { return edge_count_; }

    uint32_t degree(NodeId v) const;

    std::span<const NodeId> neighbors(NodeId v) const {
        check(v);
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }

    bool has_edge(NodeId u, NodeId v) const;

    const std::vector<uint64_t>& offsets() const { return offsets_; }
    const std::vector<NodeId>& adjacency() const { return adj_; }

    // Original id of a dense node, when the graph came through build();
    // identity for dense-constructed graphs.
    uint64_t original_id(NodeId v) const {
        return original_ids_.empty() ? v : original_ids_[v];
    }
    const std::vector<uint64_t>& original_ids() const { return original_ids_; }

private:
    Network() = default;
    void check(NodeId v) const;
    static Network assemble(size_t n, std::vector<std::pair<NodeId, NodeId>>& edges,
                            std::vector<uint64_t> original_ids);

    std::vector<uint64_t> offsets_;   // size N+1
    std::vector<NodeId> adj_;         // sorted per node
    std::vector<uint64_t> original_ids_;
    size_t edge_count_ = 0;
};

// Possibly-overlapping communities. memberships[v] is sorted; sizes[c] equals
// the number of nodes whose membership set contains c.
struct CommunityPartition {
    std::vector<std::vector<uint32_t>> memberships;
    std::vector<uint32_t> sizes;

    size_t community_count() const { return sizes.size(); }

    // Smallest / largest community containing v; ties broken by community id.
    uint32_t smallest_community_of(NodeId v) const;
    uint32_t largest_community_of(NodeId v) const;

    // Checks the type invariants against a node count; throws on violation.
    void validate(size_t node_count) const;
};

// ---- structural metrics ----

// Transitivity: 3 * triangles / connected triples. Graphs without a connected
// triple score 0.
double global_clustering(const Network& net);

// Average over all nodes of the local closure ratio; degree < 2 contributes 0.
double mean_local_clustering(const Network& net);

uint64_t triangle_count(const Network& net);
std::vector<uint64_t> per_node_triangles(const Network& net);

std::vector<std::vector<NodeId>> connected_components(const Network& net);

// ---- file ingestion ----

// A network read from disk together with its node-token remap table.
struct LoadedNetwork {
    Network net;
    std::vector<std::string> tokens;                  // dense id -> token
    std::unordered_map<std::string, NodeId> index;    // token -> dense id
};

// Edge-list file: one edge per line, two whitespace-separated node tokens,
// '#' lines ignored. Node tokens may be arbitrary strings; they are mapped to
// dense ids in order of first appearance.
LoadedNetwork load_edge_list(const std::filesystem::path& path);

// Community-label file: one line per node: node token then one or more
// community ids. Tokens must exist in the loaded network.
CommunityPartition load_community_labels(const std::filesystem::path& path,
                                         const LoadedNetwork& loaded);

void write_edge_list(const std::filesystem::path& path, const Network& net);
void write_community_labels(const std::filesystem::path& path, const Network& net,
                            const CommunityPartition& part);

} // namespace rdsnet

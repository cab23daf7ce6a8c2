#include "rdsnet/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rdsnet {

void Network::check(NodeId v) const {
    if (v >= node_count())
        throw std::out_of_range("node id " + std::to_string(v) + " out of range (N=" +
                                std::to_string(node_count()) + ")");
}

uint32_t Network::degree(NodeId v) const {
    check(v);
    return static_cast<uint32_t>(offsets_[v + 1] - offsets_[v]);
}

bool Network::has_edge(NodeId u, NodeId v) const {
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

Network Network::build(std::span<const std::pair<uint64_t, uint64_t>> edges) {
    if (edges.empty()) throw std::invalid_argument("empty graph");

    std::vector<uint64_t> ids;
    ids.reserve(edges.size() * 2);
    for (const auto& [u, v] : edges) {
        ids.push_back(u);
        ids.push_back(v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    std::unordered_map<uint64_t, NodeId> remap;
    remap.reserve(ids.size());
    for (NodeId i = 0; i < ids.size(); ++i) remap[ids[i]] = i;

    std::vector<std::pair<NodeId, NodeId>> dense;
    dense.reserve(edges.size());
    for (const auto& [u, v] : edges) dense.emplace_back(remap[u], remap[v]);

    return assemble(ids.size(), dense, std::move(ids));
}

Network Network::from_dense_edges(size_t node_count,
                                  std::span<const std::pair<NodeId, NodeId>> edges) {
    std::vector<std::pair<NodeId, NodeId>> copy(edges.begin(), edges.end());
    for (const auto& [u, v] : copy)
        if (u >= node_count || v >= node_count)
            throw std::invalid_argument("edge endpoint exceeds node count");
    return assemble(node_count, copy, {});
}

Network Network::assemble(size_t n, std::vector<std::pair<NodeId, NodeId>>& edges,
                          std::vector<uint64_t> original_ids) {
    // canonicalize: u < v, drop loops, dedupe
    std::vector<std::pair<NodeId, NodeId>> canon;
    canon.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v) continue;
        canon.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

    std::vector<uint64_t> offsets(n + 1, 0);
    for (const auto& [u, v] : canon) {
        ++offsets[u + 1];
        ++offsets[v + 1];
    }
    for (size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];

    std::vector<NodeId> adj(canon.size() * 2);
    std::vector<uint64_t> cursor(offsets.begin(), offsets.end() - 1);
    for (const auto& [u, v] : canon) {
        adj[cursor[u]++] = v;
        adj[cursor[v]++] = u;
    }
    for (size_t i = 0; i < n; ++i)
        std::sort(adj.begin() + static_cast<ptrdiff_t>(offsets[i]),
                  adj.begin() + static_cast<ptrdiff_t>(offsets[i + 1]));

    Network net;
    net.offsets_ = std::move(offsets);
    net.adj_ = std::move(adj);
    net.original_ids_ = std::move(original_ids);
    net.edge_count_ = canon.size();
    return net;
}

uint32_t CommunityPartition::smallest_community_of(NodeId v) const {
    const auto& ms = memberships.at(v);
    if (ms.empty()) throw std::logic_error("node has no community membership");
    uint32_t best = ms[0];
    for (uint32_t c : ms)
        if (sizes[c] < sizes[best] || (sizes[c] == sizes[best] && c < best)) best = c;
    return best;
}

uint32_t CommunityPartition::largest_community_of(NodeId v) const {
    const auto& ms = memberships.at(v);
    if (ms.empty()) throw std::logic_error("node has no community membership");
    uint32_t best = ms[0];
    for (uint32_t c : ms)
        if (sizes[c] > sizes[best] || (sizes[c] == sizes[best] && c < best)) best = c;
    return best;
}

void CommunityPartition::validate(size_t node_count) const {
    if (memberships.size() != node_count)
        throw std::logic_error("partition covers " + std::to_string(memberships.size()) +
                               " nodes, network has " + std::to_string(node_count));
    std::vector<uint32_t> counts(sizes.size(), 0);
    for (size_t v = 0; v < memberships.size(); ++v) {
        if (memberships[v].empty())
            throw std::logic_error("node " + std::to_string(v) + " has no membership");
        for (uint32_t c : memberships[v]) {
            if (c >= sizes.size())
                throw std::logic_error("community id out of range");
            ++counts[c];
        }
    }
    for (size_t c = 0; c < sizes.size(); ++c)
        if (counts[c] != sizes[c])
            throw std::logic_error("community " + std::to_string(c) + " size mismatch: " +
                                   std::to_string(counts[c]) + " members vs recorded " +
                                   std::to_string(sizes[c]));
}

std::vector<uint64_t> per_node_triangles(const Network& net) {
    const size_t n = net.node_count();
    std::vector<uint64_t> tri(n, 0);
    // For each edge (u,v) with u < v, intersect sorted neighbor lists above v
    // so each triangle is found exactly once and credited to all three nodes.
    for (NodeId u = 0; u < n; ++u) {
        const auto nu = net.neighbors(u);
        for (NodeId v : nu) {
            if (v <= u) continue;
            const auto nv = net.neighbors(v);
            auto it_u = std::upper_bound(nu.begin(), nu.end(), v);
            auto it_v = std::upper_bound(nv.begin(), nv.end(), v);
            while (it_u != nu.end() && it_v != nv.end()) {
                if (*it_u < *it_v) ++it_u;
                else if (*it_v < *it_u) ++it_v;
                else {
                    ++tri[u];
                    ++tri[v];
                    ++tri[*it_u];
                    ++it_u;
                    ++it_v;
                }
            }
        }
    }
    return tri;
}

uint64_t triangle_count(const Network& net) {
    const auto tri = per_node_triangles(net);
    uint64_t total = 0;
    for (uint64_t t : tri) total += t;
    return total / 3;
}

double global_clustering(const Network& net) {
    uint64_t triples = 0;
    for (NodeId v = 0; v < net.node_count(); ++v) {
        const uint64_t k = net.degree(v);
        triples += k * (k - 1) / 2;
    }
    if (triples == 0) return 0.0;
    return 3.0 * static_cast<double>(triangle_count(net)) / static_cast<double>(triples);
}

double mean_local_clustering(const Network& net) {
    const size_t n = net.node_count();
    if (n == 0) return 0.0;
    const auto tri = per_node_triangles(net);
    double acc = 0.0;
    for (NodeId v = 0; v < n; ++v) {
        const uint64_t k = net.degree(v);
        if (k < 2) continue;
        acc += static_cast<double>(tri[v]) / (static_cast<double>(k) * (k - 1) / 2.0);
    }
    return acc / static_cast<double>(n);
}

std::vector<std::vector<NodeId>> connected_components(const Network& net) {
    const size_t n = net.node_count();
    std::vector<uint8_t> seen(n, 0);
    std::vector<std::vector<NodeId>> components;
    std::vector<NodeId> stack;
    for (NodeId s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<NodeId> comp;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            const NodeId u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (NodeId w : net.neighbors(u)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

LoadedNetwork load_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list: " + path.string());

    LoadedNetwork out;
    std::vector<std::pair<NodeId, NodeId>> edges;
    auto intern = [&out](const std::string& tok) -> NodeId {
        auto [it, inserted] = out.index.try_emplace(tok, static_cast<NodeId>(out.tokens.size()));
        if (inserted) out.tokens.push_back(tok);
        return it->second;
    };

    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ss(line);
        std::string a, b;
        if (!(ss >> a >> b))
            throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                                     ": expected two node tokens");
        edges.emplace_back(intern(a), intern(b));
    }
    if (edges.empty()) throw std::runtime_error("empty graph: " + path.string());

    out.net = Network::from_dense_edges(out.tokens.size(), edges);
    return out;
}

CommunityPartition load_community_labels(const std::filesystem::path& path,
                                         const LoadedNetwork& loaded) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open community labels: " + path.string());

    const size_t n = loaded.net.node_count();
    CommunityPartition part;
    part.memberships.resize(n);

    std::unordered_map<std::string, uint32_t> community_index;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ss(line);
        std::string tok;
        ss >> tok;
        const auto it = loaded.index.find(tok);
        if (it == loaded.index.end())
            throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                                     ": unknown node token '" + tok + "'");
        const NodeId v = it->second;
        std::string cid;
        while (ss >> cid) {
            auto [cit, inserted] =
                community_index.try_emplace(cid, static_cast<uint32_t>(community_index.size()));
            part.memberships[v].push_back(cit->second);
        }
        if (part.memberships[v].empty())
            throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                                     ": node has no community id");
        std::sort(part.memberships[v].begin(), part.memberships[v].end());
        part.memberships[v].erase(
            std::unique(part.memberships[v].begin(), part.memberships[v].end()),
            part.memberships[v].end());
    }

    part.sizes.assign(community_index.size(), 0);
    for (size_t v = 0; v < n; ++v) {
        if (part.memberships[v].empty())
            throw std::runtime_error("node '" + loaded.tokens[v] +
                                     "' missing from community-label file");
        for (uint32_t c : part.memberships[v]) ++part.sizes[c];
    }
    return part;
}

void write_edge_list(const std::filesystem::path& path, const Network& net) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write edge list: " + path.string());
    for (NodeId u = 0; u < net.node_count(); ++u)
        for (NodeId v : net.neighbors(u))
            if (u < v) out << net.original_id(u) << ' ' << net.original_id(v) << '\n';
}

void write_community_labels(const std::filesystem::path& path, const Network& net,
                            const CommunityPartition& part) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write community labels: " + path.string());
    for (NodeId v = 0; v < net.node_count(); ++v) {
        out << net.original_id(v);
        for (uint32_t c : part.memberships[v]) out << ' ' << c;
        out << '\n';
    }
}

} // namespace rdsnet

#include "rangehit/planarity.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace rangehit {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::no_property,
                                         boost::property<boost::edge_index_t, int>>;

void validate_graph(const Graph& g) {
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : g.edges) {
        if (u < 0 || v < 0 || u >= g.num_vertices || v >= g.num_vertices)
            throw std::invalid_argument("graph: endpoint out of range");
        if (u == v) throw std::invalid_argument("graph: self-loop");
        if (!seen.insert(std::minmax(u, v)).second) throw std::invalid_argument("graph: parallel edge");
    }
}

// K5 or K33 after smoothing all degree-2 vertices; anything else (stray
// degrees, parallel edges arising mid-smoothing) disqualifies.
ObstructionKind classify_subdivision(const std::vector<std::pair<int, int>>& edges) {
    std::map<int, std::set<int>> adj;
    for (auto [u, v] : edges) {
        if (u == v) return ObstructionKind::None;
        if (!adj[u].insert(v).second) return ObstructionKind::None;
        adj[v].insert(u);
    }
    for (;;) {
        int target = -1;
        for (const auto& [v, nb] : adj) {
            if (nb.size() <= 1) return ObstructionKind::None;
            if (nb.size() == 2) {
                target = v;
                break;
            }
        }
        if (target < 0) break;
        auto it = adj[target].begin();
        const int u = *it, w = *std::next(it);
        if (adj[u].count(w)) return ObstructionKind::None;
        adj.erase(target);
        adj[u].erase(target);
        adj[w].erase(target);
        adj[u].insert(w);
        adj[w].insert(u);
    }
    if (adj.size() == 5) {
        for (const auto& [v, nb] : adj)
            if (nb.size() != 4) return ObstructionKind::None;
        return ObstructionKind::K5;
    }
    if (adj.size() == 6) {
        for (const auto& [v, nb] : adj)
            if (nb.size() != 3) return ObstructionKind::None;
        const int anchor = adj.begin()->first;
        std::set<int> side{anchor};
        for (const auto& [v, nb] : adj)
            if (v != anchor && !adj[anchor].count(v)) side.insert(v);
        if (side.size() != 3) return ObstructionKind::None;
        for (const auto& [v, nb] : adj) {
            const bool v_left = side.count(v) != 0;
            for (const auto& [w, nb2] : adj) {
                if (v == w) continue;
                if ((side.count(w) != 0) == v_left) {
                    if (nb.count(w)) return ObstructionKind::None;
                } else if (!nb.count(w)) {
                    return ObstructionKind::None;
                }
            }
        }
        return ObstructionKind::K33;
    }
    return ObstructionKind::None;
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool euler_embedding_valid(const Graph& g, const std::vector<std::vector<int>>& rotation) {
    if (static_cast<int>(rotation.size()) != g.num_vertices) return false;
    std::vector<std::set<int>> adj(g.num_vertices);
    for (auto [u, v] : g.edges) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<std::map<int, int>> pos(g.num_vertices);
    for (int v = 0; v < g.num_vertices; ++v) {
        std::set<int> listed(rotation[v].begin(), rotation[v].end());
        if (listed.size() != rotation[v].size() || listed != adj[v]) return false;
        for (int i = 0; i < static_cast<int>(rotation[v].size()); ++i) pos[v][rotation[v][i]] = i;
    }

    Dsu comps(g.num_vertices);
    for (auto [u, v] : g.edges) comps.unite(u, v);

    // Face orbits of the rotation system: from directed edge (a, b), continue
    // with (b, c) where c follows a in the cyclic order around b.
    std::map<std::pair<int, int>, char> visited;
    for (auto [u, v] : g.edges) {
        visited[{u, v}] = 0;
        visited[{v, u}] = 0;
    }
    std::map<int, long long> faces;
    for (auto& [start, seen] : visited) {
        if (seen) continue;
        auto [a, b] = start;
        while (!visited[{a, b}]) {
            visited[{a, b}] = 1;
            const auto& order = rotation[b];
            const int next = order[(pos[b].at(a) + 1) % static_cast<int>(order.size())];
            a = b;
            b = next;
        }
        ++faces[comps.find(start.first)];
    }

    std::map<int, long long> vertices, edge_count;
    for (int v = 0; v < g.num_vertices; ++v) ++vertices[comps.find(v)];
    for (auto [u, v] : g.edges) ++edge_count[comps.find(u)];
    for (const auto& [root, nv] : vertices) {
        const long long ne = edge_count.count(root) ? edge_count[root] : 0;
        const long long nf = ne == 0 ? 1 : faces[root];
        if (nv - ne + nf != 2) return false;
    }
    return true;
}

}  // namespace

PlanarityCertificate is_planar(const Graph& g) {
    validate_graph(g);

    BoostGraph bg(static_cast<std::size_t>(g.num_vertices));
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        boost::add_edge(static_cast<std::size_t>(g.edges[i].first),
                        static_cast<std::size_t>(g.edges[i].second),
                        boost::property<boost::edge_index_t, int>(static_cast<int>(i)), bg);

    using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
    std::vector<std::vector<EdgeDesc>> embedding(boost::num_vertices(bg));
    std::vector<EdgeDesc> kuratowski;
    const bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg)),
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

    // Density filter: beyond 3V - 6 edges planarity is impossible.
    if (g.num_vertices >= 3 &&
        static_cast<long long>(g.edges.size()) > 3LL * g.num_vertices - 6 && planar)
        throw std::logic_error("planarity: density filter contradicts the decision");

    PlanarityCertificate cert;
    cert.planar = planar;
    if (planar) {
        cert.rotation.resize(static_cast<std::size_t>(g.num_vertices));
        for (int v = 0; v < g.num_vertices; ++v)
            for (const EdgeDesc& e : embedding[static_cast<std::size_t>(v)]) {
                const int s = static_cast<int>(boost::source(e, bg));
                const int t = static_cast<int>(boost::target(e, bg));
                cert.rotation[static_cast<std::size_t>(v)].push_back(s == v ? t : s);
            }
    } else {
        std::set<std::pair<int, int>> edges;
        for (const EdgeDesc& e : kuratowski)
            edges.insert(std::minmax(static_cast<int>(boost::source(e, bg)),
                                     static_cast<int>(boost::target(e, bg))));
        // Trim hanging paths so only the subdivision itself remains.
        for (bool changed = true; changed;) {
            changed = false;
            std::map<int, int> degree;
            for (auto [u, v] : edges) {
                ++degree[u];
                ++degree[v];
            }
            for (auto it = edges.begin(); it != edges.end();) {
                if (degree[it->first] <= 1 || degree[it->second] <= 1) {
                    it = edges.erase(it);
                    changed = true;
                } else {
                    ++it;
                }
            }
        }
        cert.obstruction.assign(edges.begin(), edges.end());
        cert.obstruction_kind = classify_subdivision(cert.obstruction);
        if (cert.obstruction_kind == ObstructionKind::None)
            throw std::logic_error("planarity: obstruction is not a K5/K33 subdivision");
    }
    if (!verify_planarity_certificate(g, cert))
        throw std::logic_error("planarity: produced certificate failed re-verification");
    return cert;
}

bool verify_planarity_certificate(const Graph& g, const PlanarityCertificate& cert) {
    validate_graph(g);
    if (cert.planar) {
        if (cert.obstruction_kind != ObstructionKind::None || !cert.obstruction.empty()) return false;
        return euler_embedding_valid(g, cert.rotation);
    }
    if (cert.obstruction.empty()) return false;
    std::set<std::pair<int, int>> have;
    for (auto [u, v] : g.edges) have.insert(std::minmax(u, v));
    std::set<std::pair<int, int>> used;
    for (auto [u, v] : cert.obstruction) {
        const auto key = std::minmax(u, v);
        if (!have.count(key) || !used.insert(key).second) return false;
    }
    const ObstructionKind kind = classify_subdivision(cert.obstruction);
    return kind != ObstructionKind::None && kind == cert.obstruction_kind;
}

}  // namespace rangehit

#include "invariants.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "error.hpp"

namespace afg {

namespace {

std::vector<int> bfs_dist(const std::vector<std::vector<int>>& adj, int root) {
    std::vector<int> dist(adj.size(), -1);
    std::queue<int> q;
    dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    return dist;
}

int girth_of(const std::vector<std::vector<int>>& adj) {
    int best = INT_MAX;
    int n = (int)adj.size();
    std::vector<int> dist(n), par(n);
    for (int root = 0; root < n && best > 3; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(par.begin(), par.end(), -1);
        std::queue<int> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (2 * dist[u] >= best) break;  // queue is ordered by distance
            for (int v : adj[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    par[v] = u;
                    q.push(v);
                } else if (v != par[u]) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    return best == INT_MAX ? kInfinite : best;
}

// Packed adjacency matrix for the isomorphism search.
struct BitMat {
    int n, words;
    std::vector<uint64_t> bits;
    explicit BitMat(const std::vector<std::vector<int>>& adj)
        : n((int)adj.size()), words((n + 63) / 64), bits((size_t)n * words, 0) {
        for (int u = 0; u < n; ++u)
            for (int v : adj[u]) bits[(size_t)u * words + v / 64] |= 1ull << (v % 64);
    }
    const uint64_t* row(int u) const { return bits.data() + (size_t)u * words; }
    bool get(int u, int v) const { return row(u)[v / 64] >> (v % 64) & 1; }
};

// Joint colour refinement: initial colour = (degree, triangle count), then
// repeatedly recolour by the multiset of neighbour colours until stable.
// Returns false when the colour multisets of the two graphs diverge.
bool refine_colors(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b,
                   const BitMat& ma, const BitMat& mb, std::vector<int>& ca,
                   std::vector<int>& cb) {
    int n = (int)a.size();
    auto triangles = [n](const std::vector<std::vector<int>>& adj, const BitMat& m) {
        std::vector<long long> t(n, 0);
        for (int u = 0; u < n; ++u) {
            long long cnt = 0;
            for (int v : adj[u])
                for (int w = 0; w < m.words; ++w) cnt += std::popcount(m.row(u)[w] & m.row(v)[w]);
            t[u] = cnt / 2;
        }
        return t;
    };
    std::vector<long long> ta = triangles(a, ma), tb = triangles(b, mb);
    std::map<std::pair<long long, long long>, int> init;
    ca.resize(n);
    cb.resize(n);
    for (int u = 0; u < n; ++u) ca[u] = init.emplace(std::pair{(long long)a[u].size(), ta[u]}, (int)init.size()).first->second;
    for (int u = 0; u < n; ++u) cb[u] = init.emplace(std::pair{(long long)b[u].size(), tb[u]}, (int)init.size()).first->second;

    size_t ncolors = init.size();
    for (;;) {
        std::map<std::pair<int, std::vector<int>>, int> next;
        auto recolor = [&next](const std::vector<std::vector<int>>& adj, std::vector<int>& col) {
            std::vector<int> out(col.size());
            for (size_t u = 0; u < adj.size(); ++u) {
                std::vector<int> sig;
                sig.reserve(adj[u].size());
                for (int v : adj[u]) sig.push_back(col[v]);
                std::sort(sig.begin(), sig.end());
                out[u] = next.emplace(std::pair{col[u], std::move(sig)}, (int)next.size()).first->second;
            }
            col = out;
        };
        recolor(a, ca);
        recolor(b, cb);
        std::vector<int> hista(next.size(), 0), histb(next.size(), 0);
        for (int c : ca) ++hista[c];
        for (int c : cb) ++histb[c];
        if (hista != histb) return false;
        if (next.size() == ncolors) return true;
        ncolors = next.size();
    }
}

struct IsoSearch {
    const BitMat& ma;
    const BitMat& mb;
    const std::vector<int>& ca;
    std::vector<std::vector<uint64_t>> color_mask_b;  // per colour, bitset over B
    std::vector<int> order;                           // A vertices, BFS order
    std::vector<int> match;
    std::vector<uint64_t> used_b;

    IsoSearch(const std::vector<std::vector<int>>& a, const BitMat& a_m, const BitMat& b_m,
              const std::vector<int>& a_col, const std::vector<int>& b_col)
        : ma(a_m), mb(b_m), ca(a_col) {
        int n = ma.n;
        int ncol = 0;
        for (int c : a_col) ncol = std::max(ncol, c + 1);
        for (int c : b_col) ncol = std::max(ncol, c + 1);
        color_mask_b.assign(ncol, std::vector<uint64_t>(ma.words, 0));
        for (int u = 0; u < n; ++u) color_mask_b[b_col[u]][u / 64] |= 1ull << (u % 64);
        match.assign(n, -1);
        used_b.assign(ma.words, 0);
        // visit each component breadth-first so every vertex after the first
        // of its component is constrained by a matched neighbour
        std::vector<char> seen(n, 0);
        for (int root = 0; root < n; ++root) {
            if (seen[root]) continue;
            std::queue<int> q;
            q.push(root);
            seen[root] = 1;
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                order.push_back(u);
                for (int v : a[u])
                    if (!seen[v]) {
                        seen[v] = 1;
                        q.push(v);
                    }
            }
        }
    }

    bool extend(int pos) {
        if (pos == ma.n) return true;
        int v = order[pos];
        std::vector<uint64_t> cand = color_mask_b[ca[v]];
        for (int w = 0; w < ma.words; ++w) cand[w] &= ~used_b[w];
        for (int i = 0; i < pos; ++i) {
            int u = order[i];
            const uint64_t* row = mb.row(match[u]);
            if (ma.get(v, u))
                for (int w = 0; w < ma.words; ++w) cand[w] &= row[w];
            else
                for (int w = 0; w < ma.words; ++w) cand[w] &= ~row[w];
        }
        for (int w = 0; w < ma.words; ++w)
            while (cand[w]) {
                int bit = std::countr_zero(cand[w]);
                cand[w] &= cand[w] - 1;
                int u = w * 64 + bit;
                match[v] = u;
                used_b[w] |= 1ull << bit;
                if (extend(pos + 1)) return true;
                used_b[w] &= ~(1ull << bit);
                match[v] = -1;
            }
        return false;
    }
};

}  // namespace

InvariantReport invariant_report(const std::vector<std::vector<int>>& adj) {
    InvariantReport rep;
    rep.order = (int)adj.size();
    for (const auto& row : adj) ++rep.degree_multiset[(int)row.size()];
    std::vector<char> seen(adj.size(), 0);
    for (size_t root = 0; root < adj.size(); ++root) {
        if (seen[root]) continue;
        std::vector<int> dist = bfs_dist(adj, (int)root);
        std::vector<int> comp;
        for (size_t v = 0; v < adj.size(); ++v)
            if (dist[v] >= 0) {
                comp.push_back((int)v);
                seen[v] = 1;
            }
        int ecc = 0;
        for (int v : comp) {
            std::vector<int> d = bfs_dist(adj, v);
            for (int u : comp) ecc = std::max(ecc, d[u]);
        }
        rep.components.push_back(std::move(comp));
        rep.component_diameters.push_back(ecc);
    }
    rep.diameter = rep.components.size() == 1 ? rep.component_diameters[0] : kInfinite;
    if (adj.empty()) rep.diameter = kInfinite;
    rep.girth = girth_of(adj);
    return rep;
}

MultipartiteShape check_complete_multipartite(const std::vector<std::vector<int>>& adj,
                                              const std::vector<int>& component) {
    if (component.empty()) fail(errc::invalid, "component is empty");
    std::set<int> members(component.begin(), component.end());
    for (int v : component) {
        if (v < 0 || v >= (int)adj.size()) fail(errc::invalid, "component vertex out of range");
        for (int u : adj[v])
            if (!members.count(u))
                fail(errc::invalid, "vertex set is not a union of components: edge leaves it");
    }
    std::vector<int> dist = bfs_dist(adj, component[0]);
    for (int v : component)
        if (dist[v] < 0) fail(errc::invalid, "vertex set is not connected");

    // non-neighbourhood (self included) of each member, within the component
    auto non_neighbours = [&](int v) {
        std::vector<int> out;
        for (int u : component)
            if (u == v || !std::binary_search(adj[v].begin(), adj[v].end(), u)) out.push_back(u);
        return out;
    };
    std::vector<int> sizes;
    std::set<int> classified;
    for (int v : component) {
        if (classified.count(v)) continue;
        std::vector<int> part = non_neighbours(v);
        for (int u : part) {
            if (u == v) continue;
            std::vector<int> other = non_neighbours(u);
            if (other != part) {
                // some w separates the two non-neighbourhoods: v-u and one of
                // v-w / u-w non-adjacent while the third pair is adjacent
                std::vector<int> diff;
                std::set_symmetric_difference(part.begin(), part.end(), other.begin(),
                                              other.end(), std::back_inserter(diff));
                int w = diff.front();
                fail(errc::verify,
                     "component is not complete multipartite: non-adjacency is not an "
                     "equivalence relation, witness vertices " +
                         std::to_string(v) + ", " + std::to_string(u) + ", " + std::to_string(w));
            }
        }
        for (int u : part) classified.insert(u);
        sizes.push_back((int)part.size());
    }
    for (int s : sizes)
        if (s != sizes[0])
            fail(errc::verify, "component is not complete multipartite with equal parts: part sizes " +
                                   std::to_string(sizes[0]) + " and " + std::to_string(s));
    return {(int)sizes.size(), sizes[0]};
}

bool is_arc_transitive(const Geometry& g, const FlagGraph& fg, const Group& G) {
    int nf = (int)g.flags().size();
    if ((int)fg.adj.size() != nf) fail(errc::invalid, "graph was built over a different flag set");
    auto perms = flag_perms(g, G);
    for (size_t i = 0; i < perms.size(); ++i)
        for (int u = 0; u < nf; ++u)
            for (int v : fg.adj[u]) {
                int pu = perms[i][u], pv = perms[i][v];
                if (!std::binary_search(fg.adj[pu].begin(), fg.adj[pu].end(), pv))
                    fail(errc::precondition,
                         "the group does not preserve the graph: generator " + std::to_string(i) +
                             " sends edge {" + g.flag_label(u) + ", " + g.flag_label(v) +
                             "} to the non-edge {" + g.flag_label(pu) + ", " + g.flag_label(pv) +
                             "}");
            }
    long long arcs = 0;
    for (const auto& row : fg.adj) arcs += (long long)row.size();
    if (arcs == 0) return true;
    int u0 = 0;
    while (fg.adj[u0].empty()) ++u0;
    long long orbit = (long long)orbit_pairs(perms, nf, (long long)u0 * nf + fg.adj[u0][0]).size();
    return orbit == arcs;
}

QuotientReport quotient_analysis(const Geometry& g, const FlagGraph& fg) {
    int nf = (int)g.flags().size();
    if ((int)fg.adj.size() != nf) fail(errc::invalid, "graph was built over a different flag set");
    int np = g.num_points();
    QuotientReport rep;
    rep.fibers.assign(np, {});
    for (int v = 0; v < nf; ++v) rep.fibers[g.flags()[v].point].push_back(v);
    rep.block_size = (long long)rep.fibers[0].size();

    // which blocks each vertex sees
    std::vector<char> covered((size_t)nf * np, 0);
    for (int u = 0; u < nf; ++u) {
        int pu = g.flags()[u].point;
        for (int v : fg.adj[u]) {
            int pv = g.flags()[v].point;
            if (pu == pv)
                fail(errc::precondition, "adjacent flags " + g.flag_label(u) + " and " +
                                             g.flag_label(v) +
                                             " share their point: fibers are not independent");
            covered[(size_t)u * np + pv] = 1;
        }
    }
    std::vector<char> quotient((size_t)np * np, 0);
    for (int u = 0; u < nf; ++u)
        for (int c = 0; c < np; ++c)
            if (covered[(size_t)u * np + c]) quotient[(size_t)g.flags()[u].point * np + c] = 1;
    rep.quotient_adj.assign(np, {});
    rep.quotient_complete = true;
    for (int b = 0; b < np; ++b)
        for (int c = 0; c < np; ++c) {
            if (b == c) continue;
            if (quotient[(size_t)b * np + c])
                rep.quotient_adj[b].push_back(c);
            else
                rep.quotient_complete = false;
        }

    // trace of C on B must miss exactly one vertex, for every adjacent pair
    std::vector<int> missing((size_t)np * np, -1);
    for (int b = 0; b < np; ++b)
        for (int c : rep.quotient_adj[b]) {
            int miss = -1, count = 0;
            for (int u : rep.fibers[b])
                if (!covered[(size_t)u * np + c]) {
                    miss = u;
                    ++count;
                }
            if (count != 1)
                fail(errc::verify,
                     "not an almost multicover: the trace of the fiber of point " +
                         g.point_label(c) + " on the fiber of point " + g.point_label(b) +
                         " misses " + std::to_string(count) + " vertices instead of 1");
            missing[(size_t)b * np + c] = miss;
        }
    rep.almost_multicover = true;

    long long mult = -1;
    for (int b = 0; b < np; ++b)
        for (int c : rep.quotient_adj[b]) {
            long long same = 0;
            for (int d : rep.quotient_adj[b])
                same += missing[(size_t)b * np + d] == missing[(size_t)b * np + c];
            if (mult < 0) mult = same;
            if (same != mult)
                fail(errc::verify, "multiplicity is not constant across block pairs: found " +
                                       std::to_string(same) + " after " + std::to_string(mult));
        }
    rep.multiplicity = std::max(mult, 0ll);
    return rep;
}

IncidenceStructure design_recover(const Geometry& g, const FlagGraph& fg, const Group& G) {
    QuotientReport qr = quotient_analysis(g, fg);
    int np = g.num_points();

    // for each fiber B and vertex a in B, the block collects the points whose
    // fiber trace on B misses exactly a, together with B's own point
    std::set<std::vector<int>> blocks;
    for (int b = 0; b < np; ++b) {
        std::map<int, std::vector<int>> by_missing;
        for (int c : qr.quotient_adj[b]) {
            int miss = -1;
            for (int u : qr.fibers[b]) {
                bool sees = false;
                for (int v : fg.adj[u])
                    if (g.flags()[v].point == c) {
                        sees = true;
                        break;
                    }
                if (!sees) {
                    miss = u;
                    break;
                }
            }
            by_missing[miss].push_back(c);
        }
        for (auto& [miss, pts] : by_missing) {
            pts.push_back(b);
            std::sort(pts.begin(), pts.end());
            blocks.insert(pts);
        }
    }

    // the block set must be closed under the group
    auto perms = point_perms(g, G);
    for (const auto& perm : perms)
        for (const auto& blk : blocks) {
            std::vector<int> img;
            img.reserve(blk.size());
            for (int pt : blk) img.push_back(perm[pt]);
            std::sort(img.begin(), img.end());
            if (!blocks.count(img))
                fail(errc::verify, "recovered block set is not closed under the group");
        }

    IncidenceStructure d;
    d.v = np;
    d.blocks.assign(blocks.begin(), blocks.end());
    d.k = (long long)d.blocks.front().size();
    for (const auto& blk : d.blocks)
        if ((long long)blk.size() != d.k)
            fail(errc::verify, "not a 2-design: block sizes " + std::to_string(d.k) + " and " +
                                   std::to_string(blk.size()) + " both occur");
    std::vector<long long> pair_count((size_t)np * np, 0);
    for (const auto& blk : d.blocks)
        for (size_t i = 0; i < blk.size(); ++i)
            for (size_t j = i + 1; j < blk.size(); ++j) ++pair_count[(size_t)blk[i] * np + blk[j]];
    d.lambda = np >= 2 ? pair_count[1] : 0;  // pair (0,1)
    for (int x = 0; x < np; ++x)
        for (int y = x + 1; y < np; ++y)
            if (pair_count[(size_t)x * np + y] != d.lambda)
                fail(errc::verify, "not a 2-design: points " + g.point_label(x) + " and " +
                                       g.point_label(y) + " lie on " +
                                       std::to_string(pair_count[(size_t)x * np + y]) +
                                       " blocks, expected " + std::to_string(d.lambda));
    return d;
}

bool are_isomorphic(const std::vector<std::vector<int>>& a,
                    const std::vector<std::vector<int>>& b) {
    if (a.size() != b.size()) return false;
    if (a.size() > 4096) fail(errc::cap, "isomorphism testing is limited to 4096 vertices");
    if (a.empty()) return true;
    std::vector<size_t> da, db;
    for (const auto& row : a) da.push_back(row.size());
    for (const auto& row : b) db.push_back(row.size());
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;

    BitMat ma(a), mb(b);
    std::vector<int> ca, cb;
    if (!refine_colors(a, b, ma, mb, ca, cb)) return false;
    IsoSearch search(a, ma, mb, ca, cb);
    return search.extend(0);
}

}  // namespace afg

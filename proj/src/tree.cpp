#include "btlat/tree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace btlat {

GroupInput GroupInput::make(Ring R, std::vector<Mat2> gens, std::string label) {
    if (gens.empty()) fail(errc::config, "generator list is empty");
    GroupInput G;
    G.ring = std::move(R);
    G.label = std::move(label);
    for (auto& g : gens) {
        if (!g.ring() || !g.ring()->same_as(*G.ring))
            fail(errc::config, "generator ring does not match the group ring");
        Mat2 n = g.normalized();
        unsigned w = n.det_num().valuation();
        if (w >= G.ring->precision())
            fail(errc::config, "generator is not certifiably invertible at precision N");
        long vk = static_cast<long>(w) - 2 * static_cast<long>(n.denom);
        if (vk % 2 != 0) {
            G.odd_det_ = true;
        } else {
            Mat2 h = n;
            h.denom = w / 2;  // pi-rescaled to determinant valuation 0 over K
            G.norm_gens_.push_back(h.normalized());
        }
        G.gens.push_back(std::move(g));
    }
    if (G.odd_det_) G.norm_gens_.clear();
    return G;
}

namespace {

// Column span of a list of integral vectors, as a canonical class.
LatticeClass span_class(const Ring& R, std::vector<Vec2> cols) {
    unsigned N = R->precision();
    size_t piv = cols.size();
    unsigned best = N;
    for (size_t i = 0; i < cols.size(); ++i) {
        unsigned v = cols[i].y.valuation();
        if (v < best) {
            best = v;
            piv = i;
        }
    }
    if (piv == cols.size())  // bottom row vanishes
        fail(errc::singular_lattice, "column span has rank < 2 at precision N");
    RElem ypi = cols[piv].y.div_pi_pow_exact(best);
    RElem yinv = ypi.invert();
    for (size_t i = 0; i < cols.size(); ++i) {
        if (i == piv) continue;
        RElem lam = cols[i].y.div_pi_pow_exact(best) * yinv;
        cols[i].x = cols[i].x - lam * cols[piv].x;
        cols[i].y = RElem::zero(R);
    }
    unsigned bx = N;
    size_t px = cols.size();
    for (size_t i = 0; i < cols.size(); ++i) {
        if (i == piv) continue;
        if (cols[i].x.valuation() < bx) {
            bx = cols[i].x.valuation();
            px = i;
        }
    }
    if (px == cols.size()) fail(errc::singular_lattice, "column span has rank < 2 at precision N");
    return canonicalize(Mat2{cols[px].x, cols[piv].x, cols[px].y, cols[piv].y, 0});
}

} // namespace

std::variant<LatticeClass, Unbounded> find_stable_vertex(const GroupInput& G, unsigned max_iter) {
    if (G.has_odd_det_generator())
        return Unbounded{"a generator has odd determinant valuation; no class is stable"};
    const Ring& R = G.ring;
    unsigned N = R->precision();
    if (max_iter == 0) max_iter = 2 * N + 4;
    LatticeClass cur = LatticeClass::standard(R);
    for (unsigned iter = 0; iter < max_iter; ++iter) {
        Mat2 X = cur.rep();
        std::vector<Mat2> prods{X};
        unsigned emax = 0;
        for (const Mat2& g : G.normalized_gens()) {
            Mat2 p = g * X;
            emax = std::max(emax, p.denom);
            prods.push_back(p);
        }
        if (emax >= N) return Unbounded{"denominators exhausted the precision"};
        std::vector<Vec2> cols;
        for (const Mat2& p : prods) {
            unsigned s = emax - p.denom;
            cols.push_back({p.a.mul_pi_pow(s), p.c.mul_pi_pow(s)});
            cols.push_back({p.b.mul_pi_pow(s), p.d.mul_pi_pow(s)});
        }
        LatticeClass next = LatticeClass::standard(R);
        try {
            next = span_class(R, std::move(cols));
        } catch (const error&) {
            return Unbounded{"lattice sum left the certifiable range"};
        }
        if (next == cur) {
            for (const Mat2& g : G.gens)
                if (!is_stable(cur, g))
                    return Unbounded{"class-stationary sum with an unstable generator"};
            return cur;
        }
        cur = next;
    }
    return Unbounded{"no stable class within the iteration budget"};
}

std::optional<unsigned> StableSubtree::index_of(const LatticeClass& v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it != vertices.end() && *it == v)
        return static_cast<unsigned>(it - vertices.begin());
    return std::nullopt;
}

std::vector<std::vector<unsigned>> StableSubtree::adjacency() const {
    std::vector<std::vector<unsigned>> adj(vertices.size());
    for (auto [i, j] : edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    return adj;
}

StableSubtree compute_subtree(const GroupInput& G, const LatticeClass& seed, unsigned cap,
                              size_t vertex_budget) {
    const Ring& R = G.ring;
    struct Info {
        unsigned depth = 0;
        bool boundary = false;
        bool open = false;
    };
    std::map<LatticeClass, Info> found;
    std::map<LatticeClass, bool> stable_cache;
    auto stable_all = [&](const LatticeClass& v) {
        auto it = stable_cache.find(v);
        if (it != stable_cache.end()) return it->second;
        bool ok = true;
        for (const Mat2& g : G.gens)
            if (!is_stable(v, g)) {
                ok = false;
                break;
            }
        stable_cache.emplace(v, ok);
        return ok;
    };
    if (!stable_all(seed)) fail(errc::config, "seed class is not stable under all generators");

    StableSubtree T;
    T.ring = R;
    T.cap = cap;
    found.emplace(seed, Info{0, false, false});
    std::deque<LatticeClass> queue{seed};
    std::set<std::pair<std::vector<uint32_t>, std::vector<uint32_t>>> edge_keys;
    std::vector<std::pair<LatticeClass, LatticeClass>> edges;
    while (!queue.empty()) {
        LatticeClass v = queue.front();
        queue.pop_front();
        Info& info = found.at(v);
        unsigned dv = info.depth;
        for (const LatticeClass& nb : neighbors(v)) {
            auto it = found.find(nb);
            if (it != found.end()) {
                auto ka = v.key(), kb = nb.key();
                if (ka > kb) std::swap(ka, kb);
                if (edge_keys.emplace(ka, kb).second) edges.emplace_back(v, nb);
                continue;
            }
            if (!stable_all(nb)) {
                info.boundary = true;
                T.any_rejection = true;
                continue;
            }
            if (dv >= cap) {
                info.open = true;
                T.truncated = true;
                continue;
            }
            found.emplace(nb, Info{dv + 1, false, false});
            if (found.size() > vertex_budget)
                fail(errc::resource_limit, "subtree exceeded the vertex budget");
            auto ka = v.key(), kb = nb.key();
            if (ka > kb) std::swap(ka, kb);
            if (edge_keys.emplace(ka, kb).second) edges.emplace_back(v, nb);
            queue.push_back(nb);
        }
    }
    for (auto& [v, info] : found) T.vertices.push_back(v);
    std::sort(T.vertices.begin(), T.vertices.end());
    T.depth.resize(T.vertices.size());
    T.has_unstable_neighbor.resize(T.vertices.size());
    T.has_open_neighbor.resize(T.vertices.size());
    for (size_t i = 0; i < T.vertices.size(); ++i) {
        const Info& info = found.at(T.vertices[i]);
        T.depth[i] = info.depth;
        T.has_unstable_neighbor[i] = info.boundary;
        T.has_open_neighbor[i] = info.open;
    }
    T.seed_index = *T.index_of(seed);
    for (auto& [a, b] : edges) {
        unsigned i = *T.index_of(a), j = *T.index_of(b);
        if (i > j) std::swap(i, j);
        T.edges.emplace_back(i, j);
    }
    std::sort(T.edges.begin(), T.edges.end());
    return T;
}

const char* shape_name(Shape s) {
    switch (s) {
        case Shape::Point: return "Point";
        case Shape::Segment: return "Segment";
        case Shape::Ball: return "Ball";
        case Shape::GeneralizedBall: return "GeneralizedBall";
        case Shape::Band: return "Band";
        case Shape::WholeTree: return "WholeTree";
        case Shape::HorodiscSuspect: return "HorodiscSuspect";
        case Shape::TruncatedUnknown: return "TruncatedUnknown";
    }
    return "?";
}

namespace {

std::vector<unsigned> bfs_levels(const std::vector<std::vector<unsigned>>& adj,
                                 const std::vector<unsigned>& sources) {
    std::vector<unsigned> lvl(adj.size(), UINT32_MAX);
    std::deque<unsigned> q;
    for (unsigned s : sources) {
        lvl[s] = 0;
        q.push_back(s);
    }
    while (!q.empty()) {
        unsigned v = q.front();
        q.pop_front();
        for (unsigned w : adj[v])
            if (lvl[w] == UINT32_MAX) {
                lvl[w] = lvl[v] + 1;
                q.push_back(w);
            }
    }
    return lvl;
}

unsigned farthest(const std::vector<unsigned>& lvl) {
    unsigned best = 0;
    for (unsigned i = 1; i < lvl.size(); ++i)
        if (lvl[i] != UINT32_MAX && lvl[i] > lvl[best]) best = i;
    return best;
}

} // namespace

ShapeReport classify_shape(const StableSubtree& T) {
    ShapeReport S;
    size_t n = T.vertices.size();
    auto adj = T.adjacency();

    if (!T.truncated && n == 1) {
        S.shape = Shape::Point;
        S.d = 0;
        S.r = 0;
        S.d_exact = true;
        S.nerve = {0};
        S.leaves = {0};
        S.diametral_pair = {0, 0};
        return S;
    }

    // double BFS; explored subgraphs are trees, so this is the exact diameter
    auto l0 = bfs_levels(adj, {T.seed_index});
    unsigned u = farthest(l0);
    auto lu = bfs_levels(adj, {u});
    unsigned w = farthest(lu);
    S.d = lu[w];
    S.diametral_pair = {u, w};
    for (unsigned i = 0; i < n; ++i)
        if (adj[i].size() <= 1) S.leaves.push_back(i);

    if (T.truncated) {
        S.d_exact = false;
        if (!T.any_rejection) {
            S.shape = Shape::WholeTree;
            S.r = T.cap;
            S.notes = "every explored vertex within the cap is stable";
            return S;
        }
        std::vector<unsigned> bd;
        for (unsigned i = 0; i < n; ++i)
            if (T.has_unstable_neighbor[i]) bd.push_back(i);
        auto thick = bfs_levels(adj, bd);
        unsigned t_cut = 0, t_core = 0;
        for (unsigned i = 0; i < n; ++i) {
            if (T.has_open_neighbor[i]) t_cut = std::max(t_cut, thick[i]);
            if (T.depth[i] <= T.cap / 2) t_core = std::max(t_core, thick[i]);
        }
        S.r = std::max(t_cut, t_core);
        // a truncated band can show growth of 1 when the cut hides its side
        // leaves; sustained growth is the horodisc signature
        if (t_cut >= t_core + 2) {
            S.shape = Shape::HorodiscSuspect;
            S.notes = "interior thickness grows toward the exploration cut (" +
                      std::to_string(t_core) + " -> " + std::to_string(t_cut) + ")";
        } else {
            S.shape = Shape::TruncatedUnknown;
            S.notes = "exploration hit the cap before the subtree closed";
        }
        return S;
    }

    S.d_exact = true;
    std::vector<unsigned> bd;
    for (unsigned i = 0; i < n; ++i)
        if (T.has_unstable_neighbor[i]) bd.push_back(i);
    if (bd.empty()) {
        S.shape = Shape::TruncatedUnknown;
        S.notes = "complete subtree without certified boundary";
        return S;
    }
    auto thick = bfs_levels(adj, bd);
    unsigned r = 0;
    for (unsigned i = 0; i < n; ++i) r = std::max(r, thick[i]);
    S.r = r;
    for (unsigned i = 0; i < n; ++i)
        if (thick[i] == r) S.nerve.push_back(i);

    // the nerve must induce a path
    std::set<unsigned> nerve_set(S.nerve.begin(), S.nerve.end());
    unsigned internal_edges = 0, max_deg = 0;
    for (auto [i, j] : T.edges)
        if (nerve_set.count(i) && nerve_set.count(j)) ++internal_edges;
    for (unsigned i : S.nerve) {
        unsigned deg = 0;
        for (unsigned j : adj[i])
            if (nerve_set.count(j)) ++deg;
        max_deg = std::max(max_deg, deg);
    }
    bool nerve_is_path = internal_edges + 1 == S.nerve.size() && max_deg <= 2;

    // band equation: vertices == { x : d(x, nerve) <= r }
    bool band_eq = true;
    auto from_nerve = bfs_levels(adj, S.nerve);
    for (unsigned i = 0; i < n && band_eq; ++i)
        if (from_nerve[i] == UINT32_MAX || from_nerve[i] > r) band_eq = false;
    for (unsigned s : S.nerve) {
        if (!band_eq) break;
        std::vector<LatticeClass> frontier{T.vertices[s]};
        std::set<LatticeClass> seen{T.vertices[s]};
        for (unsigned k = 0; k < r && band_eq; ++k) {
            std::vector<LatticeClass> next;
            for (const auto& v : frontier)
                for (const auto& nb : neighbors(v))
                    if (seen.insert(nb).second) {
                        if (!T.index_of(nb)) {
                            band_eq = false;
                            break;
                        }
                        next.push_back(nb);
                    }
            frontier = std::move(next);
        }
    }
    bool geometry = S.d == (S.nerve.size() - 1) + 2 * r;

    if (!nerve_is_path || !band_eq || !geometry) {
        S.shape = Shape::TruncatedUnknown;
        S.notes = "band validation failed";
        return S;
    }
    if (r == 0)
        S.shape = n == 1 ? Shape::Point : Shape::Segment;
    else if (S.nerve.size() == 1)
        S.shape = Shape::Ball;
    else if (S.nerve.size() == 2)
        S.shape = Shape::GeneralizedBall;
    else
        S.shape = Shape::Band;
    return S;
}

std::vector<std::pair<unsigned, unsigned>> diametral_pairs(const StableSubtree& T, unsigned d) {
    auto adj = T.adjacency();
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned i = 0; i < T.vertices.size(); ++i) {
        auto lvl = bfs_levels(adj, {i});
        for (unsigned j = 0; j < T.vertices.size(); ++j)
            if (lvl[j] == d) out.emplace_back(i, j);
    }
    return out;
}

std::string to_dot(const StableSubtree& T, const ShapeReport& S) {
    std::ostringstream os;
    std::set<unsigned> nerve(S.nerve.begin(), S.nerve.end());
    std::set<unsigned> leaves(S.leaves.begin(), S.leaves.end());
    os << "graph stable_subtree {\n";
    os << "  graph [label=\"" << shape_name(S.shape) << " d=" << S.d << " r=" << S.r
       << "\", labelloc=t];\n";
    os << "  node [shape=circle, fontsize=10];\n";
    for (unsigned i = 0; i < T.vertices.size(); ++i) {
        os << "  v" << i << " [label=\"" << T.vertices[i].str() << "\"";
        if (nerve.count(i)) os << ", shape=doublecircle, style=filled, fillcolor=gold";
        else if (leaves.count(i)) os << ", style=filled, fillcolor=lightgray";
        os << "];\n";
    }
    for (auto [i, j] : T.edges) os << "  v" << i << " -- v" << j << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace btlat

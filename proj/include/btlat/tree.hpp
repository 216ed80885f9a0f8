#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "btlat/mat.hpp"

namespace btlat {

// A finitely generated matrix group, given by generator images.
struct GroupInput {
    Ring ring;
    std::vector<Mat2> gens;
    std::string label;

    static GroupInput make(Ring R, std::vector<Mat2> gens, std::string label);
    // generators scaled by pi powers to determinant valuation 0; empty when
    // some generator has odd determinant valuation (no stable class exists)
    const std::vector<Mat2>& normalized_gens() const { return norm_gens_; }
    bool has_odd_det_generator() const { return odd_det_; }

private:
    std::vector<Mat2> norm_gens_;
    bool odd_det_ = false;
};

struct Unbounded {
    std::string reason;
};

// Iterate Lambda <- sum of g.Lambda over gens and 1, from the standard class,
// until the class stabilizes; Unbounded when it provably never will (odd
// determinant valuation, periodic growth) or the budget runs out.
std::variant<LatticeClass, Unbounded> find_stable_vertex(const GroupInput& G,
                                                         unsigned max_iter = 0);

// The finite explored portion of the stable subtree X(rho).
struct StableSubtree {
    Ring ring;
    std::vector<LatticeClass> vertices;       // sorted by canonical key
    std::vector<std::pair<unsigned, unsigned>> edges;
    std::vector<unsigned> depth;              // BFS depth from the seed
    std::vector<bool> has_unstable_neighbor;  // certified boundary points of X(rho)
    std::vector<bool> has_open_neighbor;      // stable neighbors beyond the cap exist
    unsigned seed_index = 0;
    unsigned cap = 0;
    bool truncated = false;
    bool any_rejection = false;  // BFS ever saw an unstable vertex

    std::optional<unsigned> index_of(const LatticeClass& v) const;
    std::vector<std::vector<unsigned>> adjacency() const;
};

// BFS over stable vertices from a seed that is stable under every generator.
StableSubtree compute_subtree(const GroupInput& G, const LatticeClass& seed, unsigned cap,
                              size_t vertex_budget = 1000000);

enum class Shape {
    Point,
    Segment,
    Ball,
    GeneralizedBall,
    Band,
    WholeTree,
    HorodiscSuspect,
    TruncatedUnknown,
};

const char* shape_name(Shape s);

struct ShapeReport {
    Shape shape = Shape::TruncatedUnknown;
    unsigned d = 0;  // diameter of the explored part
    unsigned r = 0;  // radius (distance from the nerve), exact for finite bands
    bool d_exact = false;
    std::vector<unsigned> nerve;   // indices into the subtree vertex list
    std::vector<unsigned> leaves;  // graph leaves of the explored subtree
    std::pair<unsigned, unsigned> diametral_pair{0, 0};
    std::string notes;
};

ShapeReport classify_shape(const StableSubtree& T);

// Ordered pairs (i, j) of vertices at distance exactly d (diametral pairs).
std::vector<std::pair<unsigned, unsigned>> diametral_pairs(const StableSubtree& T, unsigned d);

std::string to_dot(const StableSubtree& T, const ShapeReport& S);

} // namespace btlat

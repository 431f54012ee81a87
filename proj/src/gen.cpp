#include "rangehit/gen.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rangehit/rng.hpp"

namespace rangehit {

namespace {

constexpr std::int64_t kCoordLo = -1000;
constexpr std::int64_t kCoordHi = 1000;

std::vector<std::int64_t> draw_coords(Rng& rng, int dim) {
    std::vector<std::int64_t> c(dim);
    for (auto& x : c) x = rng.uniform_int(kCoordLo, kCoordHi);
    return c;
}

Point to_point(const std::vector<std::int64_t>& c) {
    std::vector<Rational> coords;
    coords.reserve(c.size());
    for (auto x : c) coords.emplace_back(x);
    return Point(std::move(coords));
}

std::vector<Point> draw_distinct_points(Rng& rng, int dim, int count) {
    std::set<std::vector<std::int64_t>> seen;
    std::vector<Point> points;
    while (static_cast<int>(points.size()) < count) {
        auto c = draw_coords(rng, dim);
        if (!seen.insert(c).second) continue;
        points.push_back(to_point(c));
    }
    return points;
}

}  // namespace

int family_dim(RangeFamily family) {
    return family == RangeFamily::HalfSpace ? 3 : 2;
}

GeometricInstance gen_random_instance(RangeFamily family, int num_points, int num_ranges,
                                      std::uint64_t seed) {
    if (num_points < 1 || num_ranges < 0) throw std::invalid_argument("need >= 1 point, >= 0 ranges");
    const int dim = family_dim(family);
    Rng rng(seed);
    std::vector<Point> points = draw_distinct_points(rng, dim, num_points);

    std::vector<Range> ranges;
    const Rational nudge = make_rational(1, 7);
    for (int r = 0; r < num_ranges; ++r) {
        if (family == RangeFamily::Disc) {
            const Point center = to_point(draw_coords(rng, dim));
            const auto k = rng.uniform_int(1, num_points);
            std::vector<Rational> dists;
            dists.reserve(points.size());
            for (const Point& p : points) dists.push_back(squared_distance(center, p));
            std::sort(dists.begin(), dists.end());
            // k-th smallest squared distance, pushed out so the k nearest
            // points are strictly inside (distances are integers).
            ranges.emplace_back(Disc(center, dists[static_cast<std::size_t>(k - 1)] + nudge));
        } else {
            std::vector<std::int64_t> n;
            do {
                n = draw_coords(rng, dim);
            } while (std::all_of(n.begin(), n.end(), [](std::int64_t x) { return x == 0; }));
            std::vector<Rational> normal;
            for (auto x : n) normal.emplace_back(x);
            const auto k = rng.uniform_int(1, num_points);
            std::vector<Rational> projections;
            projections.reserve(points.size());
            for (const Point& p : points) projections.push_back(dot(normal, p.coords));
            std::sort(projections.begin(), projections.end(), std::greater<>());
            // k-th largest projection, pulled back so the k extreme points
            // are strictly inside (projections are integers).
            ranges.emplace_back(
                HalfSpace(std::move(normal), projections[static_cast<std::size_t>(k - 1)] - nudge));
        }
    }
    return GeometricInstance(dim, std::move(points), std::move(ranges));
}

Hypergraph gen_fano() {
    return hypergraph_from_edges(7, {{0, 1, 2},
                                     {0, 3, 4},
                                     {0, 5, 6},
                                     {1, 3, 5},
                                     {1, 4, 6},
                                     {2, 3, 6},
                                     {2, 4, 5}});
}

std::vector<Point> gen_general_position_points(std::uint64_t seed) {
    Rng rng(seed);
    for (;;) {
        std::vector<Point> pts = draw_distinct_points(rng, 3, 6);
        if (general_position_3d(pts)) return pts;
    }
}

GeometricInstance gen_sweep_instance(RangeFamily family, std::uint64_t master_seed, int trial) {
    if (trial < 0) throw std::invalid_argument("trial must be nonnegative");
    Rng rng(master_seed ^ (0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(trial) + 1)));
    const int points = static_cast<int>(rng.uniform_int(4, 20));
    const int ranges = static_cast<int>(rng.uniform_int(3, 12));
    const auto instance_seed = static_cast<std::uint64_t>(rng.uniform_int(0, (1LL << 62)));
    return gen_random_instance(family, points, ranges, instance_seed);
}

GeometricInstance gen_sweep_instance(std::uint64_t master_seed, int trial) {
    static constexpr RangeFamily kCycle[3] = {RangeFamily::HalfPlane, RangeFamily::Disc,
                                              RangeFamily::HalfSpace};
    if (trial < 0) throw std::invalid_argument("trial must be nonnegative");
    return gen_sweep_instance(kCycle[trial % 3], master_seed, trial);
}

Hypergraph gen_random_abstract(int max_vertices, int max_edges, std::uint64_t seed) {
    if (max_vertices < 1 || max_edges < 1) throw std::invalid_argument("need >= 1 vertex and edge");
    Rng rng(seed);
    const auto n = rng.uniform_int(1, max_vertices);
    const auto m = rng.uniform_int(1, max_edges);
    std::vector<std::vector<int>> edges;
    for (std::int64_t e = 0; e < m; ++e) {
        const auto size = rng.uniform_int(1, n);
        std::set<int> edge;
        while (static_cast<std::int64_t>(edge.size()) < size)
            edge.insert(static_cast<int>(rng.uniform_int(0, n - 1)));
        edges.emplace_back(edge.begin(), edge.end());
    }
    return hypergraph_from_edges(static_cast<int>(n), edges);
}

}  // namespace rangehit

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rankfn/errors.hpp"

namespace rankfn {

// Simplices up to dimension 3 (tetrahedra); enough for H0..H2.
constexpr int kMaxSimplexDim = 3;

/// Finite point set in R^d. All points share the dimension d >= 1.
struct PointCloud {
    std::vector<std::vector<double>> points;

    std::size_t size() const { return points.size(); }
    std::size_t dimension() const { return points.empty() ? 0 : points[0].size(); }
    void validate() const;
};

/// Symmetric pairwise-distance matrix with zero diagonal.
class DistanceMatrix {
public:
    explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, 0.0) {}

    static DistanceMatrix from_entries(std::size_t n, std::vector<double> rowMajor);

    std::size_t size() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, double v) {
        d_[i * n_ + j] = v;
        d_[j * n_ + i] = v;
    }

private:
    std::size_t n_;
    std::vector<double> d_;
};

struct TimeSeries {
    std::vector<double> values;
    void validate() const;
};

/// One simplex of a filtration: sorted vertex indices and entrance value.
struct Simplex {
    double value = 0.0;
    std::array<int32_t, kMaxSimplexDim + 1> vertices{-1, -1, -1, -1};
    int8_t dim = 0;

    int32_t vertex(int i) const { return vertices[static_cast<std::size_t>(i)]; }
};

bool simplex_order(const Simplex& a, const Simplex& b); // (value, dim, lex vertices)

/// Filtered complex: simplices sorted by (value, dim, lex vertex set), with
/// every face present at an earlier-or-equal value.
struct Filtration {
    std::vector<Simplex> simplices;
    int maxDim = 0;

    double max_value() const;
    void sort_canonical();
};

/// A bare simplex identity (no filtration value); used by bifiltration cells.
struct SimplexId {
    std::array<int32_t, kMaxSimplexDim + 1> vertices{-1, -1, -1, -1};
    int8_t dim = 0;

    friend bool operator==(const SimplexId&, const SimplexId&) = default;
    friend auto operator<=>(const SimplexId& a, const SimplexId& b) {
        if (a.dim != b.dim) return a.dim <=> b.dim;
        return a.vertices <=> b.vertices;
    }
};

/// Face-closed simplex set, kept sorted by (dim, lex vertices).
using SimplexSet = std::vector<SimplexId>;

bool is_subcomplex(const SimplexSet& a, const SimplexSet& b);

enum class BifiltKind { degree_rips, height_rips };

/// Two-parameter grid of nested complexes. Cells are stored row-major over
/// (axis1 index, axis2 index) and grow with both indices; for degree-Rips the
/// second axis holds degree thresholds in decreasing order so that a larger
/// index always means a larger complex.
struct BifiltrationGrid {
    BifiltKind kind = BifiltKind::degree_rips;
    std::vector<double> axis1; // scales, ascending
    std::vector<double> axis2; // stored in complex-increasing order
    std::vector<SimplexSet> cells;

    std::size_t rows() const { return axis1.size(); }
    std::size_t cols() const { return axis2.size(); }
    const SimplexSet& cell(std::size_t i, std::size_t j) const { return cells[i * cols() + j]; }
};

// -- operations --------------------------------------------------------------

DistanceMatrix distance_matrix(const PointCloud& pc);

/// Vietoris-Rips filtration: a simplex enters at its diameter, vertices at 0.
/// Only simplices with dimension <= maxDim and diameter <= maxScale appear.
Filtration vietoris_rips(const DistanceMatrix& dm, int maxDim, double maxScale);

/// Sublevel filtration of the piecewise-linear interpolation of a series:
/// vertex i at values[i], edge (i, i+1) at max(values[i], values[i+1]).
Filtration sublevel_filtration(const TimeSeries& ts);

/// Rips complex at scale s restricted to vertices whose degree in the
/// scale-s neighborhood graph is at least k.
SimplexSet degree_rips_complex(const DistanceMatrix& dm, double s, int k, int maxDim);

/// Rips complex at scale s restricted to vertices with z-coordinate <= h.
/// Points must be 3-dimensional.
SimplexSet height_rips_complex(const PointCloud& pc, double s, double h, int maxDim);

BifiltrationGrid degree_rips_grid(const DistanceMatrix& dm, std::vector<double> scales,
                                  std::vector<double> degrees, int maxDim);
BifiltrationGrid height_rips_grid(const PointCloud& pc, std::vector<double> scales,
                                  std::vector<double> heights, int maxDim);

} // namespace rankfn

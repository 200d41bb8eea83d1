#ifndef PADIC2_NEWTON_POLYGON_HPP
#define PADIC2_NEWTON_POLYGON_HPP

#include <vector>

#include "padic2/valuation.hpp"

namespace padic2 {

struct PolygonPoint {
    long index;
    Valuation height;
};

enum class PolygonOrder { equal, first_above, second_above, incomparable };

// Lower convex hull of integer-indexed valuation data.  Points at +infinity
// are skipped; a polygon whose every point is +infinity is empty.  Vertex
// indices are strictly increasing and the slopes between consecutive
// vertices strictly increase.
class NewtonPolygon {
  public:
    NewtonPolygon() = default;

    // Lower hull of the given points.  Indices must be distinct; throws on
    // empty input (no points at all).
    static NewtonPolygon hull(std::vector<PolygonPoint> points);

    bool empty() const { return vertices_.empty(); }
    const std::vector<PolygonPoint>& vertices() const { return vertices_; }
    long first_index() const;
    long last_index() const;

    // Hull function at integer x in [first_index, last_index].
    Valuation value_at(long x) const;

    // Segment slopes, one entry per index step (slope of the segment
    // covering [i, i+1) for i from first to last-1).
    std::vector<Valuation> slope_list() const;

    // N^{<=m}: the portion over indices <= m, clipping a straddling segment
    // at x = m.  m below the first index yields the empty polygon.
    NewtonPolygon truncate(long m) const;

    // Endpoints are vertices by convention; an interior index is a vertex
    // iff the slope strictly increases across it.
    bool vertex_at(long n) const;

    // Pointwise comparison of the hull functions on the common index range.
    static PolygonOrder compare(const NewtonPolygon& a, const NewtonPolygon& b);

  private:
    std::vector<PolygonPoint> vertices_;
};

}  // namespace padic2

#endif

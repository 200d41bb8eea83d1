#include "padic2/newton_polygon.hpp"

#include <algorithm>

#include "padic2/errors.hpp"

namespace padic2 {

namespace {

// true if b lies strictly below the chord from a to c (all finite).
bool below_chord(const PolygonPoint& a, const PolygonPoint& b, const PolygonPoint& c) {
    // (b.h - a.h) / (b.i - a.i) < (c.h - a.h) / (c.i - a.i)
    mpq_class lhs = (b.height.value() - a.height.value()) * (c.index - a.index);
    mpq_class rhs = (c.height.value() - a.height.value()) * (b.index - a.index);
    return lhs < rhs;
}

}  // namespace

NewtonPolygon NewtonPolygon::hull(std::vector<PolygonPoint> points) {
    if (points.empty()) throw DomainError("NewtonPolygon::hull: empty input");
    std::sort(points.begin(), points.end(),
              [](const PolygonPoint& a, const PolygonPoint& b) { return a.index < b.index; });
    for (size_t i = 1; i < points.size(); ++i)
        if (points[i].index == points[i - 1].index)
            throw DomainError("NewtonPolygon::hull: duplicate index");

    NewtonPolygon np;
    for (const auto& p : points) {
        if (p.height.is_infinity()) continue;
        while (np.vertices_.size() >= 2) {
            const auto& a = np.vertices_[np.vertices_.size() - 2];
            const auto& b = np.vertices_.back();
            if (below_chord(a, b, p))
                break;
            np.vertices_.pop_back();
        }
        np.vertices_.push_back(p);
    }
    return np;
}

long NewtonPolygon::first_index() const {
    if (empty()) throw DomainError("NewtonPolygon: empty");
    return vertices_.front().index;
}

long NewtonPolygon::last_index() const {
    if (empty()) throw DomainError("NewtonPolygon: empty");
    return vertices_.back().index;
}

Valuation NewtonPolygon::value_at(long x) const {
    if (empty() || x < first_index() || x > last_index())
        throw DomainError("NewtonPolygon::value_at: index outside hull range");
    for (size_t i = 1; i < vertices_.size(); ++i) {
        if (x <= vertices_[i].index) {
            const auto& a = vertices_[i - 1];
            const auto& b = vertices_[i];
            mpq_class h = a.height.value() +
                          (b.height.value() - a.height.value()) * (x - a.index) /
                              (b.index - a.index);
            return Valuation(h);
        }
    }
    return vertices_.front().height;  // single vertex
}

std::vector<Valuation> NewtonPolygon::slope_list() const {
    std::vector<Valuation> out;
    for (size_t i = 1; i < vertices_.size(); ++i) {
        const auto& a = vertices_[i - 1];
        const auto& b = vertices_[i];
        mpq_class s = (b.height.value() - a.height.value()) / (b.index - a.index);
        for (long j = a.index; j < b.index; ++j) out.push_back(Valuation(s));
    }
    return out;
}

NewtonPolygon NewtonPolygon::truncate(long m) const {
    NewtonPolygon np;
    if (empty() || m < first_index()) return np;
    if (m >= last_index()) return *this;
    for (const auto& v : vertices_) {
        if (v.index <= m)
            np.vertices_.push_back(v);
        else
            break;
    }
    if (np.vertices_.back().index < m)
        np.vertices_.push_back({m, value_at(m)});
    return np;
}

bool NewtonPolygon::vertex_at(long n) const {
    if (empty() || n < first_index() || n > last_index())
        throw DomainError("NewtonPolygon::vertex_at: index outside hull range");
    if (n == first_index() || n == last_index()) return true;
    for (const auto& v : vertices_)
        if (v.index == n) return true;
    return false;
}

PolygonOrder NewtonPolygon::compare(const NewtonPolygon& a, const NewtonPolygon& b) {
    if (a.empty() || b.empty())
        return (a.empty() && b.empty()) ? PolygonOrder::equal : PolygonOrder::incomparable;
    long lo = std::max(a.first_index(), b.first_index());
    long hi = std::min(a.last_index(), b.last_index());
    if (lo > hi) return PolygonOrder::incomparable;
    bool a_above = false, b_above = false;
    for (long x = lo; x <= hi; ++x) {
        Valuation va = a.value_at(x), vb = b.value_at(x);
        if (va > vb) a_above = true;
        if (vb > va) b_above = true;
    }
    if (a_above && b_above) return PolygonOrder::incomparable;
    if (a_above) return PolygonOrder::first_above;
    if (b_above) return PolygonOrder::second_above;
    return PolygonOrder::equal;
}

}  // namespace padic2

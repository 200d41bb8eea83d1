#include "padic2/verifier.hpp"

#include <algorithm>
#include <deque>

#include "padic2/errors.hpp"

namespace padic2 {

Ball Ball::make(const mpz_class& center, long m) {
    if (m < 0) throw DomainError("Ball: negative radius valuation");
    mpz_class c;
    mpz_fdiv_r_2exp(c.get_mpz_t(), center.get_mpz_t(), static_cast<mp_bitcnt_t>(m + 1));
    return {c, m};
}

std::pair<Ball, Ball> Ball::split() const {
    long m = radius_valuation + 1;
    return {Ball::make(center, m),
            Ball::make(center + (mpz_class(1) << (radius_valuation + 1)), m)};
}

std::string Ball::str() const {
    return "B(" + center.get_str() + "," + std::to_string(radius_valuation) + ")";
}

NewtonPolygon BallPointSet::hull() const {
    std::vector<PolygonPoint> pts;
    for (long i = 0; i < static_cast<long>(points.size()); ++i)
        pts.push_back({i, points[i].height});
    return NewtonPolygon::hull(std::move(pts));
}

bool BallPointSet::hull_precise() const {
    NewtonPolygon np = hull();
    for (const auto& v : np.vertices())
        if (!points[v.index].precise) return false;
    return true;
}

PointEntry clamp_valuation(const Ball& ball, const PadicNumber& c) {
    long m = ball.radius_valuation;
    mpz_class diff = ball.center - c.residue();
    mpz_class red;
    mpz_fdiv_r_2exp(red.get_mpz_t(), diff.get_mpz_t(),
                    static_cast<mp_bitcnt_t>(c.precision()));
    if (red == 0) {
        // center coincides with the constant at its stored precision
        if (c.precision() <= m)
            throw PrecisionError("clamp_valuation: constant precision cannot decide v2 vs m");
        return {Valuation(m + 1), false};
    }
    long w = valuation2(red);
    if (w < m) return {Valuation(w), true};
    if (w == m) return {Valuation(m), false};
    return {Valuation(m + 1), false};
}

namespace {

// exact-integer variant (BC side constants ell)
PointEntry clamp_valuation_integer(const Ball& ball, long ell) {
    long m = ball.radius_valuation;
    mpz_class diff = ball.center - ell;
    if (diff == 0) return {Valuation(m + 1), false};
    long w = valuation2(diff);
    if (w < m) return {Valuation(w), true};
    if (w == m) return {Valuation(m), false};
    return {Valuation(m + 1), false};
}

}  // namespace

BallPointSet point_set_t2(const Ball& ball, const TraceFormulaTable& table, long n_max) {
    if (n_max > table.n_max)
        throw DomainError("point_set_t2: table too shallow for requested degree");
    BallPointSet out;
    out.points.push_back({Valuation(0), true});  // Tr(wedge^0) = 1
    for (long n = 1; n <= n_max; ++n) {
        const auto& formula = table.rows.at(n).formula;
        Valuation h(formula.lambda);
        bool precise = true;
        for (const auto& omega : formula.omegas) {
            PointEntry e = clamp_valuation(ball, omega);
            h += e.height;
            precise = precise && e.precise;
        }
        for (const auto& mt : formula.min_terms) {
            PointEntry e = clamp_valuation(ball, mt.u);
            long v = e.height.to_long();
            long capped = std::min<long>(mt.cap, mt.d * v);
            // the min resolves regardless of refinement once the cap is hit
            bool mt_precise = e.precise || (mt.cap <= mt.d * v);
            h += Valuation(capped);
            precise = precise && mt_precise;
        }
        out.points.push_back({h, precise});
    }
    return out;
}

BallPointSet point_set_bc(const Ball& ball, long n_max) {
    BallPointSet out;
    out.points.push_back({Valuation(0), true});
    for (long n = 1; n <= n_max; ++n) {
        Valuation h(3 * n * (n + 1) / 2);
        bool precise = true;
        for (long ell = 3 * n + 4; ell <= 6 * n + 1; ++ell) {
            long e = e_coeff(n, ell);
            if (e == 0) continue;
            PointEntry p = clamp_valuation_integer(ball, ell);
            h += Valuation(e * p.height.to_long());
            precise = precise && p.precise;
        }
        out.points.push_back({h, precise});
    }
    return out;
}

namespace {

// vertex check against a point set that is a lower bound for the truth:
// a precise height that is a hull vertex stays a vertex of the true
// polygon; a precise hull with no vertex at n rules it out.
VertexStatus vertex_status(const BallPointSet& s, long n) {
    NewtonPolygon np = s.hull();
    bool at = np.vertex_at(n);
    if (s.points[n].precise && at) return VertexStatus::definitely_vertex;
    if (!at && s.hull_precise()) return VertexStatus::definitely_not;
    return VertexStatus::imprecise;
}

}  // namespace

VertexStatus check_vertex_bc(const Ball& ball, long n) {
    // proxy polygon over degree 2n+1 (its ells are disjoint from a_n's)
    BallPointSet proxy = point_set_bc(ball, 2 * n + 1);
    VertexStatus first = vertex_status(proxy, n);
    if (first != VertexStatus::definitely_vertex) return first;
    if (!proxy.points[n].precise) return VertexStatus::imprecise;
    // confirm at the truncation-lemma bound, computed from the same precise
    // clamps (a_n precise makes the bound exact over the ball)
    long vsum = 0;
    for (long ell = 3 * n + 4; ell <= 6 * n + 1; ++ell) {
        long e = e_coeff(n, ell);
        if (e == 0) continue;
        PointEntry p = clamp_valuation_integer(ball, ell);
        vsum += e * p.height.to_long();
    }
    long bound = n + (2 * vsum + 2) / 3;
    if (bound <= 2 * n + 1) return VertexStatus::definitely_vertex;  // already covered
    BallPointSet wide = point_set_bc(ball, bound);
    return vertex_status(wide, n);
}

std::optional<long> first_definite_bc_vertex(const Ball& ball, long from, long cap) {
    for (long n = from; n <= cap; ++n) {
        VertexStatus st = check_vertex_bc(ball, n);
        if (st == VertexStatus::definitely_vertex) return n;
        if (st == VertexStatus::imprecise) return std::nullopt;
    }
    return -1;
}

std::vector<Ball> initial_balls(const TraceFormulaTable& table) {
    std::set<Ball> seen;
    for (const auto& [n, entry] : table.rows) {
        for (const auto& pc : entry.pairing) {
            if (pc.is_min_term) {
                seen.insert(Ball::make(pc.ell, pc.cap / 2));
                if (pc.pairing_valuation.has_value()) {
                    long v = *pc.pairing_valuation;
                    seen.insert(Ball::make(pc.constant.residue(), v));
                    seen.insert(Ball::make(pc.ell, v));
                }
            } else {
                if (!pc.pairing_valuation.has_value())
                    throw PairingError("initial_balls: linear constant equals its ell");
                long v = *pc.pairing_valuation;
                seen.insert(Ball::make(pc.constant.residue(), v));
                seen.insert(Ball::make(pc.ell, v));
            }
        }
    }
    return std::vector<Ball>(seen.begin(), seen.end());
}

namespace {

struct ProcessResult {
    bool needs_split = false;
    BallVerdict verdict;
};

ProcessResult process_ball(const Ball& ball, const TraceFormulaTable& table, long n_max) {
    ProcessResult res;
    res.verdict.ball = ball;
    for (long n = n_max; n >= 1; --n) {
        VertexStatus st = check_vertex_bc(ball, n);
        if (st == VertexStatus::imprecise) {
            res.needs_split = true;
            return res;
        }
        if (st == VertexStatus::definitely_not) continue;
        // largest definite vertex: compare truncated polygons here
        BallPointSet t2 = point_set_t2(ball, table, n);
        BallPointSet bc = point_set_bc(ball, n);
        if (!t2.hull_precise() || !bc.hull_precise()) {
            res.needs_split = true;
            return res;
        }
        res.verdict.vertex = n;
        res.verdict.polygons_equal =
            NewtonPolygon::compare(t2.hull(), bc.hull()) == PolygonOrder::equal;
        // dominance of the deg <= n_max hull over the closed-form polygon,
        // pinned by the first definite vertex at or beyond n_max; the T2
        // side needs no precision here, a lower-bound hull that dominates
        // already proves the true polygon does
        auto pin = first_definite_bc_vertex(ball, n_max, n_max + 16);
        if (!pin.has_value() || *pin < 0) {
            res.needs_split = true;
            return res;
        }
        BallPointSet t2full = point_set_t2(ball, table, n_max);
        BallPointSet bcpin = point_set_bc(ball, *pin);
        if (!bcpin.hull_precise()) {
            res.needs_split = true;
            return res;
        }
        auto order = NewtonPolygon::compare(t2full.hull(), bcpin.hull().truncate(n_max));
        res.verdict.t2_geq_bc =
            order == PolygonOrder::equal || order == PolygonOrder::first_above;
        res.verdict.verified = true;
        return res;
    }
    // no vertex in range: report as such (possible for shallow tables)
    res.verdict.vertex = -1;
    res.verdict.verified = false;
    return res;
}

}  // namespace

VerifyReport run_verifier(const TraceFormulaTable& table, long n_max, long max_iterations) {
    VerifyReport report;
    std::vector<Ball> queue = initial_balls(table);
    report.c1_count = static_cast<long>(queue.size());
    while (!queue.empty() && report.iterations < max_iterations) {
        ++report.iterations;
        std::set<Ball> next;
        for (const Ball& b : queue) {
            ++report.balls_processed;
            report.max_depth = std::max(report.max_depth, b.radius_valuation);
            ProcessResult r = process_ball(b, table, n_max);
            if (r.needs_split) {
                ++report.balls_split;
                auto [lo, hi] = b.split();
                next.insert(lo);
                next.insert(hi);
            } else {
                report.verdicts.push_back(r.verdict);
            }
        }
        queue.assign(next.begin(), next.end());
    }
    report.unresolved = queue;
    std::sort(report.verdicts.begin(), report.verdicts.end(),
              [](const BallVerdict& a, const BallVerdict& b) { return a.ball < b.ball; });
    return report;
}

namespace {

// ceil of sqrt of a nonnegative rational
mpz_class sqrt_ceil_q(const mpq_class& q) {
    if (q < 0) throw DomainError("sqrt_ceil_q: negative");
    // ceil(sqrt(n/d)) = ceil(sqrt(n*d)/d)
    mpz_class nd = q.get_num() * q.get_den();
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), nd.get_mpz_t());
    if (r * r < nd) r += 1;
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), r.get_mpz_t(), q.get_den().get_mpz_t());
    return c;
}

}  // namespace

long mnk_bound_from_heights(const std::vector<mpq_class>& f, long n) {
    if (n < 1 || n >= static_cast<long>(f.size()))
        throw DomainError("mnk_bound: n outside the height range");
    mpq_class lambda = (f[n] - f[0]) / n;
    for (long a = 1; a < n; ++a) lambda = std::max(lambda, mpq_class((f[n] - f[a]) / (n - a)));
    mpq_class s = (8 + lambda) * (8 + lambda) - 8 * (4 + lambda * n - f[n]);
    if (s < 0) return n;  // the slope gap is automatic beyond n itself
    mpq_class m = (8 + lambda + mpq_class(sqrt_ceil_q(s))) / 4;
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), mpq_class(m).get_num().get_mpz_t(),
               mpq_class(m).get_den().get_mpz_t());
    return c.get_si();
}

long mnk_bound(long n, long k, const TraceFormulaTable& table) {
    std::vector<mpq_class> f;
    f.push_back(0);
    for (long i = 1; i <= table.n_max; ++i) {
        Valuation v = eval_formula(table.rows.at(i).formula, k);
        if (v.is_infinity()) throw DomainError("mnk_bound: infinite height");
        f.push_back(v.value());
    }
    return mnk_bound_from_heights(f, n);
}

mpq_class vonk_bound(long n) {
    return mpq_class(2 * n * n - 8 * n) + mpq_class(35, 8);
}

namespace {

// resolve the lowest `want` slopes over a class ball, splitting until the
// hull is precisely computed; with a deep table the region beyond n_max is
// sealed by the quadratic coefficient floor
void resolve_class(const Ball& ball, const TraceFormulaTable& table, long want,
                   std::vector<std::vector<mpq_class>>& out, int depth) {
    if (depth > 80)
        throw PrecisionError("hatada_report: class ball split budget exceeded");
    BallPointSet t2 = point_set_t2(ball, table, table.n_max);
    NewtonPolygon np = t2.hull();
    if (np.last_index() < want)
        throw DomainError("hatada_report: table too shallow for the requested slopes");
    // the reported slopes are exact once the hull is precise through the
    // vertex closing the last of them; later points only float above
    long closing = 0;
    for (const auto& v : np.vertices())
        if (v.index >= want) {
            closing = v.index;
            break;
        }
    bool precise = true;
    for (const auto& v : np.vertices()) {
        if (v.index > closing) break;
        if (!t2.points[v.index].precise) precise = false;
    }
    if (!precise) {
        auto [lo, hi] = ball.split();
        resolve_class(lo, table, want, out, depth + 1);
        resolve_class(hi, table, want, out, depth + 1);
        return;
    }
    auto slopes = np.slope_list();
    std::vector<mpq_class> res;
    for (long i = 0; i < want; ++i) res.push_back(slopes[i].value());

    if (table.n_max >= 15) {
        // chords from the closing vertex to any point beyond the table lie
        // above the reported slopes: v2(b_m) >= 2m^2 - 8m + 35/8
        mpq_class h2 = np.value_at(closing).value();
        for (long b = table.n_max + 1; b <= table.n_max + 256; ++b) {
            mpq_class chord = (vonk_bound(b) - h2) / (b - closing);
            if (chord < res.back())
                throw PrecisionError("hatada_report: coefficient floor cannot seal the slopes");
        }
    }
    out.push_back(std::move(res));
}

}  // namespace

HatadaReport hatada_report(const TraceFormulaTable& table) {
    HatadaReport report;
    report.n_max = table.n_max;
    report.slopes_reported = table.n_max >= 15 ? 2 : 1;
    if (table.n_max < 2) throw DomainError("hatada_report: table depth must be at least 2");
    for (long r = 0; r < 64; ++r) {
        Ball cls = Ball::make(r, 5);
        std::vector<std::vector<mpq_class>> resolutions;
        resolve_class(cls, table, report.slopes_reported, resolutions, 0);
        // every sub-ball of the class must agree
        for (const auto& res : resolutions)
            if (res != resolutions.front())
                throw DomainError("hatada_report: class mod 64 is not slope-uniform");
        report.rows.push_back({64, r, resolutions.front()});
    }
    return report;
}

}  // namespace padic2

#ifndef PADIC2_VERIFIER_HPP
#define PADIC2_VERIFIER_HPP

#include <optional>
#include <set>
#include <vector>

#include "padic2/buzzard_calegari.hpp"
#include "padic2/hecke_traces.hpp"

namespace padic2 {

// 2-adic ball B(a, m) = { x : v2(x - a) > m }, canonical center < 2^{m+1}.
struct Ball {
    mpz_class center;
    long radius_valuation;

    static Ball make(const mpz_class& center, long m);
    std::pair<Ball, Ball> split() const;
    bool operator<(const Ball& o) const {
        if (radius_valuation != o.radius_valuation)
            return radius_valuation < o.radius_valuation;
        return center < o.center;
    }
    bool operator==(const Ball& o) const {
        return radius_valuation == o.radius_valuation && center == o.center;
    }
    std::string str() const;
};

// Lower bound on a height over a ball; precise means equality for every k
// in the ball.
struct PointEntry {
    Valuation height;
    bool precise;
};

struct BallPointSet {
    std::vector<PointEntry> points;  // index n = 0..N

    NewtonPolygon hull() const;
    // every hull vertex precise: the computed hull is the true hull
    bool hull_precise() const;
};

// v2(k - c) over the ball with the strict-inequality precision rule:
// w < m is exact, w == m a bound, w > m (or beyond stored precision) gives
// the bound m+1.  PrecisionError when the stored precision cannot decide.
PointEntry clamp_valuation(const Ball& ball, const PadicNumber& c);

// Point sets S_{T2} and S_{BC} over a ball (T2 needs n <= table n_max; the
// BC heights come from the closed form and take any N).
BallPointSet point_set_t2(const Ball& ball, const TraceFormulaTable& table, long n_max);
BallPointSet point_set_bc(const Ball& ball, long n_max);

enum class VertexStatus { definitely_vertex, definitely_not, imprecise };

// Three-way vertex test for the closed-form polygon over a ball: proxy hull
// to degree 2n+1, then the degree bound of the truncation lemma.
VertexStatus check_vertex_bc(const Ball& ball, long n);

// First n in [from, cap] that is definitely a vertex of the closed-form
// polygon over the ball; nullopt = imprecise encountered, -1 = none found.
std::optional<long> first_definite_bc_vertex(const Ball& ball, long from, long cap);

struct BallVerdict {
    Ball ball;
    bool verified = false;        // a vertex was certified and compared
    long vertex = -1;             // largest definite vertex <= n_max, -1 if none
    bool polygons_equal = false;  // truncated polygons agree at the vertex
    bool t2_geq_bc = false;       // deg <= n_max hull lies on or above the pinned BC hull
};

struct VerifyReport {
    long iterations = 0;
    long c1_count = 0;
    long balls_processed = 0;
    long balls_split = 0;
    long max_depth = 0;
    std::vector<BallVerdict> verdicts;
    std::vector<Ball> unresolved;
};

// The initial collection: for each pairing (Omega, ell) the two balls at
// radius v2(Omega - ell); for min terms additionally B(ell, floor(n_j/2)),
// and when u != ell the pair at v2(u - ell).  Deduplicated canonically.
std::vector<Ball> initial_balls(const TraceFormulaTable& table);

// Worklist verification: per ball, scan down from n_max for the largest
// definite vertex, compare precisely computed truncated polygons there, and
// check the deg <= n_max hull dominates the pinned closed-form hull; split
// imprecise balls into half balls.
VerifyReport run_verifier(const TraceFormulaTable& table, long n_max, long max_iterations);

// Truncation depth certifying "n is a vertex of the full polygon":
// (1/4)(8 + lambda + sqrt((8+lambda)^2 - 8(4 + lambda n - f_n))) with
// lambda the steepest chord into n; returned as an integer upper bound.
long mnk_bound_from_heights(const std::vector<mpq_class>& f, long n);
long mnk_bound(long n, long k, const TraceFormulaTable& table);

// v2 floor for the char-poly coefficient at index n (valid k >> 0).
mpq_class vonk_bound(long n);

struct HatadaRow {
    long modulus;
    long residue;
    std::vector<mpq_class> slopes;  // lowest one or two
};

struct HatadaReport {
    long n_max;
    long slopes_reported;           // 1 or 2
    std::vector<HatadaRow> rows;    // one per class mod 64
};

// Lowest slopes of the formula polygon per residue class of k mod 64,
// computed symbolically over each class ball (split as needed).  Two slopes
// need table depth >= 15 and the quadratic coefficient floor to seal the
// region beyond; one slope needs n_max >= 2.
HatadaReport hatada_report(const TraceFormulaTable& table);

}  // namespace padic2

#endif

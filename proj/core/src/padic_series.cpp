#include "padic2/padic_series.hpp"

#include <algorithm>
#include <climits>

#include "padic2/errors.hpp"

namespace padic2 {

namespace {

mpz_class reduce2(const mpz_class& v, long bits) {
    mpz_class r;
    mpz_fdiv_r_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
    return r;
}

long val2_or(const mpz_class& v, long censor) {
    if (v == 0) return censor;
    return static_cast<long>(mpz_scan1(v.get_mpz_t(), 0));
}

constexpr long kNoFloor = LONG_MIN / 4;

}  // namespace

// ---------------------------------------------------------------------------
// PadicSeries
// ---------------------------------------------------------------------------

PadicSeries::PadicSeries(std::vector<PadicNumber> coeffs, long floor_offset, long floor_slope)
    : c_(std::move(coeffs)), floor_offset_(floor_offset), floor_slope_(floor_slope) {
    if (c_.empty()) throw DomainError("PadicSeries: no coefficients");
    if (floor_slope_ < 1) throw DomainError("PadicSeries: floor slope must be >= 1");
}

PadicSeries PadicSeries::without_floor(std::vector<PadicNumber> coeffs) {
    PadicSeries s(std::move(coeffs), 0, 1);
    s.has_floor_ = false;
    return s;
}

long PadicSeries::coeff_floor(long u) const {
    if (!has_floor_) return kNoFloor;
    if (u == 0) return floor_offset_;
    return floor_offset_ + floor_slope_ * u - factorial_valuation2(static_cast<unsigned long>(u));
}

long PadicSeries::tail_bound() const {
    if (!has_floor_) return kNoFloor;
    // v2(u!) <= u - 1, so the floor is bounded below by the increasing line
    // offset + (slope-1)u + 1; scan a window past the truncation to absorb
    // the popcount wiggle and close with that envelope.
    long d = trunc_degree();
    long best = LONG_MAX;
    for (long u = d + 1; u <= d + 65; ++u) best = std::min(best, coeff_floor(u));
    long envelope = floor_offset_ + (floor_slope_ - 1) * (d + 66) + 1;
    return std::min(best, envelope);
}

PadicSeries PadicSeries::operator+(const PadicSeries& o) const {
    size_t n = std::min(c_.size(), o.c_.size());
    std::vector<PadicNumber> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = c_[i] + o.c_[i];
    if (!has_floor_ || !o.has_floor_) return without_floor(std::move(out));
    return PadicSeries(std::move(out), std::min(floor_offset_, o.floor_offset_),
                       std::min(floor_slope_, o.floor_slope_));
}

PadicSeries PadicSeries::operator-(const PadicSeries& o) const {
    size_t n = std::min(c_.size(), o.c_.size());
    std::vector<PadicNumber> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = c_[i] - o.c_[i];
    if (!has_floor_ || !o.has_floor_) return without_floor(std::move(out));
    return PadicSeries(std::move(out), std::min(floor_offset_, o.floor_offset_),
                       std::min(floor_slope_, o.floor_slope_));
}

PadicSeries PadicSeries::operator*(const PadicSeries& o) const {
    size_t n = std::min(c_.size(), o.c_.size());
    long prec = LONG_MAX;
    for (size_t i = 0; i < n; ++i)
        prec = std::min({prec, c_[i].precision(), o.c_[i].precision()});
    std::vector<PadicNumber> out(n, PadicNumber::zero(prec));
    for (size_t i = 0; i < n; ++i) {
        if (c_[i].known_zero()) continue;
        for (size_t j = 0; i + j < n; ++j) out[i + j] += c_[i] * o.c_[j];
    }
    if (!has_floor_ || !o.has_floor_) return without_floor(std::move(out));
    // v2(u!) + v2((w-u)!) <= v2(w!), so offsets add and the slope is the
    // smaller of the two.
    return PadicSeries(std::move(out), floor_offset_ + o.floor_offset_,
                       std::min(floor_slope_, o.floor_slope_));
}

PadicSeries PadicSeries::mul_integer(const mpz_class& c) const {
    if (c == 0) throw DomainError("PadicSeries::mul_integer: zero scale");
    std::vector<PadicNumber> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i].mul_integer(c);
    if (!has_floor_) return without_floor(std::move(out));
    return PadicSeries(std::move(out), floor_offset_ + valuation2(c), floor_slope_);
}

PadicSeries PadicSeries::div_factorial(unsigned long n) const {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    long v = factorial_valuation2(n);
    mpz_class odd = f >> v;
    std::vector<PadicNumber> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        PadicNumber x = c_[i];
        if (odd != 1)
            x = x * PadicNumber::from_integer(odd, x.precision()).invert_unit();
        out[i] = x.div_pow2(v);
    }
    if (!has_floor_) return without_floor(std::move(out));
    return PadicSeries(std::move(out), floor_offset_ - v, floor_slope_);
}

PadicNumber PadicSeries::eval(const mpz_class& x) const {
    long tb = tail_bound();
    if (tb < 1) throw PrecisionError("PadicSeries::eval: tail bound below one bit");
    PadicNumber acc = c_.back();
    for (size_t i = c_.size() - 1; i-- > 0;) acc = acc.mul_integer(x) + c_[i];
    return acc.truncate(std::min(acc.precision(), tb));
}

namespace {

struct BottomData {
    long content;       // minimal certified coefficient valuation
    long vertex_index;  // rightmost index attaining it
};

// Locate and certify the lowest vertex: exact heights give the minimum,
// censored coefficients must provably sit on or above it (strictly above to
// the right of the vertex), and the tail floor must clear it.
BottomData certify_bottom(const PadicSeries& f) {
    long d = f.trunc_degree();
    long content = LONG_MAX;
    long vertex = -1;
    for (long u = 0; u <= d; ++u) {
        ValBound v = f[u].valuation();
        if (!v.is_lower_bound && v.value < content) content = v.value;
    }
    if (content == LONG_MAX)
        throw DomainError("series: every coefficient is zero at stored precision");
    for (long u = 0; u <= d; ++u) {
        ValBound v = f[u].valuation();
        if (!v.is_lower_bound && v.value == content) vertex = u;
    }
    for (long u = 0; u <= d; ++u) {
        ValBound v = f[u].valuation();
        if (!v.is_lower_bound) continue;
        long need = (u > vertex) ? content + 1 : content;
        if (std::max(v.value, f.coeff_floor(u)) < need)
            throw PrecisionError("series: cannot certify the lowest vertex at index " +
                                 std::to_string(u));
    }
    if (f.tail_bound() < content + 1)
        throw PrecisionError("series: tail bound cannot certify the lowest vertex");
    return {content, vertex};
}

}  // namespace

NewtonPolygon PadicSeries::certified_polygon() const {
    certify_bottom(*this);
    std::vector<PolygonPoint> pts;
    for (long u = 0; u <= trunc_degree(); ++u) pts.push_back({u, c_[u].height()});
    return NewtonPolygon::hull(std::move(pts));
}

// ---------------------------------------------------------------------------
// Uniform-precision integer polynomials (internal)
// ---------------------------------------------------------------------------

namespace {

// Dense polynomial with coefficients mod 2^prec, ascending order.
struct ZPoly {
    std::vector<mpz_class> c;
    long prec = 1;

    long deg() const { return static_cast<long>(c.size()) - 1; }
    void normalize() {
        for (auto& x : c) x = reduce2(x, prec);
        while (c.size() > 1 && c.back() == 0) c.pop_back();
        if (c.empty()) c.assign(1, 0);
    }
};

ZPoly zp_mul(const ZPoly& a, const ZPoly& b, long prec) {
    ZPoly r;
    r.prec = prec;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.normalize();
    return r;
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b, long prec) {
    ZPoly r;
    r.prec = prec;
    r.c.assign(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.normalize();
    return r;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b, long prec) {
    ZPoly r;
    r.prec = prec;
    r.c.assign(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.normalize();
    return r;
}

// Division with remainder by a monic divisor; exact in (Z/2^prec)[x].
void zp_divmod(const ZPoly& a, const ZPoly& m, ZPoly& q, ZPoly& r, long prec) {
    r = a;
    r.prec = prec;
    r.normalize();
    q.prec = prec;
    long dm = m.deg();
    if (r.deg() < dm) {
        q.c.assign(1, 0);
        return;
    }
    q.c.assign(r.deg() - dm + 1, 0);
    for (long i = r.deg(); i >= dm; --i) {
        mpz_class coef = reduce2(r.c[i], prec);
        if (coef != 0) {
            q.c[i - dm] = coef;
            for (long j = 0; j < dm; ++j) r.c[i - dm + j] -= coef * m.c[j];
        }
        r.c[i] = 0;
    }
    r.c.resize(std::max<long>(dm, 1));
    q.normalize();
    r.normalize();
}

ZPoly zp_mod(const ZPoly& a, const ZPoly& m, long prec) {
    ZPoly q, r;
    zp_divmod(a, m, q, r, prec);
    return r;
}

bool zp_is_zero(const ZPoly& a, long prec) {
    for (const auto& x : a.c)
        if (reduce2(x, prec) != 0) return false;
    return true;
}

// --- F2[x] helpers for the Hensel seeds ---

using F2Poly = std::vector<uint8_t>;

void f2_trim(F2Poly& f) {
    while (f.size() > 1 && f.back() == 0) f.pop_back();
}

F2Poly f2_of(const ZPoly& p) {
    F2Poly f(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) f[i] = mpz_odd_p(p.c[i].get_mpz_t()) ? 1 : 0;
    f2_trim(f);
    return f;
}

long f2_deg(const F2Poly& f) {
    for (size_t i = f.size(); i-- > 0;)
        if (f[i]) return static_cast<long>(i);
    return -1;
}

int f2_eval(const F2Poly& f, int x) {
    if (x == 0) return f[0];
    int v = 0;
    for (uint8_t b : f) v ^= b;
    return v;
}

F2Poly f2_add(const F2Poly& a, const F2Poly& b) {
    F2Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] ^= a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] ^= b[i];
    f2_trim(r);
    return r;
}

F2Poly f2_mul(const F2Poly& a, const F2Poly& b) {
    F2Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (size_t j = 0; j < b.size(); ++j) r[i + j] ^= b[j];
    f2_trim(r);
    return r;
}

void f2_divmod(const F2Poly& a, const F2Poly& b, F2Poly& q, F2Poly& r) {
    r = a;
    long db = f2_deg(b);
    long da = f2_deg(r);
    if (da < db) {
        q = {0};
        f2_trim(r);
        return;
    }
    q.assign(da - db + 1, 0);
    for (long i = da; i >= db; --i) {
        if (r[i]) {
            q[i - db] = 1;
            for (long j = 0; j <= db; ++j) r[i - db + j] ^= b[j];
        }
    }
    f2_trim(r);
    f2_trim(q);
}

// s*a + t*b = 1 for coprime a, b; returns s reduced mod b (deg s < deg b).
void f2_bezout(const F2Poly& a, const F2Poly& b, F2Poly& s, F2Poly& t) {
    F2Poly r0 = a, r1 = b;
    F2Poly s0 = {1}, s1 = {0}, t0 = {0}, t1 = {1};
    while (f2_deg(r1) >= 0) {
        F2Poly q, r;
        f2_divmod(r0, r1, q, r);
        F2Poly ns = f2_add(s0, f2_mul(q, s1));
        F2Poly nt = f2_add(t0, f2_mul(q, t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        t0 = t1;
        s1 = ns;
        t1 = nt;
        if (f2_deg(r1) < 0) break;
    }
    if (f2_deg(r0) != 0) throw DomainError("f2_bezout: inputs not coprime");
    s = s0;
    t = t0;
    // reduce so that deg s < deg b (then deg t < deg a automatically)
    if (f2_deg(s) >= f2_deg(b) && f2_deg(b) > 0) {
        F2Poly q, r;
        f2_divmod(s, b, q, r);
        s = r;
        t = f2_add(t, f2_mul(q, a));
    }
}

ZPoly zp_of_f2(const F2Poly& f, long prec) {
    ZPoly p;
    p.prec = prec;
    p.c.reserve(f.size());
    for (uint8_t v : f) p.c.push_back(v);
    p.normalize();
    return p;
}

// Hensel lift of the coprime monic factorization pbar = gbar * hbar to
// p = g * h mod 2^prec, both factors monic of the seed degrees.
void hensel_lift_pair(const ZPoly& p, const F2Poly& gbar, const F2Poly& hbar, ZPoly& g,
                      ZPoly& h) {
    long prec = p.prec;
    F2Poly sbar, tbar;
    f2_bezout(gbar, hbar, sbar, tbar);  // sbar*gbar + tbar*hbar = 1, deg sbar < deg hbar
    g = zp_of_f2(gbar, prec);
    h = zp_of_f2(hbar, prec);
    ZPoly s = zp_of_f2(sbar, prec);
    ZPoly t = zp_of_f2(tbar, prec);
    long k = 1;
    while (k < prec) {
        long k2 = std::min(2 * k, prec);
        ZPoly e = zp_sub(p, zp_mul(g, h, k2), k2);
        ZPoly q, r;
        zp_divmod(zp_mul(s, e, k2), h, q, r, k2);
        ZPoly gn = zp_add(zp_add(g, zp_mul(t, e, k2), k2), zp_mul(q, g, k2), k2);
        ZPoly hn = zp_add(h, r, k2);
        ZPoly one;
        one.prec = k2;
        one.c = {mpz_class(1)};
        ZPoly b = zp_sub(zp_add(zp_mul(s, gn, k2), zp_mul(t, hn, k2), k2), one, k2);
        ZPoly c2, d2;
        zp_divmod(zp_mul(s, b, k2), hn, c2, d2, k2);
        s = zp_sub(s, d2, k2);
        t = zp_sub(zp_sub(t, zp_mul(t, b, k2), k2), zp_mul(c2, gn, k2), k2);
        g = gn;
        h = hn;
        k = k2;
    }
    g.prec = prec;
    g.normalize();
    // exact complement, with a divisibility sanity check
    ZPoly q, r;
    zp_divmod(p, g, q, r, prec);
    if (!zp_is_zero(r, prec))
        throw PrecisionError("hensel_lift_pair: factorization failed to lift");
    h = q;
}

}  // namespace

// ---------------------------------------------------------------------------
// Newton slope factorization (Weierstrass preparation at the lowest vertex)
// ---------------------------------------------------------------------------

SlopeFactorization slope_factorize(const PadicSeries& f) {
    BottomData bottom = certify_bottom(f);
    long mu = bottom.content;
    long d = bottom.vertex_index;
    long D = f.trunc_degree();
    const PadicNumber& alpha = f[d];

    PadicNumber w = alpha.div_pow2(mu).invert_unit();
    auto g_coeff = [&](long u) { return (f[u] * w).div_pow2(mu); };

    if (d == 0) {
        std::vector<PadicNumber> unit;
        unit.reserve(D + 1);
        for (long u = 0; u <= D; ++u) unit.push_back(g_coeff(u));
        long prec0 = unit[0].precision();
        PadicSeries us = f.has_floor()
                             ? PadicSeries(std::move(unit), f.floor_offset() - mu,
                                           f.floor_slope())
                             : PadicSeries::without_floor(std::move(unit));
        return {alpha, Polynomial({PadicNumber::one(prec0)}), std::move(us)};
    }

    // Truncation degree: balance the arithmetic precision of the kept
    // coefficients against the analytic floor certifying the dropped tail.
    long best_T = -1, best_M = -1;
    long run_min = LONG_MAX;
    for (long T = 0; T <= D; ++T) {
        run_min = std::min(run_min, f[T].precision());
        if (T < d + 1) continue;
        long m = std::min(run_min, f.coeff_floor(T + 1)) - mu;
        if (m > best_M) {
            best_M = m;
            best_T = T;
        }
    }
    if (best_T < d + 1 || best_M < 8)
        throw PrecisionError("slope_factorize: insufficient precision for the vertex");
    long T = best_T;
    long M = best_M;

    ZPoly g;
    g.prec = M;
    g.c.resize(T + 1);
    for (long u = 0; u <= T; ++u) g.c[u] = reduce2(g_coeff(u).residue(), M);
    if (reduce2(g.c[d] - 1, M) != 0)
        throw PrecisionError("slope_factorize: normalized vertex coefficient not 1");

    // Hensel--Newton on the square system P*U = g with P monic of degree d
    // and deg U <= T - d; seed (g mod 2, 1).  The correction solve works in
    // the quotient ring (Z/2^k)[x]/(P), where U is invertible.
    ZPoly P;
    P.prec = M;
    P.c.assign(g.c.begin(), g.c.begin() + d + 1);
    P.c[d] = 1;
    ZPoly U;
    U.prec = M;
    U.c = {mpz_class(1)};
    ZPoly Uinv = U;

    long k = 1;
    while (k < M) {
        long k2 = std::min(2 * k, M);
        ZPoly e = zp_sub(g, zp_mul(P, U, k2), k2);
        ZPoly umod = zp_mod(U, P, k2);
        ZPoly two;
        two.prec = k2;
        two.c = {mpz_class(2)};
        Uinv = zp_mod(zp_mul(Uinv, zp_sub(two, zp_mul(umod, Uinv, k2), k2), k2), P, k2);
        // delta_P = (e * U^{-1}) mod P;  delta_U = (e - delta_P * U) / P exactly
        ZPoly dP = zp_mod(zp_mul(zp_mod(e, P, k2), Uinv, k2), P, k2);
        ZPoly a = zp_sub(e, zp_mul(dP, U, k2), k2);
        ZPoly dU, rem;
        zp_divmod(a, P, dU, rem, k2);
        if (!zp_is_zero(rem, k2))
            throw PrecisionError("slope_factorize: correction failed to divide");
        P = zp_add(P, dP, k2);
        U = zp_add(U, dU, k2);
        P.prec = M;
        U.prec = M;
        if (U.deg() > T - d)
            throw PrecisionError("slope_factorize: unit factor degree overflow");
        k = k2;
    }

    if (!zp_is_zero(zp_sub(g, zp_mul(P, U, M), M), M))
        throw PrecisionError("slope_factorize: reconstruction check failed");

    std::vector<PadicNumber> pc;
    pc.reserve(d + 1);
    for (long i = 0; i <= d; ++i)
        pc.push_back(PadicNumber::from_integer(
            i < static_cast<long>(P.c.size()) ? P.c[i] : mpz_class(0), M));
    std::vector<PadicNumber> uc(T + 1, PadicNumber::zero(M));
    for (long i = 0; i < static_cast<long>(U.c.size()) && i <= T; ++i)
        uc[i] = PadicNumber::from_integer(U.c[i], M);
    return {alpha, Polynomial(std::move(pc)), PadicSeries::without_floor(std::move(uc))};
}

// ---------------------------------------------------------------------------
// Z_2 factor descent (shift-and-scale with Hensel splitting)
// ---------------------------------------------------------------------------

namespace {

struct DescentOut {
    std::vector<Z2Root> roots;
    std::vector<MinTermDescriptor> min_terms;
};

// Multiplicity of `bit` as a root of f over F2, and the cofactor after
// dividing the corresponding linear power out.
void f2_root_split(const F2Poly& f, int bit, long& mult, F2Poly& cofactor) {
    F2Poly cur = f;
    F2Poly lin = bit ? F2Poly{1, 1} : F2Poly{0, 1};
    mult = 0;
    while (f2_deg(cur) >= 1 && f2_eval(cur, bit) == 0) {
        F2Poly q, r;
        f2_divmod(cur, lin, q, r);
        cur = q;
        ++mult;
    }
    cofactor = cur;
}

// Single-segment polygon from (0, delta) to (d, 0) with delta/d fractional:
// every root has valuation delta/d, so v2(q(k)) = min(delta, d*v2(k)).
bool fractional_isoclinic(const ZPoly& q, long& delta) {
    long d = q.deg();
    long v0 = val2_or(q.c[0], q.prec);
    if (v0 >= q.prec) return false;
    if (v0 % d == 0) return false;
    for (long i = 1; i < d; ++i) {
        long vi = val2_or(q.c[i], q.prec);
        if (vi * d < v0 * (d - i)) return false;
    }
    delta = v0;
    return true;
}

void descend(ZPoly q, long scale, mpz_class center, DescentOut& out, int depth) {
    if (depth > 512) throw PrecisionError("factor_z2: descent depth budget exceeded");
    for (;;) {
        q.normalize();
        long d = q.deg();
        long M = q.prec;
        if (d <= 0) return;
        if (d == 1) {
            mpz_class r = reduce2(-q.c[0], M);
            mpz_class root = center + (r << static_cast<unsigned long>(scale));
            out.roots.push_back({PadicNumber::from_integer(root, scale + M), 1});
            return;
        }

        F2Poly fbar = f2_of(q);
        long mult0 = 0, mult1 = 0;
        F2Poly cof0, rest;
        f2_root_split(fbar, 0, mult0, cof0);
        f2_root_split(cof0, 1, mult1, rest);
        long rest_deg = f2_deg(rest);

        int parts = (mult0 > 0 ? 1 : 0) + (mult1 > 0 ? 1 : 0) + (rest_deg > 0 ? 1 : 0);
        if (parts >= 2) {
            F2Poly part;
            if (mult0 > 0) {
                part.assign(mult0 + 1, 0);
                part[mult0] = 1;
            } else {
                part = {1};
                for (long i = 0; i < mult1; ++i) part = f2_mul(part, F2Poly{1, 1});
            }
            F2Poly cobar, junk;
            f2_divmod(fbar, part, cobar, junk);
            ZPoly a, b;
            hensel_lift_pair(q, part, cobar, a, b);
            descend(std::move(a), scale, center, out, depth + 1);
            descend(std::move(b), scale, center, out, depth + 1);
            return;
        }

        if (rest_deg > 0) {
            // no root mod 2: v2(q(m)) = 0 for every m, cap = d * scale.
            // The descriptor constant is the exact integer center, stored at
            // the node's full depth so the min always resolves.
            out.min_terms.push_back(
                {d * scale, static_cast<int>(d), PadicNumber::from_integer(center, scale + M)});
            return;
        }

        int digit = (mult0 == d) ? 0 : 1;
        ZPoly shifted = q;
        if (digit == 1) {
            for (long i = 0; i < d; ++i)
                for (long j = d - 1; j >= i; --j) shifted.c[j] += shifted.c[j + 1];
            shifted.normalize();
        }
        mpz_class center_next = center;
        if (digit == 1) center_next += mpz_class(1) << static_cast<unsigned long>(scale);

        bool all_zero = true;
        for (long i = 0; i < d; ++i)
            if (reduce2(shifted.c[i], M) != 0) {
                all_zero = false;
                break;
            }
        if (all_zero) {
            // the factor is x^d to full working precision: one cluster root
            out.roots.push_back(
                {PadicNumber::from_integer(center_next, std::max<long>(1, scale + M / d)),
                 static_cast<int>(d)});
            return;
        }

        bool divisible = true;
        for (long i = 0; i < d && divisible; ++i) {
            long need = std::min(M, d - i);
            if (reduce2(shifted.c[i], need) != 0) divisible = false;
        }
        if (!divisible) {
            long delta = 0;
            if (!fractional_isoclinic(shifted, delta))
                throw PrecisionError(
                    "factor_z2: inseparable factor with mixed slopes at working precision");
            out.min_terms.push_back({d * scale + delta, static_cast<int>(d),
                                     PadicNumber::from_integer(center_next, scale + M)});
            return;
        }
        if (M - d < 4)
            throw PrecisionError("factor_z2: precision budget exhausted in descent");
        ZPoly next;
        next.prec = M - d;
        next.c.resize(d + 1);
        for (long i = 0; i <= d; ++i) {
            mpz_class t = shifted.c[i];
            if (i < d) t >>= static_cast<unsigned long>(d - i);
            next.c[i] = reduce2(t, M - d);
        }
        q = std::move(next);
        center = center_next;
        scale += 1;
    }
}

}  // namespace

Z2Factorization factor_z2(const Polynomial& p) {
    if (p.degree() < 0) throw DomainError("factor_z2: empty polynomial");
    if (!p.is_monic()) throw DomainError("factor_z2: polynomial must be monic");
    long M = LONG_MAX;
    for (const auto& c : p.coeffs()) M = std::min(M, c.precision());
    ZPoly q;
    q.prec = M;
    q.c.reserve(p.degree() + 1);
    for (const auto& c : p.coeffs()) q.c.push_back(reduce2(c.residue(), M));
    DescentOut out;
    descend(std::move(q), 0, 0, out, 0);
    std::sort(out.roots.begin(), out.roots.end(), [](const Z2Root& a, const Z2Root& b) {
        return a.root.residue() < b.root.residue();
    });
    std::sort(out.min_terms.begin(), out.min_terms.end(),
              [](const MinTermDescriptor& a, const MinTermDescriptor& b) {
                  if (a.u.residue() != b.u.residue()) return a.u.residue() < b.u.residue();
                  return a.cap < b.cap;
              });
    return {std::move(out.roots), std::move(out.min_terms)};
}

std::vector<Z2Root> z2_roots(const Polynomial& p) {
    return factor_z2(p).roots;
}

MinTermDescriptor factor_descriptor(const Polynomial& p) {
    if (p.degree() < 2)
        throw DomainError("factor_descriptor: degree must be at least 2");
    Z2Factorization f = factor_z2(p);
    if (!f.roots.empty() || f.min_terms.size() != 1)
        throw DomainError("factor_descriptor: polynomial has separable Z_2 roots");
    return f.min_terms.front();
}

}  // namespace padic2

#include "padic2/modular_oracle.hpp"

#include "padic2/errors.hpp"
#include "padic2/padic_number.hpp"

namespace padic2 {

QExpansion QExpansion::operator*(const QExpansion& o) const {
    long prec = std::min(precision(), o.precision());
    std::vector<mpz_class> out(prec + 1, 0);
    for (long i = 0; i <= prec; ++i) {
        if (a_[i] == 0) continue;
        for (long j = 0; i + j <= prec; ++j) out[i + j] += a_[i] * o.a_[j];
    }
    return QExpansion(weight_ + o.weight_, std::move(out));
}

QExpansion QExpansion::operator-(const QExpansion& o) const {
    if (weight_ != o.weight_) throw DomainError("QExpansion: weight mismatch in subtraction");
    long prec = std::min(precision(), o.precision());
    std::vector<mpz_class> out(prec + 1);
    for (long i = 0; i <= prec; ++i) out[i] = a_[i] - o.a_[i];
    return QExpansion(weight_, std::move(out));
}

QExpansion QExpansion::scaled(const mpz_class& c) const {
    std::vector<mpz_class> out(a_.size());
    for (size_t i = 0; i < a_.size(); ++i) out[i] = a_[i] * c;
    return QExpansion(weight_, std::move(out));
}

QExpansion QExpansion::divided(const mpz_class& c) const {
    std::vector<mpz_class> out(a_.size());
    for (size_t i = 0; i < a_.size(); ++i) {
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a_[i].get_mpz_t(), c.get_mpz_t());
        if (r != 0) throw IntegralityError("QExpansion::divided: inexact division");
        out[i] = q;
    }
    return QExpansion(weight_, std::move(out));
}

namespace {

// sigma_e(n) for n >= 1
mpz_class sigma(long n, long e) {
    mpz_class total = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        mpz_class de, ce;
        mpz_ui_pow_ui(de.get_mpz_t(), d, e);
        total += de;
        long co = n / d;
        if (co != d) {
            mpz_ui_pow_ui(ce.get_mpz_t(), co, e);
            total += ce;
        }
    }
    return total;
}

}  // namespace

QExpansion eisenstein(long weight, long prec) {
    if (prec < 1) throw DomainError("eisenstein: precision must be positive");
    std::vector<mpz_class> a(prec + 1);
    a[0] = 1;
    long e, scale;
    if (weight == 4) {
        e = 3;
        scale = 240;
    } else if (weight == 6) {
        e = 5;
        scale = -504;
    } else {
        throw DomainError("eisenstein: weight must be 4 or 6");
    }
    for (long n = 1; n <= prec; ++n) a[n] = scale * sigma(n, e);
    return QExpansion(weight, std::move(a));
}

QExpansion delta_form(long prec) {
    QExpansion e4 = eisenstein(4, prec);
    QExpansion e6 = eisenstein(6, prec);
    return (e4 * e4 * e4 - e6 * e6).divided(1728);
}

long cusp_dim(long weight) {
    if (weight < 4 || weight % 2 != 0) throw DomainError("cusp_dim: even weight >= 4 required");
    long dm = weight / 12 + (weight % 12 == 2 ? 0 : 1);  // dim M_{2k}
    return dm - 1;
}

std::vector<QExpansion> miller_basis(long weight, long prec) {
    long dim = cusp_dim(weight);
    if (dim < 1) return {};
    if (prec < 2 * dim + 2) throw PrecisionError("miller_basis: insufficient q-precision");
    QExpansion e4 = eisenstein(4, prec);
    QExpansion e6 = eisenstein(6, prec);
    QExpansion dl = delta_form(prec);

    // g_i = Delta^i E6^delta E4^a with 12i + 6 delta + 4a = weight
    std::vector<QExpansion> g;
    for (long i = 1; i <= dim; ++i) {
        long rem = weight - 12 * i;
        long delta = (rem % 4 == 0) ? 0 : 1;
        long apow = (rem - 6 * delta) / 4;
        if (apow < 0 || (rem - 6 * delta) % 4 != 0)
            throw DomainError("miller_basis: no monomial for this weight");
        QExpansion f = dl;
        for (long j = 1; j < i; ++j) f = f * dl;
        if (delta) f = f * e6;
        for (long j = 0; j < apow; ++j) f = f * e4;
        g.push_back(f);
    }
    // echelonize: g_i starts at q^i with unit leading coefficient, so the
    // elimination stays integral
    for (long i = dim; i >= 1; --i) {
        for (long j = 1; j < i; ++j) {
            const mpz_class& c = g[j - 1][i];
            if (c != 0) g[j - 1] = g[j - 1] - g[i - 1].scaled(c);
        }
    }
    for (long i = 1; i <= dim; ++i)
        if (g[i - 1][i] != 1) throw DomainError("miller_basis: echelon pivot is not 1");
    return g;
}

HeckeMatrix hecke_matrix(long weight, long p) {
    if (p != 2 && p != 3) throw DomainError("hecke_matrix: only p = 2, 3 supported");
    long dim = cusp_dim(weight);
    long prec = p * dim + 4;
    auto basis = miller_basis(weight, prec);
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), p, weight - 1);  // p^{2k-1}
    HeckeMatrix m(dim, std::vector<mpz_class>(dim));
    // a_j(T_p f) = a_{pj}(f) + p^{2k-1} a_{j/p}(f); column i holds T_p f_i
    for (long i = 1; i <= dim; ++i) {
        for (long j = 1; j <= dim; ++j) {
            mpz_class v = basis[i - 1][p * j];
            if (j % p == 0) v += pw * basis[i - 1][j / p];
            m[j - 1][i - 1] = v;
        }
    }
    return m;
}

namespace {

HeckeMatrix mat_mul(const HeckeMatrix& a, const HeckeMatrix& b) {
    size_t n = a.size();
    HeckeMatrix c(n, std::vector<mpz_class>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

mpz_class mat_trace(const HeckeMatrix& a) {
    mpz_class t = 0;
    for (size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

}  // namespace

mpz_class t2_power_trace(long weight, long n) {
    if (n < 0) throw DomainError("t2_power_trace: negative power");
    long dim = cusp_dim(weight);
    if (n == 0) return dim;
    HeckeMatrix m = t2_matrix(weight);
    HeckeMatrix acc = m;
    for (long i = 1; i < n; ++i) acc = mat_mul(acc, m);
    return mat_trace(acc);
}

std::vector<mpz_class> char_poly_reversed(long weight) {
    long dim = cusp_dim(weight);
    std::vector<mpz_class> out(dim + 1);
    out[0] = 1;
    if (dim == 0) return out;
    // Newton identities: with p_i = Tr(T2^i) and e_0 = 1,
    //     i * e_i = sum_{j=1}^{i} (-1)^{j-1} e_{i-j} p_j,
    // and the coefficient of X^i in det(1 - T2 X) is (-1)^i e_i.
    HeckeMatrix m = t2_matrix(weight);
    std::vector<mpz_class> p(dim + 1);
    HeckeMatrix acc = m;
    p[1] = mat_trace(m);
    for (long i = 2; i <= dim; ++i) {
        acc = mat_mul(acc, m);
        p[i] = mat_trace(acc);
    }
    std::vector<mpz_class> e(dim + 1);
    e[0] = 1;
    for (long i = 1; i <= dim; ++i) {
        mpz_class s = 0;
        for (long j = 1; j <= i; ++j) {
            if (j % 2 == 1)
                s += e[i - j] * p[j];
            else
                s -= e[i - j] * p[j];
        }
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t(), mpz_class(i).get_mpz_t());
        if (r != 0) throw IntegralityError("char_poly_reversed: Newton identity inexact");
        e[i] = q;
    }
    for (long i = 1; i <= dim; ++i) out[i] = (i % 2 == 0) ? e[i] : mpz_class(-e[i]);
    return out;
}

NewtonPolygon oracle_polygon(long weight, long truncate_at) {
    auto cp = char_poly_reversed(weight);
    std::vector<PolygonPoint> pts;
    for (long i = 0; i < static_cast<long>(cp.size()); ++i) {
        if (cp[i] == 0)
            pts.push_back({i, Valuation::infinity()});
        else
            pts.push_back({i, Valuation(valuation2(cp[i]))});
    }
    NewtonPolygon np = NewtonPolygon::hull(std::move(pts));
    if (truncate_at >= 0) np = np.truncate(truncate_at);
    return np;
}

}  // namespace padic2

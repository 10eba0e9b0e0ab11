#include "almostrep/matkit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ar::matkit {

namespace {

void require_square(const CMatrix& a, const char* who) {
    if (a.rows() != a.cols()) throw bad_input(std::string(who) + ": square matrix required");
}

void require_shape(bool ok) {
    if (!ok) throw bad_input("matrix shape mismatch");
}

} // namespace

void CMatrix::check_finite() const {
    for (const cplx& z : a_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw check_failure("matrix contains a non-finite entry");
}

CMatrix identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix mul(const CMatrix& a, const CMatrix& b) {
    require_shape(a.cols() == b.rows());
    CMatrix c(a.rows(), b.cols());
    const int n = a.rows(), k = a.cols(), m = b.cols();
    for (int i = 0; i < n; ++i) {
        cplx* crow = &c(i, 0);
        for (int l = 0; l < k; ++l) {
            const cplx ail = a(i, l);
            if (ail == cplx{}) continue;
            const cplx* brow = &b(l, 0);
            for (int j = 0; j < m; ++j) crow[j] += ail * brow[j];
        }
    }
    return c;
}

CMatrix add(const CMatrix& a, const CMatrix& b) {
    require_shape(a.rows() == b.rows() && a.cols() == b.cols());
    CMatrix c = a;
    for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] += b.data()[i];
    return c;
}

CMatrix sub(const CMatrix& a, const CMatrix& b) {
    require_shape(a.rows() == b.rows() && a.cols() == b.cols());
    CMatrix c = a;
    for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] -= b.data()[i];
    return c;
}

CMatrix scale(const CMatrix& a, cplx s) {
    CMatrix c = a;
    for (auto& z : c.data()) z *= s;
    return c;
}

CMatrix adjoint(const CMatrix& a) {
    CMatrix c(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(j, i) = std::conj(a(i, j));
    return c;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{}) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return c;
}

CMatrix dirsum(const CMatrix& a, const CMatrix& b) {
    CMatrix c(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
    return c;
}

cplx trace(const CMatrix& a) {
    require_square(a, "trace");
    cplx t = 0;
    for (int i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

double frob_norm(const CMatrix& a) {
    double s = 0;
    for (const cplx& z : a.data()) s += std::norm(z);
    return std::sqrt(s);
}

namespace {

double off_diag_mass(const CMatrix& a) {
    double s = 0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

} // namespace

EigenH eig_hermitian(const CMatrix& h_in) {
    require_square(h_in, "eig_hermitian");
    h_in.check_finite();
    const int n = h_in.rows();
    CMatrix a = h_in;
    CMatrix v = identity(n);
    const double scale_norm = std::max(frob_norm(a), 1e-300);

    for (int sweep = 0; sweep < 60; ++sweep) {
        if (off_diag_mass(a) <= 1e-12 * scale_norm) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const cplx b = a(p, q);
                const double ab = std::abs(b);
                if (ab <= 1e-300) continue;
                const cplx phase = b / ab;  // b = |b| e^{i phi}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = 0.5 * std::atan2(2.0 * ab, app - aqq);
                const double c = std::cos(theta), s = std::sin(theta);
                // columns: col_p' = c col_p + s conj(phase) col_q ; col_q' = -s phase col_p + c col_q
                for (int k = 0; k < n; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp + s * std::conj(phase) * akq;
                    a(k, q) = -s * phase * akp + c * akq;
                }
                // rows (left multiply by U*)
                for (int k = 0; k < n; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk + s * phase * aqk;
                    a(q, k) = -s * std::conj(phase) * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp + s * std::conj(phase) * vkq;
                    v(k, q) = -s * phase * vkp + c * vkq;
                }
            }
    }
    if (off_diag_mass(a) > 1e-9 * scale_norm)
        throw check_failure("eig_hermitian: Jacobi sweeps did not converge");

    EigenH out;
    out.values.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.values[static_cast<std::size_t>(i)] = a(i, i).real();
    // sort ascending, permuting the eigenvector columns alongside
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](int x, int y) { return out.values[static_cast<std::size_t>(x)] < out.values[static_cast<std::size_t>(y)]; });
    EigenH sorted;
    sorted.values.resize(static_cast<std::size_t>(n));
    sorted.vectors = CMatrix(n, n);
    for (int j = 0; j < n; ++j) {
        sorted.values[static_cast<std::size_t>(j)] = out.values[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
        for (int i = 0; i < n; ++i) sorted.vectors(i, j) = v(i, idx[static_cast<std::size_t>(j)]);
    }
    return sorted;
}

double op_norm(const CMatrix& a) {
    a.check_finite();
    if (a.rows() == 0 || a.cols() == 0) return 0.0;
    CMatrix b = mul(adjoint(a), a);  // Hermitian PSD
    const int n = b.rows();
    if (n <= 64) {
        EigenH e = eig_hermitian(b);
        return std::sqrt(std::max(0.0, e.values.back()));
    }
    // power iteration with a fixed deterministic start
    std::vector<cplx> x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        x[static_cast<std::size_t>(i)] = cplx(1.0 + 0.37 * ((i * 2654435761u) % 97), 0.11 * ((i * 40503u) % 89));
    auto matvec = [&](const std::vector<cplx>& in, std::vector<cplx>& out) {
        out.assign(static_cast<std::size_t>(n), cplx{});
        for (int i = 0; i < n; ++i) {
            cplx acc = 0;
            const cplx* row = &b(i, 0);
            for (int j = 0; j < n; ++j) acc += row[j] * in[static_cast<std::size_t>(j)];
            out[static_cast<std::size_t>(i)] = acc;
        }
    };
    double lambda = 0.0;
    std::vector<cplx> y;
    for (int it = 0; it < 500; ++it) {
        matvec(x, y);
        double nrm = 0;
        for (const cplx& z : y) nrm += std::norm(z);
        nrm = std::sqrt(nrm);
        if (nrm == 0) return 0.0;
        for (auto& z : y) z /= nrm;
        x.swap(y);
        double next = nrm;  // Rayleigh quotient of the normalized previous vector
        if (it > 3 && std::abs(next - lambda) <= 1e-10 * std::max(1.0, next)) {
            lambda = next;
            break;
        }
        lambda = next;
    }
    return std::sqrt(std::max(0.0, lambda));
}

cplx det(CMatrix a) {
    require_square(a, "det");
    a.check_finite();
    const int n = a.rows();
    cplx d = 1.0;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = std::abs(a(col, col));
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > best) {
                best = std::abs(a(r, col));
                piv = r;
            }
        if (best == 0.0) return 0.0;
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            d = -d;
        }
        d *= a(col, col);
        const cplx inv_piv = 1.0 / a(col, col);
        for (int r = col + 1; r < n; ++r) {
            const cplx f = a(r, col) * inv_piv;
            if (f == cplx{}) continue;
            for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
        }
    }
    return d;
}

EigenU eig_unitary(const CMatrix& u, const Tolerances& tol) {
    require_square(u, "eig_unitary");
    const int n = u.rows();
    if (op_norm(sub(mul(adjoint(u), u), identity(n))) > tol.unitary_tol)
        throw check_failure("eig_unitary: input is not unitary within tolerance");

    CMatrix ustar = adjoint(u);
    CMatrix h1 = scale(add(u, ustar), 0.5);
    CMatrix h2 = scale(sub(u, ustar), cplx(0, -0.5));
    EigenH e1 = eig_hermitian(h1);
    CMatrix v = e1.vectors;

    // within clusters of h1, diagonalize h2 to split conjugate pairs
    const double cluster_gap = 1e-8 * std::max(1.0, std::abs(e1.values.back()));
    int lo = 0;
    while (lo < n) {
        int hi = lo + 1;
        while (hi < n && e1.values[static_cast<std::size_t>(hi)] - e1.values[static_cast<std::size_t>(hi - 1)] < cluster_gap) ++hi;
        if (hi - lo > 1) {
            const int m = hi - lo;
            CMatrix vc(n, m);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < m; ++j) vc(i, j) = v(i, lo + j);
            CMatrix block = mul(adjoint(vc), mul(h2, vc));
            EigenH eb = eig_hermitian(block);
            CMatrix rotated = mul(vc, eb.vectors);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < m; ++j) v(i, lo + j) = rotated(i, j);
        }
        lo = hi;
    }

    EigenU out;
    out.vectors = v;
    out.values.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        // Rayleigh value v_j^* U v_j
        cplx lam = 0;
        for (int i = 0; i < n; ++i) {
            cplx uv = 0;
            for (int k = 0; k < n; ++k) uv += u(i, k) * v(k, j);
            lam += std::conj(v(i, j)) * uv;
        }
        out.values[static_cast<std::size_t>(j)] = lam / std::abs(lam);
    }
    return out;
}

cplx tr_log_unitary(const CMatrix& u, const Tolerances& tol) {
    require_square(u, "tr_log_unitary");
    const int n = u.rows();
    if (op_norm(sub(mul(adjoint(u), u), identity(n))) > tol.unitary_tol)
        throw check_failure("tr_log_unitary: input is not unitary within tolerance");

    CMatrix x = sub(u, identity(n));
    const double dist = op_norm(x);
    if (dist < 0.9) {
        // Mercator series: sum (-1)^{k+1} (U-I)^k / k, traced
        cplx acc = 0;
        CMatrix p = x;
        double psize = frob_norm(p);
        for (int k = 1; k <= 2000; ++k) {
            const cplx term = trace(p) * (k % 2 == 1 ? 1.0 : -1.0) / static_cast<double>(k);
            acc += term;
            psize = psize * dist;
            if (psize / (k + 1) < 1e-17 * std::max(1.0, std::abs(acc))) break;
            p = mul(p, x);
        }
        return acc;
    }

    EigenU e = eig_unitary(u, tol);
    cplx acc = 0;
    for (const cplx& lam : e.values) {
        if (std::abs(lam + 1.0) < tol.log_branch_gap)
            throw check_failure("tr_log_unitary: eigenvalue within the branch gap of -1");
        acc += std::log(lam);  // principal branch
    }
    return acc;
}

CMatrix herm_spectral_projection(const CMatrix& h, const Tolerances& tol, double defect_limit) {
    require_square(h, "herm_spectral_projection");
    h.check_finite();
    const int n = h.rows();
    if (op_norm(sub(h, adjoint(h))) > 1e-9)
        throw bad_input("herm_spectral_projection: input is not self-adjoint");
    CMatrix h2 = mul(h, h);
    const double defect = op_norm(sub(h2, h));
    if (!(defect < defect_limit))
        throw check_failure("herm_spectral_projection: ||h^2 - h|| = " + std::to_string(defect) +
                            " is not below " + std::to_string(defect_limit));
    // spectrum lies within dist (1 - sqrt(1-4e))/2 of {0,1}; its distance to
    // 1/2 is at least sqrt(1-4e)/2 when e < 1/4
    const double gap = 0.5 * std::sqrt(std::max(0.0, 1.0 - 4.0 * defect));
    if (gap < tol.spectral_gap)
        throw check_failure("herm_spectral_projection: spectral gap at 1/2 below tolerance");

    // cubic purification: p <- 3p^2 - 2p^3, fixed points {0,1}
    CMatrix p = h;
    CMatrix p2 = h2;
    for (int it = 0; it < 80; ++it) {
        CMatrix p3 = mul(p2, p);
        CMatrix next(n, n);
        for (std::size_t i = 0; i < next.data().size(); ++i)
            next.data()[i] = 3.0 * p2.data()[i] - 2.0 * p3.data()[i];
        // re-hermitize to chop roundoff drift
        next = scale(add(next, adjoint(next)), 0.5);
        p = std::move(next);
        p2 = mul(p, p);
        if (frob_norm(sub(p2, p)) < 1e-14 * std::max(1.0, frob_norm(p))) break;
    }
    if (op_norm(sub(p2, p)) > 1e-10)
        throw check_failure("herm_spectral_projection: purification did not converge");
    return p;
}

CMatrix polar_isometry(const CMatrix& w) {
    w.check_finite();
    if (w.rows() < w.cols()) throw bad_input("polar_isometry: rows >= cols required");
    CMatrix gram = mul(adjoint(w), w);
    EigenH e = eig_hermitian(gram);
    if (e.values.front() <= 1e-6)
        throw check_failure("polar_isometry: w*w is nearly singular");
    // (w*w)^{-1/2} via the eigendecomposition
    const int k = gram.rows();
    CMatrix d(k, k);
    for (int i = 0; i < k; ++i) d(i, i) = 1.0 / std::sqrt(e.values[static_cast<std::size_t>(i)]);
    CMatrix inv_sqrt = mul(e.vectors, mul(d, adjoint(e.vectors)));
    return mul(w, inv_sqrt);
}

} // namespace ar::matkit

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spectra/matrix.hpp"
#include "spectra/operators.hpp"

namespace spectra {

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& msg, int lo, int hi)
        : std::runtime_error(msg), block_lo(lo), block_hi(hi) {}
    int block_lo;
    int block_hi;
};

struct Spectrum {
    std::vector<double> eigenvalues;  // ascending with multiplicity
    std::optional<Matrix> eigenvectors;  // column k pairs with eigenvalues[k]; m-orthonormal
    double residual = 0.0;  // max_k |A v_k - lambda_k v_k|_2 / |A|_inf
};

struct ComplexSpectrum {
    std::vector<std::complex<double>> eigenvalues;  // sorted by (Re, Im)
    double residual = 0.0;  // Schur residual |A Z - Z T|_inf / |A|_inf
};

struct RayleighValue {
    std::complex<double> value;
};

namespace detail {

// Householder reduction to tridiagonal form; v holds the symmetric input and
// becomes the accumulated orthogonal transform. Bowdler-Martin-Reinsch-
// Wilkinson tred2 lineage.
inline void tred2(Matrix& v, std::vector<double>& d, std::vector<double>& e) {
    int n = v.rows();
    d.assign(static_cast<size_t>(n), 0.0);
    e.assign(static_cast<size_t>(n), 0.0);
    for (int j = 0; j < n; ++j) d[static_cast<size_t>(j)] = v(n - 1, j);

    for (int i = n - 1; i > 0; --i) {
        double scale = 0.0, h = 0.0;
        for (int k = 0; k < i; ++k) scale += std::abs(d[static_cast<size_t>(k)]);
        if (scale == 0.0) {
            e[static_cast<size_t>(i)] = d[static_cast<size_t>(i - 1)];
            for (int j = 0; j < i; ++j) {
                d[static_cast<size_t>(j)] = v(i - 1, j);
                v(i, j) = 0.0;
                v(j, i) = 0.0;
            }
        } else {
            for (int k = 0; k < i; ++k) {
                d[static_cast<size_t>(k)] /= scale;
                h += d[static_cast<size_t>(k)] * d[static_cast<size_t>(k)];
            }
            double f = d[static_cast<size_t>(i - 1)];
            double g = std::sqrt(h);
            if (f > 0) g = -g;
            e[static_cast<size_t>(i)] = scale * g;
            h -= f * g;
            d[static_cast<size_t>(i - 1)] = f - g;
            for (int j = 0; j < i; ++j) e[static_cast<size_t>(j)] = 0.0;

            for (int j = 0; j < i; ++j) {
                f = d[static_cast<size_t>(j)];
                v(j, i) = f;
                g = e[static_cast<size_t>(j)] + v(j, j) * f;
                for (int k = j + 1; k <= i - 1; ++k) {
                    g += v(k, j) * d[static_cast<size_t>(k)];
                    e[static_cast<size_t>(k)] += v(k, j) * f;
                }
                e[static_cast<size_t>(j)] = g;
            }
            f = 0.0;
            for (int j = 0; j < i; ++j) {
                e[static_cast<size_t>(j)] /= h;
                f += e[static_cast<size_t>(j)] * d[static_cast<size_t>(j)];
            }
            double hh = f / (h + h);
            for (int j = 0; j < i; ++j) e[static_cast<size_t>(j)] -= hh * d[static_cast<size_t>(j)];
            for (int j = 0; j < i; ++j) {
                f = d[static_cast<size_t>(j)];
                g = e[static_cast<size_t>(j)];
                for (int k = j; k <= i - 1; ++k)
                    v(k, j) -= (f * e[static_cast<size_t>(k)] + g * d[static_cast<size_t>(k)]);
                d[static_cast<size_t>(j)] = v(i - 1, j);
                v(i, j) = 0.0;
            }
        }
        d[static_cast<size_t>(i)] = h;
    }

    for (int i = 0; i < n - 1; ++i) {
        v(n - 1, i) = v(i, i);
        v(i, i) = 1.0;
        double h = d[static_cast<size_t>(i + 1)];
        if (h != 0.0) {
            for (int k = 0; k <= i; ++k) d[static_cast<size_t>(k)] = v(k, i + 1) / h;
            for (int j = 0; j <= i; ++j) {
                double g = 0.0;
                for (int k = 0; k <= i; ++k) g += v(k, i + 1) * v(k, j);
                for (int k = 0; k <= i; ++k) v(k, j) -= g * d[static_cast<size_t>(k)];
            }
        }
        for (int k = 0; k <= i; ++k) v(k, i + 1) = 0.0;
    }
    for (int j = 0; j < n; ++j) {
        d[static_cast<size_t>(j)] = v(n - 1, j);
        v(n - 1, j) = 0.0;
    }
    v(n - 1, n - 1) = 1.0;
    e[0] = 0.0;
}

// Implicit-shift QL on the tridiagonal (d, e), accumulating rotations into v's
// columns; eigenvalues land in d ascending. tql2 lineage.
inline void tql2(Matrix& v, std::vector<double>& d, std::vector<double>& e) {
    int n = v.rows();
    for (int i = 1; i < n; ++i) e[static_cast<size_t>(i - 1)] = e[static_cast<size_t>(i)];
    e[static_cast<size_t>(n - 1)] = 0.0;

    double f = 0.0, tst1 = 0.0;
    const double eps = std::ldexp(1.0, -52);
    for (int l = 0; l < n; ++l) {
        tst1 = std::max(tst1, std::abs(d[static_cast<size_t>(l)]) + std::abs(e[static_cast<size_t>(l)]));
        int m = l;
        while (m < n) {
            if (std::abs(e[static_cast<size_t>(m)]) <= eps * tst1) break;
            ++m;
        }
        if (m > l) {
            int iter = 0;
            do {
                if (++iter > 60)
                    throw ConvergenceError("tridiagonal QL failed to converge at index " +
                                               std::to_string(l),
                                           l, m);
                double g = d[static_cast<size_t>(l)];
                double p = (d[static_cast<size_t>(l + 1)] - g) / (2.0 * e[static_cast<size_t>(l)]);
                double r = std::hypot(p, 1.0);
                if (p < 0) r = -r;
                d[static_cast<size_t>(l)] = e[static_cast<size_t>(l)] / (p + r);
                d[static_cast<size_t>(l + 1)] = e[static_cast<size_t>(l)] * (p + r);
                double dl1 = d[static_cast<size_t>(l + 1)];
                double h = g - d[static_cast<size_t>(l)];
                for (int i = l + 2; i < n; ++i) d[static_cast<size_t>(i)] -= h;
                f += h;

                p = d[static_cast<size_t>(m)];
                double c = 1.0, c2 = c, c3 = c;
                double el1 = e[static_cast<size_t>(l + 1)];
                double s = 0.0, s2 = 0.0;
                for (int i = m - 1; i >= l; --i) {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[static_cast<size_t>(i)];
                    h = c * p;
                    r = std::hypot(p, e[static_cast<size_t>(i)]);
                    e[static_cast<size_t>(i + 1)] = s * r;
                    s = e[static_cast<size_t>(i)] / r;
                    c = p / r;
                    p = c * d[static_cast<size_t>(i)] - s * g;
                    d[static_cast<size_t>(i + 1)] = h + s * (c * g + s * d[static_cast<size_t>(i)]);
                    for (int k = 0; k < n; ++k) {
                        h = v(k, i + 1);
                        v(k, i + 1) = s * v(k, i) + c * h;
                        v(k, i) = c * v(k, i) - s * h;
                    }
                }
                p = -s * s2 * c3 * el1 * e[static_cast<size_t>(l)] / dl1;
                e[static_cast<size_t>(l)] = s * p;
                d[static_cast<size_t>(l)] = c * p;
            } while (std::abs(e[static_cast<size_t>(l)]) > eps * tst1);
        }
        d[static_cast<size_t>(l)] += f;
        e[static_cast<size_t>(l)] = 0.0;
    }

    for (int i = 0; i < n - 1; ++i) {
        int k = i;
        double p = d[static_cast<size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            if (d[static_cast<size_t>(j)] < p) {
                k = j;
                p = d[static_cast<size_t>(j)];
            }
        if (k != i) {
            d[static_cast<size_t>(k)] = d[static_cast<size_t>(i)];
            d[static_cast<size_t>(i)] = p;
            for (int j = 0; j < n; ++j) std::swap(v(j, i), v(j, k));
        }
    }
}

// Iterative radix-2 diagonal balancing, D^{-1} A D; returns the scale vector
// D. No permutation stage: the QR code below handles the full matrix.
inline std::vector<double> balance_in_place(Matrix& a) {
    int n = a.rows();
    std::vector<double> scale(static_cast<size_t>(n), 1.0);
    const double radix = 2.0, sqrdx = radix * radix;
    bool done = false;
    while (!done) {
        done = true;
        for (int i = 0; i < n; ++i) {
            double r = 0.0, c = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != i) {
                    c += std::abs(a(j, i));
                    r += std::abs(a(i, j));
                }
            if (c != 0.0 && r != 0.0) {
                double g = r / radix, f = 1.0, s = c + r;
                while (c < g) {
                    f *= radix;
                    c *= sqrdx;
                }
                g = r * radix;
                while (c > g) {
                    f /= radix;
                    c /= sqrdx;
                }
                if ((c + r) / f < 0.95 * s) {
                    done = false;
                    g = 1.0 / f;
                    scale[static_cast<size_t>(i)] *= f;
                    for (int j = 0; j < n; ++j) a(i, j) *= g;
                    for (int j = 0; j < n; ++j) a(j, i) *= f;
                }
            }
        }
    }
    return scale;
}

// Householder reduction to upper Hessenberg form with the orthogonal
// transform accumulated into z. orthes lineage.
inline void hessenberg_in_place(Matrix& h, Matrix& z) {
    int n = h.rows();
    int low = 0, high = n - 1;
    std::vector<double> ort(static_cast<size_t>(n), 0.0);

    for (int m = low + 1; m <= high - 1; ++m) {
        double scale = 0.0;
        for (int i = m; i <= high; ++i) scale += std::abs(h(i, m - 1));
        if (scale != 0.0) {
            double hsum = 0.0;
            for (int i = high; i >= m; --i) {
                ort[static_cast<size_t>(i)] = h(i, m - 1) / scale;
                hsum += ort[static_cast<size_t>(i)] * ort[static_cast<size_t>(i)];
            }
            double g = std::sqrt(hsum);
            if (ort[static_cast<size_t>(m)] > 0) g = -g;
            hsum -= ort[static_cast<size_t>(m)] * g;
            ort[static_cast<size_t>(m)] -= g;

            for (int j = m; j < n; ++j) {
                double f = 0.0;
                for (int i = high; i >= m; --i) f += ort[static_cast<size_t>(i)] * h(i, j);
                f /= hsum;
                for (int i = m; i <= high; ++i) h(i, j) -= f * ort[static_cast<size_t>(i)];
            }
            for (int i = 0; i <= high; ++i) {
                double f = 0.0;
                for (int j = high; j >= m; --j) f += ort[static_cast<size_t>(j)] * h(i, j);
                f /= hsum;
                for (int j = m; j <= high; ++j) h(i, j) -= f * ort[static_cast<size_t>(j)];
            }
            ort[static_cast<size_t>(m)] *= scale;
            h(m, m - 1) = scale * g;
        }
    }

    z = Matrix::identity(n);
    for (int m = high - 1; m >= low + 1; --m) {
        if (h(m, m - 1) != 0.0) {
            for (int i = m + 1; i <= high; ++i) ort[static_cast<size_t>(i)] = h(i, m - 1);
            for (int j = m; j <= high; ++j) {
                double g = 0.0;
                for (int i = m; i <= high; ++i) g += ort[static_cast<size_t>(i)] * z(i, j);
                g = (g / ort[static_cast<size_t>(m)]) / h(m, m - 1);
                for (int i = m; i <= high; ++i) z(i, j) += g * ort[static_cast<size_t>(i)];
            }
        }
    }

    // Householder leftovers below the subdiagonal are rounding noise of the
    // exact zeros; clear them so the final quasi-triangular factor is clean.
    for (int i = 2; i < n; ++i)
        for (int j = 0; j <= i - 2; ++j) h(i, j) = 0.0;
}

// Francis double-shift QR on a Hessenberg matrix, accumulating into z. On
// return h is the real Schur factor; eigenvalues are in (re, im). hqr2
// lineage, without the eigenvector back-substitution.
inline void francis_qr(Matrix& h, Matrix& z, std::vector<double>& re, std::vector<double>& im,
                       int sweep_cap) {
    int nn = h.rows();
    re.assign(static_cast<size_t>(nn), 0.0);
    im.assign(static_cast<size_t>(nn), 0.0);
    int n = nn - 1;
    const int low = 0, high = nn - 1;
    const double eps = std::ldexp(1.0, -52);
    double exshift = 0.0;
    double p = 0, q = 0, r = 0, s = 0, z2 = 0, w, x, y;

    double norm = 0.0;
    for (int i = 0; i < nn; ++i)
        for (int j = std::max(i - 1, 0); j < nn; ++j) norm += std::abs(h(i, j));

    int iter = 0;
    int sweeps = 0;
    while (n >= low) {
        // Look for a single small subdiagonal element.
        int l = n;
        while (l > low) {
            s = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
            if (s == 0.0) s = norm;
            if (std::abs(h(l, l - 1)) < eps * s) break;
            --l;
        }

        if (l == n) {
            // One root found.
            h(n, n) += exshift;
            re[static_cast<size_t>(n)] = h(n, n);
            im[static_cast<size_t>(n)] = 0.0;
            if (n > low) h(n, n - 1) = 0.0;
            --n;
            iter = 0;
        } else if (l == n - 1) {
            // Two roots found.
            w = h(n, n - 1) * h(n - 1, n);
            p = (h(n - 1, n - 1) - h(n, n)) / 2.0;
            q = p * p + w;
            z2 = std::sqrt(std::abs(q));
            h(n, n) += exshift;
            h(n - 1, n - 1) += exshift;
            x = h(n, n);
            if (q >= 0) {
                // Real pair; rotate the block triangular.
                z2 = (p >= 0) ? p + z2 : p - z2;
                re[static_cast<size_t>(n - 1)] = x + z2;
                re[static_cast<size_t>(n)] = re[static_cast<size_t>(n - 1)];
                if (z2 != 0.0) re[static_cast<size_t>(n)] = x - w / z2;
                im[static_cast<size_t>(n - 1)] = 0.0;
                im[static_cast<size_t>(n)] = 0.0;
                x = h(n, n - 1);
                s = std::abs(x) + std::abs(z2);
                p = x / s;
                q = z2 / s;
                r = std::sqrt(p * p + q * q);
                p /= r;
                q /= r;
                for (int j = n - 1; j < nn; ++j) {
                    z2 = h(n - 1, j);
                    h(n - 1, j) = q * z2 + p * h(n, j);
                    h(n, j) = q * h(n, j) - p * z2;
                }
                for (int i = 0; i <= n; ++i) {
                    z2 = h(i, n - 1);
                    h(i, n - 1) = q * z2 + p * h(i, n);
                    h(i, n) = q * h(i, n) - p * z2;
                }
                for (int i = low; i <= high; ++i) {
                    z2 = z(i, n - 1);
                    z(i, n - 1) = q * z2 + p * z(i, n);
                    z(i, n) = q * z(i, n) - p * z2;
                }
                h(n, n - 1) = 0.0;
            } else {
                // Complex pair; the 2x2 block stays.
                re[static_cast<size_t>(n - 1)] = x + p;
                re[static_cast<size_t>(n)] = x + p;
                im[static_cast<size_t>(n - 1)] = z2;
                im[static_cast<size_t>(n)] = -z2;
            }
            if (n - 1 > low) h(n - 1, n - 2) = 0.0;
            n -= 2;
            iter = 0;
        } else {
            // No convergence yet: one double-shift QR sweep.
            if (++sweeps > sweep_cap)
                throw ConvergenceError("QR iteration cap (" + std::to_string(sweep_cap) +
                                           " sweeps) exceeded on block [" + std::to_string(l) +
                                           ", " + std::to_string(n) + "]",
                                       l, n);
            x = h(n, n);
            y = 0.0;
            w = 0.0;
            if (l < n) {
                y = h(n - 1, n - 1);
                w = h(n, n - 1) * h(n - 1, n);
            }
            if (iter == 10 || iter == 20) {
                // Exceptional shift.
                exshift += x;
                for (int i = low; i <= n; ++i) h(i, i) -= x;
                s = std::abs(h(n, n - 1)) + std::abs(h(n - 1, n - 2));
                x = y = 0.75 * s;
                w = -0.4375 * s * s;
            }
            ++iter;

            // Look for two consecutive small subdiagonal elements.
            int m = n - 2;
            while (m >= l) {
                z2 = h(m, m);
                r = x - z2;
                s = y - z2;
                p = (r * s - w) / h(m + 1, m) + h(m, m + 1);
                q = h(m + 1, m + 1) - z2 - r - s;
                r = h(m + 2, m + 1);
                s = std::abs(p) + std::abs(q) + std::abs(r);
                p /= s;
                q /= s;
                r /= s;
                if (m == l) break;
                if (std::abs(h(m, m - 1)) * (std::abs(q) + std::abs(r)) <
                    eps * (std::abs(p) *
                           (std::abs(h(m - 1, m - 1)) + std::abs(z2) + std::abs(h(m + 1, m + 1)))))
                    break;
                --m;
            }
            for (int i = m + 2; i <= n; ++i) {
                h(i, i - 2) = 0.0;
                if (i > m + 2) h(i, i - 3) = 0.0;
            }

            // Double QR step on rows l..n, columns m..n.
            for (int k = m; k <= n - 1; ++k) {
                bool notlast = (k != n - 1);
                if (k != m) {
                    p = h(k, k - 1);
                    q = h(k + 1, k - 1);
                    r = notlast ? h(k + 2, k - 1) : 0.0;
                    x = std::abs(p) + std::abs(q) + std::abs(r);
                    if (x == 0.0) continue;
                    p /= x;
                    q /= x;
                    r /= x;
                }
                s = std::sqrt(p * p + q * q + r * r);
                if (p < 0) s = -s;
                if (s != 0.0) {
                    if (k != m) h(k, k - 1) = -s * x;
                    else if (l != m) h(k, k - 1) = -h(k, k - 1);
                    p += s;
                    x = p / s;
                    y = q / s;
                    z2 = r / s;
                    q /= p;
                    r /= p;
                    for (int j = k; j < nn; ++j) {
                        p = h(k, j) + q * h(k + 1, j);
                        if (notlast) {
                            p += r * h(k + 2, j);
                            h(k + 2, j) -= p * z2;
                        }
                        h(k, j) -= p * x;
                        h(k + 1, j) -= p * y;
                    }
                    for (int i = 0; i <= std::min(n, k + 3); ++i) {
                        p = x * h(i, k) + y * h(i, k + 1);
                        if (notlast) {
                            p += z2 * h(i, k + 2);
                            h(i, k + 2) -= p * r;
                        }
                        h(i, k) -= p;
                        h(i, k + 1) -= p * q;
                    }
                    for (int i = low; i <= high; ++i) {
                        p = x * z(i, k) + y * z(i, k + 1);
                        if (notlast) {
                            p += z2 * z(i, k + 2);
                            z(i, k + 2) -= p * r;
                        }
                        z(i, k) -= p;
                        z(i, k + 1) -= p * q;
                    }
                }
            }
        }
    }

    // The bulge chase annihilates entries below the first subdiagonal
    // implicitly and leaves stale values in storage; restore the structural
    // zeros so h is the quasi-triangular factor it represents.
    for (int i = 2; i < nn; ++i)
        for (int j = 0; j <= i - 2; ++j) h(i, j) = 0.0;
}

inline double schur_residual(const Matrix& a, const Matrix& z, const Matrix& t) {
    Matrix az = a * z;
    Matrix zt = z * t;
    double num = (az - zt).inf_norm();
    double denom = a.inf_norm();
    return denom == 0.0 ? num : num / denom;
}

}  // namespace detail

// Spectrum of an m-symmetric operator through the similarity
// B = M^{1/2} A M^{-1/2} and a symmetric tridiagonal solver; eigenvectors are
// back-transformed, which makes them m-orthonormal.
inline Spectrum eig_m_symmetric(const OperatorMatrix& a, bool want_vectors = true) {
    if (!a.entries.square()) throw std::invalid_argument("eig_m_symmetric: matrix not square");
    int n = a.entries.rows();
    if (n == 0) throw std::invalid_argument("eig_m_symmetric: empty matrix");

    double norm = a.entries.inf_norm();
    double max_m = 1.0;
    for (double m : a.measure.values) max_m = std::max(max_m, m);
    double sym_tol = 1e-10 * max_m * std::max(1.0, norm);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double defect = a.measure.values[static_cast<size_t>(i)] * a.entries(i, j) -
                            a.measure.values[static_cast<size_t>(j)] * a.entries(j, i);
            if (std::abs(defect) > sym_tol)
                throw std::invalid_argument(
                    "eig_m_symmetric: matrix is not m-symmetric at (" +
                    a.order[static_cast<size_t>(i)] + "," + a.order[static_cast<size_t>(j)] +
                    "), asymmetry " + std::to_string(defect));
        }

    std::vector<double> sqrt_m(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) sqrt_m[static_cast<size_t>(i)] = std::sqrt(a.measure.values[static_cast<size_t>(i)]);
    Matrix b(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            b(i, j) = sqrt_m[static_cast<size_t>(i)] * a.entries(i, j) / sqrt_m[static_cast<size_t>(j)];
    // Fold the (tolerated) asymmetry away so the tridiagonal solver sees an
    // exactly symmetric matrix.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double avg = 0.5 * (b(i, j) + b(j, i));
            b(i, j) = avg;
            b(j, i) = avg;
        }

    Spectrum out;
    std::vector<double> d, e;
    if (n == 1) {
        d = {a.entries(0, 0)};
        b = Matrix::identity(1);
    } else {
        detail::tred2(b, d, e);
        detail::tql2(b, d, e);
    }

    Matrix u(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) u(i, k) = b(i, k) / sqrt_m[static_cast<size_t>(i)];

    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += a.entries(i, j) * u(j, k);
            s -= d[static_cast<size_t>(k)] * u(i, k);
            acc += s * s;
        }
        worst = std::max(worst, std::sqrt(acc));
    }
    out.residual = norm == 0.0 ? worst : worst / norm;
    out.eigenvalues = std::move(d);
    if (want_vectors) out.eigenvectors = std::move(u);
    return out;
}

// All eigenvalues of a real square matrix: diagonal balancing, Householder
// Hessenberg reduction, Francis double-shift QR. The Schur basis is
// accumulated so the factorization residual can be reported.
inline ComplexSpectrum eig_general(const Matrix& a, int sweep_cap = -1) {
    if (!a.square()) throw std::invalid_argument("eig_general: matrix not square");
    int n = a.rows();
    if (n == 0) throw std::invalid_argument("eig_general: empty matrix");
    ComplexSpectrum out;
    if (n == 1) {
        out.eigenvalues = {std::complex<double>(a(0, 0), 0.0)};
        out.residual = 0.0;
        return out;
    }
    if (sweep_cap < 0) sweep_cap = 100 * n;

    Matrix h = a;
    detail::balance_in_place(h);
    Matrix balanced = h;
    Matrix z;
    detail::hessenberg_in_place(h, z);
    std::vector<double> re, im;
    detail::francis_qr(h, z, re, im, sweep_cap);

    out.residual = detail::schur_residual(balanced, z, h);
    out.eigenvalues.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        out.eigenvalues.emplace_back(re[static_cast<size_t>(i)], im[static_cast<size_t>(i)]);
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end(),
              [](const std::complex<double>& x, const std::complex<double>& y) {
                  if (x.real() != y.real()) return x.real() < y.real();
                  return x.imag() < y.imag();
              });
    return out;
}

inline ComplexSpectrum eig_general(const OperatorMatrix& a, int sweep_cap = -1) {
    return eig_general(a.entries, sweep_cap);
}

inline RayleighValue rayleigh(const OperatorMatrix& a, const VertexFunction& f) {
    if (static_cast<int>(f.size()) != a.size())
        throw std::invalid_argument("rayleigh: function size does not match the operator");
    std::complex<double> denom = m_inner(a.measure, f, f);
    if (denom == std::complex<double>(0.0, 0.0))
        throw std::invalid_argument("rayleigh: zero function");
    VertexFunction af = a.entries * f;
    return {m_inner(a.measure, af, f) / denom};
}

// Eigenvalues of the simple directed cycle's Laplacian: 1 - e^{2*pi*i*l/n}.
// Conjugate partners are built from one cosine/sine evaluation so pairing is
// exact.
inline ComplexSpectrum cycle_delta_spectrum_closed_form(int n) {
    if (n < 2) throw std::invalid_argument("cycle_delta_spectrum_closed_form: need n >= 2");
    ComplexSpectrum out;
    out.eigenvalues.emplace_back(0.0, 0.0);
    if (n % 2 == 0) out.eigenvalues.emplace_back(2.0, 0.0);
    const double pi = 3.14159265358979323846;
    for (int l = 1; l <= (n - 1) / 2; ++l) {
        double theta = 2.0 * pi * l / n;
        double re = 1.0 - std::cos(theta);
        double im = std::sin(theta);
        out.eigenvalues.emplace_back(re, -im);
        out.eigenvalues.emplace_back(re, im);
    }
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end(),
              [](const std::complex<double>& x, const std::complex<double>& y) {
                  if (x.real() != y.real()) return x.real() < y.real();
                  return x.imag() < y.imag();
              });
    out.residual = 0.0;
    return out;
}

// ---- Spectrum utilities shared by certificates and tests ----

// Max pairwise distance after ascending sort; the optimal matching for real
// multisets.
inline double real_multiset_distance(std::vector<double> a, std::vector<double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("real_multiset_distance: size mismatch");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double worst = 0.0;
    for (size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

// Max pairwise distance after (Re, Im) lexicographic sort. Optimal whenever
// distinct eigenvalues are separated by much more than the tolerance, which
// holds for every comparison made here (conjugate partners share Re exactly
// and are ordered by Im).
inline double complex_multiset_distance(std::vector<std::complex<double>> a,
                                        std::vector<std::complex<double>> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("complex_multiset_distance: size mismatch");
    auto lex = [](const std::complex<double>& x, const std::complex<double>& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    };
    std::sort(a.begin(), a.end(), lex);
    std::sort(b.begin(), b.end(), lex);
    double worst = 0.0;
    for (size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

inline std::vector<double> real_parts(const ComplexSpectrum& s) {
    std::vector<double> r;
    r.reserve(s.eigenvalues.size());
    for (const auto& z : s.eigenvalues) r.push_back(z.real());
    return r;
}

// Members of the eigenvalue cluster at `target`, counted within
// 1e-8 * max(1, scale); scale is typically |A|_inf.
inline int cluster_size_at(const std::vector<double>& eigenvalues, double target, double scale) {
    double tol = 1e-8 * std::max(1.0, scale);
    int count = 0;
    for (double v : eigenvalues)
        if (std::abs(v - target) <= tol) ++count;
    return count;
}

inline int zero_cluster_size(const std::vector<double>& eigenvalues, double scale) {
    return cluster_size_at(eigenvalues, 0.0, scale);
}

}  // namespace spectra

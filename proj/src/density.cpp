#include "qkd/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qkd {

namespace {

// Cyclic Jacobi for a real symmetric matrix held row-major in `a`.
// Returns the diagonal after convergence.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n) {
    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                s += a[i * n + j] * a[i * n + j];
            }
        }
        return std::sqrt(2.0 * s);
    };

    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps && off_norm() > 1e-14; ++sweep) {
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (std::abs(apq) < 1e-300) continue;
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0.0)
                                     ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                     : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // rotate rows/cols p and q
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k * n + p];
                    const double akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p * n + k];
                    const double aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
    std::sort(eig.begin(), eig.end());
    return eig;
}

} // namespace

std::vector<double> hermitian_eigenvalues(const std::vector<cplx>& entries,
                                          std::size_t dim) {
    if (entries.size() != dim * dim) {
        throw std::invalid_argument("hermitian_eigenvalues: entry count != dim^2");
    }
    // Embed H = B + iC into the real symmetric [[B, -C], [C, B]]; its
    // spectrum is that of H with every eigenvalue doubled.
    const std::size_t m = 2 * dim;
    std::vector<double> a(m * m, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            const double b = entries[i * dim + j].real();
            const double c = entries[i * dim + j].imag();
            a[i * m + j] = b;
            a[(i + dim) * m + (j + dim)] = b;
            a[i * m + (j + dim)] = -c;
            a[(i + dim) * m + j] = c;
        }
    }
    const std::vector<double> doubled = symmetric_eigenvalues(std::move(a), m);
    std::vector<double> eig(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        eig[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
    }
    return eig;
}

DensityMatrix::DensityMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (dim_ == 0 || entries_.size() != dim_ * dim_) {
        throw std::invalid_argument("DensityMatrix: entry count != dim^2");
    }
    for (const auto& e : entries_) {
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
            throw std::invalid_argument("DensityMatrix: non-finite entry");
        }
    }
    cplx tr{0.0, 0.0};
    for (std::size_t i = 0; i < dim_; ++i) {
        tr += at(i, i);
        for (std::size_t j = 0; j < dim_; ++j) {
            if (std::abs(at(i, j) - std::conj(at(j, i))) > invariant_tol) {
                throw std::invalid_argument("DensityMatrix: not Hermitian");
            }
        }
    }
    if (std::abs(tr - cplx{1.0, 0.0}) > invariant_tol) {
        throw std::invalid_argument("DensityMatrix: trace != 1");
    }
    const auto eig = hermitian_eigenvalues(entries_, dim_);
    if (eig.front() < -invariant_tol) {
        throw std::invalid_argument("DensityMatrix: negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
    const std::size_t d = psi.dim();
    std::vector<cplx> e(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            e[i * d + j] = psi.amp(i) * std::conj(psi.amp(j));
        }
    }
    return DensityMatrix(d, std::move(e));
}

double DensityMatrix::purity() const {
    // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
    double s = 0.0;
    for (const auto& e : entries_) s += std::norm(e);
    return s;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep,
                            const std::vector<std::size_t>& dims) {
    std::size_t prod = 1;
    for (const auto d : dims) prod *= d;
    if (prod != rho.dim()) {
        throw std::invalid_argument("partial_trace: dims do not factor rho.dim");
    }
    if (keep.empty()) {
        throw std::invalid_argument("partial_trace: must keep at least one subsystem");
    }
    const int ns = static_cast<int>(dims.size());
    std::vector<bool> kept(ns, false);
    int prev = 0;
    for (const int s : keep) {
        if (s < 1 || s > ns || s <= prev) {
            throw std::invalid_argument("partial_trace: bad keep list");
        }
        kept[s - 1] = true;
        prev = s;
    }

    // Digit decomposition of a full index, subsystem 1 most significant.
    auto digits_of = [&](std::size_t idx) {
        std::vector<std::size_t> ds(ns);
        for (int s = ns - 1; s >= 0; --s) {
            ds[s] = idx % dims[s];
            idx /= dims[s];
        }
        return ds;
    };
    auto kept_index = [&](const std::vector<std::size_t>& ds) {
        std::size_t idx = 0;
        for (int s = 0; s < ns; ++s) {
            if (kept[s]) idx = idx * dims[s] + ds[s];
        }
        return idx;
    };

    std::size_t out_dim = 1;
    for (int s = 0; s < ns; ++s) {
        if (kept[s]) out_dim *= dims[s];
    }

    std::vector<cplx> out(out_dim * out_dim, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        const auto di = digits_of(i);
        for (std::size_t j = 0; j < rho.dim(); ++j) {
            const auto dj = digits_of(j);
            bool traced_match = true;
            for (int s = 0; s < ns; ++s) {
                if (!kept[s] && di[s] != dj[s]) {
                    traced_match = false;
                    break;
                }
            }
            if (!traced_match) continue;
            out[kept_index(di) * out_dim + kept_index(dj)] += rho.at(i, j);
        }
    }
    return DensityMatrix(out_dim, std::move(out));
}

double trace_overlap(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.dim() != sigma.dim()) {
        throw std::invalid_argument("trace_overlap: dimension mismatch");
    }
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        for (std::size_t j = 0; j < rho.dim(); ++j) {
            s += rho.at(i, j) * sigma.at(j, i);
        }
    }
    return s.real();
}

double max_elementwise_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.dim() != sigma.dim()) {
        throw std::invalid_argument("max_elementwise_distance: dimension mismatch");
    }
    double d = 0.0;
    for (std::size_t i = 0; i < rho.entries().size(); ++i) {
        d = std::max(d, std::abs(rho.entries()[i] - sigma.entries()[i]));
    }
    return d;
}

} // namespace qkd

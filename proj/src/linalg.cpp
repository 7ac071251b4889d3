// Copyright 2026 The geomur Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "geomur/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "geomur/error.hpp"

namespace geomur {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char *what) {
    if (a != b)
        throw Error(ErrorCode::DimensionMismatch,
                    std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
}

bool finite(Complex z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double offdiag_norm(const ComplexMatrix &a) noexcept {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (i != j)
                sum += std::norm(a(i, j));
    return std::sqrt(sum);
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> data)
    : dim_(dim), data_(std::move(data)) {
    if (data_.size() != dim_ * dim_)
        throw Error(ErrorCode::DimensionMismatch,
                    "matrix data has " + std::to_string(data_.size()) + " entries, expected " +
                        std::to_string(dim_ * dim_));
    if (!std::all_of(data_.begin(), data_.end(), finite))
        throw Error(ErrorCode::DomainError, "matrix entries must be finite");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
    data_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        if (row.size() != dim_)
            throw Error(ErrorCode::DimensionMismatch, "matrix must be square");
        data_.insert(data_.end(), row.begin(), row.end());
    }
    if (!std::all_of(data_.begin(), data_.end(), finite))
        throw Error(ErrorCode::DomainError, "matrix entries must be finite");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> ket, std::span<const Complex> bra) {
    require_same_dim(ket.size(), bra.size(), "outer product");
    ComplexMatrix m(ket.size());
    for (std::size_t i = 0; i < ket.size(); ++i)
        for (std::size_t j = 0; j < bra.size(); ++j)
            m(i, j) = ket[i] * std::conj(bra[j]);
    return m;
}

ComplexVector ComplexMatrix::column(std::size_t col) const {
    if (col >= dim_)
        throw Error(ErrorCode::IndexOutOfRange, "column " + std::to_string(col));
    ComplexVector v(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        v[i] = (*this)(i, col);
    return v;
}

void ComplexMatrix::set_column(std::size_t col, std::span<const Complex> values) {
    if (col >= dim_)
        throw Error(ErrorCode::IndexOutOfRange, "column " + std::to_string(col));
    require_same_dim(values.size(), dim_, "set_column");
    for (std::size_t i = 0; i < dim_; ++i)
        (*this)(i, col) = values[i];
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_dim(dim_, other.dim_, "matrix sum");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] += other.data_[k];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_dim(dim_, other.dim_, "matrix difference");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] -= other.data_[k];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scalar) noexcept {
    for (auto &z : data_)
        z *= scalar;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix &rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix &rhs) { return lhs -= rhs; }
ComplexMatrix operator*(ComplexMatrix lhs, Complex scalar) { return lhs *= scalar; }
ComplexMatrix operator*(Complex scalar, ComplexMatrix rhs) { return rhs *= scalar; }

ComplexMatrix mat_mul(const ComplexMatrix &lhs, const ComplexMatrix &rhs) {
    require_same_dim(lhs.dim(), rhs.dim(), "matrix product");
    const std::size_t n = lhs.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Complex a = lhs(i, k);
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) += a * rhs(k, j);
        }
    return out;
}

ComplexMatrix mat_adjoint(const ComplexMatrix &m) {
    ComplexMatrix out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            out(j, i) = std::conj(m(i, j));
    return out;
}

Complex mat_trace(const ComplexMatrix &m) noexcept {
    Complex t{};
    for (std::size_t i = 0; i < m.dim(); ++i)
        t += m(i, i);
    return t;
}

ComplexVector mat_vec(const ComplexMatrix &m, std::span<const Complex> v) {
    require_same_dim(m.dim(), v.size(), "matrix-vector product");
    ComplexVector out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            out[i] += m(i, j) * v[j];
    return out;
}

Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
    require_same_dim(u.size(), v.size(), "inner product");
    Complex s{};
    for (std::size_t i = 0; i < u.size(); ++i)
        s += std::conj(u[i]) * v[i];
    return s;
}

double norm2(std::span<const Complex> v) noexcept {
    double s = 0.0;
    for (const auto &z : v)
        s += std::norm(z);
    return std::sqrt(s);
}

double frobenius_norm(const ComplexMatrix &m) noexcept {
    double s = 0.0;
    for (const auto &z : m.data())
        s += std::norm(z);
    return std::sqrt(s);
}

double max_abs(const ComplexMatrix &m) noexcept {
    double best = 0.0;
    for (const auto &z : m.data())
        best = std::max(best, std::abs(z));
    return best;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a.dim(), b.dim(), "matrix comparison");
    double best = 0.0;
    for (std::size_t k = 0; k < a.data().size(); ++k)
        best = std::max(best, std::abs(a.data()[k] - b.data()[k]));
    return best;
}

double hermiticity_defect(const ComplexMatrix &m) noexcept {
    double best = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = i; j < m.dim(); ++j)
            best = std::max(best, std::abs(m(i, j) - std::conj(m(j, i))));
    return best;
}

ComplexMatrix hermitian_part(const ComplexMatrix &m) {
    ComplexMatrix out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        out(i, i) = m(i, i).real();
        for (std::size_t j = i + 1; j < m.dim(); ++j) {
            const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            out(i, j) = avg;
            out(j, i) = std::conj(avg);
        }
    }
    return out;
}

bool is_finite(const ComplexMatrix &m) noexcept {
    return std::all_of(m.data().begin(), m.data().end(), finite);
}

ComplexMatrix EigenDecomposition::reconstruct() const {
    const std::size_t n = eigenvalues.size();
    ComplexMatrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lambda = eigenvalues[k];
        if (lambda == 0.0)
            continue;
        for (std::size_t i = 0; i < n; ++i) {
            const Complex vik = lambda * eigenvectors(i, k);
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) += vik * std::conj(eigenvectors(j, k));
        }
    }
    return hermitian_part(out);
}

EigenDecomposition hermitian_eig(const ComplexMatrix &h, const Tolerances &tol) {
    if (!is_finite(h))
        throw Error(ErrorCode::DomainError, "hermitian_eig: non-finite entries");
    const double defect = hermiticity_defect(h);
    if (defect > tol.hermitian)
        throw Error(ErrorCode::NotHermitian,
                    "max |H - H^dagger| = " + std::to_string(defect));

    const std::size_t n = h.dim();
    ComplexMatrix a = hermitian_part(h);
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double stop = tol.jacobi_offdiag * std::max(1.0, frobenius_norm(a));

    bool converged = offdiag_norm(a) < stop;
    for (int sweep = 0; sweep < tol.jacobi_max_sweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double mag = std::abs(a(p, q));
                if (mag == 0.0)
                    continue;
                // Phase-rotate column q so the pivot becomes real, then
                // apply the real symmetric Jacobi rotation:
                // J = [[c, s], [-s conj(w), c conj(w)]] on rows/cols (p, q).
                const Complex w = a(p, q) / mag;
                const Complex wc = std::conj(w);
                const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
                const double t = std::abs(theta) > 1e150
                                     ? 0.5 / theta
                                     : std::copysign(1.0, theta) /
                                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp - s * wc * akq;
                    a(k, q) = s * akp + c * wc * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk - s * w * aqk;
                    a(q, k) = s * apk + c * w * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();

                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = c * vkp - s * wc * vkq;
                    v(k, q) = s * vkp + c * wc * vkq;
                }
            }
        }
        converged = offdiag_norm(a) < stop;
    }
    if (!converged)
        throw Error(ErrorCode::NoConvergence,
                    "Jacobi did not converge in " + std::to_string(tol.jacobi_max_sweeps) +
                        " sweeps");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() < a(j, j).real();
    });

    EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i)
            out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

std::vector<double> clamp_psd_spectrum(std::span<const double> eigenvalues,
                                       const Tolerances &tol) {
    double top = 0.0;
    for (double lambda : eigenvalues)
        top = std::max(top, std::abs(lambda));
    const double zero_band = tol.psd_zero * std::max(1.0, top);

    std::vector<double> out(eigenvalues.begin(), eigenvalues.end());
    for (double &lambda : out) {
        if (lambda < -tol.psd_negative)
            throw Error(ErrorCode::NotPSD, "eigenvalue " + std::to_string(lambda));
        if (lambda <= zero_band)
            lambda = 0.0;
    }
    return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix &m, const Tolerances &tol) {
    EigenDecomposition eig = hermitian_eig(m, tol);
    eig.eigenvalues = clamp_psd_spectrum(eig.eigenvalues, tol);
    return spectral_apply(eig, [](double lambda) { return std::sqrt(lambda); });
}

double nuclear_norm(const ComplexMatrix &m, const Tolerances &tol) {
    if (!is_finite(m))
        throw Error(ErrorCode::DomainError, "nuclear_norm: non-finite entries");
    if (m.dim() == 0)
        return 0.0;
    const ComplexMatrix gram = hermitian_part(mat_mul(mat_adjoint(m), m));
    const EigenDecomposition eig = hermitian_eig(gram, tol);
    // M^dagger M is PSD by construction; any negative is round-off.
    const double top = std::max(1.0, std::abs(eig.eigenvalues.back()));
    double sum = 0.0;
    for (double s2 : eig.eigenvalues)
        if (s2 > tol.psd_zero * top)
            sum += std::sqrt(s2);
    return sum;
}

} // namespace geomur

#include "rgate/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "rgate/errors.hpp"

namespace rgate::linalg {

MatX MatX::identity(int n) {
    MatX m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

MatX MatX::operator*(const MatX& rhs) const {
    if (cols_ != rhs.rows_) throw precondition_violated("MatX: dimension mismatch in product");
    MatX out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const double aik = at(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += aik * rhs.at(k, j);
        }
    return out;
}

MatX& MatX::operator+=(const MatX& rhs) {
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
    return *this;
}

MatX& MatX::operator-=(const MatX& rhs) {
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
    return *this;
}

MatX MatX::transposed() const {
    MatX out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

void MatX::set_block(int r0, int c0, const MatX& block) {
    for (int i = 0; i < block.rows(); ++i)
        for (int j = 0; j < block.cols(); ++j) at(r0 + i, c0 + j) = block.at(i, j);
}

double MatX::frobenius_norm() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
}

double MatX::max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::fabs(v));
    return m;
}

Mat3 mat3_identity() { return {1, 0, 0, 0, 1, 0, 0, 0, 1}; }

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
    Mat3 c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += a[3 * i + k] * b[3 * k + j];
            c[3 * i + j] = s;
        }
    return c;
}

Mat3 mat3_sub(const Mat3& a, const Mat3& b) {
    Mat3 c{};
    for (int i = 0; i < 9; ++i) c[i] = a[i] - b[i];
    return c;
}

Mat3 mat3_transpose(const Mat3& a) {
    return {a[0], a[3], a[6], a[1], a[4], a[7], a[2], a[5], a[8]};
}

double mat3_det(const Mat3& a) {
    return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
           a[2] * (a[3] * a[7] - a[4] * a[6]);
}

double mat3_max_abs_diff(const Mat3& a, const Mat3& b) {
    double m = 0.0;
    for (int i = 0; i < 9; ++i) m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

MatX to_matx(const Mat3& a) {
    MatX m(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = a[3 * i + j];
    return m;
}

std::vector<double> singular_values(const MatX& m) {
    // One-sided Jacobi on the columns of A (or A^T when wider than tall):
    // rotate column pairs until all are orthogonal; the norms are the
    // singular values.
    MatX a = m.rows() >= m.cols() ? m : m.transposed();
    const int n = a.cols();
    const int rows = a.rows();
    if (n == 0 || rows == 0) return {};

    const double eps = 1e-15;
    for (int sweep = 0; sweep < 60; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                double app = 0.0, aqq = 0.0, apq = 0.0;
                for (int i = 0; i < rows; ++i) {
                    app += a.at(i, p) * a.at(i, p);
                    aqq += a.at(i, q) * a.at(i, q);
                    apq += a.at(i, p) * a.at(i, q);
                }
                if (std::fabs(apq) <= eps * std::sqrt(app * aqq) || apq == 0.0) continue;
                rotated = true;
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (int i = 0; i < rows; ++i) {
                    const double vp = a.at(i, p);
                    const double vq = a.at(i, q);
                    a.at(i, p) = c * vp - s * vq;
                    a.at(i, q) = s * vp + c * vq;
                }
            }
        if (!rotated) break;
    }

    std::vector<double> sv(n);
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int i = 0; i < rows; ++i) s += a.at(i, j) * a.at(i, j);
        sv[j] = std::sqrt(s);
    }
    std::sort(sv.rbegin(), sv.rend());
    return sv;
}

int rank_from_singular_values(const std::vector<double>& sv, double rel_cutoff) {
    if (sv.empty() || sv.front() == 0.0) return 0;
    const double cutoff = rel_cutoff * sv.front();
    int r = 0;
    for (double s : sv)
        if (s > cutoff) ++r;
    return r;
}

bool solve_linear(MatX a, std::vector<double> b, std::vector<double>& x) {
    const int n = a.rows();
    if (a.cols() != n || static_cast<int>(b.size()) != n)
        throw precondition_violated("solve_linear: square system expected");
    for (int k = 0; k < n; ++k) {
        int pivot = k;
        for (int i = k + 1; i < n; ++i)
            if (std::fabs(a.at(i, k)) > std::fabs(a.at(pivot, k))) pivot = i;
        if (std::fabs(a.at(pivot, k)) < 1e-300) return false;
        if (pivot != k) {
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
            std::swap(b[k], b[pivot]);
        }
        for (int i = k + 1; i < n; ++i) {
            const double f = a.at(i, k) / a.at(k, k);
            if (f == 0.0) continue;
            for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
            b[i] -= f * b[k];
        }
    }
    x.assign(n, 0.0);
    for (int i = n - 1; i >= 0; --i) {
        double s = b[i];
        for (int j = i + 1; j < n; ++j) s -= a.at(i, j) * x[j];
        x[i] = s / a.at(i, i);
    }
    return true;
}

}  // namespace rgate::linalg

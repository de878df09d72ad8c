#pragma once

#include <array>
#include <vector>

namespace rgate::linalg {

// Row-major dense real matrix, sized for cochain blocks (tens of rows).
class MatX {
public:
    MatX() = default;
    MatX(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0.0) {}

    static MatX identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    double at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    MatX operator*(const MatX& rhs) const;
    MatX& operator+=(const MatX& rhs);
    MatX& operator-=(const MatX& rhs);
    MatX transposed() const;

    // Writes block at (r0, c0).
    void set_block(int r0, int c0, const MatX& block);

    double frobenius_norm() const;
    double max_abs() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> a_;
};

using Mat3 = std::array<double, 9>;  // row-major 3x3

Mat3 mat3_identity();
Mat3 mat3_mul(const Mat3& a, const Mat3& b);
Mat3 mat3_sub(const Mat3& a, const Mat3& b);
Mat3 mat3_transpose(const Mat3& a);
double mat3_det(const Mat3& a);
double mat3_max_abs_diff(const Mat3& a, const Mat3& b);
MatX to_matx(const Mat3& a);

// Singular values in descending order (one-sided Jacobi; works for any shape).
std::vector<double> singular_values(const MatX& m);

// Number of singular values > rel_cutoff * sigma_max (0 for a zero matrix).
int rank_from_singular_values(const std::vector<double>& sv, double rel_cutoff);

// Solves the square system a x = b by partial-pivot Gaussian elimination.
// Returns false when the matrix is numerically singular.
bool solve_linear(MatX a, std::vector<double> b, std::vector<double>& x);

}  // namespace rgate::linalg

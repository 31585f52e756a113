#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace orthoframe {

/// Dense row-major real matrix. Sized at construction, entries mutable.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const;

    Matrix operator*(const Matrix& rhs) const;
    std::vector<double> operator*(const std::vector<double>& v) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator*(double s) const;

    bool operator==(const Matrix& rhs) const = default;

    /// Frobenius norm.
    double norm_fro() const;
    /// Largest absolute entry.
    double norm_max() const;
    /// Max absolute row sum.
    double norm_inf() const;

    std::vector<double> column(std::size_t j) const;
    std::vector<double> row(std::size_t i) const;
    void set_column(std::size_t j, const std::vector<double>& v);

    /// Deviation from orthogonality, max-entry norm of MᵀM − I.
    double orthogonality_defect() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

Matrix operator*(double s, const Matrix& m);

double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm2(const std::vector<double>& v);

}  // namespace orthoframe

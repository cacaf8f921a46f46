#pragma once

#include <vector>

#include "triad/rational.hpp"

namespace triad {

using Vector = std::vector<Rational>;

bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rational& c, const Vector& v);
Vector& add_scaled(Vector& acc, const Rational& c, const Vector& v);
Vector unit_vector(int n, int i);

/// Dense rational matrix, row-major.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<Vector>& rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    Vector row(int i) const;
    Vector col(int j) const;
    Vector flat() const { return a_; }
    static Matrix from_flat(const Vector& v, int rows, int cols);

    bool is_zero() const;
    Matrix transposed() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    Matrix operator-() const;
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

struct RrefResult {
    Matrix mat;               // same shape as input, reduced row echelon form
    int rank = 0;
    std::vector<int> pivots;  // pivot column per nonzero row
};

/// Fraction-free (Bareiss) forward elimination, then rational normalization.
RrefResult rref(const Matrix& m);

Matrix inverse(const Matrix& m);  // throws std::invalid_argument if singular

Matrix commutator(const Matrix& a, const Matrix& b);

}  // namespace triad

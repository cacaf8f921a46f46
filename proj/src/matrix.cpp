#include "triad/matrix.hpp"

#include <stdexcept>

namespace triad {

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vector operator+(const Vector& a, const Vector& b) {
    Vector r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vector operator-(const Vector& a, const Vector& b) {
    Vector r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vector operator-(const Vector& a) {
    Vector r(a);
    for (auto& x : r) x = -x;
    return r;
}

Vector operator*(const Rational& c, const Vector& v) {
    Vector r(v);
    for (auto& x : r) x *= c;
    return r;
}

Vector& add_scaled(Vector& acc, const Rational& c, const Vector& v) {
    if (c.is_zero()) return acc;
    for (size_t i = 0; i < acc.size(); ++i)
        if (!v[i].is_zero()) acc[i] += c * v[i];
    return acc;
}

Vector unit_vector(int n, int i) {
    Vector v(n);
    v[i] = Rational(1);
    return v;
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, int cols) {
    Matrix m(int(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (int(rows[i].size()) != cols) throw std::invalid_argument("Matrix::from_rows: ragged rows");
        for (int j = 0; j < cols; ++j) m.at(int(i), j) = rows[i][j];
    }
    return m;
}

Vector Matrix::row(int i) const {
    Vector v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

Vector Matrix::col(int j) const {
    Vector v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Matrix Matrix::from_flat(const Vector& v, int rows, int cols) {
    if (int(v.size()) != rows * cols) throw std::invalid_argument("Matrix::from_flat: size mismatch");
    Matrix m(rows, cols);
    m.a_ = v;
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j)
                if (!b.at(k, j).is_zero()) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (int(v.size()) != a.cols_) throw std::invalid_argument("Matrix: shape mismatch in matvec");
    Vector r(a.rows_);
    for (int j = 0; j < a.cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (int i = 0; i < a.rows_; ++i)
            if (!a.at(i, j).is_zero()) r[i] += a.at(i, j) * v[j];
    }
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r(*this);
    for (auto& x : r.a_) x = -x;
    return r;
}

RrefResult rref(const Matrix& m) {
    const int R = m.rows(), C = m.cols();
    // Clear denominators row by row; row scaling preserves the row space.
    std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C));
    for (int i = 0; i < R; ++i) {
        mpz_class l = 1;
        for (int j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).denominator().get_mpz_t());
        for (int j = 0; j < C; ++j) a[i][j] = m.at(i, j).numerator() * (l / m.at(i, j).denominator());
    }

    // Bareiss forward elimination: entries stay minors of the integer matrix.
    std::vector<int> pivots;
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < C && r < R; ++c) {
        int p = -1;
        for (int i = r; i < R; ++i)
            if (a[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(a[p], a[r]);
        mpz_class t;
        for (int i = r + 1; i < R; ++i) {
            if (a[i][c] == 0) {
                for (int j = c + 1; j < C; ++j) {
                    t = a[r][c] * a[i][j];
                    mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                }
                continue;
            }
            for (int j = c + 1; j < C; ++j) {
                t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        pivots.push_back(c);
        ++r;
    }

    // Normalize pivot rows and eliminate above pivots with rational ops.
    RrefResult out;
    out.rank = r;
    out.pivots = pivots;
    out.mat = Matrix(R, C);
    for (int i = 0; i < r; ++i) {
        Rational piv(mpq_class(a[i][pivots[i]]));
        for (int j = pivots[i]; j < C; ++j)
            out.mat.at(i, j) = Rational(mpq_class(a[i][j])) / piv;
    }
    for (int i = r - 1; i >= 0; --i) {
        for (int k = 0; k < i; ++k) {
            Rational f = out.mat.at(k, pivots[i]);
            if (f.is_zero()) continue;
            for (int j = pivots[i]; j < C; ++j)
                out.mat.at(k, j) -= f * out.mat.at(i, j);
        }
    }
    return out;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    const int n = m.rows();
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Rational(1);
    }
    RrefResult r = rref(aug);
    if (r.rank != n || r.pivots.back() >= n) throw std::invalid_argument("inverse: singular matrix");
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
    return inv;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace triad

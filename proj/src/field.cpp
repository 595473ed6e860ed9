#include "tricluster/field.hpp"

#include <stdexcept>

namespace tc {

Fp finv(Fp a) {
    if (a == 0) throw std::domain_error("inverse of zero in F_p");
    std::uint64_t result = 1, base = a;
    std::uint32_t e = kPrime - 2;
    while (e) {
        if (e & 1) result = result * base % kPrime;
        base = base * base % kPrime;
        e >>= 1;
    }
    return static_cast<Fp>(result);
}

Fp from_int(long long v) {
    long long m = v % static_cast<long long>(kPrime);
    if (m < 0) m += kPrime;
    return static_cast<Fp>(m);
}

long long to_signed(Fp a) {
    return a > kPrime / 2 ? static_cast<long long>(a) - kPrime : static_cast<long long>(a);
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::random(int rows, int cols, std::mt19937_64& rng) {
    std::uniform_int_distribution<Fp> dist(0, kPrime - 1);
    Matrix m(rows, cols);
    for (auto& x : m.a_) x = dist(rng);
    return m;
}

bool Matrix::is_zero() const {
    for (auto x : a_)
        if (x) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (c_ != o.r_) throw std::invalid_argument("matrix shape mismatch in product");
    Matrix p(r_, o.c_);
    std::vector<std::uint64_t> acc(o.c_);
    for (int i = 0; i < r_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (int k = 0; k < c_; ++k) {
            Fp x = (*this)(i, k);
            if (!x) continue;
            const Fp* row = &o.a_[std::size_t(k) * o.c_];
            for (int j = 0; j < o.c_; ++j) {
                acc[j] += std::uint64_t(x) * row[j];
                if (acc[j] >= (1ull << 62)) acc[j] %= kPrime;
            }
        }
        for (int j = 0; j < o.c_; ++j) p(i, j) = static_cast<Fp>(acc[j] % kPrime);
    }
    return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch in sum");
    Matrix s(r_, c_);
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = fadd(a_[i], o.a_[i]);
    return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch in difference");
    Matrix s(r_, c_);
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = fsub(a_[i], o.a_[i]);
    return s;
}

Matrix Matrix::scaled(Fp f) const {
    Matrix s(r_, c_);
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = fmul(a_[i], f);
    return s;
}

Matrix Matrix::block(int r0, int c0, int nr, int nc) const {
    Matrix b(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void Matrix::set_block(int r0, int c0, const Matrix& b) {
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

std::vector<Fp> Matrix::apply(const std::vector<Fp>& v) const {
    std::vector<Fp> out(r_, 0);
    for (int i = 0; i < r_; ++i) {
        std::uint64_t acc = 0;
        for (int j = 0; j < c_; ++j) acc += std::uint64_t((*this)(i, j)) * v[j] % kPrime;
        out[i] = static_cast<Fp>(acc % kPrime);
    }
    return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    Matrix m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
    Matrix m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

Echelon rref(Matrix m) {
    Echelon e;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m(i, col)) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        Fp inv = finv(m(row, col));
        for (int j = col; j < m.cols(); ++j) m(row, j) = fmul(m(row, j), inv);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || !m(i, col)) continue;
            Fp f = m(i, col);
            for (int j = col; j < m.cols(); ++j)
                if (m(row, j)) m(i, j) = fsub(m(i, j), fmul(f, m(row, j)));
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.r = std::move(m);
    return e;
}

int rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return static_cast<int>(rref(m).pivots.size());
}

Matrix nullspace(const Matrix& m) {
    int n = m.cols();
    if (m.rows() == 0) return Matrix::identity(n);
    Echelon e = rref(m);
    std::vector<char> is_pivot(n, 0);
    for (int p : e.pivots) is_pivot[p] = 1;
    std::vector<int> free;
    for (int j = 0; j < n; ++j)
        if (!is_pivot[j]) free.push_back(j);
    Matrix k(n, static_cast<int>(free.size()));
    for (std::size_t f = 0; f < free.size(); ++f) {
        k(free[f], static_cast<int>(f)) = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            k(e.pivots[r], static_cast<int>(f)) = fneg(e.r(static_cast<int>(r), free[f]));
    }
    return k;
}

Matrix column_basis(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return Matrix(m.rows(), 0);
    Echelon e = rref(m);
    Matrix b(m.rows(), static_cast<int>(e.pivots.size()));
    for (std::size_t k = 0; k < e.pivots.size(); ++k)
        for (int i = 0; i < m.rows(); ++i) b(i, static_cast<int>(k)) = m(i, e.pivots[k]);
    return b;
}

bool solve(const Matrix& a, const Matrix& b, Matrix& x) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
    int n = a.cols();
    Echelon e = rref(hstack(a, b));
    x = Matrix(n, b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        int p = e.pivots[r];
        if (p >= n) return false;
        for (int j = 0; j < b.cols(); ++j) x(p, j) = e.r(static_cast<int>(r), n + j);
    }
    return true;
}

bool invertible(const Matrix& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

Matrix inverse(const Matrix& m) {
    Matrix x;
    if (m.rows() != m.cols() || !solve(m, Matrix::identity(m.rows()), x) || !invertible(m))
        throw std::domain_error("matrix is not invertible");
    return x;
}

Matrix complement_basis(const Matrix& sub, int n) {
    std::vector<char> is_pivot(n, 0);
    if (sub.cols() > 0)
        for (int p : rref(sub.transpose()).pivots) is_pivot[p] = 1;
    std::vector<int> free;
    for (int j = 0; j < n; ++j)
        if (!is_pivot[j]) free.push_back(j);
    Matrix c(n, static_cast<int>(free.size()));
    for (std::size_t k = 0; k < free.size(); ++k) c(free[k], static_cast<int>(k)) = 1;
    return c;
}

}

#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace tc {

constexpr std::uint32_t kPrime = 32003;

using Fp = std::uint32_t;

inline Fp fadd(Fp a, Fp b) { Fp s = a + b; return s >= kPrime ? s - kPrime : s; }
inline Fp fsub(Fp a, Fp b) { return a >= b ? a - b : a + kPrime - b; }
inline Fp fneg(Fp a) { return a == 0 ? 0 : kPrime - a; }
inline Fp fmul(Fp a, Fp b) { return static_cast<Fp>((std::uint64_t(a) * b) % kPrime); }
Fp finv(Fp a);
Fp from_int(long long v);
long long to_signed(Fp a);

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : r_(rows), c_(cols), a_(std::size_t(rows) * cols, 0) {}

    static Matrix identity(int n);
    static Matrix random(int rows, int cols, std::mt19937_64& rng);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Fp& operator()(int i, int j) { return a_[std::size_t(i) * c_ + j]; }
    Fp operator()(int i, int j) const { return a_[std::size_t(i) * c_ + j]; }
    bool operator==(const Matrix& o) const = default;

    bool is_zero() const;
    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(Fp s) const;
    Matrix block(int r0, int c0, int nr, int nc) const;
    void set_block(int r0, int c0, const Matrix& b);
    std::vector<Fp> apply(const std::vector<Fp>& v) const;

private:
    int r_ = 0;
    int c_ = 0;
    std::vector<Fp> a_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

struct Echelon {
    Matrix r;
    std::vector<int> pivots;
};

Echelon rref(Matrix m);
int rank(const Matrix& m);
// columns span the right nullspace
Matrix nullspace(const Matrix& m);
// columns form a basis of the column space, chosen among the columns of m
Matrix column_basis(const Matrix& m);
// finds x with a*x == b; false when b is not in the column space of a
bool solve(const Matrix& a, const Matrix& b, Matrix& x);
bool invertible(const Matrix& m);
Matrix inverse(const Matrix& m);
// columns completing the columns of sub (assumed independent) to a basis of F^n
Matrix complement_basis(const Matrix& sub, int n);

}

namespace tc {

using Poly = std::vector<Fp>;

Poly charpoly(const Matrix& m);
// distinct roots in F_p, ascending
std::vector<Fp> poly_roots(const Poly& f);

}

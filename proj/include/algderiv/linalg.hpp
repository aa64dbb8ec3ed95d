#ifndef ALGDERIV_LINALG_HPP
#define ALGDERIV_LINALG_HPP

#include <cstddef>
#include <vector>

#include "algderiv/rational.hpp"
#include "algderiv/unipoly.hpp"

namespace algderiv {

/* Dense matrix over the rationals, row-major. */
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Rational(0)) {}
    QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const std::vector<Rational>& entries() const { return e_; }

    friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const Rational& c, const QMatrix& m);
    friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

    Rational trace() const;
    void swap_rows(std::size_t i, std::size_t j);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> e_;
};

struct RrefResult {
    QMatrix reduced;
    std::vector<std::size_t> pivots; // pivot column indices, ascending
};

// Reduced row echelon form with exact Gauss-Jordan elimination.
RrefResult rref(const QMatrix& m);

std::size_t rank(const QMatrix& m);
bool is_invertible(const QMatrix& m); // square with full rank

// Exact monic characteristic polynomial det(X*I - m) via the
// Faddeev-LeVerrier recurrence. Requires m square.
UniPoly char_poly(const QMatrix& m);

// p(m) for square m; used for cross-checks.
QMatrix eval_at(const UniPoly& p, const QMatrix& m);

} // namespace algderiv

#endif

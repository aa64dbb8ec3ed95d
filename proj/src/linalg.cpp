#include "algderiv/linalg.hpp"

#include <utility>

namespace algderiv {

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_) throw DomainError("matrix entry count mismatch");
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DomainError("matrix shape mismatch in addition");
    QMatrix r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
    return r;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DomainError("matrix shape mismatch in subtraction");
    QMatrix r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
    return r;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix shape mismatch in product");
    QMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rational& bkj = b.at(k, j);
                if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

QMatrix operator*(const Rational& c, const QMatrix& m) {
    QMatrix r = m;
    for (auto& x : r.e_) x *= c;
    return r;
}

Rational QMatrix::trace() const {
    if (!is_square()) throw DomainError("trace of non-square matrix");
    Rational t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

void QMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

RrefResult rref(const QMatrix& m) {
    RrefResult out{m, {}};
    QMatrix& a = out.reduced;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < a.rows() && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == a.rows()) continue;
        a.swap_rows(row, pivot);
        Rational inv = Rational(1) / a.at(row, col);
        for (std::size_t c = col; c < a.cols(); ++c) a.at(row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a.at(r, col).is_zero()) continue;
            Rational f = a.at(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) a.at(r, c) -= f * a.at(row, c);
        }
        out.pivots.push_back(col);
        ++row;
    }
    return out;
}

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

bool is_invertible(const QMatrix& m) { return m.is_square() && rank(m) == m.rows(); }

UniPoly char_poly(const QMatrix& m) {
    if (!m.is_square()) throw DomainError("characteristic polynomial of non-square matrix");
    std::size_t n = m.rows();
    // p(X) = X^n + c[n-1] X^(n-1) + ... + c[0]
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    if (n == 0) return UniPoly::from_coeffs(std::move(c));
    QMatrix mk = m;
    c[n - 1] = -mk.trace();
    for (std::size_t k = 2; k <= n; ++k) {
        QMatrix shifted = mk;
        const Rational& ck = c[n - k + 1];
        for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) += ck;
        mk = m * shifted;
        c[n - k] = -(mk.trace() / Rational(static_cast<long>(k)));
    }
    return UniPoly::from_coeffs(std::move(c));
}

QMatrix eval_at(const UniPoly& p, const QMatrix& m) {
    if (!m.is_square()) throw DomainError("polynomial evaluation at non-square matrix");
    QMatrix acc(m.rows(), m.rows());
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * m;
        Rational ci = p.coeff(static_cast<std::size_t>(i));
        for (std::size_t d = 0; d < m.rows(); ++d) acc.at(d, d) += ci;
    }
    return acc;
}

} // namespace algderiv

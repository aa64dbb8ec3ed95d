#include "algderiv/eigenvalue.hpp"

#include <ostream>
#include <sstream>

namespace algderiv {

namespace {

WeightSymbolsPtr merge_symbols(const WeightSymbolsPtr& a, const WeightSymbolsPtr& b) {
    if (!a) return b;
    if (!b || a == b || *a == *b) return a;
    throw DomainError("eigenvalues over different weight symbol tables");
}

} // namespace

Eigenvalue::Eigenvalue(Rational constant, std::vector<Rational> weights,
                       WeightSymbolsPtr symbols)
    : c_(std::move(constant)), w_(std::move(weights)), sym_(std::move(symbols)) {
    trim();
}

Eigenvalue Eigenvalue::symbol(const WeightSymbolsPtr& symbols, std::size_t index) {
    if (!symbols || index >= symbols->size())
        throw DomainError("weight symbol index out of range");
    std::vector<Rational> w(index + 1, Rational(0));
    w[index] = 1;
    return Eigenvalue(0, std::move(w), symbols);
}

void Eigenvalue::trim() {
    while (!w_.empty() && w_.back().is_zero()) w_.pop_back();
}

Eigenvalue Eigenvalue::operator-() const {
    Eigenvalue r(*this);
    r.c_ = -r.c_;
    for (auto& x : r.w_) x = -x;
    return r;
}

Eigenvalue operator+(const Eigenvalue& a, const Eigenvalue& b) {
    std::vector<Rational> w(std::max(a.w_.size(), b.w_.size()), Rational(0));
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i < a.w_.size()) w[i] += a.w_[i];
        if (i < b.w_.size()) w[i] += b.w_[i];
    }
    return Eigenvalue(a.c_ + b.c_, std::move(w), merge_symbols(a.sym_, b.sym_));
}

Eigenvalue operator-(const Eigenvalue& a, const Eigenvalue& b) { return a + (-b); }

Eigenvalue operator*(const Rational& c, const Eigenvalue& e) {
    std::vector<Rational> w = e.w_;
    for (auto& x : w) x *= c;
    return Eigenvalue(c * e.c_, std::move(w), e.sym_);
}

bool operator<(const Eigenvalue& a, const Eigenvalue& b) {
    if (a.c_ != b.c_) return a.c_ < b.c_;
    std::size_t n = std::max(a.w_.size(), b.w_.size());
    for (std::size_t i = 0; i < n; ++i) {
        Rational x = i < a.w_.size() ? a.w_[i] : Rational(0);
        Rational y = i < b.w_.size() ? b.w_[i] : Rational(0);
        if (x != y) return x < y;
    }
    return false;
}

std::string Eigenvalue::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Rational& coeff, const std::string& name) {
        if (coeff.is_zero()) return;
        if (first) {
            if (name.empty()) {
                os << coeff.str();
            } else {
                if (coeff == Rational(-1)) os << "-1*";
                else if (!coeff.is_one()) os << coeff.str() << "*";
                os << name;
            }
        } else {
            os << (coeff.sign() < 0 ? " - " : " + ");
            Rational a = coeff.abs();
            if (name.empty()) {
                os << a.str();
            } else {
                if (!a.is_one()) os << a.str() << "*";
                os << name;
            }
        }
        first = false;
    };
    emit(c_, "");
    for (std::size_t i = 0; i < w_.size(); ++i) {
        std::string name = sym_ && i < sym_->size() ? (*sym_)[i] : "w" + std::to_string(i + 1);
        emit(w_[i], name);
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Eigenvalue& e) { return os << e.str(); }

} // namespace algderiv

#include "algderiv/poly.hpp"

#include <cctype>
#include <ostream>

namespace algderiv {

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Ring::Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (!valid_identifier(vars_[i]))
            throw DomainError("invalid variable name '" + vars_[i] + "'");
        for (std::size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j])
                throw DomainError("duplicate variable name '" + vars_[i] + "'");
    }
}

bool valid_identifier(std::string_view name) {
    if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name.substr(1))
        if (!std::islower(static_cast<unsigned char>(c)) &&
            !std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

Rational Rational::from_string(const std::string& text) {
    auto bad = [&] { return DomainError("malformed rational '" + text + "'"); };
    std::size_t slash = text.find('/');
    std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto digits = [](const std::string& s, bool allow_sign) {
        std::size_t i = (allow_sign && !s.empty() && s[0] == '-') ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    if (!digits(num, true) || !digits(den, false)) throw bad();
    // Base fixed to 10: gmp's auto-detection would read a leading zero
    // as an octal prefix.
    return Rational(mpz_class(num, 10), mpz_class(den, 10));
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Poly Poly::constant(RingPtr ring, const Rational& c) {
    Poly p(std::move(ring));
    p.add_term(Monomial(p.ring_->size()), c);
    return p;
}

Poly Poly::variable(RingPtr ring, std::size_t index) {
    Poly p(std::move(ring));
    if (index >= p.ring_->size()) throw DomainError("variable index out of range");
    Monomial m(p.ring_->size());
    m.set(index, 1);
    p.add_term(m, 1);
    return p;
}

Poly Poly::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
    Poly p(std::move(ring));
    if (m.size() != p.ring_->size()) throw DomainError("monomial arity mismatch");
    p.add_term(m, c);
    return p;
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = terms_.begin()->first.total_degree();
    for (const auto& [m, c] : terms_)
        if (m.total_degree() != d) return false;
    return true;
}

Rational Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Poly::check_same_ring(const Poly& o) const {
    if (!same_ring(ring_, o.ring_))
        throw RingMismatchError("polynomials over different rings");
}

Poly Poly::operator-() const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_same_ring(b);
    Poly r(a.ring_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly operator*(const Rational& c, const Poly& p) {
    Poly r(p.ring());
    if (c.is_zero()) return r;
    for (const auto& [m, pc] : p.terms()) r.add_term(m, c * pc);
    return r;
}

Poly Poly::pow(unsigned n) const {
    Poly r = Poly::one(ring_);
    Poly base = *this;
    while (n > 0) {
        if (n & 1u) r = r * base;
        n >>= 1u;
        if (n > 0) base = base * base;
    }
    return r;
}

bool operator==(const Poly& a, const Poly& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

Poly Poly::diff(std::size_t index) const {
    if (!ring_ || index >= ring_->size()) throw DomainError("variable index out of range");
    Poly r(ring_);
    for (const auto& [m, c] : terms_) {
        unsigned e = m[index];
        if (e == 0) continue;
        Monomial dm = m;
        dm.set(index, e - 1);
        r.add_term(dm, c * Rational(static_cast<long>(e)));
    }
    return r;
}

Poly Poly::diff(std::string_view var) const {
    if (!ring_) throw UnknownVariableError(std::string(var));
    return diff(ring_->require(var));
}

Poly Poly::substitute(std::span<const Poly> images) const {
    if (!ring_ || images.size() != ring_->size())
        throw DomainError("substitute: expected one image per ring variable");
    for (const Poly& im : images)
        if (!same_ring(im.ring(), ring_))
            throw RingMismatchError("substitute: image over a different ring");

    // Power tables, grown lazily per variable.
    std::vector<std::vector<Poly>> powers(ring_->size());
    auto power = [&](std::size_t v, unsigned e) -> const Poly& {
        auto& tab = powers[v];
        if (tab.empty()) tab.push_back(Poly::one(ring_));
        while (tab.size() <= e) tab.push_back(tab.back() * images[v]);
        return tab[e];
    };

    Poly r(ring_);
    for (const auto& [m, c] : terms_) {
        Poly t = Poly::constant(ring_, c);
        for (std::size_t v = 0; v < ring_->size(); ++v)
            if (m[v] > 0) t = t * power(v, m[v]);
        r += t;
    }
    return r;
}

Poly Poly::substitute(const std::map<std::string, Poly>& images) const {
    if (!ring_) throw DomainError("substitute on ringless polynomial");
    std::vector<Poly> vec;
    vec.reserve(ring_->size());
    for (const auto& name : ring_->vars()) {
        auto it = images.find(name);
        if (it == images.end())
            throw DomainError("substitute: missing image for variable '" + name + "'");
        vec.push_back(it->second);
    }
    return substitute(vec);
}

} // namespace algderiv

#ifndef ALGDERIV_RING_HPP
#define ALGDERIV_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algderiv/errors.hpp"

namespace algderiv {

/* The ambient polynomial ring: an ordered list of variable names.
 * Shared immutably by every Poly over it. Variable names follow the
 * expression grammar: a lowercase letter followed by lowercase
 * letters or digits. */
class Ring {
public:
    explicit Ring(std::vector<std::string> vars);

    std::size_t size() const { return vars_.size(); }
    const std::string& var(std::size_t i) const { return vars_.at(i); }
    const std::vector<std::string>& vars() const { return vars_; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return i;
        return std::nullopt;
    }

    // Throwing lookup for call sites that require the variable to exist.
    std::size_t require(std::string_view name) const {
        if (auto i = index_of(name)) return *i;
        throw UnknownVariableError(std::string(name));
    }

    friend bool operator==(const Ring& a, const Ring& b) { return a.vars_ == b.vars_; }
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

private:
    std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars) {
    return std::make_shared<const Ring>(std::move(vars));
}

bool valid_identifier(std::string_view name);

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

} // namespace algderiv

#endif

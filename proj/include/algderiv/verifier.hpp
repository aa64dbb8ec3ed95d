#ifndef ALGDERIV_VERIFIER_HPP
#define ALGDERIV_VERIFIER_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "algderiv/spectral.hpp"

namespace algderiv {

struct SuiteFailure {
    std::string input;
    std::string expected;
    std::string observed;
};

/* Result of one property suite run. Reproducible from the seed; a suite
 * passed iff `failures` is empty. */
struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t cases_run = 0;
    std::size_t skipped = 0;
    std::vector<SuiteFailure> failures;

    bool passed() const { return failures.empty(); }
    void merge(const SuiteReport& other);
};

/* Deterministic pseudo-random polynomial source. Coefficients come from
 * a small pool (nonzero integers in [-9,9] and odd halves) to keep
 * Krylov degrees tame. */
class PolySampler {
public:
    explicit PolySampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi); // inclusive
    Rational coefficient();

    // Nonzero sparse polynomial within the bounds.
    Poly poly(const RingPtr& ring, unsigned max_degree, unsigned max_terms);
    // Nonzero polynomial in the single variable `var`.
    Poly univariate(const RingPtr& ring, std::size_t var, unsigned max_degree);
    // Nonzero homogeneous polynomial of exact total degree `degree`.
    Poly homogeneous(const RingPtr& ring, unsigned degree, unsigned max_terms);

private:
    std::mt19937_64 rng_;
};

// One-shot sampler, deterministic in the seed.
Poly random_poly(std::uint64_t seed, const RingPtr& ring, unsigned max_degree,
                 unsigned max_terms);

// Coefficientwise check of phi_D == exp(lambda t) * phi_(D - lambda)
// up to the given order.
bool check_exp_shift_identity(const Derivation& d, const Poly& p, const Rational& lambda,
                              unsigned order);

// Reconstruction, annihilation, uniqueness, D-stability and product
// grading on the concrete pair (p, q). Elements that are not algebraic
// within caps are skipped and recorded.
SuiteReport check_decomposition_laws(const Derivation& d, const Poly& p, const Poly& q,
                                     const Caps& caps = {});

// For each pair (a, b) whose product decomposes at eigenvalue zero only,
// both factors must as well. Pairs whose product is not such an element
// are recorded as skipped.
SuiteReport check_factorially_closed_sample(const Derivation& d,
                                            const std::vector<std::pair<Poly, Poly>>& pairs,
                                            const Caps& caps = {});

// Fixture D = d/dx + y d/dy: monomials x^m y^n are nilpotent exactly
// when n = 0, and the height of f(x) y^n at eigenvalue n is deg f.
SuiteReport check_shift_scale_fingerprint(std::uint64_t seed);

// Fixture D = y d/dy: x^m y^n is a single height-0 part at n, and the
// kernel Q[x] passes the factorially-closed sample.
SuiteReport check_scale_fingerprint(std::uint64_t seed);

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, std::uint64_t seed);
std::vector<SuiteReport> run_suites(const std::string& name_or_all, std::uint64_t seed);

} // namespace algderiv

#endif

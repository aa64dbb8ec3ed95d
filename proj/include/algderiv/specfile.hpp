#ifndef ALGDERIV_SPECFILE_HPP
#define ALGDERIV_SPECFILE_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "algderiv/derivation.hpp"
#include "algderiv/linalg.hpp"

namespace algderiv {

class SpecFileError : public Error {
public:
    explicit SpecFileError(const std::string& what) : Error("spec-file", what) {}
};

/* On-disk description of a derivation. JSON with exact string
 * coefficients ("p/q"); floats are rejected.
 *
 *   { "vars": ["x","y"], "mode": "general",
 *     "images": { "x": "x", "y": "1" } }
 *
 *   { "vars": ["x","y"], "mode": "diagonal",
 *     "weight_symbols": ["w1","w2"],
 *     "weights": { "x": "w1", "y": "w2" } }
 */
struct DerivationSpec {
    std::vector<std::string> vars;
    enum class Mode { General, Diagonal } mode = Mode::General;
    std::map<std::string, std::string> entries; // images or weight expressions
    std::vector<std::string> weight_symbols;
};

DerivationSpec parse_derivation_spec(std::istream& in, const std::string& origin);
DerivationSpec load_derivation_spec(const std::string& path);

struct BuiltDerivation {
    RingPtr ring;
    Derivation derivation;
    WeightSymbolsPtr symbols; // null for general derivations
};

BuiltDerivation build_derivation(const DerivationSpec& spec);

/* On-disk description of a finite matrix group:
 *   { "dimension": 2, "generators": [ [["0","-1"],["1","0"]] ] }
 * Entries are exact rational strings (JSON integers also accepted). */
struct GroupSpec {
    std::size_t dimension = 0;
    std::vector<QMatrix> generators;
};

GroupSpec parse_group_spec(std::istream& in, const std::string& origin);
GroupSpec load_group_spec(const std::string& path);

} // namespace algderiv

#endif

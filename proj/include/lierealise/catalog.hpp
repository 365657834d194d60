#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <lierealise/jets.hpp>
#include <lierealise/liealg.hpp>
#include <lierealise/series.hpp>

namespace lierealise {

struct ParameterSpec {
    enum class Kind { integer, rational, alpha_set };

    std::string name;
    Kind kind = Kind::integer;
    std::optional<long> min;
    bool nonzero = false;
    std::string default_text; // in the --params value syntax
};

// One generator, or a family x^i... for i = from..to (optionally repeated for
// every alpha of the alpha set, with alpha and r_alpha bound).
struct GeneratorTemplate {
    std::string text;
    std::optional<std::string> index;
    std::string from;
    std::string to;
    bool for_each_alpha = false;
};

struct CrossReference {
    std::string id;
    std::string params;
    std::string when;
    std::string note;
};

struct CatalogEntry {
    std::string id;
    int table = 0;
    std::string type;
    std::optional<int> case_number;
    std::vector<std::string> labels;
    std::vector<ParameterSpec> params;
    std::vector<GeneratorTemplate> generators;
    std::optional<CrossReference> equivalent_to;

    bool has_exp() const;
};

const std::vector<CatalogEntry> &catalog();
// Throws Error(unknown_entry).
const CatalogEntry &find_entry(std::string_view id);

struct AlphaMultiplicity {
    Rational alpha;
    unsigned r = 0;
    friend bool operator==(const AlphaMultiplicity &, const AlphaMultiplicity &) = default;
};

struct CatalogParams {
    std::map<std::string, Rational> values;
    std::vector<AlphaMultiplicity> alphas;
    friend bool operator==(const CatalogParams &, const CatalogParams &) = default;
};

// "r=2,lambda=-1/2" and "alphas=1:2;-1/2:0". Missing parameters take their
// defaults; out-of-range or unknown ones throw Error(invalid_argument).
CatalogParams parse_params(const CatalogEntry &entry, std::string_view text);
CatalogParams default_params(const CatalogEntry &entry);
void validate_params(const CatalogEntry &entry, const CatalogParams &params);
std::string to_string(const CatalogEntry &entry, const CatalogParams &params);

// Structure of a finite family of vector fields read off from their
// truncations: linear independence, closure and constants in the family's
// basis, isotropy (kernel of the value at the origin) and a complement made
// of the first generators with independent values at the origin.
struct FieldAbstraction {
    std::size_t n_vars = 0;
    int checked_degree = -1;
    bool independent = false;
    bool closed = false;
    std::optional<std::pair<std::size_t, std::size_t>> open_bracket;
    std::optional<StructureConstants> constants;
    JacobiCheck jacobi;
    std::size_t value_rank = 0;
    std::vector<Vector> isotropy;
    std::vector<std::size_t> complement_indices;
    std::optional<TransitivePair> pair;

    bool transitive() const { return value_rank == n_vars; }
};

FieldAbstraction abstract_fields(const std::vector<TruncatedVectorField> &fields,
                                 const std::vector<std::string> &names);

// Coefficients c with X = sum c_i basis_i through total degree d, if any.
std::optional<Vector> span_coordinates(const std::vector<TruncatedVectorField> &basis, const TruncatedVectorField &X,
                                       int d);

struct Instance {
    std::string id;
    CatalogParams params;
    int degree = 0;
    std::vector<std::string> names; // X1, X2, ...
    std::vector<std::string> texts; // generator templates with parameters substituted
    std::vector<TruncatedVectorField> generators;
    LieAlgebra algebra;
    TransitivePair pair;
};

// Generators are expanded to max(degree, count + 2) so that the truncations
// stay independent. Throws Error(invalid_argument) for bad parameters and
// Error(bracket_not_closed) if the family does not close.
Instance instantiate(std::string_view id, const CatalogParams &params, int degree);
Instance instantiate(std::string_view id, int degree);

struct EntryReport {
    std::string id;
    std::size_t generator_count = 0;
    std::size_t dimension = 0;
    int checked_degree = -1;
    bool independent = false;
    bool closed = false;
    bool transitive = false;
    bool jacobi = false;
    std::optional<bool> containment; // Table 1 chain (5) ⊂ (6) ⊂ (8)
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

EntryReport verify_fields(const std::vector<TruncatedVectorField> &fields);
EntryReport verify_entry(std::string_view id, const CatalogParams &params, int degree);

// The three Table 1 families nest as (5) ⊂ (6) ⊂ (8).
bool table1_chain_holds(int degree);

// Parameter choices covering r <= 3, lambda in {1, -1, 2, 1/2} and alpha sets
// of size at most two.
std::vector<CatalogParams> parameter_sweep(const CatalogEntry &entry);

struct OneVarFixture {
    std::string name;
    std::vector<std::string> texts;
    std::vector<TruncatedVectorField> fields;
    bool transitive = false;
};

// <p>, <p, xp>, <p, xp, x^2 p>, <xp> and <xp, x^i p> for i = 2..4.
std::vector<OneVarFixture> one_var_classification_fixtures(int degree = 6);

// Requires polynomial generators. One flag per generator.
std::vector<bool> check_table_entry_symmetry(std::string_view id, const CatalogParams &params,
                                             const ExplicitOde &ode);

} // namespace lierealise

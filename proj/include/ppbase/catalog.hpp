#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ppbase/group.hpp"

namespace ppbase {

inline constexpr int kGroupFileSchemaVersion = 1;

// Recipe for a named catalog group. Compound kinds (direct_product,
// wreath_sym) nest component specs in `parts`.
struct GroupSpec {
    std::string kind;
    std::vector<long long> params;
    std::vector<GroupSpec> parts;
    std::vector<std::vector<unsigned>> matrix;  // semidirect action
    unsigned raw_degree = 0;
    std::vector<std::string> raw_gens;          // cycle strings, raw kind
    std::string name;
};

PermGroup construct(const GroupSpec& spec);

// Closed-form order of the spec'd group (used to cross-check constructors).
std::uint64_t spec_order(const GroupSpec& spec);

PermGroup direct_product(const PermGroup& A, const PermGroup& B);

// Imprimitive wreath product H wr Sym(n) on degree(H) * n points.
PermGroup wreath_sym(const PermGroup& H, unsigned n);

struct NamedGroup {
    std::string name;
    PermGroup group;
};

// Group file I/O. JSON with fields {schema_version, name, degree, generators},
// generators in 1-based cycle notation.
NamedGroup load_group(const std::string& path);
void save_group(const PermGroup& G, const std::string& name, const std::string& path);

// Built-in named groups used by the test and acceptance suites.
const std::vector<GroupSpec>& catalog_specs();
std::vector<std::string> catalog_names();
bool catalog_has(const std::string& name);
PermGroup catalog_group(const std::string& name);

// Writes every catalog group as a file <dir>/<name>.json.
void write_catalog_dir(const std::string& dir);

// Resolves "name" or a constructor string like "sym(5)", "cyclic(12)",
// "elem_abelian(3,2)" or "scalar_ext(2,3,1,7)".
GroupSpec parse_group_spec(const std::string& text);

}  // namespace ppbase

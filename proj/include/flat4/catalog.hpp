#pragma once

#include "flat4/group.hpp"

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace flat4 {

/// d(A, B, ...) or diag(...): block-diagonal matrix. Blocks: 1, I, I~, J, J~, T, T^t, K,
/// each optionally prefixed with '-'.
IntMatrix parse_block_matrix(std::string_view text);

/// "e1/4 + (e2+e4)/2" style translation vectors in dimension 4.
RatVector parse_translation(std::string_view text);

struct ExpectedInvariants {
    int beta1 = 0;
    int beta2 = 0;
    bool orientable = false;
    bool diagonal = false;
    std::optional<std::array<int, 6>> sunada;
};

struct CatalogEntry {
    std::string id;
    std::string source_table;
    std::string holonomy_name;
    std::vector<AffineIsometry> generators;
    ExpectedInvariants expected;
    std::string note;
};

/// Printed rows kept in the file but not built, with the reason.
struct ExcludedEntry {
    std::string id;
    std::string source_table;
    std::string reason;
    std::string build_error;  // what build_group reports for the printed generators
};

struct CatalogIssue {
    std::string id;
    std::string message;
};

class Catalog {
public:
    int schema_version = 0;
    int declared_count = 0;
    std::vector<CatalogEntry> entries;
    std::vector<BieberbachGroup> groups;  // parallel to entries
    std::vector<ExcludedEntry> excluded;

    const BieberbachGroup& group(std::string_view id) const;
    const CatalogEntry& entry(std::string_view id) const;
    bool contains(std::string_view id) const;
    std::size_t size() const { return groups.size(); }
};

struct CatalogLoad {
    Catalog catalog;
    std::vector<CatalogIssue> issues;
    bool ok() const { return issues.empty(); }
};

/// Parses and validates every entry, collecting all problems.
CatalogLoad load_catalog_checked(const std::filesystem::path& path);
CatalogLoad load_catalog_from_string(std::string_view json_text);

/// Throws CatalogError (naming the entry) unless the whole catalog validates.
Catalog load_catalog(const std::filesystem::path& path);

/// FLAT4SPEC_CATALOG if set, else the catalog shipped with the build.
std::filesystem::path default_catalog_path();

/// Ordering on ids like "3", "3'", "10''": by number, then by number of primes.
bool id_less(std::string_view a, std::string_view b);

}  // namespace flat4

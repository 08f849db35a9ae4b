#pragma once

#include "flat4/group.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace flat4 {

enum class Mode { p0, p1, p2, p3, p4, all_p, sunada, L, bracketL };

/// "p0".."p4", "all-p", "sunada", "L", "bracketL"; throws Error otherwise.
Mode parse_mode(std::string_view name);
std::string mode_name(Mode m);

bool p_isospectral(const BieberbachGroup& a, const BieberbachGroup& b, int p);
/// Throws NotDiagonalType.
bool sunada_isospectral(const BieberbachGroup& a, const BieberbachGroup& b);
bool L_isospectral(const BieberbachGroup& a, const BieberbachGroup& b);
/// Equal length multiplicities for every squared length up to the bound.
/// Throws NonabelianUnsupported.
bool bracketL_agree(const BieberbachGroup& a, const BieberbachGroup& b, const Rational& bound);

/// A squared length below the bound where the multiplicities differ, if any.
std::optional<Rational> bracketL_witness(const BieberbachGroup& a, const BieberbachGroup& b, const Rational& bound);

struct ClassifyParams {
    Rational bound{3};  // bracketL only
};

struct ReportError {
    std::string id;
    std::string message;
};

struct ClassificationReport {
    Mode mode = Mode::p0;
    ClassifyParams params;
    /// Groups outside the mode's domain (non-diagonal for sunada, nonabelian for bracketL).
    std::vector<std::string> skipped;
    /// Non-singleton classes, ids in natural order, classes ordered by their first id.
    std::vector<std::vector<std::string>> classes;
    std::vector<ReportError> errors;

    std::string to_json() const;
    std::string to_text() const;
};

ClassificationReport classify_all(const std::vector<BieberbachGroup>& groups, Mode mode,
                                  const ClassifyParams& params = {});

}  // namespace flat4

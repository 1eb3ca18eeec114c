#pragma once

// Text, JSON and CSV renderings of evaluation results and report tables.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polylog/constants.hpp"
#include "polylog/eval_result.hpp"
#include "polylog/identity.hpp"

namespace polylog {

enum class Format { text, json, csv };

/// "text", "json" or "csv"; nullopt otherwise.
std::optional<Format> parse_format(std::string_view s);

std::string format_eval(std::string_view function, const EvalResult& r, Format f);

/// Rows keep their order. JSON is an array of objects with the fields
/// identity_id, n_points, max_residual, tol, pass, expected_fail, notes.
std::string format_report(const std::vector<ReportRow>& rows, Format f);

/// Each entry with its closed form, numeric value, library value and residual.
std::string format_constants(const std::vector<ConstantEntry>& entries, Format f);

/// d2 followed by each relation's prediction, independent li2 value and residual.
std::string format_d2(double d2, const std::vector<D2Relation>& ledger, Format f);

}  // namespace polylog

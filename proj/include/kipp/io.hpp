#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "kipp/classify.hpp"
#include "kipp/homogeneous_polynomial.hpp"
#include "kipp/reports.hpp"
#include "kipp/types.hpp"

namespace kipp {

struct CampaignConfig;
struct CampaignSummary;
struct TrialRecord;

using Json = nlohmann::json;

// Complex numbers are [re, im] pairs throughout.
Json to_json(Complex z);
Complex complex_from_json(const Json& j);

/// {"dim": n, "entries": [[re, im], ...]} with n * n entries in row-major
/// order. Parsing throws MalformedInput on any shape or type mismatch.
Json to_json(const ComplexMatrix& a);
ComplexMatrix matrix_from_json(const Json& j);
ComplexMatrix read_matrix_file(const std::filesystem::path& path);

/// {"degree": d, "terms": [{"x": i, "y": j, "z": k, "coeff": c}, ...]}
Json to_json(const HomoPoly3& p);

Json to_json(const DiscFit& fit);
Json to_json(const CurveComponent& c);
Json to_json(const ConditionReport& r);

/// {"components": [...], "discFit": {...}, "reports": [...]}
Json classification_json(const std::vector<CurveComponent>& components, const DiscFit& disc,
                         const std::vector<ConditionReport>& reports);

Json to_json(const TrialRecord& r);
Json to_json(const CampaignConfig& c);
Json to_json(const CampaignSummary& s);

/// Writes `text` to `path`, creating parent directories.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace kipp

#pragma once

#include "vinberg/bounds.hpp"
#include "vinberg/engine.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace vinberg {

inline constexpr const char* kReportSchema = "vinberg-report/1";
inline constexpr const char* kVersion = "0.3.0";

struct ReportInput {
    const QuadraticForm& form;
    const ControlVector& u0;
    const RunConfig& config;
    const ConstantsRegistry* registry = nullptr;
};

// 2-D area (in units of pi) of a finite-volume verdict, from the polygon's
// side cycle; nullopt otherwise.
std::optional<Rational> polygon_area(const RunVerdict& verdict, const QuadraticForm& form);

// Canonical report document. Every lattice quantity is a decimal string and
// rationals are "p/q". Only the "timing" member depends on the machine.
nlohmann::json build_report(const ReportInput& input, const RunVerdict& verdict);

std::string summary_text(const ReportInput& input, const RunVerdict& verdict);

// Sorted keys, two-space indent, LF line endings, trailing newline.
std::string canonical_json(const nlohmann::json& j);

// Writes through a temporary file in the same directory and renames it over
// the target. Failures raise Error("io") naming the path.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

void write_report(const nlohmann::json& report, const std::filesystem::path& path);

} // namespace vinberg

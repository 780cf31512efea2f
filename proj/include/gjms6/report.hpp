#pragma once

#include <gjms6/dim_rational.hpp>
#include <gjms6/rational.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace gjms6 {

enum class Status { match, mismatch, documented_discrepancy };
enum class Provenance { paper, derived, trivial };

std::string to_string(Status s);
std::string to_string(Provenance p);

struct ReportRecord {
    std::string claim_id;
    std::string expected;
    std::string computed;
    Status status = Status::match;
    Provenance provenance = Provenance::derived;
};

struct Report {
    std::vector<ReportRecord> claims;
    nlohmann::json config = nlohmann::json::object();

    void add(std::string id, std::string expected, std::string computed, Status status, Provenance provenance);
    /// Exact comparison.
    void add_exact(std::string id, const Rational& expected, const Rational& computed, Provenance provenance);
    void add_exact(std::string id, const DimRational& expected, const DimRational& computed, Provenance provenance);
    /// Relative comparison |computed - expected| <= tol * |expected|.
    void add_close(std::string id, double expected, double computed, double tol, Provenance provenance);

    bool any_mismatch() const;
};

inline constexpr const char* kVersion = "0.1.0";

/// %.17g
std::string format_double(double x);

nlohmann::json to_json(const Report& r);
/// Header row plus one line per record.
std::string to_csv(const Report& r);

/// 0 when every record matches or is a documented discrepancy, else 1.
int exit_code(const Report& r);

} // namespace gjms6

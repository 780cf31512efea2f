#include <gjms6/report.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace gjms6 {

std::string to_string(Status s) {
    switch (s) {
    case Status::match: return "match";
    case Status::mismatch: return "mismatch";
    case Status::documented_discrepancy: return "documented-discrepancy";
    }
    return "mismatch";
}

std::string to_string(Provenance p) {
    switch (p) {
    case Provenance::paper: return "paper";
    case Provenance::derived: return "derived";
    case Provenance::trivial: return "trivial";
    }
    return "derived";
}

void Report::add(std::string id, std::string expected, std::string computed, Status status, Provenance provenance) {
    claims.push_back({std::move(id), std::move(expected), std::move(computed), status, provenance});
}

void Report::add_exact(std::string id, const Rational& expected, const Rational& computed, Provenance provenance) {
    add(std::move(id), to_string(expected), to_string(computed), expected == computed ? Status::match : Status::mismatch,
        provenance);
}

void Report::add_exact(std::string id, const DimRational& expected, const DimRational& computed, Provenance provenance) {
    add(std::move(id), expected.str(), computed.str(), expected == computed ? Status::match : Status::mismatch, provenance);
}

void Report::add_close(std::string id, double expected, double computed, double tol, Provenance provenance) {
    const bool ok = std::isfinite(computed) && std::abs(computed - expected) <= tol * std::abs(expected);
    add(std::move(id), format_double(expected), format_double(computed), ok ? Status::match : Status::mismatch, provenance);
}

bool Report::any_mismatch() const {
    for (const auto& c : claims) {
        if (c.status == Status::mismatch) return true;
    }
    return false;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

nlohmann::json to_json(const Report& r) {
    nlohmann::json claims = nlohmann::json::array();
    for (const auto& c : r.claims) {
        claims.push_back({{"claim_id", c.claim_id},
                          {"expected", c.expected},
                          {"computed", c.computed},
                          {"status", to_string(c.status)},
                          {"provenance", to_string(c.provenance)}});
    }
    return {{"claims", claims}, {"config", r.config}, {"version", kVersion}};
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

} // namespace

std::string to_csv(const Report& r) {
    std::ostringstream os;
    os << "claim_id,expected,computed,status,provenance\n";
    for (const auto& c : r.claims) {
        os << csv_field(c.claim_id) << ',' << csv_field(c.expected) << ',' << csv_field(c.computed) << ','
           << to_string(c.status) << ',' << to_string(c.provenance) << '\n';
    }
    return os.str();
}

int exit_code(const Report& r) { return r.any_mismatch() ? 1 : 0; }

} // namespace gjms6

#pragma once

// Verification report shared by every suite.

#include "lz/exactring.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace lz {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

struct Mismatch {
    std::string monomial;  // canonical text, or "-" for non-series failures
    std::string lhs;
    std::string rhs;
};

struct IdentityReport {
    std::string id;
    json params = json::object();
    bool pass = true;
    std::optional<Mismatch> mismatch;
    double elapsed_ms = 0;
    std::vector<std::string> flags;
    json details = json::object();

    // records only the first mismatch
    void fail(Mismatch m);
    void fail(const std::string& what) { fail(Mismatch{"-", what, ""}); }
    void flag(const std::string& f);
};

void to_json(json& j, const IdentityReport& r);
void from_json(const json& j, IdentityReport& r);

// first differing coefficient of two series, as a Mismatch
std::optional<Mismatch> series_mismatch(const BiSeries& lhs, const BiSeries& rhs);
std::optional<Mismatch> scalar_mismatch(const std::string& label, const Scalar& lhs, const Scalar& rhs);

class Stopwatch {
public:
    Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
    double ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

}  // namespace lz

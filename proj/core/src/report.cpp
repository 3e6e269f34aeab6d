#include "lz/report.hpp"

#include <algorithm>

namespace lz {

void IdentityReport::fail(Mismatch m)
{
    pass = false;
    if (!mismatch)
        mismatch = std::move(m);
}

void IdentityReport::flag(const std::string& f)
{
    if (std::find(flags.begin(), flags.end(), f) == flags.end())
        flags.push_back(f);
}

void to_json(json& j, const IdentityReport& r)
{
    j = json{{"id", r.id}, {"params", r.params}, {"pass", r.pass}, {"elapsed_ms", r.elapsed_ms},
             {"flags", r.flags}, {"details", r.details}};
    if (r.mismatch)
        j["mismatch"] = {{"monomial", r.mismatch->monomial}, {"lhs", r.mismatch->lhs}, {"rhs", r.mismatch->rhs}};
    else
        j["mismatch"] = nullptr;
}

void from_json(const json& j, IdentityReport& r)
{
    r.id = j.at("id").get<std::string>();
    r.params = j.at("params");
    r.pass = j.at("pass").get<bool>();
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    r.flags = j.at("flags").get<std::vector<std::string>>();
    r.details = j.value("details", json::object());
    r.mismatch.reset();
    if (!j.at("mismatch").is_null()) {
        const auto& m = j["mismatch"];
        r.mismatch = Mismatch{m.at("monomial"), m.at("lhs"), m.at("rhs")};
    }
}

std::optional<Mismatch> series_mismatch(const BiSeries& lhs, const BiSeries& rhs)
{
    auto d = lhs.first_difference(rhs);
    if (!d)
        return std::nullopt;
    auto [ex, ey] = *d;
    return Mismatch{monomial_text(1, ex, ey, 0), lhs.at(ex, ey).str(), rhs.at(ex, ey).str()};
}

std::optional<Mismatch> scalar_mismatch(const std::string& label, const Scalar& lhs, const Scalar& rhs)
{
    if (lhs == rhs)
        return std::nullopt;
    return Mismatch{label, lhs.str(), rhs.str()};
}

}  // namespace lz

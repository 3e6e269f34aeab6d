// One PASS/FAIL line per acceptance criterion. Exit status 0 iff all pass.

#include "lz/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

using namespace lz;

namespace {

struct Run {
    std::vector<IdentityReport> reports;
    double ms = 0;
};

Run run(std::vector<std::string> only)
{
    SuiteConfig c;
    c.only = std::move(only);
    Stopwatch sw;
    SuiteResult r = run_suite(c);
    return {std::move(r.reports), sw.ms()};
}

bool all_pass(const Run& r, std::string& why)
{
    for (const auto& x : r.reports)
        if (!x.pass) {
            why = x.id + " failed";
            if (x.mismatch) why += " at " + x.mismatch->monomial + ": " + x.mismatch->lhs + " vs " + x.mismatch->rhs;
            return false;
        }
    return !r.reports.empty();
}

bool has_flag(const IdentityReport& r, const std::string& f)
{
    return std::find(r.flags.begin(), r.flags.end(), f) != r.flags.end();
}

const IdentityReport& find(const Run& r, const std::string& id)
{
    for (const auto& x : r.reports)
        if (x.id == id) return x;
    throw std::out_of_range("missing cell " + id);
}

struct Criterion {
    int n;
    std::string what;
    double limit_ms;
    std::function<bool(std::string&, double&)> check;
};

bool within(double ms, double limit, std::string& why)
{
    if (ms <= limit) return true;
    why = "took " + std::to_string(long(ms)) + " ms, limit " + std::to_string(long(limit));
    return false;
}

// run the given cells, require all pass plus `extra`, inside the time limit
std::function<bool(std::string&, double&)> cells(std::vector<std::string> only, double limit,
                                                 std::function<bool(const Run&, std::string&)> extra = {})
{
    return [=](std::string& why, double& ms) {
        const Run r = run(only);
        ms = r.ms;
        if (!all_pass(r, why)) return false;
        if (extra && !extra(r, why)) return false;
        return within(r.ms, limit, why);
    };
}

}  // namespace

int main()
{
    const double minute = 60e3;
    std::vector<Criterion> crit = {
        {1, "GL character product identity, n 2..4, k,j 0..5, 3 seeds", minute,
         cells({"identities:schur-gl"}, minute)},
        {2, "Sp character product identity, n 2..3, k,j 1..4, 3 seeds", minute,
         cells({"identities:schur-sp"}, minute)},
        {3, "G-function closed form vs intermediate form, ord 0..10", 1e3,
         cells({"identities:g-function"}, 1e3)},
        {4, "Cauchy expansions (a)-(e), 3 seeds", 5 * minute,
         cells({"cauchy"}, 5 * minute,
               [](const Run& r, std::string& why) {
                   if (r.reports.size() != 5) {
                       why = "expected 5 cauchy cells";
                       return false;
                   }
                   if (!has_flag(find(r, "cauchy:c"), "n6=0")) {
                       why = "cauchy:c missing the n6=0 restriction";
                       return false;
                   }
                   return true;
               })},
        {5, "MultiGL n 2..4 and MultiGSpin n 2..3, box (10,10)", 10 * minute,
         cells({"zeta:multi-gl", "zeta:multi-gspin"}, 10 * minute)},
        {6, "GSpinGL(2,n) n 4,5; GSpinGL(m,3) m 2,3; GSpinGL(3,2)", 15 * minute,
         cells({"zeta:gspin5-gl", "zeta:gspin-gl3", "zeta:gspin-gl2"}, 15 * minute,
               [](const Run& r, std::string& why) {
                   if (!has_flag(find(r, "zeta:gspin-gl2(3)"), "derived-reduction")) {
                       why = "gspin-gl2(3) lacks the derived-reduction flag";
                       return false;
                   }
                   return r.reports.size() == 5;
               })},
        {7, "D5 x-box 12 and D4 box (8,8)", 5 * minute,
         cells({"zeta:d5", "zeta:d4"}, 5 * minute,
               [](const Run& r, std::string& why) {
                   if (find(r, "zeta:d4").details["notes"].empty()) {
                       why = "D4 report does not record the re-derived dictionary";
                       return false;
                   }
                   return true;
               })},
        {8, "GlueGLGL (2,2),(2,3) box (8,8); GlueGLGSpin, GlueGSpinGSpin (2,2) box (6,6)", 15 * minute,
         cells({"zeta:glue-gl-gl", "zeta:glue-gl-gspin", "zeta:glue-gspin-gspin"}, 15 * minute,
               [](const Run& r, std::string& why) {
                   for (const char* id : {"zeta:glue-gl-gspin(2,2)", "zeta:glue-gspin-gspin(2,2)"})
                       if (!has_flag(find(r, id), "derived-reduction")) {
                           why = std::string(id) + " lacks the derived-reduction flag";
                           return false;
                       }
                   return r.reports.size() == 4;
               })},
        {9, "orbits over F_3: 3 GL2xGL2 orbits {1,32,48}; 5 GSp4xGL3 orbits separating xi_0..xi_4", 3 * minute,
         cells({"orbits"}, 3 * minute,
               [](const Run& r, std::string& why) {
                   const json& a = find(r, "orbits:GL2GL2_on_Mat1x4(3)").details;
                   std::multiset<long> sizes;
                   std::set<int> ranks;
                   for (const auto& o : a["orbits"]) {
                       sizes.insert(o["size"].get<long>());
                       ranks.insert(o["invariant"][0].get<int>());
                   }
                   if (sizes != std::multiset<long>{1, 32, 48} || ranks != std::set<int>{0, 1, 2}) {
                       why = "GL2xGL2 orbit census differs";
                       return false;
                   }
                   const json& b = find(r, "orbits:GSp4GL3_on_Mat1x12(3)").details;
                   std::set<int> hit(b["rep_orbit"].begin(), b["rep_orbit"].end());
                   std::set<std::vector<int>> inv;
                   for (const auto& v : b["rep_invariant"]) inv.insert(v.get<std::vector<int>>());
                   if (b["orbit_count"] != 5 || hit.size() != 5 || inv.size() != 5) {
                       why = "xi representatives are not separated";
                       return false;
                   }
                   return true;
               })},
        {10, "stabilizers of every gamma_r and omega_t, 200 samples at p = 5", 2 * minute,
         cells({"stabilizers:gl4prime", "stabilizers:gsp4"}, 2 * minute,
               [](const Run& r, std::string& why) {
                   for (const auto& x : r.reports)
                       if (x.params.value("samples", 0) < 200) {
                           why = x.id + " used fewer than 200 samples";
                           return false;
                       }
                   return r.reports.size() == 7;
               })},
        {11, "ten maps over F_101 (100) and Q (20); GSpin4 / GSpin6 pinnings", 2 * minute,
         cells({"maps", "pinning"}, 2 * minute,
               [](const Run& r, std::string& why) {
                   if (r.reports.size() != 24) {
                       why = "expected 20 map cells and 4 pinning cells";
                       return false;
                   }
                   return true;
               })},
        {12, "every verified series identity has even-only (x, y) support", 30 * minute,
         [](std::string& why, double& ms) {
             const Run r = run({"cauchy", "zeta"});
             ms = r.ms;
             for (const auto& x : r.reports) {
                 bool even = x.pass;
                 if (x.id.rfind("zeta:", 0) == 0) even = even && has_flag(x, "even-support-asserted");
                 else
                     for (const auto& s : x.details["ranks"]) even = even && s["details"]["even_support"] == true;
                 if (!even) {
                     why = x.id + " has odd support or no assertion";
                     return false;
                 }
             }
             return r.reports.size() == 21;
         }},
    };

    int failed = 0;
    for (const auto& c : crit) {
        std::string why;
        double ms = 0;
        bool ok = false;
        try {
            ok = c.check(why, ms);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        failed += !ok;
        std::printf("%s criterion %2d: %s  (%.0f ms)%s%s\n", ok ? "PASS" : "FAIL", c.n, c.what.c_str(), ms,
                    why.empty() ? "" : "  -- ", why.c_str());
    }
    std::printf("%d/%zu criteria passed\n", int(crit.size()) - failed, crit.size());
    return failed ? 1 : 0;
}

#include "lz/harness.hpp"

#include "lz/identities.hpp"
#include "lz/lfactor.hpp"
#include "lz/matgroups.hpp"
#include "lz/zeta.hpp"

#include <gmp.h>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <thread>

namespace lz {

// ---------------------------------------------------------------- registry

namespace {

std::vector<CaseDescriptor> build_registry()
{
    std::vector<CaseDescriptor> r;
    auto add = [&](CaseDescriptor c) { r.push_back(std::move(c)); };

    add({"2.1", "2", "GL_m x GL_n", "std_m (x) std_n",
         {{"m=n>=2", "GL_n x GL_n", "GL_n", "T(std_n)", "1"},
          {"m>n>=2", "GL_m x GL_n", "GL_n", "0", "([m-n,1^n],1)"}},
         {{"m", 2, {}}, {"n", 2, {}}}, "", "JPSS", false, false, false, {}, {}});
    add({"2.2", "2", "GL_n", "wedge^2",
         {{"n=2m>=4", "GL_2m", "GL_m", "T(std_m)", "[2^m]"}, {"n=2m+1>4", "GL_2m+1", "GL_m", "0", "[2^m,1]"}},
         {{"n", 4, {}}}, "", "JS", false, false, false, {}, {}});
    add({"2.4", "2", "GL_n", "std_n", {{"", "GL_n", "GL_1", "0", "[n-1,1]"}}, {{"n", 3, {}}}, "", "GGP", false,
         false, false, {}, {}});
    add({"2.5", "2", "Sp_2m", "std_2m", {{"", "SO_2m+1", "SO_2", "0", "[2m-1,1^2]"}}, {{"m", 2, {}}}, "", "N95",
         false, false, false, {}, {}});
    add({"2.6/n=2", "2", "GSp_2m x GL_2", "std_2m (x) std_2",
         {{"m>=2", "GSpin_2m+1 x GL_2", "GSpin_4", "T(std_2) + T(std_2)", "[2m-3,1^4]"}},
         {{"m", 3, {}}}, "", "N,S", true, false, false, {"gspin-gl2"}, {"a"}});
    add({"2.6/m=2", "2", "GSp_4 x GL_n", "std_4 (x) std_n",
         {{"n=4", "GSp_4 x GL_4", "GSp_4 x GL_4", "std_GSp4 (x) wedge^2_GL4 + T(std_GL4)", "1"},
          {"n>=5", "GSp_4 x GL_n", "S'(GSp_4 x GL_4)", "std_4 (x) wedge^2_GL4", "(1,[n-4,1^4])"}},
         {{"n", 4, {}}}, "", "", true, false, false, {"gspin5-gl"}, {"b"}});
    add({"2.6/n=3", "2", "GSp_2m x GL_3", "std_2m (x) std_3",
         {{"m=2", "GSp_4 x GL_3", "GSp_4 x GL_3", "T(std_4 (x) std_3)", "1"},
          {"m>=3", "GSpin_2m+1 x GL_3", "GSpin_6 x GL_3", "T(HSpin_6 (x) std_3)", "([2m-5,1^6],1)"}},
         {{"m", 2, {}}}, "omega_tau omega_pi = 1", "ACS", true, false, false, {"gspin-gl3"}, {"c"}});
    add({"2.7", "2", "GSO_2n", "std_2n", {{"", "GSpin_2n", "GSpin_3", "T(std_2)", "[2n-3,1^3]"}}, {{"n", 2, {}}},
         "", "E,GGP", false, false, false, {}, {}});
    add({"2.8/n=7", "2", "GSpin_7", "Spin_7", {{"", "GSp_6", "GL_2", "T(std_2)", "[3^2]"}}, {}, "", "BG", false,
         false, false, {}, {}});
    add({"2.8/n=9", "2", "GSpin_9", "Spin_9", {{"", "GSp_8", "S(SL_2 x SL_2)", "T(std_2,2)", "[3^2,1^2]"}}, {},
         "", "BG", false, false, false, {}, {}});
    add({"2.8/n=10", "2", "GSpin_10", "Spin", {{"", "GSO_10", "GL_2", "0", "[4^2,1^2]"}}, {}, "", "Gin95a",
         true, false, false, {"d5"}, {"e"}});
    add({"2.10", "2", "E_6", "std_E6", {{"", "E_6", "GL_3", "T(std_GL3)", "D_4"}}, {}, "", "Gin95", false, false,
         false, {}, {}});

    add({"22.1", "22+S", "Spin_8", "std + Spin_8",
         {{"", "PGSO_8", "S(GL_2 x GSO_4)", "T(std_2) + T(std_2)", "[2^2,1^4]"}}, {}, "", "", true, false, false,
         {"d4"}, {"d"}});
    add({"22.2", "22+S", "GL_n", "wedge^2 + std_n",
         {{"", "GL_n", "GL_floor(n/2) x GL_ceil(n/2)", "T(std_ceil(n/2))", "1"}}, {{"n", 2, {}}}, "", "BF", false,
         false, false, {}, {}});
    add({"22.3", "22+S", "GL_m x GL_n", "std_m (x) std_n + std_n",
         {{"m=n>=3", "GL_n x GL_n", "GL_n x GL_n", "T(std_n (x) std_n) + T(std_n)", "1"},
          {"m>=n+1>=4", "GL_m x GL_n", "GL_n x GL_n", "T(std_n (x) std_n)", "([m-n,1^n],1)"},
          {"n-1=m>=2", "GL_n-1 x GL_n", "GL_n-1 x GL_n", "T(std_n-1 (x) std_n) + T(std_n)", "1"},
          {"2<=m<=n-2", "GL_m x GL_n", "GL_m x GL_m+1", "T(std_m (x) std_m+1)", "(1,[n-m-1,1^(m+1)])"}},
         {{"m", 2, {}}, {"n", 2, {}}}, "", "Sak,GS,Ha", false, false, false, {}, {}});
    add({"22.4", "22+S", "GL_n", "std_n + std_n",
         {{"n=2", "GL_2", "GL_2", "T(std_2) + T(std_2)", "1"}, {"n>2", "GL_n", "GL_2", "T(std_2)", "[n-2,1^2]"}},
         {{"n", 2, {}}}, "", "", true, false, false, {"multi-gl"}, {}});
    add({"22.5", "22+S", "GSp_2n", "std_2n + std_2n",
         {{"", "GSpin_2n+1", "GSpin_4", "T(std_2) + T(std_2)", "[2n-3,1^4]"}}, {{"n", 2, {}}}, "", "", true, false,
         false, {"multi-gspin"}, {}});
    add({"S10+S11", "22+S", "GL_2 x GL_n", "std_2 + std_2 (x) std_n",
         {{"n=2", "GL_2 x GL_2", "GL_2 x GL_2", "T(std_2) + T(std_2 (x) std_2)", "1"},
          {"n>=3", "GL_2 x GL_n", "GL_2 x GL_2", "T(std_2 (x) std_2)", "(1,[n-2,1^2])"}},
         {{"n", 2, {}}}, "", "", false, true, false, {}, {}});
    add({"S10+S14", "22+S", "GL_2 x GSp_2n", "std_2 + std_2 (x) std_2n",
         {{"", "GL_2 x GSpin_2n+1", "G(SL_2 x SL_2) x GL_2", "T(std_2 (x) std_2) + T(std_2)", "(1,[2n-3,1^4])"}},
         {{"n", 2, {}}}, "", "", false, true, false, {}, {}});
    add({"S11+S11", "22+S", "GL_m x GL_2 x GL_n", "std_m (x) std_2 + std_2 (x) std_n",
         {{"m=n=2", "GL_2 x GL_2 x GL_2", "S(GL_2^3)", "T(std_2) + T(std_2) + std_2^(x)3", "1"},
          {"m=2,n>=3", "GL_2 x GL_2 x GL_n", "S(GL_2^3)", "T(std_2) + std_2^(x)3", "(1,1,[n-2,1^2])"},
          {"m,n>=3", "GL_m x GL_2 x GL_n", "S(GL_2^3)", "std_2^(x)3", "([m-2,1^2],1,[n-2,1^2])"}},
         {{"m", 2, {}}, {"n", 2, {}}}, "", "", true, false, false, {"glue-gl-gl"}, {}});
    add({"S11+S14", "22+S", "GL_m x GL_2 x GSp_2n", "std_m (x) std_2 + std_2 (x) std_2n",
         {{"m=2", "GL_2 x GL_2 x GSpin_2n+1", "S''(GL_2^4)", "T(std_2) + T(std_2) + std_2^(x)3", "(1,1,[2n-3,1^4])"},
          {"m>=3", "GL_m x GL_2 x GSpin_2n+1", "S''(GL_2^4)", "T(std_2) + std_2^(x)3", "([m-2,1^2],1,[2n-3,1^4])"}},
         {{"m", 2, {}}, {"n", 2, {}}}, "", "", true, false, false, {"glue-gl-gspin"}, {}});
    add({"S14+S14", "22+S", "GSp_2m x GL_2 x GSp_2n", "std_2m (x) std_2 + std_2 (x) std_2n",
         {{"", "GSpin_2m+1 x GL_2 x GSpin_2n+1", "S*(GL_2^5)", "T(std_2) + T(std_2) + std_2^(x)3",
           "([2m-3,1^4],1,[2n-3,1^4])"}},
         {{"m", 2, {}}, {"n", 2, {}}}, "", "", true, false, false, {"glue-gspin-gspin"}, {}});

    add({"2.3", "disconnected", "GL_n", "Sym^2", {}, {{"n", 2, {}}}, "", "BG1,P-PS,T", false, false, true, {}, {}});
    add({"2.7/SO", "disconnected", "SO_2k+1", "std_2k+1", {}, {{"k", 1, {}}}, "", "GRS,Y1", false, false, true,
         {}, {}});
    add({"2.9", "disconnected", "G_2", "std_G2", {}, {}, "", "G93", false, false, true, {}, {}});
    return r;
}

}  // namespace

const std::vector<CaseDescriptor>& list_cases()
{
    static const std::vector<CaseDescriptor> reg = build_registry();
    return reg;
}

const CaseDescriptor& describe_case(const std::string& id)
{
    for (const auto& c : list_cases())
        if (c.id == id) return c;
    throw std::out_of_range("unknown registry id: " + id);
}

const CaseDescriptor& case_for_zeta(const std::string& kind)
{
    for (const auto& c : list_cases())
        if (std::find(c.zeta_cases.begin(), c.zeta_cases.end(), kind) != c.zeta_cases.end()) return c;
    throw std::out_of_range("no registry entry for zeta case " + kind);
}

void to_json(json& j, const CaseDescriptor& c)
{
    json q = json::array();
    for (const auto& x : c.quadruples)
        q.push_back({{"when", x.when}, {"G", x.G}, {"H", x.H}, {"rho_H", x.rho_H}, {"iota", x.iota}});
    json ranks = json::array();
    for (const auto& r : c.ranks) ranks.push_back({{"name", r.name}, {"min", r.lo}, {"max", r.hi ? json(*r.hi) : json()}});
    j = {{"id", c.id},          {"table", c.table},       {"dual_group", c.dual_group},
         {"tau", c.tau},        {"quadruples", q},        {"ranks", ranks},
         {"central", c.central}, {"remark", c.remark},     {"table1", c.table1},
         {"excluded", c.excluded}, {"disconnected", c.disconnected}, {"zeta_cases", c.zeta_cases},
         {"cauchy_cases", c.cauchy_cases}};
}

// ---------------------------------------------------------------- config

std::vector<std::string> suite_names()
{
    return {"identities", "cauchy", "zeta", "orbits", "stabilizers", "maps", "pinning"};
}

namespace {

bool known_suite(const std::string& s)
{
    auto n = suite_names();
    return std::find(n.begin(), n.end(), s) != n.end();
}

// key matches a filter if equal, or if the filter is a prefix ending at '-' or '('
bool key_matches(const std::string& key, const std::string& f)
{
    if (key == f) return true;
    if (key.size() > f.size() && key.compare(0, f.size(), f) == 0) {
        const char c = key[f.size()];
        return c == '-' || c == '(';
    }
    return false;
}

Box default_zeta_box(ZetaKind k)
{
    switch (k) {
    case ZetaKind::multi_gl:
    case ZetaKind::multi_gspin: return {10, 10};
    case ZetaKind::gspin_gl_m2:
    case ZetaKind::gspin_gl_2n:
    case ZetaKind::gspin_gl_m3: return {8, 0};
    case ZetaKind::d5: return {12, 0};
    case ZetaKind::d4:
    case ZetaKind::glue_gl_gl: return {8, 8};
    case ZetaKind::glue_gl_gspin:
    case ZetaKind::glue_gspin_gspin: return {6, 6};
    }
    return {8, 8};
}

Box default_cauchy_box(CauchyCase c)
{
    switch (c) {
    case CauchyCase::a:
    case CauchyCase::e: return {12, 0};
    case CauchyCase::b:
    case CauchyCase::c: return {10, 0};
    case CauchyCase::d: return {8, 8};
    }
    return {10, 0};
}

// one report for several ranks of the same identity
IdentityReport merge_reports(const std::vector<IdentityReport>& parts)
{
    IdentityReport r;
    json ranks = json::array(), sub = json::array();
    for (const auto& p : parts) {
        ranks.push_back(p.params.value("rank", 0));
        if (!p.pass) r.fail(*p.mismatch);
        for (const auto& f : p.flags) r.flag(f);
        r.elapsed_ms += p.elapsed_ms;
        sub.push_back(p);
    }
    r.params = parts.front().params;
    r.params.erase("rank");
    r.params["ranks"] = ranks;
    r.details["ranks"] = sub;
    return r;
}

std::string with_arg(const std::string& s, int k) { return s + "(" + std::to_string(k) + ")"; }

}  // namespace

void SuiteConfig::validate() const
{
    if (trials < 1) throw ConfigError("--trials must be >= 1");
    if (jobs < 1) throw ConfigError("--jobs must be >= 1");
    if (deg_x && *deg_x < 2) throw ConfigError("--deg-x must be >= 2");
    if (deg_y && *deg_y < 0) throw ConfigError("--deg-y must be >= 0");
    if (rank_m && *rank_m < 1) throw ConfigError("--rank-m must be >= 1");
    if (rank_n && *rank_n < 1) throw ConfigError("--rank-n must be >= 1");
    for (const auto& s : suites)
        if (!known_suite(s)) throw ConfigError("unknown suite: " + s);
    for (const auto& o : only) {
        const std::string s = o.substr(0, o.find(':'));
        if (!known_suite(s)) throw ConfigError("unknown suite in --only: " + o);
    }
}

std::vector<Cell> plan_suite(const SuiteConfig& cfg)
{
    cfg.validate();
    const int T = cfg.trials;
    const std::uint64_t S = cfg.seed;
    auto box_or = [&](Box b) {
        if (cfg.deg_x) b.x = *cfg.deg_x;
        if (cfg.deg_y) b.y = *cfg.deg_y;
        return b;
    };
    std::vector<Cell> all;

    // identities
    {
        const int lo = cfg.rank_n.value_or(2), hi = cfg.rank_n.value_or(4);
        all.push_back({"identities", "schur-gl", [=] { return sweep_schur_gl(lo, hi, 0, 5, T, S); }});
        const int slo = cfg.rank_n.value_or(2), shi = cfg.rank_n.value_or(3);
        all.push_back({"identities", "schur-sp", [=] { return sweep_schur_sp(slo, shi, 1, 4, T, S); }});
        const int ord = cfg.deg_x.value_or(10);
        all.push_back({"identities", "g-function", [=] { return check_g_equivalence(ord, S); }});
    }
    // cauchy: one cell per case, covering its rank list
    {
        struct C { CauchyCase c; std::vector<int> ranks; };
        std::vector<C> cs = {{CauchyCase::a, {2, 3}}, {CauchyCase::b, {4, 5}}, {CauchyCase::c, {2, 3}},
                             {CauchyCase::d, {4}},    {CauchyCase::e, {5}}};
        for (auto& c : cs) {
            const bool ranked = c.c == CauchyCase::a || c.c == CauchyCase::b || c.c == CauchyCase::c;
            if (ranked && (cfg.rank_m || cfg.rank_n) && cfg.case_name == to_string(c.c)) {
                const int k = c.c == CauchyCase::b ? cfg.rank_m.value_or(*cfg.rank_n) : cfg.rank_n.value_or(*cfg.rank_m);
                const int lo = c.c == CauchyCase::b ? 4 : 2;
                if (k < lo || (c.c == CauchyCase::c && k > 3))
                    throw ConfigError("cauchy " + to_string(c.c) + ": rank " + std::to_string(k) + " out of range");
                c.ranks = {k};
            }
            const Box b = box_or(default_cauchy_box(c.c));
            const auto ranks = c.ranks;
            const CauchyCase cc = c.c;
            all.push_back({"cauchy", to_string(c.c), [=] {
                               std::vector<IdentityReport> parts;
                               for (int k : ranks) parts.push_back(check_cauchy(cc, k, b, T, S));
                               return merge_reports(parts);
                           }});
        }
    }
    // zeta
    {
        std::vector<ZetaCase> zs;
        if (cfg.case_name && (cfg.rank_m || cfg.rank_n)) {
            try {
                zs.push_back(make_zeta_case(parse_zeta_kind(*cfg.case_name), cfg.rank_m.value_or(0),
                                            cfg.rank_n.value_or(0)));
            } catch (const std::invalid_argument& e) {
                if (std::string(e.what()).find("unknown zeta case") == std::string::npos)
                    throw ConfigError(e.what());
            }
        } else {
            using K = ZetaKind;
            zs = {make_zeta_case(K::multi_gl, 0, 2),     make_zeta_case(K::multi_gl, 0, 3),
                  make_zeta_case(K::multi_gl, 0, 4),     make_zeta_case(K::multi_gspin, 0, 2),
                  make_zeta_case(K::multi_gspin, 0, 3),  make_zeta_case(K::gspin_gl_2n, 0, 4),
                  make_zeta_case(K::gspin_gl_2n, 0, 5),  make_zeta_case(K::gspin_gl_m3, 2, 0),
                  make_zeta_case(K::gspin_gl_m3, 3, 0),  make_zeta_case(K::gspin_gl_m2, 3, 0),
                  make_zeta_case(K::d5),                 make_zeta_case(K::d4),
                  make_zeta_case(K::glue_gl_gl, 2, 2),   make_zeta_case(K::glue_gl_gl, 2, 3),
                  make_zeta_case(K::glue_gl_gspin, 2, 2), make_zeta_case(K::glue_gspin_gspin, 2, 2)};
        }
        for (const auto& z : zs) {
            const Box b = box_or(default_zeta_box(z.kind));
            all.push_back({"zeta", z.id(), [=] {
                               auto r = verify_zeta(z, b, T, S);
                               r.details["registry"] = case_for_zeta(to_string(z.kind)).id;
                               return r;
                           }});
        }
    }
    // orbits
    for (auto a : {OrbitAction::GL2GL2_on_Mat1x4, OrbitAction::GSp4GL3_on_Mat1x12})
        all.push_back({"orbits", with_arg(to_string(a), 3), [=] { return check_orbits(a, 3); }});
    // stabilizers; the xi displays are opt-in (see README)
    for (auto l : {StabFamily::gl4prime, StabFamily::gsp4, StabFamily::eta, StabFamily::xi}) {
        for (int r = 1; r <= stab_rep_count(l); ++r) {
            Cell c{"stabilizers", with_arg(to_string(l), r), [=] { return check_stabilizers(l, r, 5, 200, S); }};
            if (l == StabFamily::xi) c.suite = "stabilizers-xi";
            all.push_back(c);
        }
    }
    // maps and pinnings
    for (auto m : all_maps()) {
        all.push_back({"maps", to_string(m) + "(F101)", [=] { return check_map_properties(m, 101, 100, S); }});
        all.push_back({"maps", to_string(m) + "(Q)", [=] { return check_map_properties(m, 0, 20, S); }});
    }
    for (auto g : {PinGroup::GSpin4, PinGroup::GSpin6}) {
        all.push_back({"pinning", to_string(g) + "(F101)", [=] { return check_pinning(g, 101, 50, S); }});
        all.push_back({"pinning", to_string(g) + "(Q)", [=] { return check_pinning(g, 0, 10, S); }});
    }

    // selection
    std::vector<Cell> out;
    for (auto& c : all) {
        const bool xi = c.suite == "stabilizers-xi";
        const std::string suite = xi ? "stabilizers" : c.suite;
        if (!cfg.suites.empty() && std::find(cfg.suites.begin(), cfg.suites.end(), suite) == cfg.suites.end())
            continue;
        if (!cfg.only.empty()) {
            bool hit = false;
            for (const auto& f : cfg.only) {
                const auto colon = f.find(':');
                const std::string fs = f.substr(0, colon);
                if (fs != suite) continue;
                // xi cells only run when named
                if (colon == std::string::npos) hit = hit || !xi;
                else hit = hit || key_matches(c.key, f.substr(colon + 1));
            }
            if (!hit) continue;
        } else if (xi) {
            continue;
        }
        if (cfg.case_name && !key_matches(c.key, *cfg.case_name)) continue;
        c.suite = suite;
        out.push_back(std::move(c));
    }
    if (out.empty()) throw ConfigError("no verification cells selected");
    return out;
}

// ---------------------------------------------------------------- run

json environment_json()
{
    return {{"compiler", std::string("g++ ") + __VERSION__},
            {"cxx_standard", long(__cplusplus)},
            {"gmp", gmp_version},
            {"hardware_threads", std::thread::hardware_concurrency()}};
}

SuiteResult run_suite(const SuiteConfig& cfg)
{
    Stopwatch sw;
    const std::vector<Cell> cells = plan_suite(cfg);
    std::vector<IdentityReport> reps(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            IdentityReport r;
            try {
                r = cells[i].run();
            } catch (const std::exception& e) {
                r.fail(std::string("exception: ") + e.what());
            }
            r.id = cells[i].id();
            reps[i] = std::move(r);
        }
    };
    const int width = std::max(1, std::min<int>(cfg.jobs, int(cells.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < width; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    SuiteResult res;
    res.reports = std::move(reps);
    int passed = 0;
    for (const auto& r : res.reports) passed += r.pass;
    const int failed = int(res.reports.size()) - passed;
    json config = {{"suites", cfg.suites},
                   {"only", cfg.only},
                   {"case", cfg.case_name ? json(*cfg.case_name) : json()},
                   {"rank_m", cfg.rank_m ? json(*cfg.rank_m) : json()},
                   {"rank_n", cfg.rank_n ? json(*cfg.rank_n) : json()},
                   {"deg_x", cfg.deg_x ? json(*cfg.deg_x) : json()},
                   {"deg_y", cfg.deg_y ? json(*cfg.deg_y) : json()},
                   {"trials", cfg.trials},
                   {"jobs", cfg.jobs}};
    res.report = {{"schema_version", kSchemaVersion},
                  {"tool", "lzverify"},
                  {"environment", environment_json()},
                  {"config", config},
                  {"seed", cfg.seed},
                  {"reports", res.reports},
                  {"summary", {{"cells", res.reports.size()}, {"passed", passed}, {"failed", failed}, {"pass", failed == 0}}},
                  {"runtime_ms", sw.ms()}};
    res.exit_code = failed == 0 ? 0 : 1;
    if (!cfg.json_path.empty()) {
        std::ofstream f(cfg.json_path);
        if (!f) throw ConfigError("cannot write " + cfg.json_path);
        f << res.report.dump(2) << "\n";
    }
    return res;
}

std::string validate_report(const json& j)
{
    auto need = [&](const json& o, const char* k, json::value_t t, const std::string& where) -> std::string {
        if (!o.is_object() || !o.contains(k)) return where + ": missing '" + k + "'";
        const json& v = o.at(k);
        const bool ok = t == json::value_t::number_float ? v.is_number()
                        : t == json::value_t::number_unsigned ? v.is_number_integer()
                                                              : v.type() == t;
        if (!ok) return where + ": '" + k + "' has the wrong type";
        return "";
    };
    using V = json::value_t;
    for (auto [k, t] : std::vector<std::pair<const char*, V>>{{"schema_version", V::number_unsigned},
                                                              {"tool", V::string},
                                                              {"environment", V::object},
                                                              {"config", V::object},
                                                              {"seed", V::number_unsigned},
                                                              {"reports", V::array},
                                                              {"summary", V::object},
                                                              {"runtime_ms", V::number_float}})
        if (auto e = need(j, k, t, "report"); !e.empty()) return e;
    if (j["schema_version"] != kSchemaVersion) return "report: unsupported schema_version";
    int passed = 0;
    for (std::size_t i = 0; i < j["reports"].size(); ++i) {
        const json& r = j["reports"][i];
        const std::string w = "reports[" + std::to_string(i) + "]";
        for (auto [k, t] : std::vector<std::pair<const char*, V>>{{"id", V::string},
                                                                  {"params", V::object},
                                                                  {"pass", V::boolean},
                                                                  {"elapsed_ms", V::number_float},
                                                                  {"flags", V::array},
                                                                  {"details", V::object}})
            if (auto e = need(r, k, t, w); !e.empty()) return e;
        if (!r.contains("mismatch")) return w + ": missing 'mismatch'";
        const json& m = r["mismatch"];
        if (r["pass"].get<bool>()) {
            if (!m.is_null()) return w + ": passing cell carries a mismatch";
            ++passed;
        } else {
            if (!m.is_object()) return w + ": failing cell without a mismatch object";
            for (const char* k : {"monomial", "lhs", "rhs"})
                if (auto e = need(m, k, V::string, w + ".mismatch"); !e.empty()) return e;
        }
    }
    const json& s = j["summary"];
    for (const char* k : {"cells", "passed", "failed"})
        if (auto e = need(s, k, V::number_unsigned, "summary"); !e.empty()) return e;
    if (s["cells"] != j["reports"].size() || s["passed"] != passed ||
        s["failed"] != int(j["reports"].size()) - passed || s["pass"] != (s["failed"] == 0))
        return "summary: counts disagree with reports";
    return "";
}

}  // namespace lz

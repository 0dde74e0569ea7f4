// ggtool: markings, identity checks, counts, bijection traces, Bailey chain reports.
// Exit codes: 0 pass, 1 verified false, 2 usage or hypothesis error.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gg/bailey.hpp"
#include "gg/bijections.hpp"
#include "gg/identities.hpp"
#include "gg/marking.hpp"
#include "gg/partition.hpp"

using json = nlohmann::json;
using namespace gg;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.find_first_not_of(" \t") == std::string::npos) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (tok.find_first_not_of(" \t", used) != std::string::npos) throw UsageError("bad integer: " + tok);
        } catch (const std::logic_error&) {
            throw UsageError("bad integer: " + tok);
        }
    }
    return out;
}

long capped(long q) {
    if (const char* env = std::getenv("GG_QMAX")) {
        long cap = std::atol(env);
        if (cap > 0 && q > cap) return cap;
    }
    return q;
}

json marking_json(const GGMarking& m) {
    json rows = json::object();
    for (int r = 1; r <= m.max_mark(); ++r) rows[std::to_string(r)] = m.rows[static_cast<std::size_t>(r - 1)];
    json j = {{"v", 1}, {"parts", m.values}, {"marks", m.marks}, {"rows", rows}};
    j["overlined"] = m.overlined ? json(*m.overlined) : json(nullptr);
    return j;
}

struct Report {
    std::string command;
    json params;
    bool pass = false;
    std::string locus;
    double wall_ms = 0;

    json to_json() const {
        json j = {{"v", 1}, {"command", command}, {"params", params}, {"pass", pass}, {"wall_ms", wall_ms}};
        j["failure"] = pass ? json(nullptr) : json(locus);
        return j;
    }
};

Report timed(const std::string& command, json params, const std::function<Check()>& fn) {
    Report r;
    r.command = command;
    r.params = std::move(params);
    auto t0 = std::chrono::steady_clock::now();
    Check c = fn();
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    r.pass = c.ok;
    if (!c.ok) {
        r.locus = c.first_diff ? "exponent " + std::to_string(*c.first_diff) : std::string("check failed");
        if (!c.detail.empty()) r.locus += ": " + c.detail;
    }
    return r;
}

json params_json(const IdentityParams& p) { return {{"k", p.k}, {"i", p.i}, {"j", p.j}}; }

Check bailey_check(const IdentityParams& p, long q) {
    ChainResult cr = chain(p, q);
    Check out;
    for (const auto& st : cr.stages)
        if (!st.ok()) {
            out.ok = false;
            out.detail = "stage " + std::to_string(st.stage) + " " + st.label + " " + st.detail;
            return out;
        }
    Check lim = limit_identity(p, q);
    if (!lim.ok) return lim;
    return out;
}

Check band_check(int n_max) {
    Check out;
    for (int k : {3, 4})
        for (int i = 1; i <= k; ++i)
            for (int n = 0; n <= n_max; ++n)
                for (const auto& lam : enumerate_C({k, i, 1}, n))
                    if (in_C0_via_induced(lam, k, i) != all_bands_good(lam, k, i)) {
                        out.ok = false;
                        out.first_diff = n;
                        out.detail = lam.str();
                        return out;
                    }
    return out;
}

std::vector<std::pair<std::string, std::function<Report()>>> grid_cells() {
    std::vector<std::pair<std::string, std::function<Report()>>> cells;
    const long q200 = capped(200), q80 = capped(80), q60 = capped(60), q40 = capped(40);
    cells.push_back({"gg1", [=] { return timed("gg1", {{"q", q200}}, [=] { return verify_gg(1, q200); }); }});
    cells.push_back({"gg2", [=] { return timed("gg2", {{"q", q200}}, [=] { return verify_gg(2, q200); }); }});
    for (int k = 2; k <= 4; ++k)
        for (int j = 0; j <= 1; ++j)
            for (int i = 1; 2 * i < 2 * k + j; ++i) {
                IdentityParams p{k, i, j};
                cells.push_back({"bressoud " + p.str(), [=] {
                                     return timed("bressoud", params_json(p), [=] { return verify_bressoud(p, q80); });
                                 }});
            }
    const std::vector<IdentityParams> companion_grid = {{2, 2, 1}, {3, 2, 0}, {3, 2, 1}, {3, 3, 0},
                                                        {3, 3, 1}, {4, 2, 0}, {4, 3, 1}, {4, 4, 1}};
    for (auto p : companion_grid)
        cells.push_back({"companion " + p.str(), [=] {
                             return timed("companion", params_json(p), [=] { return verify_companion(p, q80); });
                         }});
    cells.push_back({"companion-remark",
                     [=] { return timed("companion-remark", {{"q", q80}}, [=] { return verify_companion_remark(q80); }); }});
    for (auto p : {IdentityParams{3, 2, 1}, IdentityParams{3, 3, 0}}) {
        int q = static_cast<int>(q40);
        cells.push_back({"main " + p.str(), [=] {
                             return timed("main", params_json(p), [=] { return verify_main(p, q, 10); });
                         }});
    }
    for (int k = 2; k <= 4; ++k)
        for (int j = 0; j <= 1; ++j)
            for (int i = 1; i <= k; ++i) {
                IdentityParams p{k, i, j};
                if (j == 0 && i == k) continue;
                int n = static_cast<int>(q40);
                cells.push_back({"counts " + p.str(), [=] {
                                     return timed("counts", params_json(p), [=] { return verify_counts(p, n); });
                                 }});
            }
    cells.push_back({"bands", [] { return timed("bands", {{"n", 30}}, [] { return band_check(30); }); }});
    for (auto p : companion_grid) {
        if (p.k < 3) continue;
        cells.push_back({"bailey " + p.str(), [=] {
                             return timed("bailey", params_json(p), [=] { return bailey_check(p, q60); });
                         }});
    }
    return cells;
}

int cmd_grid(int jobs) {
    auto cells = grid_cells();
    std::vector<Report> reports(cells.size());
    std::size_t next = 0;
    while (next < cells.size()) {
        std::vector<std::future<Report>> batch;
        std::size_t start = next;
        for (int w = 0; w < jobs && next < cells.size(); ++w, ++next)
            batch.push_back(std::async(std::launch::async, cells[next].second));
        for (std::size_t b = 0; b < batch.size(); ++b) reports[start + b] = batch[b].get();
    }
    bool all = true;
    std::printf("%-32s %-5s %10s  %s\n", "cell", "pass", "ms", "failure");
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const Report& r = reports[c];
        all = all && r.pass;
        std::printf("%-32s %-5s %10.1f  %s\n", cells[c].first.c_str(), r.pass ? "yes" : "NO", r.wall_ms,
                    r.locus.c_str());
    }
    return all ? 0 : 1;
}

Partition partition_from(const json& j) {
    const json& parts = j.is_object() ? j.at("parts") : j;
    return Partition(parts.get<std::vector<int>>());
}

json triplet_json(const Triplet& t) {
    return {{"v", 1}, {"lambda", t.lambda.parts()}, {"tau", t.tau}, {"eta", t.eta}};
}

void print_trace(const std::vector<TraceStep>& trace) {
    int n = 0;
    for (const auto& st : trace) {
        std::string ok;
        for (const auto& v : st.verified) ok += (ok.empty() ? "" : ",") + v;
        std::cout << "step " << ++n << ": " << st.op << "(" << st.arg << ") weight " << st.weight_before << "→"
                  << st.weight_after << " [" << ok << " OK] " << st.result.str() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Göllnitz-Gordon companion toolkit"};
    app.require_subcommand(1);
    IdentityParams params{3, 2, 1};
    auto add_params = [&](CLI::App* sc) {
        sc->add_option("--k", params.k, "k");
        sc->add_option("--i", params.i, "i");
        sc->add_option("--j", params.j, "j (0 or 1)");
    };

    std::string parts_arg;
    std::optional<int> overline;
    auto* mark = app.add_subcommand("mark", "Göllnitz-Gordon marking as JSON");
    mark->add_option("--parts", parts_arg, "comma separated parts")->required();
    mark->add_option("--overline", overline, "overline this (largest odd) value");

    std::string identity = "gg1";
    long q = 60;
    int m = 10, jobs = 4;
    bool grid = false;
    std::string rows_arg;
    auto* verify = app.add_subcommand("verify", "check an identity to a truncation order");
    verify->add_option("--identity", identity)->check(CLI::IsMember(
        {"gg1", "gg2", "bressoud", "companion", "companion-remark", "main", "jtp", "kursungoz", "counts"}));
    verify->add_option("--q", q, "truncation order");
    verify->add_option("--m", m, "x-degree for main");
    verify->add_option("--rows", rows_arg, "N1,...,N_{k-1} for kursungoz");
    verify->add_flag("--grid", grid, "run the full acceptance matrix");
    verify->add_option("--jobs", jobs, "worker threads for --grid")->check(CLI::PositiveNumber);
    add_params(verify);

    int n_max = 20;
    bool dump = false;
    auto* count = app.add_subcommand("count", "compare |C_j(k,i;n)| with the congruence count");
    count->add_option("--n", n_max, "largest n");
    count->add_flag("--dump", dump, "print the class counts as exponent<TAB>coefficient lines");
    add_params(count);

    std::string direction = "forward", payload;
    auto* map = app.add_subcommand("map", "run phi (forward) or psi (backward) with a step trace");
    map->add_option("--direction", direction)->check(CLI::IsMember({"forward", "backward"}));
    map->add_option("--payload", payload, "triplet or partition JSON")->required();
    add_params(map);

    auto* bailey = app.add_subcommand("bailey", "stage-by-stage Bailey chain report");
    bailey->add_option("--q", q, "truncation order in q");
    add_params(bailey);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*mark) {
            Partition p(parse_list(parts_arg));
            GGMarking mk = overline ? gg_mark_special(SpecialPartition::with_overline(p, *overline)) : gg_mark(p);
            std::cout << marking_json(mk).dump() << "\n";
            return 0;
        }
        if (*verify) {
            if (grid) return cmd_grid(jobs);
            const long qq = capped(q);
            json pj = params_json(params);
            pj["q"] = qq;
            Report r;
            if (identity == "gg1" || identity == "gg2") {
                int which = identity == "gg1" ? 1 : 2;
                r = timed(identity, {{"q", qq}}, [&] { return verify_gg(which, qq); });
            } else if (identity == "bressoud") {
                require_bressoud_params(params);
                r = timed(identity, pj, [&] { return verify_bressoud(params, qq); });
            } else if (identity == "companion") {
                require_companion_params(params);
                r = timed(identity, pj, [&] { return verify_companion(params, qq); });
            } else if (identity == "companion-remark") {
                r = timed(identity, {{"q", qq}}, [&] { return verify_companion_remark(qq); });
            } else if (identity == "main") {
                pj["m"] = m;
                r = timed(identity, pj, [&] { return verify_main(params, static_cast<int>(qq), m); });
            } else if (identity == "jtp") {
                r = timed(identity, pj, [&] { return jacobi_step(params, qq); });
            } else if (identity == "kursungoz") {
                auto rows = parse_list(rows_arg);
                pj["rows"] = rows;
                r = timed(identity, pj, [&] { return verify_kursungoz(params, rows, qq); });
            } else {
                r = timed(identity, pj, [&] { return verify_counts(params, static_cast<int>(qq)); });
            }
            std::cout << r.to_json().dump() << "\n";
            return r.pass ? 0 : 1;
        }
        if (*count) {
            require_count_params(params);
            const int n = static_cast<int>(capped(n_max));
            auto d = count_D_table(params, n);
            bool all = true;
            if (!dump) std::cout << "n\tC\tD\n";
            for (int t = 0; t <= n; ++t) {
                const std::size_t c = enumerate_C(params, t).size();
                const bool same = BigInt(c) == d[static_cast<std::size_t>(t)];
                all = all && same;
                if (dump) std::cout << t << "\t" << c << "\n";
                else std::cout << t << "\t" << c << "\t" << d[static_cast<std::size_t>(t)] << (same ? "" : "\t<-") << "\n";
            }
            return all ? 0 : 1;
        }
        if (*map) {
            json in = json::parse(payload);
            std::vector<TraceStep> trace;
            if (direction == "forward") {
                Triplet t;
                t.lambda = Partition(in.at("lambda").get<std::vector<int>>());
                t.tau = in.value("tau", std::vector<int>{});
                t.eta = in.value("eta", std::vector<int>{});
                std::sort(t.tau.rbegin(), t.tau.rend());
                std::sort(t.eta.rbegin(), t.eta.rend());
                Partition pi = phi(t, params, &trace);
                print_trace(trace);
                std::cout << json({{"v", 1}, {"parts", pi.parts()}}).dump() << "\n";
            } else {
                Triplet t = psi(partition_from(in), params, &trace);
                print_trace(trace);
                std::cout << triplet_json(t).dump() << "\n";
            }
            return 0;
        }
        if (*bailey) {
            require_companion_params(params);
            if (params.k < 3) throw ParamError("the chain needs k >= 3");
            const long qq = capped(q);
            ChainResult cr = chain(params, qq);
            std::cout << "stage\tlabel\tpair\tbeta\talpha\n";
            for (const auto& st : cr.stages)
                std::cout << st.stage << "\t" << st.label << "\t" << (st.pair_ok ? "ok" : "FAIL") << "\t"
                          << (st.beta_closed_ok ? "ok" : "FAIL") << "\t" << (st.alpha_closed_ok ? "ok" : "FAIL")
                          << (st.detail.empty() ? "" : "\t" + st.detail) << "\n";
            Check lim = limit_identity(params, qq);
            std::cout << "limit\t" << (lim.ok ? "ok" : "FAIL " + lim.detail) << "\n";
            return cr.ok && lim.ok ? 0 : 1;
        }
    } catch (const ParamError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: bad JSON: " << e.what() << "\n";
        return 2;
    } catch (const ContractError& e) {
        std::cerr << "contract violated: " << e.what() << "\n";
        return 1;
    } catch (const TruncationError& e) {
        std::cerr << "truncation: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

// One line per acceptance criterion, plus the usual doctest summary.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <cstdio>
#include <set>
#include <string>

#include "gg/bailey.hpp"
#include "gg/bijections.hpp"
#include "gg/identities.hpp"
#include "golden.hpp"

using namespace gg;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    long items = 0;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
    void take(const Check& c) {
        if (!c.ok) fail(c.detail);
    }
};

template <class F>
bool criterion(int n, const char* what, F body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        body(out);
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string count = out.items ? " [" + std::to_string(out.items) + " checked]" : "";
    std::printf("criterion %2d %-4s %7.2fs  %s%s%s%s\n", n, out.ok ? "PASS" : "FAIL", secs, what, count.c_str(),
                out.detail.empty() ? "" : "  -- ", out.detail.c_str());
    std::fflush(stdout);
    return out.ok;
}

const std::vector<IdentityParams> kCompanion = {{2, 2, 1}, {3, 2, 0}, {3, 2, 1}, {3, 3, 0},
                                                {3, 3, 1}, {4, 2, 0}, {4, 3, 1}, {4, 4, 1}};
const std::vector<IdentityParams> kRoundTrip = {{3, 2, 1}, {3, 3, 1}, {3, 2, 0}, {3, 3, 0}, {4, 2, 1}};
constexpr int kSweep = 26;

bool has_odd(const Partition& p) {
    for (int v : p.parts())
        if (v % 2) return true;
    return false;
}

}  // namespace

TEST_CASE("criterion 1") {
    CHECK(criterion(1, "classical sum = product to q^200", [](Outcome& o) {
        o.take(verify_gg(1, 200));
        o.take(verify_gg(2, 200));
    }));
}

TEST_CASE("criterion 2") {
    CHECK(criterion(2, "Bressoud identities to q^80, k = 2..4", [](Outcome& o) {
        for (int k = 2; k <= 4; ++k)
            for (int j = 0; j <= 1; ++j)
                for (int i = 1; 2 * i < 2 * k + j; ++i) o.take(verify_bressoud({k, i, j}, 80));
    }));
}

TEST_CASE("criterion 3") {
    CHECK(criterion(3, "companion identities to q^80, k = i cases and k=i=2 j=0", [](Outcome& o) {
        for (auto p : kCompanion) o.take(verify_companion(p, 80));
        o.take(verify_companion_remark(80));
    }));
}

TEST_CASE("criterion 4") {
    CHECK(criterion(4, "bivariate enumeration = formula to q^40, x^10", [](Outcome& o) {
        o.take(verify_main({3, 2, 1}, 40, 10));
        o.take(verify_main({3, 3, 0}, 40, 10));
    }));
}

TEST_CASE("criterion 5") {
    CHECK(criterion(5, "class sizes = restricted counts, n <= 40, k <= 4", [](Outcome& o) {
        std::string bad;
        for (int k = 2; k <= 4; ++k)
            for (int j = 0; j <= 1; ++j)
                for (int i = 1; i <= k; ++i) {
                    if (j == 0 && i == k) continue;
                    ++o.items;
                    Check c = verify_counts({k, i, j}, 40);
                    if (!c.ok) {
                        bad += (bad.empty() ? "" : "; ") + c.detail;
                        o.ok = false;
                    }
                }
        o.detail = bad;
    }));
}

TEST_CASE("criterion 6") {
    CHECK(criterion(6, "induced bands <=> all bands, n <= 30", [](Outcome& o) {
        long& seen = o.items;
        for (int k : {3, 4})
            for (int i = 1; i <= k; ++i)
                for (int n = 0; n <= 30; ++n)
                    for_each_C({k, i, 1}, n, [&](const Partition& lam) {
                        ++seen;
                        if (in_C0_via_induced(lam, k, i) != all_bands_good(lam, k, i))
                            o.fail(lam.str() + " k=" + std::to_string(k) + " i=" + std::to_string(i));
                    });
        if (seen == 0) o.fail("nothing enumerated");
    }));
}

TEST_CASE("criterion 7") {
    CHECK(criterion(7, "Bailey chain stages and limit at Q=60", [](Outcome& o) {
        for (auto p : kCompanion) {
            ChainResult r = chain(p, 60);
            for (const auto& st : r.stages)
                if (!st.ok()) o.fail(p.str() + " stage " + std::to_string(st.stage) + " " + st.label + " " + st.detail);
            if (!r.ok) o.fail(p.str() + " chain");
            o.take(limit_identity(p, 60));
        }
    }));
}

TEST_CASE("criterion 8") {
    CHECK(criterion(8, "worked reduction p=8 and its dilation", [](Outcome& o) {
        std::vector<SpecialPartition> trace;
        Partition mu = reduce(golden::lambda51(), 8, golden::params(), &trace);
        if (mu != golden::mu52()) o.fail("image " + mu.str());
        auto shown = golden::displays();
        if (trace.size() != 8) return o.fail("trace length " + std::to_string(trace.size()));
        for (std::size_t b = 0; b < 7; ++b) {
            SpecialPartition want = shown[b].special();
            GGMarking m = gg_mark_special(trace[b]);
            bool rows = m.max_mark() == 3 && m.rows[0] == shown[b].row1 && m.rows[1] == shown[b].row2 &&
                        m.rows[2] == shown[b].row3;
            if (!(trace[b] == want) || !rows) o.fail("lambda^" + std::to_string(b + 1) + " = " + trace[b].str());
        }
        std::vector<SpecialPartition> back;
        if (dilate(mu, 8, golden::params(), &back) != golden::lambda51()) o.fail("dilation");
        for (std::size_t b = 0; b < 7 && b < back.size(); ++b)
            if (!(back[b] == shown[6 - b].special())) o.fail("dilation step " + std::to_string(b + 1));
    }));
}

TEST_CASE("criterion 9") {
    CHECK(criterion(9, "phi/psi round trips to weight 26, phi22 to 30", [](Outcome& o) {
        for (auto p : kRoundTrip) {
            std::vector<std::set<Partition>> images(kSweep + 1);
            for (const auto& tr : enumerate_triplets(p, kSweep)) {
                ++o.items;
                Partition pi = phi(tr, p);
                if (pi.weight() != tr.weight()) o.fail("weight " + p.str() + " " + pi.str());
                if (pi.length() != tr.lambda.length() + static_cast<int>(tr.eta.size())) o.fail("length " + pi.str());
                if (!satisfies_C(pi, p)) o.fail("image outside the class " + pi.str());
                if (!images[static_cast<std::size_t>(pi.weight())].insert(pi).second) o.fail("collision " + pi.str());
                if (!(psi(pi, p) == tr)) o.fail("psi(phi) " + p.str() + " " + pi.str());
            }
            for (int n = 0; n <= kSweep; ++n)
                for_each_C(p, n, [&](const Partition& pi) {
                    ++o.items;
                    if (phi(psi(pi, p), p) != pi) o.fail("phi(psi) " + p.str() + " " + pi.str());
                    if (!images[static_cast<std::size_t>(n)].count(pi)) o.fail("not hit " + pi.str());
                });
        }
        IdentityParams two{2, 2, 1};
        std::vector<std::set<Partition>> images(31);
        for (const auto& tr : enumerate_triplets(two, 30)) {
            ++o.items;
            Partition pi = phi22(tr.lambda, tr.eta);
            if (pi.weight() != tr.weight() || !satisfies_C(pi, two)) o.fail("phi22 " + pi.str());
            if (!images[static_cast<std::size_t>(pi.weight())].insert(pi).second) o.fail("phi22 collision " + pi.str());
            auto [lam, eta] = psi22(pi);
            if (lam != tr.lambda || eta != tr.eta) o.fail("psi22 " + pi.str());
        }
        for (int n = 0; n <= 30; ++n)
            if (images[static_cast<std::size_t>(n)].size() != enumerate_C(two, n).size())
                o.fail("phi22 not onto at n=" + std::to_string(n));
    }));
}

TEST_CASE("criterion 10") {
    CHECK(criterion(10, "insertion part xor reduction part", [](Outcome& o) {
        long& seen = o.items;
        for (auto p : kRoundTrip)
            for (int n = 0; n <= kSweep; ++n)
                for_each_C(p, n, [&](const Partition& pi) {
                    if (!has_odd(pi)) return;
                    ++seen;
                    bool ins = insertion_part(pi).has_value(), red = reduction_part(pi).has_value();
                    if (ins == red) o.fail(pi.str() + (ins ? " both" : " neither"));
                });
        if (seen == 0) o.fail("no partitions with odd parts");
    }));
}

#include "doctest.h"

#include "gg/marking.hpp"
#include "oracles.hpp"

using namespace gg;

namespace {

// Greedy marking written out directly: from the smallest part up, take the
// least mark not used by a smaller-or-equal part within distance 2 (1 when odd).
std::vector<int> naive_marks(const std::vector<int>& desc) {
    std::vector<int> asc(desc.rbegin(), desc.rend()), mk(asc.size());
    for (std::size_t s = 0; s < asc.size(); ++s) {
        int r = 1;
        for (bool clash = true; clash; ) {
            clash = false;
            for (std::size_t g = 0; g < s; ++g) {
                int gap = asc[s] - asc[g];
                bool near = asc[s] % 2 ? gap < 2 : gap <= 2;
                if (near && mk[g] == r) {
                    ++r;
                    clash = true;
                    break;
                }
            }
        }
        mk[s] = r;
    }
    return std::vector<int>(mk.rbegin(), mk.rend());
}

}  // namespace

TEST_CASE("marking of the worked example") {
    Partition p{18, 15, 14, 14, 12, 11, 10, 8, 8, 6, 4, 3, 2, 1};
    GGMarking m = gg_mark(p);
    CHECK(m.marks == std::vector<int>{1, 3, 2, 1, 3, 2, 1, 3, 2, 1, 3, 1, 2, 1});
    CHECK(m.N(1) == 6);
    CHECK(m.N(2) == 4);
    CHECK(m.N(3) == 4);
    CHECK(m.row(1, 1) == 18);
    CHECK(m.row(3, 1) == 15);
    CHECK_THROWS_AS(m.row(1, 7), ContractError);
}

TEST_CASE("small markings") {
    GGMarking e = gg_mark(Partition{});
    CHECK(e.values.empty());
    CHECK(e.N(1) == 0);
    CHECK(e.N(3) == 0);
    CHECK(gg_mark(Partition{2, 1}).marks == std::vector<int>{2, 1});
    CHECK(gg_mark(Partition{3, 1}).marks == std::vector<int>{1, 1});
    CHECK(gg_mark(Partition{4, 4, 4}).marks == std::vector<int>{3, 2, 1});
}

TEST_CASE("marking agrees with the greedy rule") {
    for (int n = 0; n <= 16; ++n)
        for (auto& v : oracle::all_partitions(n)) {
            bool distinct_odd = true;
            for (std::size_t s = 1; s < v.size(); ++s)
                if (v[s] % 2 && v[s] == v[s - 1]) distinct_odd = false;
            if (!distinct_odd) continue;
            INFO(Partition(v).str());
            REQUIRE(gg_mark(Partition(v)).marks == naive_marks(v));
        }
}

TEST_CASE("special marking") {
    SpecialPartition plain(Partition{6, 4, 3, 2});
    CHECK(gg_mark_special(plain).marks == gg_mark(plain.base).marks);
    SpecialPartition sp = SpecialPartition::with_overline(Partition{4, 3, 2}, 3);
    GGMarking m = gg_mark_special(sp);
    CHECK(m.marks == std::vector<int>{3, 2, 1});
    CHECK(m.overlined == std::optional<std::size_t>(1));
    CHECK(sp.str() == "(4,~3,2)");

    SpecialPartition l4 = SpecialPartition::with_overline(
        Partition{38, 36, 36, 34, 32, 28, 28, 28, 24, 23, 22, 20, 20, 16, 16, 14, 12, 12, 10, 8, 6, 4, 4, 2, 1}, 23);
    GGMarking m4 = gg_mark_special(l4);
    CHECK(m4.marks[9] == 2);
    CHECK_FALSE(special_class_violation(l4, {4, 3, 1}).has_value());
}

TEST_CASE("bands") {
    auto starts = [](const Partition& p, int k) {
        std::vector<std::size_t> out;
        for (auto& b : bands(p, k)) out.push_back(b.start);
        return out;
    };
    CHECK(starts(Partition{4, 4, 4}, 3) == std::vector<std::size_t>{0, 1});
    CHECK(starts(Partition{5, 4, 4}, 3) == std::vector<std::size_t>{0, 1});
    CHECK(starts(Partition{7, 4}, 3).empty());
    CHECK(is_band_at(Partition{5, 4, 4}, 3, 1));

    Band b44{0, {4, 4}, false};
    CHECK_FALSE(band_good(Partition{4, 4}, b44, 2));
    CHECK(band_good(Partition{4, 4}, b44, 3));
    CHECK(band_good(Partition{2, 1}, Band{0, {2, 1}, false}, 1));
}

TEST_CASE("induced bands") {
    Partition p{18, 15, 14, 14, 12, 11, 10, 8, 8, 6, 4, 3, 2, 1};
    Band b = induced_band(p, gg_mark(p), 4, 1);
    CHECK(b.start == 1);
    CHECK(b.values == std::vector<int>{15, 14, 14});

    Partition t{4, 4, 4};
    Band c = induced_band(t, gg_mark(t), 3, 1);
    CHECK(c.start == 1);
    CHECK(c.values == std::vector<int>{4, 4});

    SpecialPartition sp = SpecialPartition::with_overline(Partition{8, 7, 6, 6, 4}, 7);
    GGMarking sm = gg_mark_special(sp);
    if (sm.N(3) >= 1 && sm.row(3, 1) == 7) {
        Band d = induced_band(sp, sm, 4, 1);
        CHECK(d.synthetic);
        CHECK(d.values == std::vector<int>{8, 7, 6});
    }

    CHECK(in_C0_via_induced(Partition{6, 2}, 3, 2));
    CHECK(in_C0_via_induced(Partition{4, 4}, 3, 3));
    CHECK_FALSE(in_C0_via_induced(Partition{4, 4}, 3, 2));
}

TEST_CASE("induced-band criterion matches all bands on small weights") {
    for (int k : {3, 4})
        for (int i = 1; i <= k; ++i)
            for (int n = 0; n <= 14; ++n)
                for (const auto& lam : enumerate_C({k, i, 1}, n)) {
                    INFO(lam.str() << " k=" << k << " i=" << i);
                    REQUIRE(in_C0_via_induced(lam, k, i) == all_bands_good(lam, k, i));
                    REQUIRE(all_bands_good(lam, k, i) == satisfies_C(lam, {k, i, 0}));
                }
}

#include "doctest.h"

#include <algorithm>
#include <string>

#include "gg/bailey.hpp"

using namespace gg;

TEST_CASE("seed pairs") {
    BaileyPair s1 = seed_pair(1, 30);
    CHECK(agree(s1.beta[0], LaurentSeries::one(s1.order)));
    for (int n = 1; n <= s1.n_max(); ++n) CHECK(s1.beta[n].is_zero());

    BaileyPair s0 = seed_pair(0, 30);
    // beta_1 = -1/(1-q^2), and q = u^2
    for (long e = 0; e <= s0.order; ++e) CHECK(s0.beta[1].coeff(e) == (e % 4 == 0 ? -1 : 0));

    CHECK(verify_pair(s1, 8).ok);
    CHECK(verify_pair(s0, 8).ok);
    CHECK(verify_pair(s0, 0).ok);
    CHECK(verify_pair(seed_pair(0, 60), 8).ok);
}

TEST_CASE("a corrupted pair is caught at n=1") {
    BaileyPair s = seed_pair(1, 30);
    s.beta[1] += LaurentSeries::monomial(2, 1, s.order);
    Check c = verify_pair(s, 8);
    CHECK_FALSE(c.ok);
    REQUIRE(c.first_diff.has_value());
    CHECK(*c.first_diff == 2);
    CHECK(c.detail.find("n=1") != std::string::npos);
}

TEST_CASE("first transform gives q^n/(q^{2-j};q^{2-j})_n") {
    for (int j : {0, 1}) {
        BaileyPair p = transform(seed_pair(j, 30), BaileyStep::COR);
        CHECK(verify_pair(p, 8).ok);
        const long step = 2 * (2 - j);  // (q^{2-j}) in u
        for (int n = 0; n <= p.n_max(); ++n) {
            LaurentSeries want = inv_poch(-1, step, step, n, p.order).shifted(2L * n).truncated(p.order);
            INFO("j=" << j << " n=" << n);
            CHECK(agree(p.beta[n], want));
        }
    }
}

TEST_CASE("every transform keeps the pair relation") {
    for (auto step : {BaileyStep::BL1, BaileyStep::BL2, BaileyStep::COR}) {
        BaileyPair p = transform(transform(seed_pair(1, 24), BaileyStep::COR), step);
        INFO(step_name(step));
        CHECK(verify_pair(p, 6).ok);
    }
    // PROP needs alpha of the two-sided shape, which one COR step does not give
    CHECK_THROWS_AS(transform(transform(seed_pair(1, 24), BaileyStep::COR), BaileyStep::PROP), ContractError);
}

TEST_CASE("chains") {
    for (IdentityParams p : {IdentityParams{3, 2, 0}, {3, 3, 1}, {4, 2, 0}}) {
        ChainResult r = chain(p, 30);
        INFO(p.str());
        CHECK(r.ok);
        for (const auto& st : r.stages) CHECK(st.ok());
        CHECK(limit_identity(p, 30).ok);
    }
    ChainResult degenerate = chain({3, 3, 1}, 20);
    // k = i: the seed passes through untouched before the lemmas
    auto steps = chain_steps({3, 3, 1});
    CHECK(std::count(steps.begin(), steps.end(), BaileyStep::COR) == 0);
    CHECK(degenerate.ok);
}

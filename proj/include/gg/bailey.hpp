#pragma once

#include <string>
#include <vector>

#include "gg/identities.hpp"
#include "gg/series.hpp"

namespace gg {

// Bailey pairs relative to a = 1. Every series here is in u with u^2 = q, so
// half-integer powers of q stay integral; `order` is the truncation in u.
struct BaileyPair {
    std::vector<LaurentSeries> alpha;  // alpha[n], n = 0..n_max
    std::vector<LaurentSeries> beta;
    long order = 0;
    std::string label;
    int n_max() const { return static_cast<int>(alpha.size()) - 1; }
};

enum class BaileyStep { BL1, BL2, PROP, COR };
const char* step_name(BaileyStep s);

// q_order is in powers of q; the pair is carried to u-order 2*q_order.
BaileyPair seed_pair(int j, long q_order, int n_max = 8);
Check verify_pair(const BaileyPair& p, int n_max);
BaileyPair transform(const BaileyPair& p, BaileyStep which);

// alpha_n = (-1)^n u^{a n^2}(u^{b n} + u^{-b n}) for 1 <= n <= n_max, alpha_0 = 1.
bool alpha_has_shape(const BaileyPair& p, long a, long b);

struct StageReport {
    int stage = 0;
    std::string label;
    bool pair_ok = false;
    bool beta_closed_ok = false;
    bool alpha_closed_ok = false;
    std::string detail;
    bool ok() const { return pair_ok && beta_closed_ok && alpha_closed_ok; }
};

struct ChainResult {
    BaileyPair pair;
    std::vector<StageReport> stages;
    bool ok = false;
};

// Steps taken from the seed to the final pair for these parameters.
std::vector<BaileyStep> chain_steps(const IdentityParams& params);
// The nested-sum closed form of beta at a given stage.
LaurentSeries stage_beta_closed(const IdentityParams& params, int stage, int n, long u_order);
ChainResult chain(const IdentityParams& params, long q_order, int n_max = 8);

// n -> infinity form of the final beta, times (-u;u^2)_inf (u^2;u^2)_inf, to u-order.
LaurentSeries beta_limit_series(const IdentityParams& params, long u_order);
// Ties the chain to the companion identity; order is in the final variable.
Check limit_identity(const IdentityParams& params, long order);

}  // namespace gg

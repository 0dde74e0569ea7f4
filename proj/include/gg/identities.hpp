#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gg/partition.hpp"
#include "gg/series.hpp"

namespace gg {

struct Check {
    bool ok = true;
    std::optional<long> first_diff;
    std::string detail;
    explicit operator bool() const { return ok; }
};

Check compare(const LaurentSeries& a, const LaurentSeries& b, const std::string& what = {});

// Chains N_1 >= ... >= N_len >= 0 with cost(N) <= bound, visited in
// lexicographic order. `cost` must be monotone in every coordinate.
void for_each_chain(int len, long bound, const std::function<long(const std::vector<int>&)>& cost,
                    const std::function<void(const std::vector<int>&)>& fn);

// The two classical identities, sum and product sides.
LaurentSeries gg1_sum(long q);
LaurentSeries gg1_product(long q);
LaurentSeries gg2_sum(long q);
LaurentSeries gg2_product(long q);

// (q^2;q^4) (q^{2i-1}, q^{4k-2i-1+2j}, q^{4k-2+2j}; q^{4k-2+2j}) / (q;q), all infinite.
LaurentSeries rhs_product(const IdentityParams& params, long q);
// Same product, computed as a restricted-part count: an independent oracle.
LaurentSeries rhs_product_dp(const IdentityParams& params, long q);

enum class LaurentPath { Laurent, Rewrite };
LaurentSeries lhs_companion(const IdentityParams& params, long q, LaurentPath path = LaurentPath::Laurent);
LaurentSeries lhs_bressoud(const IdentityParams& params, long q);
BiSeries rhs_main_bivariate(const IdentityParams& params, int q, int m);
// Sum over the enumerated class of x^{length} q^{weight}.
BiSeries enumerate_bivariate(const IdentityParams& params, int q, int m);

// The k = i = 2, j = 0 identity outside the companion theorem.
LaurentSeries remark_excluded_lhs(long q);
LaurentSeries remark_excluded_rhs(long q);

Check jacobi_step(const IdentityParams& params, long q);
LaurentSeries theta_sum(const IdentityParams& params, long q);
LaurentSeries theta_product(const IdentityParams& params, long q);

LaurentSeries kursungoz_formula(const IdentityParams& params, const std::vector<int>& rows, long q);
LaurentSeries kursungoz_enumerated(const IdentityParams& params, const std::vector<int>& rows, long q);
Check verify_kursungoz(const IdentityParams& params, const std::vector<int>& rows, long q);

// Checks used by the CLI and the acceptance suite.
Check verify_gg(int which, long q);
Check verify_bressoud(const IdentityParams& params, long q);
Check verify_companion(const IdentityParams& params, long q);
Check verify_companion_remark(long q);
Check verify_main(const IdentityParams& params, int q, int m);
Check verify_counts(const IdentityParams& params, int n_max);

}  // namespace gg

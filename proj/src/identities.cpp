#include "gg/identities.hpp"

#include <numeric>

#include "gg/marking.hpp"

namespace gg {

namespace {

// Multiply / divide s by prod_{l<n} (1 + sign q^{e+ld}), skipping factors past s.order().
void mul_poch(LaurentSeries& s, int sign, long e, long d, long n) {
    for (long l = 0; (n == kInfinity || l < n) && e + l * d <= s.order(); ++l) s.mul_binomial(sign, e + l * d);
}

void div_poch(LaurentSeries& s, int sign, long e, long d, long n) {
    for (long l = 0; (n == kInfinity || l < n) && e + l * d <= s.order(); ++l) s.div_binomial(sign, e + l * d);
}

long sq(long x) { return x * x; }

// 2(sum N_r^2 + N_i + ... + N_{k-1}), N 0-based with N[r-1] = N_r.
long base_exponent(const std::vector<int>& N, int i) {
    long e = 0;
    for (std::size_t r = 0; r < N.size(); ++r) {
        e += 2 * sq(N[r]);
        if (static_cast<int>(r) + 1 >= i) e += 2 * N[r];
    }
    return e;
}

// 1 / ((q^2;q^2)_{N1-N2} ... (q^{4-2j};q^{4-2j})_{N_{k-1}}) applied to s.
void divide_chain(LaurentSeries& s, const std::vector<int>& N, int j) {
    for (std::size_t r = 0; r + 1 < N.size(); ++r) div_poch(s, -1, 2, 2, N[r] - N[r + 1]);
    if (!N.empty()) div_poch(s, -1, 4 - 2 * j, 4 - 2 * j, N.back());
}

void divide_chain(BiSeries& s, const std::vector<int>& N, int j) {
    auto div = [&](int step, int n) {
        for (int l = 1; l <= n && l * step <= s.Q(); ++l) s.div_binomial(-1, l * step);
    };
    for (std::size_t r = 0; r + 1 < N.size(); ++r) div(2, N[r] - N[r + 1]);
    if (!N.empty()) div(4 - 2 * j, N.back());
}

}  // namespace

Check compare(const LaurentSeries& a, const LaurentSeries& b, const std::string& what) {
    Check c;
    c.first_diff = first_difference(a, b);
    c.ok = !c.first_diff;
    if (!c.ok)
        c.detail = what + (what.empty() ? "" : ": ") + "first difference at q^" + std::to_string(*c.first_diff) + " (" +
                   a.coeff(*c.first_diff).str() + " vs " + b.coeff(*c.first_diff).str() + ")";
    return c;
}

void for_each_chain(int len, long bound, const std::function<long(const std::vector<int>&)>& cost,
                    const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> N(static_cast<std::size_t>(len), 0);
    std::function<void(int)> rec = [&](int r) {
        if (r == len) {
            fn(N);
            return;
        }
        int cap = r == 0 ? std::numeric_limits<int>::max() : N[static_cast<std::size_t>(r - 1)];
        for (int v = 0; v <= cap; ++v) {
            N[static_cast<std::size_t>(r)] = v;
            if (cost(N) > bound) break;
            rec(r + 1);
        }
        N[static_cast<std::size_t>(r)] = 0;
    };
    if (cost(N) <= bound) rec(0);
}

LaurentSeries gg_sum(long q, int lin) {
    LaurentSeries total = LaurentSeries::zero(q);
    for (long n = 0; sq(n) + lin * n <= q; ++n) {
        long e = sq(n) + lin * n;
        LaurentSeries t = LaurentSeries::one(q - e);
        mul_poch(t, 1, 1, 2, n);
        div_poch(t, -1, 2, 2, n);
        total += t.shifted(e);
    }
    return total;
}

LaurentSeries gg1_sum(long q) { return gg_sum(q, 0); }
LaurentSeries gg2_sum(long q) { return gg_sum(q, 2); }

LaurentSeries gg1_product(long q) {
    LaurentSeries s = LaurentSeries::one(q);
    for (long a : {1, 4, 7}) div_poch(s, -1, a, 8, kInfinity);
    return s;
}

LaurentSeries gg2_product(long q) {
    LaurentSeries s = LaurentSeries::one(q);
    for (long a : {3, 4, 5}) div_poch(s, -1, a, 8, kInfinity);
    return s;
}

LaurentSeries rhs_product(const IdentityParams& p, long q) {
    require_class_params(p);
    const long m = 4L * p.k - 2 + 2L * p.j;
    LaurentSeries s = LaurentSeries::one(q);
    mul_poch(s, -1, 2, 4, kInfinity);
    mul_poch(s, -1, 2L * p.i - 1, m, kInfinity);
    mul_poch(s, -1, 4L * p.k - 2L * p.i - 1 + 2L * p.j, m, kInfinity);
    mul_poch(s, -1, m, m, kInfinity);
    div_poch(s, -1, 1, 1, kInfinity);
    return s;
}

LaurentSeries rhs_product_dp(const IdentityParams& p, long q) {
    require_class_params(p);
    const long m = 4L * p.k - 2 + 2L * p.j;
    std::vector<BigInt> c(static_cast<std::size_t>(q) + 1, 0);
    c[0] = 1;
    for (long n = 1; n <= q; ++n) {
        // multiplicity of (1-q^n) in the denominator
        int e = 1;
        if (n % 4 == 2) --e;
        if (n % m == (2L * p.i - 1) % m) --e;
        if (n % m == (4L * p.k - 2L * p.i - 1 + 2L * p.j) % m) --e;
        if (n % m == 0) --e;
        for (; e > 0; --e)
            for (long x = n; x <= q; ++x) c[x] += c[x - n];
        for (; e < 0; ++e)
            for (long x = q; x >= n; --x) c[x] -= c[x - n];
    }
    return LaurentSeries::from_coeffs(0, std::move(c), q);
}

LaurentSeries lhs_companion(const IdentityParams& p, long q, LaurentPath path) {
    require_companion_params(p);
    const int len = p.k - 1;
    auto n2 = [](const std::vector<int>& N) { return N.size() >= 2 ? N[1] : 0; };
    LaurentSeries total = LaurentSeries::zero(q);
    for_each_chain(
        len, q, [&](const std::vector<int>& N) { return base_exponent(N, p.i) - sq(n2(N)); },
        [&](const std::vector<int>& N) {
            const long e = base_exponent(N, p.i);
            const long b = n2(N);
            const long low = e - sq(b);
            LaurentSeries s = poch(1, 1 + 2L * N[0], 2, kInfinity, q - low);
            divide_chain(s, N, p.j);
            LaurentSeries head = path == LaurentPath::Laurent ? poch_exact(1, 1 - 2 * b, 2, b).shifted(e)
                                                              : poch_exact(1, 1, 2, b).shifted(low);
            total += (head * s).truncated(q);
        });
    return total;
}

LaurentSeries lhs_bressoud(const IdentityParams& p, long q) {
    require_bressoud_params(p);
    LaurentSeries total = LaurentSeries::zero(q);
    for_each_chain(
        p.k - 1, q, [&](const std::vector<int>& N) { return base_exponent(N, p.i) - sq(N[0]); },
        [&](const std::vector<int>& N) {
            const long e = base_exponent(N, p.i);
            const long low = e - sq(N[0]);
            LaurentSeries s = LaurentSeries::one(q - low);
            divide_chain(s, N, p.j);
            total += (poch_exact(1, 1 - 2L * N[0], 2, N[0]).shifted(e) * s).truncated(q);
        });
    return total;
}

BiSeries rhs_main_bivariate(const IdentityParams& p, int q, int m) {
    require_companion_params(p);
    BiSeries total(m, q);
    auto n2 = [](const std::vector<int>& N) { return N.size() >= 2 ? N[1] : 0; };
    auto cost = [&](const std::vector<int>& N) -> long {
        long xs = std::accumulate(N.begin(), N.end(), 0L);
        if (xs > m) return std::numeric_limits<long>::max();
        return base_exponent(N, p.i) - sq(n2(N));
    };
    for_each_chain(p.k - 1, q, cost, [&](const std::vector<int>& N) {
        const int xs = std::accumulate(N.begin(), N.end(), 0);
        const int b = n2(N);
        BiSeries s = BiSeries::monomial(m, q, xs, static_cast<int>(base_exponent(N, p.i) - sq(b)));
        for (int l = 0; l < b && 1 + 2 * l <= q; ++l) s.mul_binomial(1, 0, 1 + 2 * l);
        for (int a = 1 + 2 * N[0]; a <= q; a += 2) s.mul_binomial(1, 1, a);
        divide_chain(s, N, p.j);
        total += s;
    });
    return total;
}

BiSeries enumerate_bivariate(const IdentityParams& p, int q, int m) {
    BiSeries t(m, q);
    for (int n = 0; n <= q; ++n)
        for_each_C(p, n, [&](const Partition& pi) {
            if (pi.length() <= m) t.at(pi.length(), n) += 1;
        });
    return t;
}

LaurentSeries remark_excluded_lhs(long q) {
    LaurentSeries total = LaurentSeries::zero(q);
    for (long n = 0; 2 * sq(n) <= q; ++n) {
        LaurentSeries s = LaurentSeries::one(q - 2 * sq(n));
        mul_poch(s, -1, 1, 2, n);
        mul_poch(s, 1, 1 + 2 * n, 2, kInfinity);
        div_poch(s, -1, 4, 4, n);
        total += s.shifted(2 * sq(n));
    }
    return total;
}

LaurentSeries remark_excluded_rhs(long q) {
    LaurentSeries s = LaurentSeries::one(q);
    mul_poch(s, -1, 2, 4, kInfinity);
    mul_poch(s, -1, 3, 6, kInfinity);
    mul_poch(s, -1, 3, 6, kInfinity);
    mul_poch(s, -1, 6, 6, kInfinity);
    div_poch(s, -1, 1, 1, kInfinity);
    return s;
}

LaurentSeries theta_sum(const IdentityParams& p, long q) {
    require_class_params(p);
    const long a = 2L * p.k + p.j - 1;
    const long b = 2L * p.k - 2L * p.i + p.j;
    std::vector<BigInt> c(static_cast<std::size_t>(q) + 1, 0);
    c[0] = 1;
    for (long n = 1; a * sq(n) - b * n <= q; ++n) {
        int sgn = n % 2 ? -1 : 1;
        for (long e : {a * sq(n) - b * n, a * sq(n) + b * n})
            if (e <= q) c[static_cast<std::size_t>(e)] += sgn;
    }
    return LaurentSeries::from_coeffs(0, std::move(c), q);
}

LaurentSeries theta_product(const IdentityParams& p, long q) {
    require_class_params(p);
    const long m = 4L * p.k - 2 + 2L * p.j;
    LaurentSeries s = LaurentSeries::one(q);
    mul_poch(s, -1, 2L * p.i - 1, m, kInfinity);
    mul_poch(s, -1, 4L * p.k + 2L * p.j - 2L * p.i - 1, m, kInfinity);
    mul_poch(s, -1, m, m, kInfinity);
    return s;
}

Check jacobi_step(const IdentityParams& p, long q) { return compare(theta_sum(p, q), theta_product(p, q), "theta"); }

namespace {

void require_rows(const IdentityParams& p, const std::vector<int>& rows) {
    require_class_params(p);
    if (static_cast<int>(rows.size()) != p.k - 1) throw ParamError("rows must have k-1 entries");
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (rows[r] < 0 || (r && rows[r] > rows[r - 1])) throw ParamError("rows must be non-increasing and nonnegative");
}

}  // namespace

LaurentSeries kursungoz_formula(const IdentityParams& p, const std::vector<int>& rows, long q) {
    require_rows(p, rows);
    long e = base_exponent(rows, p.i);
    if (e > q) return LaurentSeries::zero(q);
    LaurentSeries s = LaurentSeries::one(q - e);
    divide_chain(s, rows, p.j);
    return s.shifted(e);
}

LaurentSeries kursungoz_enumerated(const IdentityParams& p, const std::vector<int>& rows, long q) {
    require_rows(p, rows);
    std::vector<BigInt> c(static_cast<std::size_t>(q) + 1, 0);
    for (long n = 0; n <= q; n += 2) c[static_cast<std::size_t>(n)] = enumerate_E(p, rows, static_cast<int>(n)).size();
    return LaurentSeries::from_coeffs(0, std::move(c), q);
}

Check verify_kursungoz(const IdentityParams& p, const std::vector<int>& rows, long q) {
    return compare(kursungoz_enumerated(p, rows, q), kursungoz_formula(p, rows, q), "even-part class");
}

Check verify_gg(int which, long q) {
    if (which == 1) return compare(gg1_sum(q), gg1_product(q), "gg1");
    if (which == 2) return compare(gg2_sum(q), gg2_product(q), "gg2");
    throw ParamError("which must be 1 or 2");
}

Check verify_bressoud(const IdentityParams& p, long q) {
    return compare(lhs_bressoud(p, q), rhs_product(p, q), "bressoud " + p.str());
}

Check verify_companion(const IdentityParams& p, long q) {
    LaurentSeries a = lhs_companion(p, q, LaurentPath::Laurent);
    Check c = compare(a, lhs_companion(p, q, LaurentPath::Rewrite), "laurent vs rewrite " + p.str());
    if (!c) return c;
    return compare(a, rhs_product(p, q), "companion " + p.str());
}

Check verify_companion_remark(long q) {
    // k = i = 2, j = 1 written out by hand
    LaurentSeries lhs = LaurentSeries::zero(q);
    for (long n = 0; 2 * sq(n) <= q; ++n) {
        LaurentSeries s = LaurentSeries::one(q - 2 * sq(n));
        mul_poch(s, 1, 1 + 2 * n, 2, kInfinity);
        div_poch(s, -1, 2, 2, n);
        lhs += s.shifted(2 * sq(n));
    }
    LaurentSeries rhs = LaurentSeries::one(q);
    mul_poch(rhs, -1, 2, 4, kInfinity);
    for (long a : {3, 5, 8}) mul_poch(rhs, -1, a, 8, kInfinity);
    div_poch(rhs, -1, 1, 1, kInfinity);
    Check c = compare(lhs, rhs, "k=i=2 j=1 case");
    if (!c) return c;
    c = compare(lhs, lhs_companion(IdentityParams{2, 2, 1}, q), "k=i=2 j=1 case vs general sum");
    if (!c) return c;
    // k = i >= 3
    for (int k : {3, 4})
        for (int j : {0, 1}) {
            const long m = 4L * k - 2 + 2L * j;
            LaurentSeries r = LaurentSeries::one(q);
            mul_poch(r, -1, 2, 4, kInfinity);
            for (long a : {2L * k - 1, 2L * k - 1 + 2L * j, m}) mul_poch(r, -1, a, m, kInfinity);
            div_poch(r, -1, 1, 1, kInfinity);
            IdentityParams p{k, k, j};
            c = compare(lhs_companion(p, q), r, "k=i case " + p.str());
            if (!c) return c;
        }
    return compare(remark_excluded_lhs(q), remark_excluded_rhs(q), "k=i=2 j=0 identity");
}

Check verify_main(const IdentityParams& p, int q, int m) {
    BiSeries a = enumerate_bivariate(p, q, m);
    BiSeries b = rhs_main_bivariate(p, q, m);
    Check c;
    for (int x = 0; x <= m && c.ok; ++x)
        for (int n = 0; n <= q; ++n)
            if (a.at(x, n) != b.at(x, n)) {
                c.ok = false;
                c.first_diff = n;
                c.detail = "bivariate " + p.str() + ": x^" + std::to_string(x) + " q^" + std::to_string(n) + " (" +
                           a.at(x, n).str() + " vs " + b.at(x, n).str() + ")";
                break;
            }
    if (c.ok && m >= q) c = compare(b.at_x_equal_one(), lhs_companion(p, q), "x=1 substitution " + p.str());
    return c;
}

Check verify_counts(const IdentityParams& p, int n_max) {
    std::vector<BigInt> d = count_D_table(p, n_max);
    for (int n = 0; n <= n_max; ++n) {
        BigInt c = 0;
        for_each_C(p, n, [&](const Partition&) { c += 1; });
        if (c != d[static_cast<std::size_t>(n)]) {
            Check r;
            r.ok = false;
            r.first_diff = n;
            r.detail = "counts " + p.str() + " at n=" + std::to_string(n) + ": " + c.str() + " vs " + d[static_cast<std::size_t>(n)].str();
            return r;
        }
    }
    return {};
}

}  // namespace gg

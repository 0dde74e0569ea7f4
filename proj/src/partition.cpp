#include "gg/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gg/marking.hpp"

namespace gg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int v : parts_)
        if (v < 1) throw ParamError("partition parts must be positive, got " + std::to_string(v));
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::frequency(int t) const {
    auto r = std::equal_range(parts_.begin(), parts_.end(), t, std::greater<>());
    return static_cast<int>(r.second - r.first);
}

int Partition::odd_count_up_to(int n) const {
    int c = 0;
    for (auto it = parts_.rbegin(); it != parts_.rend() && *it <= n; ++it)
        if (*it % 2) ++c;
    return c;
}

int Partition::largest_odd() const {
    for (int v : parts_)
        if (v % 2) return v;
    return 0;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t s = 0; s < parts_.size(); ++s) os << (s ? "," : "") << parts_[s];
    os << ')';
    return os.str();
}

std::string IdentityParams::str() const {
    return "(k=" + std::to_string(k) + ",i=" + std::to_string(i) + ",j=" + std::to_string(j) + ")";
}

void require_class_params(const IdentityParams& p) {
    if (p.j != 0 && p.j != 1) throw ParamError("j must be 0 or 1");
    if (p.k < 2) throw ParamError("k must be at least 2");
    if (p.i < 1 || p.i > p.k) throw ParamError("need k >= i >= 1, got " + p.str());
}

void require_count_params(const IdentityParams& p) {
    require_class_params(p);
    if (p.j == 0 && p.i >= p.k) throw ParamError("the j=0 count theorem needs k > i, got " + p.str());
}

void require_bressoud_params(const IdentityParams& p) {
    if (p.j != 0 && p.j != 1) throw ParamError("j must be 0 or 1");
    if (p.k < 2) throw ParamError("k must be at least 2");
    if (p.i < 1 || 2 * p.i >= 2 * p.k + p.j) throw ParamError("need (2k+j)/2 > i >= 1, got " + p.str());
}

void require_companion_params(const IdentityParams& p) {
    if (p.j != 0 && p.j != 1) throw ParamError("j must be 0 or 1");
    if (p.i < 2 || p.i > p.k) throw ParamError("need k >= i >= 2, got " + p.str());
    if (2 * p.k + p.j <= 4) throw ParamError("need (2k+j)/2 > 2, got " + p.str());
}

namespace {

// f[v] for v in [0, max+3], zero padded.
std::vector<int> freq_table(const Partition& p) {
    int top = p.empty() ? 0 : p[0];
    std::vector<int> f(static_cast<std::size_t>(top) + 4, 0);
    for (int v : p.parts()) ++f[v];
    return f;
}

bool check_windows(const std::vector<int>& f, const Partition& p, const IdentityParams& pr) {
    const int top = static_cast<int>(f.size()) - 4;
    if (f[1] + f[2] > pr.i - 1) return false;
    for (int v = 1; v <= top; v += 2)
        if (f[v] > 1) return false;
    for (int t = 0; 2 * t <= top; ++t) {
        int s = f[2 * t] + f[2 * t + 1] + f[2 * t + 2];
        if (s > pr.k - 1) return false;
        if (pr.j == 0 && s == pr.k - 1) {
            int lhs = t * f[2 * t] + t * f[2 * t + 1] + (t + 1) * f[2 * t + 2];
            int rhs = p.odd_count_up_to(2 * t + 1) + pr.i - 1;
            if ((lhs - rhs) % 2 != 0) return false;
        }
    }
    return true;
}

struct Gen {
    const IdentityParams& pr;
    bool even_only;
    const std::function<void(const Partition&)>& fn;
    std::vector<int> f;
    std::vector<int> parts;

    // Windows with smallest member v are complete once f[v] is chosen.
    bool window_ok(int v) const {
        if (v % 2) {
            if (f[v] > 1) return false;
            if (v == 1 && f[1] + f[2] > pr.i - 1) return false;
            return true;
        }
        return f[v] + f[v + 1] + f[v + 2] <= pr.k - 1;
    }

    void run(int v, int rem) {
        if (rem == 0) {
            Partition p(parts);
            if (check_windows(freq_table(p), p, pr)) fn(p);
            return;
        }
        if (v == 0) return;
        if (even_only && v % 2) {
            run(v - 1, rem);
            return;
        }
        int hi = rem / v;
        if (v % 2) hi = std::min(hi, 1);
        hi = std::min(hi, pr.k - 1);
        for (int c = hi; c >= 0; --c) {
            f[v] = c;
            if (window_ok(v)) {
                for (int r = 0; r < c; ++r) parts.push_back(v);
                run(v - 1, rem - c * v);
                parts.resize(parts.size() - c);
            }
        }
        f[v] = 0;
    }
};

void generate(const IdentityParams& pr, int n, bool even_only, const std::function<void(const Partition&)>& fn) {
    require_class_params(pr);
    if (n < 0) throw ParamError("weight must be nonnegative");
    Gen g{pr, even_only, fn, std::vector<int>(static_cast<std::size_t>(n) + 4, 0), {}};
    g.run(n, n);
}

}  // namespace

bool satisfies_C(const Partition& p, const IdentityParams& params) {
    require_class_params(params);
    return check_windows(freq_table(p), p, params);
}

void for_each_C(const IdentityParams& params, int n, const std::function<void(const Partition&)>& fn) {
    generate(params, n, false, fn);
}

std::vector<Partition> enumerate_C(const IdentityParams& params, int n) {
    std::vector<Partition> out;
    for_each_C(params, n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

bool allowed_in_D(const IdentityParams& pr, int part) {
    if (part % 4 == 2) return false;
    int m = pr.j == 1 ? 4 * pr.k : 4 * pr.k - 2;
    int r = part % m;
    int a = (2 * pr.i - 1) % m;
    return r != 0 && r != a && r != (m - a) % m;
}

std::vector<BigInt> count_D_table(const IdentityParams& params, int n_max) {
    require_count_params(params);
    if (n_max < 0) throw ParamError("weight must be nonnegative");
    std::vector<BigInt> c(static_cast<std::size_t>(n_max) + 1, 0);
    c[0] = 1;
    for (int a = 1; a <= n_max; ++a) {
        if (!allowed_in_D(params, a)) continue;
        for (int n = a; n <= n_max; ++n) c[n] += c[n - a];
    }
    return c;
}

BigInt count_D(const IdentityParams& params, int n) { return count_D_table(params, n).back(); }

std::vector<Partition> enumerate_E(const IdentityParams& params, const std::vector<int>& rows, int n) {
    require_class_params(params);
    if (static_cast<int>(rows.size()) != params.k - 1) throw ParamError("rows must have k-1 entries");
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r] < 0 || (r && rows[r] > rows[r - 1])) throw ParamError("rows must be non-increasing and nonnegative");
    }
    std::vector<Partition> out;
    generate(params, n, true, [&](const Partition& p) {
        GGMarking m = gg_mark(p);
        for (int r = 1; r <= params.k - 1; ++r)
            if (m.N(r) != rows[r - 1]) return;
        out.push_back(p);
    });
    return out;
}

std::vector<Partition> enumerate_E_upto(const IdentityParams& params, int w_max) {
    std::vector<Partition> out;
    for (int n = 0; n <= w_max; n += 2) generate(params, n, true, [&](const Partition& p) { out.push_back(p); });
    return out;
}

int Triplet::weight() const {
    int w = lambda.weight();
    for (int v : tau) w += v;
    for (int v : eta) w += v;
    return w;
}

void require_triplet(const Triplet& t, const IdentityParams& params) {
    if (!satisfies_C(t.lambda, params)) throw ParamError("lambda is not in the partition class");
    for (int v : t.lambda.parts())
        if (v % 2) throw ParamError("lambda must have only even parts");
    GGMarking m = gg_mark(t.lambda);
    int n1 = m.N(1), n2 = m.N(2);
    for (std::size_t s = 0; s < t.tau.size(); ++s) {
        int v = t.tau[s];
        if (v >= 0 || v % 2 == 0 || v < 1 - 2 * n2) throw ParamError("tau entries must be negative odd in [1-2N2,-1]");
        if (s && v >= t.tau[s - 1]) throw ParamError("tau must be strictly decreasing");
    }
    for (std::size_t s = 0; s < t.eta.size(); ++s) {
        int v = t.eta[s];
        if (v % 2 == 0 || v < 2 * n1 + 1) throw ParamError("eta entries must be odd and at least 2N1+1");
        if (s && v >= t.eta[s - 1]) throw ParamError("eta must be strictly decreasing");
    }
}

namespace {

void odd_sets(int lo, int budget, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& fn) {
    fn(cur);
    for (int v = lo; v <= budget; v += 2) {
        cur.insert(cur.begin(), v);  // kept descending
        odd_sets(v + 2, budget - v, cur, fn);
        cur.erase(cur.begin());
    }
}

}  // namespace

std::vector<Triplet> enumerate_triplets(const IdentityParams& params, int w_max) {
    std::vector<Triplet> out;
    for (const Partition& lam : enumerate_E_upto(params, w_max + w_max / 3 + 2)) {
        GGMarking m = gg_mark(lam);
        int n1 = m.N(1), n2 = m.N(2);
        for (unsigned mask = 0; mask < (1u << n2); ++mask) {
            std::vector<int> tau;
            int tw = 0;
            for (int b = 0; b < n2; ++b)
                if (mask >> b & 1u) {
                    tau.push_back(-(2 * b + 1));
                    tw -= 2 * b + 1;
                }
            int budget = w_max - lam.weight() - tw;
            if (budget < 0) continue;
            std::vector<int> cur;
            odd_sets(2 * n1 + 1, budget, cur, [&](const std::vector<int>& eta) {
                out.push_back(Triplet{lam, tau, eta});
            });
        }
    }
    return out;
}

}  // namespace gg

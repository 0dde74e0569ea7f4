#include "gg/bijections.hpp"

#include <algorithm>
#include <climits>

#include "bijections_util.hpp"

namespace gg {

namespace detail {

Partition edit(const Partition& p, std::initializer_list<int> remove, std::initializer_list<int> add) {
    std::vector<int> parts = p.parts();
    for (int v : remove) {
        auto it = std::find(parts.begin(), parts.end(), v);
        if (it == parts.end()) throw ContractError("expected a part " + std::to_string(v) + " in " + p.str());
        parts.erase(it);
    }
    for (int v : add) {
        if (v < 1) throw ContractError("edit would create a non-positive part");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

void require(bool ok, const std::string& what) {
    if (!ok) throw ContractError(what);
}

std::vector<int> row_sizes(const GGMarking& m) {
    std::vector<int> out;
    for (int r = 1; r <= m.max_mark(); ++r) out.push_back(m.N(r));
    return out;
}

int row1_or(const GGMarking& m, int s) {
    if (s <= 0) return INT_MAX;
    if (s > m.N(1)) return INT_MIN;
    return m.row(1, s);
}

}  // namespace detail

using detail::edit;
using detail::require;

OneType one_mark_type(const Partition& p, const GGMarking& m, int s) {
    if (s < 1 || s > m.N(1)) throw ParamError("1-marked index out of range");
    int x = m.row(1, s);
    if (x % 2 || p.frequency(x + 1) > 0) return OneType::Odd;
    return OneType::Even;
}

OneType one_mark_type(const Partition& p, int s) { return one_mark_type(p, gg_mark(p), s); }

namespace {

bool even_upto(const Partition& lam, const GGMarking& m, int last) {
    for (int s = 1; s <= last; ++s)
        if (one_mark_type(lam, m, s) != OneType::Even) return false;
    return true;
}

}  // namespace

bool in_C_p(const Partition& lam, const IdentityParams& params, int p) {
    if (!satisfies_C(lam, params)) return false;
    GGMarking m = gg_mark(lam);
    if (p < 1 || p > m.N(1)) return false;
    return even_upto(lam, m, p - 1) && one_mark_type(lam, m, p) == OneType::Odd;
}

bool in_C_bar_p(const Partition& lam, const IdentityParams& params, int p) {
    if (!satisfies_C(lam, params)) return false;
    GGMarking m = gg_mark(lam);
    if (p < 2 || p > m.N(1)) return false;
    return even_upto(lam, m, p - 2) && one_mark_type(lam, m, p - 1) == OneType::Odd &&
           one_mark_type(lam, m, p) == OneType::Even;
}

bool in_C_arrow_p(const Partition& lam, const IdentityParams& params, int p) {
    if (!satisfies_C(lam, params)) return false;
    GGMarking m = gg_mark(lam);
    if (p < 1 || p > m.N(1)) return false;
    return even_upto(lam, m, p);
}

bool in_C_less(const Partition& lam, const IdentityParams& params, int p, int t) {
    if (t < 0 || !satisfies_C(lam, params)) return false;
    GGMarking m = gg_mark(lam);
    if (p < 0 || p > m.N(1)) return false;
    const long v = 2L * t + 1;
    if (!(static_cast<long>(detail::row1_or(m, p + 1)) + 2 <= v)) return false;
    if (!(v < detail::row1_or(m, p))) return false;
    return p == 0 || even_upto(lam, m, p);
}

std::optional<std::pair<int, int>> insertion_split(const Partition& lam, int m) {
    GGMarking mk = gg_mark(lam);
    for (int p = 0; p <= mk.N(1) && p <= m; ++p) {
        long lhs = 2L * (m - p) + 1;
        if (lhs >= static_cast<long>(detail::row1_or(mk, p + 1)) + 2) return std::make_pair(p, m - p);
    }
    return std::nullopt;
}

bool in_C_less_m(const Partition& lam, const IdentityParams& params, int m) {
    GGMarking mk = gg_mark(lam);
    for (int p = 0; p <= mk.N(1) && p <= m; ++p)
        if (in_C_less(lam, params, p, m - p)) return true;
    return false;
}

bool in_C_tri(const Partition& mu, const IdentityParams& params, int p, int t) {
    if (t < 0 || p < 0 || !satisfies_C(mu, params)) return false;
    GGMarking m = gg_mark(mu);
    if (p + 1 > m.N(1) || m.row(1, p + 1) != 2 * t + 1) return false;
    if (p >= 1 && !in_C_p(mu, params, p)) return false;
    if (mu.frequency(2 * t + 2) > 0 && !(p >= 1 && m.row(1, p) == 2 * t + 3)) return false;
    return true;
}

std::optional<std::pair<int, int>> insertion_part(const Partition& mu) {
    const int o = mu.largest_odd();
    if (o == 0) throw ParamError("partition has no odd part");
    const int t = (o - 1) / 2;
    GGMarking m = gg_mark(mu);
    auto idx = m.row_index(1, o);
    if (!idx) return std::nullopt;
    const int p = *idx - 1;
    if (mu.frequency(2 * t + 2) == 0) return std::make_pair(p, t);
    for (int s = 1; s <= p; ++s)
        if (m.row(1, p + 1 - s) == 2 * t + 4 * s && mu.frequency(2 * t + 4 * s + 2) == 0) return std::make_pair(p, t);
    return std::nullopt;
}

std::optional<int> reduction_part(const Partition& mu) {
    if (insertion_part(mu)) return std::nullopt;
    const int t = (mu.largest_odd() - 1) / 2;
    GGMarking m = gg_mark(mu);
    for (int v : {2 * t, 2 * t + 1, 2 * t + 2})
        if (auto idx = m.row_index(2, v)) return *idx;
    throw ContractError("reduction part " + std::to_string(2 * t + 1) + " has no 2-marked neighbour in " + mu.str());
}

bool in_C_eq(const Partition& mu, const IdentityParams& params, int p, int t) {
    if (!satisfies_C(mu, params) || mu.largest_odd() == 0) return false;
    auto ip = insertion_part(mu);
    return ip && ip->first == p && ip->second == t;
}

namespace {

std::string where(const char* op, const Partition& p, int idx) {
    return std::string(op) + "(" + p.str() + ", " + std::to_string(idx) + ")";
}

void same_rows(const GGMarking& a, const GGMarking& b, const std::string& ctx) {
    require(detail::row_sizes(a) == detail::row_sizes(b), ctx + ": row sizes changed");
}

Partition theta_fwd(const Partition& lam, int p, const IdentityParams& params) {
    const std::string ctx = where("Theta", lam, p);
    require(in_C_p(lam, params, p), ctx + ": input not in C(|p)");
    GGMarking m = gg_mark(lam);
    const int x = m.row(1, p);
    const int v = x % 2 ? x : x + 1;
    const int r = x % 2 ? 1 : m.marks_of(v).front();
    Partition mu;
    if (p == 1) {
        require(m.has(v, r), ctx + ": odd part not found");
        mu = edit(lam, {v}, {v + 1});
        require(in_C_arrow_p(mu, params, 1), ctx + ": image not in the arrow set");
    } else {
        if (m.has(v + 3, r)) {
            mu = edit(lam, {v, v + 3}, {v + 1, v + 4});
        } else {
            const int y = m.row(1, p - 1);
            require(y % 2 == 0, ctx + ": lambda^(1)_{p-1} should be even");
            mu = edit(lam, {v, y}, {v + 1, y + 1});
        }
        require(in_C_bar_p(mu, params, p), ctx + ": image not in C-bar(|p)");
    }
    same_rows(m, gg_mark(mu), ctx);
    require(mu.weight() == lam.weight() + (p == 1 ? 1 : 2), ctx + ": weight law");
    return mu;
}

Partition theta_bwd(const Partition& mu, int p, const IdentityParams& params) {
    const std::string ctx = where("Lambda", mu, p);
    GGMarking m = gg_mark(mu);
    Partition lam;
    auto lower_z = [&](int z) -> std::pair<int, int> {
        // (removed, added) for the part at or just above z
        auto ms = m.marks_of(z + 2);
        if (ms.empty()) return {z, z - 1};
        require(ms.front() >= 2, ctx + ": z+2 is 1-marked");
        return {z + 2, z + 1};
    };
    if (p == 1) {
        require(in_C_arrow_p(mu, params, 1), ctx + ": input not in the arrow set");
        auto [from, to] = lower_z(m.row(1, 1));
        lam = edit(mu, {from}, {to});
        require(in_C_p(lam, params, 1), ctx + ": preimage not in C(|1)");
    } else {
        require(in_C_bar_p(mu, params, p), ctx + ": input not in C-bar(|p)");
        const int y = m.row(1, p - 1);
        bool done = false;
        if (y % 2) {
            if (m.has(y - 3, 1)) {
                lam = edit(mu, {y - 3, y}, {y - 4, y - 1});
                done = true;
            }
        } else {
            auto ms = m.marks_of(y + 1);
            require(!ms.empty(), ctx + ": even-type predecessor without odd neighbour");
            if (m.has(y - 2, ms.front())) {
                lam = edit(mu, {y - 2, y + 1}, {y - 3, y});
                done = true;
            }
        }
        if (!done) {
            const int w = y % 2 ? y : y + 1;
            auto [from, to] = lower_z(m.row(1, p));
            lam = edit(mu, {from, w}, {to, w - 1});
        }
        require(in_C_p(lam, params, p), ctx + ": preimage not in C(|p)");
    }
    same_rows(m, gg_mark(lam), ctx);
    return lam;
}

}  // namespace

Partition theta(const Partition& lam, int p, Direction dir, const IdentityParams& params) {
    require_class_params(params);
    return dir == Direction::Forward ? theta_fwd(lam, p, params) : theta_bwd(lam, p, params);
}

Partition theta_iter(const Partition& lam, int p, Direction dir, const IdentityParams& params) {
    require_class_params(params);
    if (p == 0) return lam;
    Partition cur = lam;
    if (dir == Direction::Forward) {
        for (int q = p; q >= 1; --q) cur = theta_fwd(cur, q, params);
        require(in_C_arrow_p(cur, params, p), where("Theta_(p)", lam, p) + ": image not in the arrow set");
    } else {
        require(in_C_arrow_p(cur, params, p), where("Lambda_(p)", lam, p) + ": input not in the arrow set");
        for (int q = 1; q <= p; ++q) cur = theta_bwd(cur, q, params);
    }
    return cur;
}

Partition combine(const Partition& lam, int p, int t, const IdentityParams& params) {
    require_companion_params(params);
    const std::string ctx = "C_{" + std::to_string(p) + "," + std::to_string(t) + "}(" + lam.str() + ")";
    require(in_C_less(lam, params, p, t), ctx + ": input not in C^<(|p,t)");
    GGMarking m = gg_mark(lam);
    Partition mu;
    if (p == 0) {
        mu = edit(lam, {}, {2 * t + 1});
    } else {
        const int x = m.row(1, p);
        require(x % 2 == 0, ctx + ": lambda^(1)_p should be even");
        mu = edit(lam, {x}, {2 * t + 1, x + 1});
    }
    require(in_C_tri(mu, params, p, t), ctx + ": image not in the division domain");
    require(mu.weight() == lam.weight() + 2 * t + (p ? 2 : 1), ctx + ": weight law");
    auto before = detail::row_sizes(m), after = detail::row_sizes(gg_mark(mu));
    if (before.empty()) before.push_back(0);
    before[0] += 1;
    require(before == after, ctx + ": N1 should grow by one, other rows fixed");
    return mu;
}

Partition divide(const Partition& mu, int p, int t, const IdentityParams& params) {
    require_companion_params(params);
    const std::string ctx = "D_{" + std::to_string(p) + "," + std::to_string(t) + "}(" + mu.str() + ")";
    require(in_C_tri(mu, params, p, t), ctx + ": input not in the division domain");
    GGMarking m = gg_mark(mu);
    Partition lam;
    if (p == 0) {
        lam = edit(mu, {2 * t + 1}, {});
    } else {
        const int y = m.row(1, p);
        lam = y % 2 ? edit(mu, {2 * t + 1, y}, {y - 1}) : edit(mu, {2 * t + 1, y + 1}, {y});
    }
    require(in_C_less(lam, params, p, t), ctx + ": preimage not in C^<(|p,t)");
    return lam;
}

Partition insert(const Partition& lam, int m, const IdentityParams& params) {
    require_companion_params(params);
    const std::string ctx = "I_" + std::to_string(m) + "(" + lam.str() + ")";
    GGMarking mk = gg_mark(lam);
    require(m >= mk.N(1), ctx + ": m < N1");
    auto split = insertion_split(lam, m);
    require(split.has_value(), ctx + ": no admissible p");
    auto [p, t] = *split;
    require(in_C_less(lam, params, p, t), ctx + ": input not in C^<(|p,t)");
    Partition mu = theta_iter(combine(lam, p, t, params), p, Direction::Forward, params);
    require(in_C_eq(mu, params, p, t), ctx + ": image not in C^=(|p,t)");
    require(mu.weight() == lam.weight() + 2 * m + 1, ctx + ": weight law");
    return mu;
}

std::pair<Partition, int> separate(const Partition& mu, const IdentityParams& params) {
    require_companion_params(params);
    const std::string ctx = "S(" + mu.str() + ")";
    require(satisfies_C(mu, params), ctx + ": input not in the class");
    auto ip = insertion_part(mu);
    require(ip.has_value(), ctx + ": largest odd part is not an insertion part");
    auto [p, t] = *ip;
    Partition lam = divide(theta_iter(mu, p, Direction::Backward, params), p, t, params);
    require(lam.weight() == mu.weight() - 2 * (p + t) - 1, ctx + ": weight law");
    return {lam, p + t};
}

bool ssins_check(const Partition& mu, int m, int m2, const IdentityParams& params) {
    auto ip = insertion_part(mu);
    require(ip && ip->first + ip->second == m && in_C_eq(mu, params, ip->first, ip->second),
            "ssins_check: input not in C^=(|m)");
    return in_C_less_m(mu, params, m2);
}

Partition phi22(const Partition& lam, const std::vector<int>& eta) {
    const IdentityParams params{2, 2, 1};
    for (int v : lam.parts())
        if (v % 2) throw ParamError("phi22: lambda has an odd part");
    if (!satisfies_C(lam, params)) throw ParamError("phi22: lambda not in the class");
    const int n1 = gg_mark(lam).N(1);
    for (std::size_t s = 0; s < eta.size(); ++s) {
        if (eta[s] % 2 == 0 || eta[s] < 2 * n1 + 1) throw ParamError("phi22: eta parts must be odd and >= 2N1+1");
        if (s && eta[s] >= eta[s - 1]) throw ParamError("phi22: eta must be strictly decreasing");
    }
    Partition cur = lam;
    for (auto it = eta.rbegin(); it != eta.rend(); ++it) {
        const int m = (*it - 1) / 2;
        require(in_C_less_m(cur, params, m), "phi22: intermediate not in C^<(|m)");
        cur = insert(cur, m, params);
    }
    require(cur.weight() == lam.weight() + [&] { int w = 0; for (int v : eta) w += v; return w; }(), "phi22: weight law");
    return cur;
}

std::pair<Partition, std::vector<int>> psi22(const Partition& pi) {
    const IdentityParams params{2, 2, 1};
    if (!satisfies_C(pi, params)) throw ParamError("psi22: input not in the class");
    Partition cur = pi;
    std::vector<int> eta;
    while (cur.largest_odd()) {
        auto [next, m] = separate(cur, params);
        require(eta.empty() || 2 * m + 1 < eta.back(), "psi22: eta not strictly decreasing");
        eta.push_back(2 * m + 1);
        cur = next;
    }
    return {cur, eta};
}

}  // namespace gg

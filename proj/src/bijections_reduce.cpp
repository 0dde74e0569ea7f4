#include <algorithm>
#include <functional>

#include "bijections_util.hpp"
#include "gg/bijections.hpp"

namespace gg {

using detail::edit;
using detail::require;

const char* name(HatType t) {
    switch (t) {
        case HatType::A1: return "A1";
        case HatType::A2: return "A2";
        case HatType::B: return "B";
        case HatType::C: return "C";
        case HatType::O: return "O";
    }
    return "?";
}

const char* name(HatCluster c) {
    switch (c) {
        case HatCluster::A1: return "A1";
        case HatCluster::A2: return "A2";
        case HatCluster::A3: return "A3";
        case HatCluster::B: return "B";
        case HatCluster::C: return "C";
    }
    return "?";
}

const char* name(CheckType c) {
    switch (c) {
        case CheckType::A1: return "A1";
        case CheckType::A2: return "A2";
        case CheckType::A3: return "A3";
        case CheckType::B: return "B";
        case CheckType::C: return "C";
    }
    return "?";
}

namespace {

int find_block(const std::vector<Block>& blocks, int b) {
    for (std::size_t q = 0; q < blocks.size(); ++q)
        if (blocks[q].contains(b)) return static_cast<int>(q);
    throw ParamError("index " + std::to_string(b) + " outside every cluster");
}

bool all_in(int lo, int hi, const std::function<bool(int)>& f) {
    for (int s = lo; s <= hi; ++s)
        if (!f(s)) return false;
    return true;
}

}  // namespace

int HatProfile::block_of(int b) const { return find_block(blocks, b); }
int CheckProfile::block_of(int b) const { return find_block(blocks, b); }

HatProfile hat_profile(const Partition& lam, int p) {
    GGMarking m = gg_mark(lam);
    if (p < 1 || p > m.N(2)) throw ParamError("hat_profile: p outside [1, N2]");
    if (m.row(2, p) % 2) throw ParamError("hat_profile: lambda^{(2)}_p is odd");
    HatProfile hp;
    for (int b = 1; b <= p; ++b) {
        const int v = m.row(2, b);
        auto up = m.marks_of(v + 2);
        HatType ty;
        int anchor;
        if (!up.empty() && up.back() > 2) {
            if (auto s = m.row_index(1, v)) {
                ty = HatType::A1;
                anchor = *s;
            } else if (auto s2 = m.row_index(1, v + 2)) {
                if (b == 1 || hp.anchors.back() != *s2) {
                    ty = HatType::B;
                    anchor = *s2;
                } else {
                    const int nxt = m.has_row_entry(1, *s2 + 1) ? m.row(1, *s2 + 1) : 0;
                    if (nxt == v - 2) ty = HatType::C;
                    else if (nxt == v - 1) ty = HatType::O;
                    else throw ParamError("hat_profile: no type for lambda^{(2)}_" + std::to_string(b));
                    anchor = *s2 + 1;
                }
            } else {
                throw ParamError("hat_profile: missing 1-marked neighbour of " + std::to_string(v));
            }
        } else if (auto s = m.row_index(1, v - 2)) {
            ty = HatType::C;
            anchor = *s;
        } else if (auto s1 = m.row_index(1, v - 1)) {
            ty = HatType::O;
            anchor = *s1;
        } else if (auto s0 = m.row_index(1, v)) {
            ty = HatType::A2;
            anchor = *s0;
        } else {
            throw ParamError("hat_profile: missing 1-marked neighbour of " + std::to_string(v));
        }
        hp.types.push_back(ty);
        hp.anchors.push_back(anchor);
    }

    auto val = [&](int s) { return m.row(2, s); };
    auto type = [&](int s) { return hp.types[static_cast<std::size_t>(s - 1)]; };
    auto is_a = [&](int s) { return type(s) == HatType::A1 || type(s) == HatType::A2; };
    int top = p;
    bool first = true;
    while (top >= 1) {
        bool found = false;
        for (int lo = 1; lo <= top && !found; ++lo) {
            if (!all_in(lo, top, [&](int s) { return val(s) == val(top) + 4 * (top - s); })) continue;
            std::optional<HatCluster> label;
            if (all_in(lo, top, [&](int s) { return type(s) == HatType::A1; }) &&
                (lo == 1 || val(lo - 1) > val(lo) + 4))
                label = HatCluster::A1;
            else if (all_in(lo, top, is_a) && type(lo) == HatType::A2)
                label = (!first && m.has(val(top) - 4, 1)) ? HatCluster::A3 : HatCluster::A2;
            else if (all_in(lo, top, [&](int s) { return type(s) == HatType::B; }))
                label = HatCluster::B;
            else if (all_in(lo, top, [&](int s) { return type(s) == HatType::C; }))
                label = HatCluster::C;
            if (label) {
                hp.blocks.push_back({lo, top});
                hp.labels.push_back(*label);
                top = lo - 1;
                found = true;
            }
        }
        if (!found) throw ParamError("hat_profile: no cluster ends at " + std::to_string(top));
        first = false;
    }
    return hp;
}

CheckProfile check_profile(const Partition& mu, int p) {
    GGMarking m = gg_mark(mu);
    if (p < 1 || p > m.N(2)) throw ParamError("check_profile: p outside [1, N2]");
    auto val = [&](int s) { return m.row(2, s); };
    const int v = val(p);
    CheckType head;
    if (v % 2) {
        head = CheckType::C;
    } else {
        auto ms = m.marks_of(v + 1);
        if (ms.empty()) head = CheckType::A2;
        else if (ms.front() == 1) head = CheckType::B;
        else if (ms.front() > 2) head = CheckType::A1;
        else throw ParamError("check_profile: 2-marked part next to a 2-marked part");
    }

    CheckProfile cp;
    auto freq = [&](int x) { return mu.frequency(x); };
    {
        auto expected = [&](int s) { return v + 4 * (p - s) - ((v % 2 && s < p) ? 1 : 0); };
        bool found = false;
        for (int lo = 1; lo <= p && !found; ++lo) {
            if (!all_in(lo, p, [&](int s) { return val(s) == expected(s); })) continue;
            bool ok = false;
            switch (head) {
                case CheckType::A1:
                    ok = all_in(lo, p, [&](int s) { return m.has(val(s), 3) || m.has(val(s) + 1, 3); });
                    break;
                case CheckType::A2: ok = m.has(val(lo) - 2, 1) || m.has(val(lo) - 1, 1); break;
                case CheckType::B: ok = all_in(lo, p, [&](int s) { return freq(val(s) + 2) > 0; }); break;
                default: ok = true;
            }
            if (ok) {
                cp.blocks.push_back({lo, p});
                cp.labels.push_back(head);
                found = true;
            }
        }
        if (!found) throw ParamError("check_profile: no cluster ends at " + std::to_string(p));
    }
    int top = cp.blocks.back().first - 1;
    while (top >= 1) {
        bool found = false;
        for (int lo = 1; lo <= top && !found; ++lo) {
            if (!all_in(lo, top, [&](int s) { return val(s) == val(top) + 4 * (top - s); })) continue;
            const bool one_below = all_in(lo, top, [&](int s) { return m.has(val(s) - 2, 1); });
            const bool above = freq(val(lo) + 2) > 0;
            std::optional<CheckType> label;
            if (all_in(lo, top, [&](int s) { return m.has(val(s), 1) && m.has(val(s), 3); }))
                label = CheckType::A1;
            else if (one_below && !above)
                label = CheckType::A2;
            else if (one_below && above && freq(val(top)) == 1)
                label = CheckType::A3;
            else if (one_below && above && all_in(lo, top, [&](int s) { return freq(val(s)) >= 2; }))
                label = CheckType::B;
            else if (all_in(lo, top, [&](int s) { return m.has(val(s), 1); }) && freq(val(top)) == 2)
                label = CheckType::C;
            if (label) {
                cp.blocks.push_back({lo, top});
                cp.labels.push_back(*label);
                top = lo - 1;
                found = true;
            }
        }
        if (!found) throw ParamError("check_profile: no cluster ends at " + std::to_string(top));
    }
    for (int b = 1; b <= p; ++b) cp.types.push_back(cp.cluster_of(b));
    return cp;
}

bool in_C_hat(const Partition& lam, const IdentityParams& params, int p) {
    if (!satisfies_C(lam, params)) return false;
    GGMarking m = gg_mark(lam);
    if (p < 1 || p > m.N(2)) return false;
    const int v = m.row(2, p);
    if (v % 2 || lam.largest_odd() >= v) return false;
    try {
        HatType t = hat_profile(lam, p).types.back();
        return t != HatType::O;
    } catch (const ParamError&) {
        return false;
    }
}

bool in_C_check(const Partition& mu, const IdentityParams& params, int p) {
    if (!satisfies_C(mu, params) || mu.largest_odd() == 0) return false;
    auto r = reduction_part(mu);
    return r && *r == p;
}

namespace {

// Replace values in a special partition. The overline follows `overline` if
// given, otherwise it stays on its value unless that value was removed.
SpecialPartition sedit(const SpecialPartition& sp, std::initializer_list<int> remove, std::initializer_list<int> add,
                       std::optional<int> overline = std::nullopt) {
    Partition np = edit(sp.base, remove, add);
    std::optional<int> ov = overline;
    if (!ov) {
        auto old = sp.overlined_value();
        if (old && std::find(remove.begin(), remove.end(), *old) == remove.end()) ov = old;
    }
    if (!ov) return SpecialPartition(np);
    require(*ov == np.largest_odd(), "overlined part must be the largest odd part");
    return SpecialPartition::with_overline(np, *ov);
}

int mark_of(const SpecialPartition& sp, int v) {
    GGMarking m = gg_mark_special(sp);
    for (std::size_t q = 0; q < m.values.size(); ++q)
        if (m.values[q] == v) return m.marks[q];
    throw ContractError("no part " + std::to_string(v));
}

void check_special(const SpecialPartition& sp, const IdentityParams& params, const std::string& ctx) {
    if (auto why = special_class_violation(sp, params)) throw ContractError(ctx + ": " + sp.str() + " " + *why);
}

int smallest_mark_above(const std::vector<int>& ms, int floor) {
    for (int r : ms)
        if (r > floor) return r;
    return 0;
}

}  // namespace

Partition reduce(const Partition& lam, int p, const IdentityParams& params, std::vector<SpecialPartition>* trace) {
    require_class_params(params);
    const std::string ctx = "R_" + std::to_string(p) + "(" + lam.str() + ")";
    require(in_C_hat(lam, params, p), ctx + ": input not in the reduction domain");
    HatProfile hp = hat_profile(lam, p);
    GGMarking m0 = gg_mark(lam);
    const int top_block = hp.block_of(p);

    SpecialPartition cur(lam);
    int prev_odd = 0;
    for (int b = 1; b <= p; ++b) {
        const int v = m0.row(2, b);
        GGMarking mk = gg_mark_special(cur);
        auto ms_up = [&](int x) {
            std::vector<int> out;
            for (std::size_t q = 0; q < mk.values.size(); ++q)
                if (mk.values[q] == x && (!mk.overlined || *mk.overlined != q)) out.push_back(mk.marks[q]);
            std::sort(out.begin(), out.end());
            return out;
        };
        const int w_before = cur.base.weight();
        if (b > 1) cur = sedit(cur, {prev_odd}, {prev_odd - 1}, std::nullopt);
        int odd = 0, r = 0;
        bool over = false;
        switch (hp.cluster_of(b)) {
            case HatCluster::A1:
                r = smallest_mark_above(ms_up(v + 2), 2);
                require(r > 2, ctx + ": A1 step without a high mark on v+2");
                odd = v + 1;
                cur = sedit(cur, {v + 2}, {odd});
                break;
            case HatCluster::A2:
                r = 1;
                odd = v - 1;
                cur = sedit(cur, {v}, {odd});
                break;
            case HatCluster::A3:
                r = 2;
                odd = v - 1;
                over = true;
                cur = sedit(cur, {v}, {odd}, odd);
                break;
            case HatCluster::B:
                if (hp.block_of(b) == top_block) {
                    r = 1;
                    odd = v + 1;
                    cur = sedit(cur, {v + 2}, {odd});
                } else {
                    r = smallest_mark_above(ms_up(v + 2), 1);
                    require(r > 2, ctx + ": B step without a high mark on v+2");
                    odd = v + 1;
                    over = true;
                    cur = sedit(cur, {v + 2}, {odd}, odd);
                }
                break;
            case HatCluster::C:
                r = 2;
                odd = v - 1;
                cur = sedit(cur, {v}, {odd});
                break;
        }
        const std::string sctx = ctx + " step " + std::to_string(b);
        require(cur.base.weight() == w_before - (b > 1 ? 2 : 1), sctx + ": weight law");
        require(cur.base.largest_odd() == odd, sctx + ": new part is not the largest odd part");
        require(over == (cur.overlined_value() == odd), sctx + ": overline misplaced");
        require(mark_of(cur, odd) == r, sctx + ": new odd part carries the wrong mark");
        check_special(cur, params, sctx);
        if (trace) trace->push_back(cur);
        prev_odd = odd;
    }
    require(!cur.overlined, ctx + ": result still overlined");
    Partition mu = cur.base;
    require(mu.weight() == lam.weight() - 2 * p + 1, ctx + ": weight law");
    require(in_C_check(mu, params, p), ctx + ": image not in the dilation domain");
    require(detail::row_sizes(gg_mark(mu)) == detail::row_sizes(m0), ctx + ": row sizes changed");
    return mu;
}

Partition dilate(const Partition& mu, int p, const IdentityParams& params, std::vector<SpecialPartition>* trace) {
    require_class_params(params);
    const std::string ctx = "H_" + std::to_string(p) + "(" + mu.str() + ")";
    require(in_C_check(mu, params, p), ctx + ": input not in the dilation domain");
    CheckProfile cp = check_profile(mu, p);
    GGMarking m0 = gg_mark(mu);

    SpecialPartition cur(mu);
    for (int b = p; b >= 2; --b) {
        const std::string sctx = ctx + " step " + std::to_string(b);
        const int o = cur.base.largest_odd();
        const bool over = cur.overlined_value() == o;
        GGMarking mk = gg_mark_special(cur);
        const int w_before = cur.base.weight();
        int odd = 0, r = 0;
        bool new_over = false;
        auto plain_marks = [&](int x) {
            std::vector<int> out;
            for (std::size_t q = 0; q < mk.values.size(); ++q)
                if (mk.values[q] == x && (!mk.overlined || *mk.overlined != q)) out.push_back(mk.marks[q]);
            std::sort(out.begin(), out.end());
            return out;
        };
        if (cp.block_of(b) == cp.block_of(b - 1)) {
            const int rb = mark_of(cur, o);
            for (int x : plain_marks(o + 3))
                if (x <= rb) r = x;
            require(r > 0, sctx + ": no part 2t+4 with a mark at most r_b");
            odd = o + 4;
            new_over = over;
            cur = sedit(cur, {o, o + 3}, {o + 1, odd}, over ? std::optional<int>(odd) : std::nullopt);
        } else {
            const int u = m0.row(2, b - 1);
            auto ms = plain_marks(u);
            switch (cp.cluster_of(b - 1)) {
                case CheckType::A1:
                    r = ms.empty() ? 0 : ms.back();
                    require(r > 2, sctx + ": A1 step without a high mark on u");
                    odd = u + 1;
                    cur = sedit(cur, {o, u}, {o + 1, odd});
                    break;
                case CheckType::A2:
                    require(mk.has(u - 2, 1), sctx + ": A2 step without a 1-marked u-2");
                    r = 1;
                    odd = u - 1;
                    cur = sedit(cur, {o, u - 2}, {o + 1, odd});
                    break;
                case CheckType::A3:
                    r = 2;
                    odd = u + 1;
                    new_over = true;
                    cur = sedit(cur, {o, u}, {o + 1, odd}, odd);
                    break;
                case CheckType::B:
                    r = ms.empty() ? 0 : ms.back();
                    require(r > 2, sctx + ": B step without a high mark on u");
                    odd = u + 1;
                    new_over = true;
                    cur = sedit(cur, {o, u}, {o + 1, odd}, odd);
                    break;
                case CheckType::C:
                    r = 2;
                    odd = u + 1;
                    cur = sedit(cur, {o, u}, {o + 1, odd});
                    break;
            }
        }
        require(cur.base.weight() == w_before + 2, sctx + ": weight law");
        require(cur.base.largest_odd() == odd, sctx + ": new part is not the largest odd part");
        require(new_over == (cur.overlined_value() == odd), sctx + ": overline misplaced");
        require(mark_of(cur, odd) == r, sctx + ": new odd part carries the wrong mark");
        check_special(cur, params, sctx);
        if (trace) trace->push_back(cur);
    }
    const int o = cur.base.largest_odd();
    Partition lam = edit(cur.base, {o}, {o + 1});
    if (trace) trace->push_back(SpecialPartition(lam));
    require(lam.weight() == mu.weight() + 2 * p - 1, ctx + ": weight law");
    require(in_C_hat(lam, params, p), ctx + ": image not in the reduction domain");
    require(detail::row_sizes(gg_mark(lam)) == detail::row_sizes(m0), ctx + ": row sizes changed");
    return lam;
}

}  // namespace gg

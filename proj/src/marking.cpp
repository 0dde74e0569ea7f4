#include "gg/marking.hpp"

#include <algorithm>
#include <sstream>

namespace gg {

SpecialPartition::SpecialPartition(Partition p, std::optional<std::size_t> o) : base(std::move(p)), overlined(o) {
    if (!overlined) return;
    if (*overlined >= base.parts().size()) throw ParamError("overline index out of range");
    int v = base[*overlined];
    if (v % 2 == 0 || v != base.largest_odd()) throw ParamError("only the largest odd part may be overlined");
}

SpecialPartition SpecialPartition::with_overline(Partition p, int v) {
    const auto& ps = p.parts();
    auto it = std::find(ps.begin(), ps.end(), v);
    if (it == ps.end()) throw ParamError("overlined value not present");
    std::size_t pos = static_cast<std::size_t>(it - ps.begin());
    return SpecialPartition(std::move(p), pos);
}

std::optional<int> SpecialPartition::overlined_value() const {
    if (!overlined) return std::nullopt;
    return base[*overlined];
}

bool SpecialPartition::operator==(const SpecialPartition& o) const {
    return base == o.base && overlined_value() == o.overlined_value();
}

std::string SpecialPartition::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t s = 0; s < base.parts().size(); ++s) {
        if (s) os << ',';
        if (overlined && *overlined == s) os << '~';
        os << base[s];
    }
    os << ')';
    return os.str();
}

int GGMarking::N(int r) const {
    if (r < 1 || r > max_mark()) return 0;
    return static_cast<int>(rows[r - 1].size());
}

int GGMarking::row(int r, int s) const {
    if (!has_row_entry(r, s))
        throw ContractError("row entry lambda^(" + std::to_string(r) + ")_" + std::to_string(s) + " does not exist");
    return rows[r - 1][s - 1];
}

std::optional<std::size_t> GGMarking::find(int v, int r) const {
    for (std::size_t s = 0; s < values.size(); ++s)
        if (values[s] == v && marks[s] == r) return s;
    return std::nullopt;
}

std::vector<int> GGMarking::marks_of(int v) const {
    std::vector<int> out;
    for (std::size_t s = 0; s < values.size(); ++s)
        if (values[s] == v) out.push_back(marks[s]);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<int> GGMarking::row_index(int r, int v) const {
    if (r < 1 || r > max_mark()) return std::nullopt;
    const auto& row = rows[r - 1];
    for (std::size_t s = 0; s < row.size(); ++s)
        if (row[s] == v) return static_cast<int>(s) + 1;
    return std::nullopt;
}

namespace {

GGMarking mark_impl(const Partition& p, std::optional<std::size_t> over) {
    GGMarking m;
    m.values = p.parts();
    m.overlined = over;
    const std::size_t n = m.values.size();
    m.marks.assign(n, 0);
    std::vector<char> used;
    for (std::size_t s = n; s-- > 0;) {
        const int v = m.values[s];
        used.assign(n + 2, 0);
        for (std::size_t g = s + 1; g < n; ++g) {
            int d = v - m.values[g];
            if (d > 2 || (v % 2 && d == 2)) break;
            used[static_cast<std::size_t>(m.marks[g])] = 1;
        }
        int r = (over && *over == s) ? 2 : 1;
        while (used[static_cast<std::size_t>(r)]) ++r;
        m.marks[s] = r;
    }
    int top = n ? *std::max_element(m.marks.begin(), m.marks.end()) : 0;
    m.rows.assign(static_cast<std::size_t>(top), {});
    for (std::size_t s = 0; s < n; ++s) m.rows[static_cast<std::size_t>(m.marks[s] - 1)].push_back(m.values[s]);
    return m;
}

}  // namespace

GGMarking gg_mark(const Partition& p) {
    GGMarking m = mark_impl(p, std::nullopt);
    for (int r = 2; r <= m.max_mark(); ++r)
        if (m.N(r) > m.N(r - 1)) throw ContractError("row sizes not monotone for " + p.str());
    return m;
}

GGMarking gg_mark_special(const SpecialPartition& p) { return mark_impl(p.base, p.overlined); }

bool is_band_at(const Partition& p, int k, std::size_t s) {
    std::size_t last = s + static_cast<std::size_t>(k - 2);
    if (k < 2 || last >= p.parts().size()) return false;
    int a = p[s], b = p[last];
    return a % 2 ? a < b + 2 : a <= b + 2;
}

std::vector<Band> bands(const Partition& p, int k) {
    if (k < 2) throw ParamError("bands need k >= 2");
    std::vector<Band> out;
    for (std::size_t s = 0; s < p.parts().size(); ++s) {
        if (!is_band_at(p, k, s)) continue;
        Band b;
        b.start = s;
        b.values.assign(p.parts().begin() + static_cast<long>(s), p.parts().begin() + static_cast<long>(s) + k - 1);
        out.push_back(std::move(b));
    }
    return out;
}

bool band_good(const Partition& p, const Band& b, int i) {
    if (b.values.empty()) throw ParamError("empty band");
    int sum = 0;
    for (int v : b.values) sum += v / 2;
    int rhs = i - 1 + p.odd_count_up_to(b.values.front());
    return (sum - rhs) % 2 == 0;
}

bool band_good(const SpecialPartition& p, const Band& b, int i) { return band_good(p.base, b, i); }

namespace {

Band window(const Partition& p, std::size_t start, int k) {
    if (start + static_cast<std::size_t>(k - 1) > p.parts().size())
        throw ContractError("induced window runs past the last part of " + p.str());
    Band b;
    b.start = start;
    b.values.assign(p.parts().begin() + static_cast<long>(start), p.parts().begin() + static_cast<long>(start) + k - 1);
    return b;
}

Band induced_impl(const Partition& p, const GGMarking& m, std::optional<std::size_t> over, int k, int q) {
    if (k < 2) throw ParamError("bands need k >= 2");
    if (q < 1 || q > m.N(k - 1)) throw ParamError("induced band index out of range");
    int v = m.row(k - 1, q);
    auto pos = m.find(v, k - 1);
    if (!pos) throw ContractError("marked part not found");
    if (over && *over == *pos) {
        Band b;
        b.start = *pos;
        b.synthetic = true;
        b.values.push_back(v + 1);
        b.values.push_back(v);
        for (int r = 2; r < k - 1; ++r) b.values.push_back(v - 1);
        b.values.resize(static_cast<std::size_t>(k - 1));
        return b;
    }
    return window(p, *pos, k);
}

}  // namespace

Band induced_band(const Partition& p, const GGMarking& m, int k, int q) { return induced_impl(p, m, std::nullopt, k, q); }

Band induced_band(const SpecialPartition& p, const GGMarking& m, int k, int q) {
    return induced_impl(p.base, m, p.overlined, k, q);
}

bool all_bands_good(const Partition& p, int k, int i) {
    for (const Band& b : bands(p, k))
        if (!band_good(p, b, i)) return false;
    return true;
}

bool in_C0_via_induced(const Partition& p, int k, int i) {
    if (!satisfies_C(p, IdentityParams{k, i, 1})) throw ParamError("partition is not in the j=1 class");
    GGMarking m = gg_mark(p);
    for (int q = 1; q <= m.N(k - 1); ++q)
        if (!band_good(p, induced_band(p, m, k, q), i)) return false;
    return true;
}

bool all_induced_bands_good(const SpecialPartition& p, int k, int i) {
    GGMarking m = gg_mark_special(p);
    for (int q = 1; q <= m.N(k - 1); ++q)
        if (!band_good(p, induced_band(p, m, k, q), i)) return false;
    return true;
}

namespace {

struct SpecialFreq {
    std::vector<int> f;     // ordinary copies
    std::vector<int> fbar;  // overlined copies
    int at(int v) const { return v >= 0 && v < static_cast<int>(f.size()) ? f[v] : 0; }
    int bar(int v) const { return v >= 0 && v < static_cast<int>(fbar.size()) ? fbar[v] : 0; }
};

SpecialFreq special_freq(const SpecialPartition& sp) {
    int top = sp.base.empty() ? 0 : sp.base[0];
    SpecialFreq sf{std::vector<int>(static_cast<std::size_t>(top) + 4, 0), std::vector<int>(static_cast<std::size_t>(top) + 4, 0)};
    for (std::size_t s = 0; s < sp.base.parts().size(); ++s) {
        if (sp.overlined && *sp.overlined == s)
            ++sf.fbar[sp.base[s]];
        else
            ++sf.f[sp.base[s]];
    }
    return sf;
}

}  // namespace

std::optional<std::string> special_class_violation(const SpecialPartition& sp, const IdentityParams& pr) {
    require_class_params(pr);
    if (sp.overlined) {
        int v = sp.base[*sp.overlined];
        if (v % 2 == 0 || v != sp.base.largest_odd()) return "overline not on the largest odd part";
    }
    SpecialFreq sf = special_freq(sp);
    const int top = static_cast<int>(sf.f.size()) - 4;
    if (sf.at(1) + sf.bar(1) + sf.at(2) > pr.i - 1) return "condition (1): f1+f2 > i-1";
    for (int v = 1; v <= top; v += 2)
        if (sf.at(v) + sf.bar(v) > 1) return "condition (2): repeated odd part " + std::to_string(v);
    for (int t = 0; 2 * t <= top; ++t) {
        int s = sf.at(2 * t) + sf.at(2 * t + 1) + sf.bar(2 * t + 1) + sf.at(2 * t + 2);
        if (s > pr.k - 1) return "condition (3): window at " + std::to_string(2 * t) + " exceeds k-1";
    }
    GGMarking m = gg_mark_special(sp);
    if (sp.overlined) {
        int v = sp.base[*sp.overlined];
        if (!m.has(v - 3, 1) || !m.has(v + 1, 1)) return "condition (5): overlined part lacks 1-marked neighbours";
    }
    if (m.max_mark() > pr.k - 1) return "marking uses more than k-1 marks";
    if (pr.j == 0 && !all_induced_bands_good(sp, pr.k, pr.i)) return "parity: an induced band is bad";
    return std::nullopt;
}

bool special_condition4(const SpecialPartition& sp, const IdentityParams& pr) {
    SpecialFreq sf = special_freq(sp);
    const int top = static_cast<int>(sf.f.size()) - 4;
    const int mod = 2 - pr.j;
    for (int t = 0; 2 * t <= top; ++t) {
        int a = sf.at(2 * t), b = sf.at(2 * t + 1), c = sf.at(2 * t + 2);
        if (a + b + c != pr.k - 1) continue;
        int lhs = t * a + t * b + (t + 1) * c;
        int rhs = sp.base.odd_count_up_to(2 * t + 2) + pr.i - 1;
        if ((lhs - rhs) % mod != 0) return false;
    }
    return true;
}

}  // namespace gg

#pragma once

#include <optional>
#include <vector>

#include "gg/partition.hpp"

namespace gg {

// A partition whose largest odd part may carry an overline.
struct SpecialPartition {
    Partition base;
    std::optional<std::size_t> overlined;  // position in base.parts()

    SpecialPartition() = default;
    explicit SpecialPartition(Partition p) : base(std::move(p)) {}
    SpecialPartition(Partition p, std::optional<std::size_t> o);

    // Overline the copy of value v (must be the largest odd part).
    static SpecialPartition with_overline(Partition p, int v);
    std::optional<int> overlined_value() const;
    bool operator==(const SpecialPartition& o) const;
    std::string str() const;
};

class GGMarking {
public:
    std::vector<int> values;  // aligned with parts, largest first
    std::vector<int> marks;
    std::optional<std::size_t> overlined;
    std::vector<std::vector<int>> rows;  // rows[r-1]: r-marked parts, decreasing

    int max_mark() const { return static_cast<int>(rows.size()); }
    int N(int r) const;
    // lambda^{(r)}_s, 1-based s. Out of range -> throws.
    int row(int r, int s) const;
    bool has_row_entry(int r, int s) const { return s >= 1 && s <= N(r); }
    // Position of the r-marked part equal to v.
    std::optional<std::size_t> find(int v, int r) const;
    bool has(int v, int r) const { return find(v, r).has_value(); }
    std::vector<int> marks_of(int v) const;  // ascending
    // Index s with lambda^{(r)}_s == v.
    std::optional<int> row_index(int r, int v) const;
};

GGMarking gg_mark(const Partition& p);
GGMarking gg_mark_special(const SpecialPartition& p);

struct Band {
    std::size_t start = 0;  // 0-based position of the first part
    std::vector<int> values;
    bool synthetic = false;  // special band of an overlined part
    bool operator==(const Band&) const = default;
};

std::vector<Band> bands(const Partition& p, int k);
bool is_band_at(const Partition& p, int k, std::size_t s);
// Parity test of the floor-halves sum. The O-count is taken in `p`.
bool band_good(const Partition& p, const Band& b, int i);
bool band_good(const SpecialPartition& p, const Band& b, int i);

// The band induced by the q-th (k-1)-marked part, q 1-based.
Band induced_band(const Partition& p, const GGMarking& m, int k, int q);
Band induced_band(const SpecialPartition& p, const GGMarking& m, int k, int q);

bool all_bands_good(const Partition& p, int k, int i);
bool in_C0_via_induced(const Partition& p, int k, int i);
bool all_induced_bands_good(const SpecialPartition& p, int k, int i);

// Membership in the class of special partitions used by the reduction
// intermediates: conditions (1)-(3),(5) and, for j = 0, the induced-band
// criterion under the special marking. Returns a description of the first
// violated clause, or nullopt.
std::optional<std::string> special_class_violation(const SpecialPartition& p, const IdentityParams& params);
// Literal condition (4) of the special class, with modulus 2-j.
bool special_condition4(const SpecialPartition& p, const IdentityParams& params);

}  // namespace gg

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gg/marking.hpp"
#include "gg/partition.hpp"

namespace gg {

enum class OneType { Odd, Even };
enum class Direction { Forward, Backward };

// Type of the s-th 1-marked part, s 1-based.
OneType one_mark_type(const Partition& p, const GGMarking& m, int s);
OneType one_mark_type(const Partition& p, int s);

// Subsets of the class cut out by the types of the 1-marked parts.  All of
// them also require p to satisfy the class conditions for `params`.
bool in_C_p(const Partition& lam, const IdentityParams& params, int p);      // first odd type at p
bool in_C_bar_p(const Partition& lam, const IdentityParams& params, int p);  // odd type at p-1 only
bool in_C_arrow_p(const Partition& lam, const IdentityParams& params, int p); // 1..p all even type

// lambda^{(1)}_{p+1} + 2 <= 2t+1 < lambda^{(1)}_p, with infinite sentinels.
bool in_C_less(const Partition& lam, const IdentityParams& params, int p, int t);
bool in_C_less_m(const Partition& lam, const IdentityParams& params, int m);
bool in_C_tri(const Partition& mu, const IdentityParams& params, int p, int t);
bool in_C_eq(const Partition& mu, const IdentityParams& params, int p, int t);

// Largest odd part 2t+1 = mu^{(1)}_{p+1} read as an insertion part: (p, t).
// Throws ParamError when mu has no odd part.
std::optional<std::pair<int, int>> insertion_part(const Partition& mu);
// Reduction index of the largest odd part, when it is not an insertion part.
std::optional<int> reduction_part(const Partition& mu);

Partition theta(const Partition& lam, int p, Direction dir, const IdentityParams& params);
Partition theta_iter(const Partition& lam, int p, Direction dir, const IdentityParams& params);

Partition combine(const Partition& lam, int p, int t, const IdentityParams& params);
Partition divide(const Partition& mu, int p, int t, const IdentityParams& params);

// The (p, t) that insert() would use for m.  nullopt if no p qualifies.
std::optional<std::pair<int, int>> insertion_split(const Partition& lam, int m);
Partition insert(const Partition& lam, int m, const IdentityParams& params);
std::pair<Partition, int> separate(const Partition& mu, const IdentityParams& params);
bool ssins_check(const Partition& mu, int m, int m2, const IdentityParams& params);

Partition phi22(const Partition& lam, const std::vector<int>& eta);
std::pair<Partition, std::vector<int>> psi22(const Partition& pi);

enum class HatType { A1, A2, B, C, O };
enum class HatCluster { A1, A2, A3, B, C };
enum class CheckType { A1, A2, A3, B, C };

const char* name(HatType t);
const char* name(HatCluster c);
const char* name(CheckType c);

struct Block {
    int first = 0;  // 1-based, inclusive
    int last = 0;
    bool contains(int b) const { return first <= b && b <= last; }
    bool operator==(const Block&) const = default;
};

struct HatProfile {
    std::vector<HatType> types;      // types[b-1]
    std::vector<int> anchors;        // anchors[b-1] = R^_b
    std::vector<Block> blocks;       // from the top (block containing p) down to 1
    std::vector<HatCluster> labels;  // aligned with blocks
    int block_of(int b) const;
    HatCluster cluster_of(int b) const { return labels[static_cast<std::size_t>(block_of(b))]; }
};

struct CheckProfile {
    std::vector<CheckType> types;
    std::vector<Block> blocks;
    std::vector<CheckType> labels;
    int block_of(int b) const;
    CheckType cluster_of(int b) const { return labels[static_cast<std::size_t>(block_of(b))]; }
};

HatProfile hat_profile(const Partition& lam, int p);
CheckProfile check_profile(const Partition& mu, int p);

bool in_C_hat(const Partition& lam, const IdentityParams& params, int p);
bool in_C_check(const Partition& mu, const IdentityParams& params, int p);

// Intermediates lambda^1..lambda^p (reduce) or mu^{p-1}..mu^1, lambda (dilate).
Partition reduce(const Partition& lam, int p, const IdentityParams& params,
                 std::vector<SpecialPartition>* trace = nullptr);
Partition dilate(const Partition& mu, int p, const IdentityParams& params,
                 std::vector<SpecialPartition>* trace = nullptr);

enum class Decision { Insert, Reduce };

struct StepDecision {
    Decision what = Decision::Insert;
    int rule = 0;  // which of the four comparisons fired
    int p1 = 0;    // insertion split of m
    int t1 = 0;
    int s = 0;     // R^_p
    int anchor_value = 0;
};

StepDecision decide_step(const Partition& lam, int p, int m, const IdentityParams& params);

struct TraceStep {
    std::string op;
    int arg = 0;
    int weight_before = 0;
    int weight_after = 0;
    Partition result;
    std::vector<std::string> verified;
};

Partition phi(const Triplet& tr, const IdentityParams& params, std::vector<TraceStep>* trace = nullptr);
Triplet psi(const Partition& pi, const IdentityParams& params, std::vector<TraceStep>* trace = nullptr);

}  // namespace gg

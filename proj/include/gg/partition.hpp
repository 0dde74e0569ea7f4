#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gg {

using BigInt = boost::multiprecision::cpp_int;

// Parameters outside a theorem's hypothesis, bad input shapes.
struct ParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A set-membership contract failed inside a map.  Indicates a bug or a gap.
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

class Partition {
public:
    Partition() = default;
    // Sorts into non-increasing order. Throws ParamError on parts < 1.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t s) const { return parts_[s]; }

    int frequency(int t) const;
    // Number of odd parts <= n, counted with multiplicity.
    int odd_count_up_to(int n) const;
    int largest_odd() const;  // 0 if none

    std::string str() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

inline Partition make_partition(std::vector<int> parts) { return Partition(std::move(parts)); }
inline int frequency(const Partition& p, int t) { return p.frequency(t); }
inline int odd_count_up_to(const Partition& p, int n) { return p.odd_count_up_to(n); }

struct IdentityParams {
    int k = 2;
    int i = 1;
    int j = 1;
    std::string str() const;
};

// Hypothesis checks, one per theorem family. Each throws ParamError.
void require_class_params(const IdentityParams& p);    // k >= i >= 1, j in {0,1}
void require_count_params(const IdentityParams& p);    // j=1 needs k>=i, j=0 needs k>i
void require_bressoud_params(const IdentityParams& p); // (2k+j)/2 > i >= 1
void require_companion_params(const IdentityParams& p); // k >= i >= 2, 2k+j > 4

bool satisfies_C(const Partition& p, const IdentityParams& params);

// Lexicographically descending list of all partitions of n in C_j(k,i).
std::vector<Partition> enumerate_C(const IdentityParams& params, int n);
void for_each_C(const IdentityParams& params, int n, const std::function<void(const Partition&)>& fn);

BigInt count_D(const IdentityParams& params, int n);
std::vector<BigInt> count_D_table(const IdentityParams& params, int n_max);
bool allowed_in_D(const IdentityParams& params, int part);

// Even-part members of C_j(k,i) of weight n whose marking rows have the given sizes
// (rows.size() == k-1).
std::vector<Partition> enumerate_E(const IdentityParams& params, const std::vector<int>& rows, int n);
// All even-part members of C_j(k,i) with weight <= w_max.
std::vector<Partition> enumerate_E_upto(const IdentityParams& params, int w_max);

struct Triplet {
    Partition lambda;
    std::vector<int> tau;  // distinct negative odd, sorted descending (-1 first)
    std::vector<int> eta;  // distinct odd, sorted descending
    int weight() const;
    bool operator==(const Triplet&) const = default;
};

// Throws ParamError naming the broken invariant.
void require_triplet(const Triplet& t, const IdentityParams& params);

// All triplets with |lambda|+|tau|+|eta| <= w_max, lambda in E_j(k,i).
std::vector<Triplet> enumerate_triplets(const IdentityParams& params, int w_max);

}  // namespace gg

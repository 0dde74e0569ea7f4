#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "gg/partition.hpp"

namespace gg {

struct TruncationError : std::logic_error {
    using std::logic_error::logic_error;
};

// Truncated Laurent series in one variable with exact integer coefficients.
// Coefficients of exponents above order() are unknown; exact series are
// finite polynomials known in full.
class LaurentSeries {
public:
    static constexpr long kExact = std::numeric_limits<long>::max();

    LaurentSeries() = default;  // exact zero
    static LaurentSeries monomial(long e, BigInt c = 1, long order = kExact);
    static LaurentSeries one(long order = kExact) { return monomial(0, 1, order); }
    static LaurentSeries zero(long order = kExact);
    static LaurentSeries from_coeffs(long min_exp, std::vector<BigInt> c, long order = kExact);

    bool exact() const { return order_ == kExact; }
    long order() const { return order_; }
    bool is_zero() const { return c_.empty(); }
    // Lowest exponent with a nonzero coefficient; order()+1 for a truncated zero.
    long min_exponent() const;
    long max_stored() const { return lo_ + static_cast<long>(c_.size()) - 1; }
    BigInt coeff(long e) const;
    const std::vector<BigInt>& raw() const { return c_; }

    LaurentSeries truncated(long q) const;
    LaurentSeries shifted(long e) const;
    LaurentSeries negated() const;

    // Multiply by (1 + s q^a). a may be any integer.
    LaurentSeries& mul_binomial(int s, long a);
    // Divide by (1 + s q^a), a > 0. Exact inputs need a target order.
    LaurentSeries& div_binomial(int s, long a, long order = kExact);
    // Multiply by c q^e.
    LaurentSeries& scale(const BigInt& c, long e);

    // Inverse of a series whose lowest term is +-q^m.
    LaurentSeries inverse(long order = kExact) const;

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    LaurentSeries& operator+=(const LaurentSeries& b) { return *this = *this + b; }
    LaurentSeries& operator*=(const LaurentSeries& b) { return *this = *this * b; }

    // Compare on the common window; returns the lowest differing exponent.
    friend std::optional<long> first_difference(const LaurentSeries& a, const LaurentSeries& b);
    friend bool agree(const LaurentSeries& a, const LaurentSeries& b) { return !first_difference(a, b); }

    // `exponent<TAB>coefficient` lines, from min(min_exponent, 0) to the cap.
    std::string dump(long cap = kExact) const;

private:
    void normalize();
    long lo_ = 0;
    std::vector<BigInt> c_;
    long order_ = kExact;
};

inline LaurentSeries invert_unit(const LaurentSeries& a, long order = LaurentSeries::kExact) { return a.inverse(order); }
inline LaurentSeries shift(const LaurentSeries& a, long e) { return a.shifted(e); }

// Product over l in [0,n) of (1 + sign q^{e+ld}). Exact for finite n.
LaurentSeries poch_exact(int sign, long e, long d, long n);
// Same, truncated at q. n < 0 means the infinite product (needs e >= 1, d >= 1).
constexpr long kInfinity = -1;
LaurentSeries poch(int sign, long e, long d, long n, long q);
// 1 / prod_{l<n} (1 + sign q^{e+ld}), e,d >= 1, n finite or kInfinity.
LaurentSeries inv_poch(int sign, long e, long d, long n, long q);

// Bivariate series in x (degree <= M) and q (degree <= Q), nonnegative exponents.
class BiSeries {
public:
    BiSeries(int M, int Q) : M_(M), Q_(Q), t_(static_cast<std::size_t>(M + 1) * static_cast<std::size_t>(Q + 1)) {}
    static BiSeries monomial(int M, int Q, int xd, int qd, const BigInt& c = 1);

    int M() const { return M_; }
    int Q() const { return Q_; }
    const BigInt& at(int m, int n) const { return t_[idx(m, n)]; }
    BigInt& at(int m, int n) { return t_[idx(m, n)]; }

    // Multiply by (1 + s x^b q^a), a >= 0, b >= 0, not both zero.
    BiSeries& mul_binomial(int s, int b, int a);
    // Divide by (1 + s q^a), a > 0.
    BiSeries& div_binomial(int s, int a);
    BiSeries& mul_monomial(int b, int a);
    // Multiply by a one-variable series in q with nonnegative exponents.
    BiSeries& mul_q(const LaurentSeries& f);

    BiSeries& operator+=(const BiSeries& o);
    LaurentSeries at_x_equal_one() const;
    bool operator==(const BiSeries& o) const { return M_ == o.M_ && Q_ == o.Q_ && t_ == o.t_; }

private:
    std::size_t idx(int m, int n) const { return static_cast<std::size_t>(m) * static_cast<std::size_t>(Q_ + 1) + static_cast<std::size_t>(n); }
    int M_, Q_;
    std::vector<BigInt> t_;
};

}  // namespace gg

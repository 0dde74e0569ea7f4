#include "gg/series.hpp"

#include <algorithm>
#include <sstream>

namespace gg {

namespace {

constexpr long kEx = LaurentSeries::kExact;

long add_order(long a, long b) { return (a == kEx || b == kEx) ? kEx : a + b; }

}  // namespace

LaurentSeries LaurentSeries::monomial(long e, BigInt c, long order) {
    LaurentSeries s;
    s.order_ = order;
    if (e <= order && c != 0) {
        s.lo_ = e;
        s.c_.push_back(std::move(c));
    }
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::zero(long order) {
    LaurentSeries s;
    s.order_ = order;
    return s;
}

LaurentSeries LaurentSeries::from_coeffs(long min_exp, std::vector<BigInt> c, long order) {
    LaurentSeries s;
    s.lo_ = min_exp;
    s.c_ = std::move(c);
    s.order_ = order;
    if (order != kEx && s.max_stored() > order) s.c_.resize(static_cast<std::size_t>(std::max(0L, order - min_exp + 1)));
    s.normalize();
    return s;
}

void LaurentSeries::normalize() {
    std::size_t a = 0;
    while (a < c_.size() && c_[a] == 0) ++a;
    if (a == c_.size()) {
        c_.clear();
        lo_ = 0;
        return;
    }
    if (a) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(a));
        lo_ += static_cast<long>(a);
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

long LaurentSeries::min_exponent() const {
    if (!c_.empty()) return lo_;
    return exact() ? kEx : order_ + 1;
}

BigInt LaurentSeries::coeff(long e) const {
    if (e > order_) throw TruncationError("coefficient of q^" + std::to_string(e) + " is beyond the truncation order " + std::to_string(order_));
    if (c_.empty() || e < lo_ || e > max_stored()) return 0;
    return c_[static_cast<std::size_t>(e - lo_)];
}

LaurentSeries LaurentSeries::truncated(long q) const {
    LaurentSeries s = *this;
    s.order_ = std::min(order_, q);
    if (!s.c_.empty() && s.max_stored() > s.order_) {
        long keep = s.order_ - s.lo_ + 1;
        s.c_.resize(static_cast<std::size_t>(std::max(0L, keep)));
    }
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::shifted(long e) const {
    LaurentSeries s = *this;
    if (!s.c_.empty()) s.lo_ += e;
    if (!exact()) s.order_ += e;
    return s;
}

LaurentSeries LaurentSeries::negated() const {
    LaurentSeries s = *this;
    for (auto& x : s.c_) x = -x;
    return s;
}

LaurentSeries& LaurentSeries::scale(const BigInt& c, long e) {
    if (c == 0) {
        c_.clear();
        lo_ = 0;
        if (!exact()) order_ += e;
        return *this;
    }
    for (auto& x : c_) x *= c;
    if (!c_.empty()) lo_ += e;
    if (!exact()) order_ += e;
    return *this;
}

LaurentSeries& LaurentSeries::mul_binomial(int s, long a) {
    long new_order = exact() ? kEx : order_ + std::min(a, 0L);
    if (c_.empty()) {
        order_ = new_order;
        return *this;
    }
    long lo = std::min(lo_, lo_ + a);
    long hi = std::max(max_stored(), max_stored() + a);
    if (new_order != kEx) hi = std::min(hi, new_order);
    if (hi < lo) {
        c_.clear();
        lo_ = 0;
        order_ = new_order;
        return *this;
    }
    std::vector<BigInt> out(static_cast<std::size_t>(hi - lo + 1));
    for (long e = lo; e <= hi; ++e) {
        BigInt& o = out[static_cast<std::size_t>(e - lo)];
        if (e >= lo_ && e <= max_stored()) o = c_[static_cast<std::size_t>(e - lo_)];
        long f = e - a;
        if (f >= lo_ && f <= max_stored()) {
            if (s > 0)
                o += c_[static_cast<std::size_t>(f - lo_)];
            else
                o -= c_[static_cast<std::size_t>(f - lo_)];
        }
    }
    c_ = std::move(out);
    lo_ = lo;
    order_ = new_order;
    normalize();
    return *this;
}

LaurentSeries& LaurentSeries::div_binomial(int s, long a, long order) {
    if (a <= 0) throw ParamError("div_binomial needs a positive exponent");
    long new_order = std::min(order_, order);
    if (new_order == kEx) throw TruncationError("dividing an exact series needs a truncation order");
    order_ = new_order;
    if (c_.empty()) return *this;
    if (lo_ > order_) {
        c_.clear();
        lo_ = 0;
        return *this;
    }
    c_.resize(static_cast<std::size_t>(order_ - lo_ + 1));
    for (std::size_t e = static_cast<std::size_t>(a); e < c_.size(); ++e) {
        if (s > 0)
            c_[e] -= c_[e - static_cast<std::size_t>(a)];
        else
            c_[e] += c_[e - static_cast<std::size_t>(a)];
    }
    normalize();
    return *this;
}

LaurentSeries LaurentSeries::inverse(long order) const {
    if (c_.empty()) throw ParamError("cannot invert zero");
    const BigInt& u0 = c_.front();
    if (u0 != 1 && u0 != -1) throw ParamError("invert_unit: lowest coefficient is not +-1");
    const long m = lo_;
    long r = exact() ? order : std::min(order_ - 2 * m, order);
    if (r == kEx) throw TruncationError("inverting an exact series needs a truncation order");
    long len = r + m + 1;  // coefficients of the unit part needed
    if (len <= 0) throw TruncationError("truncation underflow in inverse");
    std::vector<BigInt> v(static_cast<std::size_t>(len));
    v[0] = u0;  // 1/(+-1) = +-1
    for (long n = 1; n < len; ++n) {
        BigInt acc = 0;
        long top = std::min<long>(n, static_cast<long>(c_.size()) - 1);
        for (long l = 1; l <= top; ++l) acc += c_[static_cast<std::size_t>(l)] * v[static_cast<std::size_t>(n - l)];
        v[static_cast<std::size_t>(n)] = u0 == 1 ? BigInt(-acc) : acc;
    }
    return from_coeffs(-m, std::move(v), r);
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    long ord = std::min(a.order_, b.order_);
    if (a.c_.empty() && b.c_.empty()) return LaurentSeries::zero(ord);
    long lo = a.c_.empty() ? b.lo_ : (b.c_.empty() ? a.lo_ : std::min(a.lo_, b.lo_));
    long hi = std::max(a.c_.empty() ? lo : a.max_stored(), b.c_.empty() ? lo : b.max_stored());
    if (ord != kEx) hi = std::min(hi, ord);
    if (hi < lo) return LaurentSeries::zero(ord);
    std::vector<BigInt> out(static_cast<std::size_t>(hi - lo + 1));
    for (long e = lo; e <= hi; ++e) {
        BigInt& o = out[static_cast<std::size_t>(e - lo)];
        if (!a.c_.empty() && e >= a.lo_ && e <= a.max_stored()) o += a.c_[static_cast<std::size_t>(e - a.lo_)];
        if (!b.c_.empty() && e >= b.lo_ && e <= b.max_stored()) o += b.c_[static_cast<std::size_t>(e - b.lo_)];
    }
    return LaurentSeries::from_coeffs(lo, std::move(out), ord);
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + b.negated(); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    if ((a.exact() && a.c_.empty()) || (b.exact() && b.c_.empty())) return LaurentSeries();
    long ord = std::min(a.exact() ? kEx : add_order(a.order_, b.min_exponent()),
                        b.exact() ? kEx : add_order(b.order_, a.min_exponent()));
    if (a.c_.empty() || b.c_.empty()) return LaurentSeries::zero(ord);
    long lo = a.lo_ + b.lo_;
    long hi = a.max_stored() + b.max_stored();
    if (ord != kEx) hi = std::min(hi, ord);
    if (hi < lo) return LaurentSeries::zero(ord);
    std::vector<BigInt> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t x = 0; x < a.c_.size(); ++x) {
        if (a.c_[x] == 0) continue;
        long ex = a.lo_ + static_cast<long>(x);
        long ymax = std::min<long>(static_cast<long>(b.c_.size()) - 1, hi - ex - b.lo_);
        for (long y = 0; y <= ymax; ++y) out[static_cast<std::size_t>(ex + b.lo_ + y - lo)] += a.c_[x] * b.c_[static_cast<std::size_t>(y)];
    }
    return LaurentSeries::from_coeffs(lo, std::move(out), ord);
}

std::optional<long> first_difference(const LaurentSeries& a, const LaurentSeries& b) {
    long ord = std::min(a.order_, b.order_);
    long lo = std::min(a.c_.empty() ? 0 : a.lo_, b.c_.empty() ? 0 : b.lo_);
    long hi = std::max(a.c_.empty() ? lo : a.max_stored(), b.c_.empty() ? lo : b.max_stored());
    if (ord != kEx) hi = std::min(hi, ord);
    for (long e = lo; e <= hi; ++e)
        if (a.coeff(e) != b.coeff(e)) return e;
    return std::nullopt;
}

std::string LaurentSeries::dump(long cap) const {
    std::ostringstream os;
    long lo = std::min(c_.empty() ? 0L : lo_, 0L);
    long hi = exact() ? (c_.empty() ? 0 : max_stored()) : order_;
    hi = std::min(hi, cap);
    for (long e = lo; e <= hi; ++e) os << e << '\t' << coeff(e) << '\n';
    return os.str();
}

LaurentSeries poch_exact(int sign, long e, long d, long n) {
    LaurentSeries s = LaurentSeries::one();
    for (long l = 0; l < n; ++l) s.mul_binomial(sign, e + l * d);
    return s;
}

LaurentSeries poch(int sign, long e, long d, long n, long q) {
    if (n == kInfinity) {
        if (e < 1 || d < 1) throw ParamError("infinite product needs positive start and step");
        LaurentSeries s = LaurentSeries::one(q);
        for (long x = e; x <= q; x += d) s.mul_binomial(sign, x);
        return s;
    }
    if (n < 0) throw ParamError("negative product length");
    if (e >= 1 && d >= 1) {
        LaurentSeries s = LaurentSeries::one(q);
        for (long l = 0; l < n && e + l * d <= q; ++l) s.mul_binomial(sign, e + l * d);
        return s;
    }
    return poch_exact(sign, e, d, n).truncated(q);
}

LaurentSeries inv_poch(int sign, long e, long d, long n, long q) {
    if (e < 1 || d < 1) throw ParamError("inv_poch needs positive start and step");
    LaurentSeries s = LaurentSeries::one(q);
    for (long l = 0; (n == kInfinity || l < n) && e + l * d <= q; ++l) s.div_binomial(sign, e + l * d);
    return s;
}

BiSeries BiSeries::monomial(int M, int Q, int xd, int qd, const BigInt& c) {
    BiSeries b(M, Q);
    if (xd <= M && qd <= Q) b.at(xd, qd) = c;
    return b;
}

BiSeries& BiSeries::mul_binomial(int s, int b, int a) {
    if (a < 0 || b < 0 || (a == 0 && b == 0)) throw ParamError("bad binomial exponent");
    for (int m = M_; m >= b; --m)
        for (int n = Q_; n >= a; --n) {
            const BigInt& src = at(m - b, n - a);
            if (src == 0) continue;
            if (s > 0)
                at(m, n) += src;
            else
                at(m, n) -= src;
        }
    return *this;
}

BiSeries& BiSeries::div_binomial(int s, int a) {
    if (a <= 0) throw ParamError("div_binomial needs a positive exponent");
    for (int m = 0; m <= M_; ++m)
        for (int n = a; n <= Q_; ++n) {
            if (s > 0)
                at(m, n) -= at(m, n - a);
            else
                at(m, n) += at(m, n - a);
        }
    return *this;
}

BiSeries& BiSeries::mul_monomial(int b, int a) {
    for (int m = M_; m >= 0; --m)
        for (int n = Q_; n >= 0; --n) at(m, n) = (m >= b && n >= a) ? at(m - b, n - a) : BigInt(0);
    return *this;
}

BiSeries& BiSeries::mul_q(const LaurentSeries& f) {
    if (!f.is_zero() && f.min_exponent() < 0) throw ParamError("mul_q needs a power series");
    if (f.order() < Q_) throw TruncationError("factor truncated below the table order");
    std::vector<BigInt> fc(static_cast<std::size_t>(Q_ + 1));
    for (int n = 0; n <= Q_; ++n) fc[static_cast<std::size_t>(n)] = f.coeff(n);
    for (int m = 0; m <= M_; ++m) {
        std::vector<BigInt> row(static_cast<std::size_t>(Q_ + 1));
        for (int x = 0; x <= Q_; ++x) {
            const BigInt& v = at(m, x);
            if (v == 0) continue;
            for (int y = 0; x + y <= Q_; ++y) row[static_cast<std::size_t>(x + y)] += v * fc[static_cast<std::size_t>(y)];
        }
        for (int n = 0; n <= Q_; ++n) at(m, n) = std::move(row[static_cast<std::size_t>(n)]);
    }
    return *this;
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
    if (o.M_ != M_ || o.Q_ != Q_) throw ParamError("BiSeries shape mismatch");
    for (std::size_t x = 0; x < t_.size(); ++x) t_[x] += o.t_[x];
    return *this;
}

LaurentSeries BiSeries::at_x_equal_one() const {
    std::vector<BigInt> c(static_cast<std::size_t>(Q_ + 1));
    for (int m = 0; m <= M_; ++m)
        for (int n = 0; n <= Q_; ++n) c[static_cast<std::size_t>(n)] += at(m, n);
    return LaurentSeries::from_coeffs(0, std::move(c), Q_);
}

}  // namespace gg

#pragma once

#include <cmath>
#include <cstdlib>
#include <limits>

namespace solvdiff {

// Signed log-magnitude scalar: value = sign * exp(log_abs).
//
// All special-function and density arithmetic in this library runs through
// LogValue so that factors like exp(kappa*x^2/2) with exponents of several
// hundred never overflow a double. sign == 0 represents exactly zero
// (log_abs is then -inf by convention).
class LogValue {
  public:
    constexpr LogValue() = default;

    static LogValue from_double(double v) {
        if (v == 0.0) return LogValue();
        return LogValue(v > 0.0 ? +1 : -1, std::log(std::abs(v)));
    }

    // log_abs may be any real (or -inf for zero); sign in {-1,0,+1}.
    static LogValue from_log(double log_abs, int sign = +1) {
        if (sign == 0 || log_abs == -std::numeric_limits<double>::infinity())
            return LogValue();
        return LogValue(sign > 0 ? +1 : -1, log_abs);
    }

    static constexpr LogValue zero() { return LogValue(); }
    static LogValue one() { return LogValue(+1, 0.0); }

    int sign() const { return sign_; }
    double log_abs() const { return log_abs_; }
    bool is_zero() const { return sign_ == 0; }

    // Round-trips to double; exponents outside the double range collapse to
    // 0 or +-inf, which callers treat as the honest limit value.
    double to_double() const {
        if (sign_ == 0) return 0.0;
        return sign_ * std::exp(log_abs_);
    }

    LogValue operator-() const {
        LogValue r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    LogValue operator*(const LogValue& o) const {
        if (sign_ == 0 || o.sign_ == 0) return LogValue();
        return LogValue(sign_ * o.sign_, log_abs_ + o.log_abs_);
    }

    LogValue operator/(const LogValue& o) const {
        if (o.sign_ == 0) {
            // division by exact zero: signed infinity in log space
            return LogValue(sign_ == 0 ? +1 : sign_,
                            std::numeric_limits<double>::infinity());
        }
        if (sign_ == 0) return LogValue();
        return LogValue(sign_ * o.sign_, log_abs_ - o.log_abs_);
    }

    LogValue& operator*=(const LogValue& o) { return *this = *this * o; }
    LogValue& operator/=(const LogValue& o) { return *this = *this / o; }

    // |x|^e with the sign of x preserved (only used with integer-like intent
    // on negative bases; domain checks stay with the caller).
    LogValue pow(double e) const {
        if (sign_ == 0) return e == 0.0 ? one() : LogValue();
        return LogValue(sign_, e * log_abs_);
    }

    // Signed addition via log-sum-exp. When the two terms have opposite
    // signs and nearly equal magnitude, cancelled_digits (if given) receives
    // the number of decimal digits lost to cancellation.
    static LogValue add(const LogValue& a, const LogValue& b,
                        double* cancelled_digits = nullptr) {
        if (cancelled_digits) *cancelled_digits = 0.0;
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        const LogValue& big = (a.log_abs_ >= b.log_abs_) ? a : b;
        const LogValue& small = (a.log_abs_ >= b.log_abs_) ? b : a;
        const double d = small.log_abs_ - big.log_abs_;  // <= 0
        if (a.sign_ == b.sign_)
            return LogValue(a.sign_, big.log_abs_ + std::log1p(std::exp(d)));
        // opposite signs
        if (d == 0.0) {
            if (cancelled_digits)
                *cancelled_digits = std::numeric_limits<double>::infinity();
            return LogValue();
        }
        const double rem = -std::expm1(d);  // 1 - exp(d) in (0,1)
        if (cancelled_digits) *cancelled_digits = -std::log10(rem);
        return LogValue(big.sign_, big.log_abs_ + std::log(rem));
    }

    LogValue operator+(const LogValue& o) const { return add(*this, o); }
    LogValue operator-(const LogValue& o) const { return add(*this, -o); }
    LogValue& operator+=(const LogValue& o) { return *this = *this + o; }
    LogValue& operator-=(const LogValue& o) { return *this = *this - o; }

    friend LogValue abs(const LogValue& v) {
        return v.sign_ == 0 ? LogValue() : LogValue(+1, v.log_abs_);
    }

    // Total order consistent with the represented real values.
    bool operator<(const LogValue& o) const {
        if (sign_ != o.sign_) return sign_ < o.sign_;
        if (sign_ == 0) return false;
        return sign_ > 0 ? log_abs_ < o.log_abs_ : log_abs_ > o.log_abs_;
    }
    bool operator>(const LogValue& o) const { return o < *this; }

  private:
    constexpr LogValue(int s, double la) : sign_(s), log_abs_(la) {}

    int sign_ = 0;
    double log_abs_ = -std::numeric_limits<double>::infinity();
};

inline LogValue operator*(double a, const LogValue& b) {
    return LogValue::from_double(a) * b;
}

}  // namespace solvdiff

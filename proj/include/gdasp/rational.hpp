#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace gdasp {

/// Exact rational number, always in lowest terms with positive denominator.
class rational {
  public:
    rational() : q_(0) {}
    rational(long n) : q_(n) {}
    rational(long num, long den) : q_(num, den) { q_.canonicalize(); }
    explicit rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // "12", "-3/4", "0.25" (decimals are exact: 0.01 -> 1/100)
    static std::optional<rational> parse(std::string_view text);

    rational operator+(const rational& o) const { return rational(mpq_class(q_ + o.q_)); }
    rational operator-(const rational& o) const { return rational(mpq_class(q_ - o.q_)); }
    rational operator-() const { return rational(mpq_class(-q_)); }
    rational operator*(const rational& o) const { return rational(mpq_class(q_ * o.q_)); }
    rational operator/(const rational& o) const { return rational(mpq_class(q_ / o.q_)); }

    rational& operator+=(const rational& o) { q_ += o.q_; return *this; }
    rational& operator-=(const rational& o) { q_ -= o.q_; return *this; }
    rational& operator*=(const rational& o) { q_ *= o.q_; return *this; }

    bool operator==(const rational& o) const { return q_ == o.q_; }
    bool operator!=(const rational& o) const { return q_ != o.q_; }
    bool operator<(const rational& o) const { return q_ < o.q_; }
    bool operator<=(const rational& o) const { return q_ <= o.q_; }
    bool operator>(const rational& o) const { return q_ > o.q_; }
    bool operator>=(const rational& o) const { return q_ >= o.q_; }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    rational pow(unsigned e) const;

    /// "3" when the denominator is 1, otherwise "num/den".
    std::string str() const;

  private:
    mpq_class q_;
};

}  // namespace gdasp

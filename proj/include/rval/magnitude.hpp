#ifndef RVAL_MAGNITUDE_HPP
#define RVAL_MAGNITUDE_HPP

#include "rval/rational.hpp"

#include <string>

namespace rval {

enum class field_mode { padic_z, padic_q, trivial };

// Exact positive real of the form c * p^e, with c a positive rational whose
// numerator and denominator are coprime to p and e rational. The normal form
// is unique, so equality of parts is equality of values.
class magnitude {
  public:
    magnitude() : c_(1), e_(0), p_(2) {}
    magnitude(const rational& c, const rational& e, unsigned p);

    static magnitude one(unsigned p) { return magnitude(1, 0, p); }
    static magnitude from_rational(const rational& x, unsigned p);
    // p^e for rational e.
    static magnitude p_power(const rational& e, unsigned p) { return magnitude(1, e, p); }

    const rational& c() const { return c_; }
    const rational& e() const { return e_; }
    unsigned p() const { return p_; }

    bool is_one() const { return c_ == 1 && e_ == 0; }
    // Member of p^Q, i.e. the rational part is trivial.
    bool is_p_power() const { return c_ == 1; }
    bool in_value_group(field_mode mode) const;

    // Exact as a rational when e is an integer.
    rational as_rational() const;

    magnitude mul(const magnitude& o) const;
    magnitude div(const magnitude& o) const;
    magnitude inverse() const { return magnitude(rational(1) / c_, -e_, p_); }
    magnitude pow_int(long k) const;
    // (c p^e)^x for rational x; requires c == 1.
    magnitude pow_rational(const rational& x) const;

    // -1 / 0 / +1 comparing the denoted real numbers.
    int cmp(const magnitude& o) const;

    bool operator==(const magnitude& o) const { return c_ == o.c_ && e_ == o.e_ && p_ == o.p_; }
    bool operator!=(const magnitude& o) const { return !(*this == o); }
    bool operator<(const magnitude& o) const { return cmp(o) < 0; }
    bool operator<=(const magnitude& o) const { return cmp(o) <= 0; }
    bool operator>(const magnitude& o) const { return cmp(o) > 0; }
    bool operator>=(const magnitude& o) const { return cmp(o) >= 0; }

    std::string str() const;

  private:
    rational c_;
    rational e_;
    unsigned p_;
};

magnitude min(const magnitude& a, const magnitude& b);
magnitude max(const magnitude& a, const magnitude& b);

} // namespace rval

#endif

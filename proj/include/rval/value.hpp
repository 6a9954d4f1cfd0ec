#ifndef RVAL_VALUE_HPP
#define RVAL_VALUE_HPP

#include "rval/magnitude.hpp"

#include <optional>
#include <string>

namespace rval {

// Element of a rank <= 3 reified value group together with zero:
// U^lead * mag * eps^inf, where U exceeds every real number and eps is a
// positive infinitesimal sitting just below 1 (r < eps < 1 for every real
// r < 1). Ordering is lexicographic on (lead, mag, -inf): a larger lead wins,
// then a larger magnitude, then a smaller infinitesimal exponent.
class value {
  public:
    value() : zero_(true), lead_(0), inf_(0), mag_(magnitude::one(2)) {}

    static value zero(unsigned p) {
        value v;
        v.mag_ = magnitude::one(p);
        return v;
    }
    static value make(long lead, const magnitude& m, long inf) {
        value v;
        v.zero_ = false;
        v.lead_ = lead;
        v.mag_ = m;
        v.inf_ = inf;
        return v;
    }
    // Reification embedding of the positive reals, q -> (0, q, 0).
    static value reify(const magnitude& m) { return make(0, m, 0); }
    static value one(unsigned p) { return reify(magnitude::one(p)); }

    bool is_zero() const { return zero_; }
    long lead() const { return lead_; }
    long inf() const { return inf_; }
    const magnitude& mag() const { return mag_; }
    unsigned p() const { return mag_.p(); }

    // Member of the commensurable subgroup: sandwiched between a positive
    // real and its inverse, i.e. no super-infinitesimal part.
    bool commensurable() const { return zero_ || lead_ == 0; }

    // Image under the retraction to the commensurable part.
    value retract() const {
        if (zero_ || lead_ == 0)
            return *this;
        return zero(p());
    }

    // Real projection: the infimum of all reals r with *this <= r.
    // Empty for zero and for values below every real.
    std::optional<magnitude> real_part() const {
        if (zero_ || lead_ < 0)
            return std::nullopt;
        if (lead_ > 0)
            throw domain_error("Unbounded", "real part of a value above every real");
        return mag_;
    }

    int cmp(const value& o) const;
    value mul(const value& o) const;
    value inverse() const;
    value pow_int(long k) const;

    bool operator==(const value& o) const { return cmp(o) == 0; }
    bool operator!=(const value& o) const { return cmp(o) != 0; }
    bool operator<(const value& o) const { return cmp(o) < 0; }
    bool operator<=(const value& o) const { return cmp(o) <= 0; }
    bool operator>(const value& o) const { return cmp(o) > 0; }
    bool operator>=(const value& o) const { return cmp(o) >= 0; }

    std::string str() const;

  private:
    bool zero_;
    long lead_;
    long inf_;
    magnitude mag_;
};

enum class ordering { LT = -1, EQ = 0, GT = 1 };

inline ordering value_cmp(const value& x, const value& y) {
    int c = x.cmp(y);
    return c < 0 ? ordering::LT : (c > 0 ? ordering::GT : ordering::EQ);
}

inline value value_mul(const value& x, const value& y) { return x.mul(y); }

} // namespace rval

#endif

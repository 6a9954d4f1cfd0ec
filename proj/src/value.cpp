#include "rval/value.hpp"

namespace rval {

int value::cmp(const value& o) const {
    if (zero_ && o.zero_)
        return 0;
    if (zero_)
        return -1;
    if (o.zero_)
        return 1;
    if (lead_ != o.lead_)
        return lead_ < o.lead_ ? -1 : 1;
    int c = mag_.cmp(o.mag_);
    if (c != 0)
        return c;
    if (inf_ != o.inf_)
        return inf_ > o.inf_ ? -1 : 1; // larger eps exponent is smaller
    return 0;
}

value value::mul(const value& o) const {
    if (zero_ || o.zero_)
        return zero(p());
    return make(lead_ + o.lead_, mag_.mul(o.mag_), inf_ + o.inf_);
}

value value::inverse() const {
    if (zero_)
        throw domain_error("DivisionByZero", "inverse of the zero value");
    return make(-lead_, mag_.inverse(), -inf_);
}

value value::pow_int(long k) const {
    if (zero_) {
        if (k <= 0)
            throw domain_error("DivisionByZero", "nonpositive power of zero");
        return *this;
    }
    return make(lead_ * k, mag_.pow_int(k), inf_ * k);
}

std::string value::str() const {
    if (zero_)
        return "0";
    std::string s;
    if (lead_ != 0)
        s += "U^" + std::to_string(lead_) + "*";
    s += mag_.str();
    if (inf_ != 0)
        s += "*eps^" + std::to_string(inf_);
    return s;
}

} // namespace rval

#include "rval/magnitude.hpp"

namespace rval {

magnitude::magnitude(const rational& c, const rational& e, unsigned p) : c_(c), e_(e), p_(p) {
    if (p < 2)
        throw domain_error("BadPrime", "prime must be at least 2");
    if (c_ <= 0)
        throw domain_error("NotPositive", "magnitude requires c > 0");
    c_.canonicalize();
    e_.canonicalize();
    // Normalize: pull every factor of p out of c into the exponent.
    long vn = padic_val(mpz_class(c_.get_num()), p_);
    long vd = padic_val(mpz_class(c_.get_den()), p_);
    if (vn != 0 || vd != 0) {
        e_ += vn - vd;
        c_ /= pow_q(rational(p_), vn - vd);
        c_.canonicalize();
        e_.canonicalize();
    }
}

magnitude magnitude::from_rational(const rational& x, unsigned p) {
    return magnitude(x, 0, p);
}

bool magnitude::in_value_group(field_mode mode) const {
    switch (mode) {
    case field_mode::padic_z:
        return c_ == 1 && e_.get_den() == 1;
    case field_mode::padic_q:
        return c_ == 1;
    case field_mode::trivial:
        return is_one();
    }
    return false;
}

rational magnitude::as_rational() const {
    if (e_.get_den() != 1)
        throw domain_error("NotRational", "fractional exponent of p");
    return c_ * pow_q(rational(p_), e_.get_num().get_si());
}

magnitude magnitude::mul(const magnitude& o) const {
    if (p_ != o.p_)
        throw domain_error("PrimeMismatch", "magnitudes over different primes");
    return magnitude(c_ * o.c_, e_ + o.e_, p_);
}

magnitude magnitude::div(const magnitude& o) const {
    return mul(o.inverse());
}

magnitude magnitude::pow_int(long k) const {
    return magnitude(pow_q(c_, k), e_ * k, p_);
}

magnitude magnitude::pow_rational(const rational& x) const {
    if (c_ != 1)
        throw domain_error("NotPPower", "rational power needs c == 1");
    return magnitude(1, e_ * x, p_);
}

int magnitude::cmp(const magnitude& o) const {
    if (p_ != o.p_)
        throw domain_error("PrimeMismatch", "magnitudes over different primes");
    if (c_ == o.c_)
        return ::cmp(e_, o.e_) ; // p >= 2, so bigger exponent is bigger
    if (e_ == o.e_)
        return ::cmp(c_, o.c_);
    // c1 p^{e1} vs c2 p^{e2}  <=>  (c1/c2)^v vs p^a  with  e2 - e1 = a/v, v > 0.
    rational d = o.e_ - e_;
    d.canonicalize();
    unsigned long v = d.get_den().get_ui();
    long a = d.get_num().get_si();
    rational lhs = pow_q(c_ / o.c_, static_cast<long>(v));
    rational rhs = pow_q(rational(p_), a);
    return ::cmp(lhs, rhs);
}

std::string magnitude::str() const {
    if (is_one())
        return "1";
    std::string s;
    if (c_ != 1)
        s = rational_str(c_);
    if (e_ != 0) {
        if (!s.empty())
            s += "*";
        s += std::to_string(p_) + "^(" + rational_str(e_) + ")";
    }
    return s;
}

magnitude min(const magnitude& a, const magnitude& b) { return a.cmp(b) <= 0 ? a : b; }
magnitude max(const magnitude& a, const magnitude& b) { return a.cmp(b) >= 0 ? a : b; }

} // namespace rval

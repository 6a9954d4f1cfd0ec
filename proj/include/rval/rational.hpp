#ifndef RVAL_RATIONAL_HPP
#define RVAL_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace rval {

// Domain failure carrying the error label used by the CLI exit-code mapping.
struct domain_error : std::runtime_error {
    std::string kind;
    domain_error(std::string k, const std::string& what)
        : std::runtime_error(k + ": " + what), kind(std::move(k)) {}
};

struct schema_error : std::runtime_error {
    explicit schema_error(const std::string& what) : std::runtime_error(what) {}
};

using rational = mpq_class;

inline rational parse_rational(const std::string& s) {
    rational q;
    if (q.set_str(s, 10) != 0)
        throw schema_error("bad rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

// Canonical "num/den" (den omitted when 1); accepted back by parse_rational.
inline std::string rational_str(const rational& q) {
    return q.get_str();
}

// Exponent of p in n (n nonzero).
inline long padic_val(mpz_class n, unsigned p) {
    if (n == 0)
        throw domain_error("ZeroArgument", "p-adic valuation of zero");
    long v = 0;
    mpz_class q, r, pz(p);
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t());
        if (r != 0)
            return v;
        n = q;
        ++v;
    }
}

inline long padic_val(const rational& x, unsigned p) {
    return padic_val(mpz_class(x.get_num()), p) - padic_val(mpz_class(x.get_den()), p);
}

inline mpz_class pow_z(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline rational pow_q(const rational& b, long e) {
    if (e == 0)
        return rational(1);
    mpz_class num = pow_z(mpz_class(b.get_num()), static_cast<unsigned long>(e < 0 ? -e : e));
    mpz_class den = pow_z(mpz_class(b.get_den()), static_cast<unsigned long>(e < 0 ? -e : e));
    rational r = (e > 0) ? rational(num, den) : rational(den, num);
    r.canonicalize();
    return r;
}

} // namespace rval

#endif

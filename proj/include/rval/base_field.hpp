#ifndef RVAL_BASE_FIELD_HPP
#define RVAL_BASE_FIELD_HPP

#include "rval/magnitude.hpp"
#include "rval/poly.hpp"
#include "rval/value.hpp"

#include <optional>

namespace rval {

// Exactly represented ultrametric base: the rationals with either the p-adic
// norm (designated value group p^Z or p^Q) or the trivial norm. Magnitudes
// are factored with respect to p in every mode.
struct base_field {
    unsigned p = 2;
    field_mode mode = field_mode::padic_q;

    // |x| as a magnitude; nullopt for x == 0.
    std::optional<magnitude> norm(const rational& x) const {
        if (x == 0)
            return std::nullopt;
        if (mode == field_mode::trivial)
            return magnitude::one(p);
        return magnitude::p_power(rational(-padic_val(x, p)), p);
    }

    value norm_value(const rational& x) const {
        auto n = norm(x);
        return n ? value::reify(*n) : value::zero(p);
    }

    bool in_value_group(const magnitude& m) const { return m.in_value_group(mode); }
};

// Gauss norm of a polynomial at unit radius: max over coefficients of |c|.
// nullopt for the zero polynomial.
inline std::optional<magnitude> gauss_norm(const base_field& K, const qpoly& f) {
    std::optional<magnitude> best;
    for (const auto& c : f.coef()) {
        if (c == 0)
            continue;
        magnitude n = *K.norm(c);
        if (!best || n > *best)
            best = n;
    }
    return best;
}

} // namespace rval

#endif

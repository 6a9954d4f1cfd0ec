#ifndef RVAL_POLY_HPP
#define RVAL_POLY_HPP

#include "rval/rational.hpp"

#include <vector>

namespace rval {

// Univariate polynomial over the rationals, dense coefficients, trailing
// zeros trimmed. degree() is -1 for the zero polynomial.
class qpoly {
  public:
    qpoly() = default;
    explicit qpoly(std::vector<rational> coef) : coef_(std::move(coef)) { trim(); }
    explicit qpoly(const rational& c) : coef_{c} { trim(); }

    static qpoly variable() { return qpoly({rational(0), rational(1)}); }
    static qpoly constant(const rational& c) { return qpoly(c); }
    // T - z
    static qpoly linear_root(const rational& z) { return qpoly({-z, rational(1)}); }

    long degree() const { return static_cast<long>(coef_.size()) - 1; }
    bool is_zero() const { return coef_.empty(); }
    bool is_constant() const { return coef_.size() <= 1; }
    const std::vector<rational>& coef() const { return coef_; }
    rational at(size_t i) const { return i < coef_.size() ? coef_[i] : rational(0); }
    rational leading() const;

    qpoly operator+(const qpoly& o) const;
    qpoly operator-(const qpoly& o) const;
    qpoly operator*(const qpoly& o) const;
    qpoly operator-() const;
    qpoly scaled(const rational& c) const;
    bool operator==(const qpoly& o) const { return coef_ == o.coef_; }

    rational eval(const rational& x) const;
    // Coefficients of P(X + z); recentering P about z.
    qpoly taylor_shift(const rational& z) const;
    qpoly monic() const;

    // Canonical text form, also used as an exact dedup key.
    std::string str(const std::string& var = "T") const;
    std::string key() const;

  private:
    void trim() {
        while (!coef_.empty() && coef_.back() == 0)
            coef_.pop_back();
    }
    std::vector<rational> coef_;
};

// Monic gcd over Q via the Euclidean algorithm.
qpoly poly_gcd(qpoly a, qpoly b);

// (quotient, remainder) of exact division over Q.
std::pair<qpoly, qpoly> poly_divmod(const qpoly& a, const qpoly& b);

// Slopes of the lower Newton polygon of f at p, one per segment left to
// right, each paired with its horizontal length. The roots on a segment of
// slope s have absolute value p^s. Requires f nonzero and f(0) != 0.
std::vector<std::pair<rational, long>> newton_slopes(const qpoly& f, unsigned p);

// All rational roots with multiplicity, or nullopt if f does not split over
// the rationals. f nonconstant.
std::optional<std::vector<rational>> rational_roots(const qpoly& f);

} // namespace rval

#endif

#include "rval/poly.hpp"

#include <algorithm>

namespace rval {

rational qpoly::leading() const {
    if (coef_.empty())
        throw domain_error("ZeroPolynomial", "leading coefficient of zero");
    return coef_.back();
}

qpoly qpoly::operator+(const qpoly& o) const {
    std::vector<rational> r(std::max(coef_.size(), o.coef_.size()), rational(0));
    for (size_t i = 0; i < coef_.size(); ++i)
        r[i] += coef_[i];
    for (size_t i = 0; i < o.coef_.size(); ++i)
        r[i] += o.coef_[i];
    return qpoly(std::move(r));
}

qpoly qpoly::operator-(const qpoly& o) const { return *this + (-o); }

qpoly qpoly::operator-() const {
    std::vector<rational> r(coef_);
    for (auto& c : r)
        c = -c;
    return qpoly(std::move(r));
}

qpoly qpoly::scaled(const rational& c) const {
    std::vector<rational> r(coef_);
    for (auto& x : r)
        x *= c;
    return qpoly(std::move(r));
}

qpoly qpoly::operator*(const qpoly& o) const {
    if (coef_.empty() || o.coef_.empty())
        return qpoly();
    std::vector<rational> r(coef_.size() + o.coef_.size() - 1, rational(0));
    for (size_t i = 0; i < coef_.size(); ++i)
        for (size_t j = 0; j < o.coef_.size(); ++j)
            r[i + j] += coef_[i] * o.coef_[j];
    return qpoly(std::move(r));
}

rational qpoly::eval(const rational& x) const {
    rational r(0);
    for (size_t i = coef_.size(); i-- > 0;)
        r = r * x + coef_[i];
    return r;
}

qpoly qpoly::taylor_shift(const rational& z) const {
    std::vector<rational> b(coef_);
    size_t n = b.size();
    if (n == 0 || z == 0)
        return *this;
    for (size_t i = 0; i + 1 < n; ++i)
        for (size_t j = n - 1; j-- > i;)
            b[j] += z * b[j + 1];
    return qpoly(std::move(b));
}

qpoly qpoly::monic() const {
    if (coef_.empty())
        return *this;
    return scaled(rational(1) / leading());
}

std::string qpoly::str(const std::string& var) const {
    if (coef_.empty())
        return "0";
    std::string s;
    for (size_t i = coef_.size(); i-- > 0;) {
        if (coef_[i] == 0)
            continue;
        if (!s.empty())
            s += " + ";
        if (i == 0 || coef_[i] != 1)
            s += rational_str(coef_[i]);
        if (i > 0) {
            if (coef_[i] != 1)
                s += "*";
            s += var;
            if (i > 1)
                s += "^" + std::to_string(i);
        }
    }
    return s;
}

std::string qpoly::key() const {
    std::string s;
    for (const auto& c : coef_)
        s += rational_str(c) + "|";
    return s;
}

std::pair<qpoly, qpoly> poly_divmod(const qpoly& a, const qpoly& b) {
    if (b.is_zero())
        throw domain_error("DivisionByZero", "polynomial division by zero");
    qpoly r = a;
    std::vector<rational> q(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0,
                            rational(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        rational c = r.leading() / b.leading();
        long d = r.degree() - b.degree();
        std::vector<rational> mono(d + 1, rational(0));
        mono[d] = c;
        qpoly m(std::move(mono));
        q[d] = c;
        r = r - m * b;
    }
    return {qpoly(std::move(q)), r};
}

qpoly poly_gcd(qpoly a, qpoly b) {
    while (!b.is_zero()) {
        qpoly r = poly_divmod(a, b).second;
        a = b;
        b = r;
    }
    return a.is_zero() ? a : a.monic();
}

std::vector<std::pair<rational, long>> newton_slopes(const qpoly& f, unsigned p) {
    if (f.is_zero() || f.at(0) == 0)
        throw domain_error("BadNewtonInput", "Newton polygon needs f(0) != 0");
    // Lower convex hull of (i, v_p(c_i)) over nonzero coefficients.
    std::vector<std::pair<long, rational>> pts;
    for (long i = 0; i <= f.degree(); ++i)
        if (f.at(i) != 0)
            pts.emplace_back(i, rational(padic_val(f.at(i), p)));
    std::vector<std::pair<long, rational>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // keep b only if it is strictly below segment a-pt
            if ((b.second - a.second) * (pt.first - a.first) <
                (pt.second - a.second) * (b.first - a.first))
                break;
            hull.pop_back();
        }
        hull.push_back(pt);
    }
    std::vector<std::pair<rational, long>> slopes;
    for (size_t k = 0; k + 1 < hull.size(); ++k) {
        rational s = (hull[k + 1].second - hull[k].second) / (hull[k + 1].first - hull[k].first);
        s.canonicalize();
        slopes.emplace_back(s, hull[k + 1].first - hull[k].first);
    }
    return slopes;
}

std::optional<std::vector<rational>> rational_roots(const qpoly& f) {
    if (f.degree() < 1)
        throw domain_error("BadInput", "root finding needs a nonconstant polynomial");
    std::vector<rational> roots;
    qpoly g = f;
    // Strip the root at zero first.
    while (!g.is_zero() && g.at(0) == 0) {
        std::vector<rational> sh(g.coef().begin() + 1, g.coef().end());
        g = qpoly(std::move(sh));
        roots.emplace_back(0);
    }
    while (g.degree() >= 1) {
        // Clear denominators; candidates are num/den with num | a0, den | an.
        mpz_class lcm(1);
        for (const auto& c : g.coef())
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
        std::vector<mpz_class> ic;
        for (const auto& c : g.coef()) {
            rational t = c * rational(lcm);
            t.canonicalize();
            ic.push_back(t.get_num());
        }
        mpz_class a0 = ic.front(), an = ic.back();
        if (a0 < 0)
            a0 = -a0;
        if (an < 0)
            an = -an;
        bool found = false;
        for (mpz_class n(1); n <= a0 && !found; ++n) {
            if (a0 % n != 0)
                continue;
            for (mpz_class d(1); d <= an && !found; ++d) {
                if (an % d != 0)
                    continue;
                for (int sign : {1, -1}) {
                    rational cand(sign * n, d);
                    cand.canonicalize();
                    if (g.eval(cand) == 0) {
                        roots.push_back(cand);
                        g = poly_divmod(g, qpoly::linear_root(cand)).first;
                        found = true;
                        break;
                    }
                }
            }
        }
        if (!found)
            return std::nullopt;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace rval

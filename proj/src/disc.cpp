#include "rval/disc.hpp"

namespace rval {

namespace {

void require_in_disc(const base_field& K, const rational& z) {
    auto n = K.norm(z);
    if (n && *n > magnitude::one(K.p))
        throw domain_error("OutsideDisc", "center of absolute value > 1");
}

void require_radius(const magnitude& rho, unsigned p) {
    if (rho > magnitude::one(p))
        throw domain_error("OutsideDisc", "radius > 1");
}

} // namespace

disc_point disc_point::type1(const base_field& K, const rational& z) {
    require_in_disc(K, z);
    return disc_point(point_type1{z});
}

disc_point disc_point::gauss(const base_field& K, const rational& z, const magnitude& rho) {
    require_in_disc(K, z);
    require_radius(rho, K.p);
    return disc_point(point_gauss{z, rho});
}

disc_point disc_point::rank2(const base_field& K, const rational& a, const magnitude& rho,
                             branch_side side) {
    require_in_disc(K, a);
    require_radius(rho, K.p);
    return disc_point(point_rank2{a, rho, side});
}

disc_point disc_point::monomial(const base_field& K, const value& vT) {
    if (vT.is_zero())
        throw domain_error("BadPoint", "monomial point needs vT != 0");
    if (vT.lead() == 0 && vT.inf() == 0)
        throw domain_error("BadPoint",
                           "monomial point needs an infinitesimal or super-infinitesimal part");
    if (vT > value::one(K.p))
        throw domain_error("OutsideDisc", "monomial point with v(T) > 1");
    return disc_point(point_monomial{vT});
}

std::string disc_point::str() const {
    if (auto* t1 = std::get_if<point_type1>(&data_))
        return "type1(" + rational_str(t1->z) + ")";
    if (auto* g = std::get_if<point_gauss>(&data_))
        return "gauss(" + rational_str(g->z) + ", " + g->rho.str() + ")";
    if (auto* r2 = std::get_if<point_rank2>(&data_))
        return "rank2(" + rational_str(r2->a) + ", " + r2->rho.str() + ", " +
               (r2->side == branch_side::below ? "below" : "above") + ")";
    const auto& m = std::get<point_monomial>(data_);
    return "monomial(" + m.vT.str() + ")";
}

value evaluate(const base_field& K, const disc_point& x, const qpoly& P) {
    if (P.is_zero())
        return value::zero(K.p);

    if (auto* t1 = std::get_if<point_type1>(&x.data()))
        return K.norm_value(P.eval(t1->z));

    if (auto* g = std::get_if<point_gauss>(&x.data())) {
        qpoly shifted = P.taylor_shift(g->z);
        std::optional<magnitude> best;
        for (long i = 0; i <= shifted.degree(); ++i) {
            if (shifted.at(i) == 0)
                continue;
            magnitude term = K.norm(shifted.at(i))->mul(g->rho.pow_int(i));
            if (!best || term > *best)
                best = term;
        }
        return value::reify(*best);
    }

    if (auto* r2 = std::get_if<point_rank2>(&x.data())) {
        // radius rho*eps (below) or rho/eps (above); the infinitesimal
        // exponents of the terms are pairwise distinct, so the maximum is
        // attained at exactly one term.
        long s = r2->side == branch_side::below ? 1 : -1;
        qpoly shifted = P.taylor_shift(r2->a);
        value best = value::zero(K.p);
        for (long i = 0; i <= shifted.degree(); ++i) {
            if (shifted.at(i) == 0)
                continue;
            value term = value::make(0, K.norm(shifted.at(i))->mul(r2->rho.pow_int(i)), s * i);
            if (term > best)
                best = term;
        }
        return best;
    }

    const auto& m = std::get<point_monomial>(x.data());
    value best = value::zero(K.p);
    for (long i = 0; i <= P.degree(); ++i) {
        if (P.at(i) == 0)
            continue;
        value term = value_mul(K.norm_value(P.at(i)), m.vT.pow_int(i));
        if (term > best)
            best = term;
    }
    return best;
}

int classify(const base_field& K, const disc_point& x) {
    if (std::holds_alternative<point_type1>(x.data()))
        return 1;
    if (auto* g = std::get_if<point_gauss>(&x.data()))
        return K.in_value_group(g->rho) ? 2 : 3;
    if (auto* r2 = std::get_if<point_rank2>(&x.data()))
        return K.in_value_group(r2->rho) ? 5 : 6;
    throw domain_error("Unclassifiable", "monomial test points carry no type label");
}

bool unit_ideal_check(const base_field& K, const std::vector<qpoly>& fs) {
    if (fs.empty())
        return false;
    for (const auto& f : fs)
        if (f.is_zero())
            throw domain_error("BadInput", "unit ideal check needs nonzero parameters");
    qpoly g = fs.front();
    for (size_t i = 1; i < fs.size(); ++i)
        g = poly_gcd(g, fs[i]);
    if (g.is_constant())
        return true;
    // Common roots are the roots of g; every one must have |root| > 1.
    if (K.mode == field_mode::trivial)
        return false; // any root of the nonconstant gcd has trivial norm <= 1
    if (g.at(0) == 0)
        return false; // root at 0
    for (const auto& [slope, len] : newton_slopes(g, K.p))
        if (slope <= 0)
            return false;
    return true;
}

rational_subspace rational_subspace::whole_space(const base_field& K) {
    return rational_subspace{qpoly::constant(1), {qpoly::constant(1)}, {magnitude::one(K.p)}};
}

void rational_subspace::validate(const base_field& K) const {
    if (f0.is_zero())
        throw domain_error("BadInput", "f_0 must be nonzero");
    if (fs.size() != qs.size())
        throw domain_error("BadInput", "parameter/scale count mismatch");
    if (fs.empty())
        throw domain_error("BadInput", "rational subspace needs at least one parameter");
    if (!unit_ideal_check(K, fs))
        throw domain_error("UnitIdealFailure", "f_1..f_n do not generate the unit ideal");
}

bool member(const base_field& K, const disc_point& x, const rational_subspace& U) {
    value v0 = evaluate(K, x, U.f0);
    if (v0.is_zero())
        return false;
    for (size_t i = 0; i < U.fs.size(); ++i)
        if (evaluate(K, x, U.fs[i]) > value_mul(value::reify(U.qs[i]), v0))
            return false;
    return true;
}

bool member_weak(const base_field& K, const disc_point& x, const rational_subspace& U) {
    value v0 = evaluate(K, x, U.f0);
    for (size_t i = 0; i < U.fs.size(); ++i)
        if (evaluate(K, x, U.fs[i]) > value_mul(value::reify(U.qs[i]), v0))
            return false;
    return true;
}

rational_subspace intersect(const rational_subspace& U, const rational_subspace& V) {
    // Adjoin q_0 = r_0 = 1 on both sides; parameters f_i g_j with scales
    // q_i r_j, first parameter f_0 g_0.
    unsigned p = U.qs.front().p();
    std::vector<qpoly> uf = {U.f0};
    std::vector<magnitude> uq = {magnitude::one(p)};
    uf.insert(uf.end(), U.fs.begin(), U.fs.end());
    uq.insert(uq.end(), U.qs.begin(), U.qs.end());
    std::vector<qpoly> vf = {V.f0};
    std::vector<magnitude> vq = {magnitude::one(p)};
    vf.insert(vf.end(), V.fs.begin(), V.fs.end());
    vq.insert(vq.end(), V.qs.begin(), V.qs.end());

    rational_subspace W;
    W.f0 = U.f0 * V.f0;
    for (size_t i = 0; i < uf.size(); ++i)
        for (size_t j = 0; j < vf.size(); ++j) {
            if (i == 0 && j == 0)
                continue;
            W.fs.push_back(uf[i] * vf[j]);
            W.qs.push_back(uq[i].mul(vq[j]));
        }
    return W;
}

graded_position graded_membership(const base_field& K, const qpoly& a, const magnitude& r,
                                  gr_mode mode) {
    auto g = gauss_norm(K, a);
    if (!g)
        return graded_position::in_plus; // zero lies in every graded piece
    if (*g > r)
        return graded_position::out;
    if (mode == gr_mode::full)
        return graded_position::in_plus;
    // Base-only: the class of a must come from a constant, i.e. a = c + h
    // with c in K, |c| <= r and gauss(h) < r.
    auto c0 = K.norm(a.at(0));
    if (c0 && *c0 > r)
        return graded_position::in_circ_only;
    qpoly h = a - qpoly::constant(a.at(0));
    auto gh = gauss_norm(K, h);
    if (!gh || *gh < r)
        return graded_position::in_plus;
    return graded_position::in_circ_only;
}

bool graded_valuation_ring_test(const base_field& K, const disc_point& x, const qpoly& a,
                                const magnitude& r) {
    auto g = gauss_norm(K, a);
    if (g && *g > r)
        throw domain_error("PreconditionViolated", "gauss(a) > r");
    return evaluate(K, x, a) <= value::reify(r);
}

} // namespace rval

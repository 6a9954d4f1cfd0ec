#ifndef RVAL_DISC_HPP
#define RVAL_DISC_HPP

#include "rval/base_field.hpp"

#include <variant>
#include <vector>

namespace rval {

// Points of the closed unit disc over the base field, as reified
// semivaluations on K[T].
//
//   type1:    evaluation at a rational center z, |z| <= 1.
//   gauss:    the rho-Gauss valuation recentered at z; classifies as type 2
//             when rho lies in the designated value group, else type 3.
//   rank2:    a branch point at (a, rho): radius infinitesimally below rho
//             (side below) or above it (side above); type 5 when rho is in
//             the value group, else type 6. side above with rho = 1 at a = 0
//             is the upper branch point, with v(T) infinitesimally above 1.
//   monomial: v(sum a_i T^i) = max_i |a_i| vT^i for a prescribed value of T;
//             admitted only when vT has a super-infinitesimal or
//             infinitesimal part, so the maximum is attained at one term.
//
// Type 4 points would require an infinite nested sequence of discs and are
// rejected by construction.

enum class branch_side { below, above };

struct point_type1 {
    rational z;
};
struct point_gauss {
    rational z;
    magnitude rho;
};
struct point_rank2 {
    rational a;
    magnitude rho;
    branch_side side;
};
struct point_monomial {
    value vT;
};

class disc_point {
  public:
    static disc_point type1(const base_field& K, const rational& z);
    static disc_point gauss(const base_field& K, const rational& z, const magnitude& rho);
    static disc_point rank2(const base_field& K, const rational& a, const magnitude& rho,
                            branch_side side);
    static disc_point monomial(const base_field& K, const value& vT);

    const std::variant<point_type1, point_gauss, point_rank2, point_monomial>& data() const {
        return data_;
    }

    std::string str() const;

  private:
    explicit disc_point(std::variant<point_type1, point_gauss, point_rank2, point_monomial> d)
        : data_(std::move(d)) {}
    std::variant<point_type1, point_gauss, point_rank2, point_monomial> data_;
};

value evaluate(const base_field& K, const disc_point& x, const qpoly& P);

// Berkovich-style type label in {1,2,3,5,6}; rejects monomial test points.
int classify(const base_field& K, const disc_point& x);

// True iff f_1..f_n have no common zero of absolute value <= 1 over the
// algebraic closure: the monic gcd is constant, or every Newton slope of the
// gcd forces |root| > 1.
bool unit_ideal_check(const base_field& K, const std::vector<qpoly>& fs);

// Locus v(f_i) <= q_i v(f_0) != 0 (i = 1..n); f_1..f_n generate the unit
// ideal.
struct rational_subspace {
    qpoly f0;
    std::vector<qpoly> fs;
    std::vector<magnitude> qs;

    static rational_subspace whole_space(const base_field& K);
    void validate(const base_field& K) const;
};

bool member(const base_field& K, const disc_point& x, const rational_subspace& U);
// Variant without the f_0 != 0 clause; agrees with member on validated input.
bool member_weak(const base_field& K, const disc_point& x, const rational_subspace& U);

rational_subspace intersect(const rational_subspace& U, const rational_subspace& V);

// Which graded subring the classes are measured against: the full graded
// ring of K{T}, or only the graded ring of the base field.
enum class gr_mode { full, base_only };
enum class graded_position { in_plus, in_circ_only, out };

graded_position graded_membership(const base_field& K, const qpoly& a, const magnitude& r,
                                  gr_mode mode);

// Whether the class of a in degree r lies in the graded valuation ring cut
// out by x; requires gauss(a) <= r.
bool graded_valuation_ring_test(const base_field& K, const disc_point& x, const qpoly& a,
                                const magnitude& r);

} // namespace rval

#endif

#ifndef RVAL_ORDER_RELATION_HPP
#define RVAL_ORDER_RELATION_HPP

#include "rval/disc.hpp"

#include <map>
#include <string>
#include <vector>

namespace rval {

// Finite sample of the order relation of a reified semivaluation:
// entry(a, b, q) = 1 iff v(a) >= q v(b), over a finite grid of ring elements
// and scale factors. Ring elements are handles into `items`; the grid also
// records where products and sums of handles land so the multiplicative and
// additive axioms can be checked on sampled instances.
struct order_tuple {
    std::vector<qpoly> items;
    std::vector<magnitude> scales;
    // entries[(i*items + j)*scales + k] in {0,1}; the grid is total on
    // items x items x scales.
    std::vector<signed char> entries;
    // prod[i][j] / sum[i][j]: handle of items[i]*items[j] resp. +, or -1.
    std::vector<std::vector<long>> prod;
    std::vector<std::vector<long>> sum;
    long zero_idx = -1;
    long one_idx = -1;

    signed char at(size_t i, size_t j, size_t k) const {
        return entries[(i * items.size() + j) * scales.size() + k];
    }
    long scale_inv(size_t k) const; // handle of 1/scales[k], or -1
    long scale_mul(size_t k, size_t l) const; // handle of scales[k]*scales[l], or -1
};

// Builds the grid for a disc point: items plus 0, 1 and all pairwise
// products and sums; scales plus 1, inverses and pairwise products.
order_tuple order_tuple_of(const base_field& K, const disc_point& v,
                           const std::vector<qpoly>& items,
                           const std::vector<magnitude>& scales);

struct axiom_violation {
    int axiom; // 1..9
    std::string witness;
};

// Checks every sampled instance of the nine order-relation axioms; instances
// whose hypotheses or conclusion fall outside the grid are skipped.
std::vector<axiom_violation> check_axioms(const order_tuple& t);

} // namespace rval

#endif

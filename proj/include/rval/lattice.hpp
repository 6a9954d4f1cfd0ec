#ifndef RVAL_LATTICE_HPP
#define RVAL_LATTICE_HPP

#include "rval/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace rval {

// Finite bounded distributive lattice with materialized meet/join tables.
// Element order is the sorted label order, so every enumeration downstream
// is reproducible byte for byte.
struct finite_lattice {
    std::vector<std::string> elems;
    std::vector<std::vector<bool>> leq;
    std::vector<std::vector<size_t>> meet;
    std::vector<std::vector<size_t>> join;
    size_t zero = 0;
    size_t one = 0;

    size_t size() const { return elems.size(); }
    size_t index_of(const std::string& label) const;
};

struct lattice_report {
    std::string error;   // NotALattice | NotDistributive | NotAPartialOrder
    std::string witness; // offending elements
};

// Validates a candidate given by labels, a leq relation (closed reflexively
// and transitively here) and designated bounds. Returns the lattice with
// meet/join tables, or a report naming the first failure.
std::variant<finite_lattice, lattice_report>
validate_lattice(std::vector<std::string> elements,
                 const std::vector<std::pair<std::string, std::string>>& leq_pairs,
                 const std::string& zero, const std::string& one);

using filter = std::vector<size_t>; // sorted element indices

// All prime filters, enumerated by ascending subset mask over the sorted
// element order. Exhaustive scan; intended for |D| <= 20.
std::vector<filter> prime_filters(const finite_lattice& D);

// Finite G-space presentation: points plus a family of opens (bitmasks over
// point indices). Normalized to contain the empty set and the whole set and
// to be closed under pairwise intersection.
struct finite_space {
    std::vector<std::string> points;
    std::vector<uint64_t> opens; // sorted, deduplicated

    size_t size() const { return points.size(); }
    uint64_t whole() const {
        return points.size() == 64 ? ~uint64_t(0) : (uint64_t(1) << points.size()) - 1;
    }
};

finite_space make_space(std::vector<std::string> points, std::vector<uint64_t> opens);

bool is_t0(const finite_space& X);
bool is_sober(const finite_space& X);

// Spec(D): points are the prime filters, opens the sets S~ = {F : S in F}
// closed under union.
struct spec_result {
    finite_space space;
    std::vector<filter> filters;
    std::vector<uint64_t> tilde; // tilde[s] = mask of S~ for element s of D
};

spec_result spec_space(const finite_lattice& D);

// Boolean algebra generated by the opens and their complements.
std::vector<uint64_t> patch_sets(const finite_space& X);

struct stone_witness {
    bool ok = true;
    std::string error;   // NotInjective | NotSurjective | NotPreserving
    std::string witness;
    std::vector<uint64_t> tilde; // the bijection S -> S~
};

// Verifies D -> D(Spec(D)), S -> S~, to be a lattice isomorphism.
stone_witness stone_roundtrip(const finite_lattice& D);

struct spectralify_result {
    finite_space space;
    std::vector<size_t> adjunction; // point of X -> point of Spec(D(X))
    finite_lattice opens_lattice;   // D(X)
    bool injective = false;
    bool input_t0 = false;
};

// Left adjoint on a finite prespectral presentation: Spec(D(X)) together
// with x -> {S in D(X) : x in S}.
spectralify_result spectralify(const finite_space& X);

} // namespace rval

#endif

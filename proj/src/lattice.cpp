#include "rval/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rval {

size_t finite_lattice::index_of(const std::string& label) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), label);
    if (it == elems.end() || *it != label)
        throw schema_error("unknown lattice element '" + label + "'");
    return static_cast<size_t>(it - elems.begin());
}

std::variant<finite_lattice, lattice_report>
validate_lattice(std::vector<std::string> elements,
                 const std::vector<std::pair<std::string, std::string>>& leq_pairs,
                 const std::string& zero, const std::string& one) {
    if (elements.empty())
        return lattice_report{"NotALattice", "no elements"};
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    finite_lattice D;
    D.elems = std::move(elements);
    size_t n = D.size();
    if (n > 64)
        return lattice_report{"NotALattice", "more than 64 elements"};
    D.leq.assign(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i)
        D.leq[i][i] = true;
    for (const auto& [a, b] : leq_pairs)
        D.leq[D.index_of(a)][D.index_of(b)] = true;
    // transitive closure
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            if (D.leq[i][k])
                for (size_t j = 0; j < n; ++j)
                    if (D.leq[k][j])
                        D.leq[i][j] = true;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j && D.leq[i][j] && D.leq[j][i])
                return lattice_report{"NotAPartialOrder",
                                      D.elems[i] + " <= " + D.elems[j] + " <= " + D.elems[i]};
    D.zero = D.index_of(zero);
    D.one = D.index_of(one);
    for (size_t i = 0; i < n; ++i)
        if (!D.leq[D.zero][i] || !D.leq[i][D.one])
            return lattice_report{"NotALattice", "bounds fail at " + D.elems[i]};

    D.meet.assign(n, std::vector<size_t>(n, 0));
    D.join.assign(n, std::vector<size_t>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            // greatest lower bound
            long m = -1;
            for (size_t k = 0; k < n; ++k) {
                if (!D.leq[k][i] || !D.leq[k][j])
                    continue;
                if (m < 0 || D.leq[static_cast<size_t>(m)][k])
                    m = static_cast<long>(k);
            }
            bool ok = m >= 0;
            for (size_t k = 0; ok && k < n; ++k)
                if (D.leq[k][i] && D.leq[k][j] && !D.leq[k][static_cast<size_t>(m)])
                    ok = false;
            if (!ok)
                return lattice_report{"NotALattice",
                                      "no meet of " + D.elems[i] + ", " + D.elems[j]};
            D.meet[i][j] = static_cast<size_t>(m);
            // least upper bound
            long u = -1;
            for (size_t k = 0; k < n; ++k) {
                if (!D.leq[i][k] || !D.leq[j][k])
                    continue;
                if (u < 0 || D.leq[k][static_cast<size_t>(u)])
                    u = static_cast<long>(k);
            }
            ok = u >= 0;
            for (size_t k = 0; ok && k < n; ++k)
                if (D.leq[i][k] && D.leq[j][k] && !D.leq[static_cast<size_t>(u)][k])
                    ok = false;
            if (!ok)
                return lattice_report{"NotALattice",
                                      "no join of " + D.elems[i] + ", " + D.elems[j]};
            D.join[i][j] = static_cast<size_t>(u);
        }

    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y)
            for (size_t z = 0; z < n; ++z)
                if (D.meet[x][D.join[y][z]] != D.join[D.meet[x][y]][D.meet[x][z]])
                    return lattice_report{"NotDistributive", D.elems[x] + ", " + D.elems[y] +
                                                                 ", " + D.elems[z]};
    return D;
}

std::vector<filter> prime_filters(const finite_lattice& D) {
    size_t n = D.size();
    std::vector<filter> out;
    if (n > 20)
        throw domain_error("TooLarge", "prime filter scan capped at 20 elements");
    uint64_t top = uint64_t(1) << n;
    for (uint64_t mask = 0; mask < top; ++mask) {
        if (!(mask >> D.one & 1) || (mask >> D.zero & 1))
            continue;
        bool ok = true;
        // upward closure first: it prunes most subsets cheaply
        for (size_t i = 0; ok && i < n; ++i) {
            if (!(mask >> i & 1))
                continue;
            for (size_t j = 0; ok && j < n; ++j)
                if (D.leq[i][j] && !(mask >> j & 1))
                    ok = false;
        }
        for (size_t i = 0; ok && i < n; ++i) {
            if (!(mask >> i & 1))
                continue;
            for (size_t j = i; ok && j < n; ++j)
                if ((mask >> j & 1) && !(mask >> D.meet[i][j] & 1))
                    ok = false;
        }
        // primality on pairwise joins (finite joins follow by induction)
        for (size_t i = 0; ok && i < n; ++i)
            for (size_t j = i; ok && j < n; ++j)
                if ((mask >> D.join[i][j] & 1) && !(mask >> i & 1) && !(mask >> j & 1))
                    ok = false;
        if (!ok)
            continue;
        filter f;
        for (size_t i = 0; i < n; ++i)
            if (mask >> i & 1)
                f.push_back(i);
        out.push_back(std::move(f));
    }
    return out;
}

finite_space make_space(std::vector<std::string> points, std::vector<uint64_t> opens) {
    if (points.size() > 64)
        throw domain_error("TooLarge", "spaces capped at 64 points");
    finite_space X;
    X.points = std::move(points);
    uint64_t whole = X.whole();
    bool has_whole = false;
    for (uint64_t o : opens) {
        if ((o & ~whole) != 0)
            throw schema_error("open set mentions an unknown point");
        if (o == whole)
            has_whole = true;
    }
    if (!has_whole)
        throw schema_error("the family of opens must contain the whole set");
    opens.push_back(0);
    // close under pairwise intersection
    std::set<uint64_t> fam(opens.begin(), opens.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<uint64_t> cur(fam.begin(), fam.end());
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i + 1; j < cur.size(); ++j)
                if (fam.insert(cur[i] & cur[j]).second)
                    grew = true;
    }
    X.opens.assign(fam.begin(), fam.end());
    return X;
}

namespace {

// Opens of the generated topology: all unions of basis opens.
std::vector<uint64_t> topology_of(const finite_space& X) {
    std::set<uint64_t> fam(X.opens.begin(), X.opens.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<uint64_t> cur(fam.begin(), fam.end());
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i + 1; j < cur.size(); ++j)
                if (fam.insert(cur[i] | cur[j]).second)
                    grew = true;
    }
    return {fam.begin(), fam.end()};
}

} // namespace

bool is_t0(const finite_space& X) {
    for (size_t x = 0; x < X.size(); ++x)
        for (size_t y = x + 1; y < X.size(); ++y) {
            bool separated = false;
            for (uint64_t o : X.opens)
                if ((o >> x & 1) != (o >> y & 1)) {
                    separated = true;
                    break;
                }
            if (!separated)
                return false;
        }
    return true;
}

bool is_sober(const finite_space& X) {
    auto opens = topology_of(X);
    uint64_t whole = X.whole();
    // every nonempty irreducible closed set must be the closure of exactly
    // one point
    for (uint64_t z = 1; z <= whole; ++z) {
        bool closed = false;
        for (uint64_t o : opens)
            if ((whole & ~o) == z)
                closed = true;
        if (!closed)
            continue;
        bool irreducible = true;
        for (size_t i = 0; irreducible && i < opens.size(); ++i)
            for (size_t j = 0; irreducible && j < opens.size(); ++j)
                if ((opens[i] & z) && (opens[j] & z) && !(opens[i] & opens[j] & z))
                    irreducible = false;
        if (!irreducible)
            continue;
        size_t generic = 0;
        for (size_t x = 0; x < X.size(); ++x) {
            if (!(z >> x & 1))
                continue;
            // closure of x = complement of the union of opens missing x
            uint64_t u = 0;
            for (uint64_t o : opens)
                if (!(o >> x & 1))
                    u |= o;
            if ((whole & ~u) == z)
                ++generic;
        }
        if (generic != 1)
            return false;
    }
    return true;
}

spec_result spec_space(const finite_lattice& D) {
    spec_result R;
    R.filters = prime_filters(D);
    if (R.filters.size() > 64)
        throw domain_error("TooLarge", "spectrum has more than 64 points");
    std::vector<std::string> names;
    for (const auto& f : R.filters) {
        std::string s = "{";
        for (size_t i = 0; i < f.size(); ++i)
            s += (i ? "," : "") + D.elems[f[i]];
        names.push_back(s + "}");
    }
    R.tilde.assign(D.size(), 0);
    for (size_t s = 0; s < D.size(); ++s)
        for (size_t fi = 0; fi < R.filters.size(); ++fi)
            if (std::binary_search(R.filters[fi].begin(), R.filters[fi].end(), s))
                R.tilde[s] |= uint64_t(1) << fi;
    std::vector<uint64_t> opens = R.tilde;
    uint64_t whole = R.filters.empty() ? 0 : (uint64_t(1) << R.filters.size()) - 1;
    opens.push_back(0);
    opens.push_back(whole);
    // prime filters make S~ union- and intersection-stable, but close anyway
    std::set<uint64_t> fam(opens.begin(), opens.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<uint64_t> cur(fam.begin(), fam.end());
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i + 1; j < cur.size(); ++j) {
                if (fam.insert(cur[i] | cur[j]).second)
                    grew = true;
                if (fam.insert(cur[i] & cur[j]).second)
                    grew = true;
            }
    }
    R.space.points = std::move(names);
    R.space.opens.assign(fam.begin(), fam.end());
    return R;
}

std::vector<uint64_t> patch_sets(const finite_space& X) {
    uint64_t whole = X.whole();
    std::set<uint64_t> fam;
    for (uint64_t o : topology_of(X)) {
        fam.insert(o);
        fam.insert(whole & ~o);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<uint64_t> cur(fam.begin(), fam.end());
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i + 1; j < cur.size(); ++j) {
                if (fam.insert(cur[i] | cur[j]).second)
                    grew = true;
                if (fam.insert(cur[i] & cur[j]).second)
                    grew = true;
            }
    }
    return {fam.begin(), fam.end()};
}

stone_witness stone_roundtrip(const finite_lattice& D) {
    stone_witness W;
    spec_result R = spec_space(D);
    W.tilde = R.tilde;
    size_t n = D.size();
    for (size_t s = 0; s < n; ++s)
        for (size_t t = s + 1; t < n; ++t)
            if (R.tilde[s] == R.tilde[t]) {
                W.ok = false;
                W.error = "NotInjective";
                W.witness = D.elems[s] + ", " + D.elems[t];
                return W;
            }
    std::set<uint64_t> image(R.tilde.begin(), R.tilde.end());
    for (uint64_t o : R.space.opens)
        if (!image.count(o)) {
            W.ok = false;
            W.error = "NotSurjective";
            W.witness = "open mask " + std::to_string(o);
            return W;
        }
    auto fail = [&](const std::string& w) {
        W.ok = false;
        W.error = "NotPreserving";
        W.witness = w;
    };
    if (R.tilde[D.zero] != 0)
        fail("zero");
    uint64_t whole = R.filters.empty() ? 0 : (uint64_t(1) << R.filters.size()) - 1;
    if (W.ok && R.tilde[D.one] != whole)
        fail("one");
    for (size_t s = 0; W.ok && s < n; ++s)
        for (size_t t = 0; W.ok && t < n; ++t) {
            if (R.tilde[D.meet[s][t]] != (R.tilde[s] & R.tilde[t]))
                fail("meet of " + D.elems[s] + ", " + D.elems[t]);
            else if (R.tilde[D.join[s][t]] != (R.tilde[s] | R.tilde[t]))
                fail("join of " + D.elems[s] + ", " + D.elems[t]);
            else if (D.leq[s][t] != ((R.tilde[s] & R.tilde[t]) == R.tilde[s]))
                fail("order of " + D.elems[s] + ", " + D.elems[t]);
        }
    return W;
}

spectralify_result spectralify(const finite_space& X) {
    spectralify_result R;
    R.input_t0 = is_t0(X);

    // D(X): the opens of the generated topology, as a lattice of sets.
    std::vector<uint64_t> opens = topology_of(X);
    std::map<uint64_t, std::string> labels;
    std::vector<std::string> elem_names;
    for (uint64_t o : opens) {
        std::string s = "{";
        bool first = true;
        for (size_t x = 0; x < X.size(); ++x)
            if (o >> x & 1) {
                s += (first ? "" : ",") + X.points[x];
                first = false;
            }
        s += "}";
        labels[o] = s;
        elem_names.push_back(s);
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    for (uint64_t a : opens)
        for (uint64_t b : opens)
            if ((a & b) == a)
                pairs.emplace_back(labels[a], labels[b]);
    auto validated =
        validate_lattice(elem_names, pairs, labels[0], labels[X.whole()]);
    if (std::holds_alternative<lattice_report>(validated))
        throw domain_error("NotALattice", "opens of a finite space must form a lattice");
    R.opens_lattice = std::get<finite_lattice>(validated);

    spec_result S = spec_space(R.opens_lattice);
    R.space = S.space;

    // adjunction: x -> the filter of opens containing x
    for (size_t x = 0; x < X.size(); ++x) {
        filter fx;
        for (size_t e = 0; e < R.opens_lattice.size(); ++e) {
            uint64_t mask = 0;
            // recover the subset from the canonical label
            for (uint64_t o : opens)
                if (labels[o] == R.opens_lattice.elems[e])
                    mask = o;
            if (mask >> x & 1)
                fx.push_back(e);
        }
        auto it = std::find(S.filters.begin(), S.filters.end(), fx);
        if (it == S.filters.end())
            throw domain_error("InternalCheck", "adjunction image is not a prime filter");
        R.adjunction.push_back(static_cast<size_t>(it - S.filters.begin()));
    }
    std::set<size_t> img(R.adjunction.begin(), R.adjunction.end());
    R.injective = img.size() == X.size();
    return R;
}

} // namespace rval

#include "rval/order_relation.hpp"

#include <map>

namespace rval {

namespace {

std::string mag_key(const magnitude& m) {
    return rational_str(m.c()) + "@" + rational_str(m.e());
}

} // namespace

long order_tuple::scale_inv(size_t k) const {
    magnitude want = scales[k].inverse();
    for (size_t l = 0; l < scales.size(); ++l)
        if (scales[l] == want)
            return static_cast<long>(l);
    return -1;
}

long order_tuple::scale_mul(size_t k, size_t l) const {
    magnitude want = scales[k].mul(scales[l]);
    for (size_t m = 0; m < scales.size(); ++m)
        if (scales[m] == want)
            return static_cast<long>(m);
    return -1;
}

order_tuple order_tuple_of(const base_field& K, const disc_point& v,
                           const std::vector<qpoly>& items,
                           const std::vector<magnitude>& scales) {
    order_tuple t;

    std::map<std::string, long> index;
    auto add_item = [&](const qpoly& f) -> long {
        auto [it, fresh] = index.emplace(f.key(), static_cast<long>(t.items.size()));
        if (fresh)
            t.items.push_back(f);
        return it->second;
    };
    t.zero_idx = add_item(qpoly());
    t.one_idx = add_item(qpoly::constant(1));
    std::vector<long> base;
    base.push_back(t.zero_idx);
    base.push_back(t.one_idx);
    for (const auto& f : items)
        base.push_back(add_item(f));
    size_t nbase = t.items.size();
    for (size_t i = 0; i < nbase; ++i)
        for (size_t j = i; j < nbase; ++j) {
            add_item(t.items[i] * t.items[j]);
            add_item(t.items[i] + t.items[j]);
        }

    size_t n = t.items.size();
    t.prod.assign(n, std::vector<long>(n, -1));
    t.sum.assign(n, std::vector<long>(n, -1));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            auto pit = index.find((t.items[i] * t.items[j]).key());
            if (pit != index.end())
                t.prod[i][j] = pit->second;
            auto sit = index.find((t.items[i] + t.items[j]).key());
            if (sit != index.end())
                t.sum[i][j] = sit->second;
        }

    std::map<std::string, size_t> sidx;
    auto add_scale = [&](const magnitude& q) {
        if (sidx.emplace(mag_key(q), t.scales.size()).second)
            t.scales.push_back(q);
    };
    add_scale(magnitude::one(K.p));
    for (const auto& q : scales) {
        add_scale(q);
        add_scale(q.inverse());
    }
    size_t nscale = t.scales.size();
    for (size_t k = 0; k < nscale; ++k)
        for (size_t l = 0; l < nscale; ++l)
            add_scale(t.scales[k].mul(t.scales[l]));

    std::vector<value> vals;
    vals.reserve(n);
    for (const auto& f : t.items)
        vals.push_back(evaluate(K, v, f));

    t.entries.assign(n * n * t.scales.size(), 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < t.scales.size(); ++k) {
                bool ge = vals[i] >= value_mul(value::reify(t.scales[k]), vals[j]);
                t.entries[(i * n + j) * t.scales.size() + k] = ge ? 1 : 0;
            }
    return t;
}

std::vector<axiom_violation> check_axioms(const order_tuple& t) {
    std::vector<axiom_violation> out;
    size_t n = t.items.size();
    size_t m = t.scales.size();
    auto name = [&](size_t i) { return t.items[i].str(); };
    auto report = [&](int ax, const std::string& w) { out.push_back({ax, w}); };

    size_t one_k = 0;
    bool have_one_k = false;
    for (size_t k = 0; k < m; ++k)
        if (t.scales[k].is_one()) {
            one_k = k;
            have_one_k = true;
        }

    // (i) v_{a,a,1} = 1
    if (have_one_k)
        for (size_t i = 0; i < n; ++i)
            if (!t.at(i, i, one_k))
                report(1, name(i));

    // (ii) v_{a,b,q} = 0 implies v_{b,a,1/q} = 1
    for (size_t k = 0; k < m; ++k) {
        long kinv = t.scale_inv(k);
        if (kinv < 0)
            continue;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (!t.at(i, j, k) && !t.at(j, i, kinv))
                    report(2, name(i) + ", " + name(j) + ", " + t.scales[k].str());
    }

    // Collect positive entries once for the transitivity-style axioms.
    struct pos {
        size_t i, j, k;
    };
    std::vector<pos> ones;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < m; ++k)
                if (t.at(i, j, k))
                    ones.push_back({i, j, k});

    // (iii) v_{a,b,q} = v_{b,c,r} = 1 implies v_{a,c,qr} = 1
    for (const auto& e1 : ones)
        for (const auto& e2 : ones) {
            if (e1.j != e2.i)
                continue;
            long kl = t.scale_mul(e1.k, e2.k);
            if (kl < 0)
                continue;
            if (!t.at(e1.i, e2.j, kl))
                report(3, name(e1.i) + " >= " + t.scales[e1.k].str() + "*" + name(e1.j) + " >= " +
                              name(e2.j));
        }

    // (iv) v_{a,b,q} = v_{c,d,r} = 1 implies v_{ac,bd,qr} = 1
    for (const auto& e1 : ones)
        for (const auto& e2 : ones) {
            long ac = t.prod[e1.i][e2.i];
            long bd = t.prod[e1.j][e2.j];
            long kl = t.scale_mul(e1.k, e2.k);
            if (ac < 0 || bd < 0 || kl < 0)
                continue;
            if (!t.at(ac, bd, kl))
                report(4, name(e1.i) + "*" + name(e2.i) + " vs " + name(e1.j) + "*" + name(e2.j));
        }

    // (v) v_{0,1,q} = 0
    if (t.zero_idx >= 0 && t.one_idx >= 0)
        for (size_t k = 0; k < m; ++k)
            if (t.at(t.zero_idx, t.one_idx, k))
                report(5, t.scales[k].str());

    // (vi) q > 1 implies v_{1,1,q} = 0
    if (t.one_idx >= 0)
        for (size_t k = 0; k < m; ++k)
            if (t.scales[k] > magnitude::one(t.scales[k].p()) &&
                t.at(t.one_idx, t.one_idx, k))
                report(6, t.scales[k].str());

    // (vii) v_{a,b,q} = v_{a,c,q} = 1 implies v_{a,b+c,q} = 1
    for (const auto& e1 : ones)
        for (const auto& e2 : ones) {
            if (e1.i != e2.i || e1.k != e2.k)
                continue;
            long bc = t.sum[e1.j][e2.j];
            if (bc < 0)
                continue;
            if (!t.at(e1.i, bc, e1.k))
                report(7, name(e1.i) + " vs " + name(e1.j) + " + " + name(e2.j));
        }

    // (viii) v_{ac,bc,q} = 1 and v_{0,c,1} = 0 imply v_{a,b,q} = 1
    if (have_one_k)
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b)
                for (size_t c = 0; c < n; ++c) {
                    long ac = t.prod[a][c];
                    long bc = t.prod[b][c];
                    if (ac < 0 || bc < 0)
                        continue;
                    if (t.at(t.zero_idx, c, one_k))
                        continue; // v(c) = 0
                    for (size_t k = 0; k < m; ++k)
                        if (t.at(ac, bc, k) && !t.at(a, b, k))
                            report(8, name(a) + ", " + name(b) + ", " + name(c));
                }

    // (ix) v_{a,0,q} = 1
    if (t.zero_idx >= 0)
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < m; ++k)
                if (!t.at(i, t.zero_idx, k))
                    report(9, name(i) + ", " + t.scales[k].str());

    return out;
}

} // namespace rval

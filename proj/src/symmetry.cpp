#include "polycone/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace polycone {

namespace {

void check_perm(std::size_t degree, const Perm& p)
{
    if (p.size() != degree) throw InputError("permutation has wrong degree");
    std::vector<bool> seen(degree, false);
    for (auto x : p) {
        if (x >= degree || seen[x]) throw InputError("not a permutation");
        seen[x] = true;
    }
}

Perm identity(std::size_t degree)
{
    Perm p(degree);
    std::iota(p.begin(), p.end(), 0u);
    return p;
}

// Writes the lex-smallest image of v under g into best.
template <class T>
void scan_min(const std::vector<T>& v, const CoordPermGroup& g, std::vector<T>& best)
{
    const std::size_t d = v.size();
    best = v;
    for (std::size_t k = 1; k < g.order(); ++k) {
        const Perm& inv = g.inverse(k);
        // Compare the image against `best` position by position, copying
        // once it is known to be smaller.
        std::size_t j = 0;
        for (; j < d; ++j) {
            const T& x = v[inv[j]];
            if (x < best[j]) break;
            if (best[j] < x) {
                j = d + 1;
                break;
            }
        }
        if (j >= d) continue;
        for (; j < d; ++j) best[j] = v[inv[j]];
    }
}

template <class T>
std::size_t count_fixing(const std::vector<T>& v, const CoordPermGroup& g)
{
    std::size_t count = 0;
    for (std::size_t k = 0; k < g.order(); ++k) {
        const Perm& p = g.elements()[k];
        bool fixed = true;
        for (std::size_t i = 0; i < v.size() && fixed; ++i) fixed = v[p[i]] == v[i];
        if (fixed) ++count;
    }
    return count;
}

}  // namespace

Perm compose(const Perm& outer, const Perm& inner)
{
    Perm r(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) r[i] = outer[inner[i]];
    return r;
}

Perm invert(const Perm& p)
{
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint32_t>(i);
    return r;
}

RatVector permute(const Perm& perm, const RatVector& v)
{
    if (perm.size() != v.size()) throw InputError("permute: permutation degree does not match vector length");
    RatVector w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[perm[i]] = v[i];
    return w;
}

CoordPermGroup CoordPermGroup::generate(std::size_t degree, const std::vector<Perm>& generators)
{
    for (const auto& p : generators) check_perm(degree, p);
    CoordPermGroup g;
    g.degree_ = degree;
    g.generators_ = generators;
    std::set<Perm> seen;
    Perm id = identity(degree);
    seen.insert(id);
    g.elements_.push_back(id);
    for (std::size_t head = 0; head < g.elements_.size(); ++head) {
        for (const auto& s : generators) {
            Perm next = compose(s, g.elements_[head]);
            if (seen.insert(next).second) g.elements_.push_back(std::move(next));
        }
    }
    for (const auto& e : g.elements_) g.inverses_.push_back(invert(e));
    return g;
}

CoordPermGroup CoordPermGroup::trivial(std::size_t degree) { return generate(degree, {}); }

CoordPermGroup CoordPermGroup::stabilizer(const RatVector& v) const
{
    if (v.size() != degree_) throw InputError("stabilizer: vector length does not match group degree");
    CoordPermGroup h;
    h.degree_ = degree_;
    for (std::size_t k = 0; k < elements_.size(); ++k) {
        const Perm& p = elements_[k];
        bool fixed = true;
        for (std::size_t i = 0; i < degree_ && fixed; ++i) fixed = v[p[i]] == v[i];
        if (!fixed) continue;
        h.elements_.push_back(p);
        h.inverses_.push_back(inverses_[k]);
    }
    // Every element doubles as a generator; the list is already closed.
    h.generators_ = h.elements_;
    return h;
}

Perm induced_perm(const IndexScheme& scheme, const std::vector<int>& point_perm)
{
    if (static_cast<int>(point_perm.size()) != scheme.n()) throw InputError("induced_perm: wrong number of points");
    Perm p(scheme.size());
    for (std::size_t i = 0; i < scheme.size(); ++i) {
        std::vector<int> image;
        for (int x : scheme.labels()[i]) image.push_back(point_perm[x - 1]);
        std::size_t j = scheme.index_of(image);
        if (j == scheme.size()) throw InputError("induced_perm: not a permutation of the points");
        p[i] = static_cast<std::uint32_t>(j);
    }
    return p;
}

Perm reversal_perm(const IndexScheme& scheme)
{
    if (scheme.kind() != SchemeKind::ordered_pairs) throw InputError("reversal needs an ordered-pairs scheme");
    Perm p(scheme.size());
    for (std::size_t i = 0; i < scheme.size(); ++i) {
        const auto& l = scheme.labels()[i];
        p[i] = static_cast<std::uint32_t>(scheme.index_of({l[1], l[0]}));
    }
    return p;
}

CoordPermGroup point_group(const IndexScheme& scheme)
{
    const int n = scheme.n();
    std::vector<Perm> gens;
    if (n >= 2) {
        std::vector<int> swap12(n), cycle(n);
        std::iota(swap12.begin(), swap12.end(), 1);
        std::swap(swap12[0], swap12[1]);
        for (int x = 0; x < n; ++x) cycle[x] = (x + 1) % n + 1;
        gens.push_back(induced_perm(scheme, swap12));
        if (n > 2) gens.push_back(induced_perm(scheme, cycle));
    }
    if (scheme.kind() == SchemeKind::ordered_pairs) gens.push_back(reversal_perm(scheme));
    return CoordPermGroup::generate(scheme.size(), gens);
}

CoordPermGroup group_for(const ConeSpec& spec) { return point_group(index_scheme(spec)); }

RatVector canonical_rep(const RatVector& v, const CoordPermGroup& g)
{
    if (v.size() != g.degree()) throw InputError("canonical_rep: vector length does not match group degree");
    std::vector<std::int64_t> small;
    if (to_int64(v, small)) {
        std::vector<std::int64_t> best;
        scan_min(small, g, best);
        return from_int64(best);
    }
    RatVector best;
    scan_min(v, g, best);
    return best;
}

std::size_t stabilizer_order(const RatVector& v, const CoordPermGroup& g)
{
    if (v.size() != g.degree()) throw InputError("stabilizer_order: vector length does not match group degree");
    std::vector<std::int64_t> small;
    if (to_int64(v, small)) return count_fixing(small, g);
    return count_fixing(v, g);
}

std::size_t OrbitSet::total() const
{
    std::size_t t = 0;
    for (const auto& o : orbits) t += o.size;
    return t;
}

std::vector<std::size_t> OrbitSet::sizes() const
{
    std::vector<std::size_t> s;
    for (const auto& o : orbits) s.push_back(o.size);
    return s;
}

OrbitSet orbit_decompose(const std::vector<RatVector>& vectors, const CoordPermGroup& g, unsigned threads)
{
    std::vector<RatVector> canon(vectors.size());
    auto work = [&](std::size_t begin, std::size_t step) {
        for (std::size_t i = begin; i < vectors.size(); i += step) canon[i] = canonical_rep(vectors[i], g);
    };
    threads = std::max(1u, threads);
    if (threads == 1 || vectors.size() < 64) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
        for (auto& th : pool) th.join();
    }

    std::map<RatVector, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < vectors.size(); ++i) groups[canon[i]].push_back(i);
    OrbitSet out;
    for (auto& [rep, members] : groups) {
        Orbit o;
        o.size = g.order() / stabilizer_order(rep, g);
        o.representative = rep;
        o.members = std::move(members);
        out.orbits.push_back(std::move(o));
    }
    return out;
}

std::vector<RatVector> orbit_of(const RatVector& v, const CoordPermGroup& g)
{
    std::set<RatVector> images;
    for (const auto& p : g.elements()) images.insert(permute(p, v));
    return {images.begin(), images.end()};
}

}  // namespace polycone

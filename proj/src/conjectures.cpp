#include "polycone/conjectures.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "polycone/facegraph.hpp"

namespace polycone {

namespace {

Partition normalized(Partition p)
{
    for (auto& block : p) {
        if (block.empty()) throw InputError("partition has an empty block");
        std::sort(block.begin(), block.end());
    }
    std::sort(p.begin(), p.end());
    std::vector<int> all;
    for (const auto& block : p) all.insert(all.end(), block.begin(), block.end());
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (all[i] != static_cast<int>(i) + 1) throw InputError("not a partition of {1..n}");
    }
    return p;
}

std::vector<int> merged(const std::vector<int>& x, const std::vector<int>& y)
{
    std::vector<int> u;
    std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(u));
    return u;
}

Partition checked_pair(const Partition& a, const Partition& b, Partition& nb)
{
    Partition na = normalized(a);
    nb = normalized(b);
    std::size_t size_a = 0, size_b = 0;
    for (const auto& block : na) size_a += block.size();
    for (const auto& block : nb) size_b += block.size();
    if (size_a != size_b) throw InputError("partitions of different ground sets");
    if (na.size() != nb.size()) throw InputError("partitions with different numbers of blocks");
    if (na == nb) throw InputError("the two partitions must be distinct");
    return na;
}

// Whether a and b differ exactly by (A cup B, C, D) against (A, B, C cup D).
bool split_merge_pair(const Partition& a, const Partition& b)
{
    Partition only_a, only_b;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_b));
    if (only_a.size() != 3 || only_b.size() != 3) return false;
    auto matches = [](const Partition& x, const Partition& y) {
        // x = {A cup B, C, D}, y = {A, B, C cup D}
        for (std::size_t big = 0; big < 3; ++big) {
            std::vector<std::size_t> rest;
            for (std::size_t i = 0; i < 3; ++i) {
                if (i != big) rest.push_back(i);
            }
            auto cd = merged(x[rest[0]], x[rest[1]]);
            for (std::size_t j = 0; j < 3; ++j) {
                if (y[j] != cd) continue;
                std::vector<std::size_t> others;
                for (std::size_t i = 0; i < 3; ++i) {
                    if (i != j) others.push_back(i);
                }
                if (merged(y[others[0]], y[others[1]]) == x[big]) return true;
            }
        }
        return false;
    };
    return matches(only_a, only_b) || matches(only_b, only_a);
}

std::vector<std::size_t> shape(const Partition& p)
{
    std::vector<std::size_t> s;
    for (const auto& block : p) s.push_back(block.size());
    std::sort(s.rbegin(), s.rend());
    return s;
}

}  // namespace

Partition partition_meet(const Partition& a, const Partition& b)
{
    Partition na = normalized(a), nb = normalized(b);
    Partition out;
    for (const auto& x : na) {
        for (const auto& y : nb) {
            std::vector<int> c;
            std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(c));
            if (!c.empty()) out.push_back(c);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Partition partition_join(const Partition& a, const Partition& b)
{
    Partition na = normalized(a), nb = normalized(b);
    std::size_t n = 0;
    for (const auto& block : na) n += block.size();
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto* p : {&na, &nb}) {
        for (const auto& block : *p) {
            for (int x : block) parent[find(x)] = find(block.front());
        }
    }
    std::map<int, std::vector<int>> groups;
    for (int x = 1; x <= static_cast<int>(n); ++x) groups[find(x)].push_back(x);
    Partition out;
    for (auto& [root, block] : groups) out.push_back(block);
    std::sort(out.begin(), out.end());
    return out;
}

bool conj2_predicts_adjacent(const RowTag& tag_a, const RatVector& facet_a, const RowTag& tag_b,
                             const RatVector& facet_b, const ConeSpec& spec)
{
    if (spec.family != Family::SMET && spec.family != Family::HMET && spec.family != Family::MET) {
        throw InputError("conj2: needs a super-metric cone");
    }
    using Kind = RowTag::Kind;
    auto valid = [](const RowTag& t) { return t.kind == Kind::nn || t.kind == Kind::simplex; };
    if (!valid(tag_a) || !valid(tag_b)) throw InputError("conj2: needs non-negativity or simplex facets");
    if (facet_a.size() != facet_b.size()) throw InputError("conj2: facet lengths differ");
    if (tag_a == tag_b) throw InputError("conj2: the two facets must differ");
    const Rat s = spec.family == Family::SMET ? spec.s : Rat(1);
    const int m = spec.m;

    if (tag_a.kind == Kind::simplex && tag_b.kind == Kind::simplex) {
        return !(s == Rat(1) && tag_a.points == tag_b.points);
    }
    if (tag_a.kind == Kind::nn && tag_b.kind == Kind::nn) {
        std::vector<int> common;
        std::set_intersection(tag_a.points.begin(), tag_a.points.end(), tag_b.points.begin(), tag_b.points.end(),
                              std::back_inserter(common));
        bool excluded = static_cast<int>(common.size()) == m && Rat(m - 1) <= s && s < Rat(m);
        return !excluded;
    }
    for (std::size_t i = 0; i < facet_a.size(); ++i) {
        if (facet_a[i].sign() * facet_b[i].sign() < 0) return false;
    }
    return true;
}

bool conj5_predicts_adjacent(const Partition& a, const Partition& b)
{
    Partition nb;
    Partition na = checked_pair(a, b, nb);
    return !split_merge_pair(na, nb);
}

bool conj6_predicts_adjacent(const Partition& a, const Partition& b, int m)
{
    Partition nb;
    Partition na = checked_pair(a, b, nb);
    if (static_cast<int>(na.size()) != m + 1) throw InputError("conj6: partitions must have m+1 blocks");
    std::size_t n = 0;
    for (const auto& block : na) n += block.size();
    std::vector<std::size_t> first(static_cast<std::size_t>(m), 1), second(static_cast<std::size_t>(m - 1), 1);
    first.insert(first.begin(), n - static_cast<std::size_t>(m));
    second.insert(second.begin(), 2);
    if (n >= static_cast<std::size_t>(m) + 2) second.insert(second.begin(), n - static_cast<std::size_t>(m) - 1);
    std::sort(second.rbegin(), second.rend());

    const auto sa = shape(na), sb = shape(nb);
    if (sa != sb || (sa != first && sa != second)) throw InputError("conj6: both partitions must lie in the same covered orbit");
    const bool rule = split_merge_pair(na, nb);
    if (sa == first) return !rule;
    const long fine = static_cast<long>(partition_meet(na, nb).size()) - (m + 1);
    const long coarse = (m + 1) - static_cast<long>(partition_join(na, nb).size());
    return !(rule || (fine == coarse && fine > 1));
}

bool conj8_predicts_graph(const RatVector& ray, const ConeSpec& spec)
{
    if (spec.family != Family::SMET && spec.family != Family::HMET) throw InputError("conj8: needs a super-metric cone");
    if (spec.n != spec.m + 3) throw InputError("conj8: needs n = m+3");
    const Rat s = spec.family == Family::SMET ? spec.s : Rat(1);
    const std::size_t n = static_cast<std::size_t>(spec.n);
    const SmallGraph h = representation_graph_H(ray, spec).graph;
    auto is = [&](const SmallGraph& g) { return isomorphic(h, g); };

    if (s == Rat(spec.m)) return is(complete_graph(n - 1)) || is(complete_minus_matching(n, n / 2));
    if (s != Rat(spec.m - 1)) throw InputError("conj8: covers s = m and s = m-1 only");
    if (is(complete_graph(n - 2)) || is(complete_minus_matching(n - 1, (n - 1) / 2))) return true;
    if (h.vertex_count() != n) return false;

    // Complement of disjoint circuits: lengths from the complement's components.
    const SmallGraph co = h.complement();
    std::vector<std::size_t> lengths;
    std::vector<bool> seen(n, false);
    for (std::size_t v = 0; v < n; ++v) {
        if (seen[v]) continue;
        std::vector<std::size_t> comp{v};
        seen[v] = true;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (std::size_t w = 0; w < n; ++w) {
                if (!seen[w] && co.has_edge(comp[i], w)) {
                    seen[w] = true;
                    comp.push_back(w);
                }
            }
        }
        const std::size_t want = comp.size() == 1 ? 0 : comp.size() == 2 ? 1 : 2;
        for (auto w : comp) {
            if (co.degree(w) != want) return false;
        }
        lengths.push_back(comp.size());
    }
    std::sort(lengths.rbegin(), lengths.rend());
    const std::size_t k = lengths.size();
    if (k >= 2) {
        auto tail = std::make_pair(lengths[k - 2], lengths[k - 1]);
        if (tail == std::make_pair<std::size_t, std::size_t>(1, 1) || tail == std::make_pair<std::size_t, std::size_t>(2, 1) ||
            tail == std::make_pair<std::size_t, std::size_t>(2, 2)) {
            return false;
        }
    }
    if (k == 1 && lengths[0] <= 4) return false;
    if (k == 2 && lengths[1] == 1 && lengths[0] <= 4) return false;
    if (k == 2 && lengths[1] == 2 && lengths[0] <= 4) return false;
    return true;
}

bool conj9_predicts_ray(const RatVector& ray, const ConeSpec& spec)
{
    if (spec.family != Family::HMET && spec.family != Family::MET) throw InputError("conj9: needs a hemi-metric cone");
    if (spec.n != spec.m + 3) throw InputError("conj9: needs n = m+3");
    const IndexScheme scheme = index_scheme(spec);
    if (ray.size() != scheme.size()) throw InputError("conj9: vector length does not match the scheme");
    const std::size_t n = static_cast<std::size_t>(spec.n);

    SmallGraph ones(n), twos(n);
    for (std::size_t i = 0; i < ray.size(); ++i) {
        if (ray[i].is_zero()) continue;
        std::vector<std::size_t> outside;
        const auto& label = scheme.labels()[i];
        for (int x = 1; x <= spec.n; ++x) {
            if (std::find(label.begin(), label.end(), x) == label.end()) outside.push_back(static_cast<std::size_t>(x - 1));
        }
        if (ray[i] == Rat(1)) ones.add_edge(outside[0], outside[1]);
        else if (ray[i] == Rat(2)) twos.add_edge(outside[0], outside[1]);
        else return false;
    }

    // Components of the value-1 graph; each must be a circuit of length >= 3.
    std::vector<int> circuit(n, -1);
    int circuits = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (ones.degree(v) == 0 || circuit[v] >= 0) continue;
        std::vector<std::size_t> comp{v};
        circuit[v] = circuits;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (std::size_t w = 0; w < n; ++w) {
                if (circuit[w] < 0 && ones.has_edge(comp[i], w)) {
                    circuit[w] = circuits;
                    comp.push_back(w);
                }
            }
        }
        if (comp.size() < 3) return false;
        for (auto w : comp) {
            if (ones.degree(w) != 2) return false;
        }
        ++circuits;
    }

    if (twos.edge_count() == 0) return circuits == 1;
    if (circuits != 2) return false;
    // The value-2 edges form one path from the first circuit to the second
    // whose inner points avoid both circuits.
    const SmallGraph path = twos.without_isolated();
    if (!path.connected() || path.edge_count() + 1 != path.vertex_count()) return false;
    std::vector<std::size_t> ends;
    for (std::size_t v = 0; v < n; ++v) {
        const std::size_t deg = twos.degree(v);
        if (deg > 2) return false;
        if (deg == 1) ends.push_back(v);
        if (deg == 2 && circuit[v] >= 0) return false;
    }
    if (ends.size() != 2) return false;
    return circuit[ends[0]] >= 0 && circuit[ends[1]] >= 0 && circuit[ends[0]] != circuit[ends[1]];
}

}  // namespace polycone

#include "polycone/smallgraph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>

#include "polycone/conedef.hpp"

namespace polycone {

SmallGraph::SmallGraph(std::size_t vertices)
{
    if (vertices > kMaxVertices) throw InputError("SmallGraph: at most 64 vertices");
    rows_.assign(vertices, 0);
}

void SmallGraph::add_edge(std::size_t a, std::size_t b)
{
    if (a >= rows_.size() || b >= rows_.size()) throw InputError("SmallGraph: vertex out of range");
    if (a == b) throw InputError("SmallGraph: self-loops are not allowed");
    rows_[a] |= std::uint64_t{1} << b;
    rows_[b] |= std::uint64_t{1} << a;
}

std::size_t SmallGraph::edge_count() const
{
    std::size_t total = 0;
    for (auto r : rows_) total += static_cast<std::size_t>(std::popcount(r));
    return total / 2;
}

std::size_t SmallGraph::degree(std::size_t v) const { return static_cast<std::size_t>(std::popcount(rows_[v])); }

std::vector<std::pair<std::size_t, std::size_t>> SmallGraph::edges() const
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < rows_.size(); ++a) {
        for (std::size_t b = a + 1; b < rows_.size(); ++b) {
            if (has_edge(a, b)) out.emplace_back(a, b);
        }
    }
    return out;
}

std::vector<std::size_t> SmallGraph::degree_sequence() const
{
    std::vector<std::size_t> d;
    for (std::size_t v = 0; v < rows_.size(); ++v) d.push_back(degree(v));
    std::sort(d.rbegin(), d.rend());
    return d;
}

bool SmallGraph::connected() const
{
    if (rows_.empty()) return true;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier != 0) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= rows_[static_cast<std::size_t>(std::countr_zero(f))];
        frontier = next & ~seen;
        seen |= next;
    }
    return static_cast<std::size_t>(std::popcount(seen)) == rows_.size();
}

SmallGraph SmallGraph::complement() const
{
    SmallGraph c(rows_.size());
    const std::uint64_t all = rows_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rows_.size()) - 1;
    for (std::size_t v = 0; v < rows_.size(); ++v) c.rows_[v] = all & ~rows_[v] & ~(std::uint64_t{1} << v);
    return c;
}

SmallGraph SmallGraph::induced(const std::vector<std::size_t>& keep) const
{
    SmallGraph h(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (std::size_t j = i + 1; j < keep.size(); ++j) {
            if (has_edge(keep[i], keep[j])) h.add_edge(i, j);
        }
    }
    return h;
}

SmallGraph SmallGraph::without_isolated() const
{
    std::vector<std::size_t> keep;
    for (std::size_t v = 0; v < rows_.size(); ++v) {
        if (rows_[v] != 0) keep.push_back(v);
    }
    return induced(keep);
}

SmallGraph complete_graph(std::size_t n)
{
    SmallGraph g(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) g.add_edge(a, b);
    }
    return g;
}

SmallGraph cycle_graph(std::size_t n)
{
    if (n < 3) throw InputError("cycle_graph: need at least 3 vertices");
    SmallGraph g(n);
    for (std::size_t a = 0; a < n; ++a) g.add_edge(a, (a + 1) % n);
    return g;
}

SmallGraph path_graph(std::size_t n)
{
    SmallGraph g(n);
    for (std::size_t a = 0; a + 1 < n; ++a) g.add_edge(a, a + 1);
    return g;
}

SmallGraph complete_multipartite(const std::vector<std::size_t>& parts)
{
    std::vector<std::size_t> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), parts[p], p);
    SmallGraph g(part_of.size());
    for (std::size_t a = 0; a < part_of.size(); ++a) {
        for (std::size_t b = a + 1; b < part_of.size(); ++b) {
            if (part_of[a] != part_of[b]) g.add_edge(a, b);
        }
    }
    return g;
}

SmallGraph complete_minus_matching(std::size_t n, std::size_t t)
{
    if (2 * t > n) throw InputError("complete_minus_matching: too many edges removed");
    SmallGraph g(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            bool removed = b == a + 1 && a % 2 == 0 && a / 2 < t;
            if (!removed) g.add_edge(a, b);
        }
    }
    return g;
}

SmallGraph petersen_graph()
{
    // Kneser graph K(5,2): 2-subsets adjacent when disjoint.
    auto pairs = IndexScheme::subsets(5, 2).labels();
    SmallGraph g(pairs.size());
    for (std::size_t a = 0; a < pairs.size(); ++a) {
        for (std::size_t b = a + 1; b < pairs.size(); ++b) {
            const auto& p = pairs[a];
            const auto& q = pairs[b];
            if (p[0] != q[0] && p[0] != q[1] && p[1] != q[0] && p[1] != q[1]) g.add_edge(a, b);
        }
    }
    return g;
}

SmallGraph cube_graph()
{
    SmallGraph g(8);
    for (std::size_t a = 0; a < 8; ++a) {
        for (std::size_t bit = 1; bit < 8; bit <<= 1) {
            if ((a & bit) == 0) g.add_edge(a, a | bit);
        }
    }
    return g;
}

SmallGraph prism_graph() { return cycle_graph(6).complement(); }

SmallGraph johnson_graph(int n, int k)
{
    auto sets = IndexScheme::subsets(n, k).labels();
    SmallGraph g(sets.size());
    for (std::size_t a = 0; a < sets.size(); ++a) {
        for (std::size_t b = a + 1; b < sets.size(); ++b) {
            std::vector<int> common;
            std::set_intersection(sets[a].begin(), sets[a].end(), sets[b].begin(), sets[b].end(),
                                  std::back_inserter(common));
            if (static_cast<int>(common.size()) == k - 1) g.add_edge(a, b);
        }
    }
    return g;
}

SmallGraph disjoint_union(const SmallGraph& a, const SmallGraph& b)
{
    const std::size_t na = a.vertex_count();
    SmallGraph g(na + b.vertex_count());
    for (auto [x, y] : a.edges()) g.add_edge(x, y);
    for (auto [x, y] : b.edges()) g.add_edge(na + x, na + y);
    return g;
}

SmallGraph cone_over(const SmallGraph& g)
{
    const std::size_t n = g.vertex_count();
    SmallGraph h(n + 1);
    for (auto [x, y] : g.edges()) h.add_edge(x, y);
    for (std::size_t v = 0; v < n; ++v) h.add_edge(v, n);
    return h;
}

SmallGraph line_graph(const SmallGraph& g)
{
    auto e = g.edges();
    SmallGraph h(e.size());
    for (std::size_t a = 0; a < e.size(); ++a) {
        for (std::size_t b = a + 1; b < e.size(); ++b) {
            if (e[a].first == e[b].first || e[a].first == e[b].second || e[a].second == e[b].first ||
                e[a].second == e[b].second) {
                h.add_edge(a, b);
            }
        }
    }
    return h;
}

bool isomorphic(const SmallGraph& a, const SmallGraph& b)
{
    const std::size_t n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (a.degree_sequence() != b.degree_sequence()) return false;

    // Map vertices of a in an order where each vertex after the first has
    // as many already-mapped neighbours as possible.
    std::vector<std::size_t> order;
    std::uint64_t placed = 0;
    while (order.size() < n) {
        std::size_t best = n;
        int best_key = -1;
        for (std::size_t v = 0; v < n; ++v) {
            if ((placed >> v) & 1u) continue;
            int key = std::popcount(a.neighbors(v) & placed) * 64 + static_cast<int>(a.degree(v));
            if (key > best_key) {
                best_key = key;
                best = v;
            }
        }
        order.push_back(best);
        placed |= std::uint64_t{1} << best;
    }

    std::vector<std::size_t> image(n, n);
    std::uint64_t used = 0;
    std::function<bool(std::size_t)> extend = [&](std::size_t depth) {
        if (depth == n) return true;
        const std::size_t v = order[depth];
        for (std::size_t w = 0; w < n; ++w) {
            if ((used >> w) & 1u || a.degree(v) != b.degree(w)) continue;
            bool ok = true;
            for (std::size_t i = 0; i < depth && ok; ++i) {
                ok = a.has_edge(v, order[i]) == b.has_edge(w, image[order[i]]);
            }
            if (!ok) continue;
            image[v] = w;
            used |= std::uint64_t{1} << w;
            if (extend(depth + 1)) return true;
            used &= ~(std::uint64_t{1} << w);
        }
        return false;
    };
    return extend(0);
}

std::string canonical_certificate(const SmallGraph& g)
{
    const std::size_t n = g.vertex_count();
    const auto degrees = g.degree_sequence();
    std::vector<std::size_t> order;
    std::vector<std::uint8_t> code, best;
    std::uint64_t used = 0;

    // Bits are laid out column by column, so the bits of the first k labels
    // form a prefix and partial labelings can be compared against the best.
    std::function<void(int)> search = [&](int state) {
        const std::size_t j = order.size();
        if (j == n) {
            if (best.empty() || code < best) best = code;
            return;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if ((used >> v) & 1u || g.degree(v) != degrees[j]) continue;
            const std::size_t start = code.size();
            int next = state;
            for (std::size_t i = 0; i < j; ++i) {
                std::uint8_t bit = g.has_edge(order[i], v) ? 1 : 0;
                code.push_back(bit);
                if (next == 0 && !best.empty()) {
                    if (bit > best[start + i]) next = 1;
                    else if (bit < best[start + i]) next = -1;
                }
            }
            if (next != 1) {
                order.push_back(v);
                used |= std::uint64_t{1} << v;
                search(next);
                used &= ~(std::uint64_t{1} << v);
                order.pop_back();
            }
            code.resize(start);
        }
    };
    search(0);

    std::ostringstream out;
    out << "deg[";
    for (std::size_t i = 0; i < n; ++i) out << (i ? "," : "") << degrees[i];
    out << "] edges[";
    bool first = true;
    std::size_t pos = 0;
    for (std::size_t col = 1; col < n; ++col) {
        for (std::size_t row = 0; row < col; ++row, ++pos) {
            if (best[pos] == 0) continue;
            out << (first ? "" : " ") << row << "-" << col;
            first = false;
        }
    }
    out << "]";
    return out.str();
}

namespace {

// Sizes of the components of g when every component is a clique, else empty.
std::vector<std::size_t> clique_components(const SmallGraph& g)
{
    std::vector<std::size_t> sizes;
    std::uint64_t seen = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if ((seen >> v) & 1u) continue;
        std::uint64_t comp = g.neighbors(v) | (std::uint64_t{1} << v);
        for (std::uint64_t c = comp; c != 0; c &= c - 1) {
            std::size_t w = static_cast<std::size_t>(std::countr_zero(c));
            if ((g.neighbors(w) | (std::uint64_t{1} << w)) != comp) return {};
        }
        seen |= comp;
        sizes.push_back(static_cast<std::size_t>(std::popcount(comp)));
    }
    return sizes;
}

// Cycle lengths when g is a disjoint union of cycles, single edges (length 2)
// and isolated vertices (length 1), else empty.
std::vector<std::size_t> cycle_components(const SmallGraph& g)
{
    std::vector<std::size_t> lengths;
    std::uint64_t seen = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if ((seen >> v) & 1u) continue;
        std::uint64_t comp = std::uint64_t{1} << v, frontier = comp;
        while (frontier != 0) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= g.neighbors(static_cast<std::size_t>(std::countr_zero(f)));
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;
        const std::size_t size = static_cast<std::size_t>(std::popcount(comp));
        for (std::uint64_t c = comp; c != 0; c &= c - 1) {
            std::size_t deg = g.degree(static_cast<std::size_t>(std::countr_zero(c)));
            std::size_t want = size == 1 ? 0 : size == 2 ? 1 : 2;
            if (deg != want) return {};
        }
        lengths.push_back(size);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

std::string join(const std::vector<std::size_t>& xs, const char* sep, const char* prefix = "")
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + std::string(prefix) + std::to_string(xs[i]);
    return s;
}

void collect_names(const SmallGraph& g, std::vector<std::string>& names, int depth)
{
    const std::size_t n = g.vertex_count();
    const std::size_t e = g.edge_count();
    auto try_graph = [&](const std::string& name, const SmallGraph& h) {
        if (h.vertex_count() == n && h.edge_count() == e && isomorphic(g, h)) names.push_back(name);
    };
    if (n == 10) try_graph("Petersen", petersen_graph());
    if (n == 8) try_graph("3-cube", cube_graph());
    if (n == 6) try_graph("Prism3", prism_graph());
    if (n >= 1 && e == n * (n - 1) / 2) names.push_back("K" + std::to_string(n));
    if (n >= 3 && e == n && g.connected() && g.degree_sequence().front() == 2) names.push_back("C" + std::to_string(n));

    const SmallGraph co = g.complement();
    auto parts = clique_components(co);
    if (parts.size() >= 2 && parts.size() < n) {
        std::sort(parts.rbegin(), parts.rend());
        names.push_back("K_{" + join(parts, ",") + "}");
    }
    const std::size_t removed = co.edge_count();
    if (removed >= 1 && co.degree_sequence().front() == 1) {
        names.push_back("K" + std::to_string(n) + "-" + std::to_string(removed) + "K2");
    }
    auto cycles = cycle_components(co);
    if (!cycles.empty()) names.push_back("co(" + join(cycles, "+", "C") + ")");

    if (n >= 2 && depth < 4) {
        for (std::size_t v = 0; v < n; ++v) {
            if (g.degree(v) != n - 1) continue;
            std::vector<std::size_t> rest;
            for (std::size_t w = 0; w < n; ++w) {
                if (w != v) rest.push_back(w);
            }
            std::vector<std::string> inner;
            collect_names(g.induced(rest), inner, depth + 1);
            if (!inner.empty()) names.push_back("nabla(" + inner.front() + ")");
            break;
        }
    }

    for (int a = 4; a <= 13; ++a) {
        for (int k = 2; 2 * k <= a; ++k) {
            if (binomial(a, k) == n) try_graph("J(" + std::to_string(a) + "," + std::to_string(k) + ")", johnson_graph(a, k));
        }
    }
}

}  // namespace

Classification classify_graph(const SmallGraph& g)
{
    if (g.vertex_count() > 13) throw InputError("classify_graph: more than 13 vertices");
    Classification c;
    collect_names(g, c.all_names, 0);
    if (!c.all_names.empty()) c.name = c.all_names.front();
    c.certificate = canonical_certificate(g);
    return c;
}

}  // namespace polycone

#include "polycone/facegraph.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "polycone/ddmethod.hpp"
#include "polycone/lp.hpp"

namespace polycone {

namespace {

using Bits = std::vector<std::uint64_t>;

bool fits_small(const std::vector<RatVector>& rows, std::vector<std::vector<std::int64_t>>& out)
{
    constexpr std::int64_t kLimit = std::int64_t{1} << 40;
    out.resize(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!to_int64(rows[i], out[i])) return false;
        for (auto x : out[i]) {
            if (x > kLimit || x < -kLimit) return false;
        }
    }
    return true;
}

// tight[a] holds the indices b with rows_b · points_a = 0. Throws when some
// product is negative.
std::vector<Bits> tight_sets(const std::vector<RatVector>& points, const std::vector<RatVector>& rows)
{
    const std::size_t words = (rows.size() + 63) / 64;
    std::vector<Bits> tight(points.size(), Bits(words, 0));
    std::vector<std::vector<std::int64_t>> p, r;
    const bool small = fits_small(points, p) && fits_small(rows, r);
    for (std::size_t a = 0; a < points.size(); ++a) {
        for (std::size_t b = 0; b < rows.size(); ++b) {
            int sign;
            if (small) {
                __int128 acc = 0;
                for (std::size_t i = 0; i < p[a].size(); ++i) acc += static_cast<__int128>(p[a][i]) * r[b][i];
                sign = acc > 0 ? 1 : acc < 0 ? -1 : 0;
            } else {
                sign = dot(points[a], rows[b]).sign();
            }
            if (sign < 0) {
                throw InputError("inconsistent representations: " + to_string(points[a]) + " violates " +
                                 to_string(rows[b]));
            }
            if (sign == 0) tight[a][b >> 6] |= std::uint64_t{1} << (b & 63);
        }
    }
    return tight;
}

std::size_t popcount(const Bits& b)
{
    std::size_t c = 0;
    for (auto w : b) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

template <class F>
void for_each_bit(const Bits& b, F&& f)
{
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::uint64_t w = b[i]; w != 0; w &= w - 1) f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    }
}

std::size_t exact_rank(const std::vector<RatVector>& rows, const Bits& which, std::size_t dim)
{
    std::vector<RatVector> sel;
    for_each_bit(which, [&](std::size_t i) { sel.push_back(rows[i]); });
    return rank(RatMatrix::from_rows(sel, dim));
}

// Adjacency of points (rays or facets) through the rows tight at both.
class AdjacencyOracle {
public:
    AdjacencyOracle(const std::vector<RatVector>& rows, const std::vector<Bits>& tight, std::size_t dim)
        : rows_(rows), tight_(tight), dim_(dim), residues_(rows.size(), std::vector<std::uint32_t>(dim)),
          by_row_(rows.size())
    {
        for (std::size_t b = 0; b < rows.size(); ++b) {
            for (std::size_t i = 0; i < dim; ++i) residues_[b][i] = ModRank::residue(rows[b][i]);
        }
        for (std::size_t a = 0; a < tight.size(); ++a) {
            for_each_bit(tight[a], [&](std::size_t b) { by_row_[b].push_back(static_cast<std::uint32_t>(a)); });
        }
    }

    [[nodiscard]] std::size_t tight_rank(std::size_t a, ModRank& scratch) const
    {
        scratch.clear();
        for_each_bit(tight_[a], [&](std::size_t b) {
            if (scratch.rank() < dim_) scratch.add(residues_[b].data());
        });
        if (scratch.rank() + 1 >= dim_) return scratch.rank();
        return exact_rank(rows_, tight_[a], dim_);
    }

    bool adjacent(std::size_t u, std::size_t v, ModRank& scratch) const
    {
        if (u == v) return false;
        const Bits& tu = tight_[u];
        const Bits& tv = tight_[v];
        Bits common(tu.size());
        std::size_t count = 0;
        for (std::size_t i = 0; i < tu.size(); ++i) {
            common[i] = tu[i] & tv[i];
            count += static_cast<std::size_t>(std::popcount(common[i]));
        }
        if (dim_ < 2) return false;
        if (count + 2 < dim_) return false;
        if (dim_ == 2) return true;

        // A rank of dim-2 modulo p certifies the exact rank, which cannot be larger.
        scratch.clear();
        bool certified = false;
        const std::vector<std::uint32_t>* shortest = nullptr;
        for_each_bit(common, [&](std::size_t b) {
            if (!certified && scratch.add(residues_[b].data()) && scratch.rank() + 2 == dim_) certified = true;
            if (shortest == nullptr || by_row_[b].size() < shortest->size()) shortest = &by_row_[b];
        });
        if (certified) return true;
        if (shortest == nullptr) return tight_.size() == 2;
        for (auto w : *shortest) {
            if (w == u || w == v) continue;
            const Bits& tw = tight_[w];
            bool contains = true;
            for (std::size_t i = 0; i < common.size() && contains; ++i) contains = (common[i] & ~tw[i]) == 0;
            if (contains) return false;
        }
        return true;
    }

private:
    const std::vector<RatVector>& rows_;
    const std::vector<Bits>& tight_;
    std::size_t dim_;
    std::vector<std::vector<std::uint32_t>> residues_;
    std::vector<std::vector<std::uint32_t>> by_row_;
};

template <class Work>
void parallel_for(std::size_t count, unsigned threads, Work&& work)
{
    threads = std::max(1u, threads);
    if (threads == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) work(i, 0u);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = next++; i < count; i = next++) work(i, t);
        });
    }
    for (auto& th : pool) th.join();
}

template <class T>
std::vector<T> permute_small(const Perm& p, const std::vector<T>& v)
{
    std::vector<T> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[p[i]] = v[i];
    return w;
}

// Carries the neighbour lists of orbit representatives to every node.
template <class T>
void transport(const std::vector<std::vector<T>>& nodes, const CoordPermGroup& g, const OrbitSet& orbits,
               const std::vector<std::size_t>& rep_index, const std::vector<std::vector<std::uint32_t>>& rep_neighbors,
               unsigned threads, std::vector<std::vector<std::uint32_t>>& neighbors)
{
    std::map<std::vector<T>, std::uint32_t> index;
    for (std::size_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i], static_cast<std::uint32_t>(i));

    std::vector<std::pair<std::size_t, std::size_t>> jobs;  // (orbit, member)
    for (std::size_t o = 0; o < orbits.orbits.size(); ++o) {
        for (auto m : orbits.orbits[o].members) jobs.emplace_back(o, m);
    }
    std::atomic<bool> broken{false};
    parallel_for(jobs.size(), threads, [&](std::size_t j, unsigned) {
        auto [o, x] = jobs[j];
        const auto& rep = nodes[rep_index[o]];
        std::size_t k = 0;
        while (k < g.order() && permute_small(g.elements()[k], rep) != nodes[x]) ++k;
        if (k == g.order()) {
            broken = true;
            return;
        }
        std::vector<std::uint32_t> out;
        out.reserve(rep_neighbors[o].size());
        for (auto y : rep_neighbors[o]) {
            auto it = index.find(permute_small(g.elements()[k], nodes[y]));
            if (it == index.end()) {
                broken = true;
                return;
            }
            out.push_back(it->second);
        }
        std::sort(out.begin(), out.end());
        neighbors[x] = std::move(out);
    });
    if (broken) throw InputError("build_face_graph: the node set is not invariant under the group");
}

int bfs_eccentricity(const std::vector<std::vector<std::uint32_t>>& adj, std::size_t source)
{
    std::vector<int> dist(adj.size(), -1);
    std::deque<std::size_t> queue{source};
    dist[source] = 0;
    int far = 0;
    std::size_t reached = 1;
    while (!queue.empty()) {
        auto x = queue.front();
        queue.pop_front();
        for (auto y : adj[x]) {
            if (dist[y] >= 0) continue;
            dist[y] = dist[x] + 1;
            far = std::max(far, dist[y]);
            ++reached;
            queue.push_back(y);
        }
    }
    return reached == adj.size() ? far : -1;
}

void check_extreme(const RatVector& r, const Representation& h)
{
    Bits tight((h.size() + 63) / 64, 0);
    for (std::size_t b = 0; b < h.size(); ++b) {
        int s = dot(h.rows[b], r).sign();
        if (s < 0) throw InputError("not in the cone: " + to_string(r));
        if (s == 0) tight[b >> 6] |= std::uint64_t{1} << (b & 63);
    }
    if (exact_rank(h.rows, tight, h.dim()) + 1 != h.dim()) throw InputError("not an extreme ray: " + to_string(r));
}

Bits tight_of(const RatVector& r, const Representation& h)
{
    Bits tight((h.size() + 63) / 64, 0);
    for (std::size_t b = 0; b < h.size(); ++b) {
        if (dot(h.rows[b], r).is_zero()) tight[b >> 6] |= std::uint64_t{1} << (b & 63);
    }
    return tight;
}

}  // namespace

bool rays_adjacent(const Representation& h, const RatVector& r1, const RatVector& r2, RayAdjacency mode,
                   const Representation* rays)
{
    if (h.kind != RepKind::H) throw InputError("rays_adjacent: needs an H-representation");
    if (r1.size() != h.dim() || r2.size() != h.dim()) throw InputError("rays_adjacent: vector length does not match");
    RatVector a = normalize_ray(r1), b = normalize_ray(r2);
    if (a == b) throw InputError("rays_adjacent: the two rays are equal");
    check_extreme(a, h);
    check_extreme(b, h);
    Bits ta = tight_of(a, h), tb = tight_of(b, h);
    Bits common(ta.size());
    for (std::size_t i = 0; i < ta.size(); ++i) common[i] = ta[i] & tb[i];
    if (mode == RayAdjacency::rank) return exact_rank(h.rows, common, h.dim()) + 2 == h.dim();

    if (rays == nullptr) throw InputError("rays_adjacent: combinatorial mode needs the complete ray list");
    for (const auto& w : rays->rows) {
        RatVector c = normalize_ray(w);
        if (c == a || c == b) continue;
        Bits tc = tight_of(c, h);
        bool contains = true;
        for (std::size_t i = 0; i < common.size() && contains; ++i) contains = (common[i] & ~tc[i]) == 0;
        if (contains) return false;
    }
    return true;
}

namespace {

std::size_t grow_face(const Representation& h, std::size_t f1, std::size_t f2, std::size_t stop_at)
{
    if (h.kind != RepKind::H) throw InputError("face_dimension_lp: needs an H-representation");
    if (f1 >= h.size() || f2 >= h.size()) throw InputError("face_dimension_lp: row index out of range");
    if (f1 == f2) throw InputError("face_dimension_lp: the two facets must differ");
    const std::size_t d = h.dim();

    std::vector<RatVector> cons = h.rows;
    RatVector rhs(h.size() + 3, Rat(0));
    for (std::size_t f : {f1, f2}) {
        RatVector neg(d);
        for (std::size_t i = 0; i < d; ++i) neg[i] = -h.rows[f][i];
        cons.push_back(neg);
    }
    cons.emplace_back(d);  // placeholder for -c · x >= -1
    rhs.back() = Rat(-1);

    std::vector<RatVector> found;
    while (found.size() < stop_at) {
        auto complement = kernel_basis(RatMatrix::from_rows(found, d));
        bool grew = false;
        for (const auto& c : complement) {
            for (int sign : {1, -1}) {
                RatVector obj(d);
                for (std::size_t i = 0; i < d; ++i) obj[i] = sign > 0 ? c[i] : -c[i];
                for (std::size_t i = 0; i < d; ++i) cons.back()[i] = -obj[i];
                auto res = solve_lp(RatMatrix::from_rows(cons, d), rhs, obj, Sense::maximize);
                if (res.status == LpStatus::optimal && res.value->sign() > 0) {
                    found.push_back(*res.point);
                    grew = true;
                    break;
                }
            }
            if (grew) break;
        }
        if (!grew) break;
    }
    return found.size();
}

}  // namespace

std::size_t face_dimension_lp(const Representation& h, std::size_t f1, std::size_t f2)
{
    return grow_face(h, f1, f2, h.dim());
}

bool facets_adjacent_lp(const Representation& h, std::size_t f1, std::size_t f2)
{
    if (h.dim() < 2) throw InputError("facets_adjacent_lp: dimension too small");
    return grow_face(h, f1, f2, h.dim() - 2) == h.dim() - 2;
}

std::size_t incidence_number(const RatVector& x, const Representation& other_side)
{
    if (x.size() != other_side.dim()) throw InputError("incidence_number: vector length does not match");
    std::size_t count = 0;
    for (const auto& r : other_side.rows) {
        if (dot(r, x).is_zero()) ++count;
    }
    return count;
}

std::size_t FaceGraph::edge_count() const
{
    std::size_t total = 0;
    for (const auto& n : neighbors) total += n.size();
    return total / 2;
}

bool FaceGraph::adjacent(std::size_t a, std::size_t b) const
{
    const auto& n = neighbors.at(a);
    return std::binary_search(n.begin(), n.end(), static_cast<std::uint32_t>(b));
}

std::size_t FaceGraph::orbit_index(const RatVector& v, const CoordPermGroup& g) const
{
    RatVector c = canonical_rep(normalize_ray(v), g);
    for (std::size_t o = 0; o < orbits.size(); ++o) {
        if (orbits[o].representative == c) return o;
    }
    return orbits.size();
}

FaceGraph build_face_graph(const Representation& primal, const Representation& dual, const CoordPermGroup& g,
                           GraphSide which, const FaceGraphOptions& options)
{
    if (primal.kind == dual.kind) throw InputError("build_face_graph: needs one H- and one V-representation");
    if (primal.dim() != dual.dim()) throw InputError("build_face_graph: dimensions differ");
    if (g.degree() != primal.dim()) throw InputError("build_face_graph: group degree does not match");
    const Representation& h = primal.kind == RepKind::H ? primal : dual;
    const Representation& v = primal.kind == RepKind::V ? primal : dual;
    const Representation& node_rep = which == GraphSide::skeleton ? v : h;
    const Representation& row_rep = which == GraphSide::skeleton ? h : v;
    const std::size_t d = h.dim();

    FaceGraph fg;
    fg.dim = d;
    fg.nodes = node_rep.rows;
    std::sort(fg.nodes.begin(), fg.nodes.end());
    const std::size_t n = fg.nodes.size();
    auto tight = tight_sets(fg.nodes, row_rep.rows);
    AdjacencyOracle oracle(row_rep.rows, tight, d);

    const unsigned threads = std::max(1u, options.threads);
    std::vector<ModRank> scratch(threads, ModRank(d));
    std::atomic<bool> degenerate{false};
    parallel_for(n, threads, [&](std::size_t a, unsigned t) {
        if (oracle.tight_rank(a, scratch[t]) + 1 != d) degenerate = true;
    });
    if (degenerate) throw InputError("build_face_graph: some node is not a face of codimension one in the dual");

    OrbitSet orbits = orbit_decompose(fg.nodes, g, threads);
    std::vector<std::size_t> rep_index;
    for (const auto& o : orbits.orbits) {
        auto it = std::lower_bound(fg.nodes.begin(), fg.nodes.end(), o.representative);
        if (it == fg.nodes.end() || *it != o.representative) {
            throw InputError("build_face_graph: the node set is not invariant under the group");
        }
        rep_index.push_back(static_cast<std::size_t>(it - fg.nodes.begin()));
    }

    // Neighbours of each representative, candidates split into blocks.
    const std::size_t block = 256;
    const std::size_t blocks = (n + block - 1) / block;
    std::vector<std::vector<std::vector<std::uint32_t>>> partial(rep_index.size(),
                                                                 std::vector<std::vector<std::uint32_t>>(blocks));
    parallel_for(rep_index.size() * blocks, threads, [&](std::size_t job, unsigned t) {
        const std::size_t o = job / blocks, b = job % blocks;
        const std::size_t u = rep_index[o];
        for (std::size_t w = b * block; w < std::min(n, (b + 1) * block); ++w) {
            if (oracle.adjacent(u, w, scratch[t])) partial[o][b].push_back(static_cast<std::uint32_t>(w));
        }
    });
    std::vector<std::vector<std::uint32_t>> rep_neighbors(rep_index.size());
    for (std::size_t o = 0; o < rep_index.size(); ++o) {
        for (auto& p : partial[o]) rep_neighbors[o].insert(rep_neighbors[o].end(), p.begin(), p.end());
    }

    fg.neighbors.assign(n, {});
    std::vector<std::vector<std::int64_t>> small;
    if (fits_small(fg.nodes, small)) {
        transport(small, g, orbits, rep_index, rep_neighbors, threads, fg.neighbors);
    } else {
        transport(fg.nodes, g, orbits, rep_index, rep_neighbors, threads, fg.neighbors);
    }

    // Orbit order: decreasing adjacency, decreasing incidence, representative.
    std::vector<std::size_t> order(orbits.orbits.size());
    std::iota(order.begin(), order.end(), 0);
    auto key = [&](std::size_t o) {
        return std::make_tuple(rep_neighbors[o].size(), popcount(tight[rep_index[o]]));
    };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key(a) > key(b); });
    std::vector<std::size_t> rank_of(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) rank_of[order[i]] = i;

    fg.orbit_of_node.assign(n, 0);
    for (std::size_t o = 0; o < orbits.orbits.size(); ++o) {
        for (auto m : orbits.orbits[o].members) fg.orbit_of_node[m] = rank_of[o];
    }
    for (auto o : order) {
        OrbitStats s;
        s.representative = orbits.orbits[o].representative;
        s.size = orbits.orbits[o].size;
        s.adjacency = rep_neighbors[o].size();
        s.incidence = popcount(tight[rep_index[o]]);
        fg.orbits.push_back(std::move(s));
    }
    fg.representation_matrix.assign(order.size(), std::vector<std::size_t>(order.size(), 0));
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (auto w : rep_neighbors[order[i]]) ++fg.representation_matrix[i][fg.orbit_of_node[w]];
    }

    fg.diameter = 0;
    if (options.diameter && n > 1) {
        std::vector<int> ecc(rep_index.size());
        parallel_for(rep_index.size(), threads,
                     [&](std::size_t o, unsigned) { ecc[o] = bfs_eccentricity(fg.neighbors, rep_index[o]); });
        for (int e : ecc) {
            if (e < 0) {
                fg.diameter = -1;
                break;
            }
            fg.diameter = std::max(fg.diameter, e);
        }
    }
    return fg;
}

namespace {

const IndexScheme& subset_scheme(const RatVector& v, const ConeSpec& spec, IndexScheme& storage)
{
    storage = index_scheme(spec);
    if (storage.kind() == SchemeKind::ordered_pairs) throw InputError("representation graph: needs an unordered index scheme");
    if (v.size() != storage.size()) throw InputError("representation graph: vector length does not match the scheme");
    return storage;
}

}  // namespace

LabeledGraph representation_graph_G(const RatVector& v, const ConeSpec& spec)
{
    IndexScheme storage;
    const IndexScheme& scheme = subset_scheme(v, spec, storage);
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) support.push_back(i);
    }
    if (support.empty()) throw InputError("representation graph: zero vector");
    if (support.size() > SmallGraph::kMaxVertices) throw InputError("representation graph: support too large");

    LabeledGraph out;
    out.graph = SmallGraph(support.size());
    const int k = scheme.k();
    for (std::size_t a = 0; a < support.size(); ++a) {
        out.vertex_names.push_back(scheme.label(support[a]));
        out.values.push_back(v[support[a]]);
        for (std::size_t b = a + 1; b < support.size(); ++b) {
            const auto& x = scheme.labels()[support[a]];
            const auto& y = scheme.labels()[support[b]];
            std::vector<int> common;
            std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
            if (static_cast<int>(common.size()) == k - 1) out.graph.add_edge(a, b);
        }
    }
    return out;
}

LabeledGraph representation_graph_H(const RatVector& v, const ConeSpec& spec)
{
    IndexScheme storage;
    const IndexScheme& scheme = subset_scheme(v, spec, storage);
    const int n = scheme.n();
    if (scheme.k() + 2 != n) throw InputError("representation graph H: needs n = m+3");
    SmallGraph full(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (v[i] != Rat(1)) throw InputError("representation graph H: needs a 0/1 vector");
        std::vector<std::size_t> outside;
        const auto& label = scheme.labels()[i];
        for (int x = 1; x <= n; ++x) {
            if (std::find(label.begin(), label.end(), x) == label.end()) outside.push_back(static_cast<std::size_t>(x - 1));
        }
        full.add_edge(outside[0], outside[1]);
    }
    LabeledGraph out;
    std::vector<std::size_t> keep;
    for (std::size_t x = 0; x < static_cast<std::size_t>(n); ++x) {
        if (full.degree(x) > 0) keep.push_back(x);
    }
    out.graph = full.induced(keep);
    for (auto x : keep) {
        out.vertex_names.push_back(std::to_string(x + 1));
        out.values.emplace_back(1);
    }
    return out;
}

ZeroOneStats zero_one_ray_stats(const OrbitSet& rays)
{
    ZeroOneStats s;
    bool first = true;
    for (const auto& o : rays.orbits) {
        bool zero_one = true;
        std::size_t zeros = 0;
        for (const auto& x : o.representative) {
            if (x.is_zero()) ++zeros;
            else if (x != Rat(1)) zero_one = false;
        }
        if (zero_one) ++s.zero_one_orbits;
        if (first || zeros < s.min_zero_count) s.min_zero_count = zeros;
        first = false;
    }
    return s;
}

std::string adjacency_list_text(const FaceGraph& graph)
{
    std::ostringstream out;
    for (std::size_t a = 0; a < graph.neighbors.size(); ++a) {
        out << a << ":";
        for (auto b : graph.neighbors[a]) out << " " << b;
        out << "\n";
    }
    return out.str();
}

std::string orbit_table_text(const FaceGraph& graph, const IndexScheme& scheme, bool complement_labels)
{
    std::ostringstream out;
    out << "orbit";
    for (std::size_t i = 0; i < scheme.size(); ++i) out << " " << scheme.label(i, complement_labels);
    out << " | Adj. Size Inc.\n";
    for (std::size_t o = 0; o < graph.orbits.size(); ++o) {
        const auto& s = graph.orbits[o];
        out << "O" << (o + 1);
        for (const auto& x : s.representative) out << " " << x;
        out << " | " << s.adjacency << " " << s.size << " " << s.incidence << "\n";
    }
    return out.str();
}

}  // namespace polycone

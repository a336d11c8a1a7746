#include "polycone/adm.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "polycone/lp.hpp"

namespace polycone {

namespace {

void require_v(const Representation& v, const char* what)
{
    if (v.kind != RepKind::V) throw InputError(std::string(what) + ": V-representation required");
    if (v.rows.empty()) throw InputError(std::string(what) + ": no generators");
}

std::vector<RatVector> tight_rows(const std::vector<RatVector>& rows, const RatVector& x)
{
    std::vector<RatVector> out;
    for (const auto& r : rows) {
        if (dot(r, x).is_zero()) out.push_back(r);
    }
    return out;
}

std::size_t rank_of(const std::vector<RatVector>& rows, std::size_t dim)
{
    return rows.empty() ? 0 : rank(RatMatrix::from_rows(rows, dim));
}

template <class Work>
void parallel_for(std::size_t count, unsigned threads, Work&& work)
{
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            try {
                for (std::size_t i = next++; i < count; i = next++) work(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = count;
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

struct Expansion {
    std::size_t adjacency = 0;
    std::vector<RatVector> neighbors;  // canonical, sorted, unique
};

struct Decomposer {
    const Representation& v;
    const CoordPermGroup& g;
    const AdmOptions& options;
    RatVector apex;
    std::atomic<std::size_t> subcone_runs{0};

    // Orbit representatives and sizes of the ridges of `facet` under `stab`.
    std::vector<std::pair<RatVector, std::size_t>> ridge_orbits(const RatVector& facet, const Subcone& sub)
    {
        Representation pyramid = sub.generators;
        pyramid.tags.clear();
        pyramid.rows.push_back(apex);
        ++subcone_runs;
        std::vector<std::pair<RatVector, std::size_t>> out;
        if (options.recursion_depth > 1) {
            AdmOptions inner = options;
            inner.recursion_depth = options.recursion_depth - 1;
            inner.threads = 1;
            inner.checkpoint.clear();
            auto res = adjacency_decomposition(pyramid, sub.group, inner);
            subcone_runs += res.subcone_runs;
            for (const auto& o : res.orbits) out.emplace_back(o.representative, o.size);
        } else {
            auto facets = facet_enumeration(pyramid, options.dd);
            auto orbits = orbit_decompose(facets.rows, sub.group);
            for (const auto& o : orbits.orbits) out.emplace_back(o.representative, o.size);
        }
        std::erase_if(out, [&](const auto& e) { return e.first == facet; });
        return out;
    }

    Expansion expand(const RatVector& facet)
    {
        Subcone sub = subcone(v, facet, g);
        Expansion ex;
        std::set<RatVector> seen;
        for (const auto& [ridge, size] : ridge_orbits(facet, sub)) {
            ex.adjacency += size;
            auto other = ridge_rotation(v, facet, tight_rows(sub.generators.rows, ridge));
            seen.insert(canonical_rep(other, g));
        }
        ex.neighbors.assign(seen.begin(), seen.end());
        return ex;
    }
};

void check_group(const Representation& v, const CoordPermGroup& g)
{
    if (g.degree() != v.dim()) throw InputError("adjacency_decomposition: group degree does not match the dimension");
    std::set<RatVector> gens;
    for (const auto& r : v.rows) gens.insert(normalize_ray(r));
    for (const auto& p : g.generators()) {
        for (const auto& r : gens) {
            if (!gens.contains(permute(p, r))) {
                throw InputError("adjacency_decomposition: the group does not preserve the generators");
            }
        }
    }
}

void write_checkpoint(const std::string& path, const std::vector<RatVector>& treated,
                      const std::vector<RatVector>& frontier)
{
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw InputError("cannot write checkpoint " + path);
        out << checkpoint_text(treated, frontier);
        if (!out) throw InputError("cannot write checkpoint " + path);
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace

RatVector initial_facet(const Representation& v)
{
    require_v(v, "initial_facet");
    const std::size_t d = v.dim();
    std::size_t r = rank_of(v.rows, d);
    if (r != d) {
        throw InputError("initial_facet: generators span rank " + std::to_string(r) + " of " + std::to_string(d));
    }
    RatVector total(d, Rat(0));
    for (const auto& g : v.rows) {
        for (std::size_t i = 0; i < d; ++i) total[i] += g[i];
    }
    auto lp = solve_lp(RatMatrix::from_rows(v.rows, d), RatVector(v.rows.size(), Rat(1)), total, Sense::minimize);
    if (lp.status != LpStatus::optimal) throw InputError("initial_facet: the generated cone is not pointed");
    RatVector c = normalize_ray(*lp.point);

    for (;;) {
        auto tight = tight_rows(v.rows, c);
        std::size_t tr = rank_of(tight, d);
        if (tr + 1 == d) return c;
        tight.push_back(c);
        RatVector w = kernel_basis(RatMatrix::from_rows(tight, d)).front();
        bool descends = std::any_of(v.rows.begin(), v.rows.end(), [&](const RatVector& g) { return dot(w, g).sign() < 0; });
        if (!descends) {
            for (auto& x : w) x = -x;
        }
        std::optional<Rat> step;
        for (const auto& g : v.rows) {
            Rat slope = dot(w, g);
            if (slope.sign() >= 0) continue;
            Rat ratio = dot(c, g) / -slope;
            if (!step || ratio < *step) step = ratio;
        }
        for (std::size_t i = 0; i < d; ++i) c[i] += *step * w[i];
        c = normalize_ray(c);
    }
}

Subcone subcone(const Representation& v, const RatVector& facet, const CoordPermGroup& g)
{
    require_v(v, "subcone");
    const std::size_t d = v.dim();
    if (facet.size() != d) throw InputError("subcone: facet length does not match the dimension");
    if (g.degree() != d) throw InputError("subcone: group degree does not match the dimension");
    RatVector f = normalize_ray(facet);
    Subcone sub;
    sub.generators.scheme = v.scheme;
    sub.generators.kind = RepKind::V;
    for (std::size_t i = 0; i < v.rows.size(); ++i) {
        int s = dot(f, v.rows[i]).sign();
        if (s < 0) throw InputError("subcone: inequality is violated by generator " + std::to_string(i));
        if (s > 0) continue;
        sub.generators.rows.push_back(v.rows[i]);
        if (!v.tags.empty()) sub.generators.tags.push_back(v.tags[i]);
    }
    std::size_t r = rank_of(sub.generators.rows, d);
    if (r + 1 != d) {
        throw InputError("subcone: not a facet, tight generators have rank " + std::to_string(r) + ", need " +
                         std::to_string(d - 1));
    }
    sub.group = g.stabilizer(f);
    return sub;
}

RatVector ridge_rotation(const Representation& v, const RatVector& facet,
                         const std::vector<RatVector>& ridge_generators)
{
    require_v(v, "ridge_rotation");
    const std::size_t d = v.dim();
    if (facet.size() != d) throw InputError("ridge_rotation: facet length does not match the dimension");
    for (const auto& r : ridge_generators) {
        if (r.size() != d) throw InputError("ridge_rotation: generator length does not match the dimension");
        if (!dot(facet, r).is_zero()) throw InputError("ridge_rotation: ridge generator not on the facet");
    }
    std::size_t r = rank_of(ridge_generators, d);
    if (r + 2 != d) {
        throw InputError("ridge_rotation: ridge generators have rank " + std::to_string(r) + ", need " +
                         std::to_string(d - 2));
    }
    auto basis = kernel_basis(RatMatrix::from_rows(ridge_generators, d));
    RatVector w;
    for (const auto& k : basis) {
        if (rank(RatMatrix::from_rows({facet, k}, d)) == 2) {
            w = k;
            break;
        }
    }
    int orientation = 0;
    for (const auto& g : v.rows) {
        if (!dot(facet, g).is_zero()) continue;
        int s = dot(w, g).sign();
        if (s == 0) continue;
        if (orientation != 0 && s != orientation) throw InputError("ridge_rotation: not a ridge of the facet");
        orientation = s;
    }
    if (orientation == 0) throw InputError("ridge_rotation: not a ridge of the facet");
    if (orientation < 0) {
        for (auto& x : w) x = -x;
    }
    std::optional<Rat> mu;
    for (const auto& g : v.rows) {
        Rat fg = dot(facet, g);
        if (fg.sign() < 0) throw InputError("ridge_rotation: facet inequality is violated");
        if (fg.is_zero()) continue;
        Rat need = -dot(w, g) / fg;
        if (!mu || need > *mu) mu = need;
    }
    if (!mu) throw InputError("ridge_rotation: facet is tight at every generator");
    for (std::size_t i = 0; i < d; ++i) w[i] += *mu * facet[i];
    return normalize_ray(w);
}

std::size_t AdmResult::total() const
{
    std::size_t t = 0;
    for (const auto& o : orbits) t += o.size;
    return t;
}

OrbitSet AdmResult::orbit_set() const
{
    OrbitSet s;
    for (const auto& o : orbits) s.orbits.push_back(Orbit{o.representative, o.size, {}});
    return s;
}

AdmResult adjacency_decomposition(const Representation& v, const CoordPermGroup& g, const AdmOptions& options)
{
    require_v(v, "adjacency_decomposition");
    if (options.recursion_depth == 0) throw InputError("adjacency_decomposition: recursion depth must be positive");
    check_group(v, g);
    const std::size_t d = v.dim();

    Decomposer dec{v, g, options, RatVector(d, Rat(0))};
    for (const auto& r : v.rows) {
        for (std::size_t i = 0; i < d; ++i) dec.apex[i] += r[i];
    }

    std::map<RatVector, AdmOrbit> known;
    std::vector<RatVector> frontier;
    auto incidence_of = [&](const RatVector& f) { return tight_rows(v.rows, f).size(); };
    auto discover = [&](const RatVector& canon, bool treated_before) {
        AdmOrbit o;
        o.representative = canon;
        o.size = g.order() / stabilizer_order(canon, g);
        o.incidence = incidence_of(canon);
        o.from_checkpoint = treated_before;
        known.emplace(canon, std::move(o));
    };

    bool resumed = false;
    if (!options.checkpoint.empty() && std::filesystem::exists(options.checkpoint)) {
        std::ifstream in(options.checkpoint);
        std::stringstream buf;
        buf << in.rdbuf();
        std::vector<RatVector> treated, pending;
        parse_checkpoint(buf.str(), d, treated, pending);
        for (const auto& t : treated) {
            subcone(v, t, g);
            discover(canonical_rep(t, g), true);
        }
        for (const auto& f : pending) {
            subcone(v, f, g);
            auto canon = canonical_rep(f, g);
            if (known.contains(canon)) continue;
            discover(canon, false);
            frontier.push_back(canon);
        }
        resumed = !known.empty();
    }
    if (!resumed) {
        auto first = canonical_rep(initial_facet(v), g);
        discover(first, false);
        frontier.push_back(first);
    }

    std::map<RatVector, std::vector<RatVector>> neighbor_reps;
    while (!frontier.empty()) {
        std::sort(frontier.begin(), frontier.end(), [&](const RatVector& a, const RatVector& b) {
            std::size_t ia = known.at(a).incidence;
            std::size_t ib = known.at(b).incidence;
            return ia != ib ? ia < ib : a < b;
        });
        std::vector<Expansion> results(frontier.size());
        parallel_for(frontier.size(), options.threads, [&](std::size_t i) { results[i] = dec.expand(frontier[i]); });

        std::vector<RatVector> next;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            auto& o = known.at(frontier[i]);
            o.adjacency = results[i].adjacency;
            for (const auto& nb : results[i].neighbors) {
                if (known.contains(nb)) continue;
                discover(nb, false);
                next.push_back(nb);
            }
            neighbor_reps[frontier[i]] = std::move(results[i].neighbors);
        }
        frontier = std::move(next);
        if (!options.checkpoint.empty()) {
            std::vector<RatVector> treated;
            for (const auto& [rep, o] : known) {
                if (std::find(frontier.begin(), frontier.end(), rep) == frontier.end()) treated.push_back(rep);
            }
            write_checkpoint(options.checkpoint, treated, frontier);
        }
    }

    AdmResult res;
    std::map<RatVector, std::size_t> index;
    for (auto& [rep, o] : known) {
        index[rep] = res.orbits.size();
        res.orbits.push_back(std::move(o));
    }
    for (auto& o : res.orbits) {
        auto it = neighbor_reps.find(o.representative);
        if (it == neighbor_reps.end()) continue;
        for (const auto& nb : it->second) o.neighbor_orbits.push_back(index.at(nb));
        std::sort(o.neighbor_orbits.begin(), o.neighbor_orbits.end());
    }
    res.subcone_runs = dec.subcone_runs;
    return res;
}

std::string checkpoint_text(const std::vector<RatVector>& treated, const std::vector<RatVector>& frontier)
{
    std::ostringstream out;
    auto emit = [&](char tag, const RatVector& v) {
        out << tag;
        for (const auto& x : v) out << ' ' << x;
        out << '\n';
    };
    for (const auto& v : treated) emit('T', v);
    for (const auto& v : frontier) emit('F', v);
    return out.str();
}

void parse_checkpoint(const std::string& text, std::size_t dim, std::vector<RatVector>& treated,
                      std::vector<RatVector>& frontier)
{
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string tag;
        if (!(fields >> tag)) continue;
        if (tag != "T" && tag != "F") {
            throw InputError("checkpoint line " + std::to_string(line_no) + ": expected T or F");
        }
        RatVector v;
        std::string token;
        while (fields >> token) {
            try {
                v.push_back(Rat::parse(token));
            } catch (const InputError&) {
                throw InputError("checkpoint line " + std::to_string(line_no) + ": bad entry '" + token + "'");
            }
        }
        if (v.size() != dim) {
            throw InputError("checkpoint line " + std::to_string(line_no) + ": expected " + std::to_string(dim) +
                             " entries, found " + std::to_string(v.size()));
        }
        if (!is_primitive_integer(v)) {
            throw InputError("checkpoint line " + std::to_string(line_no) + ": not a primitive integer vector");
        }
        (tag == "T" ? treated : frontier).push_back(std::move(v));
    }
}

}  // namespace polycone

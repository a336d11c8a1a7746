#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "polycone/adm.hpp"
#include "polycone/facegraph.hpp"
#include "polycone/pipeline.hpp"
#include "polycone/records.hpp"
#include "polycone/report.hpp"
#include "polycone/symmetry.hpp"

using namespace polycone;

namespace {

unsigned threads = 1;

struct Outcome {
    bool pass = true;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what)
    {
        if (ok) return;
        pass = false;
        failures.push_back(what);
    }

    template <class T>
    void equal(const T& computed, const T& expected, const std::string& what)
    {
        if (computed == expected) return;
        std::ostringstream s;
        s << what << " expected " << expected << " computed " << computed;
        expect(false, s.str());
    }
};

RatVector ints(std::initializer_list<std::int64_t> xs)
{
    RatVector v;
    for (auto x : xs) v.emplace_back(x);
    return v;
}

const ConeData& cone(const ConeSpec& spec)
{
    static std::map<std::string, ConeData> cache;
    auto it = cache.find(spec.name());
    if (it == cache.end()) it = cache.emplace(spec.name(), compute_cone(spec)).first;
    return it->second;
}

FaceGraph graph_of(const ConeSpec& spec, GraphSide side)
{
    FaceGraphOptions opt;
    opt.threads = threads;
    return build_face_graph(cone(spec).facets, cone(spec).rays, group_for(spec), side, opt);
}

OrbitSet ray_orbits(const ConeSpec& spec) { return orbit_decompose(cone(spec).rays.rows, group_for(spec), threads); }

std::size_t row_index(const Representation& rep, const RatVector& row)
{
    return static_cast<std::size_t>(std::find(rep.rows.begin(), rep.rows.end(), row) - rep.rows.begin());
}

struct Published {
    ConeSpec spec;
    std::size_t rays, ray_orbits, facets, facet_orbits;
    int skeleton, ridge;
};

Outcome core_regression()
{
    const std::vector<Published> table = {
        {ConeSpec::met(4), 7, 2, 12, 1, 1, 2},
        {ConeSpec::met(5), 25, 3, 30, 1, 2, 2},
        {ConeSpec::met(6), 296, 7, 60, 1, 2, 2},
        {ConeSpec::cut(5), 15, 2, 40, 2, 1, 2},
        {ConeSpec::cut(6), 31, 3, 210, 4, 1, 3},
        {ConeSpec::qmet(3), 12, 2, 12, 2, 2, 2},
        {ConeSpec::qmet(4), 164, 10, 36, 2, 3, 2},
        {ConeSpec::omcut(4), 74, 5, 72, 4, 2, 2},
        {ConeSpec::hmet(2, 5), 37, 3, 30, 2, 2, 2},
        {ConeSpec::hcut(2, 5), 25, 2, 120, 4, 2, 3},
        {ConeSpec::smet(2, Rat(2), 5), 132, 6, 20, 1, 2, 1},
        {ConeSpec::scut(2, Rat(2), 5), 20, 2, 220, 6, 1, 3},
        {ConeSpec::smet(3, Rat(3), 6), 1138, 12, 30, 1, 3, 1},
        {ConeSpec::scut(3, Rat(3), 6), 21, 2, 150, 3, 1, 3},
        {ConeSpec::hmet(3, 6), 287, 5, 45, 2, 3, 2},
    };
    Outcome out;
    for (const auto& p : table) {
        auto skeleton = graph_of(p.spec, GraphSide::skeleton);
        auto ridge = graph_of(p.spec, GraphSide::ridge);
        const auto name = p.spec.name() + " ";
        out.equal(skeleton.nodes.size(), p.rays, name + "rays");
        out.equal(skeleton.orbits.size(), p.ray_orbits, name + "ray orbits");
        out.equal(ridge.nodes.size(), p.facets, name + "facets");
        out.equal(ridge.orbits.size(), p.facet_orbits, name + "facet orbits");
        out.equal(skeleton.diameter, p.skeleton, name + "skeleton diameter");
        out.equal(ridge.diameter, p.ridge, name + "ridge diameter");
    }
    return out;
}

Outcome extended_regression()
{
    Outcome out;
    for (const auto& p : {Published{ConeSpec::qmet(5), 43590, 229, 80, 2, -1, -1},
                          Published{ConeSpec::hmet(2, 6), 12492, 41, 80, 2, -1, -1},
                          Published{ConeSpec::smet(3, Rat(2), 6), 12670, 40, 45, 2, 4, 2}}) {
        const auto& c = cone(p.spec);
        const auto name = p.spec.name() + " ";
        out.equal(c.rays.size(), p.rays, name + "rays");
        out.equal(ray_orbits(p.spec).orbits.size(), p.ray_orbits, name + "ray orbits");
        out.equal(c.facets.size(), p.facets, name + "facets");
        out.equal(orbit_decompose(c.facets.rows, group_for(p.spec), threads).orbits.size(), p.facet_orbits,
                  name + "facet orbits");
        if (p.skeleton >= 0) {
            out.equal(graph_of(p.spec, GraphSide::skeleton).diameter, p.skeleton, name + "skeleton diameter");
            out.equal(graph_of(p.spec, GraphSide::ridge).diameter, p.ridge, name + "ridge diameter");
        }
    }

    ReportOptions rays_only;
    rays_only.rays_only = true;
    rays_only.threads = threads;
    auto omcut = make_report(ConeSpec::omcut(5), rays_only);
    out.equal(omcut.rays.count, std::size_t{540}, "OMCUT_5 rays");
    out.equal(omcut.rays.orbits.size(), std::size_t{9}, "OMCUT_5 ray orbits");

    auto hcut = ConeSpec::hcut(3, 6);
    AdmOptions adm;
    adm.threads = threads;
    auto res = adjacency_decomposition(build_generators(hcut), group_for(hcut), adm);
    out.equal(res.total(), std::size_t{4065}, "HCUT^3_6 facets by decomposition");
    out.equal(res.orbits.size(), std::size_t{16}, "HCUT^3_6 facet orbits by decomposition");
    return out;
}

void check_matrix(Outcome& out, const std::string& name, const FaceGraph& g, const CoordPermGroup& group,
                  const std::vector<RatVector>& reps, const std::vector<std::vector<std::size_t>>& matrix)
{
    std::vector<std::size_t> idx;
    for (const auto& r : reps) idx.push_back(g.orbit_index(r, group));
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (idx[i] >= g.orbits.size()) {
            out.expect(false, name + " orbit " + std::to_string(i + 1) + " not found");
            return;
        }
    }
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (std::size_t j = 0; j < reps.size(); ++j) {
            out.equal(g.representation_matrix[idx[i]][idx[j]], matrix[i][j],
                      name + " entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
    }
}

Outcome orbit_tables()
{
    Outcome out;
    auto smet = ConeSpec::smet(2, Rat(2), 5);
    auto skeleton = graph_of(smet, GraphSide::skeleton);
    std::vector<RatVector> reps = {
        ints({0, 0, 1, 0, 1, 1, 0, 1, 1, 1}), ints({0, 2, 2, 2, 2, 1, 2, 2, 1, 1}),
        ints({0, 1, 1, 1, 1, 0, 1, 1, 1, 1}), ints({1, 1, 2, 2, 1, 2, 2, 2, 1, 1}),
        ints({1, 2, 4, 3, 3, 2, 3, 4, 4, 1}), ints({0, 4, 4, 4, 4, 2, 4, 4, 2, 5}),
    };
    check_matrix(out, "SMET^{2,2}_5 skeleton", skeleton, group_for(smet), reps,
                 {{4, 10, 12, 12, 36, 18},
                  {5, 0, 3, 6, 12, 6},
                  {4, 2, 2, 4, 12, 4},
                  {5, 5, 5, 0, 5, 5},
                  {3, 2, 3, 1, 2, 2},
                  {3, 2, 2, 2, 4, 0}});
    const std::vector<std::size_t> sizes = {5, 10, 15, 12, 60, 30};
    for (std::size_t i = 0; i < reps.size(); ++i) {
        auto at = skeleton.orbit_index(reps[i], group_for(smet));
        if (at < skeleton.orbits.size())
            out.equal(skeleton.orbits[at].size, sizes[i], "SMET^{2,2}_5 orbit " + std::to_string(i + 1) + " size");
    }

    auto scut = ConeSpec::scut(3, Rat(3), 6);
    check_matrix(out, "SCUT^{3,3}_6 ridge", graph_of(scut, GraphSide::ridge), group_for(scut),
                 {ints({-1, -1, 0, -1, 0, 0, 0, 1, 1, 1, 0, 1, 1, 1, -2}),
                  ints({-3, 0, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0}),
                  ints({-1, -1, 1, -1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1})},
                 {{12, 7, 6}, {14, 5, 6}, {6, 3, 5}});

    auto hcut = ConeSpec::hcut(3, 6);
    auto ridge = graph_of(hcut, GraphSide::ridge);
    auto at = ridge.orbit_index(ints({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}), group_for(hcut));
    out.expect(at < ridge.orbits.size(), "HCUT^3_6 F1 not found");
    if (at < ridge.orbits.size()) {
        out.equal(ridge.orbits[at].size, std::size_t{15}, "HCUT^3_6 F1 size");
        out.equal(ridge.orbits[at].adjacency, std::size_t{1526}, "HCUT^3_6 F1 adjacency");
        out.equal(ridge.orbits[at].incidence, std::size_t{49}, "HCUT^3_6 F1 incidence");
    }
    return out;
}

Outcome closed_forms()
{
    Outcome out;
    for (int m = 2; m <= 6; ++m) {
        for (int s = 1; s <= m - 1; ++s) {
            auto spec = ConeSpec::smet(m, Rat(s), m + 2);
            const auto name = spec.name() + " ";
            auto orbits = ray_orbits(spec);
            out.equal(orbits.orbits.size(), std::size_t{1}, name + "ray orbits");
            out.equal(orbits.total(), binomial(m + 2, s + 1), name + "rays");

            auto skeleton = graph_of(spec, GraphSide::skeleton);
            std::vector<std::vector<std::size_t>> ones(skeleton.nodes.size());
            bool zero_one = true;
            for (std::size_t i = 0; i < skeleton.nodes.size(); ++i) {
                for (std::size_t c = 0; c < skeleton.nodes[i].size(); ++c) {
                    const auto& x = skeleton.nodes[i][c];
                    if (x == Rat(1)) ones[i].push_back(c);
                    else if (!x.is_zero()) zero_one = false;
                }
                zero_one = zero_one && ones[i].size() == static_cast<std::size_t>(s + 1);
            }
            out.expect(zero_one, name + "rays are not the (s+1)-subsets");
            if (!zero_one) continue;
            std::size_t wrong = 0;
            for (std::size_t a = 0; a < ones.size(); ++a) {
                for (std::size_t b = a + 1; b < ones.size(); ++b) {
                    std::vector<std::size_t> common;
                    std::set_intersection(ones[a].begin(), ones[a].end(), ones[b].begin(), ones[b].end(),
                                          std::back_inserter(common));
                    wrong += (common.size() == static_cast<std::size_t>(s)) != skeleton.adjacent(a, b);
                }
            }
            out.equal(wrong, std::size_t{0}, name + "pairs differing from the Johnson graph");
            out.equal(skeleton.diameter, std::min(s + 1, m - s + 1), name + "skeleton diameter");
        }
    }
    for (int m = 1; m <= 6; ++m) {
        auto edge = build_h(ConeSpec::smet(m, Rat(m + 1), m + 2));
        auto rays = dual_description(edge);
        out.expect(rays.size() == 1 && rays.rows[0] == RatVector(edge.dim(), Rat(1)),
                   "s = m+1 is not the all-ones half-line for m = " + std::to_string(m));
        auto beyond = dual_description(build_h(ConeSpec::smet(m, Rat(2 * m + 3, 2), m + 2)));
        out.equal(beyond.size(), std::size_t{0}, "rays at s = m+3/2 for m = " + std::to_string(m));
    }
    return out;
}

Outcome rational_s()
{
    Outcome out;
    struct Row {
        ConeSpec spec;
        std::size_t rays, orbits;
    };
    for (const auto& r : {Row{ConeSpec::smet(1, Rat(1, 2), 4), 54, 5}, Row{ConeSpec::smet(1, Rat(1, 2), 5), 2900, 35},
                          Row{ConeSpec::smet(1, Rat(3, 2), 4), 25, 4}, Row{ConeSpec::smet(1, Rat(3, 2), 5), 1235, 24}}) {
        auto orbits = ray_orbits(r.spec);
        out.equal(orbits.total(), r.rays, r.spec.name() + " rays");
        out.equal(orbits.orbits.size(), r.orbits, r.spec.name() + " ray orbits");
    }
    return out;
}

Outcome zero_one_statistics()
{
    Outcome out;
    struct Row {
        ConeSpec spec;
        ZeroOneStats stats;
    };
    for (const auto& r : {Row{ConeSpec::hmet(2, 5), {3, 5}}, Row{ConeSpec::smet(2, Rat(2), 5), {2, 0}},
                          Row{ConeSpec::hmet(3, 6), {4, 8}}, Row{ConeSpec::smet(3, Rat(2), 6), {5, 3}},
                          Row{ConeSpec::smet(3, Rat(3), 6), {2, 0}}, Row{ConeSpec::hmet(2, 6), {6, 9}}}) {
        auto got = zero_one_ray_stats(ray_orbits(r.spec));
        out.equal(got.zero_one_orbits, r.stats.zero_one_orbits, r.spec.name() + " 0/1 orbits");
        out.equal(got.min_zero_count, r.stats.min_zero_count, r.spec.name() + " fewest zeros");
    }
    return out;
}

Outcome decomposition_equals_conversion()
{
    Outcome out;
    for (const auto& spec : {ConeSpec::cut(5), ConeSpec::cut(6), ConeSpec::omcut(4), ConeSpec::scut(2, Rat(2), 5),
                             ConeSpec::hcut(2, 5), ConeSpec::scut(3, Rat(3), 6)}) {
        auto group = group_for(spec);
        auto gens = spec.family == Family::SCUT ? cone(spec).rays : build_generators(spec);
        for (unsigned depth : {1u, 2u}) {
            AdmOptions opt;
            opt.threads = threads;
            opt.recursion_depth = depth;
            auto adm = adjacency_decomposition(gens, group, opt).orbit_set();
            auto dd = orbit_decompose(cone(spec).facets.rows, group, threads);
            bool same = adm.orbits.size() == dd.orbits.size();
            for (std::size_t i = 0; same && i < dd.orbits.size(); ++i) {
                same = adm.orbits[i].representative == dd.orbits[i].representative && adm.orbits[i].size == dd.orbits[i].size;
            }
            out.expect(same, spec.name() + " differs at depth " + std::to_string(depth));
        }
    }
    return out;
}

Outcome lp_adjacency()
{
    Outcome out;
    for (const auto& spec : {ConeSpec::met(5), ConeSpec::qmet(4), ConeSpec::hmet(2, 5), ConeSpec::smet(2, Rat(2), 5)}) {
        const auto& facets = cone(spec).facets;
        auto ridge = graph_of(spec, GraphSide::ridge);
        std::size_t wrong = 0;
        for (std::size_t a = 0; a < ridge.nodes.size(); ++a) {
            for (std::size_t b = a + 1; b < ridge.nodes.size(); ++b) {
                bool lp = facets_adjacent_lp(facets, row_index(facets, ridge.nodes[a]), row_index(facets, ridge.nodes[b]));
                wrong += lp != ridge.adjacent(a, b);
            }
        }
        out.equal(wrong, std::size_t{0}, spec.name() + " pairs where LP and rank disagree");
    }

    using Kind = RowTag::Kind;
    auto non_adjacent = [&](const ConeSpec& spec, const RowTag& t1, const RowTag& t2, const std::string& label) {
        const auto& h = cone(spec).facets;
        auto i = std::find(h.tags.begin(), h.tags.end(), t1) - h.tags.begin();
        auto j = std::find(h.tags.begin(), h.tags.end(), t2) - h.tags.begin();
        if (i == static_cast<long>(h.size()) || j == static_cast<long>(h.size())) {
            out.expect(false, spec.name() + " " + label + ": rows missing");
            return;
        }
        out.expect(!facets_adjacent_lp(h, static_cast<std::size_t>(i), static_cast<std::size_t>(j)),
                   spec.name() + " " + label + " reported adjacent");
    };
    for (const auto& spec : {ConeSpec::hmet(2, 5), ConeSpec::smet(2, Rat(1, 2), 5), ConeSpec::smet(2, Rat(3, 2), 5)}) {
        non_adjacent(spec, {Kind::nn, {2, 3, 4}, 0, {}}, {Kind::simplex, {1, 2, 3, 4}, 1, {}}, "case (i)");
    }
    non_adjacent(ConeSpec::hmet(2, 5), {Kind::simplex, {1, 2, 3, 4}, 1, {}}, {Kind::simplex, {1, 2, 3, 4}, 3, {}},
                 "case (ii)");
    for (const auto& spec : {ConeSpec::hmet(2, 5), ConeSpec::smet(2, Rat(3, 2), 5)}) {
        non_adjacent(spec, {Kind::nn, {1, 2, 3}, 0, {}}, {Kind::nn, {1, 2, 4}, 0, {}}, "case (iii)");
    }
    return out;
}

Outcome lifting()
{
    Outcome out;
    auto smet = ConeSpec::smet(2, Rat(2), 5);
    auto bigger_smet = build_h(ConeSpec::smet(3, Rat(2), 6));
    std::size_t extreme = 0;
    for (const auto& r : cone(smet).rays.rows) extreme += is_extreme_ray(bigger_smet, zero_extension(r, smet));
    out.equal(cone(smet).rays.size(), std::size_t{132}, "SMET^{2,2}_5 rays");
    out.equal(extreme, cone(smet).rays.size(), "zero-extensions extreme in SMET^{3,2}_6");

    auto hmet = ConeSpec::hmet(2, 5);
    auto bigger_hmet = build_h(ConeSpec::hmet(2, 6));
    extreme = 0;
    for (const auto& r : cone(hmet).rays.rows) extreme += is_extreme_ray(bigger_hmet, vertex_splitting(r, hmet));
    out.equal(cone(hmet).rays.size(), std::size_t{37}, "HMET^2_5 rays");
    out.equal(extreme, cone(hmet).rays.size(), "vertex-splittings extreme in HMET^2_6");
    return out;
}

Outcome h_classes()
{
    Outcome out;
    struct Row {
        ConeSpec spec;
        std::set<std::string> classes;
    };
    for (const auto& r : {Row{ConeSpec::smet(2, Rat(2), 5), {"K4", "K_{2,2,1}"}},
                          Row{ConeSpec::smet(3, Rat(3), 6), {"K5", "K_{2,2,2}"}},
                          Row{ConeSpec::hmet(3, 6), {"C3", "C4", "C5", "C6"}}}) {
        std::multiset<std::string> found;
        for (const auto& o : ray_orbits(r.spec).orbits) {
            const auto& v = o.representative;
            if (!std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.is_zero() || x == Rat(1); })) continue;
            auto names = classify_graph(representation_graph_H(v, r.spec).graph).all_names;
            std::vector<std::string> hits;
            for (const auto& n : names) {
                if (r.classes.count(n)) hits.push_back(n);
            }
            if (hits.size() == 1) found.insert(hits[0]);
            else found.insert("unclassified(" + (names.empty() ? std::string("?") : names.front()) + ")");
        }
        out.expect(std::set<std::string>(found.begin(), found.end()) == r.classes && found.size() == r.classes.size(),
                   r.spec.name() + " classes differ");
    }
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact acceptance checks, one line per criterion"};
    std::vector<int> only;
    app.add_option("--criterion", only, "run only these criteria (1-10)")->check(CLI::Range(1, 10));
    app.add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"core table regression", core_regression},
        {"extended table regression", extended_regression},
        {"published orbit tables", orbit_tables},
        {"closed forms for SMET^{m,s}_{m+2} and collapse", closed_forms},
        {"rational s ray counts", rational_s},
        {"0/1 ray statistics", zero_one_statistics},
        {"decomposition equals conversion", decomposition_equals_conversion},
        {"LP adjacency equals rank adjacency", lp_adjacency},
        {"lifted rays stay extreme", lifting},
        {"H_v classes of 0/1 rays", h_classes},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int number = static_cast<int>(i + 1);
        if (!only.empty() && std::find(only.begin(), only.end(), number) == only.end()) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out.expect(false, std::string("error: ") + e.what());
        }
        const auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (out.pass ? "PASS" : "FAIL") << ' ' << number << ' ' << criteria[i].first;
        std::cout << " (" << std::fixed << std::setprecision(1) << seconds << " s)";
        for (const auto& f : out.failures) std::cout << "; " << f;
        std::cout << std::endl;
        failed += !out.pass;
    }
    std::cout << failed << " criteria failed" << std::endl;
    return failed == 0 ? 0 : 1;
}

#include "polycone/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include <json.hpp>

#include "polycone/adm.hpp"
#include "polycone/facegraph.hpp"
#include "polycone/pipeline.hpp"
#include "polycone/symmetry.hpp"

namespace polycone {

namespace {

void fill_from_graph(SideSummary& side, const FaceGraph& g)
{
    side.orbits.clear();
    for (const auto& o : g.orbits) side.orbits.push_back({o.representative, o.size, o.incidence, o.adjacency});
    side.representation_matrix = g.representation_matrix;
}

void fill_from_orbits(SideSummary& side, const std::vector<RatVector>& rows, const Representation& other,
                      const CoordPermGroup& group, unsigned threads)
{
    side.orbits.clear();
    for (const auto& o : orbit_decompose(rows, group, threads).orbits) {
        side.orbits.push_back({o.representative, o.size, incidence_number(o.representative, other), std::nullopt});
    }
}

std::vector<RatVector> expand_orbits(const AdmResult& res, const CoordPermGroup& group)
{
    std::vector<RatVector> all;
    for (const auto& o : res.orbits) {
        auto members = orbit_of(o.representative, group);
        all.insert(all.end(), members.begin(), members.end());
    }
    std::sort(all.begin(), all.end());
    return all;
}

void rays_by_lp(Report& r, const ConeSpec& spec, const CoordPermGroup& group, unsigned threads)
{
    auto gens = build_generators(spec);
    r.rays.orbits.clear();
    r.rays.count = 0;
    for (const auto& o : orbit_decompose(gens.rows, group, threads).orbits) {
        auto at = static_cast<std::size_t>(std::find(gens.rows.begin(), gens.rows.end(), o.representative) - gens.rows.begin());
        if (!generator_is_extreme(gens, at)) continue;
        r.rays.orbits.push_back({o.representative, o.size, std::nullopt, std::nullopt});
        r.rays.count += o.size;
    }
    r.rays.computed = true;
    r.notes.push_back("rays by linear programming, facets not computed");
}

void compare(Report& r, const char* what, const ExpectedField& expected, std::optional<std::uint64_t> computed)
{
    if (!expected.value) return;
    if (!computed) {
        if (expected.checkable()) r.notes.push_back(std::string(what) + " not computed");
        return;
    }
    const auto want = *expected.value;
    switch (expected.status) {
        case FieldStatus::exact:
            if (*computed != want) {
                r.mismatches.push_back(std::string(what) + ": expected " + std::to_string(want) + ", computed " +
                                       std::to_string(*computed));
            }
            break;
        case FieldStatus::conjectured:
            r.notes.push_back(std::string(what) + ": published value " + std::to_string(want) +
                              " is conjectured, computed " + std::to_string(*computed));
            break;
        case FieldStatus::lower_bound:
            r.notes.push_back(std::string(what) + ": published lower bound " + std::to_string(want) + ", computed " +
                              std::to_string(*computed) + (*computed >= want ? "" : " (below the bound)"));
            break;
        case FieldStatus::unknown: break;
    }
}

nlohmann::json side_json(const SideSummary& side)
{
    nlohmann::json j;
    j["count"] = side.computed ? nlohmann::json(side.count) : nlohmann::json(nullptr);
    j["orbits"] = nlohmann::json::array();
    for (const auto& o : side.orbits) {
        nlohmann::json rep = nlohmann::json::array();
        for (const auto& x : o.representative) rep.push_back(x.str());
        j["orbits"].push_back({{"rep", rep},
                               {"size", o.size},
                               {"incidence", o.incidence ? nlohmann::json(*o.incidence) : nlohmann::json(nullptr)},
                               {"adjacency", o.adjacency ? nlohmann::json(*o.adjacency) : nlohmann::json(nullptr)}});
    }
    return j;
}

void side_text(std::ostringstream& out, const char* title, const char* prefix, const SideSummary& side,
               const IndexScheme& scheme, bool complement_labels)
{
    out << title << ": " << side.count << " in " << side.orbits.size() << " orbits\n";
    out << "    ";
    for (std::size_t i = 0; i < scheme.size(); ++i) out << ' ' << scheme.label(i, complement_labels);
    out << " | Adj. Size Inc.\n";
    for (std::size_t o = 0; o < side.orbits.size(); ++o) {
        const auto& row = side.orbits[o];
        out << prefix << (o + 1);
        for (const auto& x : row.representative) out << ' ' << x;
        out << " | " << (row.adjacency ? std::to_string(*row.adjacency) : "-") << ' ' << row.size << ' '
            << (row.incidence ? std::to_string(*row.incidence) : "-") << '\n';
    }
    if (!side.representation_matrix.empty()) {
        out << "representation matrix\n";
        for (std::size_t i = 0; i < side.representation_matrix.size(); ++i) {
            out << prefix << (i + 1);
            for (auto x : side.representation_matrix[i]) out << ' ' << x;
            out << '\n';
        }
    }
}

}  // namespace

void judge(Report& r, const ExpectedRecord* record)
{
    r.mismatches.clear();
    if (!r.complete) {
        r.verdict = "incomplete";
        return;
    }
    if (!record) {
        r.verdict = "no-record";
        return;
    }
    auto count = [](const SideSummary& s) -> std::optional<std::uint64_t> {
        if (!s.computed) return std::nullopt;
        return s.count;
    };
    auto orbits = [](const SideSummary& s) -> std::optional<std::uint64_t> {
        if (!s.computed) return std::nullopt;
        return s.orbits.size();
    };
    auto diam = [](const std::optional<int>& d) -> std::optional<std::uint64_t> {
        if (!d || *d < 0) return std::nullopt;
        return static_cast<std::uint64_t>(*d);
    };
    if (record->dim != r.dim) {
        r.mismatches.push_back("dimension: expected " + std::to_string(record->dim) + ", computed " +
                               std::to_string(r.dim));
    }
    compare(r, "rays", record->ray_count, count(r.rays));
    compare(r, "ray orbits", record->ray_orbits, orbits(r.rays));
    compare(r, "facets", record->facet_count, count(r.facets));
    compare(r, "facet orbits", record->facet_orbits, orbits(r.facets));
    compare(r, "skeleton diameter", record->skeleton_diameter, diam(r.skeleton_diameter));
    compare(r, "ridge diameter", record->ridge_diameter, diam(r.ridge_diameter));
    r.verdict = r.mismatches.empty() ? "pass" : "fail";
}

Report make_report(const ConeSpec& spec, const ReportOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    spec.validate(false);
    Report r;
    r.spec = spec;
    r.dim = index_scheme(spec).size();
    const ExpectedRecord* record = find_record(spec);
    auto group = group_for(spec);
    DDOptions dd;
    dd.max_rays = options.max_rays;

    bool rays_only = options.rays_only || (record && record->rays_only && !options.adm);
    if (rays_only && !spec.is_h_family()) {
        if (spec.family == Family::SCUT) throw InputError("rays_only needs generators that do not depend on a conversion");
        rays_by_lp(r, spec, group, options.threads);
        judge(r, record);
        r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return r;
    }
    try {
        Representation facets, rays;
        bool use_adm = !spec.is_h_family() && (options.adm || (record && record->facets_by_adm));
        if (use_adm) {
            Representation gens;
            if (spec.family == Family::SCUT) {
                auto smet = dual_description(redundancy_filter(build_h(spec.h_partner())), dd);
                gens = build_generators(spec, &smet);
            } else {
                gens = build_generators(spec);
            }
            AdmOptions adm;
            adm.threads = options.threads;
            adm.dd = dd;
            auto res = adjacency_decomposition(gens, group, adm);
            facets.scheme = gens.scheme;
            facets.kind = RepKind::H;
            facets.rows = expand_orbits(res, group);
            rays = extreme_generators(gens, facets);
            r.notes.push_back("facets by adjacency decomposition");
        } else {
            auto data = compute_cone(spec, dd);
            facets = std::move(data.facets);
            rays = std::move(data.rays);
        }
        r.rays.computed = r.facets.computed = true;
        r.rays.count = rays.size();
        r.facets.count = facets.size();

        if (options.graphs) {
            FaceGraphOptions fg;
            fg.threads = options.threads;
            auto skeleton = build_face_graph(facets, rays, group, GraphSide::skeleton, fg);
            fill_from_graph(r.rays, skeleton);
            r.skeleton_diameter = skeleton.diameter;
            auto ridge = build_face_graph(facets, rays, group, GraphSide::ridge, fg);
            fill_from_graph(r.facets, ridge);
            r.ridge_diameter = ridge.diameter;
        } else {
            fill_from_orbits(r.rays, rays.rows, facets, group, options.threads);
            fill_from_orbits(r.facets, facets.rows, rays, group, options.threads);
        }
    } catch (const ResourceLimit& e) {
        r.complete = false;
        r.notes.push_back(e.what());
    }
    judge(r, record);
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::string report_json(const Report& r, bool with_timing)
{
    nlohmann::json j;
    j["spec"] = {{"family", to_string(r.spec.family)},
                 {"n", r.spec.n},
                 {"m", r.spec.m},
                 {"s", r.spec.s.str()},
                 {"name", r.spec.name()}};
    j["dim"] = r.dim;
    j["rays"] = side_json(r.rays);
    j["facets"] = side_json(r.facets);
    auto diam = [](const std::optional<int>& d) { return d ? nlohmann::json(*d) : nlohmann::json(nullptr); };
    j["diameters"] = {{"skeleton", diam(r.skeleton_diameter)}, {"ridge", diam(r.ridge_diameter)}};
    j["verdict"] = r.verdict;
    j["mismatches"] = r.mismatches;
    j["notes"] = r.notes;
    j["elapsed_ms"] = with_timing ? nlohmann::json(static_cast<std::int64_t>(r.elapsed_ms)) : nlohmann::json(nullptr);
    return j.dump(2);
}

std::string report_text(const Report& r, bool complement_labels)
{
    std::ostringstream out;
    auto scheme = index_scheme(r.spec);
    out << r.spec.name() << "  dim " << r.dim << '\n';
    if (r.rays.computed) side_text(out, "extreme rays", "E", r.rays, scheme, complement_labels);
    if (r.facets.computed) side_text(out, "facets", "F", r.facets, scheme, complement_labels);
    auto diam = [](const std::optional<int>& d) { return d ? std::to_string(*d) : std::string("?"); };
    out << "diameters " << diam(r.skeleton_diameter) << "; " << diam(r.ridge_diameter) << '\n';
    for (const auto& n : r.notes) out << "note: " << n << '\n';
    for (const auto& m : r.mismatches) out << "mismatch: " << m << '\n';
    out << "verdict: " << r.verdict << '\n';
    return out.str();
}

}  // namespace polycone

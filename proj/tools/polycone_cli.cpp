#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "polycone/adm.hpp"
#include "polycone/facegraph.hpp"
#include "polycone/io.hpp"
#include "polycone/pipeline.hpp"
#include "polycone/records.hpp"
#include "polycone/report.hpp"
#include "polycone/smallgraph.hpp"
#include "polycone/symmetry.hpp"

using namespace polycone;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kInputError = 2;
constexpr int kResourceGuard = 3;

struct SpecFlags {
    std::string family;
    int n = 0;
    int m = 1;
    std::string s = "1";

    void add_to(CLI::App* cmd)
    {
        cmd->add_option("--family", family, "met, cut, qmet, omcut, hmet, hcut, smet or scut")->required();
        cmd->add_option("--n", n, "number of points")->required();
        cmd->add_option("--m", m, "arity parameter m");
        cmd->add_option("--s", s, "super-metric coefficient as an integer or p/q");
    }

    [[nodiscard]] ConeSpec spec() const
    {
        ConeSpec c{parse_family(family), n, m, Rat::parse(s)};
        c.validate(false);
        if ((c.family == Family::SMET || c.family == Family::SCUT) && c.s > Rat(c.m + 1)) {
            throw InputError(c.name() + ": s > m+1, the cone is {0}");
        }
        return c;
    }
};

void emit(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

std::string read_text(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RatVector parse_vector(const std::string& text)
{
    std::istringstream in(text);
    RatVector v;
    std::string tok;
    while (in >> tok) v.push_back(Rat::parse(tok));
    if (v.empty()) throw InputError("empty vector");
    return v;
}

int verdict_code(const Report& r)
{
    if (r.verdict == "incomplete") return kResourceGuard;
    if (r.verdict == "fail") return kVerificationFailure;
    return kOk;
}

std::string field_cell(const ExpectedField& f, std::optional<std::uint64_t> computed)
{
    std::string want = f.value ? std::to_string(*f.value) : "?";
    if (f.status == FieldStatus::conjectured) want += "c";
    if (f.status == FieldStatus::lower_bound) want = ">=" + want;
    std::string got = computed ? std::to_string(*computed) : "-";
    return want + "/" + got;
}

int run_regress(Tier tier, unsigned threads)
{
    int failures = 0;
    std::cout << "cone | rays | ray orbits | facets | facet orbits | skeleton | ridge | verdict   (expected/computed)\n";
    for (const auto& rec : table_records()) {
        if (rec.tier != tier) continue;
        ReportOptions opt;
        opt.threads = threads;
        bool graphs = rec.skeleton_diameter.value || rec.ridge_diameter.value;
        opt.graphs = graphs;
        auto r = make_report(rec.spec, opt);
        auto count = [](const SideSummary& s) -> std::optional<std::uint64_t> {
            return s.computed ? std::optional<std::uint64_t>(s.count) : std::nullopt;
        };
        auto orbits = [](const SideSummary& s) -> std::optional<std::uint64_t> {
            return s.computed ? std::optional<std::uint64_t>(s.orbits.size()) : std::nullopt;
        };
        auto diam = [](const std::optional<int>& d) -> std::optional<std::uint64_t> {
            return d && *d >= 0 ? std::optional<std::uint64_t>(*d) : std::nullopt;
        };
        std::cout << rec.spec.name() << " | " << field_cell(rec.ray_count, count(r.rays)) << " | "
                  << field_cell(rec.ray_orbits, orbits(r.rays)) << " | " << field_cell(rec.facet_count, count(r.facets))
                  << " | " << field_cell(rec.facet_orbits, orbits(r.facets)) << " | "
                  << field_cell(rec.skeleton_diameter, diam(r.skeleton_diameter)) << " | "
                  << field_cell(rec.ridge_diameter, diam(r.ridge_diameter)) << " | " << r.verdict << " ("
                  << static_cast<long>(r.elapsed_ms) << " ms)\n";
        for (const auto& m : r.mismatches) std::cout << "    mismatch: " << m << '\n';
        if (r.verdict != "pass") ++failures;
    }
    std::cout << (failures == 0 ? "all records pass\n" : std::to_string(failures) + " record(s) failed\n");
    return failures == 0 ? kOk : kVerificationFailure;
}

void print_graph(const LabeledGraph& lg, bool with_values)
{
    const auto& g = lg.graph;
    std::cout << "vertices " << g.vertex_count() << " edges " << g.edge_count() << '\n';
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        std::cout << "  " << lg.vertex_names[v];
        if (with_values) std::cout << " = " << lg.values[v];
        std::cout << ':';
        for (std::size_t w = 0; w < g.vertex_count(); ++w) {
            if (g.has_edge(v, w)) std::cout << ' ' << lg.vertex_names[w];
        }
        std::cout << '\n';
    }
    auto c = classify_graph(g);
    std::cout << "class " << (c.known() ? c.name : "unknown");
    if (c.all_names.size() > 1) {
        std::cout << " (also";
        for (std::size_t i = 1; i < c.all_names.size(); ++i) std::cout << ' ' << c.all_names[i];
        std::cout << ')';
    }
    std::cout << "\ncertificate " << c.certificate << '\n';
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact enumeration and analysis of metric, hemi-metric and super-metric cones"};
    app.require_subcommand(1);
    unsigned threads = 1;
    app.add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));

    SpecFlags build_flags;
    std::string build_rep = "h";
    std::string build_out;
    auto* build = app.add_subcommand("build", "write the H- or V-representation of a cone");
    build_flags.add_to(build);
    build->add_option("--rep", build_rep, "h: facets, v: extreme rays")->check(CLI::IsMember({"h", "v"}));
    build->add_option("-o,--output", build_out, "output file (default stdout)");

    std::string convert_in, convert_out;
    bool convert_adm = false;
    unsigned convert_depth = 1;
    std::size_t convert_max_rays = 0;
    std::string convert_checkpoint;
    auto* convert = app.add_subcommand("convert", "compute the dual description of a representation file");
    convert->add_option("input", convert_in, "input file")->required();
    convert->add_option("-o,--output", convert_out, "output file (default stdout)");
    convert->add_flag("--adm", convert_adm, "facet orbits by adjacency decomposition (V input)");
    convert->add_option("--depth", convert_depth, "adjacency decomposition recursion depth")->check(CLI::Range(1u, 8u));
    convert->add_option("--max-rays", convert_max_rays, "abort when a conversion exceeds this many rays");
    convert->add_option("--checkpoint", convert_checkpoint, "checkpoint file for adjacency decomposition");

    std::string orbits_in;
    std::string orbits_labels = "plain";
    auto* orbits = app.add_subcommand("orbits", "split the rows of a representation file into orbits");
    orbits->add_option("input", orbits_in, "input file")->required();
    orbits->add_option("--labels", orbits_labels, "plain or complement")->check(CLI::IsMember({"plain", "complement"}));

    SpecFlags report_flags;
    std::string report_json_path;
    std::string report_labels = "plain";
    std::size_t report_max_rays = 0;
    bool report_no_graphs = false;
    bool report_adm = false;
    bool report_rays_only = false;
    auto* report = app.add_subcommand("report", "full analysis of one cone, compared with the published table");
    report_flags.add_to(report);
    report->add_option("--json", report_json_path, "write the JSON report here ('-' for stdout)");
    report->add_option("--labels", report_labels, "plain or complement")->check(CLI::IsMember({"plain", "complement"}));
    report->add_option("--max-rays", report_max_rays, "stop conversions above this many rays");
    report->add_flag("--no-graphs", report_no_graphs, "skip skeleton and ridge graphs");
    report->add_flag("--adm", report_adm, "facets of generator families by adjacency decomposition");
    report->add_flag("--rays-only", report_rays_only, "generator families: extreme generators by LP, no facets");

    std::string regress_tier = "core";
    auto* regress = app.add_subcommand("regress", "run the published-table regression suite");
    regress->add_option("--tier", regress_tier, "core or extended")->check(CLI::IsMember({"core", "extended"}));

    SpecFlags graph_flags;
    std::string graph_vector, graph_input, graph_kind = "g";
    auto* graph = app.add_subcommand("graph", "representation graph of a vector, with classification");
    graph_flags.add_to(graph);
    graph->add_option("--kind", graph_kind, "g: support graph, h: point graph (n = m+3, 0/1 vectors)")
        ->check(CLI::IsMember({"g", "h"}));
    auto* vec_opt = graph->add_option("--vector", graph_vector, "entries separated by spaces");
    auto* in_opt = graph->add_option("--input", graph_input, "classify every row of a representation file");
    vec_opt->excludes(in_opt);

    std::string adj_in;
    std::size_t adj_f1 = 0, adj_f2 = 0;
    auto* adjacency = app.add_subcommand("adjacency", "test adjacency of two facets by linear programming");
    adjacency->add_option("input", adj_in, "H-representation file")->required();
    adjacency->add_option("--f1", adj_f1, "first facet row (1-based)")->required();
    adjacency->add_option("--f2", adj_f2, "second facet row (1-based)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*build) {
            auto spec = build_flags.spec();
            auto data = compute_cone(spec);
            emit(build_out, write_representation(build_rep == "h" ? data.facets : data.rays));
            return kOk;
        }
        if (*convert) {
            auto rep = parse_representation(read_text(convert_in));
            if (convert_adm) {
                if (rep.kind != RepKind::V) throw InputError("--adm needs a V-representation");
                AdmOptions opt;
                opt.threads = threads;
                opt.recursion_depth = convert_depth;
                opt.checkpoint = convert_checkpoint;
                opt.dd.max_rays = convert_max_rays;
                auto group = point_group(rep.scheme);
                auto res = adjacency_decomposition(rep, group, opt);
                Representation out;
                out.scheme = rep.scheme;
                out.kind = RepKind::H;
                std::ostringstream head;
                head << "* " << res.total() << " facets in " << res.orbits.size() << " orbits\n";
                for (std::size_t i = 0; i < res.orbits.size(); ++i) {
                    const auto& o = res.orbits[i];
                    head << "* orbit " << (i + 1) << " size " << o.size << " incidence " << o.incidence
                         << " adjacency " << o.adjacency << '\n';
                    out.rows.push_back(o.representative);
                }
                emit(convert_out, head.str() + write_representation(out));
                std::cerr << res.total() << " facets in " << res.orbits.size() << " orbits\n";
                return kOk;
            }
            DDOptions dd;
            dd.max_rays = convert_max_rays;
            emit(convert_out, write_representation(dual_description(rep, dd)));
            return kOk;
        }
        if (*orbits) {
            auto rep = parse_representation(read_text(orbits_in));
            auto set = orbit_decompose(rep.rows, point_group(rep.scheme), threads);
            std::cout << rep.size() << " rows in " << set.orbits.size() << " orbits\n";
            std::cout << "orbit";
            for (std::size_t i = 0; i < rep.dim(); ++i) std::cout << ' ' << rep.scheme.label(i, orbits_labels == "complement");
            std::cout << " | size\n";
            for (std::size_t i = 0; i < set.orbits.size(); ++i) {
                std::cout << 'O' << (i + 1);
                for (const auto& x : set.orbits[i].representative) std::cout << ' ' << x;
                std::cout << " | " << set.orbits[i].size << '\n';
            }
            return kOk;
        }
        if (*report) {
            ReportOptions opt;
            opt.threads = threads;
            opt.max_rays = report_max_rays;
            opt.graphs = !report_no_graphs;
            opt.adm = report_adm;
            opt.rays_only = report_rays_only;
            auto r = make_report(report_flags.spec(), opt);
            if (report_json_path == "-") {
                std::cout << report_json(r) << '\n';
            } else {
                std::cout << report_text(r, report_labels == "complement");
                if (!report_json_path.empty()) emit(report_json_path, report_json(r) + "\n");
            }
            return verdict_code(r);
        }
        if (*regress) return run_regress(parse_tier(regress_tier), threads);
        if (*graph) {
            auto spec = graph_flags.spec();
            auto make = [&](const RatVector& v) {
                return graph_kind == "g" ? representation_graph_G(v, spec) : representation_graph_H(v, spec);
            };
            if (!graph_vector.empty()) {
                print_graph(make(parse_vector(graph_vector)), graph_kind == "g");
                return kOk;
            }
            if (graph_input.empty()) throw InputError("graph: give --vector or --input");
            auto rep = parse_representation(read_text(graph_input), index_scheme(spec));
            std::map<std::string, std::size_t> tally;
            std::size_t skipped = 0;
            for (const auto& row : rep.rows) {
                bool zero_one = std::all_of(row.begin(), row.end(), [](const Rat& x) { return x.is_zero() || x == Rat(1); });
                if (graph_kind == "h" && !zero_one) {
                    ++skipped;
                    continue;
                }
                auto c = classify_graph(make(row).graph);
                ++tally[c.known() ? c.name : "unknown " + c.certificate];
            }
            for (const auto& [name, count] : tally) std::cout << name << ": " << count << '\n';
            if (skipped) std::cout << "skipped " << skipped << " rows that are not 0/1\n";
            return kOk;
        }
        if (*adjacency) {
            auto rep = parse_representation(read_text(adj_in));
            if (adj_f1 == 0 || adj_f2 == 0 || adj_f1 > rep.size() || adj_f2 > rep.size()) {
                throw InputError("facet rows must lie in 1.." + std::to_string(rep.size()));
            }
            auto dim = face_dimension_lp(rep, adj_f1 - 1, adj_f2 - 1);
            bool adj = dim + 2 == rep.dim();
            std::cout << "facets " << adj_f1 << " and " << adj_f2 << ": " << (adj ? "adjacent" : "not adjacent")
                      << " (common face dimension " << dim << " of " << rep.dim() << ")\n";
            return kOk;
        }
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kResourceGuard;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kOk;
}

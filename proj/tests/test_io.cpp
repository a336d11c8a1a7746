#include <filesystem>
#include <random>
#include <set>

#include <json.hpp>

#include "doctest.h"
#include "polycone/io.hpp"
#include "polycone/pipeline.hpp"
#include "polycone/records.hpp"
#include "polycone/report.hpp"

using namespace polycone;

namespace {

std::string error_of(std::string_view text)
{
    try {
        parse_representation(text);
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

const char* plain_orthant =
    "H-representation\n"
    "begin\n"
    "3 4 rational\n"
    "0 1 0 0\n"
    "0 0 1 0\n"
    "0 0 0 1\n"
    "end\n";

}  // namespace

TEST_CASE("written representations parse back unchanged")
{
    for (const auto& spec : {ConeSpec::met(5), ConeSpec::qmet(4), ConeSpec::hmet(2, 5), ConeSpec::smet(2, Rat(3, 2), 5)}) {
        auto h = build_h(spec);
        CHECK(parse_representation(write_representation(h)) == h);
        auto rays = compute_cone(spec).rays;
        CHECK(parse_representation(write_representation(rays)) == rays);
    }
    for (const auto& spec : {ConeSpec::cut(5), ConeSpec::omcut(4), ConeSpec::hcut(3, 6)}) {
        auto v = build_generators(spec);
        auto back = parse_representation(write_representation(v));
        CHECK(back == v);
        CHECK(back.kind == RepKind::V);
        CHECK(back.scheme == index_scheme(spec));
    }
}

TEST_CASE("files round trip through disk")
{
    auto path = (std::filesystem::temp_directory_path() / "polycone_io_test.ine").string();
    auto h = build_h(ConeSpec::met(4));
    write_representation_file(path, h);
    CHECK(read_representation_file(path) == h);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_representation_file(path), InputError);
}

TEST_CASE("plain cdd input")
{
    auto rep = parse_representation(plain_orthant);
    CHECK(rep.kind == RepKind::H);
    CHECK(rep.size() == 3);
    CHECK(rep.scheme == IndexScheme::subsets(3, 1));
    CHECK(rep.tags.empty());

    auto with_scheme = parse_representation(
        "V-representation\nbegin\n3 4 rational\n0 1 1 0\n0 1 0 1\n0 0 1 1\nend\n", IndexScheme::unordered_pairs(3));
    CHECK(with_scheme.kind == RepKind::V);
    CHECK(with_scheme.scheme == IndexScheme::unordered_pairs(3));

    SUBCASE("rows become primitive integer vectors")
    {
        auto scaled = parse_representation("H-representation\nbegin\n1 4 rational\n0 2/3 4/3 -2\nend\n");
        CHECK(scaled.rows[0] == RatVector{Rat(1), Rat(2), Rat(-3)});
        auto big = parse_representation("H-representation\nbegin\n1 3 integer\n0 6 -4\nend\n");
        CHECK(big.rows[0] == RatVector{Rat(3), Rat(-2)});
    }
    SUBCASE("comments and blank lines are ignored")
    {
        auto rep2 = parse_representation(std::string("* a comment\n\n") + plain_orthant + "\n* trailing\n");
        CHECK(rep2 == rep);
    }
}

TEST_CASE("malformed input reports the line")
{
    CHECK(error_of("") == "line 1: missing 'begin'");
    CHECK(error_of("begin\n1 3 rational\n0 1 0\nend\n").find("line 1") != std::string::npos);
    CHECK(error_of("H-representation\nbegin\n2 3 rational\n0 1 0\nend\n").find("line 5") != std::string::npos);
    CHECK(error_of("H-representation\nbegin\n1 3 rational\n0 1\nend\n").find("line 4") != std::string::npos);
    CHECK(error_of("H-representation\nbegin\n1 3 rational\n1 1 0\nend\n").find("line 4") != std::string::npos);
    CHECK(error_of("H-representation\nbegin\n1 3 rational\n0 0 0\nend\n").find("line 4") != std::string::npos);
    CHECK(error_of("H-representation\nbegin\n2 3 rational\n0 1 0\n0 2 0\nend\n").find("line 5") != std::string::npos);
    CHECK(error_of("H-representation\nbegin\n1 3 rational\n0 1 x\nend\n").find("line 4") != std::string::npos);
    CHECK(error_of("H-representation\nbegin\n1 3 rational\n0 1 0\n").find("end") != std::string::npos);
    CHECK(error_of("H-representation\nlinearity 1 1\nbegin\n1 3 rational\n0 1 0\nend\n").find("linearity") != std::string::npos);
    CHECK(error_of("* scheme unordered_pairs(4)\nH-representation\nbegin\n1 3 rational\n0 1 0\nend\n").find("scheme") !=
          std::string::npos);
    CHECK(error_of("* tag nn{1,2}\n* tag nn{1,3}\nH-representation\nbegin\n1 3 rational\n0 1 0\nend\n").find("tag") !=
          std::string::npos);
    for (std::string_view text : {"H-representation\nbegin\nx 3 rational\nend\n", "H-representation\nbegin\n1 0 rational\nend\n"})
        CHECK(error_of(text).rfind("line 3", 0) == 0);
}

TEST_CASE("scheme descriptions parse back")
{
    for (const auto& s : {IndexScheme::unordered_pairs(5), IndexScheme::ordered_pairs(4), IndexScheme::subsets(6, 3),
                          IndexScheme::subsets(4, 1)})
        CHECK(parse_scheme(s.describe()) == s);
    for (std::string_view bad : {"", "pairs(4)", "subsets(4)", "subsets(3,5)", "subsets(60,30)", "ordered_pairs(x)", "unordered_pairs(1)"})
        CHECK_THROWS_AS(parse_scheme(bad), InputError);
}

TEST_CASE("published records are consistent")
{
    const auto& records = table_records();
    CHECK(records.size() > 30);
    std::set<std::string> names;
    for (const auto& r : records) {
        CHECK(names.insert(r.spec.name()).second);
        CHECK(r.dim == index_scheme(r.spec).size());
        CHECK(find_record(r.spec) == &r);
        for (const auto* f : {&r.ray_count, &r.ray_orbits, &r.facet_count, &r.facet_orbits})
            CHECK(f->value.has_value() == (f->status != FieldStatus::unknown));
        if (r.ray_orbits.checkable() && r.ray_count.checkable()) CHECK(*r.ray_orbits.value <= *r.ray_count.value);
        if (r.tier == Tier::core) CHECK(r.ray_count.checkable());
    }
    CHECK(find_record(ConeSpec::met(9)) == nullptr);
    CHECK(*find_record(ConeSpec::smet(2, Rat(2), 5))->ray_count.value == 132);
    CHECK(find_record(ConeSpec::smet(1, Rat(1, 2), 5))->tier == Tier::extended);
    CHECK(parse_tier("core") == Tier::core);
    CHECK(parse_tier("extended") == Tier::extended);
    CHECK_THROWS_AS(parse_tier("everything"), InputError);
    CHECK(to_string(FieldStatus::lower_bound) == "lower_bound");
}

TEST_CASE("reports of small cones")
{
    auto report = make_report(ConeSpec::smet(2, Rat(2), 5));
    CHECK(report.verdict == "pass");
    CHECK(report.mismatches.empty());
    CHECK(report.rays.count == 132);
    CHECK(report.rays.orbits.size() == 6);
    CHECK(report.facets.count == 20);
    CHECK(report.skeleton_diameter == 2);
    CHECK(report.ridge_diameter == 1);
    std::size_t sum = 0;
    for (const auto& o : report.rays.orbits) {
        sum += o.size;
        CHECK(o.adjacency.has_value());
    }
    CHECK(sum == 132);
    CHECK(report.rays.representation_matrix.size() == 6);

    auto qmet = make_report(ConeSpec::qmet(4));
    CHECK(qmet.verdict == "pass");
    CHECK(qmet.rays.count == 164);
    CHECK(qmet.rays.orbits.size() == 10);

    auto cut = make_report(ConeSpec::cut(5), {.adm = true});
    CHECK(cut.verdict == "pass");
    CHECK(cut.facets.count == 40);

    auto unlisted = make_report(ConeSpec::hmet(2, 4));
    CHECK(unlisted.verdict == "no-record");
}

TEST_CASE("judging compares only exact fields")
{
    auto report = make_report(ConeSpec::met(5), {.graphs = false});
    ExpectedRecord wrong = *find_record(ConeSpec::met(5));
    wrong.ray_count = {26, FieldStatus::exact};
    judge(report, &wrong);
    CHECK(report.verdict == "fail");
    CHECK(report.mismatches.size() == 1);

    ExpectedRecord bound = *find_record(ConeSpec::met(5));
    bound.ray_count = {26, FieldStatus::lower_bound};
    judge(report, &bound);
    CHECK(report.verdict == "pass");
    CHECK_FALSE(report.notes.empty());
}

TEST_CASE("conversion limit makes the report incomplete")
{
    auto report = make_report(ConeSpec::qmet(4), {.max_rays = 20});
    CHECK_FALSE(report.complete);
    CHECK(report.verdict == "incomplete");
    CHECK_FALSE(report.rays.computed);
    auto j = nlohmann::json::parse(report_json(report));
    CHECK(j["rays"]["count"].is_null());
}

TEST_CASE("json output")
{
    auto one = make_report(ConeSpec::hmet(2, 5), {.threads = 1});
    auto many = make_report(ConeSpec::hmet(2, 5), {.threads = 4});
    CHECK(report_json(one, false) == report_json(many, false));

    auto j = nlohmann::json::parse(report_json(one));
    for (const char* key : {"spec", "dim", "rays", "facets", "diameters", "verdict", "mismatches", "notes", "elapsed_ms"})
        CHECK(j.contains(key));
    CHECK(j["dim"] == 10);
    CHECK(j["rays"]["count"] == 37);
    CHECK(j["rays"]["orbits"].size() == 3);
    CHECK(j["diameters"]["skeleton"] == 2);
    CHECK(j["verdict"] == "pass");
    for (const auto& o : j["rays"]["orbits"])
        for (const char* key : {"rep", "size", "incidence", "adjacency"}) CHECK(o.contains(key));

    auto text = report_text(one);
    CHECK(text.find("Adj.") != std::string::npos);
    CHECK(text.find("Inc.") != std::string::npos);
}

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "doctest.h"
#include "polycone/io.hpp"

using namespace polycone;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args)
{
    std::string command = std::string(POLYCONE_BIN) + " " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) r.out.append(buffer.data(), got);
    int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::filesystem::path scratch(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / "polycone_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("build writes parseable files")
{
    auto met = run("build --family met --n 5 --rep h");
    CHECK(met.status == 0);
    auto rep = parse_representation(met.out);
    CHECK(rep.size() == 30);
    CHECK(rep.kind == RepKind::H);

    auto hcut = run("build --family hcut --m 3 --n 6 --rep v");
    CHECK(hcut.status == 0);
    CHECK(parse_representation(hcut.out).size() == 65);

    auto path = scratch("smet.ine");
    CHECK(run("build --family smet --m 2 --s 5/2 --n 5 --rep h -o " + path.string()).status == 0);
    CHECK(read_representation_file(path.string()).dim() == 10);

    CHECK(run("build --family smet --m 2 --s 3 --n 5").status == 0);
    CHECK(run("build --family smet --m 2 --s 7/2 --n 5").status == 2);
    CHECK(run("build --family scut --m 2 --s 4 --n 5 --rep v").status == 2);
    CHECK(run("build --family met --n 2").status == 2);
    CHECK(run("build --family nope --n 5").status == 2);
    CHECK(run("build --n 5").status == 2);
}

TEST_CASE("convert and adjacency")
{
    auto gens = scratch("cut5.ext");
    REQUIRE(run("build --family cut --n 5 --rep v -o " + gens.string()).status == 0);

    auto full = run("convert " + gens.string());
    CHECK(full.status == 0);
    auto facets = parse_representation(full.out);
    CHECK(facets.kind == RepKind::H);
    CHECK(facets.size() == 40);

    auto adm = run("convert --adm " + gens.string());
    CHECK(adm.status == 0);
    CHECK(adm.out.find("40 facets in 2 orbits") != std::string::npos);
    CHECK(parse_representation(adm.out).size() == 2);

    auto checkpoint = scratch("cut5.ckpt");
    std::filesystem::remove(checkpoint);
    CHECK(run("convert --adm --checkpoint " + checkpoint.string() + " " + gens.string()).status == 0);
    CHECK(std::filesystem::exists(checkpoint));
    CHECK(run("convert --adm --checkpoint " + checkpoint.string() + " " + gens.string()).status == 0);

    auto met = scratch("met5.ine");
    REQUIRE(run("build --family met --n 5 --rep h -o " + met.string()).status == 0);
    CHECK(run("convert " + met.string()).status == 0);
    CHECK(run("convert --max-rays 5 " + met.string()).status == 3);

    auto adjacent = run("adjacency " + met.string() + " --f1 1 --f2 2");
    CHECK(adjacent.status == 0);
    CHECK(adjacent.out.find("adjacent") != std::string::npos);
    CHECK(run("adjacency " + met.string() + " --f1 1 --f2 1").status == 2);
    CHECK(run("adjacency " + met.string() + " --f1 1 --f2 31").status == 2);

    auto empty = scratch("empty.ine");
    std::ofstream(empty).close();
    auto bad = run("convert " + empty.string());
    CHECK(bad.status == 2);
    CHECK(bad.out.find("line 1") != std::string::npos);
    CHECK(run("convert " + scratch("missing.ine").string()).status == 2);
}

TEST_CASE("orbits, graphs and reports")
{
    auto gens = scratch("cut5_orbits.ext");
    REQUIRE(run("build --family cut --n 5 --rep v -o " + gens.string()).status == 0);
    auto orbits = run("orbits " + gens.string());
    CHECK(orbits.status == 0);
    CHECK(orbits.out.find("15 rows in 2 orbits") != std::string::npos);

    auto g = run("graph --family hmet --m 2 --n 6 --kind g --vector \"1 1 1 1 1 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0\"");
    CHECK(g.status == 0);
    CHECK(run("graph --family hmet --m 2 --n 6 --kind g --vector \"1 1\"").status == 2);

    auto smet_h = scratch("smet225.ine");
    auto smet_v = scratch("smet225.ext");
    REQUIRE(run("build --family smet --m 2 --s 2 --n 5 --rep h -o " + smet_h.string()).status == 0);
    REQUIRE(run("convert " + smet_h.string() + " -o " + smet_v.string()).status == 0);
    auto tally = run("graph --family smet --m 2 --s 2 --n 5 --kind h --input " + smet_v.string());
    CHECK(tally.status == 0);
    CHECK(tally.out.find("K4: 5") != std::string::npos);
    CHECK(tally.out.find("K_{2,2,1}: 15") != std::string::npos);
    CHECK(tally.out.find("skipped 112") != std::string::npos);

    auto report = run("report --family smet --m 2 --s 2 --n 5 --json -");
    CHECK(report.status == 0);
    auto j = nlohmann::json::parse(report.out);
    CHECK(j["verdict"] == "pass");
    CHECK(j["rays"]["count"] == 132);

    auto incomplete = run("report --family qmet --n 4 --max-rays 10 --no-graphs");
    CHECK(incomplete.status == 3);

    CHECK(run("--threads 0 report --family met --n 4").status == 2);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("regress --tier everything").status == 2);
}

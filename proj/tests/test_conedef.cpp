#include <algorithm>
#include <set>

#include "doctest.h"
#include "polycone/conedef.hpp"

using namespace polycone;

namespace {

RatVector ints(std::initializer_list<std::int64_t> xs)
{
    RatVector v;
    for (auto x : xs) v.emplace_back(x);
    return v;
}

std::size_t choose(int n, int k)
{
    if (k < 0 || k > n) return 0;
    if (k == 0 || k == n) return 1;
    return choose(n - 1, k - 1) + choose(n - 1, k);
}

// Ordered set partitions with at least two blocks, by the recurrence
// a(n) = sum_k C(n,k) a(n-k) for all ordered partitions.
std::size_t ordered_partitions_min2(int n)
{
    std::vector<std::size_t> a(n + 1, 0);
    a[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int k = 1; k <= i; ++k) a[i] += choose(i, k) * a[i - k];
    }
    return a[n] - 1;
}

std::size_t rank_of_tight(const Representation& h, const RatVector& v)
{
    std::vector<RatVector> tight;
    for (const auto& r : h.rows) {
        if (dot(r, v).is_zero()) tight.push_back(r);
    }
    return rank(RatMatrix::from_rows(tight, h.dim()));
}

bool is_extreme(const Representation& h, const RatVector& v)
{
    return is_member(v, h).inside && rank_of_tight(h, v) + 1 == h.dim();
}

}  // namespace

TEST_CASE("family names round trip")
{
    for (Family f : {Family::MET, Family::CUT, Family::QMET, Family::OMCUT, Family::HMET, Family::HCUT, Family::SMET,
                     Family::SCUT}) {
        CHECK(parse_family(to_string(f)) == f);
    }
    CHECK(parse_family("smet") == Family::SMET);
    CHECK_THROWS_AS(parse_family("HYP"), InputError);
}

TEST_CASE("cone parameters are validated")
{
    CHECK_NOTHROW(ConeSpec::met(3).validate());
    CHECK_THROWS_AS(ConeSpec::met(2).validate(), InputError);
    CHECK_THROWS_AS(ConeSpec::hmet(2, 3).validate(), InputError);
    CHECK_THROWS_AS(ConeSpec::hmet(0, 3).validate(), InputError);
    CHECK_NOTHROW(ConeSpec::smet(2, Rat(5, 2), 5).validate());
    CHECK_THROWS_AS(ConeSpec::smet(2, Rat(3), 5).validate(), InputError);
    CHECK_NOTHROW(ConeSpec::smet(2, Rat(3), 5).validate(false));
    CHECK_THROWS_AS(ConeSpec::smet(2, Rat(0), 5).validate(false), InputError);
    CHECK(ConeSpec::smet(2, Rat(2), 5).name() == "SMET^{2,2}_5");
    CHECK(ConeSpec::met(5).name() == "MET_5");
    CHECK(ConeSpec::scut(3, Rat(3), 6).h_partner() == ConeSpec::smet(3, Rat(3), 6));
}

TEST_CASE("index scheme examples")
{
    CHECK(index_scheme(ConeSpec::met(4)).size() == 6);
    CHECK(index_scheme(ConeSpec::qmet(3)).size() == 6);
    CHECK(index_scheme(ConeSpec::hmet(2, 5)).size() == 10);
    CHECK_THROWS_AS(index_scheme(ConeSpec::hmet(2, 3)), InputError);

    auto pairs = IndexScheme::unordered_pairs(4);
    CHECK(pairs.labels().front() == std::vector<int>{1, 2});
    CHECK(pairs.labels().back() == std::vector<int>{3, 4});
    CHECK(pairs.index_of({3, 1}) == 1);
    CHECK(pairs.index_of({1, 1}) == pairs.size());
    CHECK(pairs.compatible(IndexScheme::subsets(4, 2)));
    CHECK_FALSE(pairs.compatible(IndexScheme::ordered_pairs(4)));

    auto ordered = IndexScheme::ordered_pairs(3);
    CHECK(ordered.labels()[0] == std::vector<int>{1, 2});
    CHECK(ordered.labels()[2] == std::vector<int>{2, 1});
    CHECK(ordered.index_of({2, 1}) == 2);

    auto triples = IndexScheme::subsets(5, 3);
    CHECK(triples.label(0) == "123");
    CHECK(triples.label(0, true) == "~45");
    CHECK(triples.label(9, true) == "~12");
}

TEST_CASE("index schemes are lexicographic and complete")
{
    for (int n = 3; n <= 7; ++n) {
        for (int k = 1; k <= n; ++k) {
            auto s = IndexScheme::subsets(n, k);
            CHECK(s.size() == choose(n, k));
            CHECK(std::is_sorted(s.labels().begin(), s.labels().end()));
            for (std::size_t i = 0; i < s.size(); ++i) CHECK(s.index_of(s.labels()[i]) == i);
        }
        auto o = IndexScheme::ordered_pairs(n);
        CHECK(o.size() == static_cast<std::size_t>(n * (n - 1)));
        CHECK(std::is_sorted(o.labels().begin(), o.labels().end()));
    }
}

TEST_CASE("row tags print and parse")
{
    RowTag nn{RowTag::Kind::nn, {1, 3, 4}, 0, {}};
    RowTag st{RowTag::Kind::simplex, {1, 2, 3, 4}, 2, {}};
    RowTag gen{RowTag::Kind::generator, {}, 0, "alpha{1,2,3}{4}{5}"};
    for (const auto& t : {nn, st, gen, RowTag{}}) CHECK(RowTag::parse(t.str()) == t);
    CHECK_THROWS_AS(RowTag::parse("NN{1,,2}"), InputError);
    CHECK_THROWS_AS(RowTag::parse("ST{1,2}"), InputError);
}

TEST_CASE("build_h examples")
{
    CHECK(build_h(ConeSpec::met(5)).size() == 30);
    CHECK(build_h(ConeSpec::qmet(4)).size() == 36);
    auto smet = build_h(ConeSpec::smet(3, Rat(2), 6));
    CHECK(smet.size() == 45);
    CHECK(redundancy_filter(smet).size() == 45);
    CHECK_THROWS_AS(build_h(ConeSpec::cut(5)), InputError);
    CHECK_THROWS_AS(build_h(ConeSpec::hcut(2, 5)), InputError);
}

TEST_CASE("build_h row counts follow the closed formulas")
{
    for (int n = 3; n <= 7; ++n) {
        CHECK(build_h(ConeSpec::met(n)).size() == 3 * choose(n, 3));
        CHECK(build_h(ConeSpec::qmet(n)).size() == static_cast<std::size_t>(n * (n - 1) * (n - 1)));
    }
    for (int m = 1; m <= 3; ++m) {
        for (int n = m + 2; n <= m + 4; ++n) {
            auto expected = static_cast<std::size_t>(m + 2) * choose(n, m + 2) + choose(n, m + 1);
            auto h = build_h(ConeSpec::hmet(m, n));
            CHECK(h.size() == expected);
            CHECK_NOTHROW(h.check_invariants());
            CHECK(build_h(ConeSpec::smet(m, Rat(1, 2), n)).size() == expected);
        }
    }
}

TEST_CASE("simplex rows match the defining inequality")
{
    // s = 3/2 on T = {1,2,3,4}, x = 1: 3 d(234) <= 2 (d(134) + d(124) + d(123)).
    auto h = build_h(ConeSpec::smet(2, Rat(3, 2), 4));
    auto sch = h.scheme;
    RatVector expected(sch.size());
    expected[sch.index_of({2, 3, 4})] = Rat(-3);
    expected[sch.index_of({1, 3, 4})] = Rat(2);
    expected[sch.index_of({1, 2, 4})] = Rat(2);
    expected[sch.index_of({1, 2, 3})] = Rat(2);
    CHECK(h.rows[0] == expected);
    CHECK(h.tags[0].kind == RowTag::Kind::simplex);
    CHECK(h.tags[0].apex == 1);

    auto met = build_h(ConeSpec::met(3));
    // d(2,3) <= d(1,2) + d(1,3)
    CHECK(met.rows[0] == ints({1, 1, -1}));
    CHECK(met.tags[0].kind == RowTag::Kind::triangle);
    CHECK(met.tags[0].points == std::vector<int>{2, 3});
    CHECK(met.tags[0].apex == 1);
}

TEST_CASE("redundancy_filter examples")
{
    auto smet = build_h(ConeSpec::smet(2, Rat(2), 5));
    CHECK(smet.size() == 30);
    auto f = redundancy_filter(smet);
    CHECK(f.size() == 20);
    CHECK(std::none_of(f.tags.begin(), f.tags.end(), [](const RowTag& t) { return t.kind == RowTag::Kind::nn; }));

    CHECK(redundancy_filter(build_h(ConeSpec::met(4))).size() == 12);

    auto big = build_h(ConeSpec::smet(4, Rat(4), 7));
    CHECK(big.size() == 42 + 21);
    CHECK(redundancy_filter(big).size() == 42);

    CHECK(redundancy_filter(build_h(ConeSpec::hmet(2, 5))).size() == 30);
}

TEST_CASE("redundancy_filter drops a scaled-sum row")
{
    Representation h;
    h.scheme = IndexScheme::unordered_pairs(3);
    h.rows = {ints({1, 0, 0}), ints({0, 1, 0}), ints({1, 1, 0}), ints({0, 0, 1})};
    auto f = redundancy_filter(h);
    CHECK(f.rows == std::vector<RatVector>{ints({1, 0, 0}), ints({0, 1, 0}), ints({0, 0, 1})});
}

TEST_CASE("build_generators examples")
{
    CHECK(build_generators(ConeSpec::cut(5)).size() == 15);
    CHECK(build_generators(ConeSpec::omcut(4)).size() == 74);
    CHECK(build_generators(ConeSpec::hcut(3, 6)).size() == 65);
    CHECK_THROWS_AS(build_generators(ConeSpec::scut(2, Rat(2), 5)), InputError);
    CHECK_THROWS_AS(build_generators(ConeSpec::met(5)), InputError);
}

TEST_CASE("generator counts follow the closed formulas")
{
    for (int n = 3; n <= 7; ++n) {
        auto cuts = build_generators(ConeSpec::cut(n));
        CHECK(cuts.size() == (std::size_t{1} << (n - 1)) - 1);
        CHECK_NOTHROW(cuts.check_invariants());
    }
    for (int n = 3; n <= 5; ++n) CHECK(build_generators(ConeSpec::omcut(n)).size() == ordered_partitions_min2(n));
    for (int m = 1; m <= 3; ++m) {
        for (int n = m + 2; n <= 7; ++n) {
            auto g = build_generators(ConeSpec::hcut(m, n));
            CHECK(g.size() == stirling2(n, m + 1));
            CHECK_NOTHROW(g.check_invariants());
        }
    }
}

TEST_CASE("combinatorial helpers")
{
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(3, 5) == 0);
    CHECK(stirling2(5, 2) == 15);
    CHECK(stirling2(6, 4) == 65);
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(3, 0) == 0);
    CHECK(set_partitions(4).size() == 15);
    CHECK(set_partitions(4, 2).size() == 7);
    for (const auto& p : set_partitions(5)) {
        std::vector<int> all;
        for (std::size_t b = 0; b < p.size(); ++b) {
            all.insert(all.end(), p[b].begin(), p[b].end());
            if (b > 0) CHECK(p[b - 1].front() < p[b].front());
        }
        std::sort(all.begin(), all.end());
        CHECK(all == std::vector<int>{1, 2, 3, 4, 5});
    }
}

TEST_CASE("delta_vector examples")
{
    auto oc = delta_vector(DeltaKind::oriented_cut, {{1}}, ConeSpec::qmet(3));
    auto sch = IndexScheme::ordered_pairs(3);
    for (std::size_t i = 0; i < sch.size(); ++i) {
        bool want = sch.labels()[i] == std::vector<int>{1, 2} || sch.labels()[i] == std::vector<int>{1, 3};
        CHECK(oc[i] == Rat(want ? 1 : 0));
    }

    auto alpha = delta_vector(DeltaKind::partition_hemimetric, {{1, 2, 3}, {4}, {5}}, ConeSpec::hmet(2, 5));
    auto triples = IndexScheme::subsets(5, 3);
    std::set<std::string> support;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (!alpha[i].is_zero()) support.insert(triples.label(i));
    }
    CHECK(support == std::set<std::string>{"145", "245", "345"});

    CHECK(delta_vector(DeltaKind::cut, {{1, 2}, {3, 4}}, ConeSpec::met(4)) == ints({0, 1, 1, 1, 1, 0}));
    CHECK(delta_vector(DeltaKind::cut, {{1, 2}}, ConeSpec::met(4)) == ints({0, 1, 1, 1, 1, 0}));
    CHECK(delta_vector(DeltaKind::multicut, {{1}, {2}, {3, 4}}, ConeSpec::met(4)) == ints({1, 1, 1, 1, 1, 0}));
}

TEST_CASE("delta_vector rejects bad partitions")
{
    CHECK_THROWS_AS(delta_vector(DeltaKind::cut, {{1, 2}, {2, 3, 4}}, ConeSpec::met(4)), InputError);
    CHECK_THROWS_AS(delta_vector(DeltaKind::cut, {{1, 2}, {3}}, ConeSpec::met(4)), InputError);
    CHECK_THROWS_AS(delta_vector(DeltaKind::cut, {{1, 7}}, ConeSpec::met(4)), InputError);
    CHECK_THROWS_AS(delta_vector(DeltaKind::partition_hemimetric, {{1, 2, 3, 4}, {5}}, ConeSpec::hmet(2, 5)),
                    InputError);
    CHECK_THROWS_AS(delta_vector(DeltaKind::partition_hemimetric, {{1, 2}, {}, {3, 4, 5}}, ConeSpec::hmet(2, 5)),
                    InputError);
    CHECK_THROWS_AS(delta_vector(DeltaKind::oriented_cut, {{1}}, ConeSpec::met(3)), InputError);
    CHECK_THROWS_AS(delta_vector(DeltaKind::multicut, {{1, 2, 3, 4}}, ConeSpec::met(4)), InputError);
}

TEST_CASE("delta_vector agrees with the defining formulas")
{
    const int n = 5;
    for (const auto& part : set_partitions(n)) {
        std::vector<int> block(n + 1);
        for (std::size_t b = 0; b < part.size(); ++b) {
            for (int x : part[b]) block[x] = static_cast<int>(b);
        }
        auto pairs = IndexScheme::unordered_pairs(n);
        if (part.size() >= 2) {
            auto v = delta_vector(DeltaKind::multicut, part, ConeSpec::met(n));
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                int x = pairs.labels()[i][0], y = pairs.labels()[i][1];
                CHECK(v[i] == Rat(block[x] != block[y] ? 1 : 0));
            }
            auto ov = delta_vector(DeltaKind::oriented_multicut, part, ConeSpec::qmet(n));
            auto ord = IndexScheme::ordered_pairs(n);
            for (std::size_t i = 0; i < ord.size(); ++i) {
                int x = ord.labels()[i][0], y = ord.labels()[i][1];
                CHECK(ov[i] == Rat(block[x] < block[y] ? 1 : 0));
            }
        }
        if (part.size() == 3) {
            auto a = delta_vector(DeltaKind::partition_hemimetric, part, ConeSpec::hmet(2, n));
            auto tri = IndexScheme::subsets(n, 3);
            for (std::size_t i = 0; i < tri.size(); ++i) {
                std::set<int> blocks;
                for (int x : tri.labels()[i]) blocks.insert(block[x]);
                CHECK(a[i] == Rat(blocks.size() == 3 ? 1 : 0));
            }
        }
    }
}

TEST_CASE("zero_extension and vertex_splitting reproduce the displayed rows")
{
    auto met4 = ConeSpec::met(4);
    auto d1 = delta_vector(DeltaKind::cut, {{1}}, met4);
    auto d2 = delta_vector(DeltaKind::cut, {{1, 2}}, met4);

    // Columns printed as complements ~45, ~35, ..., ~12, i.e. triples 123 ... 345.
    CHECK(zero_extension(d1, met4) == ints({0, 0, 1, 0, 1, 1, 0, 0, 0, 0}));
    CHECK(zero_extension(d2, met4) == ints({0, 0, 0, 0, 1, 1, 0, 1, 1, 0}));

    CHECK(vertex_splitting(d1, met4) == ints({1, 1, 1, 1, 0, 0, 0, 0, 0, 0}));
    CHECK(vertex_splitting(d2, met4) == ints({0, 1, 1, 1, 1, 1, 1, 0, 0, 0}));
    auto met5 = ConeSpec::met(5);
    CHECK(vertex_splitting(d1, met4) == delta_vector(DeltaKind::cut, {{1}}, met5));
    CHECK(vertex_splitting(d2, met4) == delta_vector(DeltaKind::cut, {{1, 2}}, met5));

    CHECK(zero_extension(RatVector(6), met4) == RatVector(10));
    CHECK(vertex_splitting(RatVector(6), met4) == RatVector(10));
    CHECK_THROWS_AS(zero_extension(RatVector(5), met4), InputError);
    CHECK_THROWS_AS(vertex_splitting(RatVector(7), met4), InputError);
    CHECK_THROWS_AS(zero_extension(RatVector(6), ConeSpec::qmet(3)), InputError);
}

TEST_CASE("lifted MET_4 cuts are extreme in the larger cones")
{
    auto hmet25 = build_h(ConeSpec::hmet(2, 5));
    auto met5 = build_h(ConeSpec::met(5));
    for (const auto& v : build_generators(ConeSpec::cut(4)).rows) {
        CHECK(is_extreme(hmet25, zero_extension(v, ConeSpec::met(4))));
        CHECK(is_extreme(met5, vertex_splitting(v, ConeSpec::met(4))));
    }
}

TEST_CASE("is_member examples")
{
    for (int n = 3; n <= 6; ++n) {
        auto h = build_h(ConeSpec::met(n));
        for (const auto& c : build_generators(ConeSpec::cut(n)).rows) CHECK(is_member(c, h).inside);
    }
    auto met3 = build_h(ConeSpec::met(3));
    auto m = is_member(ints({3, 1, 1}), met3);
    CHECK_FALSE(m.inside);
    REQUIRE(m.violated.size() == 1);
    CHECK(met3.tags[m.violated[0]].points == std::vector<int>{1, 2});

    auto hmet = build_h(ConeSpec::hmet(2, 5));
    CHECK(is_member(delta_vector(DeltaKind::partition_hemimetric, {{1}, {2}, {3, 4, 5}}, ConeSpec::hmet(2, 5)), hmet).inside);
    CHECK_THROWS_AS(is_member(ints({1, 1}), met3), InputError);
}

TEST_CASE("partition hemi-metrics are extreme rays of HMET")
{
    for (auto [m, n] : {std::pair{1, 4}, {2, 5}, {2, 6}, {3, 6}}) {
        auto spec = ConeSpec::hmet(m, n);
        auto h = build_h(spec);
        for (const auto& a : build_generators(ConeSpec::hcut(m, n)).rows) CHECK(is_extreme(h, a));
    }
}

TEST_CASE("the star ray of SMET^{m,m} is extreme")
{
    for (auto [m, n] : {std::pair{2, 5}, {3, 6}}) {
        auto spec = ConeSpec::smet(m, Rat(m), n);
        auto h = build_h(spec);
        auto sch = h.scheme;
        RatVector v(sch.size());
        for (std::size_t i = 0; i < sch.size(); ++i) v[i] = Rat(sch.labels()[i][0] == 1 ? 1 : 0);
        CHECK(is_extreme(h, v));
    }
}

TEST_CASE("smet_closed_form examples")
{
    auto a = smet_closed_form(3, Rat(2));
    CHECK(a.ray_count == 10);
    CHECK(a.skeleton_kind == "J(5,3)");
    CHECK(a.skeleton_diameter == 2);
    CHECK(a.ridge_diameter == 2);

    auto b = smet_closed_form(1, Rat(1));
    CHECK(b.ray_count == 3);
    CHECK(b.skeleton_diameter == 1);
    CHECK(b.ridge_diameter == 1);

    auto c = smet_closed_form(2, Rat(3, 2));
    CHECK(c.ray_count == 12);
    for (const auto& r : c.rays) {
        CHECK(std::count(r.begin(), r.end(), Rat(2)) == 2);
        CHECK(std::count(r.begin(), r.end(), Rat(1)) == 1);
    }

    CHECK(smet_closed_form(2, Rat(1)).ridge_diameter == 3);

    CHECK_THROWS_AS(smet_closed_form(2, Rat(3)), InputError);
    CHECK_THROWS_AS(smet_closed_form(2, Rat(-1)), InputError);
    CHECK_THROWS_AS(smet_closed_form(0, Rat(1, 2)), InputError);
}

TEST_CASE("closed-form rays are extreme rays of SMET_{m+2}")
{
    for (int m = 1; m <= 4; ++m) {
        for (Rat s : {Rat(1, 2), Rat(1), Rat(3, 2), Rat(2), Rat(5, 2), Rat(3)}) {
            if (s >= Rat(m + 1)) continue;
            auto h = build_h(ConeSpec::smet(m, s, m + 2));
            auto cf = smet_closed_form(m, s);
            CHECK(cf.rays.size() == cf.ray_count);
            for (const auto& r : cf.rays) CHECK(is_extreme(h, r));
            if (s.is_integer()) {
                int si = static_cast<int>(s.floor().get_si());
                CHECK(cf.ray_count == choose(m + 2, si + 1));
                CHECK(cf.skeleton_diameter == std::min(si + 1, m - si + 1));
            }
        }
    }
}

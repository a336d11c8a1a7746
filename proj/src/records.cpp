#include "polycone/records.hpp"

namespace polycone {

namespace {

ExpectedField exact(std::uint64_t v) { return {v, FieldStatus::exact}; }
ExpectedField conj(std::uint64_t v) { return {v, FieldStatus::conjectured}; }
ExpectedField at_least(std::uint64_t v) { return {v, FieldStatus::lower_bound}; }
ExpectedField unknown() { return {}; }

ExpectedRecord row(ConeSpec spec, std::size_t dim, ExpectedField rays, ExpectedField ray_orbits, ExpectedField facets,
                   ExpectedField facet_orbits, ExpectedField skeleton, ExpectedField ridge, Tier tier, bool adm = false)
{
    return {std::move(spec), dim, rays, ray_orbits, facets, facet_orbits, skeleton, ridge, tier, adm};
}

ExpectedRecord rays_only(ExpectedRecord r)
{
    r.rays_only = true;
    return r;
}

std::vector<ExpectedRecord> build_table()
{
    using C = ConeSpec;
    const Tier core = Tier::core;
    const Tier ext = Tier::extended;
    const Tier far = Tier::out_of_reach;
    return {
        row(C::met(4), 6, exact(7), exact(2), exact(12), exact(1), exact(1), exact(2), core),
        row(C::cut(4), 6, exact(7), exact(2), exact(12), exact(1), exact(1), exact(2), core),
        row(C::cut(5), 10, exact(15), exact(2), exact(40), exact(2), exact(1), exact(2), core),
        row(C::met(5), 10, exact(25), exact(3), exact(30), exact(1), exact(2), exact(2), core),
        row(C::cut(6), 15, exact(31), exact(3), exact(210), exact(4), exact(1), exact(3), core),
        row(C::met(6), 15, exact(296), exact(7), exact(60), exact(1), exact(2), exact(2), core),
        row(C::cut(7), 21, exact(63), exact(3), exact(38780), exact(36), exact(1), exact(3), far),
        row(C::met(7), 21, exact(55226), exact(46), exact(105), exact(1), exact(3), exact(2), far),
        row(C::cut(8), 28, exact(127), exact(4), conj(49604520), conj(2169), exact(1), unknown(), far),
        row(C::met(8), 28, conj(119269588), conj(3918), exact(168), exact(1), unknown(), exact(2), far),

        row(C::omcut(3), 6, exact(12), exact(2), exact(12), exact(2), exact(2), exact(2), core),
        row(C::qmet(3), 6, exact(12), exact(2), exact(12), exact(2), exact(2), exact(2), core),
        row(C::omcut(4), 12, exact(74), exact(5), exact(72), exact(4), exact(2), exact(2), core),
        row(C::qmet(4), 12, exact(164), exact(10), exact(36), exact(2), exact(3), exact(2), core),
        rays_only(row(C::omcut(5), 20, exact(540), exact(9), exact(35320), exact(194), exact(2), exact(3), ext, true)),
        row(C::qmet(5), 20, exact(43590), exact(229), exact(80), exact(2), exact(3), exact(2), ext),
        row(C::omcut(6), 30, exact(4682), exact(19), at_least(217847040), at_least(163822), exact(2), unknown(), far),
        row(C::qmet(6), 30, at_least(492157440), at_least(343577), exact(150), exact(2), unknown(), exact(2), far),

        row(C::hcut(2, 5), 10, exact(25), exact(2), exact(120), exact(4), exact(2), exact(3), core),
        row(C::hmet(2, 5), 10, exact(37), exact(3), exact(30), exact(2), exact(2), exact(2), core),
        row(C::hcut(3, 6), 15, exact(65), exact(2), exact(4065), exact(16), exact(2), exact(3), ext, true),
        row(C::hmet(3, 6), 15, exact(287), exact(5), exact(45), exact(2), exact(3), exact(2), core),
        row(C::hcut(4, 7), 21, exact(140), exact(2), exact(474390), exact(153), exact(2), exact(3), far, true),
        row(C::hmet(4, 7), 21, exact(3692), exact(8), exact(63), exact(2), exact(3), exact(2), far),
        row(C::hcut(5, 8), 28, exact(266), exact(2), at_least(409893148), at_least(11274), exact(2), unknown(), far),
        row(C::hmet(5, 8), 28, exact(55898), exact(13), exact(84), exact(2), exact(3), exact(2), far),
        row(C::hmet(6, 9), 36, exact(864174), exact(20), exact(108), exact(2), unknown(), exact(2), far),
        row(C::hcut(2, 6), 20, exact(90), exact(3), exact(2095154), exact(3086), exact(2), unknown(), far, true),
        row(C::hmet(2, 6), 20, exact(12492), exact(41), exact(80), exact(2), exact(3), exact(2), ext),
        row(C::hmet(2, 7), 35, at_least(454191608), at_least(91836), exact(175), exact(2), unknown(), exact(2), far),
        row(C::hmet(3, 7), 35, at_least(551467967), at_least(110782), exact(140), exact(2), unknown(), exact(2), far),

        row(C::smet(2, Rat(2), 5), 10, exact(132), exact(6), exact(20), exact(1), exact(2), exact(1), core),
        row(C::scut(2, Rat(2), 5), 10, exact(20), exact(2), exact(220), exact(6), exact(1), exact(3), core),
        row(C::smet(3, Rat(3, 2), 6), 15, exact(331989), exact(596), exact(45), exact(2), exact(6), exact(2), far),
        row(C::smet(3, Rat(2), 6), 15, exact(12670), exact(40), exact(45), exact(2), exact(4), exact(2), ext),
        row(C::scut(3, Rat(2), 6), 15, exact(247), exact(5), conj(866745), conj(1345), exact(2), unknown(), far),
        row(C::smet(3, Rat(5, 2), 6), 15, exact(85504), exact(201), exact(45), exact(2), exact(6), exact(2), far),
        row(C::smet(3, Rat(3), 6), 15, exact(1138), exact(12), exact(30), exact(1), exact(3), exact(1), core),
        row(C::scut(3, Rat(3), 6), 15, exact(21), exact(2), exact(150), exact(3), exact(1), exact(3), core),
        row(C::smet(4, Rat(2), 7), 21, exact(2561166), exact(661), exact(63), exact(2), unknown(), exact(2), far),
        row(C::smet(4, Rat(3), 7), 21, exact(838729), exact(274), exact(63), exact(2), unknown(), exact(2), far),
        row(C::smet(4, Rat(4), 7), 21, exact(39406), exact(37), exact(42), exact(1), exact(3), exact(1), far),
        row(C::scut(4, Rat(4), 7), 21, exact(112), exact(2), exact(148554), exact(114), exact(1), exact(4), far, true),
        row(C::smet(5, Rat(2), 8), 28, at_least(222891598), at_least(6228), exact(84), exact(2), unknown(), exact(2), far),
        row(C::smet(5, Rat(3), 8), 28, at_least(881351739), at_least(23722), exact(84), exact(2), unknown(), exact(2), far),
        row(C::smet(5, Rat(4), 8), 28, at_least(136793411), at_least(4562), exact(84), exact(2), unknown(), exact(2), far),
        row(C::smet(5, Rat(5), 8), 28, exact(775807), exact(92), exact(56), exact(1), unknown(), exact(1), far),
        row(C::smet(6, Rat(6), 9), 36, conj(30058078), conj(335), exact(72), exact(1), unknown(), exact(1), far),
        row(C::smet(7, Rat(7), 10), 45, conj(923072558), conj(1067), exact(90), exact(1), unknown(), exact(1), far),
        row(C::smet(2, Rat(2), 6), 20, conj(21775425), conj(30827), exact(60), exact(1), unknown(), exact(1), far),
        row(C::scut(2, Rat(2), 6), 20, exact(96), exact(3), at_least(243692840), at_least(341551), exact(1), unknown(), far),
        row(C::smet(3, Rat(3), 7), 35, at_least(594481939), at_least(119732), exact(105), exact(1), unknown(), exact(1), far),
        row(C::smet(2, Rat(2), 7), 35, at_least(465468248), at_least(93128), exact(140), exact(1), unknown(), exact(1), far),

        row(C::smet(1, Rat(1, 2), 4), 6, exact(54), exact(5), unknown(), unknown(), unknown(), unknown(), core),
        row(C::smet(1, Rat(1, 2), 5), 10, exact(2900), exact(35), unknown(), unknown(), unknown(), unknown(), ext),
        row(C::smet(1, Rat(1, 2), 6), 15, exact(988105), unknown(), unknown(), unknown(), unknown(), unknown(), far),
        row(C::smet(1, Rat(3, 2), 4), 6, exact(25), exact(4), unknown(), unknown(), unknown(), unknown(), core),
        row(C::smet(1, Rat(3, 2), 5), 10, exact(1235), exact(24), unknown(), unknown(), unknown(), unknown(), ext),
        row(C::smet(1, Rat(3, 2), 6), 15, exact(530143), unknown(), unknown(), unknown(), unknown(), unknown(), far),
    };
}

}  // namespace

const std::vector<ExpectedRecord>& table_records()
{
    static const std::vector<ExpectedRecord> table = build_table();
    return table;
}

const ExpectedRecord* find_record(const ConeSpec& spec)
{
    for (const auto& r : table_records()) {
        if (r.spec == spec) return &r;
    }
    return nullptr;
}

std::string to_string(FieldStatus s)
{
    switch (s) {
        case FieldStatus::exact: return "exact";
        case FieldStatus::conjectured: return "conjectured";
        case FieldStatus::lower_bound: return "lower_bound";
        case FieldStatus::unknown: return "unknown";
    }
    return "unknown";
}

std::string to_string(Tier t)
{
    switch (t) {
        case Tier::core: return "core";
        case Tier::extended: return "extended";
        case Tier::out_of_reach: return "out_of_reach";
    }
    return "core";
}

Tier parse_tier(std::string_view text)
{
    if (text == "core") return Tier::core;
    if (text == "extended") return Tier::extended;
    throw InputError("unknown tier '" + std::string(text) + "' (expected core or extended)");
}

}  // namespace polycone

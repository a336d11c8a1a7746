#include "polycone/pipeline.hpp"

#include "polycone/lp.hpp"

namespace polycone {

Representation extreme_generators(const Representation& gens, const Representation& facets)
{
    Representation res;
    res.scheme = gens.scheme;
    res.kind = RepKind::V;
    const std::size_t d = gens.dim();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::vector<RatVector> tight;
        for (const auto& f : facets.rows) {
            if (dot(f, gens.rows[i]).is_zero()) tight.push_back(f);
        }
        if (tight.empty() ? d != 1 : rank(RatMatrix::from_rows(tight, d)) + 1 != d) continue;
        res.rows.push_back(gens.rows[i]);
        if (!gens.tags.empty()) res.tags.push_back(gens.tags[i]);
    }
    return res;
}

bool is_extreme_ray(const Representation& h, const RatVector& v)
{
    if (v.size() != h.dim()) throw InputError("is_extreme_ray: vector length differs from the dimension");
    std::vector<RatVector> tight;
    for (const auto& r : h.rows) {
        Rat value = dot(r, v);
        if (value.sign() < 0) return false;
        if (value.is_zero()) tight.push_back(r);
    }
    if (h.dim() == 1) return tight.empty() && !v[0].is_zero();
    return !tight.empty() && rank(RatMatrix::from_rows(tight, h.dim())) + 1 == h.dim();
}

bool generator_is_extreme(const Representation& gens, std::size_t i)
{
    if (i >= gens.size()) throw InputError("generator_is_extreme: row index out of range");
    // Look for c with c.h >= 0 on the other rows and c.g = -1.
    const std::size_t d = gens.dim();
    RatMatrix constraints(gens.size() + 1, d);
    RatVector rhs(gens.size() + 1, Rat(0));
    std::size_t row = 0;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (j == i) continue;
        for (std::size_t c = 0; c < d; ++c) constraints.at(row, c) = gens.rows[j][c];
        ++row;
    }
    for (std::size_t c = 0; c < d; ++c) {
        constraints.at(row, c) = gens.rows[i][c];
        constraints.at(row + 1, c) = -gens.rows[i][c];
    }
    rhs[row] = Rat(-1);
    rhs[row + 1] = Rat(1);
    return solve_lp(constraints, rhs, RatVector(d, Rat(0)), Sense::maximize).status != LpStatus::infeasible;
}

ConeData compute_cone(const ConeSpec& spec, const DDOptions& options)
{
    spec.validate(false);
    ConeData data;
    data.spec = spec;
    if (spec.is_h_family()) {
        data.facets = redundancy_filter(build_h(spec));
        data.rays = dual_description(data.facets, options);
        return data;
    }
    Representation gens;
    if (spec.family == Family::SCUT) {
        auto smet = dual_description(redundancy_filter(build_h(spec.h_partner())), options);
        gens = build_generators(spec, &smet);
    } else {
        gens = build_generators(spec);
    }
    data.facets = facet_enumeration(gens, options);
    data.rays = extreme_generators(gens, data.facets);
    return data;
}

}  // namespace polycone

#include "polycone/conedef.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "polycone/lp.hpp"

namespace polycone {

namespace {

void combinations(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int x = start; x <= n; ++x) {
        if (n - x + 1 < k - static_cast<int>(cur.size())) break;
        cur.push_back(x);
        combinations(n, k, x + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> k_subsets(int n, int k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    combinations(n, k, 1, cur, out);
    return out;
}

std::string join_points(const std::vector<int>& pts)
{
    std::string s;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(pts[i]);
    }
    return s;
}

std::string blocks_text(const std::vector<std::vector<int>>& parts)
{
    std::string s;
    for (const auto& b : parts) s += "{" + join_points(b) + "}";
    return s;
}

// Checks that `parts` are disjoint nonempty subsets of V_n; with `cover`
// they must also cover V_n. Returns the block index of each point (-1 if none).
std::vector<int> block_of(const std::vector<std::vector<int>>& parts, int n, bool cover)
{
    std::vector<int> owner(n + 1, -1);
    for (std::size_t b = 0; b < parts.size(); ++b) {
        if (parts[b].empty()) throw InputError("invalid partition: empty block");
        for (int x : parts[b]) {
            if (x < 1 || x > n) throw InputError("invalid partition: point " + std::to_string(x) + " outside V_n");
            if (owner[x] != -1) throw InputError("invalid partition: point " + std::to_string(x) + " repeated");
            owner[x] = static_cast<int>(b);
        }
    }
    if (cover) {
        for (int x = 1; x <= n; ++x) {
            if (owner[x] == -1) throw InputError("invalid partition: point " + std::to_string(x) + " not covered");
        }
    }
    return owner;
}

RatVector zeros(std::size_t n) { return RatVector(n, Rat(0)); }

void require_scheme(const RatVector& d, const IndexScheme& s, const char* what)
{
    if (d.size() != s.size()) {
        throw InputError(std::string(what) + ": vector length " + std::to_string(d.size()) + " does not match scheme " +
                         s.describe());
    }
}

}  // namespace

std::size_t binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return r;
}

std::size_t stirling2(int n, int k)
{
    if (n == 0 && k == 0) return 1;
    if (n <= 0 || k <= 0 || k > n) return 0;
    std::vector<std::vector<std::size_t>> s(n + 1, std::vector<std::size_t>(k + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= std::min(i, k); ++j) s[i][j] = static_cast<std::size_t>(j) * s[i - 1][j] + s[i - 1][j - 1];
    }
    return s[n][k];
}

std::vector<std::vector<std::vector<int>>> set_partitions(int n, int k)
{
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> rgs(n, 0);
    // Restricted growth strings: rgs[i] <= 1 + max(rgs[0..i-1]).
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == n) {
            if (k != 0 && used != k) return;
            std::vector<std::vector<int>> parts(used);
            for (int x = 0; x < n; ++x) parts[rgs[x]].push_back(x + 1);
            out.push_back(std::move(parts));
            return;
        }
        if (k != 0 && used + (n - i) < k) return;
        for (int b = 0; b <= used && (k == 0 || b < k); ++b) {
            rgs[i] = b;
            rec(i + 1, std::max(used, b + 1));
        }
    };
    if (n > 0) rec(0, 0);
    return out;
}

std::string to_string(Family f)
{
    switch (f) {
        case Family::MET: return "MET";
        case Family::CUT: return "CUT";
        case Family::QMET: return "QMET";
        case Family::OMCUT: return "OMCUT";
        case Family::HMET: return "HMET";
        case Family::HCUT: return "HCUT";
        case Family::SMET: return "SMET";
        case Family::SCUT: return "SCUT";
    }
    return "?";
}

Family parse_family(std::string_view text)
{
    std::string up(text);
    std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (Family f : {Family::MET, Family::CUT, Family::QMET, Family::OMCUT, Family::HMET, Family::HCUT, Family::SMET,
                     Family::SCUT}) {
        if (to_string(f) == up) return f;
    }
    throw InputError("unknown cone family '" + std::string(text) + "'");
}

void ConeSpec::validate(bool strict) const
{
    switch (family) {
        case Family::MET:
        case Family::CUT:
        case Family::QMET:
        case Family::OMCUT:
            if (n < 3) throw InputError(name() + ": need n >= 3");
            if (m != 1) throw InputError(name() + ": m must be 1 for binary families");
            if (s != Rat(1)) throw InputError(name() + ": s must be 1 for this family");
            return;
        case Family::HMET:
        case Family::HCUT:
            if (m < 1) throw InputError(name() + ": need m >= 1");
            if (n < m + 2) throw InputError(name() + ": need n >= m+2");
            if (s != Rat(1)) throw InputError(name() + ": s must be 1 for hemi-metric families");
            return;
        case Family::SMET:
        case Family::SCUT:
            if (m < 1) throw InputError(name() + ": need m >= 1");
            if (n < m + 2) throw InputError(name() + ": need n >= m+2");
            if (s.sign() <= 0) throw InputError(name() + ": need s > 0");
            if (strict && s >= Rat(m + 1)) {
                throw InputError(name() + ": need s < m+1; for s > m+1 the cone collapses to 0 and for s = m+1 to the all-ones half-line");
            }
            return;
    }
}

bool ConeSpec::is_h_family() const
{
    return family == Family::MET || family == Family::QMET || family == Family::HMET || family == Family::SMET;
}

ConeSpec ConeSpec::h_partner() const
{
    ConeSpec p = *this;
    switch (family) {
        case Family::CUT: p.family = Family::MET; break;
        case Family::OMCUT: p.family = Family::QMET; break;
        case Family::HCUT: p.family = Family::HMET; break;
        case Family::SCUT: p.family = Family::SMET; break;
        default: break;
    }
    return p;
}

std::string ConeSpec::name() const
{
    switch (family) {
        case Family::MET:
        case Family::CUT:
        case Family::QMET:
        case Family::OMCUT:
            return to_string(family) + "_" + std::to_string(n);
        case Family::HMET:
        case Family::HCUT:
            return to_string(family) + "^" + std::to_string(m) + "_" + std::to_string(n);
        case Family::SMET:
        case Family::SCUT:
            return to_string(family) + "^{" + std::to_string(m) + "," + s.str() + "}_" + std::to_string(n);
    }
    return "?";
}

IndexScheme IndexScheme::unordered_pairs(int n)
{
    IndexScheme s;
    s.kind_ = SchemeKind::unordered_pairs;
    s.n_ = n;
    s.k_ = 2;
    s.labels_ = k_subsets(n, 2);
    return s;
}

IndexScheme IndexScheme::ordered_pairs(int n)
{
    IndexScheme s;
    s.kind_ = SchemeKind::ordered_pairs;
    s.n_ = n;
    s.k_ = 2;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i != j) s.labels_.push_back({i, j});
        }
    }
    return s;
}

IndexScheme IndexScheme::subsets(int n, int k)
{
    IndexScheme s;
    s.kind_ = SchemeKind::subsets;
    s.n_ = n;
    s.k_ = k;
    s.labels_ = k_subsets(n, k);
    return s;
}

std::size_t IndexScheme::index_of(std::vector<int> tuple) const
{
    if (kind_ != SchemeKind::ordered_pairs) std::sort(tuple.begin(), tuple.end());
    auto it = std::lower_bound(labels_.begin(), labels_.end(), tuple);
    if (it == labels_.end() || *it != tuple) return labels_.size();
    return static_cast<std::size_t>(it - labels_.begin());
}

std::string IndexScheme::label(std::size_t i, bool complement) const
{
    const auto& l = labels_.at(i);
    std::string s;
    if (kind_ == SchemeKind::ordered_pairs) return "(" + std::to_string(l[0]) + "," + std::to_string(l[1]) + ")";
    if (complement) {
        s = "~";
        for (int x = 1; x <= n_; ++x) {
            if (std::find(l.begin(), l.end(), x) == l.end()) s += std::to_string(x);
        }
        return s;
    }
    for (int x : l) s += std::to_string(x);
    return s;
}

bool IndexScheme::compatible(const IndexScheme& other) const
{
    auto norm = [](const IndexScheme& s) {
        return std::make_tuple(s.kind_ == SchemeKind::ordered_pairs, s.n_, s.k_);
    };
    return norm(*this) == norm(other);
}

std::string IndexScheme::describe() const
{
    switch (kind_) {
        case SchemeKind::unordered_pairs: return "unordered_pairs(" + std::to_string(n_) + ")";
        case SchemeKind::ordered_pairs: return "ordered_pairs(" + std::to_string(n_) + ")";
        case SchemeKind::subsets: return "subsets(" + std::to_string(n_) + "," + std::to_string(k_) + ")";
    }
    return "?";
}

std::string RowTag::str() const
{
    switch (kind) {
        case Kind::none: return "-";
        case Kind::nn: return "NN{" + join_points(points) + "}";
        case Kind::simplex: return "ST{" + join_points(points) + ";" + std::to_string(apex) + "}";
        case Kind::triangle: return "T{" + join_points(points) + ";" + std::to_string(apex) + "}";
        case Kind::oriented_triangle: return "OT{" + join_points(points) + ";" + std::to_string(apex) + "}";
        case Kind::generator: return descriptor;
    }
    return "-";
}

RowTag RowTag::parse(std::string_view text)
{
    RowTag t;
    if (text == "-" || text.empty()) return t;
    auto parse_points = [](std::string_view body, std::vector<int>& pts) {
        std::stringstream ss{std::string(body)};
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) throw InputError("bad row tag");
            pts.push_back(std::stoi(item));
        }
    };
    auto open = text.find('{');
    if (open == std::string_view::npos || text.back() != '}') {
        throw InputError("bad row tag '" + std::string(text) + "'");
    }
    std::string_view head = text.substr(0, open);
    std::string_view body = text.substr(open + 1, text.size() - open - 2);
    if (head == "NN") {
        t.kind = Kind::nn;
        parse_points(body, t.points);
        return t;
    }
    if (head == "ST" || head == "T" || head == "OT") {
        t.kind = head == "ST" ? Kind::simplex : (head == "T" ? Kind::triangle : Kind::oriented_triangle);
        auto semi = body.find(';');
        if (semi == std::string_view::npos) throw InputError("bad row tag '" + std::string(text) + "'");
        parse_points(body.substr(0, semi), t.points);
        t.apex = std::stoi(std::string(body.substr(semi + 1)));
        return t;
    }
    t.kind = Kind::generator;
    t.descriptor = std::string(text);
    return t;
}

void Representation::check_invariants() const
{
    std::set<RatVector> seen;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != scheme.size()) {
            throw InputError("row " + std::to_string(i) + " has length " + std::to_string(rows[i].size()) +
                             ", scheme has " + std::to_string(scheme.size()));
        }
        if (!is_primitive_integer(rows[i])) throw InputError("row " + std::to_string(i) + " is not primitive integer");
        if (!seen.insert(rows[i]).second) throw InputError("row " + std::to_string(i) + " is a duplicate");
    }
    if (!tags.empty() && tags.size() != rows.size()) throw InputError("tag count does not match row count");
}

IndexScheme index_scheme(const ConeSpec& spec)
{
    spec.validate(false);
    switch (spec.family) {
        case Family::MET:
        case Family::CUT: return IndexScheme::unordered_pairs(spec.n);
        case Family::QMET:
        case Family::OMCUT: return IndexScheme::ordered_pairs(spec.n);
        default: return IndexScheme::subsets(spec.n, spec.m + 1);
    }
}

Representation build_h(const ConeSpec& spec)
{
    spec.validate(false);
    if (!spec.is_h_family()) {
        throw InputError(spec.name() + ": V-family; use build_generators");
    }
    Representation rep;
    rep.scheme = index_scheme(spec);
    rep.kind = RepKind::H;
    const auto& sch = rep.scheme;
    auto push = [&](RatVector row, RowTag tag) {
        rep.rows.push_back(std::move(row));
        rep.tags.push_back(std::move(tag));
    };

    if (spec.family == Family::QMET) {
        for (std::size_t i = 0; i < sch.size(); ++i) {
            RatVector r = zeros(sch.size());
            r[i] = 1;
            push(std::move(r), RowTag{RowTag::Kind::nn, sch.labels()[i], 0, {}});
        }
        for (int x = 1; x <= spec.n; ++x) {
            for (int z = 1; z <= spec.n; ++z) {
                if (z == x) continue;
                for (int y = 1; y <= spec.n; ++y) {
                    if (y == x || y == z) continue;
                    RatVector r = zeros(sch.size());
                    r[sch.index_of({x, y})] = 1;
                    r[sch.index_of({y, z})] = 1;
                    r[sch.index_of({x, z})] = -1;
                    push(std::move(r), RowTag{RowTag::Kind::oriented_triangle, {x, z}, y, {}});
                }
            }
        }
        return rep;
    }

    // MET is the (1,1) case of the simplex rows without non-negativity.
    const int m = spec.m;
    const mpz_class p = spec.s.numerator();
    const mpz_class q = spec.s.denominator();
    const Rat neg_p = Rat(mpz_class(-p));
    const Rat q_r = Rat(q);
    for (const auto& t : k_subsets(spec.n, m + 2)) {
        for (int x : t) {
            RatVector r = zeros(sch.size());
            for (int y : t) {
                std::vector<int> face;
                for (int z : t) {
                    if (z != y) face.push_back(z);
                }
                r[sch.index_of(face)] = (y == x) ? neg_p : q_r;
            }
            if (spec.family == Family::MET) {
                std::vector<int> pair;
                for (int z : t) {
                    if (z != x) pair.push_back(z);
                }
                push(std::move(r), RowTag{RowTag::Kind::triangle, pair, x, {}});
            } else {
                push(std::move(r), RowTag{RowTag::Kind::simplex, t, x, {}});
            }
        }
    }
    if (spec.family != Family::MET) {
        for (std::size_t i = 0; i < sch.size(); ++i) {
            RatVector r = zeros(sch.size());
            r[i] = 1;
            push(std::move(r), RowTag{RowTag::Kind::nn, sch.labels()[i], 0, {}});
        }
    }
    return rep;
}

Representation redundancy_filter(const Representation& rep)
{
    if (rep.kind != RepKind::H) throw InputError("redundancy_filter: H-representation required");
    const std::size_t d = rep.dim();
    std::vector<bool> alive(rep.rows.size(), true);
    for (std::size_t r = 0; r < rep.rows.size(); ++r) {
        // Row r is irredundant iff some x satisfies the other live rows and r·x < 0.
        std::vector<RatVector> cons;
        RatVector rhs;
        for (std::size_t o = 0; o < rep.rows.size(); ++o) {
            if (o == r || !alive[o]) continue;
            cons.push_back(rep.rows[o]);
            rhs.emplace_back(0);
        }
        cons.push_back(rep.rows[r]);
        rhs.emplace_back(-1);
        auto out = solve_lp(RatMatrix::from_rows(cons, d), rhs, rep.rows[r], Sense::minimize);
        if (out.status == LpStatus::optimal && out.value->sign() == 0) alive[r] = false;
    }
    Representation res;
    res.scheme = rep.scheme;
    res.kind = rep.kind;
    for (std::size_t r = 0; r < rep.rows.size(); ++r) {
        if (!alive[r]) continue;
        res.rows.push_back(rep.rows[r]);
        if (!rep.tags.empty()) res.tags.push_back(rep.tags[r]);
    }
    return res;
}

RatVector delta_vector(DeltaKind kind, const std::vector<std::vector<int>>& parts, const ConeSpec& spec)
{
    IndexScheme sch = index_scheme(spec);
    const int n = spec.n;
    RatVector v = zeros(sch.size());
    switch (kind) {
        case DeltaKind::cut:
        case DeltaKind::oriented_cut: {
            bool oriented = kind == DeltaKind::oriented_cut;
            if (oriented != (sch.kind() == SchemeKind::ordered_pairs) || sch.k() != 2) {
                throw InputError("delta_vector: cut kind does not match the cone's index scheme");
            }
            if (parts.empty() || parts.size() > 2) throw InputError("delta_vector: a cut takes S or (S, V_n - S)");
            auto owner = block_of(parts, n, parts.size() == 2);
            for (std::size_t i = 0; i < sch.size(); ++i) {
                int x = sch.labels()[i][0];
                int y = sch.labels()[i][1];
                bool xin = owner[x] == 0;
                bool yin = owner[y] == 0;
                if (oriented ? (xin && !yin) : (xin != yin)) v[i] = 1;
            }
            return v;
        }
        case DeltaKind::multicut:
        case DeltaKind::oriented_multicut: {
            bool oriented = kind == DeltaKind::oriented_multicut;
            if (oriented != (sch.kind() == SchemeKind::ordered_pairs) || sch.k() != 2) {
                throw InputError("delta_vector: multicut kind does not match the cone's index scheme");
            }
            if (parts.size() < 2) throw InputError("delta_vector: a multicut needs q >= 2 blocks");
            auto owner = block_of(parts, n, true);
            for (std::size_t i = 0; i < sch.size(); ++i) {
                int a = owner[sch.labels()[i][0]];
                int b = owner[sch.labels()[i][1]];
                if (oriented ? (a < b) : (a != b)) v[i] = 1;
            }
            return v;
        }
        case DeltaKind::partition_hemimetric: {
            if (sch.kind() == SchemeKind::ordered_pairs) {
                throw InputError("delta_vector: partition hemi-metrics live on subsets");
            }
            if (static_cast<int>(parts.size()) != sch.k()) {
                throw InputError("delta_vector: need exactly m+1 = " + std::to_string(sch.k()) + " blocks");
            }
            auto owner = block_of(parts, n, true);
            for (std::size_t i = 0; i < sch.size(); ++i) {
                std::vector<bool> hit(parts.size(), false);
                bool ok = true;
                for (int x : sch.labels()[i]) {
                    if (hit[owner[x]]) {
                        ok = false;
                        break;
                    }
                    hit[owner[x]] = true;
                }
                if (ok) v[i] = 1;
            }
            return v;
        }
    }
    return v;
}

Representation build_generators(const ConeSpec& spec, const Representation* smet_rays)
{
    spec.validate();
    Representation rep;
    rep.scheme = index_scheme(spec);
    rep.kind = RepKind::V;
    auto push = [&](RatVector v, std::string desc) {
        rep.rows.push_back(std::move(v));
        rep.tags.push_back(RowTag{RowTag::Kind::generator, {}, 0, std::move(desc)});
    };
    switch (spec.family) {
        case Family::CUT: {
            // S ranges over proper subsets containing 1, one per complementary pair.
            const int n = spec.n;
            for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
                std::vector<int> s{1};
                for (int x = 2; x <= n; ++x) {
                    if (mask & (1u << (x - 2))) s.push_back(x);
                }
                if (static_cast<int>(s.size()) == n) continue;
                push(delta_vector(DeltaKind::cut, {s}, spec), "cut{" + join_points(s) + "}");
            }
            break;
        }
        case Family::OMCUT: {
            std::set<RatVector> seen;
            for (const auto& part : set_partitions(spec.n)) {
                if (part.size() < 2) continue;
                std::vector<std::size_t> perm(part.size());
                std::iota(perm.begin(), perm.end(), 0);
                do {
                    std::vector<std::vector<int>> ordered;
                    for (auto i : perm) ordered.push_back(part[i]);
                    RatVector v = delta_vector(DeltaKind::oriented_multicut, ordered, spec);
                    if (seen.insert(v).second) push(std::move(v), "omcut" + blocks_text(ordered));
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
            break;
        }
        case Family::HCUT: {
            for (const auto& part : set_partitions(spec.n, spec.m + 1)) {
                push(delta_vector(DeltaKind::partition_hemimetric, part, spec), "alpha" + blocks_text(part));
            }
            break;
        }
        case Family::SCUT: {
            if (smet_rays == nullptr) throw InputError(spec.name() + ": SCUT needs the extreme rays of the matching SMET");
            if (smet_rays->kind != RepKind::V || !(smet_rays->scheme == rep.scheme)) {
                throw InputError(spec.name() + ": smet_rays must be a V-representation on " + rep.scheme.describe());
            }
            for (const auto& r : smet_rays->rows) {
                RatVector nr = normalize_ray(r);
                bool zero_one = std::all_of(nr.begin(), nr.end(), [](const Rat& x) { return x == Rat(0) || x == Rat(1); });
                if (zero_one) push(nr, "01ray");
            }
            break;
        }
        default: throw InputError(spec.name() + ": H-family; use build_h");
    }
    return rep;
}

RatVector zero_extension(const RatVector& d, const ConeSpec& spec)
{
    if (spec.family == Family::QMET || spec.family == Family::OMCUT) {
        throw InputError("zero_extension: needs a cone indexed by subsets");
    }
    IndexScheme from = IndexScheme::subsets(spec.n, spec.m + 1);
    require_scheme(d, from, "zero_extension");
    IndexScheme to = IndexScheme::subsets(spec.n + 1, spec.m + 2);
    RatVector out = zeros(to.size());
    for (std::size_t i = 0; i < to.size(); ++i) {
        const auto& l = to.labels()[i];
        if (l.back() != spec.n + 1) continue;
        std::vector<int> rest(l.begin(), l.end() - 1);
        out[i] = d[from.index_of(rest)];
    }
    return out;
}

RatVector vertex_splitting(const RatVector& d, const ConeSpec& spec)
{
    if (spec.family == Family::QMET || spec.family == Family::OMCUT) {
        throw InputError("vertex_splitting: needs a cone indexed by subsets");
    }
    IndexScheme from = IndexScheme::subsets(spec.n, spec.m + 1);
    require_scheme(d, from, "vertex_splitting");
    IndexScheme to = IndexScheme::subsets(spec.n + 1, spec.m + 1);
    const int n = spec.n;
    RatVector out = zeros(to.size());
    for (std::size_t i = 0; i < to.size(); ++i) {
        std::vector<int> l = to.labels()[i];
        bool has_n = std::find(l.begin(), l.end(), n) != l.end();
        bool has_n1 = l.back() == n + 1;
        if (has_n && has_n1) continue;
        if (has_n1) l.back() = n;
        out[i] = d[from.index_of(l)];
    }
    return out;
}

Membership is_member(const RatVector& v, const Representation& rep)
{
    if (rep.kind != RepKind::H) throw InputError("is_member: H-representation required");
    if (v.size() != rep.dim()) {
        throw InputError("is_member: vector length does not match scheme " + rep.scheme.describe());
    }
    Membership m;
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        if (dot(rep.rows[i], v).sign() < 0) {
            m.inside = false;
            m.violated.push_back(i);
        }
    }
    return m;
}

namespace {

int bfs_diameter(const std::vector<std::vector<std::size_t>>& adj)
{
    int diam = 0;
    for (std::size_t s = 0; s < adj.size(); ++s) {
        std::vector<int> dist(adj.size(), -1);
        std::queue<std::size_t> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            auto u = q.front();
            q.pop();
            for (auto w : adj[u]) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
            }
        }
        for (int x : dist) {
            if (x < 0) throw std::logic_error("closed-form graph is disconnected");
            diam = std::max(diam, x);
        }
    }
    return diam;
}

}  // namespace

SmetClosedForm smet_closed_form(int m, const Rat& s)
{
    if (m < 1) throw InputError("smet_closed_form: need m >= 1");
    if (s.sign() <= 0 || s >= Rat(m + 1)) {
        throw InputError("smet_closed_form: s must lie in (0, m+1); the cone collapses to 0 for s > m+1 "
                         "and to the all-ones half-line for s = m+1");
    }
    const int n = m + 2;
    const mpz_class fl = s.floor();
    const int ones = static_cast<int>(fl.get_si()) + 1;
    const Rat frac = s - Rat(fl);
    const bool integral = frac.is_zero();

    // Position i of the vector stands for the coordinate V_n - {point}; the
    // description is symmetric so positions are used directly.
    struct Ray {
        std::vector<int> one_pos;
        int frac_pos = -1;
    };
    std::vector<Ray> rays;
    for (const auto& sub : k_subsets(n, ones)) {
        std::vector<int> pos;
        for (int x : sub) pos.push_back(x - 1);
        if (integral) {
            rays.push_back({pos, -1});
            continue;
        }
        for (int f = 0; f < n; ++f) {
            if (std::find(pos.begin(), pos.end(), f) == pos.end()) rays.push_back({pos, f});
        }
    }

    SmetClosedForm cf;
    cf.ray_count = rays.size();
    for (const auto& r : rays) {
        RatVector v = zeros(static_cast<std::size_t>(n));
        for (int p : r.one_pos) v[static_cast<std::size_t>(p)] = 1;
        if (r.frac_pos >= 0) v[static_cast<std::size_t>(r.frac_pos)] = frac;
        cf.rays.push_back(normalize_ray(v));
    }
    std::sort(cf.rays.begin(), cf.rays.end());

    std::vector<std::vector<std::size_t>> adj(rays.size());
    for (std::size_t a = 0; a < rays.size(); ++a) {
        for (std::size_t b = a + 1; b < rays.size(); ++b) {
            bool edge = false;
            if (integral) {
                std::size_t common = 0;
                for (int p : rays[a].one_pos) {
                    if (std::find(rays[b].one_pos.begin(), rays[b].one_pos.end(), p) != rays[b].one_pos.end()) ++common;
                }
                edge = static_cast<int>(common) == ones - 1;
            } else {
                auto support = [](const Ray& r) {
                    std::vector<int> s = r.one_pos;
                    s.push_back(r.frac_pos);
                    std::sort(s.begin(), s.end());
                    return s;
                };
                bool same_support = support(rays[a]) == support(rays[b]);
                bool moved_frac = rays[a].one_pos == rays[b].one_pos;
                edge = same_support || moved_frac;
            }
            if (edge) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
        }
    }
    cf.skeleton_diameter = rays.size() > 1 ? bfs_diameter(adj) : 0;
    if (integral) {
        cf.ray_orbit_description = "all 0/1 vectors with " + std::to_string(ones) + " ones";
        cf.skeleton_kind = "J(" + std::to_string(n) + "," + std::to_string(ones) + ")";
    } else {
        cf.ray_orbit_description = std::to_string(ones) + " entries 1, one entry " + frac.str() + ", other entries 0";
        cf.skeleton_kind = "same support or same ones";
    }

    const Rat one(1);
    const Rat mr(m);
    if (s >= mr) {
        cf.ridge_kind = "K_" + std::to_string(n);
        cf.ridge_diameter = 1;
    } else if (s == one && m == 2) {
        cf.ridge_kind = "3-cube";
        cf.ridge_diameter = 3;
    } else if ((s == one && 1 < m - 1) || (s > one && s == Rat(m - 1))) {
        cf.ridge_kind = "K_{(" + std::to_string(n) + ")x2} - K_" + std::to_string(n);
        cf.ridge_diameter = 2;
    } else if (s > one && s < Rat(m - 1)) {
        cf.ridge_kind = "K_{(" + std::to_string(n) + ")x2}";
        cf.ridge_diameter = 2;
    }
    return cf;
}

}  // namespace polycone

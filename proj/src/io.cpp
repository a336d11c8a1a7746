#include "polycone/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace polycone {

namespace {

std::string trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return std::string(s);
}

[[noreturn]] void fail(std::size_t line, const std::string& what)
{
    throw InputError("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split(const std::string& s)
{
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

}  // namespace

IndexScheme parse_scheme(std::string_view text)
{
    std::string s = trim(text);
    auto open = s.find('(');
    if (open == std::string::npos || s.back() != ')') throw InputError("bad scheme '" + s + "'");
    std::string head = s.substr(0, open);
    std::string body = s.substr(open + 1, s.size() - open - 2);
    std::vector<int> args;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            args.push_back(std::stoi(item, &used));
            if (used != item.size()) throw InputError("bad scheme '" + s + "'");
        } catch (const std::logic_error&) {
            throw InputError("bad scheme '" + s + "'");
        }
    }
    bool sane = !args.empty() && args[0] >= 2 && args[0] <= 64;
    if (sane && args.size() == 2) sane = args[1] >= 1 && args[1] <= args[0];
    if (sane && args.size() == 2) {
        double count = 1;
        for (int i = 0; i < args[1]; ++i) count = count * (args[0] - i) / (i + 1);
        sane = count <= 1e6;
    }
    if (!sane) throw InputError("bad scheme '" + s + "'");
    if (head == "unordered_pairs" && args.size() == 1) return IndexScheme::unordered_pairs(args[0]);
    if (head == "ordered_pairs" && args.size() == 1) return IndexScheme::ordered_pairs(args[0]);
    if (head == "subsets" && args.size() == 2) return IndexScheme::subsets(args[0], args[1]);
    throw InputError("bad scheme '" + s + "'");
}

std::string write_representation(const Representation& rep)
{
    std::ostringstream out;
    out << "* scheme " << rep.scheme.describe() << '\n';
    for (const auto& t : rep.tags) out << "* tag " << t.str() << '\n';
    out << (rep.kind == RepKind::H ? "H-representation" : "V-representation") << '\n';
    out << "begin\n";
    out << rep.rows.size() << ' ' << rep.dim() + 1 << " rational\n";
    for (const auto& row : rep.rows) {
        out << 0;
        for (const auto& x : row) out << ' ' << x;
        out << '\n';
    }
    out << "end\n";
    return out.str();
}

Representation parse_representation(std::string_view text, const std::optional<IndexScheme>& fallback)
{
    std::vector<std::string> lines;
    {
        std::istringstream in{std::string(text)};
        std::string l;
        while (std::getline(in, l)) lines.push_back(l);
    }
    std::optional<IndexScheme> scheme;
    std::vector<RowTag> tags;
    std::optional<RepKind> kind;
    std::size_t i = 0;
    for (; i < lines.size(); ++i) {
        std::string l = trim(lines[i]);
        if (l.empty()) continue;
        if (l[0] == '*') {
            std::string body = trim(std::string_view(l).substr(1));
            try {
                if (body.rfind("scheme ", 0) == 0) scheme = parse_scheme(body.substr(7));
                if (body.rfind("tag ", 0) == 0) tags.push_back(RowTag::parse(trim(body.substr(4))));
            } catch (const InputError& e) {
                fail(i + 1, e.what());
            }
            continue;
        }
        if (l == "H-representation") kind = RepKind::H;
        else if (l == "V-representation") kind = RepKind::V;
        else if (l == "begin") break;
        else if (l.rfind("linearity", 0) == 0) fail(i + 1, "linearity lines are not supported");
        else fail(i + 1, "unexpected text '" + l + "'");
    }
    if (i == lines.size()) fail(std::max<std::size_t>(i, 1), "missing 'begin'");
    if (!kind) fail(i + 1, "missing H-representation or V-representation header");
    ++i;
    if (i == lines.size()) fail(i, "missing size line");
    auto size_fields = split(lines[i]);
    if (size_fields.size() != 3) fail(i + 1, "expected 'rows columns rational'");
    if (size_fields[2] != "rational" && size_fields[2] != "integer") fail(i + 1, "number type must be rational or integer");
    std::size_t rows = 0, cols = 0;
    try {
        std::size_t used = 0;
        rows = std::stoul(size_fields[0], &used);
        if (used != size_fields[0].size()) throw std::invalid_argument("rows");
        cols = std::stoul(size_fields[1], &used);
        if (used != size_fields[1].size()) throw std::invalid_argument("cols");
    } catch (const std::logic_error&) {
        fail(i + 1, "bad row or column count");
    }
    if (cols < 2) fail(i + 1, "need at least one coordinate");
    const std::size_t d = cols - 1;

    Representation rep;
    rep.kind = *kind;
    if (scheme) rep.scheme = *scheme;
    else if (fallback) rep.scheme = *fallback;
    else rep.scheme = IndexScheme::subsets(static_cast<int>(d), 1);
    if (rep.scheme.size() != d) fail(i + 1, "dimension " + std::to_string(d) + " does not match scheme " + rep.scheme.describe());

    std::set<RatVector> seen;
    for (std::size_t r = 0; r < rows; ++r) {
        ++i;
        if (i >= lines.size()) fail(i, "expected " + std::to_string(rows) + " rows, found " + std::to_string(r));
        auto fields = split(lines[i]);
        if (fields.size() != cols) {
            fail(i + 1, "expected " + std::to_string(cols) + " entries, found " + std::to_string(fields.size()));
        }
        RatVector row;
        try {
            if (!Rat::parse(fields[0]).is_zero()) fail(i + 1, "first entry must be 0 (homogeneous cone)");
            for (std::size_t c = 1; c < cols; ++c) row.push_back(Rat::parse(fields[c]));
        } catch (const InputError& e) {
            if (std::string(e.what()).rfind("line ", 0) == 0) throw;
            fail(i + 1, e.what());
        }
        bool zero = std::all_of(row.begin(), row.end(), [](const Rat& x) { return x.is_zero(); });
        if (zero) fail(i + 1, "zero row");
        row = normalize_ray(row);
        if (!seen.insert(row).second) fail(i + 1, "duplicate row");
        rep.rows.push_back(std::move(row));
    }
    ++i;
    while (i < lines.size() && trim(lines[i]).empty()) ++i;
    if (i >= lines.size() || trim(lines[i]) != "end") fail(std::min(i + 1, lines.size() + 1), "missing 'end'");
    if (!tags.empty()) {
        if (tags.size() != rep.rows.size()) fail(i + 1, "tag count does not match row count");
        rep.tags = std::move(tags);
    }
    return rep;
}

Representation read_representation_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_representation(buf.str());
}

void write_representation_file(const std::string& path, const Representation& rep)
{
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << write_representation(rep);
    if (!out) throw InputError("cannot write " + path);
}

}  // namespace polycone

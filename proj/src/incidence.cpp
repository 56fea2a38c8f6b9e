#include "unexpected/incidence.hpp"

#include <algorithm>
#include <set>

#include "unexpected/combinatorics.hpp"

namespace unexpected {

namespace {

template <class Field>
using Vec = std::vector<typename Field::value_type>;

template <class Field>
typename Field::value_type dot(const Field& F, const Vec<Field>& a, const Vec<Field>& b) {
    auto s = F.zero();
    for (std::size_t i = 0; i < a.size(); ++i) s = F.add(s, F.mul(a[i], b[i]));
    return s;
}

template <class Field>
bool all_zero(const Field& F, const Vec<Field>& v) {
    return std::all_of(v.begin(), v.end(), [&](const auto& x) { return F.is_zero(x); });
}

template <class Field>
Vec<Field> cross(const Field& F, const Vec<Field>& p, const Vec<Field>& q) {
    return {F.sub(F.mul(p[1], q[2]), F.mul(p[2], q[1])), F.sub(F.mul(p[2], q[0]), F.mul(p[0], q[2])),
            F.sub(F.mul(p[0], q[1]), F.mul(p[1], q[0]))};
}

template <class Field>
typename Field::value_type det3(const Field& F, const Vec<Field>& a, const Vec<Field>& b, const Vec<Field>& c) {
    return dot(F, a, cross(F, b, c));
}

/// Normal of the plane through three points of P^3 (zero when collinear).
template <class Field>
Vec<Field> plane_normal(const Field& F, const Vec<Field>& p, const Vec<Field>& q, const Vec<Field>& r) {
    Vec<Field> out(4);
    for (int i = 0; i < 4; ++i) {
        Vec<Field> a, b, c;
        for (int k = 0; k < 4; ++k) {
            if (k == i) continue;
            a.push_back(p[k]);
            b.push_back(q[k]);
            c.push_back(r[k]);
        }
        auto m = det3(F, a, b, c);
        out[i] = (i % 2) ? F.neg(m) : m;
    }
    return out;
}

template <class Field>
Vec<Field> normalized(const Field& F, Vec<Field> v) {
    auto it = std::find_if(v.begin(), v.end(), [&](const auto& x) { return !F.is_zero(x); });
    const auto s = F.inv(*it);
    for (auto& x : v) x = F.mul(x, s);
    return v;
}

template <class Field>
Coordinates to_coordinates(const Field& F, const Vec<Field>& v) {
    Coordinates c;
    for (const auto& x : v) c.push_back(F.to_rational(x));
    return c;
}

void build_pencils(IncidenceStructure& inc) {
    inc.pencils.assign(inc.point_count, {});
    for (std::size_t h = 0; h < inc.hyperplanes.size(); ++h)
        for (int p : inc.hyperplanes[h].members) inc.pencils[p].push_back(static_cast<int>(h));
}

template <class Field>
IncidenceStructure detect_impl(const Field& F, const PointConfiguration& config, int min_members, unsigned threads) {
    IncidenceStructure inc;
    inc.N = config.N();
    inc.point_count = config.size();
    inc.field = F.spec();
    const int n = static_cast<int>(config.size());
    std::vector<Vec<Field>> pts;
    for (const auto& p : config.points()) pts.push_back(to_field(F, p));

    auto members_of = [&](const Vec<Field>& h) {
        std::vector<int> m;
        for (int i = 0; i < n; ++i)
            if (F.is_zero(dot(F, h, pts[i]))) m.push_back(i);
        return m;
    };

    std::vector<Vec<Field>> found;
    std::vector<std::vector<int>> found_members;
    if (config.N() == 2) {
        // every pair lies on exactly one line; skip pairs already covered
        std::vector<char> covered(static_cast<std::size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (covered[i * n + j]) continue;
                auto line = normalized(F, cross(F, pts[i], pts[j]));
                auto m = members_of(line);
                for (int a : m)
                    for (int b : m) covered[a * n + b] = 1;
                found.push_back(std::move(line));
                found_members.push_back(std::move(m));
            }
        }
    } else {
        // candidate planes per first index, merged in index order for determinism
        std::vector<std::vector<Vec<Field>>> per_first(n);
        parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t i) {
            std::set<std::vector<std::string>> seen;
            for (int j = static_cast<int>(i) + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    auto h = plane_normal(F, pts[i], pts[j], pts[k]);
                    if (all_zero(F, h)) continue;
                    h = normalized(F, std::move(h));
                    std::vector<std::string> key;
                    for (const auto& x : h) key.push_back(F.to_rational(x).get_str());
                    if (seen.insert(key).second) per_first[i].push_back(std::move(h));
                }
        });
        std::set<std::vector<std::string>> seen;
        for (auto& list : per_first)
            for (auto& h : list) {
                std::vector<std::string> key;
                for (const auto& x : h) key.push_back(F.to_rational(x).get_str());
                if (!seen.insert(key).second) continue;
                auto m = members_of(h);
                found.push_back(std::move(h));
                found_members.push_back(std::move(m));
            }
    }

    for (std::size_t h = 0; h < found.size(); ++h) {
        if (static_cast<int>(found_members[h].size()) == n) inc.degenerate = true;
        if (static_cast<int>(found_members[h].size()) < min_members) continue;
        inc.hyperplanes.push_back(Hyperplane{to_coordinates(F, found[h]), std::move(found_members[h])});
    }
    build_pencils(inc);
    return inc;
}

}  // namespace

IncidenceStructure detect_hyperplanes(const PointConfiguration& config, int min_members, unsigned threads) {
    if (config.N() == 2) {
        if (min_members < 3) throw InvalidArgument("line detection needs min_members >= 3");
    } else if (config.N() == 3) {
        if (min_members < 4) throw InvalidArgument("plane detection needs min_members >= 4");
        if (config.size() > 64) throw InvalidArgument("plane detection is limited to 64 points");
    } else {
        throw DimensionMismatch("hyperplane detection supports P^2 and P^3 only");
    }
    const FieldSpec f = config.field();
    return with_field(f, [&](const auto& F) { return detect_impl(F, config, min_members, threads); });
}

IncidenceStructure declared_incidence(int N, std::size_t point_count, std::vector<std::vector<int>> members) {
    IncidenceStructure inc;
    inc.N = N;
    inc.point_count = point_count;
    inc.declared = true;
    for (auto& m : members) {
        std::sort(m.begin(), m.end());
        if (std::adjacent_find(m.begin(), m.end()) != m.end())
            throw ValidationFailed("declared hyperplane repeats a point");
        for (int p : m)
            if (p < 0 || static_cast<std::size_t>(p) >= point_count)
                throw ValidationFailed("declared member index " + std::to_string(p) + " out of range");
        if (m.size() == point_count) inc.degenerate = true;
        inc.hyperplanes.push_back(Hyperplane{std::nullopt, std::move(m)});
    }
    build_pencils(inc);
    validate_incidence(inc);
    return inc;
}

WeakTable weak_table(const IncidenceStructure& inc) {
    WeakTable t;
    for (const auto& h : inc.hyperplanes) ++t[static_cast<int>(h.members.size())];
    return t;
}

void validate_incidence(const IncidenceStructure& inc, const PointConfiguration* config) {
    std::set<std::vector<int>> member_sets;
    std::size_t incidences = 0;
    for (const auto& h : inc.hyperplanes) {
        if (!member_sets.insert(h.members).second) throw ValidationFailed("two hyperplanes have the same member set");
        incidences += h.members.size();
    }
    if (inc.pencils.size() != inc.point_count) throw ValidationFailed("pencil table has the wrong length");
    std::size_t pencil_total = 0;
    for (std::size_t p = 0; p < inc.pencils.size(); ++p) {
        pencil_total += inc.pencils[p].size();
        for (int h : inc.pencils[p]) {
            const auto& m = inc.hyperplanes.at(h).members;
            if (!std::binary_search(m.begin(), m.end(), static_cast<int>(p)))
                throw ValidationFailed("pencil of point " + std::to_string(p) + " lists a hyperplane missing it");
        }
    }
    if (pencil_total != incidences) throw ValidationFailed("double counting of incidences fails");
    if (inc.N == 2) {
        // two points span one line
        std::set<std::pair<int, int>> pairs;
        for (const auto& h : inc.hyperplanes)
            for (std::size_t a = 0; a < h.members.size(); ++a)
                for (std::size_t b = a + 1; b < h.members.size(); ++b)
                    if (!pairs.emplace(h.members[a], h.members[b]).second)
                        throw ValidationFailed("points " + std::to_string(h.members[a]) + " and " +
                                               std::to_string(h.members[b]) + " lie on two declared lines");
    }
    if (!config) return;
    if (config->size() != inc.point_count) throw ValidationFailed("incidence and configuration sizes differ");
    with_field(config->field(), [&](const auto& F) {
        for (std::size_t h = 0; h < inc.hyperplanes.size(); ++h) {
            const auto& hp = inc.hyperplanes[h];
            if (!hp.coefficients) continue;
            const auto c = to_field(F, *hp.coefficients);
            std::vector<int> actual;
            for (std::size_t i = 0; i < config->size(); ++i) {
                const auto p = to_field(F, config->point(i));
                auto s = F.zero();
                for (std::size_t k = 0; k < p.size(); ++k) s = F.add(s, F.mul(c[k], p[k]));
                if (F.is_zero(s)) actual.push_back(static_cast<int>(i));
            }
            if (actual != hp.members)
                throw ValidationFailed("hyperplane " + std::to_string(h) + " member list is not exact");
        }
        return 0;
    });
}

PointConfiguration dualize(const std::vector<Coordinates>& lines, const FieldSpec& field, std::string name) {
    std::set<Coordinates> seen;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].size() != 3) throw DimensionMismatch("dualize expects lines of P^2");
        if (!seen.insert(normalize_point(lines[i], field)).second)
            throw DuplicateLine("line " + std::to_string(i) + " repeats an earlier line");
    }
    return PointConfiguration(2, field, lines, std::move(name));
}

std::vector<PencilEntry> lines_through(const IncidenceStructure& inc, std::size_t point_index) {
    if (point_index >= inc.point_count) throw InvalidArgument("point index out of range");
    std::vector<PencilEntry> out;
    for (int h : inc.pencils[point_index])
        out.push_back({h, static_cast<int>(inc.hyperplanes[h].members.size())});
    return out;
}

std::vector<PencilEntry> lines_through(const IncidenceStructure& inc, const Coordinates& B) {
    if (B.size() != static_cast<std::size_t>(inc.N + 1)) throw DimensionMismatch("B has the wrong arity");
    std::vector<PencilEntry> out;
    with_field(inc.field, [&](const auto& F) {
        const auto b = to_field(F, B);
        for (std::size_t h = 0; h < inc.hyperplanes.size(); ++h) {
            const auto& hp = inc.hyperplanes[h];
            if (!hp.coefficients) throw InvalidArgument("declared incidence has no coefficients to test B against");
            const auto c = to_field(F, *hp.coefficients);
            auto s = F.zero();
            for (std::size_t k = 0; k < b.size(); ++k) s = F.add(s, F.mul(c[k], b[k]));
            if (F.is_zero(s)) out.push_back({static_cast<int>(h), static_cast<int>(hp.members.size())});
        }
        return 0;
    });
    return out;
}

nlohmann::json weak_table_to_json(const WeakTable& table) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : table) j[std::to_string(k)] = v;
    return j;
}

WeakTable weak_table_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InvalidArgument("weak table must be an object");
    WeakTable t;
    for (const auto& [k, v] : j.items()) {
        std::size_t used = 0;
        int key = 0;
        try {
            key = std::stoi(k, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != k.size() || key < 2) throw InvalidArgument("weak table key '" + k + "' is not an integer >= 2");
        if (!v.is_number_integer() || v.get<long long>() < 0)
            throw InvalidArgument("weak table count for " + k + " must be a non-negative integer");
        if (v.get<long long>() > 0) t[key] = v.get<long long>();
    }
    return t;
}

nlohmann::json incidence_to_json(const IncidenceStructure& inc) {
    nlohmann::json hs = nlohmann::json::array();
    for (const auto& h : inc.hyperplanes) {
        nlohmann::json c = nullptr;
        if (h.coefficients) {
            c = nlohmann::json::array();
            for (const auto& q : *h.coefficients) c.push_back(q.get_str());
        }
        hs.push_back({{"coefficients", c}, {"members", h.members}});
    }
    return {{"N", inc.N},
            {"point_count", inc.point_count},
            {"declared", inc.declared},
            {"degenerate", inc.degenerate},
            {"hyperplanes", hs},
            {"weak_table", weak_table_to_json(weak_table(inc))}};
}

}  // namespace unexpected

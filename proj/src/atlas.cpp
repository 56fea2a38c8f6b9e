#include "unexpected/atlas.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace unexpected {

std::string to_string(SourceTag tag) {
    switch (tag) {
        case SourceTag::PaperFigure: return "paper-figure";
        case SourceTag::ExternalReference: return "external-reference";
        case SourceTag::Generated: return "generated";
    }
    return "generated";
}

SourceTag source_tag_from_string(const std::string& s) {
    if (s == "paper-figure") return SourceTag::PaperFigure;
    if (s == "external-reference") return SourceTag::ExternalReference;
    if (s == "generated") return SourceTag::Generated;
    throw InvalidArgument("unknown source tag '" + s + "'");
}

int rich_threshold(int N) { return N == 2 ? 3 : 4; }

const PointConfiguration& ConfigurationRecord::points() const {
    if (!config) throw InvalidArgument("record '" + name + "' has declared incidence only; coordinates are unavailable");
    return *config;
}

IncidenceStructure ConfigurationRecord::incidence(unsigned threads) const {
    if (declared_incidence) {
        auto inc = unexpected::declared_incidence(N, point_count, *declared_incidence);
        if (config) {
            // attach coefficients from detection so external points can be tested
            const auto det = detect_hyperplanes(*config, rich_threshold(N), threads);
            for (auto& h : inc.hyperplanes)
                for (const auto& d : det.hyperplanes)
                    if (d.members == h.members) h.coefficients = d.coefficients;
            inc.declared = false;
            inc.field = field;
        }
        return inc;
    }
    if (!config) throw InvalidArgument("record '" + name + "' has neither coordinates nor member lists");
    return detect_hyperplanes(*config, rich_threshold(N), threads);
}

WeakTable ConfigurationRecord::table(unsigned threads) const {
    if (!config && !declared_incidence) {
        if (!expected_weak_table) throw InvalidArgument("record '" + name + "' carries no incidence data");
        return *expected_weak_table;
    }
    return weak_table(incidence(threads));
}

bool operator==(const ConfigurationRecord& a, const ConfigurationRecord& b) {
    const bool same_points = a.config.has_value() == b.config.has_value() &&
                             (!a.config || (a.config->points() == b.config->points() && a.config->N() == b.config->N()));
    return a.name == b.name && a.N == b.N && a.field == b.field && a.point_count == b.point_count && same_points &&
           a.declared_incidence == b.declared_incidence && a.expected_weak_table == b.expected_weak_table &&
           a.source == b.source && a.citation == b.citation;
}

FieldSpec field_with_unity(u64 order, const std::optional<FieldSpec>& requested) {
    if (requested) {
        if (!requested->is_prime()) {
            if (order <= 2) return *requested;
            throw FieldLacksUnity("QQ has no primitive " + std::to_string(order) + "-th root of unity");
        }
        if ((requested->p - 1) % order != 0)
            throw FieldLacksUnity(requested->to_string() + " has no primitive " + std::to_string(order) +
                                  "-th root of unity");
        return *requested;
    }
    return FieldSpec::prime(find_prime_with_unity(order, 62));
}

namespace {

ConfigurationRecord make_record(std::string name, PointConfiguration config, SourceTag source, std::string citation) {
    ConfigurationRecord r;
    r.name = std::move(name);
    r.N = config.N();
    r.field = config.field();
    r.point_count = config.size();
    r.config = std::move(config);
    r.source = source;
    r.citation = std::move(citation);
    return r;
}

Rational residue(u64 v) { return Rational(mpz_class(static_cast<unsigned long>(v))); }

}  // namespace

ConfigurationRecord gen_a4k1(int k, const std::optional<FieldSpec>& field) {
    if (k < 2) throw InvalidArgument("A(4k+1,1) needs k >= 2 (a regular 2k-gon with 2k >= 4)");
    const FieldSpec f = field_with_unity(static_cast<u64>(4 * k), field);
    const PrimeField F(f.p);
    const u64 zeta = primitive_root_of_unity(f.p, static_cast<u64>(4 * k));
    const u64 omega = F.mul(zeta, zeta);
    // isotropic coordinates u = x + iy, v = x - iy, z
    std::vector<Coordinates> lines;
    for (int j = 0; j < 2 * k; ++j) {
        const u64 w = pow_mod(omega, static_cast<u64>(j), f.p);
        lines.push_back({residue(F.inv(w)), residue(w), residue(F.neg(2))});
    }
    for (int i = 0; i < 2 * k; ++i) lines.push_back({1, residue(pow_mod(zeta, static_cast<u64>(2 * i), f.p)), 0});
    lines.push_back({0, 0, 1});
    auto rec = make_record("a4k1_k" + std::to_string(k), dualize(lines, f, "a4k1_k" + std::to_string(k)),
                           SourceTag::Generated,
                           "dual of A(" + std::to_string(4 * k + 1) + ",1): sides and symmetry axes of a regular " +
                               std::to_string(2 * k) + "-gon and the line at infinity");
    WeakTable t;
    if (k * (k - 1) > 0) t[3] += 2LL * k * (k - 1);
    t[4] += k;
    t[2 * k] += 1;
    rec.expected_weak_table = t;
    return rec;
}

FermatSets gen_fermat_sets(const std::optional<FieldSpec>& field) {
    const FieldSpec f = field_with_unity(6, field);
    const PrimeField F(f.p);
    const u64 e6 = primitive_root_of_unity(f.p, 6);
    std::vector<u64> roots6, roots3;
    for (u64 i = 0; i < 6; ++i) roots6.push_back(pow_mod(e6, i, f.p));
    for (u64 i = 0; i < 3; ++i) roots3.push_back(pow_mod(e6, 2 * i, f.p));
    const std::vector<Coordinates> T{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    auto fermat = [&](const std::vector<u64>& roots) {
        std::vector<Coordinates> pts;
        for (u64 a : roots)
            for (u64 b : roots) pts.push_back({residue(F.mul(a, b)), residue(b), 1});
        return pts;
    };
    auto f3 = fermat(roots3), f6 = fermat(roots6);
    auto with_t = [&](std::vector<Coordinates> pts) {
        pts.insert(pts.end(), T.begin(), T.end());
        return pts;
    };
    const std::string cite = "Fermat configuration: intersection points of (x^m-y^m)(y^m-z^m)(z^m-x^m)=0 with T";
    FermatSets out;
    out.F3 = make_record("fermat_f3", PointConfiguration(2, f, with_t(f3), "fermat_f3"), SourceTag::Generated, cite);
    out.F6 = make_record("fermat_f6", PointConfiguration(2, f, with_t(f6), "fermat_f6"), SourceTag::Generated, cite);
    out.T = make_record("fermat_t", PointConfiguration(2, f, T, "fermat_t"), SourceTag::Generated, cite);
    std::set<Coordinates> in_f3(f3.begin(), f3.end());
    std::vector<Coordinates> z;
    for (const auto& p : f6)
        if (!in_f3.count(p)) z.push_back(p);
    out.Z = make_record("fermat_z", PointConfiguration(2, f, with_t(z), "fermat_z"), SourceTag::Generated,
                        "(F6 \\ F3) u T, 30 points");
    out.Z.expected_weak_table = WeakTable{{4, 9}, {7, 9}};
    const auto all6 = with_t(f6);
    int idx = 0;
    for (u64 a : roots3) {
        for (u64 b : roots3) {
            // P = (ab, b, 1) lies on x = a y, y = b z and x = ab z
            const std::vector<Coordinates> lines{{1, residue(F.neg(a)), 0},
                                                 {0, 1, residue(F.neg(b))},
                                                 {1, 0, residue(F.neg(F.mul(a, b)))}};
            std::vector<Coordinates> keep;
            for (const auto& p : all6) {
                bool on = false;
                for (const auto& l : lines) {
                    u64 s = 0;
                    for (int c = 0; c < 3; ++c) s = F.add(s, F.mul(F.from_rational(l[c]), F.from_rational(p[c])));
                    on = on || s == 0;
                }
                if (!on) keep.push_back(p);
            }
            const std::string name = "fermat_z1_p" + std::to_string(idx++);
            out.Z1.push_back(make_record(name, PointConfiguration(2, f, keep, name), SourceTag::Generated,
                                         "F6 minus the points on the three F3-lines through P"));
            out.Z1_centers.push_back({residue(F.mul(a, b)), residue(b), 1});
        }
    }
    return out;
}

ConfigurationRecord gen_d4() {
    std::vector<Coordinates> pts;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int s : {1, -1}) {
                Coordinates p(4, 0);
                p[i] = 1;
                p[j] = s;
                pts.push_back(p);
            }
    auto rec = make_record("d4", PointConfiguration(3, FieldSpec::rational(), pts, "d4"), SourceTag::ExternalReference,
                           "D4 root configuration: the 12 points e_i +- e_j of P^3");
    rec.expected_weak_table = WeakTable{{6, 12}};
    return rec;
}

ConfigurationRecord gen_penrose20(const std::optional<FieldSpec>& field) {
    const FieldSpec f = field_with_unity(3, field);
    const PrimeField F(f.p);
    const u64 w = primitive_root_of_unity(f.p, 3);
    const u64 w2 = F.mul(w, w);
    // entries: 0, 1, -1, and +-w, +-w^2 encoded as 2, -2, 3, -3
    const int table[20][4] = {
        {0, 0, 1, 0},   {0, 1, 2, -1},  {0, 1, 2, -3},  {0, 1, 3, -1},  {1, 0, 0, 0},
        {1, 0, -1, -1}, {1, 0, -1, -2}, {1, 0, -1, -3}, {1, 0, -2, -2}, {1, 0, -3, -2},
        {1, 0, -3, -3}, {1, 2, 0, 1},   {1, 2, 0, 3},   {1, 3, 0, 1},   {1, -1, 1, 0},
        {1, -1, 2, 0},  {1, -1, 3, 0},  {1, -2, 2, 0},  {1, -3, 2, 0},  {1, -3, 3, 0},
    };
    auto value = [&](int code) -> u64 {
        const u64 mag = std::abs(code) == 2 ? w : std::abs(code) == 3 ? w2 : static_cast<u64>(std::abs(code));
        return code < 0 ? F.neg(mag) : mag;
    };
    std::vector<Coordinates> pts;
    for (const auto& row : table) {
        Coordinates p;
        for (int c : row) p.push_back(residue(value(c)));
        pts.push_back(p);
    }
    auto rec = make_record("penrose20", PointConfiguration(3, f, pts, "penrose20"), SourceTag::ExternalReference,
                           "20-point subconfiguration of the Penrose configuration "
                           "I = (xyzw, w(x^3-y^3+z^3), z(x^3+y^3+w^3), y(-x^3+z^3+w^3), x(y^3+z^3-w^3))");
    const auto det = detect_hyperplanes(*rec.config, 4);
    std::vector<std::vector<int>> rich;
    for (const auto& h : det.hyperplanes)
        if (h.members.size() == 8) rich.push_back(h.members);
    rec.declared_incidence = rich;
    return rec;
}

ConfigurationRecord gen_dk_points(const std::string& variant) {
    std::vector<Coordinates> pts{{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {2, -2, 1}, {-1, -3, 1}, {3, 5, 1}, {4, 1, 1}};
    if (variant == "nine") {
        pts.push_back({-3, 5, 1});
        pts.push_back({-5, 2, 1});
    } else if (variant != "seven") {
        throw InvalidArgument("dk variant must be 'seven' or 'nine'");
    }
    const std::string name = "dk_" + variant;
    auto rec = make_record(name, PointConfiguration(2, FieldSpec::rational(), pts, name), SourceTag::PaperFigure,
                           "explicit points whose interpolation locus is a curve of degree d(d-1)");
    return rec;
}

ConfigurationRecord gen_a15_1(const std::optional<FieldSpec>& field) {
    const FieldSpec f = field_with_unity(5, field);
    const PrimeField F(f.p);
    const u64 z = primitive_root_of_unity(f.p, 5);
    const u64 phi = F.neg(F.add(pow_mod(z, 2, f.p), pow_mod(z, 3, f.p)));
    const u64 iphi = F.sub(phi, 1);
    std::vector<Coordinates> pts{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int rot = 0; rot < 3; ++rot)
        for (int s1 : {1, -1})
            for (int s2 : {1, -1}) {
                std::vector<u64> v{phi, s1 > 0 ? iphi : F.neg(iphi), s2 > 0 ? u64{1} : F.neg(1)};
                std::rotate(v.begin(), v.begin() + rot, v.end());
                pts.push_back({residue(v[0]), residue(v[1]), residue(v[2])});
            }
    auto rec = make_record("a15_1", PointConfiguration(2, f, pts, "a15_1"), SourceTag::Generated,
                           "dual of A(15,1): the 15 two-fold rotation axes of the icosahedron");
    rec.expected_weak_table = WeakTable{{3, 10}, {5, 6}};
    return rec;
}

ConfigurationRecord gen_a15_1_minus_one(const std::optional<FieldSpec>& field) {
    auto full = gen_a15_1(field);
    const std::vector<int> drop{0};
    auto rec = make_record("a15_1_minus_one", full.config->without(drop, "a15_1_minus_one"), SourceTag::Generated,
                           "dual of A(15,1) with one point removed");
    rec.expected_weak_table = WeakTable{{3, 8}, {4, 2}, {5, 4}};
    return rec;
}

namespace {

ConfigurationRecord declared(std::string name, std::size_t n, WeakTable t, std::string citation) {
    ConfigurationRecord r;
    r.name = std::move(name);
    r.N = 2;
    r.field = FieldSpec::rational();
    r.point_count = n;
    r.expected_weak_table = std::move(t);
    r.source = SourceTag::PaperFigure;
    r.citation = std::move(citation);
    return r;
}

}  // namespace

ConfigurationRecord declared_a13_3() {
    return declared("a13_3", 13, {{3, 10}, {4, 3}, {5, 2}}, "weak combinatorics of the dual of A(13,3)");
}

ConfigurationRecord declared_a30_3() {
    return declared("a30_3", 30, {{3, 44}, {4, 17}, {5, 6}, {6, 1}, {7, 1}, {8, 2}},
                    "weak combinatorics of the dual of A(30,3)");
}

ConfigurationRecord declared_a30_3_minus_one() {
    return declared("a30_3_minus_one", 29, {{3, 42}, {4, 18}, {5, 5}, {7, 2}, {8, 1}},
                    "weak combinatorics of the dual of A(30,3) minus the point on eight lines");
}

std::vector<std::string> validate_record(const ConfigurationRecord& rec, unsigned threads) {
    std::vector<std::string> passed;
    auto fail = [&](const std::string& what) { throw ValidationFailed(rec.name + ": " + what); };
    if (rec.config) {
        if (rec.config->size() != rec.point_count) fail("point_count disagrees with the coordinates");
        if (rec.config->N() != rec.N) fail("N disagrees with the coordinates");
        if (!(rec.config->field() == rec.field)) fail("field disagrees with the coordinates");
    }
    if (rec.expected_weak_table) {
        long long pairs = 0;
        for (const auto& [i, c] : *rec.expected_weak_table) pairs += c * i * (i - 1) / 2;
        const long long total = static_cast<long long>(rec.point_count) * (rec.point_count - 1) / 2;
        if (rec.N == 2 && pairs > total) fail("weak table needs more point pairs than exist");
        passed.push_back("pair-count inequality");
    }
    if (!rec.config && !rec.declared_incidence) {
        passed.push_back("declared weak table accepted without coordinates");
        return passed;
    }
    IncidenceStructure inc;
    if (rec.config) {
        const auto det = detect_hyperplanes(*rec.config, rich_threshold(rec.N), threads);
        validate_incidence(det, &*rec.config);
        passed.push_back("detected hyperplanes are exact and maximal");
        if (rec.declared_incidence) {
            std::set<std::vector<int>> detected;
            for (const auto& h : det.hyperplanes) detected.insert(h.members);
            for (auto m : *rec.declared_incidence) {
                std::sort(m.begin(), m.end());
                if (!detected.count(m)) fail("declared hyperplane is not a detected hyperplane");
            }
            passed.push_back("declared hyperplanes match coordinates");
        }
        inc = rec.incidence(threads);
    } else {
        inc = unexpected::declared_incidence(rec.N, rec.point_count, *rec.declared_incidence);
        passed.push_back("declared incidence is consistent");
    }
    if (rec.expected_weak_table) {
        if (weak_table(inc) != *rec.expected_weak_table) fail("weak table differs from the expected table");
        passed.push_back("weak table reproduced");
    }
    if (rec.name == "d4") {
        if (inc.hyperplanes.size() != 12) fail("expected 12 planes");
        for (const auto& pencil : inc.pencils)
            if (pencil.size() != 6) fail("every point must lie on 6 planes");
        passed.push_back("12 six-point planes, 6 planes per point");
    }
    if (rec.name == "penrose20") {
        if (rec.point_count != 20 || inc.hyperplanes.size() != 20) fail("expected 20 points and 20 planes");
        for (const auto& h : inc.hyperplanes)
            if (h.members.size() != 8) fail("every plane must carry 8 points");
        for (const auto& pencil : inc.pencils)
            if (pencil.size() != 8) fail("every point must lie on 8 planes");
        passed.push_back("20 eight-point planes, 8 planes per point");
    }
    return passed;
}

std::vector<ConfigurationRecord> catalog() {
    std::vector<ConfigurationRecord> out;
    out.push_back(gen_dk_points("seven"));
    out.push_back(gen_dk_points("nine"));
    out.push_back(gen_a4k1(2));
    out.push_back(gen_a4k1(3));
    out.push_back(gen_a15_1());
    out.push_back(gen_a15_1_minus_one());
    out.push_back(gen_d4());
    out.push_back(gen_penrose20());
    auto fermat = gen_fermat_sets();
    out.push_back(fermat.F3);
    out.push_back(fermat.F6);
    out.push_back(fermat.Z);
    for (auto& z1 : fermat.Z1) out.push_back(std::move(z1));
    out.push_back(declared_a13_3());
    out.push_back(declared_a30_3());
    out.push_back(declared_a30_3_minus_one());
    return out;
}

ConfigurationRecord catalog_entry(const std::string& name) {
    std::string known;
    for (auto& r : catalog()) {
        if (r.name == name) return r;
        known += (known.empty() ? "" : ", ") + r.name;
    }
    throw InvalidArgument("unknown catalog entry '" + name + "' (known: " + known + ")");
}

nlohmann::json field_to_json(const FieldSpec& f) {
    if (f.is_prime()) return {{"kind", "prime"}, {"p", f.p}};
    return {{"kind", "rational"}};
}

FieldSpec field_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind")) throw InvalidArgument("field needs a 'kind'");
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "rational") return FieldSpec::rational();
    if (kind != "prime") throw InvalidArgument("field kind must be 'rational' or 'prime'");
    const auto& p = j.at("p");
    if (p.is_number_unsigned()) return FieldSpec::prime(p.get<u64>());
    if (p.is_string()) return FieldSpec::prime(std::stoull(p.get<std::string>()));
    throw InvalidArgument("field prime must be an integer");
}

nlohmann::json record_to_json(const ConfigurationRecord& rec) {
    nlohmann::json j;
    j["schema"] = 1;
    j["name"] = rec.name;
    j["N"] = rec.N;
    j["field"] = field_to_json(rec.field);
    j["point_count"] = rec.point_count;
    if (rec.config) {
        nlohmann::json pts = nlohmann::json::array();
        for (const auto& p : rec.config->points()) {
            nlohmann::json row = nlohmann::json::array();
            for (const auto& q : p) row.push_back(q.get_str());
            pts.push_back(row);
        }
        j["points"] = pts;
    }
    if (rec.declared_incidence) j["declared_incidence"] = *rec.declared_incidence;
    if (rec.expected_weak_table) j["expected_weak_table"] = weak_table_to_json(*rec.expected_weak_table);
    j["metadata"] = {{"source", to_string(rec.source)}, {"citation", rec.citation}};
    return j;
}

ConfigurationRecord record_from_json(const nlohmann::json& j) {
    auto schema_error = [](const std::string& what) { return ParseError("configuration schema: " + what, 0, 0); };
    try {
        if (!j.is_object()) throw schema_error("top level must be an object");
        if (!j.contains("schema") || j.at("schema") != 1) throw schema_error("expected \"schema\": 1");
        ConfigurationRecord rec;
        rec.name = j.at("name").get<std::string>();
        rec.N = j.at("N").get<int>();
        rec.field = j.contains("field") ? field_from_json(j.at("field")) : FieldSpec::rational();
        if (j.contains("points")) {
            std::vector<Coordinates> pts;
            for (const auto& row : j.at("points")) {
                Coordinates p;
                for (const auto& q : row) p.push_back(parse_rational(q.is_string() ? q.get<std::string>() : q.dump()));
                pts.push_back(std::move(p));
            }
            rec.config = PointConfiguration(rec.N, rec.field, std::move(pts), rec.name);
            rec.point_count = rec.config->size();
            if (j.contains("point_count") && j.at("point_count").get<std::size_t>() != rec.point_count)
                throw ValidationFailed(rec.name + ": point_count disagrees with the coordinates");
        } else {
            if (!j.contains("point_count")) throw schema_error("records without points need point_count");
            rec.point_count = j.at("point_count").get<std::size_t>();
        }
        if (j.contains("declared_incidence"))
            rec.declared_incidence = j.at("declared_incidence").get<std::vector<std::vector<int>>>();
        if (j.contains("expected_weak_table")) rec.expected_weak_table = weak_table_from_json(j.at("expected_weak_table"));
        if (j.contains("metadata")) {
            const auto& m = j.at("metadata");
            if (m.contains("source")) rec.source = source_tag_from_string(m.at("source").get<std::string>());
            if (m.contains("citation")) rec.citation = m.at("citation").get<std::string>();
        }
        return rec;
    } catch (const nlohmann::json::exception& e) {
        throw schema_error(e.what());
    } catch (const InvalidArgument& e) {
        throw schema_error(e.what());
    }
}

ConfigurationRecord parse_record(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, column = 1;
        const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError("malformed JSON", line, column);
    }
    auto rec = record_from_json(j);
    validate_record(rec);
    return rec;
}

void save(const ConfigurationRecord& rec, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write " + path);
    out << record_to_json(rec).dump(2) << "\n";
}

ConfigurationRecord load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_record(ss.str());
}

}  // namespace unexpected

// Command-line front end: generate, incidence, certify, analyze, locus,
// audit-penrose. Exit codes: 0 success or Proven, 1 error, 2 Inconclusive.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "unexpected/atlas.hpp"
#include "unexpected/certificate.hpp"
#include "unexpected/combinatorics.hpp"
#include "unexpected/interpolation.hpp"
#include "unexpected/reports.hpp"

using namespace unexpected;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;

struct Globals {
    std::string format = "text";
    u64 seed = 1;
    std::string prime;
    int trials = 20;
    unsigned threads = 0;
    std::string out;

    bool json_out() const { return format == "json"; }
    FieldSpec prime_field() const {
        return prime.empty() ? FieldSpec::automatic() : FieldSpec::prime(std::stoull(prime));
    }
};

/// Writes to --out or stdout.
void emit(const Globals& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out);
    if (!f) throw InvalidArgument("cannot write " + g.out);
    f << text;
}

std::string manifest_header(const RunManifest& m) { return "# manifest " + m.to_json().dump() + "\n"; }

RunManifest make_manifest(const Globals& g, const std::string& command,
                          std::vector<std::pair<std::string, std::string>> flags, std::vector<u64> primes = {}) {
    RunManifest m;
    m.command = command;
    flags.emplace_back("format", g.format);
    flags.emplace_back("trials", std::to_string(g.trials));
    m.flags = std::move(flags);
    m.seed = g.seed;
    m.primes = std::move(primes);
    return m;
}

/// A path to a configuration file, or a catalog name.
ConfigurationRecord resolve(const std::string& arg) {
    if (std::filesystem::exists(arg)) return load(arg);
    return catalog_entry(arg);
}

std::string fmt_table(const WeakTable& t) {
    std::ostringstream os;
    bool first = true;
    os << "{";
    for (const auto& [k, v] : t) {
        os << (first ? "" : ", ") << k << ":" << v;
        first = false;
    }
    os << "}";
    return os.str();
}

// generate ---------------------------------------------------------------

struct GenerateArgs {
    std::string name;
    int k = 2;
    std::string variant = "seven";
    std::string set = "z";
    int index = 0;
};

int cmd_generate(const Globals& g, const GenerateArgs& a) {
    ConfigurationRecord rec;
    if (a.name == "list") {
        std::ostringstream os;
        for (const auto& r : catalog())
            os << r.name << "\t" << r.point_count << " points\tP^" << r.N << "\t" << r.field.to_string()
               << (r.has_coordinates() ? "" : "\tdeclared") << "\n";
        emit(g, os.str());
        return kExitOk;
    }
    if (a.name == "a4k1") {
        rec = gen_a4k1(a.k, g.prime.empty() ? std::nullopt : std::optional<FieldSpec>(g.prime_field()));
    } else if (a.name == "fermat") {
        auto sets = gen_fermat_sets(g.prime.empty() ? std::nullopt : std::optional<FieldSpec>(g.prime_field()));
        if (a.set == "f3") rec = sets.F3;
        else if (a.set == "f6") rec = sets.F6;
        else if (a.set == "t") rec = sets.T;
        else if (a.set == "z") rec = sets.Z;
        else if (a.set == "z1") rec = sets.Z1.at(static_cast<std::size_t>(a.index));
        else throw InvalidArgument("--set must be f3, f6, t, z or z1");
    } else if (a.name == "dk") {
        rec = gen_dk_points(a.variant);
    } else {
        rec = catalog_entry(a.name);
    }
    validate_record(rec, g.threads);
    auto j = record_to_json(rec);
    j["manifest"] = make_manifest(g, "generate",
                                  {{"name", a.name}, {"k", std::to_string(a.k)}, {"variant", a.variant},
                                   {"set", a.set}, {"index", std::to_string(a.index)}})
                        .to_json();
    emit(g, j.dump(2) + "\n");
    if (!g.out.empty())
        std::cerr << "wrote " << rec.name << " (" << rec.point_count << " points) to " << g.out << "\n";
    return kExitOk;
}

// incidence --------------------------------------------------------------

int cmd_incidence(const Globals& g, const std::string& config, int min_members) {
    const auto rec = resolve(config);
    IncidenceStructure inc;
    if (min_members > 0 && rec.has_coordinates()) inc = detect_hyperplanes(rec.points(), min_members, g.threads);
    else if (rec.has_coordinates() || rec.declared_incidence) inc = rec.incidence(g.threads);
    const WeakTable table = rec.has_coordinates() || rec.declared_incidence ? weak_table(inc) : rec.table();
    const auto manifest = make_manifest(g, "incidence", {{"config", config}, {"min", std::to_string(min_members)}});
    if (g.json_out()) {
        json j = rec.has_coordinates() || rec.declared_incidence ? incidence_to_json(inc) : json::object();
        j["name"] = rec.name;
        j["weak_table"] = weak_table_to_json(table);
        j["manifest"] = manifest.to_json();
        emit(g, j.dump(2) + "\n");
        return kExitOk;
    }
    std::ostringstream os;
    os << manifest_header(manifest);
    os << rec.name << ": " << rec.point_count << " points in P^" << rec.N << " over " << rec.field.to_string()
       << "\n";
    os << "weak table: " << fmt_table(table) << "\n";
    for (std::size_t h = 0; h < inc.hyperplanes.size(); ++h) {
        os << (rec.N == 2 ? "line " : "plane ") << h << " (" << inc.hyperplanes[h].members.size() << " points):";
        for (int p : inc.hyperplanes[h].members) os << " " << p;
        os << "\n";
    }
    if (inc.degenerate) os << "warning: every point lies on one hyperplane\n";
    emit(g, os.str());
    return kExitOk;
}

// certify ----------------------------------------------------------------

int cmd_certify(const Globals& g, const std::string& config, int d, int m, const std::string& removed) {
    const auto rec = resolve(config);
    const auto manifest =
        make_manifest(g, "certify", {{"config", config}, {"d", std::to_string(d)}, {"m", std::to_string(m)}});
    std::vector<Certificate> certs;
    std::vector<std::string> remarks;
    json extra = json::object();
    bool proven = false;
    const long long n = static_cast<long long>(rec.point_count);
    const long long s = square_size(rec.N, d, m);

    if (rec.N == 3 && d == 3 && m == 3 && n == s + 2) {
        if (!removed.empty()) {
            const auto comma = removed.find(',');
            if (comma == std::string::npos) throw InvalidArgument("--removed expects 'i,j'");
            const std::pair<int, int> pr{std::stoi(removed.substr(0, comma)), std::stoi(removed.substr(comma + 1))};
            certs.push_back(plane_count_certificate(rec.points(), pr, g.threads));
            proven = certs.back().proven();
        } else {
            const auto sweep = plane_count_sweep(rec.points(), g.threads);
            certs.push_back(sweep.certificates.front());
            proven = sweep.all_proven;
            remarks.push_back("plane count over all " + std::to_string(sweep.certificates.size()) +
                              " removal pairs: " + (sweep.all_proven ? "all Proven" : "not all Proven") +
                              ", total " + (sweep.uniform_total ? "independent of the pair (" : "varies (") +
                              std::to_string(sweep.total) + ")");
            extra["pairs"] = sweep.certificates.size();
            extra["all_proven"] = sweep.all_proven;
            extra["uniform_total"] = sweep.uniform_total;
        }
    } else if (n == s) {
        const auto table = rec.table(g.threads);
        certs.push_back(square_certificate(table, rec.point_count, rec.N, d, m, rec.name, !rec.has_coordinates()));
        proven = certs.back().proven();
        if (rec.name == "fermat_z" && ((d == 7 && m == 3) || (d == 8 && m == 5))) {
            const auto rep = fermat_partial_report(d, m);
            extra["fermat_partial_report"] = fermat_report_to_json(rep);
            for (const auto& line : rep.derivation) remarks.push_back(line);
        }
    } else if (n == s + 1 && rec.N == 2 && m == d - 1) {
        certs.push_back(plus_one_certificate(rec.table(g.threads), rec.point_count, d, rec.name, !rec.has_coordinates()));
        proven = certs.back().proven();
    } else if (n >= s + 2) {
        if (!rec.has_coordinates() && !rec.declared_incidence)
            throw SizeMismatch("subset iteration needs member lists; this record has a weak table only");
        auto c = subset_square_certificate(rec.incidence(g.threads), d, m);
        if (c) {
            certs.push_back(*c);
            remarks.push_back("a square subset is Proven; this does not certify the full configuration");
        } else {
            remarks.push_back("no square subset is Proven");
        }
        proven = false;
    } else {
        throw SizeMismatch(std::to_string(n) + " points are fewer than the square size " + std::to_string(s));
    }

    const char* verdict = proven ? "PROVEN" : "INCONCLUSIVE";
    if (g.json_out()) {
        json j;
        j["config"] = rec.name;
        j["verdict"] = verdict;
        j["certificates"] = json::array();
        for (const auto& c : certs) j["certificates"].push_back(certificate_to_json(c));
        j["remarks"] = remarks;
        j["extra"] = extra;
        j["manifest"] = manifest.to_json();
        emit(g, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << manifest_header(manifest);
        for (const auto& c : certs) os << render_text(c);
        for (const auto& r : remarks) os << r << "\n";
        os << "verdict: " << verdict << "\n";
        emit(g, os.str());
    }
    return proven ? kExitOk : kExitInconclusive;
}

// analyze ----------------------------------------------------------------

int cmd_analyze(const Globals& g, const std::string& config, int d, int m) {
    const auto rec = resolve(config);
    const auto& z = rec.points();
    const FieldSpec f = compute_field(z, g.prime_field());
    const auto rep = unexpectedness_report(z, d, m, g.trials, g.seed, f);
    CounterRng rng(g.seed, 1);
    const auto B = random_chart_point(z.N(), f.p, rng);
    const auto profile = h_profile(z, d, B, f);
    std::optional<ZeroLocusVerdict> zl;
    const bool square = static_cast<long long>(z.size()) == square_size(z.N(), d, m);
    if (square) zl = zero_locus_test(z, d, m, g.trials, g.seed, f, g.threads);
    const auto manifest = make_manifest(
        g, "analyze", {{"config", config}, {"d", std::to_string(d)}, {"m", std::to_string(m)}}, {f.p});

    std::string verdict = "INCONCLUSIVE";
    if (rep.unexpected || (zl && zl->probably_zero())) verdict = "EVIDENCE";

    if (g.json_out()) {
        json j;
        j["config"] = rec.name;
        j["report"] = report_to_json(rep);
        j["sample_B"] = coordinates_to_json(B);
        j["profile"] = json::array();
        for (const auto& s : profile) j["profile"].push_back(dims_to_json(s));
        j["square"] = square;
        if (zl) j["zero_locus_test"] = verdict_to_json(*zl);
        j["verdict"] = verdict;
        j["manifest"] = manifest.to_json();
        emit(g, j.dump(2) + "\n");
        return kExitOk;
    }
    std::ostringstream os;
    os << manifest_header(manifest);
    os << rec.name << ": " << z.size() << " points in P^" << z.N() << ", (d, m) = (" << d << ", " << m << ")\n";
    os << "field " << f.to_string() << ", trials " << g.trials << ", seed " << g.seed << "\n";
    os << "dim [I_Z]_" << d << " = " << rep.ideal_dim << " (independent value " << rep.independent_dim << ", "
       << (rep.independent ? "independence check passed" : "conditions are dependent") << ")\n";
    os << "fat point conditions H_B(" << d << ") = " << rep.fat_point_conditions << "\n";
    os << "generic dim L(" << d << "; " << m << "B+Z) = " << rep.actual << ", expected " << rep.expected << "\n";
    os << "unexpected: " << (rep.unexpected ? "yes" : "no") << "\n";
    os << "j   dim  vdim  h   at a random B\n";
    for (const auto& s : profile)
        os << s.j << "   " << s.dim << "    " << s.vdim << "    " << s.h << "\n";
    if (zl) {
        os << "F ≡ 0: " << (zl->probably_zero() ? "ProbablyZero" : "NonzeroWitness") << " (" << zl->trials
           << " trials over GF(" << zl->prime << "), deg F = " << zl->deg_F;
        if (zl->probably_zero()) os << ", error <= 2^" << static_cast<long long>(std::floor(zl->log2_error_bound));
        os << ")\n";
        if (!zl->probably_zero()) os << "locus nonzero: det M(B) != 0 at the witness\n";
    } else {
        os << "interpolation matrix is not square for this (d, m); zero-locus test skipped\n";
    }
    for (const auto& w : rep.warnings) os << "warning: " << w << "\n";
    os << "verdict: " << verdict << "\n";
    emit(g, os.str());
    return kExitOk;
}

// locus ------------------------------------------------------------------

int cmd_locus(const Globals& g, const std::string& config, int d, int m, long long budget, int sample) {
    const auto rec = resolve(config);
    const auto& z = rec.points();
    const auto F = symbolic_locus(z, d, m, budget, std::nullopt, g.threads);
    json j = locus_to_json(F);
    j["config"] = rec.name;
    if (!F.is_zero()) {
        json mult = json::array();
        for (const auto& p : z.points()) mult.push_back(multiplicity_at(F, p));
        j["multiplicity_at_points"] = mult;
    }
    if (sample > 0 && !F.is_zero()) {
        json pts = json::array();
        for (const auto& [x, y] : sample_real_points(F, sample)) pts.push_back({x, y});
        j["samples"] = pts;
    }
    j["manifest"] = make_manifest(g, "locus",
                                  {{"config", config},
                                   {"d", std::to_string(d)},
                                   {"m", std::to_string(m)},
                                   {"budget", std::to_string(budget)},
                                   {"sample", std::to_string(sample)}},
                                  F.field.is_prime() ? std::vector<u64>{F.field.p} : std::vector<u64>{})
                        .to_json();
    if (g.json_out() || !g.out.empty()) {
        emit(g, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << rec.name << ": locus of degree " << F.degree << " over " << F.field.to_string() << ", "
           << (F.is_zero() ? "the zero polynomial" : std::to_string(F.terms.size()) + " terms") << "\n";
        if (!F.is_zero()) {
            os << "multiplicity at the points of Z:";
            for (const auto& v : j["multiplicity_at_points"]) os << " " << v.get<int>();
            os << "\n";
        }
        std::cout << os.str();
    }
    return kExitOk;
}

// audit-penrose ----------------------------------------------------------

int cmd_audit(const Globals& g, int remove, const std::string& config) {
    const auto rec = config.empty() ? gen_penrose20() : resolve(config);
    if (!rec.declared_incidence) throw InvalidArgument("the audit needs the record's declared planes");
    const auto audit = removal_audit(rec.point_count, *rec.declared_incidence, remove, g.threads, g.json_out());
    const auto cert = audit_certificate(audit, rec.name);
    const auto manifest = make_manifest(g, "audit-penrose", {{"remove", std::to_string(remove)}, {"config", config}});
    if (g.json_out()) {
        json j = audit_to_json(audit, true);
        j["certificate"] = certificate_to_json(cert);
        j["manifest"] = manifest.to_json();
        emit(g, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << manifest_header(manifest);
        os << "removed " << remove << " of " << audit.point_count << " points in " << audit.subsets << " ways\n";
        if (audit.all_six == 0 && remove == 5)
            os << "no " << audit.point_count - remove << "-point subset has six points on every plane\n";
        os << "removals with six points on every plane: " << audit.all_six << "\n";
        os << "least number of planes with >= 7 points: " << audit.min_rich_planes << "\n";
        os << "sum of n_i: " << audit.incidence_sum << (audit.constant_sum ? " for every removal" : " (varies)")
           << "\n";
        os << "profiles (n_i sorted, removals):\n";
        for (const auto& [profile, count] : audit.profiles) {
            os << " ";
            for (int x : profile) os << " " << x;
            os << " : " << count << "\n";
        }
        emit(g, os.str());
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact interpolation, incidence and certificate tools for unexpected hypersurfaces"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", g.seed, "Seed of the counter-based generator");
    app.add_option("--prime", g.prime, "Prime modulus (default 2^61-1 or the configuration's prime)");
    app.add_option("--trials", g.trials, "Random trials for generic ranks and zero-locus tests")->check(CLI::PositiveNumber);
    app.add_option("--threads", g.threads, "Worker threads (0 = all cores)");
    app.add_option("--out", g.out, "Write the main output to this file");

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Generate a catalog configuration ('list' lists them)");
    generate->add_option("name", gen.name, "a4k1, fermat, dk, d4, penrose20, a15_1, ... or list")->required();
    generate->add_option("--k", gen.k, "k for a4k1");
    generate->add_option("--variant", gen.variant, "seven or nine for dk");
    generate->add_option("--set", gen.set, "f3, f6, t, z or z1 for fermat");
    generate->add_option("--index", gen.index, "which Z1(P), 0..8");

    std::string config;
    int d = 0, m = 0, min_members = 0, sample = 0, remove = 5;
    long long budget = 1'000'000;
    std::string removed, audit_config;

    auto* incidence = app.add_subcommand("incidence", "Rich lines or planes and the weak table");
    incidence->add_option("config", config, "Configuration file or catalog name")->required();
    incidence->add_option("--min", min_members, "Minimum members (default 3 in P^2, 4 in P^3)");

    auto* certify = app.add_subcommand("certify", "Combinatorial certificate that F vanishes identically");
    certify->add_option("config", config, "Configuration file or catalog name")->required();
    certify->add_option("-d", d, "Degree")->required();
    certify->add_option("-m", m, "Multiplicity at B")->required();
    certify->add_option("--removed", removed, "Plane count: the removed pair 'i,j'");

    auto* analyze = app.add_subcommand("analyze", "Dimensions, unexpectedness and zero-locus evidence");
    analyze->add_option("config", config, "Configuration file or catalog name")->required();
    analyze->add_option("-d", d, "Degree")->required();
    analyze->add_option("-m", m, "Multiplicity at B")->required();

    auto* locus = app.add_subcommand("locus", "The locus polynomial F = det M(B)");
    locus->add_option("config", config, "Configuration file or catalog name")->required();
    locus->add_option("-d", d, "Degree")->required();
    locus->add_option("-m", m, "Multiplicity at B")->required();
    locus->add_option("--budget", budget, "Maximum number of column subsets");
    locus->add_option("--sample", sample, "Also emit this many real points of the curve");

    auto* audit = app.add_subcommand("audit-penrose", "Exhaustive removal audit of the Penrose planes");
    audit->add_option("--remove", remove, "Points to remove");
    audit->add_option("--config", audit_config, "Configuration with declared planes (default penrose20)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (*generate) return cmd_generate(g, gen);
        if (*incidence) return cmd_incidence(g, config, min_members);
        if (*certify) return cmd_certify(g, config, d, m, removed);
        if (*analyze) return cmd_analyze(g, config, d, m);
        if (*locus) return cmd_locus(g, config, d, m, budget, sample);
        if (*audit) return cmd_audit(g, remove, audit_config);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

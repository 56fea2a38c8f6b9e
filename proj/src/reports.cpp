#include "unexpected/reports.hpp"

#include <algorithm>
#include <cmath>

namespace unexpected {

nlohmann::json coordinates_to_json(const Coordinates& c) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& q : c) j.push_back(q.get_str());
    return j;
}

Coordinates coordinates_from_json(const nlohmann::json& j) {
    Coordinates c;
    for (const auto& q : j) c.push_back(parse_rational(q.is_string() ? q.get<std::string>() : q.dump()));
    return c;
}

nlohmann::json matrix_to_json(const Matrix<Scalar>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
        rows.push_back(row);
    }
    return rows;
}

nlohmann::json locus_to_json(const LocusPolynomial& F) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : F.terms) terms.push_back({{"exponents", e}, {"coeff", c.get_str()}});
    nlohmann::json field = F.field.is_prime() ? nlohmann::json{{"kind", "prime"}, {"p", F.field.p}}
                                              : nlohmann::json{{"kind", "rational"}};
    return {{"N", F.N}, {"degree", F.degree}, {"field", field}, {"zero", F.is_zero()}, {"terms", terms}};
}

LocusPolynomial locus_from_json(const nlohmann::json& j) {
    LocusPolynomial F;
    F.N = j.at("N").get<int>();
    F.degree = j.at("degree").get<long long>();
    const auto& f = j.at("field");
    F.field = f.at("kind") == "prime" ? FieldSpec::prime(f.at("p").get<u64>()) : FieldSpec::rational();
    for (const auto& t : j.at("terms"))
        F.terms.emplace(t.at("exponents").get<ExponentVector>(), parse_rational(t.at("coeff").get<std::string>()));
    return F;
}

nlohmann::json dims_to_json(const SystemDims& s) {
    return {{"d", s.d},       {"j", s.j},       {"dim", s.dim},   {"vdim", s.vdim},
            {"h", s.h},       {"rank", s.rank}, {"rows", s.rows}, {"cols", s.cols}};
}

nlohmann::json verdict_to_json(const ZeroLocusVerdict& v) {
    nlohmann::json j{{"result", v.probably_zero() ? "ProbablyZero" : "NonzeroWitness"},
                     {"deg_F", v.deg_F},
                     {"trials", v.trials},
                     {"seed", v.seed},
                     {"prime", v.prime},
                     {"log2_error_bound", v.log2_error_bound}};
    if (v.witness) j["witness"] = coordinates_to_json(*v.witness);
    return j;
}

nlohmann::json report_to_json(const UnexpectednessReport& r) {
    return {{"d", r.d},
            {"m", r.m},
            {"ideal_dim", r.ideal_dim},
            {"independent_dim", r.independent_dim},
            {"independent", r.independent},
            {"fat_point_conditions", r.fat_point_conditions},
            {"actual_dim", r.actual},
            {"expected_dim", r.expected},
            {"unexpected", r.unexpected},
            {"trials", r.trials},
            {"seed", r.seed},
            {"field", r.field.to_string()},
            {"warnings", r.warnings}};
}

std::vector<std::pair<double, double>> sample_real_points(const LocusPolynomial& F, int n, double radius) {
    if (F.N != 2) throw InvalidArgument("sampling needs a planar locus");
    if (F.field.is_prime()) throw InvalidArgument("sampling real points needs a rational locus");
    if (F.is_zero()) throw ZeroPolynomial("the zero polynomial has no curve to sample");
    if (n <= 0) return {};
    // F(1, x, y) as a polynomial in y with coefficients polynomial in x
    std::vector<std::vector<std::pair<int, double>>> by_y(F.degree + 1);
    for (const auto& [e, c] : F.terms) by_y[e[2]].emplace_back(e[1], c.get_d());
    auto eval = [&](double x, double y) {
        double total = 0, yp = 1;
        for (std::size_t k = 0; k < by_y.size(); ++k, yp *= y) {
            double ck = 0;
            for (const auto& [ex, c] : by_y[k]) ck += c * std::pow(x, ex);
            total += ck * yp;
        }
        return total;
    };
    std::vector<std::pair<double, double>> pts;
    const int columns = 4 * n, steps = 4000;
    for (int i = 0; i < columns; ++i) {
        const double x = -radius + 2 * radius * (i + 0.5) / columns;
        double y0 = -radius, f0 = eval(x, y0);
        for (int s = 1; s <= steps; ++s) {
            const double y1 = -radius + 2 * radius * s / steps, f1 = eval(x, y1);
            if (f0 == 0) {
                pts.emplace_back(x, y0);
            } else if ((f0 < 0) != (f1 < 0) && f1 != 0) {
                double lo = y0, hi = y1, flo = f0;
                for (int it = 0; it < 80; ++it) {
                    const double mid = 0.5 * (lo + hi), fm = eval(x, mid);
                    if ((fm < 0) == (flo < 0)) {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                pts.emplace_back(x, 0.5 * (lo + hi));
            }
            y0 = y1;
            f0 = f1;
        }
    }
    if (static_cast<int>(pts.size()) <= n) return pts;
    std::vector<std::pair<double, double>> out;
    for (int i = 0; i < n; ++i) out.push_back(pts[static_cast<std::size_t>(i) * pts.size() / n]);
    return out;
}

nlohmann::json RunManifest::to_json() const {
    nlohmann::json f = nlohmann::json::object();
    for (const auto& [k, v] : flags) f[k] = v;
    return {{"tool", "unexpected"}, {"version", kToolVersion}, {"command", command},
            {"flags", f},           {"seed", seed},             {"primes", primes}};
}

}  // namespace unexpected

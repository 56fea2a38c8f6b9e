#pragma once

// JSON views of engine results and the run manifest embedded in outputs.

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "unexpected/interpolation.hpp"

namespace unexpected {

inline constexpr const char* kToolVersion = "1.0.0";

nlohmann::json coordinates_to_json(const Coordinates& c);
Coordinates coordinates_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const Matrix<Scalar>& m);
nlohmann::json locus_to_json(const LocusPolynomial& F);
LocusPolynomial locus_from_json(const nlohmann::json& j);
nlohmann::json dims_to_json(const SystemDims& s);
nlohmann::json verdict_to_json(const ZeroLocusVerdict& v);
nlohmann::json report_to_json(const UnexpectednessReport& r);

/// Real points (x, y) on F(1, x, y) = 0 for a rational planar locus,
/// deterministic, at most n of them, with |x|, |y| <= radius.
std::vector<std::pair<double, double>> sample_real_points(const LocusPolynomial& F, int n, double radius = 8.0);

/// Command, flags, seed and primes of a run. Wall time and thread count are
/// left out so that identical manifests mean identical bytes.
struct RunManifest {
    std::string command;
    std::vector<std::pair<std::string, std::string>> flags;
    u64 seed = 0;
    std::vector<u64> primes;

    nlohmann::json to_json() const;
};

}  // namespace unexpected

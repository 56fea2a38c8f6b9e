#pragma once

// Lines of P^2 and planes of P^3 rich in points of a configuration, their
// weak combinatorics, and duality for line arrangements.

#include <map>
#include <optional>
#include <vector>

#include "json.hpp"
#include "unexpected/configuration.hpp"

namespace unexpected {

struct Hyperplane {
    /// Normalized like a point; absent for declared (coordinate-free) data.
    std::optional<Coordinates> coefficients;
    std::vector<int> members;  ///< sorted point indices
};

struct IncidenceStructure {
    int N = 2;
    std::size_t point_count = 0;
    FieldSpec field{};
    /// True when the structure was asserted rather than detected from coordinates.
    bool declared = false;
    /// Every point lies on one hyperplane.
    bool degenerate = false;
    std::vector<Hyperplane> hyperplanes;
    /// pencils[i] = indices of hyperplanes through point i.
    std::vector<std::vector<int>> pencils;
};

/// i -> number of hyperplanes with exactly i members.
using WeakTable = std::map<int, long long>;

/// Exact enumeration of hyperplanes with at least min_members points.
/// P^2: min_members >= 3. P^3: min_members >= 4 and |Z| <= 64.
IncidenceStructure detect_hyperplanes(const PointConfiguration& config, int min_members, unsigned threads = 1);

/// Structure built from member lists alone; checks indices and the pair
/// condition (two points of P^2 lie on at most one line).
IncidenceStructure declared_incidence(int N, std::size_t point_count, std::vector<std::vector<int>> members);

WeakTable weak_table(const IncidenceStructure& inc);

/// Re-derives pencils and checks double counting, distinctness and (when
/// coefficients are present) exact membership and maximality against config.
void validate_incidence(const IncidenceStructure& inc, const PointConfiguration* config = nullptr);

/// Each line (a:b:c) becomes the point (a:b:c). Throws DuplicateLine.
PointConfiguration dualize(const std::vector<Coordinates>& lines, const FieldSpec& field, std::string name = {});

struct PencilEntry {
    int hyperplane = 0;
    int members = 0;
};

std::vector<PencilEntry> lines_through(const IncidenceStructure& inc, std::size_t point_index);
/// Hyperplanes containing an arbitrary point (needs coefficients).
std::vector<PencilEntry> lines_through(const IncidenceStructure& inc, const Coordinates& B);

nlohmann::json weak_table_to_json(const WeakTable& table);
WeakTable weak_table_from_json(const nlohmann::json& j);
nlohmann::json incidence_to_json(const IncidenceStructure& inc);

}  // namespace unexpected

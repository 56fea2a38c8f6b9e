#pragma once

// Catalog of point configurations: generators, validators and the JSON
// record format.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "unexpected/configuration.hpp"
#include "unexpected/incidence.hpp"

namespace unexpected {

enum class SourceTag { PaperFigure, ExternalReference, Generated };

std::string to_string(SourceTag tag);
SourceTag source_tag_from_string(const std::string& s);

struct ConfigurationRecord {
    std::string name;
    int N = 2;
    FieldSpec field{};
    /// Absent for declared-incidence-only records.
    std::optional<PointConfiguration> config;
    std::size_t point_count = 0;
    std::optional<std::vector<std::vector<int>>> declared_incidence;
    std::optional<WeakTable> expected_weak_table;
    SourceTag source = SourceTag::Generated;
    std::string citation;

    bool has_coordinates() const { return config.has_value(); }
    const PointConfiguration& points() const;
    /// Declared member lists when present, detected hyperplanes otherwise.
    IncidenceStructure incidence(unsigned threads = 1) const;
    /// Weak table of incidence(), or the expected table for records without
    /// coordinates or member lists.
    WeakTable table(unsigned threads = 1) const;

    friend bool operator==(const ConfigurationRecord& a, const ConfigurationRecord& b);
};

/// Smallest member count that counts as a rich hyperplane (3 in P^2, 4 in P^3).
int rich_threshold(int N);

/// Prime of about 61 bits containing a primitive order-th root of unity, or the
/// requested field when it already does. Throws FieldLacksUnity otherwise.
FieldSpec field_with_unity(u64 order, const std::optional<FieldSpec>& requested);

ConfigurationRecord gen_a4k1(int k, const std::optional<FieldSpec>& field = std::nullopt);

struct FermatSets {
    ConfigurationRecord F3, F6, T, Z;
    std::vector<ConfigurationRecord> Z1;  ///< one per P in F3 minus T, same order as F3
    std::vector<Coordinates> Z1_centers;  ///< the points P
};
FermatSets gen_fermat_sets(const std::optional<FieldSpec>& field = std::nullopt);

ConfigurationRecord gen_d4();
ConfigurationRecord gen_penrose20(const std::optional<FieldSpec>& field = std::nullopt);
ConfigurationRecord gen_dk_points(const std::string& variant);
ConfigurationRecord gen_a15_1(const std::optional<FieldSpec>& field = std::nullopt);
/// The same with one point removed (table {3:8, 4:2, 5:4}).
ConfigurationRecord gen_a15_1_minus_one(const std::optional<FieldSpec>& field = std::nullopt);

/// Declared weak tables without coordinates.
ConfigurationRecord declared_a13_3();
ConfigurationRecord declared_a30_3();
ConfigurationRecord declared_a30_3_minus_one();

/// Runs every applicable validator; returns one line per check passed and
/// throws ValidationFailed naming the first violated invariant.
std::vector<std::string> validate_record(const ConfigurationRecord& rec, unsigned threads = 1);

/// Every shipped record (Fermat Z1 sets included).
std::vector<ConfigurationRecord> catalog();
/// Record by catalog name; throws InvalidArgument listing known names.
ConfigurationRecord catalog_entry(const std::string& name);

nlohmann::json record_to_json(const ConfigurationRecord& rec);
/// Throws ParseError (schema problems report line 0, column 0) and ValidationFailed.
ConfigurationRecord record_from_json(const nlohmann::json& j);
ConfigurationRecord parse_record(const std::string& text);

void save(const ConfigurationRecord& rec, const std::string& path);
/// Parses and validates.
ConfigurationRecord load(const std::string& path);

nlohmann::json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const nlohmann::json& j);

}  // namespace unexpected

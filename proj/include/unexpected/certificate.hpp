#pragma once

// Combinatorial lower bounds on mult_B(F) and the certificates built from
// them: whenever the bounds exceed deg F, the locus polynomial F vanishes
// identically and an unexpected hypersurface exists.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "unexpected/configuration.hpp"
#include "unexpected/incidence.hpp"

namespace unexpected {

struct LineBound {
    int n = 0;  ///< points on the hyperplane
    int d = 0;
    int m = 0;
    int N = 2;
    /// contribution_j for j = 1..m before clamping at 0
    std::vector<long long> per_j;
    long long bound = 0;
    /// N > 2 bounds extend the planar argument; flagged in reports.
    bool derived_generalization = false;
};

/// sum_{j=1..m} max(0, n + binom(j+N-2, N-1) - binom(d+N-1, N-1)).
LineBound line_multiplicity_bound(int n, int d, int m, int N);

/// k(j-d-1) + sum |L_i| if B is not in Z, k(j-d-2) + sum |L_i| + 1 if it is.
long long fixed_point_bound(int k, const std::vector<int>& member_counts, int j, int d, bool B_in_Z);

struct FixedPointBound {
    long long value = 0;
    std::vector<int> hyperplanes;
    std::vector<int> member_counts;
    bool B_in_Z = false;
    /// Some two of the hyperplanes share a configuration point other than B.
    bool shared_second_point = false;
};

/// Checked form: every hyperplane must pass through B and be distinct.
FixedPointBound fixed_point_bound(const IncidenceStructure& inc, const std::vector<int>& hyperplanes,
                                  const Coordinates& B, std::optional<std::size_t> B_index, int j, int d);

enum class CertificateKind { SquareCase, PlusOneCase, FamilyA4k1, PlaneCount, RemovalAudit };
enum class Verdict { Proven, Inconclusive };

std::string to_string(CertificateKind k);
std::string to_string(Verdict v);

struct ExtraTerm {
    std::string label;
    long long value = 0;
};

struct LineClass {
    LineBound bound;
    long long count = 0;  ///< hyperplanes with this member count
};

struct Certificate {
    CertificateKind kind = CertificateKind::SquareCase;
    std::string subject;
    /// Coordinate-free input (weak table or declared member lists).
    bool declared = false;
    int N = 2;
    int d = 0;
    int m = 0;
    long long s = 0;  ///< point count of the certified set
    WeakTable weak_table;
    std::vector<LineClass> line_bounds;
    std::vector<ExtraTerm> extra_terms;
    long long total = 0;
    /// deg F, or the right-hand side of the kind-specific inequality.
    long long deg_F = 0;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<std::string> derivation;
    std::vector<std::string> notes;

    bool proven() const { return verdict == Verdict::Proven; }
};

/// Requires point_count == square_size(N, d, m) (SizeMismatch otherwise).
Certificate square_certificate(const WeakTable& table, std::size_t point_count, int N, int d, int m,
                               std::string subject = {}, bool declared = true);
Certificate square_certificate(const IncidenceStructure& inc, int d, int m, std::string subject = {});

/// m = d-1 in P^2 with |Z| = binom(d+2,2) - binom(d,2) + 1.
Certificate plus_one_certificate(const WeakTable& table, std::size_t point_count, int d, std::string subject = {},
                                 bool declared = true);
Certificate plus_one_certificate(const IncidenceStructure& inc, int d, std::string subject = {});

Certificate family_a4k1_certificate(int k);

/// Removes the pair, detects planes on the remaining points and sums the
/// (d, m) = (3, 3) plane bounds. Requires 12 points so that 10 remain.
Certificate plane_count_certificate(const PointConfiguration& config, std::pair<int, int> removed,
                                    unsigned threads = 1);

struct PlaneCountSweep {
    std::vector<Certificate> certificates;  ///< one per pair, lexicographic
    bool all_proven = false;
    bool uniform_total = false;
    long long total = 0;
    std::vector<long long> incidence_sums;  ///< sum of n_i over the original planes
};
PlaneCountSweep plane_count_sweep(const PointConfiguration& config, unsigned threads = 1);

/// |Z| = s + t, t >= 2: first s-subset (in lexicographic order of removed
/// indices) whose square certificate is Proven. The certificate concerns the
/// subset, not Z itself.
std::optional<Certificate> subset_square_certificate(const IncidenceStructure& inc, int d, int m,
                                                     long long max_subsets = 1'000'000);

struct RemovalAudit {
    int point_count = 0;
    int remove_count = 0;
    std::size_t plane_count = 0;
    long long subsets = 0;
    long long all_six = 0;                 ///< removals leaving exactly 6 points on every plane
    long long min_rich_planes = 0;         ///< least number of planes with >= 7 points
    long long removals_without_rich = 0;   ///< removals with no plane of >= 7 points
    bool constant_sum = true;
    long long incidence_sum = 0;           ///< sum of n_i (constant when each point lies on the same number of planes)
    std::map<std::vector<int>, long long> profiles;  ///< sorted n_i vector -> removals
    std::vector<std::vector<int>> per_removal;       ///< n_i per removal, lexicographic order
};

/// Exhaustive over all removal sets; deterministic for any thread count.
RemovalAudit removal_audit(std::size_t point_count, const std::vector<std::vector<int>>& planes, int remove_count,
                           unsigned threads = 1, bool keep_per_removal = false);
Certificate audit_certificate(const RemovalAudit& audit, std::string subject = {});

/// Arithmetic ingredients of the Fermat (7,3) and (8,5) arguments. The
/// concluding intersection argument is not machine-checked.
struct FermatPartialReport {
    int d = 0;
    int m = 0;
    long long deg_F = 0;
    long long line_total = 0;
    WeakTable weak_table;
    std::vector<std::pair<int, long long>> fixed_point_terms;  ///< (j, bound) at a point of T
    long long min_ideal_dim_4 = 0;
    long long min_ideal_dim_5 = 0;
    long long max_ideal_dim_5 = 0;
    std::vector<std::string> derivation;
    static constexpr bool machine_verified = false;
};
FermatPartialReport fermat_partial_report(int d, int m);

std::string render_text(const Certificate& c);
nlohmann::json certificate_to_json(const Certificate& c);
/// Recomputes every number; throws ValidationFailed on any disagreement.
Certificate certificate_from_json(const nlohmann::json& j);
nlohmann::json audit_to_json(const RemovalAudit& a, bool include_profiles);
nlohmann::json fermat_report_to_json(const FermatPartialReport& r);

}  // namespace unexpected

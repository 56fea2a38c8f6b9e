// pybind11 module. Structured results cross the boundary as JSON text and are
// decoded on the Python side, so both sides share one schema.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "unexpected/atlas.hpp"
#include "unexpected/certificate.hpp"
#include "unexpected/errors.hpp"
#include "unexpected/interpolation.hpp"
#include "unexpected/reports.hpp"

namespace py = pybind11;
using namespace unexpected;
using nlohmann::json;

namespace {

// A catalog name or a configuration record in JSON.
ConfigurationRecord resolve(const std::string& config) {
    if (!config.empty() && config.front() == '{') return record_from_json(json::parse(config));
    return catalog_entry(config);
}

WeakTable table_from(const std::map<int, long long>& t) { return WeakTable(t.begin(), t.end()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact interpolation, incidence and certificates for unexpected hypersurfaces";
    m.attr("version") = kToolVersion;
    py::register_exception<Error>(m, "UnexpectedError");

    m.def("degree_of_F", &degree_of_F, py::arg("N"), py::arg("d"), py::arg("m"));
    m.def("square_size", &square_size, py::arg("N"), py::arg("d"), py::arg("m"));

    m.def("catalog_names", [] {
        std::vector<std::string> names;
        for (const auto& r : catalog()) names.push_back(r.name);
        return names;
    });
    m.def("record", [](const std::string& config) { return record_to_json(resolve(config)).dump(); }, py::arg("config"));
    m.def("weak_table", [](const std::string& config, unsigned threads) {
        const auto t = resolve(config).table(threads);
        return std::map<int, long long>(t.begin(), t.end());
    }, py::arg("config"), py::arg("threads") = 1);

    m.def("square_certificate", [](const std::map<int, long long>& table, std::size_t points, int N, int d, int mm) {
        return certificate_to_json(square_certificate(table_from(table), points, N, d, mm)).dump();
    }, py::arg("table"), py::arg("point_count"), py::arg("N"), py::arg("d"), py::arg("m"));
    m.def("plus_one_certificate", [](const std::map<int, long long>& table, std::size_t points, int d) {
        return certificate_to_json(plus_one_certificate(table_from(table), points, d)).dump();
    }, py::arg("table"), py::arg("point_count"), py::arg("d"));
    m.def("family_certificate", [](int k) { return certificate_to_json(family_a4k1_certificate(k)).dump(); },
          py::arg("k"));
    m.def("verify_certificate", [](const std::string& text) {
        return certificate_to_json(certificate_from_json(json::parse(text))).dump();
    }, py::arg("certificate"));

    m.def("unexpectedness", [](const std::string& config, int d, int mm, int trials, u64 seed) {
        py::gil_scoped_release release;
        return report_to_json(unexpectedness_report(resolve(config).points(), d, mm, trials, seed)).dump();
    }, py::arg("config"), py::arg("d"), py::arg("m"), py::arg("trials") = 20, py::arg("seed") = 1);
    m.def("zero_locus_test", [](const std::string& config, int d, int mm, int trials, u64 seed, unsigned threads) {
        py::gil_scoped_release release;
        return verdict_to_json(zero_locus_test(resolve(config).points(), d, mm, trials, seed, FieldSpec::automatic(),
                                               threads)).dump();
    }, py::arg("config"), py::arg("d"), py::arg("m"), py::arg("trials") = 20, py::arg("seed") = 1,
       py::arg("threads") = 1);
    m.def("symbolic_locus", [](const std::string& config, int d, int mm, long long budget, unsigned threads) {
        py::gil_scoped_release release;
        return locus_to_json(symbolic_locus(resolve(config).points(), d, mm, budget, std::nullopt, threads)).dump();
    }, py::arg("config"), py::arg("d"), py::arg("m"), py::arg("budget") = 1'000'000, py::arg("threads") = 1);
    m.def("ideal_dimension", [](const std::string& config, int d) {
        return ideal_dimension(resolve(config).points(), d);
    }, py::arg("config"), py::arg("d"));

    m.def("penrose_audit", [](int remove, unsigned threads) {
        py::gil_scoped_release release;
        const auto rec = gen_penrose20();
        return audit_to_json(removal_audit(rec.point_count, *rec.declared_incidence, remove, threads), false).dump();
    }, py::arg("remove") = 5, py::arg("threads") = 1);
}

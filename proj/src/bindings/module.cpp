#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toriclift/enumeration.hpp"
#include "toriclift/io.hpp"
#include "toriclift/rank4_matroid.hpp"
#include "toriclift/seeds.hpp"
#include "toriclift/verify.hpp"
#include "toriclift/wedge_search.hpp"

namespace py = pybind11;
namespace tl = toriclift;

namespace {

std::vector<std::vector<int>> facet_lists(const tl::SimplicialComplex& k) {
    std::vector<std::vector<int>> out;
    for (tl::VertexSet f : k.facets) out.push_back(tl::set_to_vertices(f));
    return out;
}

tl::BitMatrix bits_from_rows(const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) throw std::invalid_argument("matrix must have at least one row");
    tl::BitMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw std::invalid_argument("ragged matrix");
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.set(static_cast<int>(i), static_cast<int>(j), rows[i][j] & 1);
    }
    return m;
}

std::vector<std::vector<int>> bits_to_rows(const tl::BitMatrix& m) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) rows[static_cast<std::size_t>(i)].push_back(m.get(i, j));
    return rows;
}

std::vector<std::vector<long long>> ints_to_rows(const tl::IntMatrix& m) {
    std::vector<std::vector<long long>> rows(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) rows[static_cast<std::size_t>(i)].push_back(m.at(i, j));
    return rows;
}

tl::IntMatrix ints_from_rows(const std::vector<std::vector<long long>>& rows) {
    if (rows.empty()) throw std::invalid_argument("matrix must have at least one row");
    tl::IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw std::invalid_argument("ragged matrix");
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    }
    return m;
}

py::dict certificate_dict(const tl::LiftCertificate& cert) {
    py::dict d;
    d["matrix"] = ints_to_rows(cert.lift);
    d["method"] = tl::to_string(cert.method);
    d["minors_checked"] = cert.minors_checked();
    d["orientation"] = cert.dual_form ? "dual" : "primal";
    d["source_mod2"] = bits_to_rows(cert.source);
    d["source_is_dj_translate"] = cert.source_is_translate;
    return d;
}

} // namespace

PYBIND11_MODULE(_toriclift, m) {
    m.doc() = "Lifting machinery for mod-2 torus actions on PL spheres of small Picard number";

    py::class_<tl::SimplicialComplex>(m, "SimplicialComplex")
        .def_readonly("m", &tl::SimplicialComplex::m)
        .def_readonly("n", &tl::SimplicialComplex::n)
        .def_property_readonly("picard_number", &tl::SimplicialComplex::picard_number)
        .def_property_readonly("facets", &facet_lists)
        .def("__repr__", [](const tl::SimplicialComplex& k) {
            return "<SimplicialComplex m=" + std::to_string(k.m) + " n=" + std::to_string(k.n) +
                   " facets=" + std::to_string(k.facet_count()) + ">";
        });

    m.def("from_facets", &tl::from_facets, py::arg("m"), py::arg("facets"));
    m.def("builtin_complex", [](const std::string& name) {
        auto k = tl::builtin_complex(name);
        if (!k) throw std::invalid_argument("unknown built-in complex: " + name);
        return *k;
    });
    m.def("builtin_names", &tl::builtin_names);
    m.def("minimal_non_faces", [](const tl::SimplicialComplex& k) {
        std::vector<std::vector<int>> out;
        for (tl::VertexSet s : tl::minimal_non_faces(k)) out.push_back(tl::set_to_vertices(s));
        return out;
    });
    m.def("is_pseudomanifold", &tl::is_pseudomanifold);
    m.def("is_seed", &tl::is_seed);
    m.def("wedge", &tl::wedge, py::arg("k"), py::arg("v"));
    m.def("suspension", &tl::suspension);
    m.def("join", &tl::join);
    m.def("dual_complex", &tl::dual_complex);
    m.def("j_construction", [](const tl::SimplicialComplex& k, const std::vector<int>& j) {
        return tl::j_construction(k, tl::JTuple{j});
    });

    m.def("enumerate_char_maps", [](const tl::SimplicialComplex& k, bool up_to_dj) {
        std::vector<std::vector<std::vector<int>>> out;
        for (const auto& mm : tl::enumerate_char_maps(k, {up_to_dj})) out.push_back(bits_to_rows(mm));
        return out;
    }, py::arg("k"), py::arg("up_to_dj") = false);
    m.def("enumerate_idcm", [](const tl::SimplicialComplex& k, bool up_to_dj) {
        std::vector<std::vector<std::vector<int>>> out;
        for (const auto& mm : tl::enumerate_idcm(k, {up_to_dj})) out.push_back(bits_to_rows(mm));
        return out;
    }, py::arg("k"), py::arg("up_to_dj") = false);
    m.def("has_idcm", &tl::has_idcm);

    m.def("find_dual_lift", [](const tl::SimplicialComplex& k,
                               const std::vector<std::vector<int>>& dual_rows) -> py::object {
        tl::LiftOutcome out = tl::find_dual_lift(k, bits_from_rows(dual_rows));
        if (!out.ok()) return py::none();
        return certificate_dict(*out.certificate);
    });
    m.def("verify_dual_lift", [](const tl::SimplicialComplex& k,
                                 const std::vector<std::vector<long long>>& candidate) {
        tl::IntMatrix cand = ints_from_rows(candidate);
        return tl::verify_dual_lift(k, cand.mod2(), cand).ok();
    });
    m.def("verify_main", [](const tl::SimplicialComplex& k,
                            const std::vector<std::vector<int>>& subgroup) -> py::object {
        tl::MainVerification v = tl::verify_main(k, bits_from_rows(subgroup));
        py::dict d;
        d["certified"] = v.certified;
        d["route"] = v.route;
        if (v.certified) {
            d["subgroup"] = ints_to_rows(v.subgroup);
            d["source_is_dj_translate"] = v.source_is_translate;
        } else {
            d["reason"] = v.failure.reason;
        }
        return d;
    });

    m.def("matroid_census", [] {
        const auto& mat = tl::rank4_matroid();
        const auto& part = tl::partition168();
        int det1 = 0, det3 = 0;
        for (long long d : mat.basis_abs_det) (d == 1 ? det1 : det3)++;
        py::dict d;
        d["bases"] = mat.bases.size();
        d["det1"] = det1;
        d["det3"] = det3;
        d["blocks"] = part.blocks.size();
        return d;
    });
    m.def("search_idcm_tuples", [](const tl::SimplicialComplex& seed, bool general_bound) {
        tl::WedgeSearchOptions opts;
        opts.general_bound = general_bound;
        auto res = tl::search_idcm_tuples(seed, opts);
        std::vector<std::vector<int>> hits;
        for (const auto& j : res.hits) hits.push_back(j.entries);
        return hits;
    }, py::arg("seed"), py::arg("general_bound") = false);
}

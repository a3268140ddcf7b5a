#include "chernum/catalog.hpp"
#include "chernum/chern.hpp"
#include "chernum/cobordism.hpp"
#include "chernum/divisibility.hpp"
#include "chernum/inversion.hpp"
#include "chernum/polytopes.hpp"
#include "chernum/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace chernum;

namespace {

py::object py_bigint(const Int& v) {
    PyObject* obj = PyLong_FromString(v.str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(obj);
}

py::object py_fraction(const Rational& v) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py_bigint(numerator(v)), py_bigint(denominator(v)));
}

py::tuple py_partition(const Partition& p) {
    py::tuple t(p.parts().size());
    for (size_t i = 0; i < p.parts().size(); ++i) t[i] = p.parts()[i];
    return t;
}

Partition partition_from_obj(const py::handle& obj) {
    std::vector<int> parts;
    for (const py::handle& item : obj) parts.push_back(item.cast<int>());
    return Partition(std::move(parts));
}

template <typename Tag>
py::dict poly_to_dict(const GradedPoly<Int, Tag>& p) {
    py::dict d;
    for (const auto& [part, c] : p.terms()) d[py_partition(part)] = py_bigint(c);
    return d;
}

template <typename Tag>
py::dict poly_to_dict(const GradedPoly<Rational, Tag>& p) {
    py::dict d;
    for (const auto& [part, c] : p.terms()) d[py_partition(part)] = py_fraction(c);
    return d;
}

py::dict numbers_to_dict(const IntByPartition& numbers) {
    py::dict d;
    for (const auto& [part, c] : numbers) d[py_partition(part)] = py_bigint(c);
    return d;
}

py::dict census_to_dict(const FaceCensus& census) {
    return numbers_to_dict(census.counts);
}

ChernRecord record_from_args(int dimension, const std::string& convention,
                             const py::dict& numbers, bool complete, const std::string& name) {
    ChernRecord r;
    r.name = name;
    r.dimension = dimension;
    if (convention == "tangent") {
        r.convention = Convention::tangent;
    } else if (convention == "normal") {
        r.convention = Convention::normal;
    } else {
        throw std::invalid_argument("convention must be 'tangent' or 'normal'");
    }
    for (const auto& item : numbers) {
        Partition p = partition_from_obj(item.first);
        if (p.weight() != dimension)
            throw std::invalid_argument("partition weight differs from dimension");
        r.numbers[p] = int_from_string(py::str(item.second).cast<std::string>());
    }
    r.complete = complete;
    if (complete && r.numbers.size() != partitions_of(dimension).size())
        throw std::invalid_argument("record marked complete but entries are missing");
    return r;
}

py::dict verdict_to_dict(const DivisibilityVerdict& v) {
    py::dict d;
    d["d"] = py_bigint(v.d);
    d["chi"] = py_bigint(v.chi);
    d["extremely_divisible"] = v.extremely_divisible;
    d["witnessed"] = v.witnessed;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact inversion polynomials, characteristic-number generating functions, "
              "face censuses and divisibility checks";

    // Polynomials are returned as {partition tuple: int}; partition (3,1)
    // stands for the monomial t1*t3.
    m.def(
        "lagrange", [](int n) { return poly_to_dict(lagrange(n)); }, py::arg("n"),
        "Lagrange inversion polynomial L_n");
    m.def(
        "mult_inversion", [](int n) { return poly_to_dict(mult_inversion(n)); }, py::arg("n"),
        "multiplicative inversion polynomial M_n");
    m.def(
        "hat_mult_inversion", [](int n) { return poly_to_dict(hat_mult_inversion(n)); },
        py::arg("n"), "exponential-form inversion polynomial n! M_n(p_k/k!)");
    m.def(
        "bell_partial", [](int n, int k) { return poly_to_dict(bell_partial(n, k)); },
        py::arg("n"), py::arg("k"), "partial ordinary Bell polynomial");
    m.def(
        "hessenberg", [](int n) { return poly_to_dict(hessenberg_symbolic(n)); }, py::arg("n"),
        "symbolic Hessenberg determinant, equal to (-1)^n M_n");

    m.def(
        "cpn_tangent", [](int n) { return poly_to_dict(cpn_tangent_gf(n)); }, py::arg("n"));
    m.def(
        "cpn_normal", [](int n) { return poly_to_dict(cpn_normal_gf(n)); }, py::arg("n"));
    m.def(
        "theta_tangent", [](int n) { return poly_to_dict(theta_tangent_gf(n)); }, py::arg("n"));
    m.def(
        "theta_normal", [](int n) { return poly_to_dict(theta_normal_gf(n)); }, py::arg("n"));
    m.def(
        "theta_power",
        [](int n, int k) {
            ThetaPowerGF gf = theta_power_gf(n, k);
            return py::make_tuple(poly_to_dict(gf.tangent), poly_to_dict(gf.normal));
        },
        py::arg("n"), py::arg("k"), "(tangent, normal) pair for Theta^n(k)");
    m.def(
        "hypersurface", [](int m_, int d) { return poly_to_dict(hypersurface_gf(m_, d)); },
        py::arg("m"), py::arg("d"), "tangent numbers of a degree-d hypersurface in CP^m");
    m.def("duality_check", &duality_check, py::arg("n"));

    m.def(
        "dissection_census", [](int n) { return census_to_dict(dissection_census(n)); },
        py::arg("n"), "associahedron face census by type");
    m.def(
        "ordered_partition_census",
        [](int n) { return census_to_dict(ordered_partition_census(n)); }, py::arg("n"),
        "permutohedron face census by type");

    m.def(
        "mischenko_log",
        [](int max_n) {
            py::list out;
            for (const ThetaExpr& e : mischenko_logarithm(max_n)) out.append(poly_to_dict(e));
            return out;
        },
        py::arg("max_n"),
        "classes of CP^1..CP^max_n in the theta generators, as {partition: Fraction}");
    m.def(
        "decompose_in_theta",
        [](int dimension, const std::string& convention, const py::dict& numbers,
           const std::string& name) {
            ChernRecord r = record_from_args(dimension, convention, numbers, true, name);
            if (r.convention == Convention::tangent) r = convert_record(r);
            return poly_to_dict(decompose_in_theta(r));
        },
        py::arg("dimension"), py::arg("convention"), py::arg("numbers"), py::arg("name") = "",
        "theta-basis expansion of a complete Chern record");
    m.def("consistency_check", &cobordism_consistency_check, py::arg("max_n"));

    m.def(
        "gcd_chern_numbers",
        [](int dimension, const std::string& convention, const py::dict& numbers, bool complete,
           const std::string& name) {
            return verdict_to_dict(
                gcd_chern_numbers(record_from_args(dimension, convention, numbers, complete, name)));
        },
        py::arg("dimension"), py::arg("convention"), py::arg("numbers"),
        py::arg("complete") = true, py::arg("name") = "");
    m.def(
        "surface_verdict",
        [](long c1sq, long c2) {
            return verdict_to_dict(surface_verdict({"", Int(c1sq), Int(c2)}));
        },
        py::arg("c1sq"), py::arg("c2"));
    m.def("del_pezzo_scan", []() {
        py::dict out;
        for (const auto& [d, v] : del_pezzo_scan()) out[py::int_(d)] = verdict_to_dict(v);
        return out;
    });
    m.def(
        "toric_surface_scan",
        [](int max_n) {
            py::dict out;
            for (const auto& [n, v] : toric_surface_scan(max_n)) out[py::int_(n)] = verdict_to_dict(v);
            return out;
        },
        py::arg("max_n") = 12);
    m.def(
        "hypersurface_scan",
        [](int max_d) {
            py::dict out;
            for (const auto& [d, v] : hypersurface_scan(max_d)) out[py::int_(d)] = verdict_to_dict(v);
            return out;
        },
        py::arg("max_d") = 6);
    m.def(
        "convert_convention",
        [](int dimension, const std::string& convention, const py::dict& numbers) {
            ChernRecord r = record_from_args(dimension, convention, numbers, true, "");
            return numbers_to_dict(convert_record(r).numbers);
        },
        py::arg("dimension"), py::arg("convention"), py::arg("numbers"),
        "monomial numbers of the other bundle convention");

    m.def(
        "catalog",
        []() {
            Catalog c = builtin_catalog();
            py::list surfaces, records, notes;
            for (const CatalogSurface& s : c.surfaces) {
                py::dict d;
                d["name"] = s.surface.name;
                d["c1sq"] = py_bigint(s.surface.c1sq);
                d["c2"] = py_bigint(s.surface.c2);
                d["verdict"] = verdict_to_dict(surface_verdict(s.surface));
                d["note"] = s.note;
                surfaces.append(std::move(d));
            }
            for (const CatalogRecord& r : c.records) {
                py::dict d;
                d["name"] = r.record.name;
                d["dimension"] = r.record.dimension;
                d["convention"] = to_string(r.record.convention);
                d["numbers"] = numbers_to_dict(r.record.numbers);
                d["complete"] = r.record.complete;
                d["verdict"] = verdict_to_dict(gcd_chern_numbers(r.record));
                d["note"] = r.note;
                records.append(std::move(d));
            }
            for (const std::string& n : c.notes) notes.append(n);
            py::dict out;
            out["version"] = c.version;
            out["surfaces"] = std::move(surfaces);
            out["records"] = std::move(records);
            out["notes"] = std::move(notes);
            return out;
        },
        "built-in catalog with verdicts");

    m.def(
        "verify",
        [](int max_n, bool fast) {
            py::list out;
            for (const CheckResult& r : run_verification(max_n, fast))
                out.append(py::make_tuple(r.name, r.passed, r.detail));
            return out;
        },
        py::arg("max_n") = 8, py::arg("fast") = false,
        "run the identity verification suite; returns (name, passed, detail) tuples");
}

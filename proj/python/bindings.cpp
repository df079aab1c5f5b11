// Python bindings for the main operations: units, grids, curve sets,
// vibrational eigenstates, complete-reflection manifolds, and wavepacket
// propagation.
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "reflectal/bound.hpp"
#include "reflectal/curves.hpp"
#include "reflectal/errors.hpp"
#include "reflectal/grid.hpp"
#include "reflectal/observe.hpp"
#include "reflectal/tdse.hpp"
#include "reflectal/units.hpp"
#include "reflectal/zn.hpp"

namespace py = pybind11;
using namespace reflectal;

namespace {

units::Unit unit_from_string(const std::string& name) {
    using units::Dimension;
    for (Dimension dim : {Dimension::Energy, Dimension::Length, Dimension::Time,
                          Dimension::Mass, Dimension::Field, Dimension::Intensity}) {
        try {
            return units::parse_unit(name, dim);
        } catch (const UnitError&) {
        }
    }
    throw UnitError("unknown unit name '" + name + "'");
}

py::array_t<double> to_array(const std::vector<double>& v) {
    py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

}  // namespace

PYBIND11_MODULE(_reflectal, m) {
    m.doc() = "Complete-reflection control of diatomic photodissociation";

    py::register_exception<Error>(m, "ReflectalError");

    m.def(
        "convert",
        [](double value, const std::string& from, const std::string& to) {
            // Resolve "au"-style names against the other unit's dimension.
            try {
                const units::Unit fu = unit_from_string(from);
                const units::Unit tu = units::parse_unit(to, units::dimension_of(fu));
                return units::convert(value, fu, tu);
            } catch (const UnitError&) {
                const units::Unit tu = unit_from_string(to);
                const units::Unit fu = units::parse_unit(from, units::dimension_of(tu));
                return units::convert(value, fu, tu);
            }
        },
        py::arg("value"), py::arg("from_unit"), py::arg("to_unit"));
    m.def("field_from_intensity", &units::field_from_intensity, py::arg("intensity_au"));
    m.def("intensity_from_field", &units::intensity_from_field, py::arg("field_au"));

    py::class_<RadialGrid>(m, "RadialGrid")
        .def(py::init<double, double, std::size_t>(), py::arg("r_min"),
             py::arg("r_max"), py::arg("n"))
        .def_property_readonly("r_min", &RadialGrid::r_min)
        .def_property_readonly("r_max", &RadialGrid::r_max)
        .def_property_readonly("dr", &RadialGrid::dr)
        .def("__len__", &RadialGrid::size)
        .def("points", [](const RadialGrid& g) { return to_array(g.points()); })
        .def("wavenumbers",
             [](const RadialGrid& g) { return to_array(g.wavenumbers()); });

    py::class_<MorseParams>(m, "MorseParams")
        .def(py::init<double, double, double, double>(), py::arg("d_e"), py::arg("a"),
             py::arg("r_e"), py::arg("v_min"))
        .def_readwrite("d_e", &MorseParams::d_e)
        .def_readwrite("a", &MorseParams::a)
        .def_readwrite("r_e", &MorseParams::r_e)
        .def_readwrite("v_min", &MorseParams::v_min);

    py::class_<RepulsiveParams>(m, "RepulsiveParams")
        .def(py::init<double, double, double>(), py::arg("amplitude"), py::arg("decay"),
             py::arg("asymptote"))
        .def_readwrite("amplitude", &RepulsiveParams::amplitude)
        .def_readwrite("decay", &RepulsiveParams::decay)
        .def_readwrite("asymptote", &RepulsiveParams::asymptote);

    py::class_<GaussianDipoleParams>(m, "GaussianDipoleParams")
        .def(py::init<double, double, double>(), py::arg("mu0"), py::arg("center"),
             py::arg("width"))
        .def_readwrite("mu0", &GaussianDipoleParams::mu0)
        .def_readwrite("center", &GaussianDipoleParams::center)
        .def_readwrite("width", &GaussianDipoleParams::width);

    py::class_<SurrogateParams>(m, "SurrogateParams")
        .def(py::init<>())
        .def_readwrite("mass_amu", &SurrogateParams::mass_amu)
        .def_readwrite("ground", &SurrogateParams::ground)
        .def_readwrite("excited", &SurrogateParams::excited)
        .def_readwrite("dipole", &SurrogateParams::dipole)
        .def_readwrite("r_lo", &SurrogateParams::r_lo)
        .def_readwrite("r_hi", &SurrogateParams::r_hi);

    py::class_<CurveSet>(m, "CurveSet")
        .def_readonly("mass", &CurveSet::mass)
        .def_readonly("r_lo", &CurveSet::r_lo)
        .def_readonly("r_hi", &CurveSet::r_hi)
        .def("potential",
             [](const CurveSet& c, int channel, double r) {
                 return c.potential(channel)(r);
             })
        .def("dipole", [](const CurveSet& c, int channel, double r) {
            return c.dipole(channel)(r);
        });

    m.def("surrogate_hi", &surrogate_hi, py::arg("params") = SurrogateParams{});

    py::class_<DressedPair>(m, "DressedPair")
        .def_readonly("channel", &DressedPair::channel)
        .def_readonly("omega", &DressedPair::omega)
        .def("e1", &DressedPair::e1)
        .def("e2", &DressedPair::e2)
        .def("diabat1", [](const DressedPair& p, double r) { return p.diabat1(r); })
        .def("diabat2", [](const DressedPair& p, double r) { return p.diabat2(r); })
        .def("coupling", [](const DressedPair& p, double r) { return p.coupling(r); });

    m.def("dress", &dress, py::arg("curves"), py::arg("channel"), py::arg("omega"),
          py::arg("f0"));

    py::class_<CrossingFeatures>(m, "CrossingFeatures")
        .def_readonly("x_t", &CrossingFeatures::x_t)
        .def_readonly("x_b", &CrossingFeatures::x_b)
        .def_readonly("e_t", &CrossingFeatures::e_t)
        .def_readonly("e_b", &CrossingFeatures::e_b)
        .def_readonly("gamma", &CrossingFeatures::gamma)
        .def_readonly("alpha", &CrossingFeatures::alpha)
        .def_readonly("r_x", &CrossingFeatures::r_x);

    m.def(
        "extract_features",
        [](const DressedPair& pair) { return extract_features(pair); },
        py::arg("pair"));

    py::class_<zn::ZnParameters>(m, "ZnParameters")
        .def_readonly("alpha", &zn::ZnParameters::alpha)
        .def_readonly("beta", &zn::ZnParameters::beta)
        .def_readonly("gamma", &zn::ZnParameters::gamma)
        .def_readonly("delta", &zn::ZnParameters::delta)
        .def_readonly("f", &zn::ZnParameters::f)
        .def_readonly("phi_s", &zn::ZnParameters::phi_s)
        .def_readonly("sigma", &zn::ZnParameters::sigma)
        .def_readonly("g", &zn::ZnParameters::g)
        .def_readonly("p", &zn::ZnParameters::p)
        .def_readonly("psi", &zn::ZnParameters::psi)
        .def_readonly("energy", &zn::ZnParameters::energy);

    m.def("zn_assemble", &zn::zn_assemble, py::arg("pair"), py::arg("features"),
          py::arg("energy"));
    m.def("transmission",
          py::overload_cast<const zn::ZnParameters&>(&zn::transmission),
          py::arg("params"));
    m.def("transmission", py::overload_cast<double, double>(&zn::transmission),
          py::arg("psi"), py::arg("p"));
    m.def("transmission_pi_units", &zn::transmission_pi_units, py::arg("psi_over_pi"),
          py::arg("p"));
    m.def("arg_gamma_imag", &zn::arg_gamma_imag, py::arg("y"));

    py::class_<zn::ManifoldRoot>(m, "ManifoldRoot")
        .def_readonly("omega", &zn::ManifoldRoot::omega)
        .def_readonly("n", &zn::ManifoldRoot::n)
        .def_readonly("transmission", &zn::ManifoldRoot::transmission);

    py::class_<zn::ManifoldCurve>(m, "ManifoldCurve")
        .def_readonly("v", &zn::ManifoldCurve::v)
        .def_readonly("channel", &zn::ManifoldCurve::channel)
        .def_readonly("roots", &zn::ManifoldCurve::roots)
        .def_readonly("gaps", &zn::ManifoldCurve::gaps)
        .def_property_readonly(
            "omega", [](const zn::ManifoldCurve& c) { return to_array(c.omega); })
        .def_property_readonly(
            "psi_over_pi",
            [](const zn::ManifoldCurve& c) { return to_array(c.psi_over_pi); })
        .def_property_readonly(
            "transmission",
            [](const zn::ManifoldCurve& c) { return to_array(c.transmission); })
        .def_property_readonly("valid", [](const zn::ManifoldCurve& c) {
            py::array_t<bool> out(static_cast<py::ssize_t>(c.valid.size()));
            for (std::size_t i = 0; i < c.valid.size(); ++i) {
                out.mutable_data()[i] = c.valid[i] != 0;
            }
            return out;
        });

    m.def(
        "manifold",
        [](const CurveSet& curves, int channel, int v, double e_v, double omega_min,
           double omega_max, std::size_t nsamples, double f0) {
            return zn::manifold(curves, channel, v, e_v, {omega_min, omega_max},
                                nsamples, f0);
        },
        py::arg("curves"), py::arg("channel"), py::arg("v"), py::arg("e_v"),
        py::arg("omega_min"), py::arg("omega_max"), py::arg("nsamples"), py::arg("f0"));

    py::class_<zn::AlignmentCandidate>(m, "AlignmentCandidate")
        .def_readonly("omega", &zn::AlignmentCandidate::omega)
        .def_readonly("quality", &zn::AlignmentCandidate::quality)
        .def_readonly("n_first", &zn::AlignmentCandidate::n_first)
        .def_readonly("n_second", &zn::AlignmentCandidate::n_second);

    m.def("find_control_frequency", &zn::find_control_frequency, py::arg("first"),
          py::arg("second"), py::arg("tolerance_omega"));

    py::class_<VibrationalState>(m, "VibrationalState")
        .def_readonly("v", &VibrationalState::v)
        .def_readonly("energy", &VibrationalState::energy)
        .def_property_readonly(
            "chi", [](const VibrationalState& s) { return to_array(s.chi); });

    m.def(
        "eigensolve",
        [](const CurveSet& curves, const RadialGrid& grid, std::size_t n_states) {
            return eigensolve(curves.v[0], curves.mass, grid, n_states);
        },
        py::arg("curves"), py::arg("grid"), py::arg("n_states"));

    py::class_<FieldSpec>(m, "FieldSpec")
        .def(py::init<>())
        .def_readwrite("f0", &FieldSpec::f0)
        .def_readwrite("omega", &FieldSpec::omega)
        .def_readwrite("ramp", &FieldSpec::ramp);

    py::class_<CapSpec>(m, "CapSpec")
        .def(py::init<>())
        .def_readwrite("onset", &CapSpec::onset)
        .def_readwrite("width", &CapSpec::width)
        .def_readwrite("eta", &CapSpec::eta)
        .def_readwrite("on_ground", &CapSpec::on_ground);

    py::class_<PropagationConfig>(m, "PropagationConfig")
        .def(py::init<>())
        .def_readwrite("dt", &PropagationConfig::dt)
        .def_readwrite("duration", &PropagationConfig::duration)
        .def_readwrite("cap", &PropagationConfig::cap)
        .def_readwrite("r_flux", &PropagationConfig::r_flux)
        .def_readwrite("output_stride", &PropagationConfig::output_stride);

    py::class_<PropagationResult>(m, "PropagationResult")
        .def_property_readonly(
            "t", [](const PropagationResult& r) { return to_array(r.t); })
        .def_property_readonly("norms",
                               [](const PropagationResult& r) {
                                   py::array_t<double> out(
                                       {static_cast<py::ssize_t>(r.norms.size()),
                                        static_cast<py::ssize_t>(4)});
                                   auto* data = out.mutable_data();
                                   for (std::size_t i = 0; i < r.norms.size(); ++i) {
                                       for (int c = 0; c < 4; ++c) {
                                           data[4 * i + static_cast<std::size_t>(c)] =
                                               r.norms[i][static_cast<std::size_t>(c)];
                                       }
                                   }
                                   return out;
                               })
        .def_property_readonly("fluxes", [](const PropagationResult& r) {
            py::dict out;
            out["J2"] = to_array(r.flux.j_int[0]);
            out["J3"] = to_array(r.flux.j_int[1]);
            out["J4"] = to_array(r.flux.j_int[2]);
            return out;
        });

    m.def(
        "propagate",
        [](const CurveSet& curves, const RadialGrid& grid, const FieldSpec& field,
           const PropagationConfig& config, const VibrationalState& initial) {
            Propagator prop(curves, grid, field, config);
            return prop.propagate(initial);
        },
        py::arg("curves"), py::arg("grid"), py::arg("field"), py::arg("config"),
        py::arg("initial"));

    py::class_<Branching>(m, "Branching")
        .def_readonly("p_i", &Branching::p_i)
        .def_readonly("p_istar", &Branching::p_istar)
        .def_readonly("ratio", &Branching::ratio)
        .def_readonly("ratio_infinite", &Branching::ratio_infinite);

    m.def(
        "branching",
        [](double j2, double j3, double j4) {
            FluxRecord rec;
            rec.j_int[0].push_back(j2);
            rec.j_int[1].push_back(j3);
            rec.j_int[2].push_back(j4);
            return branching(rec);
        },
        py::arg("j2"), py::arg("j3"), py::arg("j4"));
}

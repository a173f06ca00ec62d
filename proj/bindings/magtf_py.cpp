#include <pybind11/pybind11.h>

#include "magtf/pressure.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
    m.doc() = "magtf core bindings";
    m.def("magnetic_pressure", [](double v, double bh) {
        return magtf::magnetic_pressure(v, magtf::PressureParams(bh));
    });
}

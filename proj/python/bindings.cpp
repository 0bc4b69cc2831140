#include <pybind11/pybind11.h>

namespace py = pybind11;

PYBIND11_MODULE(_pennyrig, m) {
    m.doc() = "Contact-graph rigidity toolkit (bindings land module by module)";
}

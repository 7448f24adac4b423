#include <pybind11/pybind11.h>
PYBIND11_MODULE(vpgdecomp, m) { m.doc() = "placeholder"; }

#pragma once

#include <complex>

namespace seamlab {

using cplx = std::complex<double>;

} // namespace seamlab

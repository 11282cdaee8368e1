#include "nhmono/spectra.hpp"

namespace nhmono {

BiorthoSystem gauge_transform(const BiorthoSystem& sys, const GaugeFunction& f,
                              const ParamPoint& p, int sheet) {
  if (sheet != 1 && sheet != 2)
    throw Error(ErrorKind::InvalidArgument, "sheet must be 1 or 2");
  const Complex fp = f.value(p);
  if (fp == Complex(0))
    throw Error(ErrorKind::ZeroGauge, "gauge function vanishes at the evaluation point");
  BiorthoSystem out = sys;
  const int j = sheet - 1;
  out.psi[j] *= fp;
  // <phi'| = (1/f) <phi|  <=>  |phi'> = |phi> / conj(f)
  out.phi[j] /= std::conj(fp);
  return out;
}

}  // namespace nhmono

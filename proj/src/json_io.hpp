#ifndef KMSS_JSON_IO_HPP
#define KMSS_JSON_IO_HPP

#include <string>

#include "loop.hpp"
#include "vogan.hpp"

namespace kmss {

// JSON schemas are tagged "kmss/1".  The diagram schema is
//   {"schema":"kmss/1","series":"A","rank":n,"twist":1,
//    "edges":[[i,j,mult,arrow]],"marks":[...]}
// with arrow = the short-node index, or -1 for none.  A Vogan document adds
//   "painted":[...], "automorphism":{"name":"...","map":[...]}.

std::string diagram_to_json(const AffineDiagram& d);
AffineDiagram diagram_from_json(const std::string& text);

std::string vogan_to_json(const VoganDiagram& vd);
VoganDiagram vogan_from_json(const std::string& text);

std::string render_ascii(const VoganDiagram& vd);
std::string render_dot(const VoganDiagram& vd);

/// Machine-readable dump of an affine element (used by test fixtures):
/// entries as coefficient maps {"degree": "re,im"}, plus c and d.
std::string affine_to_json(const AffineElement& x);

}  // namespace kmss

#endif  // KMSS_JSON_IO_HPP

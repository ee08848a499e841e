#pragma once

#include <string>

#include <json.hpp>

#include "qpurify/density.hpp"
#include "qpurify/entangle.hpp"
#include "qpurify/phasespace.hpp"
#include "qpurify/tomography.hpp"

namespace qpurify::io {

using json = nlohmann::ordered_json;

// JSON value formats (row-major, split re/im arrays):
//   matrix    {"dim": n, "re": [n*n], "im": [n*n]}
//   vector    {"dim": n, "re": [n],   "im": [n]}
//   bipartite matrix plus {"dimA": a, "dimB": b}
//   wavefunction {"xmin": , "xmax": , "n": , "re": [n], "im": [n]}
// Doubles are emitted at 17 significant digits so round trips are exact.

json matrix_to_json(const Mat &m);
Mat matrix_from_json(const json &j);

json vector_to_json(const Vec &v);
Vec vector_from_json(const json &j);

json density_to_json(const DensityMatrix &rho);
DensityMatrix density_from_json(const json &j);

json bipartite_to_json(const BipartiteDensity &rho);
BipartiteDensity bipartite_from_json(const json &j);

json wavefunction_to_json(const WaveFunction &psi);
WaveFunction wavefunction_from_json(const json &j);

// "x is a vector" when re has dim entries, "a matrix" when dim*dim.
bool looks_like_wavefunction(const json &j);
bool looks_like_vector(const json &j);

json load_json(const std::string &path);
void save_json(const std::string &path, const json &j);

// CSV artifacts, one header line, 17-significant-digit values.
//   Wigner:   "q,p,w" rows in row-major q-then-p order; sidecar
//             {"qmin","qmax","nq","pmin","pmax","np"}.
//   Tomogram: "x,phi" rows; sidecar {"lambda","mu","xmin","xmax","n"}.
void write_wigner_csv(const std::string &path, const WignerGrid &w);
json wigner_sidecar(const WignerGrid &w);

void write_tomogram_csv(const std::string &path, const TomogramSlice &slice);
json tomogram_sidecar(const TomogramSlice &slice);

std::string format_real(double x);  // %.17g

} // namespace qpurify::io

#include "qpurify/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qpurify::io {

namespace {

void require_fields(const json &j, std::initializer_list<const char *> keys,
                    const char *what) {
  for (const char *key : keys)
    if (!j.contains(key))
      throw ValidationError(ErrorCode::InvalidInput,
                            std::string(what) + " is missing field \"" + key +
                                "\"");
}

std::vector<double> real_array(const json &j, const char *key,
                               std::size_t expect, const char *what) {
  const auto &arr = j.at(key);
  if (!arr.is_array() || arr.size() != expect)
    throw ValidationError(ErrorCode::InvalidInput,
                          std::string(what) + " field \"" + key + "\" must " +
                              "be an array of " + std::to_string(expect) +
                              " numbers");
  std::vector<double> out;
  out.reserve(expect);
  for (const auto &v : arr) {
    if (!v.is_number())
      throw ValidationError(ErrorCode::InvalidInput,
                            std::string(what) + " field \"" + key +
                                "\" has a non-numeric entry");
    out.push_back(v.get<double>());
  }
  return out;
}

} // namespace

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

json matrix_to_json(const Mat &m) {
  const int n = static_cast<int>(m.rows());
  json j;
  j["dim"] = n;
  json re = json::array(), im = json::array();
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      re.push_back(m(i, k).real());
      im.push_back(m(i, k).imag());
    }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

Mat matrix_from_json(const json &j) {
  require_fields(j, {"dim", "re", "im"}, "matrix");
  const int n = j.at("dim").get<int>();
  if (n < 1)
    throw ValidationError(ErrorCode::InvalidInput, "matrix dim must be >= 1");
  const std::size_t count = static_cast<std::size_t>(n) * n;
  const auto re = real_array(j, "re", count, "matrix");
  const auto im = real_array(j, "im", count, "matrix");
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const std::size_t idx = static_cast<std::size_t>(i) * n + k;
      m(i, k) = cxd(re[idx], im[idx]);
    }
  return m;
}

json vector_to_json(const Vec &v) {
  const int n = static_cast<int>(v.size());
  json j;
  j["dim"] = n;
  json re = json::array(), im = json::array();
  for (int i = 0; i < n; ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

Vec vector_from_json(const json &j) {
  require_fields(j, {"dim", "re", "im"}, "vector");
  const int n = j.at("dim").get<int>();
  if (n < 1)
    throw ValidationError(ErrorCode::InvalidInput, "vector dim must be >= 1");
  const auto re = real_array(j, "re", static_cast<std::size_t>(n), "vector");
  const auto im = real_array(j, "im", static_cast<std::size_t>(n), "vector");
  Vec v(n);
  for (int i = 0; i < n; ++i)
    v(i) = cxd(re[i], im[i]);
  return v;
}

json density_to_json(const DensityMatrix &rho) {
  return matrix_to_json(rho.entries());
}

DensityMatrix density_from_json(const json &j) {
  return DensityMatrix(matrix_from_json(j));
}

json bipartite_to_json(const BipartiteDensity &rho) {
  json j = matrix_to_json(rho.rho.entries());
  j["dimA"] = rho.dimA;
  j["dimB"] = rho.dimB;
  return j;
}

BipartiteDensity bipartite_from_json(const json &j) {
  require_fields(j, {"dimA", "dimB"}, "bipartite density");
  return make_bipartite(j.at("dimA").get<int>(), j.at("dimB").get<int>(),
                        DensityMatrix(matrix_from_json(j)));
}

json wavefunction_to_json(const WaveFunction &psi) {
  json j;
  j["xmin"] = psi.grid.min;
  j["xmax"] = psi.grid.max;
  j["n"] = psi.grid.n;
  json re = json::array(), im = json::array();
  for (int i = 0; i < psi.grid.n; ++i) {
    re.push_back(psi.values(i).real());
    im.push_back(psi.values(i).imag());
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

WaveFunction wavefunction_from_json(const json &j) {
  require_fields(j, {"xmin", "xmax", "n", "re", "im"}, "wavefunction");
  const int n = j.at("n").get<int>();
  const Grid1D grid(j.at("xmin").get<double>(), j.at("xmax").get<double>(), n);
  const auto re =
      real_array(j, "re", static_cast<std::size_t>(n), "wavefunction");
  const auto im =
      real_array(j, "im", static_cast<std::size_t>(n), "wavefunction");
  Vec v(n);
  for (int i = 0; i < n; ++i)
    v(i) = cxd(re[i], im[i]);
  return make_wavefunction(grid, std::move(v));
}

bool looks_like_wavefunction(const json &j) {
  return j.contains("xmin") && j.contains("xmax") && j.contains("n");
}

bool looks_like_vector(const json &j) {
  if (!j.contains("dim") || !j.contains("re"))
    return false;
  const auto &re = j.at("re");
  return re.is_array() &&
         re.size() == static_cast<std::size_t>(j.at("dim").get<int>());
}

json load_json(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ValidationError(ErrorCode::InvalidInput,
                          "cannot open input file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error &err) {
    throw ValidationError(ErrorCode::InvalidInput,
                          "cannot parse " + path + ": " + err.what());
  }
  return j;
}

void save_json(const std::string &path, const json &j) {
  std::ofstream out(path);
  if (!out)
    throw ValidationError(ErrorCode::InvalidInput,
                          "cannot open output file " + path);
  out << j.dump(2) << "\n";
}

void write_wigner_csv(const std::string &path, const WignerGrid &w) {
  std::ofstream out(path);
  if (!out)
    throw ValidationError(ErrorCode::InvalidInput,
                          "cannot open output file " + path);
  out << "q,p,w\n";
  for (int i = 0; i < w.qgrid.n; ++i)
    for (int l = 0; l < w.pgrid.n; ++l)
      out << format_real(w.qgrid.point(i)) << ","
          << format_real(w.pgrid.point(l)) << ","
          << format_real(w.values(i, l)) << "\n";
}

json wigner_sidecar(const WignerGrid &w) {
  json j;
  j["qmin"] = w.qgrid.min;
  j["qmax"] = w.qgrid.max;
  j["nq"] = w.qgrid.n;
  j["pmin"] = w.pgrid.min;
  j["pmax"] = w.pgrid.max;
  j["np"] = w.pgrid.n;
  return j;
}

void write_tomogram_csv(const std::string &path, const TomogramSlice &slice) {
  std::ofstream out(path);
  if (!out)
    throw ValidationError(ErrorCode::InvalidInput,
                          "cannot open output file " + path);
  out << "x,phi\n";
  for (int k = 0; k < slice.xgrid.n; ++k)
    out << format_real(slice.xgrid.point(k)) << ","
        << format_real(slice.values(k)) << "\n";
}

json tomogram_sidecar(const TomogramSlice &slice) {
  json j;
  j["lambda"] = slice.lambda;
  j["mu"] = slice.mu;
  j["xmin"] = slice.xgrid.min;
  j["xmax"] = slice.xgrid.max;
  j["n"] = slice.xgrid.n;
  return j;
}

} // namespace qpurify::io

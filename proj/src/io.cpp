#include "sunphase/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sunphase {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

OperatorFile OperatorFile::from_operator(int n, int lambda, const Matrix& x,
                                         std::optional<std::string> label) {
  OperatorFile f;
  f.n = n;
  f.lambda = lambda;
  f.dim = x.rows();
  f.label = std::move(label);
  f.entries = x;
  return f;
}

OperatorFile OperatorFile::parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw io_error(std::string("operator file: invalid JSON: ") + e.what());
  }
  OperatorFile f;
  try {
    f.n = j.at("n").get<int>();
    f.lambda = j.at("lambda").get<int>();
    f.dim = j.at("dim").get<long>();
    if (j.contains("label")) f.label = j.at("label").get<std::string>();
    const auto& entries = j.at("entries");
    if (!entries.is_array() || static_cast<long>(entries.size()) != f.dim * f.dim)
      throw io_error("operator file: entries length must be dim^2");
    if (f.dim != dim_symmetric(f.n, f.lambda))
      throw io_error("operator file: declared dim does not match dim(n, lambda)");
    f.entries.resize(f.dim, f.dim);
    long k = 0;
    for (const auto& e : entries) {
      if (!e.is_array() || e.size() != 2)
        throw io_error("operator file: each entry must be [re, im]");
      f.entries(k / f.dim, k % f.dim) = cd(e[0].get<double>(), e[1].get<double>());
      ++k;
    }
  } catch (const json::exception& e) {
    throw io_error(std::string("operator file: ") + e.what());
  }
  return f;
}

OperatorFile OperatorFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("operator file: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string OperatorFile::serialize() const {
  std::ostringstream os;
  os << "{\n  \"n\": " << n << ",\n  \"lambda\": " << lambda << ",\n  \"dim\": " << dim;
  if (label) os << ",\n  \"label\": " << json(*label).dump();
  os << ",\n  \"entries\": [";
  for (long r = 0; r < dim; ++r)
    for (long c = 0; c < dim; ++c) {
      if (r || c) os << ", ";
      os << "[" << format_double(entries(r, c).real()) << ", "
         << format_double(entries(r, c).imag()) << "]";
    }
  os << "]\n}\n";
  return os.str();
}

void OperatorFile::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw io_error("operator file: cannot write " + path);
  out << serialize();
}

SymbolFile SymbolFile::from_field(int n, int lambda, const std::string& mode,
                                  const CosetGrid& grid, const SymbolField& field) {
  SymbolFile f;
  f.n = n;
  f.lambda = lambda;
  f.s = field.s;
  f.mode = mode;
  f.resolution = grid.resolution;
  f.vol = grid.volume;
  f.grid = grid;
  f.values = field.values;
  return f;
}

void SymbolFile::write(std::ostream& out) const {
  out << "# n=" << n << " lambda=" << lambda << " s=" << format_double(s)
      << " mode=" << mode << " grid=";
  for (std::size_t k = 0; k < resolution.size(); ++k)
    out << (k ? "," : "") << resolution[k];
  out << " vol=" << format_double(vol) << "\n";
  out << "idx";
  const char* names2[] = {"alpha", "beta"};
  const char* names3[] = {"alpha1", "beta1", "alpha2", "beta2"};
  const int nang = n == 2 ? 2 : 4;
  for (int k = 0; k < nang; ++k) out << "," << (n == 2 ? names2[k] : names3[k]);
  out << ",weight,re,im\n";
  for (std::size_t i = 0; i < grid.points.size(); ++i) {
    out << i;
    for (double a : grid.points[i].angles) out << "," << format_double(a);
    out << "," << format_double(grid.weights[i]) << "," << format_double(values[i].real())
        << "," << format_double(values[i].imag()) << "\n";
  }
}

void SymbolFile::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw io_error("symbol file: cannot write " + path);
  write(out);
}

SymbolFile SymbolFile::parse(std::istream& in) {
  SymbolFile f;
  std::string line;
  if (!std::getline(in, line) || line.rfind("# ", 0) != 0)
    throw io_error("symbol file: missing header line");
  {
    std::istringstream hs(line.substr(2));
    std::string tok;
    bool have_n = false, have_lambda = false, have_s = false, have_vol = false;
    while (hs >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) throw io_error("symbol file: malformed header token " + tok);
      const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      if (key == "n") { f.n = std::stoi(val); have_n = true; }
      else if (key == "lambda") { f.lambda = std::stoi(val); have_lambda = true; }
      else if (key == "s") { f.s = std::stod(val); have_s = true; }
      else if (key == "mode") { f.mode = val; }
      else if (key == "grid") {
        std::istringstream gs(val);
        std::string piece;
        while (std::getline(gs, piece, ',')) f.resolution.push_back(std::stoi(piece));
      } else if (key == "vol") { f.vol = std::stod(val); have_vol = true; }
      else throw io_error("symbol file: unknown header key " + key);
    }
    if (!have_n || !have_lambda || !have_s || !have_vol)
      throw io_error("symbol file: header must carry n, lambda, s, vol");
  }
  if (f.n != 2 && f.n != 3) throw io_error("symbol file: n must be 2 or 3");
  if (!std::getline(in, line) || line.rfind("idx", 0) != 0)
    throw io_error("symbol file: missing column header");

  const int nang = f.n == 2 ? 2 : 4;
  f.grid.n = f.n;
  f.grid.resolution = f.resolution;
  f.grid.volume = f.vol;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string piece;
    std::vector<double> cols;
    while (std::getline(ls, piece, ',')) cols.push_back(std::stod(piece));
    if (static_cast<int>(cols.size()) != nang + 4)
      throw io_error("symbol file: wrong column count in data row");
    CosetPoint p;
    p.angles.assign(cols.begin() + 1, cols.begin() + 1 + nang);
    f.grid.points.push_back(std::move(p));
    f.grid.weights.push_back(cols[nang + 1]);
    f.values.emplace_back(cols[nang + 2], cols[nang + 3]);
  }
  if (f.grid.points.empty()) throw io_error("symbol file: no data rows");
  return f;
}

SymbolFile SymbolFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("symbol file: cannot open " + path);
  return parse(in);
}

}  // namespace sunphase

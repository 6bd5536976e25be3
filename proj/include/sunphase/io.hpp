#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "sunphase/coset.hpp"
#include "sunphase/phase_space.hpp"

namespace sunphase {

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// JSON operator container: {"n":.., "lambda":.., "dim":.., "label":..,
// "entries":[[re,im],...]} with entries row-major, dim^2 of them.
struct OperatorFile {
  int n = 0;
  int lambda = 0;
  long dim = 0;
  std::optional<std::string> label;
  Matrix entries;

  static OperatorFile from_operator(int n, int lambda, const Matrix& x,
                                    std::optional<std::string> label = std::nullopt);
  static OperatorFile parse(const std::string& text);
  static OperatorFile load(const std::string& path);
  std::string serialize() const;
  void save(const std::string& path) const;
};

// CSV symbol container: one comment header line
//   # n=.. lambda=.. s=.. mode=.. grid=a,b[,c,d] vol=..
// then a column header and one row per grid point:
//   idx,<angles...>,weight,re,im
// All numbers use 17 significant digits.
struct SymbolFile {
  int n = 0;
  int lambda = 0;
  double s = 0.0;
  std::string mode = "consistent";
  std::vector<int> resolution;
  double vol = 0.0;
  CosetGrid grid;
  std::vector<cd> values;

  static SymbolFile from_field(int n, int lambda, const std::string& mode,
                               const CosetGrid& grid, const SymbolField& field);
  static SymbolFile parse(std::istream& in);
  static SymbolFile load(const std::string& path);
  void write(std::ostream& out) const;
  void save(const std::string& path) const;
};

// 17-significant-digit decimal, round-trip exact for doubles.
std::string format_double(double v);

}  // namespace sunphase

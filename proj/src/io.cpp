#include "asymcont/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace asymcont {

DensityMatrix state_from_json(const nlohmann::json& doc, bool force) {
  int dim_a = 0, dim_b = 0;
  CMatrix m;
  try {
    dim_a = doc.at("dim_a").get<int>();
    dim_b = doc.at("dim_b").get<int>();
    if (dim_a <= 0 || dim_b <= 0) throw FormatError("dimensions must be positive");
    const auto& rows = doc.at("entries");
    const long side = static_cast<long>(dim_a) * dim_b;
    if (!rows.is_array() || static_cast<long>(rows.size()) != side) {
      throw FormatError("entries must have dim_a*dim_b rows");
    }
    m.resize(side, side);
    for (long i = 0; i < side; ++i) {
      const auto& row = rows[i];
      if (!row.is_array() || static_cast<long>(row.size()) != side) {
        throw FormatError("row " + std::to_string(i) + " has the wrong length");
      }
      for (long j = 0; j < side; ++j) {
        const auto& z = row[j];
        if (!z.is_array() || z.size() != 2) {
          throw FormatError("entry must be a [re, im] pair");
        }
        m(i, j) = Complex(z[0].get<double>(), z[1].get<double>());
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed state document: ") + e.what());
  }
  if (force) return DensityMatrix::unchecked(dim_a, dim_b, std::move(m));
  return DensityMatrix(dim_a, dim_b, std::move(m));
}

nlohmann::json state_to_json(const DensityMatrix& rho) {
  nlohmann::json rows = nlohmann::json::array();
  const CMatrix& m = rho.matrix();
  for (long i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (long j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return {{"dim_a", rho.dim_a()}, {"dim_b", rho.dim_b()}, {"entries", std::move(rows)}};
}

DensityMatrix read_state_file(const std::filesystem::path& path, bool force) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open state file " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("cannot parse " + path.string() + ": " + e.what());
  }
  return state_from_json(doc, force);
}

void write_state_file(const std::filesystem::path& path, const DensityMatrix& rho) {
  write_file_atomic(path, state_to_json(rho).dump(1) + "\n");
}

nlohmann::json to_json(const MeasureValue& v) {
  return {{"value", v.value}, {"kind", std::string(to_string(v.kind))}, {"method", v.method}};
}

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string to_csv(const Table& table, const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const auto& c : comments) out << "# " << c << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
    out << '\n';
  }
  return out.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw FormatError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace asymcont

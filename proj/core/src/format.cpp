#include "fibmod/format.hpp"

#include <algorithm>

namespace fibmod {

namespace {

std::string grid_2d(const std::vector<std::vector<std::string>>& cells) {
  // cells[k][n]
  if (cells.empty()) return "";
  const std::size_t cols = cells.front().size();
  std::vector<std::size_t> width(cols, 0);
  for (const auto& row : cells)
    for (std::size_t n = 0; n < cols; ++n) width[n] = std::max(width[n], row[n].size());
  std::string out;
  for (auto row = cells.rbegin(); row != cells.rend(); ++row) {
    for (std::size_t n = 0; n < cols; ++n) {
      if (n) out += ' ';
      out += std::string(width[n] - (*row)[n].size(), ' ') + (*row)[n];
    }
    out += '\n';
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
  return quoted + "\"";
}

}  // namespace

std::string format_grid(const Hypercube<ModuleElement>& block, const Index& origin) {
  const Shape& shape = block.shape();
  const std::size_t p = shape.size();
  if (p == 1) {
    std::vector<std::vector<std::string>> cells(1);
    for (const auto& e : block.data()) cells[0].push_back(e.to_string());
    return grid_2d(cells);
  }
  const std::size_t plane = shape[0] * shape[1];
  const std::size_t slices = block.size() / plane;
  std::string out;
  for (std::size_t s = 0; s < slices; ++s) {
    if (p > 2) {
      const Index first = block.unravel(s * plane);
      out += s ? "\n# [*, *" : "# [*, *";
      for (std::size_t axis = 2; axis < p; ++axis) out += ", " + std::to_string(origin[axis] + first[axis]);
      out += "]\n";
    }
    std::vector<std::vector<std::string>> cells(shape[1], std::vector<std::string>(shape[0]));
    for (std::size_t k = 0; k < shape[1]; ++k)
      for (std::size_t n = 0; n < shape[0]; ++n) cells[k][n] = block[s * plane + k * shape[0] + n].to_string();
    out += grid_2d(cells);
  }
  return out;
}

std::string format_csv(const Hypercube<ModuleElement>& block, const Index& origin) {
  const std::size_t p = block.dims();
  const std::size_t rank = block.size() ? block[0].rank() : 1;
  std::string out;
  for (std::size_t axis = 0; axis < p; ++axis) out += "n" + std::to_string(axis + 1) + ",";
  if (rank == 1) {
    out += "value\n";
  } else {
    for (std::size_t c = 0; c < rank; ++c) out += (c ? ",value" : "value") + std::to_string(c + 1);
    out += '\n';
  }
  for (std::size_t flat = 0; flat < block.size(); ++flat) {
    const Index idx = block.unravel(flat);
    for (std::size_t axis = 0; axis < p; ++axis) out += std::to_string(origin[axis] + idx[axis]) + ",";
    for (std::size_t c = 0; c < rank; ++c) out += (c ? "," : "") + csv_field(block[flat][c].to_string());
    out += '\n';
  }
  return out;
}

}  // namespace fibmod

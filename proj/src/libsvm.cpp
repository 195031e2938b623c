#include "sling/libsvm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <string>

namespace sling {
namespace {

bool parse_double(const char* s, const char** end, double& out) {
  char* e = nullptr;
  out = std::strtod(s, &e);
  if (e == s) return false;
  *end = e;
  return true;
}

}  // namespace

Dataset parse_libsvm(std::istream& in, std::int64_t force_dim) {
  std::vector<double> raw_labels;
  std::vector<std::vector<std::pair<std::size_t, double>>> rows;
  std::size_t max_index = 0;  // 1-based

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    const char* p = line.c_str();
    while (*p == ' ' || *p == '\t' || *p == '\r') ++p;
    if (*p == '\0') continue;

    double label;
    const char* end;
    if (!parse_double(p, &end, label))
      throw ParseError("libsvm: malformed label token", lineno);
    if (!std::isfinite(label)) throw ParseError("libsvm: non-finite label", lineno);
    p = end;

    std::vector<std::pair<std::size_t, double>> row;
    std::size_t prev_index = 0;
    while (true) {
      while (*p == ' ' || *p == '\t' || *p == '\r') ++p;
      if (*p == '\0') break;
      char* e = nullptr;
      const long long idx = std::strtoll(p, &e, 10);
      if (e == p || *e != ':' || idx < 1)
        throw ParseError("libsvm: malformed index token", lineno);
      p = e + 1;
      double value;
      if (!parse_double(p, &end, value))
        throw ParseError("libsvm: malformed value token", lineno);
      if (!std::isfinite(value))
        throw ParseError("libsvm: non-finite feature value", lineno);
      p = end;
      const std::size_t index = static_cast<std::size_t>(idx);
      if (index <= prev_index)
        throw ParseError("libsvm: indices not strictly increasing", lineno);
      prev_index = index;
      max_index = std::max(max_index, index);
      if (value != 0.0) row.emplace_back(index - 1, value);  // to 0-based
    }
    raw_labels.push_back(label);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ArgumentError("libsvm: no samples in input");

  std::size_t d = max_index;
  if (force_dim > 0) {
    if (static_cast<std::size_t>(force_dim) < max_index)
      throw ArgumentError("libsvm: forced dimension below the largest feature index");
    d = static_cast<std::size_t>(force_dim);
  }

  // dense label ids in ascending raw-value order
  std::map<double, std::int32_t> remap;
  for (double l : raw_labels) remap.emplace(l, 0);
  std::int32_t next = 0;
  for (auto& [value, id] : remap) id = next++;

  Dataset out;
  out.features = SparseRowMatrix(rows.size(), d);
  for (const auto& row : rows) {
    for (const auto& [j, v] : row) {
      out.features.idx.push_back(j);
      out.features.val.push_back(v);
    }
    out.features.row_start[&row - rows.data() + 1] = out.features.idx.size();
  }
  out.labels.reserve(raw_labels.size());
  for (double l : raw_labels) out.labels.push_back(remap.at(l));
  out.class_values.reserve(remap.size());
  for (const auto& [value, id] : remap) out.class_values.push_back(value);
  return out;
}

Dataset parse_libsvm_file(const std::string& path, std::int64_t force_dim) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("libsvm: cannot open " + path);
  return parse_libsvm(in, force_dim);
}

void write_libsvm(const Dataset& data, std::ostream& out) {
  char buf[64];
  for (std::size_t i = 0; i < data.features.rows; ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g",
                  data.class_values[static_cast<std::size_t>(data.labels[i])]);
    out << buf;
    for (std::size_t k = data.features.row_start[i]; k < data.features.row_start[i + 1];
         ++k) {
      std::snprintf(buf, sizeof(buf), "%.17g", data.features.val[k]);
      out << ' ' << (data.features.idx[k] + 1) << ':' << buf;
    }
    out << '\n';
  }
}

}  // namespace sling

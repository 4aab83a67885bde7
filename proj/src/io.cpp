#include "framescope/io.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace framescope {

using nlohmann::ordered_json;

namespace {

ordered_json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError(path.string() + ": cannot open file");
  }
  try {
    return ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    // parse_error for malformed text, out_of_range for number overflow
    throw ParseError(path.string() + ": " + e.what());
  }
}

Complex parse_complex(const ordered_json& node, const std::string& where) {
  if (!node.is_array() || node.size() != 2 || !node[0].is_number() ||
      !node[1].is_number()) {
    throw ParseError(where + ": expected a [re, im] number pair");
  }
  const double re = node[0].get<double>();
  const double im = node[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw ParseError(where + ": non-finite component");
  }
  return {re, im};
}

ordered_json dump_complex(Complex z) {
  return ordered_json::array({z.real(), z.imag()});
}

std::size_t parse_positive_count(const ordered_json& doc, const char* key,
                                 const std::string& context) {
  if (!doc.contains(key)) {
    throw ParseError(context + ": missing field '" + key + "'");
  }
  const ordered_json& node = doc[key];
  if (!node.is_number_unsigned() || node.get<std::uint64_t>() == 0) {
    throw ParseError(context + ": field '" + key +
                     "' must be a positive integer");
  }
  return static_cast<std::size_t>(node.get<std::uint64_t>());
}

}

FrameSystem load_frame(const std::filesystem::path& path) {
  const ordered_json doc = parse_file(path);
  const std::string context = path.string();
  if (!doc.is_object()) throw ParseError(context + ": expected a JSON object");

  std::string label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) {
      throw ParseError(context + ": field 'label' must be a string");
    }
    label = doc["label"].get<std::string>();
  }
  const std::size_t dim = parse_positive_count(doc, "dim", context);
  if (!doc.contains("vectors") || !doc["vectors"].is_array()) {
    throw ParseError(context + ": missing array field 'vectors'");
  }
  const ordered_json& rows = doc["vectors"];
  if (rows.empty()) throw ParseError(context + ": 'vectors' is empty");

  std::vector<ComplexVector> vectors;
  vectors.reserve(rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const std::string row_ctx = context + ": vectors[" + std::to_string(k) + "]";
    if (!rows[k].is_array()) {
      throw ParseError(row_ctx + ": expected an array of [re, im] pairs");
    }
    if (rows[k].size() != dim) {
      throw ParseError(row_ctx + ": has " + std::to_string(rows[k].size()) +
                       " entries, expected dim " + std::to_string(dim));
    }
    std::vector<Complex> entries(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      entries[j] =
          parse_complex(rows[k][j], row_ctx + "[" + std::to_string(j) + "]");
    }
    vectors.emplace_back(std::move(entries));
  }
  return FrameSystem(dim, std::move(vectors), std::move(label));
}

void save_frame(const FrameSystem& system, const std::filesystem::path& path) {
  ordered_json doc;
  doc["label"] = system.label();
  doc["dim"] = system.dim();
  ordered_json rows = ordered_json::array();
  for (std::size_t k = 0; k < system.count(); ++k) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < system.dim(); ++j) {
      row.push_back(dump_complex(system.vector(k)[j]));
    }
    rows.push_back(std::move(row));
  }
  doc["vectors"] = std::move(rows);
  write_text_file(path, doc.dump(2) + "\n");
}

Symbol load_symbol(const std::filesystem::path& path) {
  const ordered_json doc = parse_file(path);
  const std::string context = path.string();
  if (!doc.is_object() || !doc.contains("values") || !doc["values"].is_array()) {
    throw ParseError(context + ": expected an object with array field 'values'");
  }
  const ordered_json& vals = doc["values"];
  if (vals.empty()) throw ParseError(context + ": 'values' is empty");
  std::vector<Complex> values(vals.size());
  for (std::size_t k = 0; k < vals.size(); ++k) {
    values[k] = parse_complex(vals[k],
                              context + ": values[" + std::to_string(k) + "]");
  }
  return Symbol(std::move(values));
}

void save_symbol(const Symbol& symbol, const std::filesystem::path& path) {
  ordered_json doc;
  ordered_json vals = ordered_json::array();
  for (const Complex& v : symbol.values()) vals.push_back(dump_complex(v));
  doc["values"] = std::move(vals);
  write_text_file(path, doc.dump(2) + "\n");
}

CyclicWindow load_window(const std::filesystem::path& path) {
  const ordered_json doc = parse_file(path);
  const std::string context = path.string();
  if (!doc.is_object()) throw ParseError(context + ": expected a JSON object");
  const std::size_t order = parse_positive_count(doc, "N", context);
  if (!doc.contains("samples") || !doc["samples"].is_array()) {
    throw ParseError(context + ": missing array field 'samples'");
  }
  const ordered_json& samples = doc["samples"];
  if (samples.size() != order) {
    throw ParseError(context + ": 'samples' holds " +
                     std::to_string(samples.size()) + " entries but N is " +
                     std::to_string(order));
  }
  std::vector<Complex> values(order);
  for (std::size_t x = 0; x < order; ++x) {
    values[x] = parse_complex(samples[x],
                              context + ": samples[" + std::to_string(x) + "]");
  }
  return CyclicWindow(std::move(values));
}

void save_window(const CyclicWindow& window, const std::filesystem::path& path) {
  ordered_json doc;
  doc["N"] = window.size();
  ordered_json samples = ordered_json::array();
  for (const Complex& s : window.samples()) samples.push_back(dump_complex(s));
  doc["samples"] = std::move(samples);
  write_text_file(path, doc.dump(2) + "\n");
}

std::string file_hash(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open file for hashing");
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  char buffer[4096];
  while (in.read(buffer, sizeof buffer) || in.gcount() > 0) {
    const std::streamsize got = in.gcount();
    for (std::streamsize i = 0; i < got; ++i) {
      hash ^= static_cast<unsigned char>(buffer[i]);
      hash *= 0x00000100000001B3ULL;
    }
    if (got < static_cast<std::streamsize>(sizeof buffer)) break;
  }
  std::ostringstream out;
  out << std::hex << std::nouppercase;
  for (int shift = 60; shift >= 0; shift -= 4) {
    out << ((hash >> shift) & 0xF);
  }
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError(path.string() + ": cannot open file for writing");
  out << content;
  if (!out) throw ParseError(path.string() + ": write failed");
}

}

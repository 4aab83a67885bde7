#include "framescope/report.hpp"

#include <json.hpp>

namespace framescope {

using nlohmann::ordered_json;

namespace {

ordered_json dump_complex(Complex z) {
  return ordered_json::array({z.real(), z.imag()});
}

ordered_json dump_complex_list(const std::vector<Complex>& values) {
  ordered_json out = ordered_json::array();
  for (const Complex& v : values) out.push_back(dump_complex(v));
  return out;
}

Complex parse_complex(const ordered_json& node, const std::string& where) {
  if (!node.is_array() || node.size() != 2) {
    throw ParseError(where + ": expected a [re, im] pair");
  }
  return {node[0].get<double>(), node[1].get<double>()};
}

std::vector<Complex> parse_complex_list(const ordered_json& node,
                                        const std::string& where) {
  std::vector<Complex> out;
  out.reserve(node.size());
  for (std::size_t i = 0; i < node.size(); ++i) {
    out.push_back(parse_complex(node[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

ordered_json dump_region(const SpectralRegion& region) {
  ordered_json out;
  if (region.kind() == SpectralRegion::Kind::disk) {
    out["kind"] = "disk";
    out["center"] = dump_complex(region.disk().center);
    out["radius"] = region.disk().radius;
  } else {
    out["kind"] = "convex_hull";
    out["vertices"] = dump_complex_list(region.vertices());
  }
  return out;
}

SpectralRegion parse_region(const ordered_json& node, const std::string& where) {
  if (!node.is_object() || !node.contains("kind")) {
    throw ParseError(where + ": expected a region object with 'kind'");
  }
  const std::string kind = node["kind"].get<std::string>();
  if (kind == "disk") {
    return SpectralRegion::make_disk(
        parse_complex(node["center"], where + ".center"),
        node["radius"].get<double>());
  }
  if (kind == "convex_hull") {
    return SpectralRegion::make_hull(
        parse_complex_list(node["vertices"], where + ".vertices"));
  }
  throw ParseError(where + ": unknown region kind '" + kind + "'");
}

ordered_json dump_certificate(const ContainmentCertificate& cert) {
  ordered_json out;
  out["region"] = dump_region(cert.region);
  out["eigenvalues"] = dump_complex_list(cert.eigenvalues);
  out["margins"] = cert.margins;
  out["overall"] = cert.overall;
  out["tol"] = cert.tol;
  return out;
}

ContainmentCertificate parse_certificate(const ordered_json& node,
                                         const std::string& where) {
  ContainmentCertificate cert;
  cert.region = parse_region(node.at("region"), where + ".region");
  cert.eigenvalues =
      parse_complex_list(node.at("eigenvalues"), where + ".eigenvalues");
  cert.margins = node.at("margins").get<std::vector<double>>();
  cert.overall = node.at("overall").get<bool>();
  cert.tol = node.at("tol").get<double>();
  return cert;
}

ordered_json dump_input(const InputRecord& rec) {
  ordered_json out;
  out["path"] = rec.path;
  out["label"] = rec.label;
  out["dim"] = rec.dim;
  out["count"] = rec.count;
  out["hash"] = rec.hash;
  return out;
}

InputRecord parse_input(const ordered_json& node) {
  InputRecord rec;
  rec.path = node.at("path").get<std::string>();
  rec.label = node.at("label").get<std::string>();
  rec.dim = node.at("dim").get<std::size_t>();
  rec.count = node.at("count").get<std::size_t>();
  rec.hash = node.at("hash").get<std::string>();
  return rec;
}

ordered_json dump_bounds(const BoundsLedger& bounds) {
  ordered_json out;
  out["prop1"] = bounds.prop1;
  out["thm1"] = bounds.thm1;
  if (bounds.schur.has_value()) {
    out["schur"] = *bounds.schur;
  } else {
    out["schur"] = nullptr;
  }
  if (bounds.banded.has_value()) {
    out["banded"] = *bounds.banded;
  } else {
    out["banded"] = nullptr;
  }
  out["gram_norm"] = bounds.gram_norm;
  out["sqrt_BB"] = bounds.sqrt_bb;
  return out;
}

BoundsLedger parse_bounds(const ordered_json& node) {
  BoundsLedger bounds;
  bounds.prop1 = node.at("prop1").get<double>();
  bounds.thm1 = node.at("thm1").get<double>();
  if (!node.at("schur").is_null()) bounds.schur = node.at("schur").get<double>();
  if (!node.at("banded").is_null()) {
    bounds.banded = node.at("banded").get<double>();
  }
  bounds.gram_norm = node.at("gram_norm").get<double>();
  bounds.sqrt_bb = node.at("sqrt_BB").get<double>();
  return bounds;
}

}

std::string serialize_report(const SpectralReport& report) {
  ordered_json doc;
  doc["tool"] = report.tool;
  doc["version"] = report.version;
  ordered_json inputs;
  inputs["phi"] = dump_input(report.phi);
  inputs["psi"] = dump_input(report.psi);
  ordered_json sym;
  sym["path"] = report.symbol.path;
  sym["count"] = report.symbol.count;
  sym["sup_modulus"] = report.symbol.sup_modulus;
  sym["is_real"] = report.symbol.real_valued;
  sym["hash"] = report.symbol.hash;
  inputs["symbol"] = std::move(sym);
  doc["inputs"] = std::move(inputs);
  if (report.seed.has_value()) {
    doc["seed"] = *report.seed;
  } else {
    doc["seed"] = nullptr;
  }
  doc["eigenvalues_multiplier"] = dump_complex_list(report.eigenvalues_multiplier);
  doc["eigenvalues_reduced"] = dump_complex_list(report.eigenvalues_reduced);
  doc["radius_eigen"] = report.radius_eigen;
  doc["radius_eigen_reduced"] = report.radius_eigen_reduced;
  doc["radius_gap"] = report.radius_gap;
  ordered_json gelfand = ordered_json::array();
  for (const GelfandEstimate& row : report.radius_gelfand) {
    gelfand.push_back(ordered_json::array({row.exponent, row.value}));
  }
  doc["radius_gelfand"] = std::move(gelfand);
  doc["gelfand_eigen_gap"] = report.gelfand_eigen_gap;
  doc["bounds"] = dump_bounds(report.bounds);
  ordered_json duality;
  duality["defect"] = report.duality_defect;
  duality["is_dual"] = report.dual_pair;
  duality["is_canonical_dual"] = report.canonical_dual_pair;
  doc["duality"] = std::move(duality);
  ordered_json certs = ordered_json::array();
  for (const CertificateRecord& rec : report.certificates) {
    ordered_json c = dump_certificate(rec.certificate);
    ordered_json named;
    named["name"] = rec.name;
    for (auto& [key, value] : c.items()) named[key] = value;
    certs.push_back(std::move(named));
  }
  doc["certificates"] = std::move(certs);
  ordered_json timing;
  timing["total_ms"] = report.total_ms;
  doc["timing"] = std::move(timing);
  return doc.dump(2) + "\n";
}

SpectralReport parse_report(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
  try {
    SpectralReport report;
    report.tool = doc.at("tool").get<std::string>();
    report.version = doc.at("version").get<std::string>();
    report.phi = parse_input(doc.at("inputs").at("phi"));
    report.psi = parse_input(doc.at("inputs").at("psi"));
    const ordered_json& sym = doc.at("inputs").at("symbol");
    report.symbol.path = sym.at("path").get<std::string>();
    report.symbol.count = sym.at("count").get<std::size_t>();
    report.symbol.sup_modulus = sym.at("sup_modulus").get<double>();
    report.symbol.real_valued = sym.at("is_real").get<bool>();
    report.symbol.hash = sym.at("hash").get<std::string>();
    if (!doc.at("seed").is_null()) {
      report.seed = doc.at("seed").get<std::uint64_t>();
    }
    report.eigenvalues_multiplier = parse_complex_list(
        doc.at("eigenvalues_multiplier"), "eigenvalues_multiplier");
    report.eigenvalues_reduced =
        parse_complex_list(doc.at("eigenvalues_reduced"), "eigenvalues_reduced");
    report.radius_eigen = doc.at("radius_eigen").get<double>();
    report.radius_eigen_reduced = doc.at("radius_eigen_reduced").get<double>();
    report.radius_gap = doc.at("radius_gap").get<double>();
    for (const ordered_json& row : doc.at("radius_gelfand")) {
      GelfandEstimate est;
      est.exponent = row.at(0).get<std::uint64_t>();
      est.value = row.at(1).get<double>();
      report.radius_gelfand.push_back(est);
    }
    report.gelfand_eigen_gap = doc.at("gelfand_eigen_gap").get<double>();
    report.bounds = parse_bounds(doc.at("bounds"));
    report.duality_defect = doc.at("duality").at("defect").get<double>();
    report.dual_pair = doc.at("duality").at("is_dual").get<bool>();
    report.canonical_dual_pair =
        doc.at("duality").at("is_canonical_dual").get<bool>();
    for (std::size_t i = 0; i < doc.at("certificates").size(); ++i) {
      const ordered_json& node = doc.at("certificates")[i];
      CertificateRecord rec;
      rec.name = node.at("name").get<std::string>();
      rec.certificate =
          parse_certificate(node, "certificates[" + std::to_string(i) + "]");
      report.certificates.push_back(std::move(rec));
    }
    report.total_ms = doc.at("timing").at("total_ms").get<double>();
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
}

std::string serialize_group_report(const GroupReport& report) {
  ordered_json doc;
  doc["tool"] = report.tool;
  doc["version"] = report.version;
  ordered_json inputs;
  ordered_json chi;
  chi["path"] = report.chi_path;
  chi["hash"] = report.chi_hash;
  inputs["chi"] = std::move(chi);
  ordered_json eta;
  eta["path"] = report.eta_path;
  eta["hash"] = report.eta_hash;
  inputs["eta"] = std::move(eta);
  ordered_json sym;
  sym["path"] = report.symbol_path;
  sym["hash"] = report.symbol_hash;
  inputs["symbol"] = std::move(sym);
  doc["inputs"] = std::move(inputs);
  doc["N"] = report.order;
  doc["bracket"] = dump_complex_list(report.bracket_values);
  doc["normalization_constant"] = report.normalization_constant;
  doc["gram_norm_bracket"] = report.gram_norm_bracket;
  doc["gram_norm_dense"] = report.gram_norm_dense;
  doc["gram_norm_gap"] = report.gram_norm_gap;
  ordered_json frame;
  frame["lower"] = report.frame_lower;
  frame["upper"] = report.frame_upper;
  frame["is_frame"] = report.chi_is_frame;
  doc["translation_frame"] = std::move(frame);
  doc["radius_bound"] = report.radius_bound;
  doc["radius_eigen"] = report.radius_eigen;
  doc["bound_slack"] = report.bound_slack;
  ordered_json timing;
  timing["total_ms"] = report.total_ms;
  doc["timing"] = std::move(timing);
  return doc.dump(2) + "\n";
}

std::string strip_timing(const std::string& report_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(report_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("strip_timing: ") + e.what());
  }
  doc.erase("timing");
  return doc.dump(2) + "\n";
}

}

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "framescope/localization.hpp"

namespace framescope {

// One analyzed multiplier, serializable to JSON and back.  Serialization is
// deterministic: fixed key order, shortest round-trip number formatting, so
// identical inputs reproduce identical bytes except for the timing block.

struct InputRecord {
  std::string path;
  std::string label;
  std::size_t dim = 0;
  std::size_t count = 0;
  std::string hash;
};

struct SymbolRecord {
  std::string path;
  std::size_t count = 0;
  double sup_modulus = 0.0;
  bool real_valued = false;
  std::string hash;
};

struct CertificateRecord {
  std::string name;
  ContainmentCertificate certificate;
};

struct SpectralReport {
  std::string tool;
  std::string version;
  InputRecord phi;
  InputRecord psi;
  SymbolRecord symbol;
  std::optional<std::uint64_t> seed;
  std::vector<Complex> eigenvalues_multiplier;
  std::vector<Complex> eigenvalues_reduced;
  double radius_eigen = 0.0;
  double radius_eigen_reduced = 0.0;
  double radius_gap = 0.0;
  std::vector<GelfandEstimate> radius_gelfand;
  double gelfand_eigen_gap = 0.0;
  BoundsLedger bounds;
  double duality_defect = 0.0;
  bool dual_pair = false;
  bool canonical_dual_pair = false;
  std::vector<CertificateRecord> certificates;
  double total_ms = 0.0;
};

std::string serialize_report(const SpectralReport& report);
SpectralReport parse_report(const std::string& text);

struct GroupReport {
  std::string tool;
  std::string version;
  std::string chi_path, chi_hash;
  std::string eta_path, eta_hash;
  std::string symbol_path, symbol_hash;
  std::size_t order = 0;
  std::vector<Complex> bracket_values;
  double normalization_constant = 0.0;
  double gram_norm_bracket = 0.0;
  double gram_norm_dense = 0.0;
  double gram_norm_gap = 0.0;
  double frame_lower = 0.0;   // min_xi |chi_hat|^2 for the chi system
  double frame_upper = 0.0;
  bool chi_is_frame = false;
  double radius_bound = 0.0;
  double radius_eigen = 0.0;
  double bound_slack = 0.0;
  double total_ms = 0.0;
};

std::string serialize_group_report(const GroupReport& report);

// Strip the timing block; equality of the remainder is the determinism
// contract for repeated runs.
std::string strip_timing(const std::string& report_text);

}

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "hrf/hrform.hpp"
#include "hrf/oracle.hpp"
#include "hrf/padic.hpp"

// JSON documents. Rationals are written as canonical strings "n" or "n/d";
// integers are also accepted on input. Objects come out with sorted keys, so
// dump() of a parsed-and-reserialized document is byte-stable.

namespace hrf::io {

using json = nlohmann::json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const Rational& x);
Rational rational_from_json(const json& j);
json to_json(const Weight& w);
Weight weight_from_json(const json& j, std::size_t rank);
json to_json(const Matrix& m);
/// Rows of rational entries; shape checked against rows x cols.
Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols);

json to_json(const RootSystem& rs);
RootSystem root_system_from_json(const json& j);
/// "Q", "F<q>" or "Z<p>"; throws FormatError on anything else, CharacteristicTwoError for 2.
Ring parse_ring_spec(const std::string& spec);
json to_json(const Ring& ring);
Ring ring_from_json(const json& j);

json to_json(const BlockForm& form);
BlockForm form_from_json(const json& j, const GradedModule& m);

struct ModuleDocument {
  GradedModule module;
  std::optional<BlockForm> form;
};
json module_to_json(const GradedModule& m, const BlockForm* form = nullptr);
ModuleDocument module_from_json(const json& j);

struct LatticeDocument {
  LatticeModule lattice;
  std::optional<BlockForm> form;
};
json lattice_to_json(const LatticeModule& m, const BlockForm* form = nullptr);
LatticeDocument lattice_from_json(const json& j);

json to_json(const UpSet& set);
UpSet upset_from_json(const json& j, std::size_t rank);

json to_json(const HRReport& r);
json to_json(const DecompositionResult& d);
json to_json(const PadicHRReport& r);
json to_json(const WeylFiltrationReport& r);
json to_json(const TiltingVerdict& v);
json character_to_json(const Weight& lambda, const oracle::CharacterTable& table);
json to_json(const Dimensions& dims);

json read_file(const std::string& path);
void write_file(const std::string& path, const json& j);
/// dump(2) plus a trailing newline.
std::string dump(const json& j);

}  // namespace hrf::io

#include "hrf/io.hpp"

#include <fstream>
#include <sstream>

namespace hrf::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string operator_key(std::size_t a) { return "alpha_" + std::to_string(a + 1); }

json check_to_json(Check c) { return to_string(c); }

json opt_weight(const std::optional<Weight>& w) { return w ? to_json(*w) : json(nullptr); }

}  // namespace

json to_json(const Rational& x) { return format_rational(x); }

Rational rational_from_json(const json& j) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const ArithmeticError& e) {
    throw FormatError(e.what());
  }
  throw FormatError("expected a rational, got " + j.dump());
}

json to_json(const Weight& w) { return w.coords; }

Weight weight_from_json(const json& j, std::size_t rank) {
  if (!j.is_array() || j.size() != rank) throw FormatError("expected a weight of rank " + std::to_string(rank) + ", got " + j.dump());
  std::vector<long> c;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw FormatError("weight coordinates must be integers: " + j.dump());
    c.push_back(x.get<long>());
  }
  return Weight(std::move(c));
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) {
    throw FormatError("expected " + std::to_string(rows) + " matrix rows, got " + j.dump());
  }
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) {
      throw FormatError("expected " + std::to_string(cols) + " entries in matrix row " + j[r].dump());
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(j[r][c]);
  }
  return m;
}

json to_json(const RootSystem& rs) { return json{{"type_label", rs.label()}, {"cartan", rs.cartan()}}; }

RootSystem root_system_from_json(const json& j) {
  try {
    std::string label = j.contains("type_label") ? j.at("type_label").get<std::string>() : "";
    if (j.contains("cartan")) return RootSystem(j.at("cartan").get<std::vector<std::vector<long>>>(), label);
    if (label.empty()) throw FormatError("root system needs 'cartan' or 'type_label'");
    return RootSystem::from_type(label);
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad root system: ") + e.what());
  }
}

Ring parse_ring_spec(const std::string& spec) {
  if (spec == "Q") return Ring::rationals();
  if (spec.size() >= 2 && (spec[0] == 'F' || spec[0] == 'Z')) {
    unsigned long q = 0;
    try {
      std::size_t used = 0;
      q = std::stoul(spec.substr(1), &used);
      if (used != spec.size() - 1) throw FormatError("bad ring '" + spec + "'");
    } catch (const std::logic_error&) {
      throw FormatError("bad ring '" + spec + "'");
    }
    try {
      return spec[0] == 'F' ? Ring::prime_field(q) : Ring::p_local(q);
    } catch (const CharacteristicTwoError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }
  throw FormatError("bad ring '" + spec + "' (expected Q, F<q> or Z<p>)");
}

json to_json(const Ring& ring) {
  switch (ring.kind()) {
    case RingKind::Rational: return json{{"kind", "Q"}};
    case RingKind::PrimeField: return json{{"kind", "Fq"}, {"p", ring.prime()}};
    case RingKind::PLocal: return json{{"kind", "Zp"}, {"p", ring.prime()}};
  }
  return json{};
}

Ring ring_from_json(const json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "Q") return Ring::rationals();
  const auto p = field(j, "p").get<unsigned long>();
  if (kind == "Fq") return parse_ring_spec("F" + std::to_string(p));
  if (kind == "Zp") return parse_ring_spec("Z" + std::to_string(p));
  throw FormatError("unknown ring kind '" + kind + "'");
}

json to_json(const BlockForm& form) {
  json out = json::array();
  for (const auto& [mu, g] : form.gram) out.push_back(json{{"mu", to_json(mu)}, {"gram", to_json(g)}});
  return out;
}

BlockForm form_from_json(const json& j, const GradedModule& m) {
  if (!j.is_array()) throw FormatError("'form' must be an array of weight blocks");
  BlockForm form;
  for (const auto& blk : j) {
    const Weight mu = weight_from_json(field(blk, "mu"), m.root_system().rank());
    const std::size_t d = m.dim(mu);
    const json& g = field(blk, "gram");
    // Blocks off the support are kept as given so the verifiers can report them.
    const std::size_t n = d > 0 ? d : g.size();
    form.gram.emplace(mu, matrix_from_json(g, n, n).normalized(m.ring()));
  }
  return form;
}

json module_to_json(const GradedModule& m, const BlockForm* form) {
  json j;
  j["root_system"] = to_json(m.root_system());
  j["ring"] = to_json(m.ring());
  json weights = json::array();
  for (const auto& [mu, d] : m.dims()) weights.push_back(json{{"coords", to_json(mu)}, {"dim", d}});
  j["weights"] = std::move(weights);
  json ops = json::object();
  for (std::size_t a = 0; a < m.num_operators(); ++a) {
    json blocks = json::array();
    for (const auto& [mu, f] : m.lowering_blocks(a)) blocks.push_back(json{{"from", to_json(mu)}, {"matrix", to_json(f)}});
    ops[operator_key(a)] = std::move(blocks);
  }
  j["operators"] = std::move(ops);
  if (form != nullptr) j["form"] = to_json(*form);
  return j;
}

namespace {

GradedModule module_body(const json& j, const Ring& ring) {
  const RootSystem rs = root_system_from_json(field(j, "root_system"));
  Dimensions dims;
  for (const auto& w : field(j, "weights")) {
    const Weight mu = weight_from_json(field(w, "coords"), rs.rank());
    const auto d = field(w, "dim").get<std::size_t>();
    if (!dims.emplace(mu, d).second) throw FormatError("weight " + mu.to_string() + " listed twice");
  }
  std::vector<BlockMap> lowering(rs.rank());
  const json& ops = field(j, "operators");
  for (const auto& [key, blocks] : ops.items()) {
    std::size_t a = 0;
    try {
      if (key.rfind("alpha_", 0) != 0) throw FormatError("");
      a = std::stoul(key.substr(6)) - 1;
    } catch (const std::exception&) {
      throw FormatError("bad operator key '" + key + "'");
    }
    if (a >= rs.rank()) throw FormatError("operator '" + key + "' exceeds the rank");
    for (const auto& blk : blocks) {
      const Weight mu = weight_from_json(field(blk, "from"), rs.rank());
      const Weight target = mu - rs.simple_root(a);
      const json& mat = field(blk, "matrix");
      const std::size_t cols = dims.contains(mu) ? dims.at(mu) : (mat.empty() ? 0 : mat[0].size());
      const std::size_t rows = dims.contains(target) ? dims.at(target) : mat.size();
      lowering[a].emplace(mu, matrix_from_json(mat, rows, cols));
    }
  }
  try {
    return GradedModule(rs, ring, std::move(dims), std::move(lowering));
  } catch (const GradedModuleError& e) {
    throw FormatError(e.what());
  }
}

}  // namespace

ModuleDocument module_from_json(const json& j) {
  try {
    GradedModule m = module_body(j, ring_from_json(field(j, "ring")));
    std::optional<BlockForm> form;
    if (j.contains("form")) form = form_from_json(j.at("form"), m);
    return ModuleDocument{std::move(m), std::move(form)};
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed module document: ") + e.what());
  }
}

json lattice_to_json(const LatticeModule& m, const BlockForm* form) {
  json j = module_to_json(m.ambient, form);
  j["ring"] = to_json(Ring::p_local(m.p));
  j["p"] = m.p;
  json basis = json::array();
  for (const auto& [mu, b] : m.basis) basis.push_back(json{{"mu", to_json(mu)}, {"basis", to_json(b)}});
  j["lattice_basis"] = std::move(basis);
  return j;
}

LatticeDocument lattice_from_json(const json& j) {
  try {
    const auto p = field(j, "p").get<unsigned long>();
    const Ring ring = ring_from_json(field(j, "ring"));
    if (ring.kind() != RingKind::PLocal || ring.prime() != p) throw FormatError("lattice module needs ring Zp with the same p");
    // Operators and form are stored in ambient (rational) coordinates.
    GradedModule ambient = module_body(j, Ring::rationals());
    std::map<Weight, Matrix> basis;
    const std::size_t rank = ambient.root_system().rank();
    if (j.contains("lattice_basis")) {
      for (const auto& blk : j.at("lattice_basis")) {
        const Weight mu = weight_from_json(field(blk, "mu"), rank);
        if (!ambient.in_support(mu)) throw FormatError("lattice basis at " + mu.to_string() + " outside the support");
        const std::size_t d = ambient.dim(mu);
        Matrix b = matrix_from_json(field(blk, "basis"), d, d);
        if (sgn(determinant(b, Ring::rationals())) == 0) throw FormatError("singular lattice basis at " + mu.to_string());
        basis.emplace(mu, std::move(b));
      }
    }
    for (const auto& [mu, d] : ambient.dims())
      if (!basis.contains(mu)) throw FormatError("lattice basis missing at " + mu.to_string());
    std::optional<BlockForm> form;
    if (j.contains("form")) form = form_from_json(j.at("form"), ambient);
    return LatticeDocument{LatticeModule{std::move(ambient), std::move(basis), p}, std::move(form)};
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed lattice document: ") + e.what());
  }
}

json to_json(const UpSet& set) {
  json g = json::array();
  for (const auto& w : set.generators) g.push_back(to_json(w));
  return json{{"generators", g}};
}

UpSet upset_from_json(const json& j, std::size_t rank) {
  const json& g = j.is_array() ? j : field(j, "generators");
  UpSet s;
  for (const auto& w : g) s.generators.push_back(weight_from_json(w, rank));
  return s;
}

json to_json(const HRReport& r) {
  json j;
  j["symmetric"] = check_to_json(r.symmetric);
  j["asymmetric_at"] = opt_weight(r.asymmetric_at);
  j["weight_orthogonal"] = check_to_json(r.weight_orthogonal);
  j["orthogonality_detail"] = r.orthogonality_detail;
  j["commutators"] = check_to_json(r.commutators);
  if (r.commutator_witness) {
    j["commutator_witness"] = json{{"alpha", r.commutator_witness->alpha + 1},
                                   {"beta", r.commutator_witness->beta + 1},
                                   {"mu", to_json(r.commutator_witness->mu)}};
  } else {
    j["commutator_witness"] = nullptr;
  }
  j["closed_restrictions"] = check_to_json(r.closed_restrictions);
  j["degenerate_at"] = opt_weight(r.degenerate_at);
  j["failing_upset"] = r.failing_upset ? to_json(*r.failing_upset) : json(nullptr);
  j["restriction_detail"] = r.restriction_detail;
  json ups = json::array();
  for (const auto& s : r.checked_upsets) ups.push_back(to_json(s));
  j["checked_upsets"] = std::move(ups);
  j["overall"] = r.overall ? "pass" : "fail";
  return j;
}

json to_json(const DecompositionResult& d) {
  json j;
  json comps = json::array();
  for (const auto& c : d.components) {
    json emb = json::array();
    for (const auto& [mu, b] : c.embedding.basis) emb.push_back(json{{"mu", to_json(mu)}, {"basis", to_json(b)}});
    comps.push_back(json{{"highest_weight", to_json(c.highest_weight)}, {"scalar", to_json(c.scalar)}, {"embedding", emb}});
  }
  j["components"] = std::move(comps);
  json hw = json::array();
  for (const auto& w : d.highest_weights()) hw.push_back(to_json(w));
  j["highest_weights"] = std::move(hw);
  j["certified"] = d.certified;
  if (d.failure) {
    static const char* kinds[] = {"singular_block", "isotropic", "not_complementary", "mismatch"};
    j["failure"] = json{{"kind", kinds[static_cast<int>(d.failure->kind)]},
                        {"weight", to_json(d.failure->weight)},
                        {"message", d.failure->message}};
  } else {
    j["failure"] = nullptr;
  }
  return j;
}

json to_json(const PadicHRReport& r) {
  json j;
  j["symmetric"] = check_to_json(r.symmetric);
  j["unimodular"] = check_to_json(r.unimodular);
  j["unimodular_fails_at"] = opt_weight(r.unimodular_fails_at);
  if (r.unimodular_fails_at) {
    j["determinant_valuation"] =
        r.determinant_valuation == kInfiniteValuation ? json("infinite") : json(r.determinant_valuation);
  } else {
    j["determinant_valuation"] = nullptr;
  }
  j["integral"] = check_to_json(r.integral);
  j["nonintegral_at"] = opt_weight(r.nonintegral_at);
  j["weight_orthogonal"] = check_to_json(r.weight_orthogonal);
  j["commutators"] = check_to_json(r.commutators);
  if (r.commutator_witness) {
    j["commutator_witness"] = json{{"alpha", r.commutator_witness->alpha + 1},
                                   {"beta", r.commutator_witness->beta + 1},
                                   {"mu", to_json(r.commutator_witness->mu)}};
  } else {
    j["commutator_witness"] = nullptr;
  }
  j["faithful"] = check_to_json(r.faithful);
  j["unfaithful_upset"] = r.unfaithful_upset ? to_json(*r.unfaithful_upset) : json(nullptr);
  j["unfaithful_at"] = opt_weight(r.unfaithful_at);
  j["lattice_lemma"] = check_to_json(r.lattice_lemma);
  j["lemma_fails_for"] = r.lemma_fails_for ? to_json(*r.lemma_fails_for) : json(nullptr);
  json ups = json::array();
  for (const auto& s : r.checked_upsets) ups.push_back(to_json(s));
  j["checked_upsets"] = std::move(ups);
  j["overall"] = r.overall ? "pass" : "fail";
  return j;
}

json to_json(const WeylFiltrationReport& r) {
  json j;
  j["ok"] = r.ok;
  json steps = json::array();
  for (const auto& [w, m] : r.steps) steps.push_back(json{{"highest_weight", to_json(w)}, {"multiplicity", m}});
  j["steps"] = std::move(steps);
  json order = json::array();
  for (const auto& w : r.order) order.push_back(to_json(w));
  j["order"] = std::move(order);
  j["failure"] = r.failure ? json{{"weight", to_json(r.failure->weight)}, {"message", r.failure->message}} : json(nullptr);
  return j;
}

json to_json(const TiltingVerdict& v) {
  json j;
  j["star_p1"] = check_to_json(v.star_p1);
  if (v.star_p1_witness) {
    const auto& w = *v.star_p1_witness;
    j["star_p1_witness"] = json{{"raising", w.raising}, {"alpha", w.alpha + 1}, {"n", w.n},
                                {"mu", to_json(w.mu)}, {"entry", to_json(w.entry)}, {"required_valuation", w.required}};
  } else {
    j["star_p1_witness"] = nullptr;
  }
  j["star_p2"] = check_to_json(v.star_p2);
  j["star_p2_upset"] = v.star_p2_upset ? to_json(*v.star_p2_upset) : json(nullptr);
  j["star_p2_weight"] = opt_weight(v.star_p2_weight);
  j["padic_hr"] = v.padic_hr ? to_json(*v.padic_hr) : json(nullptr);
  j["self_dual"] = check_to_json(v.self_dual);
  j["filtration"] = v.filtration ? to_json(*v.filtration) : json(nullptr);
  j["dual_filtration"] = v.dual_filtration ? to_json(*v.dual_filtration) : json(nullptr);
  j["overall"] = v.overall ? "pass" : "fail";
  j["failure"] = v.failure;
  return j;
}

json character_to_json(const Weight& lambda, const oracle::CharacterTable& table) {
  json mult = json::array();
  long total = 0;
  for (auto it = table.rbegin(); it != table.rend(); ++it) {
    mult.push_back(json{{"mu", to_json(it->first)}, {"multiplicity", it->second}});
    total += it->second;
  }
  return json{{"highest_weight", to_json(lambda)}, {"dimension", total}, {"multiplicities", mult}};
}

json to_json(const Dimensions& dims) {
  json out = json::array();
  for (auto it = dims.rbegin(); it != dims.rend(); ++it) out.push_back(json{{"mu", to_json(it->first)}, {"dim", it->second}});
  return out;
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << dump(j);
}

}  // namespace hrf::io

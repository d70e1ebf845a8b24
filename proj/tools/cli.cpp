#include "cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "hrf/io.hpp"

namespace hrf::cli {
namespace {

using io::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "1,-2,0" -> Weight
Weight parse_weight(const std::string& s) {
  std::vector<long> c;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      throw UsageError("bad weight '" + s + "'");
    }
    if (used != tok.size()) throw UsageError("bad weight '" + s + "'");
    c.push_back(v);
  }
  if (c.empty()) throw UsageError("empty weight");
  return Weight(std::move(c));
}

// Up-set generators separated by ';'.
UpSet parse_upset(const std::string& s) {
  UpSet u;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ';'))
    if (!tok.empty()) u.generators.push_back(parse_weight(tok));
  if (u.generators.empty()) throw UsageError("empty up-set '" + s + "'");
  return u;
}

// Rows separated by ';', entries by ','.
RootSystem parse_cartan(const std::string& s) {
  std::vector<std::vector<long>> rows;
  std::stringstream ss(s);
  std::string row;
  while (std::getline(ss, row, ';')) rows.push_back(parse_weight(row).coords);
  return RootSystem(rows);
}

struct Options {
  std::string type;
  std::string cartan;
  std::string lambda;
  std::string ring = "Q";
  std::optional<long> depth;
  std::string input;
  std::string output;
  std::vector<std::string> upsets;
};

RootSystem root_system(const Options& o) {
  if (!o.type.empty() && !o.cartan.empty()) throw UsageError("give --type or --cartan, not both");
  if (!o.cartan.empty()) return parse_cartan(o.cartan);
  if (o.type.empty()) throw UsageError("missing --type or --cartan");
  return RootSystem::from_type(o.type);
}

Weight highest_weight(const Options& o, const RootSystem& rs) {
  Weight w = parse_weight(o.lambda);
  if (w.rank() != rs.rank())
    throw UsageError("--lambda has " + std::to_string(w.rank()) + " coordinates, rank is " + std::to_string(rs.rank()));
  return w;
}

std::vector<UpSet> upsets(const Options& o, std::size_t rank) {
  std::vector<UpSet> r;
  for (const auto& s : o.upsets) {
    UpSet u = parse_upset(s);
    for (const auto& g : u.generators)
      if (g.rank() != rank) throw UsageError("up-set generator " + g.to_string() + " has the wrong rank");
    r.push_back(std::move(u));
  }
  return r;
}

bool is_lattice_document(const json& j) { return j.contains("lattice_basis") || j.contains("p"); }

// Rational module and form from either document kind; lattice documents contribute their ambient.
io::ModuleDocument load_module(const json& j) {
  if (is_lattice_document(j)) {
    auto doc = io::lattice_from_json(j);
    return {std::move(doc.lattice.ambient), std::move(doc.form)};
  }
  return io::module_from_json(j);
}

io::LatticeDocument load_lattice(const json& j) {
  if (is_lattice_document(j)) return io::lattice_from_json(j);
  auto doc = io::module_from_json(j);
  if (doc.module.ring().kind() != RingKind::PLocal)
    throw io::FormatError("verify-tilting needs a lattice document or a module over Zp");
  const unsigned long p = doc.module.ring().prime();
  // Standard lattice: the given basis spans it. Reinterpret the entries over Q.
  json k = j;
  k["ring"] = io::to_json(Ring::rationals());
  auto q = io::module_from_json(k);
  return {LatticeModule::standard(q.module, p), std::move(q.form)};
}

void emit(const Options& o, const json& j, std::ostream& out) {
  if (o.output.empty())
    out << io::dump(j);
  else
    io::write_file(o.output, j);
}

int cmd_vlambda(const Options& o, std::ostream& out) {
  const RootSystem rs = root_system(o);
  const Weight lambda = highest_weight(o, rs);
  const Ring ring = io::parse_ring_spec(o.ring);
  if (ring.kind() == RingKind::PLocal) {
    if (o.depth) throw UsageError("--depth does not apply to lattices (the Weyl lattice is always complete)");
    auto [m, form] = weyl_lattice(rs, lambda, ring.prime());
    emit(o, io::lattice_to_json(m, &form), out);
    return kPass;
  }
  auto v = standard_module(rs, ring, lambda, o.depth);
  json j = io::module_to_json(v.module, &v.form);
  j["highest_weight"] = io::to_json(v.highest_weight);
  j["depth"] = v.depth;
  j["truncated"] = v.truncated;
  json reps = json::array();
  for (const auto& [mu, paths] : v.representatives) {
    json ps = json::array();
    for (const auto& p : paths) ps.push_back(p.to_string());
    reps.push_back(json{{"mu", io::to_json(mu)}, {"paths", ps}});
  }
  j["representatives"] = reps;
  emit(o, j, out);
  return kPass;
}

int cmd_verify_hr(const Options& o, std::ostream& out, std::ostream& err) {
  auto doc = load_module(io::read_file(o.input));
  if (!doc.form) throw io::FormatError("document has no form");
  const HRReport r = verify_hr(doc.module, *doc.form, upsets(o, doc.module.root_system().rank()));
  emit(o, io::to_json(r), out);
  if (!r.overall) err << "HR check failed\n";
  return r.overall ? kPass : kFail;
}

int cmd_decompose(const Options& o, std::ostream& out, std::ostream& err) {
  auto doc = load_module(io::read_file(o.input));
  if (!doc.form) throw io::FormatError("document has no form");
  const DecompositionResult d = decompose(doc.module, *doc.form);
  emit(o, io::to_json(d), out);
  if (!d.certified) err << "decomposition failed" << (d.failure ? ": " + d.failure->message : std::string()) << "\n";
  return d.certified ? kPass : kFail;
}

int cmd_verify_tilting(const Options& o, std::ostream& out, std::ostream& err) {
  auto doc = load_lattice(io::read_file(o.input));
  if (!doc.form) throw io::FormatError("document has no form");
  const auto& rs = doc.lattice.ambient.root_system();
  const TiltingVerdict v = verify_tilting(doc.lattice, *doc.form, upsets(o, rs.rank()));
  emit(o, io::to_json(v), out);
  if (!v.overall) err << v.failure << "\n";
  return v.overall ? kPass : kFail;
}

int cmd_char(const Options& o, std::ostream& out) {
  const RootSystem rs = root_system(o);
  const Weight lambda = highest_weight(o, rs);
  emit(o, io::character_to_json(lambda, oracle::freudenthal_character(rs, lambda)), out);
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"contravariant forms on weight-graded modules"};
  app.require_subcommand(1);
  Options o;

  auto add_root_system = [&o](CLI::App* c) {
    c->add_option("--type", o.type, "Cartan type, e.g. A2, B3, A1xA1");
    c->add_option("--cartan", o.cartan, "Cartan matrix, rows ';' entries ','");
    c->add_option("--lambda", o.lambda, "highest weight, fundamental coordinates 'a,b,...'")->required();
  };
  auto add_upsets = [&o](CLI::App* c) {
    c->add_option("--upset", o.upsets, "extra up-set, generators separated by ';'");
  };
  auto add_io = [&o](CLI::App* c, bool input) {
    if (input) c->add_option("input", o.input, "JSON document")->required();
    c->add_option("-o,--output", o.output, "write JSON here instead of stdout");
  };

  auto* vl = app.add_subcommand("vlambda", "construct V(lambda) with its contravariant form");
  add_root_system(vl);
  vl->add_option("--ring", o.ring, "Q, F<q> or Z<p>");
  vl->add_option("--depth", o.depth, "truncation depth below lambda");
  add_io(vl, false);

  auto* hr = app.add_subcommand("verify-hr", "check the HR axioms of a formed module");
  add_io(hr, true);
  add_upsets(hr);

  auto* dc = app.add_subcommand("decompose", "split into standard modules");
  add_io(dc, true);

  auto* vt = app.add_subcommand("verify-tilting", "tilting verdict for a lattice with form");
  add_io(vt, true);
  add_upsets(vt);

  auto* ch = app.add_subcommand("char", "Freudenthal character of V(lambda)");
  add_root_system(ch);
  add_io(ch, false);

  std::vector<std::string> argv_store{"hrf"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (vl->parsed()) return cmd_vlambda(o, out);
    if (hr->parsed()) return cmd_verify_hr(o, out, err);
    if (dc->parsed()) return cmd_decompose(o, out, err);
    if (vt->parsed()) return cmd_verify_tilting(o, out, err);
    return cmd_char(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const io::FormatError& e) {
    err << "format error: " << e.what() << "\n";
  } catch (const CharacteristicTwoError& e) {
    err << "unsupported ring: " << e.what() << "\n";
  } catch (const RootSystemError& e) {
    err << "root system: " << e.what() << "\n";
  } catch (const GradedModuleError& e) {
    err << "invalid module: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
  } catch (const SingularGramError& e) {
    // A verified mathematical failure: the form itself is degenerate.
    err << "degenerate form: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}

}  // namespace hrf::cli

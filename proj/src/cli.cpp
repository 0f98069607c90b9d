#include "kacwreath/cli.hpp"

#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "kacwreath/partitions.hpp"
#include "kacwreath/predictions.hpp"

namespace kw {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Face records

namespace {

Rational rational_field(const json& v, const std::string& field) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const InputError& e) {
      throw InputError("field \"" + field + "\": " + e.what());
    }
  }
  if (v.is_number_integer()) return Rational(BigInt(std::to_string(v.get<std::int64_t>())));
  throw InputError("field \"" + field + "\": expected a rational string \"p/q\"");
}

json str(const BigInt& z) { return z.get_str(); }
json str(const Rational& q) { return to_string(q); }
json str(long x) { return std::to_string(x); }

json vec_json(const std::vector<long>& v) {
  json a = json::array();
  for (long x : v) a.push_back(str(x));
  return a;
}

}  // namespace

ParameterFace parse_face(const json& j) {
  if (!j.is_object()) throw InputError("face must be a JSON object");
  static const std::set<std::string> known{"group", "n", "k", "lambda"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!known.count(it.key())) throw InputError("field \"" + it.key() + "\": unknown key");
  for (const auto& key : known)
    if (!j.contains(key)) throw InputError("field \"" + key + "\": missing");

  ParameterFace p;
  if (!j["group"].is_string()) throw InputError("field \"group\": expected a string");
  try {
    p.group = GammaDescriptor::parse(j["group"].get<std::string>());
  } catch (const InputError& e) {
    throw InputError(std::string("field \"group\": ") + e.what());
  }
  if (!j["n"].is_number_integer()) throw InputError("field \"n\": expected an integer");
  const auto n = j["n"].get<std::int64_t>();
  if (n < 1 || n > 1000) throw InputError("field \"n\": wreath index must be in 1..1000");
  p.n = static_cast<int>(n);

  const json& k = j["k"];
  if (k.is_string() && k.get<std::string>() == "irrational") {
    p.kclass = KClass::Irrational;
  } else if (k.is_object() && k.size() == 1 && k.contains("rational")) {
    p.kclass = KClass::Rational;
    p.k = rational_field(k["rational"], "k.rational");
  } else {
    throw InputError("field \"k\": expected \"irrational\" or {\"rational\": \"p/q\"}");
  }

  const json& lam = j["lambda"];
  if (!lam.is_array()) throw InputError("field \"lambda\": expected an array of [u, v] pairs");
  for (std::size_t i = 0; i < lam.size(); ++i) {
    const std::string f = "lambda[" + std::to_string(i) + "]";
    const json& e = lam[i];
    if (!e.is_array() || e.size() != 2) throw InputError("field \"" + f + "\": expected a pair [u, v]");
    p.lambda.push_back(LinK{rational_field(e[0], f + "[0]"), rational_field(e[1], f + "[1]")});
  }
  p.validate();
  return p;
}

ParameterFace parse_face_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("face is not valid JSON: ") + e.what());
  }
  return parse_face(j);
}

json face_to_json(const ParameterFace& p) {
  json j;
  j["group"] = p.group.name();
  j["n"] = p.n;
  if (p.kclass == KClass::Irrational)
    j["k"] = "irrational";
  else
    j["k"] = json{{"rational", to_string(p.k)}};
  json lam = json::array();
  for (const auto& x : p.lambda) lam.push_back(json::array({to_string(x.u), to_string(x.v)}));
  j["lambda"] = lam;
  return j;
}

// ---------------------------------------------------------------------------
// Report builders

namespace {

struct Config {
  std::string command;
  std::string face_path;
  std::string inline_face;
  std::string format = "json";
  std::optional<long> depth;
  std::optional<long> beta_bound;
  std::optional<long> affine_depth;
  std::string cache_dir;
  unsigned threads = 1;
  std::optional<long> ell;
  std::string group;
};

ParameterFace load_face(const Config& c) {
  if (!c.face_path.empty() && !c.inline_face.empty()) throw InputError("give either --face or --inline, not both");
  if (!c.inline_face.empty()) return parse_face_text(c.inline_face);
  if (c.face_path.empty()) throw InputError("this command needs --face FILE or --inline JSON");
  std::ifstream in(c.face_path);
  if (!in) throw InputError("cannot read face file \"" + c.face_path + "\"");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_face_text(ss.str());
}

WindowOptions window_options(const Config& c) {
  WindowOptions w;
  w.delta_depth = c.depth;
  w.beta_norm_bound = c.beta_bound;
  w.threads = c.threads;
  return w;
}

json hyperplane_json(const Hyperplane& h, long n) {
  json j;
  if (h.kind == Hyperplane::Kind::E) {
    j["kind"] = "E";
    j["m"] = str(h.m);
    j["N"] = str(h.N);
    j["aspherical"] = e_aspherical(h.m, h.N);
    return j;
  }
  j["kind"] = "H";
  j["alpha"] = vec_json(h.alpha);
  j["m"] = str(h.m);
  j["N"] = str(h.N);
  j["aspherical"] = h_aspherical(h.m, h.N, n);
  if (auto r = rectangle_witness(h.m, h.N, n))
    j["rectangle"] = json{{"a", str(r->a)}, {"b", str(r->b)}};
  else
    j["rectangle"] = nullptr;
  return j;
}

json cmd_hyperplanes(const Config& c) {
  const ParameterFace p = load_face(c);
  json out;
  out["command"] = "hyperplanes";
  out["face"] = face_to_json(p);
  json hs = json::array();
  const auto list = singular_hyperplanes(p);
  for (const auto& h : list) hs.push_back(hyperplane_json(h, p.n));
  out["hyperplanes"] = hs;
  const AsphericalResult a = is_aspherical_predicted(p);
  out["aspherical"] = a.aspherical;
  out["verdict"] = list.empty() ? "simple (predicted)" : a.aspherical ? "aspherical (predicted)" : "singular, not aspherical (predicted)";
  return out;
}

json gr_json(const GradedPrediction& g) {
  json j = json::object();
  for (const auto& [i, v] : g.gr) j[std::to_string(i)] = str(v);
  return j;
}

json gr2_json(const std::map<std::pair<long, long>, BigInt>& m) {
  json a = json::array();
  for (const auto& [ij, v] : m) a.push_back(json{{"i", str(ij.first)}, {"j", str(ij.second)}, {"dim", str(v)}});
  return a;
}

json subalgebra_json(const SubalgebraDescriptor& s) {
  json j;
  j["heisenberg_period"] = s.heisenberg_period ? json(str(*s.heisenberg_period)) : json(nullptr);
  json comps = json::array();
  for (const auto& c : s.components)
    comps.push_back(json{{"type", c.type}, {"rank", str(static_cast<long>(c.rank))}, {"affine", c.affine}});
  j["components"] = comps;
  json simples = json::array();
  for (const auto& r : s.simple_system) simples.push_back(json{{"alpha", vec_json(r.alpha)}, {"m", str(r.m)}});
  j["simple_system"] = simples;
  j["a_double_prime_rank"] = str(static_cast<long>(s.a_double_prime_rank));
  j["real_root_count"] = str(static_cast<long>(s.real_roots.size()));
  j["window"] = str(s.window);
  return j;
}

json crosscheck_entry(const std::string& name, const json& value, bool agree) {
  return json{{"name", name}, {"value", value}, {"agree", agree ? "yes" : "no"}};
}

bool is_omega0(const ParameterFace& p) {
  for (std::size_t i = 0; i < p.lambda.size(); ++i)
    if (p.lambda[i] != LinK{i == 0 ? Rational(1) : Rational(0), Rational(0)}) return false;
  return true;
}

json cmd_predict(const Config& c) {
  const ParameterFace p = load_face(c);
  const WindowOptions w = window_options(c);
  BranchingResult br = branching_prediction(p, w);
  if (!br.report.residual_ok) {
    std::string msg = "branching residual did not vanish";
    if (!br.report.diagnostics.empty()) msg += ": " + br.report.diagnostics.front();
    throw WindowExhausted(msg + " (enlarge --beta-bound or --depth)");
  }
  const GradedPrediction& g = br.prediction;
  json out;
  out["command"] = "predict";
  out["face"] = face_to_json(p);
  out["subalgebra"] = subalgebra_json(br.subalgebra);
  out["window"] = json{{"delta_depth", str(br.report.delta_depth)},
                       {"beta_norm_bound", str(br.report.beta_norm_bound)},
                       {"truncated", br.report.truncated}};
  out["residual_ok"] = br.report.residual_ok;
  out["diagnostics"] = br.report.diagnostics;
  json rows = json::array();
  for (const auto& r : br.report.rows) {
    if (r.weight_mult_at_target == 0) continue;
    json prof = json::object();
    for (const auto& [s, v] : r.degree_profile) prof[std::to_string(s)] = str(v);
    rows.push_back(json::array({vec_json(r.beta), str(r.j), str(r.hom_mult), str(r.weight_mult_at_target),
                                str(r.mu_norm_sq), prof}));
  }
  out["rows"] = rows;
  out["rows_total"] = str(static_cast<long>(br.report.rows.size()));
  out["gr"] = gr_json(g);
  if (g.gr2) out["gr2"] = gr2_json(*g.gr2);
  const BigInt findim = g.at(0);
  out["findim"] = str(findim);
  const long r = static_cast<long>(p.diagram().finite_rank());
  out["total"] = str(g.total());
  out["multipartition_count"] = str(multipartition_count(r + 1, p.n));

  json checks = json::array();
  if (p.k_integer()) {
    const GradedPrediction cf = closed_form_integer_k(p);
    checks.push_back(crosscheck_entry("closed_form", gr_json(cf), cf.gr == g.gr));
  }
  if (p.group.kind == GroupKind::Trivial && p.kclass == KClass::Rational && !is_integer(p.k)) {
    const GradedPrediction cf = closed_form_gamma1(p.n, p.k.get_den().get_si());
    checks.push_back(crosscheck_entry("closed_form", gr2_json(*cf.gr2), g.gr2 && *cf.gr2 == *g.gr2));
  }
  bool all_a1 = !br.subalgebra.components.empty();
  std::vector<long> mvec;
  for (const auto& comp : br.subalgebra.components) {
    if (comp.type != "A1") all_a1 = false;
    for (std::size_t s : comp.simples) mvec.push_back(br.subalgebra.simple_system[s].m);
  }
  if (all_a1) {
    const BigInt d = diophantine_count(mvec, p.n);
    checks.push_back(crosscheck_entry("diophantine", str(d), d == findim));
  }
  if (p.group.is_cyclic() && is_omega0(p) && p.kclass == KClass::Irrational) {
    const BigInt lr = levelrank_irrational(p.group.param, p.n);
    checks.push_back(crosscheck_entry("level_rank", str(lr), lr == findim));
  }
  if (p.group.is_cyclic() && is_omega0(p) && p.kclass == KClass::Rational && !is_integer(p.k)) {
    const BigInt lr = levelrank_rational(p.group.param, p.k.get_den().get_si(), p.n, c.affine_depth);
    checks.push_back(crosscheck_entry("level_rank_rational", str(lr), lr == findim));
  }
  out["crosschecks"] = checks;
  return out;
}

long resolve_ell(const Config& c) {
  if (c.ell) return *c.ell;
  if (!c.group.empty()) {
    const GammaDescriptor g = GammaDescriptor::parse(c.group);
    if (!g.is_cyclic()) throw UnsupportedRegime("cyclic-only computation requested for " + g.name());
    return g.param;
  }
  if (!c.face_path.empty() || !c.inline_face.empty()) {
    const ParameterFace p = load_face(c);
    if (!p.group.is_cyclic()) throw UnsupportedRegime("cyclic-only computation requested for " + p.group.name());
    return p.group.param;
  }
  throw InputError("this command needs --ell L, --group G or a face");
}

json matrix_json(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(str(m(i, j)));
    a.push_back(row);
  }
  return a;
}

json matrix_json(const RatMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(str(m(i, j)));
    a.push_back(row);
  }
  return a;
}

json poly_json(const QPolynomial& q) {
  json a = json::array();
  for (const auto& x : q.coeffs()) a.push_back(str(x));
  return a;
}

json cmd_gram(const Config& c) {
  const long ell = resolve_ell(c);
  if (ell < 2) throw InputError("--ell must be >= 2");
  std::vector<std::size_t> findim;
  for (long i = 1; i < ell; ++i) findim.push_back(static_cast<std::size_t>(i));
  const GramReport g = gram_report(cyclic_bgg_matrix(ell), findim, path_adjacency(ell));
  json out;
  out["command"] = "gram";
  out["ell"] = str(ell);
  out["N"] = matrix_json(g.N);
  out["C"] = matrix_json(g.C);
  out["C_inverse"] = matrix_json(g.C_inverse);
  out["findim_indices"] = vec_json(std::vector<long>(findim.begin(), findim.end()));
  out["findim_block"] = matrix_json(g.findim_block);
  out["positive_definite"] = g.positive_definite;
  out["q_det"] = poly_json(*g.q_det);
  json fac = json::array();
  for (auto [d, e] : g.q_det_factors->factors) fac.push_back(json{{"d", str(long(d))}, {"mult", str(long(e))}});
  out["q_det_cyclotomic"] = json{{"factors", fac}, {"remainder", poly_json(g.q_det_factors->remainder)}};
  out["nondegenerate_off_roots_of_unity"] = *g.nondegenerate_off_roots_of_unity;
  return out;
}

std::string group_label(const LatticeQuotient& q) {
  std::string s;
  for (std::size_t i = 0; i < q.free_rank; ++i) s += s.empty() ? "Z" : "+Z";
  for (const auto& t : q.torsion) s += (s.empty() ? "Z" : "+Z") + t.get_str();
  return s.empty() ? "0" : s;
}

json quotient_json(const LatticeQuotient& q) {
  json f = json::array();
  for (const auto& x : q.invariant_factors) f.push_back(str(x));
  json t = json::array();
  for (const auto& x : q.torsion) t.push_back(str(x));
  return json{{"invariant_factors", f}, {"free_rank", str(static_cast<long>(q.free_rank))}, {"torsion", t},
              {"group", group_label(q)}};
}

json cmd_snf(const Config& c) {
  json out;
  out["command"] = "snf";
  GammaDescriptor g;
  if (c.ell) {
    g = GammaDescriptor::cyclic(static_cast<int>(*c.ell));
  } else if (!c.group.empty()) {
    g = GammaDescriptor::parse(c.group);
  } else {
    g = load_face(c).group;
  }
  out["group"] = g.name();
  json center = json::array();
  for (const auto& x : center_group(g)) center.push_back(str(x));
  out["center"] = center;
  if (g.is_cyclic()) {
    const FiltrationLattices f = filtration_lattices_n1(g.param);
    out["F"] = quotient_json(f.F);
    out["boldF"] = quotient_json(f.boldF);
  }
  return out;
}

json cmd_dump_dynkin(const Config& c) {
  GammaDescriptor g;
  if (c.ell)
    g = GammaDescriptor::cyclic(static_cast<int>(*c.ell));
  else if (!c.group.empty())
    g = GammaDescriptor::parse(c.group);
  else
    g = load_face(c).group;
  const AffineDynkin d = affine_dynkin(g);
  json out;
  out["command"] = "dump-dynkin";
  out["group"] = g.name();
  out["type"] = d.type;
  out["order"] = str(g.order);
  out["r"] = str(static_cast<long>(g.r));
  out["vertices"] = str(static_cast<long>(d.size()));
  out["adjacency"] = matrix_json(d.adjacency);
  out["cartan"] = matrix_json(d.cartan);
  out["marks"] = vec_json(d.marks);
  return out;
}

json cmd_crosscheck(const Config& c) {
  const long nmax = c.depth.value_or(4);
  json out;
  out["command"] = "crosscheck";
  json rows = json::array();
  bool all = true;
  auto record = [&](const std::string& name, const std::string& params, const BigInt& a, const BigInt& b) {
    const bool ok = a == b;
    all = all && ok;
    rows.push_back(json{{"check", name}, {"params", params}, {"lhs", str(a)}, {"rhs", str(b)}, {"agree", ok ? "yes" : "no"}});
  };
  WindowOptions w;
  w.threads = c.threads;
  for (int ell : {2, 3})
    for (long n = 1; n <= nmax; ++n) {
      const ParameterFace p = ParameterFace::omega0_face(GammaDescriptor::cyclic(ell), static_cast<int>(n), KClass::Irrational);
      record("findim_vs_level_rank", "l=" + std::to_string(ell) + " n=" + std::to_string(n), count_findim(p, w),
             levelrank_irrational(ell, n));
    }
  for (int ell : {2, 3})
    for (long n = 1; n <= nmax; ++n) {
      const ParameterFace p = ParameterFace::omega0_face(GammaDescriptor::cyclic(ell), static_cast<int>(n), KClass::Rational, 0);
      record("sum_rule_k0", "l=" + std::to_string(ell) + " n=" + std::to_string(n), predicted_gr(p, w).total(),
             multipartition_count(ell, n));
    }
  for (long m : {2L, 3L})
    for (long n = 1; n <= nmax; ++n) {
      const ParameterFace p = ParameterFace::omega0_face(GammaDescriptor::trivial(), static_cast<int>(n),
                                                         KClass::Rational, make_rational(-1, m));
      const GradedPrediction b = predicted_gr2(p, w);
      const GradedPrediction cf = closed_form_gamma1(n, m);
      record("gamma1_two_index_total", "m=" + std::to_string(m) + " n=" + std::to_string(n), b.total(), cf.total());
    }
  for (int ell : {2, 3, 4}) {
    const AffineDynkin d = affine_dynkin(GammaDescriptor::cyclic(ell));
    std::vector<long> lab(d.size(), 0);
    lab[0] = 1;
    for (long n = 0; n <= nmax; ++n) {
      std::vector<long> cc(d.marks.begin(), d.marks.end());
      for (auto& x : cc) x *= n;
      record("basic_freudenthal_vs_frenkel_kac", "l=" + std::to_string(ell) + " n=" + std::to_string(n),
             freudenthal_affine(d, lab, cc, nmax), p_colored(ell - 1, n));
    }
  }
  out["checks"] = rows;
  out["all_agree"] = all;
  return out;
}

void flatten(const json& j, const std::string& prefix, std::ostringstream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << '\t' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string cache_key(const Config& c) {
  // Canonical description of the request; thread count and cache directory
  // do not enter since they never change results.
  std::ostringstream os;
  os << c.command << '\n';
  if (!c.face_path.empty() || !c.inline_face.empty())
    os << face_to_json(load_face(c)).dump() << '\n';
  os << "depth=" << (c.depth ? std::to_string(*c.depth) : "-") << " beta=" << (c.beta_bound ? std::to_string(*c.beta_bound) : "-")
     << " affine=" << (c.affine_depth ? std::to_string(*c.affine_depth) : "-") << " ell=" << (c.ell ? std::to_string(*c.ell) : "-")
     << " group=" << c.group;
  std::ostringstream hex;
  hex << std::hex << std::setw(16) << std::setfill('0') << fnv1a(os.str());
  return hex.str();
}

json dispatch(const Config& c) {
  if (c.command == "hyperplanes") return cmd_hyperplanes(c);
  if (c.command == "predict") return cmd_predict(c);
  if (c.command == "gram") return cmd_gram(c);
  if (c.command == "snf") return cmd_snf(c);
  if (c.command == "dump-dynkin") return cmd_dump_dynkin(c);
  if (c.command == "crosscheck") return cmd_crosscheck(c);
  throw InputError("unknown subcommand \"" + c.command + "\"");
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CliResult res;
  Config c;
  CLI::App app{"Exact predictions for wreath-product symplectic reflection algebras", "kacwreath"};
  app.add_option("subcommand", c.command, "hyperplanes | predict | gram | snf | dump-dynkin | crosscheck")->required();
  app.add_option("--face", c.face_path, "face JSON file");
  app.add_option("--inline", c.inline_face, "face JSON given inline");
  app.add_option("--format", c.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--depth", c.depth, "delta depth of the module window")->check(CLI::PositiveNumber);
  app.add_option("--beta-bound", c.beta_bound, "bound on beta^2 in the module window")->check(CLI::PositiveNumber);
  app.add_option("--affine-depth", c.affine_depth, "depth budget for level-rank Freudenthal runs")->check(CLI::PositiveNumber);
  app.add_option("--cache", c.cache_dir, "cache directory for JSON results");
  app.add_option("--threads", c.threads, "worker threads for window construction")->check(CLI::Range(1u, 256u));
  app.add_option("--ell", c.ell, "order of the cyclic group")->check(CLI::Range(2L, 64L));
  app.add_option("--group", c.group, "group name, e.g. cyclic:3 or binary_icosahedral");
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    res.out = app.help();
    return res;
  } catch (const CLI::ParseError& e) {
    res.exit_code = kExitInput;
    res.err = std::string("error: ") + e.what() + "\n";
    return res;
  }

  try {
    std::string key;
    std::filesystem::path cache_file;
    if (!c.cache_dir.empty()) {
      key = cache_key(c);
      cache_file = std::filesystem::path(c.cache_dir) / (c.command + "-" + key + ".json");
    }
    json report;
    bool hit = false;
    if (!cache_file.empty() && std::filesystem::exists(cache_file)) {
      std::ifstream in(cache_file);
      try {
        report = json::parse(in);
        hit = true;
      } catch (const json::parse_error&) {
        hit = false;  // corrupt entry: recompute and overwrite
      }
    }
    if (!hit) {
      report = dispatch(c);
      if (!cache_file.empty()) {
        std::filesystem::create_directories(c.cache_dir);
        std::ofstream outf(cache_file);
        outf << report.dump() << '\n';
      }
    }
    if (c.format == "tsv") {
      std::ostringstream os;
      flatten(report, "", os);
      res.out = os.str();
    } else {
      res.out = report.dump(2) + "\n";
    }
  } catch (const InputError& e) {
    res.exit_code = kExitInput;
    res.err = std::string("input error: ") + e.what() + "\n";
  } catch (const UnsupportedRegime& e) {
    res.exit_code = kExitUnsupported;
    res.err = std::string("unsupported regime: ") + e.what() + "\n";
  } catch (const WindowExhausted& e) {
    res.exit_code = kExitWindow;
    res.err = std::string("window exhausted: ") + e.what() + "\n";
  } catch (const ArithmeticError& e) {
    res.exit_code = kExitInput;
    res.err = std::string("arithmetic error: ") + e.what() + "\n";
  } catch (const CLI::Error& e) {
    res.exit_code = kExitInput;
    res.err = std::string("error: ") + e.what() + "\n";
  }
  return res;
}

}  // namespace kw

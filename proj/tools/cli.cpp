#include "cli.hpp"

#include "io.hpp"
#include "kronecker/kronecker.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace kronecker::cli {
namespace {

using io::AnyModule;
using io::json;

struct Options {
  std::string out_path;
  bool timing = false;

  // surveys
  std::string mode = "exhaustive";
  std::size_t count = 64;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> q;
  std::size_t d = 0;

  std::string property;
  std::string range = "-2:2";
  std::string kind;
  std::string action;
  std::vector<std::string> modules;

  // constructions
  bool rational = false;
  std::size_t r = 3;
  std::size_t vertex = 2;
  std::string basis;
  std::size_t s = 0;
  std::string g;
  std::size_t n = 2;
  std::string side = "top";
  bool all = false;
  bool inverse = false;
  bool with_basis = false;
};

struct Input {
  std::string source;
  json doc;
};

Input read_input(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(path);
    if (!file) throw io::InputError(path + ": cannot open file");
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  const std::string source = path == "-" ? "<stdin>" : path;
  return {source, io::parse_document(text, source)};
}

bool is_rational_doc(const json& doc) {
  return doc.is_object() && doc.contains("field") && doc["field"].is_object() && doc["field"].contains("rational");
}

// Exhaustive surveys need a finite field: rational inputs are read over F_5 unless --q says otherwise.
std::optional<std::uint64_t> field_override(const json& doc, const Options& o) {
  if (o.q) return o.q;
  if (o.mode == "exhaustive" && is_rational_doc(doc)) return 5;
  return std::nullopt;
}

Survey make_survey(const Options& o) {
  if (o.mode == "exhaustive") return Survey::exhaustive();
  if (o.mode == "sample") {
    if (o.count == 0) throw std::invalid_argument("--count must be positive");
    return Survey::sample(o.count, o.seed);
  }
  throw std::invalid_argument("unknown --mode " + o.mode + " (expected exhaustive or sample)");
}

int exit_for(Holds h) {
  switch (h) {
    case Holds::yes:
      return ok;
    case Holds::no:
      return property_fails;
    case Holds::evidence_only:
      return undetermined;
  }
  return error;
}

template <ExactField F>
json witness_json(const KroneckerModule<F>& m, const Subspace<F>& u) {
  return {{"basis", io::subspace_json(u)},
          {"soc_dim", soc_dim(m, u)},
          {"rad_dim", rad_dim(m, u)},
          {"hom_from_test_module", hom_dim(x_u_module(u).module, m)}};
}

template <ExactField F>
json verdict_json(const KroneckerModule<F>& m, const PropertyVerdict<F>& v) {
  json w = json::array();
  for (const auto& u : v.witnesses) w.push_back(witness_json(m, u));
  return {{"holds", to_string(v.holds)}, {"scope", to_string(v.scope)}, {"detail", v.detail}, {"witnesses", std::move(w)}};
}

template <ExactField F>
Matrix<F> parse_rows(const F& field, const std::string& text, const char* what) {
  std::vector<std::vector<typename F::value_type>> rows;
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<typename F::value_type> entries;
    std::stringstream es(row);
    std::string e;
    while (std::getline(es, e, ',')) {
      e.erase(std::remove_if(e.begin(), e.end(), ::isspace), e.end());
      if (e.empty()) throw std::invalid_argument(std::string(what) + ": empty entry in \"" + text + "\"");
      if constexpr (std::is_same_v<F, RationalField>) {
        entries.push_back(field.parse(e));
      } else {
        entries.push_back(field.from_integer(std::stoll(e)));
      }
    }
    rows.push_back(std::move(entries));
  }
  if (rows.empty() || rows.front().empty()) throw std::invalid_argument(std::string(what) + ": no entries");
  Matrix<F> m(field, rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw std::invalid_argument(std::string(what) + ": ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("--range expects LO:HI, got " + text);
  return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
}

struct Outcome {
  json payload;
  int code = ok;
  bool bare = false;  ///< emit the payload as is (module documents)
};

// ---- report commands ------------------------------------------------------

template <ExactField F>
Outcome check(const KroneckerModule<F>& m, const Options& o) {
  const auto survey = make_survey(o);
  PropertyVerdict<F> v;
  if (o.property == "esp") {
    v = has_equal_socle_property(m, o.d, survey);
  } else if (o.property == "erp") {
    v = has_equal_radical_property(m, o.d, survey);
  } else if (o.property == "csr") {
    v = has_constant_socle_rank(m, o.d, survey);
  } else if (o.property == "crr") {
    v = has_constant_radical_rank(m, o.d, survey);
  } else {
    throw std::invalid_argument("unknown property " + o.property + " (expected esp, erp, csr or crr)");
  }
  json result = {{"property", o.property},
                 {"d", o.d},
                 {"survey", survey.to_string()},
                 {"field", io::field_json(m.field())},
                 {"verdict", verdict_json(m, v)}};
  return {std::move(result), exit_for(v.holds)};
}

template <ExactField F>
Outcome profile(const KroneckerModule<F>& m, const Options& o) {
  const auto survey = make_survey(o);
  auto p = socle_rank_profile(m, o.d, survey);
  json obs = json::array();
  for (const auto& x : p.observations) {
    obs.push_back({{"basis", io::subspace_json(x.subspace)}, {"soc_dim", x.soc_dim}, {"rad_dim", x.rad_dim}});
  }
  return {{{"d", o.d},
           {"survey", survey.to_string()},
           {"scope", to_string(scope_of(survey))},
           {"field", io::field_json(m.field())},
           {"min_soc", p.min_soc},
           {"max_soc", p.max_soc},
           {"min_rad", p.min_rad},
           {"max_rad", p.max_rad},
           {"observations", std::move(obs)}}};
}

template <ExactField F>
Outcome stratum_cmd(const KroneckerModule<F>& m, const Options& o) {
  const auto survey = make_survey(o);
  auto s = stratum(m, survey);
  json v = json::array();
  for (std::size_t i = 0; i < s.verdicts.size(); ++i) {
    json entry = verdict_json(m, s.verdicts[i]);
    entry["d"] = i + 1;
    v.push_back(std::move(entry));
  }
  json level = s.level ? json(*s.level) : json(nullptr);
  return {{{"level", level}, {"survey", survey.to_string()}, {"scope", to_string(s.scope)}, {"esp", std::move(v)}}};
}

json optional_int(const std::optional<int>& x) { return x ? json(*x) : json(nullptr); }

template <ExactField F>
Outcome orbit(const KroneckerModule<F>& m, const Options& o) {
  const auto survey = make_survey(o);
  const auto [lo, hi] = parse_range(o.range);
  auto scan = cone_scan(m, lo, hi, survey);
  json rows = json::array();
  for (const auto& row : scan.rows) {
    json esp = json::array(), erp = json::array();
    for (const auto& v : row.esp) esp.push_back(to_string(v.holds));
    for (const auto& v : row.erp) erp.push_back(to_string(v.holds));
    rows.push_back({{"j", row.j}, {"dim", {row.dim.d1, row.dim.d2}}, {"esp", esp}, {"erp", erp}});
  }
  return {{{"survey", survey.to_string()},
           {"range", {lo, hi}},
           {"rows", std::move(rows)},
           {"stopped_below", optional_int(scan.stopped_below)},
           {"stopped_above", optional_int(scan.stopped_above)},
           {"m_candidate", optional_int(scan.m_candidate)},
           {"w_candidate", optional_int(scan.w_candidate)},
           {"width", optional_int(scan.width)},
           {"window_limited", scan.window_limited}}};
}

template <ExactField F>
Outcome tau_cmd(const KroneckerModule<F>& m, const Options& o) {
  auto t = o.inverse ? tau_inv(m) : tau(m);
  json stripped = o.inverse ? json{{"I1", t.stripped_1}, {"I2", t.stripped_2}} : json{{"P1", t.stripped_1}, {"P2", t.stripped_2}};
  return {{{"inverse", o.inverse},
           {"dim", {t.translate.dim().d1, t.translate.dim().d2}},
           {o.inverse ? "stripped_injectives" : "stripped_projectives", stripped},
           {"translate", io::module_json(t.translate)}}};
}

template <ExactField F>
Outcome hom_cmd(const KroneckerModule<F>& m, const KroneckerModule<F>& n, const Options& o) {
  require_compatible(m, n, "hom");
  auto basis = hom_basis(m, n);
  json result = {{"dim", basis.size()}};
  if (o.with_basis) {
    json b = json::array();
    for (const auto& f : basis) b.push_back({{"f1", io::matrix_json(f.f1)}, {"f2", io::matrix_json(f.f2)}});
    result["basis"] = std::move(b);
  }
  return {std::move(result)};
}

template <ExactField F>
Outcome ext_cmd(const KroneckerModule<F>& m, const KroneckerModule<F>& n, const Options&) {
  require_compatible(m, n, "ext");
  const auto e = ext_dim(m, n);
  const auto e2 = ext_dim_via_presentation(m, n);
  if (e != e2) throw std::logic_error("ext: Euler form and presentation disagree");
  json result = {{"dim", e},
                 {"hom_dim", hom_dim(m, n)},
                 {"euler_form", FormContext(m.r()).euler_form(m.dim(), n.dim())}};
  if (!m.is_zero() && !tau(m).stripped_any()) result["hom_into_translate"] = ext_dim_ar(m, n);
  return {std::move(result)};
}

// ---- constructions --------------------------------------------------------

template <ExactField F>
Outcome construct_from(const KroneckerModule<F>& m, const Options& o) {
  if (o.kind == "inflate") {
    return {io::module_json(inflate(m, o.s)), ok, true};
  }
  if (o.kind == "twist") {
    if (o.g.empty()) throw std::invalid_argument("construct twist needs --g");
    return {io::module_json(gl_twist(m, GLMatrix<F>(parse_rows(m.field(), o.g, "--g")))), ok, true};
  }
  if (o.kind == "tower") {
    if (o.side != "top" && o.side != "bottom") throw std::invalid_argument("--side must be top or bottom");
    auto tower = self_extension_tower(m, o.n, o.seed, o.side == "top" ? TowerSide::top : TowerSide::bottom);
    if (tower.empty()) throw std::invalid_argument("construct tower needs --n >= 1");
    if (!o.all) return {io::module_json(tower.back()), ok, true};
    json all = json::array();
    for (const auto& b : tower) all.push_back(io::module_json(b));
    return {std::move(all), ok, true};
  }
  throw std::invalid_argument("unknown construction " + o.kind);
}

template <ExactField F>
Outcome construct_fresh(const F& field, const Options& o) {
  if (o.kind == "xu") {
    if (o.basis.empty()) throw std::invalid_argument("construct xu needs --basis");
    return {io::module_json(x_u_module(Subspace<F>::from_basis(parse_rows(field, o.basis, "--basis"))).module), ok, true};
  }
  if (o.kind == "projective") return {io::module_json(projective(field, o.r, o.vertex)), ok, true};
  if (o.kind == "injective") return {io::module_json(injective(field, o.r, o.vertex)), ok, true};
  if (o.kind == "ringel-e") return {io::module_json(ringel_module(field)), ok, true};
  throw std::invalid_argument("unknown construction " + o.kind +
                              " (expected xu, projective, injective, ringel-e, inflate, twist or tower)");
}

Outcome grassmann(const Options& o) {
  if (!o.q) throw std::invalid_argument("grassmann needs --q");
  const PrimeField f(*o.q);
  require_grassmannian(o.d, o.r);
  const auto c = grassmannian_count(*o.q, o.d, o.r);
  json result = {{"d", o.d}, {"r", o.r}, {"q", *o.q}, {"count", c}};
  if (o.action == "enumerate") {
    json pts = json::array();
    for (const auto& u : grassmannian_points(f, o.d, o.r)) pts.push_back(io::subspace_json(u));
    result["points"] = std::move(pts);
  } else if (o.action != "count") {
    throw std::invalid_argument("grassmann expects enumerate or count");
  }
  return {std::move(result)};
}

// ---- plumbing -------------------------------------------------------------

template <class Fn>
Outcome with_module(const AnyModule& m, Fn fn) {
  return std::visit([&](const auto& x) { return fn(x); }, m);
}

template <class Fn>
Outcome with_pair(const AnyModule& a, const AnyModule& b, Fn fn) {
  return std::visit(
      [&](const auto& x) -> Outcome {
        using M = std::decay_t<decltype(x)>;
        const auto* y = std::get_if<M>(&b);
        if (!y) throw std::invalid_argument("the two modules are over different fields");
        return fn(x, *y);
      },
      a);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Representations of the generalized Kronecker quiver"};
  app.name("kronecker-cli");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", o.out_path, "Write the output to a file instead of standard output");
  app.add_flag("--timing", o.timing, "Include wall-clock time in reports");

  auto survey_opts = [&](CLI::App* c) {
    c->add_option("--mode", o.mode, "exhaustive or sample")->capture_default_str();
    c->add_option("--count", o.count, "Sample size")->capture_default_str();
    c->add_option("--seed", o.seed, "Sample seed")->capture_default_str();
    c->add_option("--q", o.q, "Read the module over F_q");
  };

  auto* check_cmd = app.add_subcommand("check", "Decide esp, erp, csr or crr for one d");
  check_cmd->add_option("property", o.property, "esp, erp, csr or crr")->required();
  check_cmd->add_option("module", o.modules, "Module file, or - for standard input")->required()->expected(1);
  check_cmd->add_option("--d", o.d, "Grassmannian dimension")->required();
  survey_opts(check_cmd);

  auto* profile_cmd = app.add_subcommand("profile", "Socle and radical dimensions per surveyed subspace");
  profile_cmd->add_option("module", o.modules, "Module file, or - for standard input")->required()->expected(1);
  profile_cmd->add_option("--d", o.d)->required();
  survey_opts(profile_cmd);

  auto* stratum_cmd_ = app.add_subcommand("stratum", "Smallest i with the equal i-socle property");
  stratum_cmd_->add_option("module", o.modules, "Module file, or - for standard input")->required()->expected(1);
  survey_opts(stratum_cmd_);

  auto* orbit_cmd = app.add_subcommand("orbit", "Scan the translates tau^j M for j in a window");
  orbit_cmd->add_option("module", o.modules, "Module file, or - for standard input")->required()->expected(1);
  orbit_cmd->add_option("--range", o.range, "Window LO:HI containing 0 (write --range=-3:3)")->capture_default_str();
  survey_opts(orbit_cmd);

  auto* construct_cmd = app.add_subcommand("construct", "Build a module");
  construct_cmd->add_option("kind", o.kind, "xu, projective, injective, ringel-e, inflate, twist or tower")->required();
  construct_cmd->add_option("module", o.modules, "Input module for inflate, twist and tower");
  construct_cmd->add_option("--q", o.q, "Prime field (default 5)");
  construct_cmd->add_flag("--rational", o.rational, "Work over the rationals");
  construct_cmd->add_option("--r", o.r, "Number of arrows")->capture_default_str();
  construct_cmd->add_option("--vertex", o.vertex, "Vertex 1 or 2")->capture_default_str();
  construct_cmd->add_option("--basis", o.basis, "Rows of a basis of U, e.g. \"1,0,0;0,1,0\"");
  construct_cmd->add_option("--s", o.s, "Target number of arrows for inflate");
  construct_cmd->add_option("--g", o.g, "Invertible r x r matrix for twist, rows separated by ';'");
  construct_cmd->add_option("--n", o.n, "Tower length")->capture_default_str();
  construct_cmd->add_option("--seed", o.seed, "Tower seed")->capture_default_str();
  construct_cmd->add_option("--side", o.side, "Extend on top or bottom")->capture_default_str();
  construct_cmd->add_flag("--all", o.all, "Emit every tower member");

  auto* grassmann_cmd = app.add_subcommand("grassmann", "Points of Gr(d, r) over F_q");
  grassmann_cmd->add_option("action", o.action, "enumerate or count")->required();
  grassmann_cmd->add_option("--d", o.d)->required();
  grassmann_cmd->add_option("--r", o.r)->required();
  grassmann_cmd->add_option("--q", o.q)->required();

  auto* dual_cmd = app.add_subcommand("dual", "The dual module");
  dual_cmd->add_option("module", o.modules, "Module file, or - for standard input")->required()->expected(1);
  dual_cmd->add_option("--q", o.q);

  auto* tau_cmd_ = app.add_subcommand("tau", "Auslander-Reiten translate");
  tau_cmd_->add_option("module", o.modules, "Module file, or - for standard input")->required()->expected(1);
  tau_cmd_->add_flag("--inverse", o.inverse, "Compute the inverse translate");
  tau_cmd_->add_option("--q", o.q);

  auto* hom_cmd_ = app.add_subcommand("hom", "dim Hom(M, N)");
  hom_cmd_->add_option("modules", o.modules, "Module files M and N")->required()->expected(2);
  hom_cmd_->add_flag("--basis", o.with_basis, "List a basis");
  hom_cmd_->add_option("--q", o.q);

  auto* ext_cmd_ = app.add_subcommand("ext", "dim Ext(M, N)");
  ext_cmd_->add_option("modules", o.modules, "Module files M and N")->required()->expected(2);
  ext_cmd_->add_option("--q", o.q);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : error;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    std::vector<Input> inputs;
    for (const auto& path : o.modules) inputs.push_back(read_input(path, in));
    auto module_at = [&](std::size_t i) {
      return io::parse_module(inputs.at(i).doc, inputs.at(i).source, field_override(inputs.at(i).doc, o));
    };

    Outcome result;
    if (check_cmd->parsed()) {
      result = with_module(module_at(0), [&](const auto& m) { return check(m, o); });
    } else if (profile_cmd->parsed()) {
      result = with_module(module_at(0), [&](const auto& m) { return profile(m, o); });
    } else if (stratum_cmd_->parsed()) {
      result = with_module(module_at(0), [&](const auto& m) { return stratum_cmd(m, o); });
    } else if (orbit_cmd->parsed()) {
      result = with_module(module_at(0), [&](const auto& m) { return orbit(m, o); });
    } else if (construct_cmd->parsed()) {
      const bool needs_input = o.kind == "inflate" || o.kind == "twist" || o.kind == "tower";
      if (needs_input != (o.modules.size() == 1)) {
        throw std::invalid_argument(needs_input ? "construct " + o.kind + " needs one input module"
                                                : "construct " + o.kind + " takes no input module");
      }
      if (needs_input) {
        result = with_module(io::parse_module(inputs[0].doc, inputs[0].source, o.q),
                             [&](const auto& m) { return construct_from(m, o); });
      } else if (o.rational) {
        result = construct_fresh(RationalField{}, o);
      } else {
        result = construct_fresh(PrimeField(o.q.value_or(5)), o);
      }
    } else if (grassmann_cmd->parsed()) {
      result = grassmann(o);
    } else if (dual_cmd->parsed()) {
      result = with_module(io::parse_module(inputs[0].doc, inputs[0].source, o.q),
                           [](const auto& m) { return Outcome{io::module_json(dual(m)), ok, true}; });
    } else if (tau_cmd_->parsed()) {
      result = with_module(io::parse_module(inputs[0].doc, inputs[0].source, o.q),
                           [&](const auto& m) { return tau_cmd(m, o); });
    } else if (hom_cmd_->parsed() || ext_cmd_->parsed()) {
      auto a = io::parse_module(inputs[0].doc, inputs[0].source, o.q);
      auto b = io::parse_module(inputs[1].doc, inputs[1].source, o.q);
      result = hom_cmd_->parsed() ? with_pair(a, b, [&](const auto& x, const auto& y) { return hom_cmd(x, y, o); })
                                  : with_pair(a, b, [&](const auto& x, const auto& y) { return ext_cmd(x, y, o); });
    }

    json doc = result.payload;
    if (!result.bare) {
      json in_list = json::array();
      for (const auto& i : inputs) in_list.push_back({{"source", i.source}, {"digest", io::digest(io::canonical(i.doc))}});
      doc = {{"command", args}, {"inputs", std::move(in_list)}, {"result", std::move(result.payload)}};
      if (o.timing) {
        doc["timing_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      }
    }
    const std::string text = doc.dump(2) + "\n";
    if (o.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out_path);
      if (!file) throw std::runtime_error("cannot write " + o.out_path);
      file << text;
    }
    return result.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return error;
  }
}

}  // namespace kronecker::cli

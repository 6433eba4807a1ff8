// grlie: exact computations for positively graded Lie algebras -- Betti
// tables, Koszul-type property checks, free products, quadratic duals and
// Kurosh decompositions, all truncated at a configurable internal degree.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "grlie/duality.hpp"
#include "grlie/products.hpp"
#include "grlie/report.hpp"

using namespace grlie;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitCap = 4;

struct Options {
  std::string file;
  std::string algebra, algebra_b;
  std::string which;
  std::string field_text;
  std::string strategy_text;
  std::string h1_text, h1_file;
  std::string part_a, part_b;
  int truncation = -1;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::int64_t cap = 1'000'000;
  std::string format = "table";
};

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Field parse_field_flag(const std::string& text) {
  if (text == "Q") return Field::rationals();
  if (!text.empty() && text[0] == 'F')
    return Field::prime_field(std::stoull(text.substr(1)));
  throw FieldError("bad field '" + text + "' (expected Q or F<p>)");
}

// resolve a stanza, applying --field / --truncation overrides
LiePresentation resolve(const PresentationFile& file, const Options& opt,
                        const std::string& name) {
  const LiePresentation* p = nullptr;
  if (!name.empty()) {
    p = file.find(name);
    if (!p) throw std::invalid_argument("no algebra named '" + name + "' in the input");
  } else if (file.stanzas.size() == 1) {
    p = &file.stanzas.front();
  } else {
    throw std::invalid_argument("the input has several stanzas; name one");
  }
  LiePresentation out = *p;
  if (!opt.field_text.empty()) out.field = parse_field_flag(opt.field_text);
  if (opt.truncation > 0) out.truncation = opt.truncation;
  return out;
}

RunConfig make_config(const Options& opt, const LiePresentation& pres,
                      const std::string& command) {
  RunConfig cfg;
  cfg.command = command;
  cfg.field = pres.field;
  cfg.truncation = pres.truncation;
  cfg.seed = opt.seed;
  cfg.strategy = opt.strategy_text.empty()
                     ? SubspaceStrategy::default_for(pres.field, opt.seed)
                     : SubspaceStrategy::parse(opt.strategy_text, opt.seed);
  cfg.jobs = opt.jobs;
  cfg.cap = opt.cap;
  cfg.format = opt.format;
  return cfg;
}

void emit(const RunConfig& cfg, const json& payload, const std::string& table_text) {
  if (cfg.format == "json") {
    std::cout << payload.dump(2) << "\n";
  } else {
    std::cout << table_text;
  }
}

// parse "1,0,2;0,1,1" or file content (one vector per line) into a span
Subspace parse_h1(const Options& opt, const Field& f, std::int64_t ambient) {
  std::string text = opt.h1_text;
  if (!opt.h1_file.empty()) {
    text = read_file(opt.h1_file);
    for (char& c : text)
      if (c == '\n') c = ';';
  }
  if (text.empty()) throw std::invalid_argument("kurosh needs --h1 or --h1-file");
  std::vector<Vec> rows;
  std::stringstream vs(text);
  std::string vec_text;
  while (std::getline(vs, vec_text, ';')) {
    if (vec_text.find_first_not_of(" \t\r") == std::string::npos) continue;
    Vec v;
    std::stringstream cs(vec_text);
    std::string coord;
    std::int64_t idx = 0;
    while (std::getline(cs, coord, ',')) {
      long num = 0, den = 1;
      if (auto slash = coord.find('/'); slash != std::string::npos) {
        num = std::stol(coord.substr(0, slash));
        den = std::stol(coord.substr(slash + 1));
      } else {
        num = std::stol(coord);
      }
      Scalar s = Scalar::of(f, num, den);
      if (!s.is_zero()) v.append(idx, s);
      ++idx;
    }
    if (idx != ambient)
      throw std::invalid_argument("H1 vector has " + std::to_string(idx) +
                                  " coordinates, ambient needs " + std::to_string(ambient));
    rows.push_back(std::move(v));
  }
  return Subspace::span(f, ambient, rows);
}

Subspace generator_span(const LiePresentation& pres, const Enveloping& env,
                        const std::string& names_csv) {
  std::vector<Vec> rows;
  std::stringstream ss(names_csv);
  std::string name;
  while (std::getline(ss, name, ',')) {
    int g = pres.generator_index(name);
    if (g < 0) throw std::invalid_argument("unknown generator '" + name + "'");
    rows.push_back(Vec::unit(g, Scalar::one(pres.field)));
  }
  return Subspace::span(pres.field, env.alg().dim(1), rows);
}

int cmd_betti(const Options& opt) {
  Timer timer;
  auto file = parse_presentation_file(read_file(opt.file));
  LiePresentation pres = resolve(file, opt, opt.algebra);
  RunConfig cfg = make_config(opt, pres, "betti");
  auto env = build_enveloping(pres, std::nullopt, opt.cap);
  BettiTable t = minimal_resolution(TrivialModule(env.algebra));
  KoszulCertificate cert = is_koszul(env.algebra);

  json payload = report_base(cfg, timer.ms());
  payload["algebra"] = pres.name;
  payload["betti"] = betti_to_json(t);
  payload["koszul"] = cert.koszul() ? "koszul-up-to-" + std::to_string(cfg.truncation)
                                    : "fails";
  if (cert.witness)
    payload["witness"] = {{"i", cert.witness->i}, {"j", cert.witness->j},
                          {"b", cert.witness->b}};
  std::ostringstream text;
  text << "algebra " << pres.name << " over " << cfg.field.name() << ", N = "
       << cfg.truncation << "\n"
       << t.text() << "koszul: " << payload["koszul"].get<std::string>() << "\n";
  emit(cfg, payload, text.str());
  return kExitPass;
}

int cmd_check(const Options& opt) {
  Timer timer;
  auto file = parse_presentation_file(read_file(opt.file));
  LiePresentation pres = resolve(file, opt, opt.algebra);
  RunConfig cfg = make_config(opt, pres, "check " + opt.which);
  bool pass = false;
  json payload = report_base(cfg, 0.0);
  payload["algebra"] = pres.name;
  std::ostringstream text;

  if (opt.which == "koszul") {
    auto env = build_enveloping(pres, std::nullopt, opt.cap);
    KoszulCertificate cert = is_koszul(env.algebra);
    pass = cert.koszul();
    payload["verdict"] = pass;
    payload["label"] = pass ? "koszul-up-to-" + std::to_string(cfg.truncation) : "fails";
    if (cert.witness)
      payload["witness"] = {{"i", cert.witness->i}, {"j", cert.witness->j},
                            {"b", cert.witness->b}};
  } else if (opt.which == "universally-koszul") {
    if (cfg.strategy.kind == SubspaceStrategy::Kind::Exhaustive && cfg.field.is_rational())
      throw std::invalid_argument("exhaustive strategy is not available over Q");
    auto dual = lie_to_comm(pres, std::nullopt, opt.cap);
    UniversalKoszulReport rep = is_universally_koszul(dual.algebra, cfg.strategy, opt.jobs);
    pass = rep.verdict;
    payload["verdict"] = pass;
    payload["label"] = rep.sampled ? "sampled" : "proved-up-to-" + std::to_string(rep.bound);
    payload["checked_ideals"] = rep.checked;
    if (rep.witness) payload["witness_ideal"] = subspace_to_json(*rep.witness);
  } else if (opt.which == "bloch-kato") {
    if (cfg.strategy.kind == SubspaceStrategy::Kind::Exhaustive && cfg.field.is_rational())
      throw std::invalid_argument("exhaustive strategy is not available over Q");
    auto env = build_enveloping(pres, std::nullopt, opt.cap);
    BlochKatoReport rep = is_bloch_kato(env, cfg.strategy, opt.jobs, opt.cap);
    pass = rep.verdict;
    payload["verdict"] = pass;
    payload["label"] = rep.sampled ? "sampled" : "proved-up-to-" + std::to_string(rep.bound);
    payload["checked_subspaces"] = rep.checked;
    if (rep.witness) {
      payload["witness_subspace"] = subspace_to_json(*rep.witness);
      payload["reason"] = rep.reason;
    }
  } else if (opt.which == "free") {
    FreenessReport rep = freeness_check(pres, std::nullopt, opt.cap);
    pass = rep.free_up_to_bound;
    payload["verdict"] = pass;
    payload["label"] = pass ? "free-up-to-" + std::to_string(rep.bound) : "not-free";
    payload["necklace_match"] = rep.necklace_match;
    payload["dims"] = rep.dims;
    if (rep.witness)
      payload["witness"] = {{"i", rep.witness->i}, {"j", rep.witness->j},
                            {"b", rep.witness->b}};
  } else {
    throw std::invalid_argument("unknown check '" + opt.which + "'");
  }
  payload["wall_time_ms"] = timer.ms();
  text << cfg.command << " on " << pres.name << ": " << (pass ? "true" : "false") << " ("
       << payload["label"].get<std::string>() << ")\n";
  emit(cfg, payload, text.str());
  return pass ? kExitPass : kExitCheckFailed;
}

int cmd_dual(const Options& opt) {
  Timer timer;
  auto file = parse_presentation_file(read_file(opt.file));
  LiePresentation pres = resolve(file, opt, opt.algebra);
  RunConfig cfg = make_config(opt, pres, "dual");
  auto dual = lie_to_comm(pres, std::nullopt, opt.cap);

  json payload = report_base(cfg, 0.0);
  payload["algebra"] = pres.name;
  payload["dual_generators"] = dual.dual.gen_names;
  payload["relation_dim"] = dual.dual.relations.dim();
  payload["dual_dims"] = dual.algebra->dims();
  payload["graded_commutative"] = dual.algebra->graded_commutative();
  auto env = build_enveloping(pres, std::nullopt, opt.cap);
  auto series = koszul_series_check(env, opt.cap);
  payload["series_check_advisory"] = series.pass;
  payload["wall_time_ms"] = timer.ms();
  std::ostringstream text;
  text << "quadratic dual of " << pres.name << ": dims "
       << scalar_list_str(dual.algebra->dims()) << ", " << dual.dual.relations.dim()
       << " relations, graded-commutative\n";
  emit(cfg, payload, text.str());
  return kExitPass;
}

int cmd_product(const Options& opt) {
  Timer timer;
  auto file = parse_presentation_file(read_file(opt.file));
  LiePresentation a = resolve(file, opt, opt.algebra);
  LiePresentation b = resolve(file, opt, opt.algebra_b);
  RunConfig cfg = make_config(opt, a, "product");
  cfg.truncation = std::min(a.truncation, b.truncation);

  LiePresentation prod = free_product_lie(a, b);
  auto env = build_enveloping(prod, std::nullopt, opt.cap);
  // the factor images split the degree-1 part by construction
  std::vector<Vec> arows, brows;
  for (int g = 0; g < a.num_generators(); ++g)
    arows.push_back(Vec::unit(g, Scalar::one(a.field)));
  for (int g = 0; g < b.num_generators(); ++g)
    brows.push_back(Vec::unit(a.num_generators() + g, Scalar::one(a.field)));
  MayerVietorisReport mv = mayer_vietoris_check(
      env, Subspace::span(a.field, env.alg().dim(1), arows),
      Subspace::span(a.field, env.alg().dim(1), brows));
  CohomologySumReport sum = cohomology_sum_check(a, b, cfg.truncation, opt.cap);

  const bool pass = mv.pass && sum.pass;
  json payload = report_base(cfg, timer.ms());
  payload["a"] = a.name;
  payload["b"] = b.name;
  payload["product"] = prod.str();
  payload["mayer_vietoris"] = {{"pass", mv.pass}, {"first_fail", mv.first_fail}};
  payload["cohomology_sum"] = {{"pass", sum.pass}};
  payload["betti"] = betti_to_json(sum.product_table);
  std::ostringstream text;
  text << "free product " << prod.name << ": mayer-vietoris "
       << (mv.pass ? "pass" : "FAIL") << ", cohomology sum " << (sum.pass ? "pass" : "FAIL")
       << "\n"
       << sum.product_table.text();
  emit(cfg, payload, text.str());
  return pass ? kExitPass : kExitCheckFailed;
}

int cmd_kurosh(const Options& opt) {
  Timer timer;
  auto file = parse_presentation_file(read_file(opt.file));
  LiePresentation a = resolve(file, opt, opt.algebra);
  LiePresentation b = resolve(file, opt, opt.algebra_b);
  RunConfig cfg = make_config(opt, a, "kurosh");
  cfg.truncation = opt.truncation > 0 ? opt.truncation : std::min(a.truncation, b.truncation);

  Subspace h1 = parse_h1(opt, a.field, a.num_generators() + b.num_generators());
  KuroshDecomposition d =
      kurosh_decompose(a, b, h1, cfg.strategy, cfg.truncation, opt.jobs, opt.cap);

  json payload = report_base(cfg, timer.ms());
  payload["a"] = a.name;
  payload["b"] = b.name;
  payload["decomposition"] = kurosh_to_json(d);
  std::ostringstream text;
  text << "kurosh decomposition of <H1> in " << a.name << " * " << b.name << ":\n"
       << "  |B_A| = " << d.basis.in_a.size() << ", |B_B| = " << d.basis.in_b.size()
       << ", |W| = " << d.basis.mixed.size() << "\n"
       << "  model: " << d.model.str() << "\n"
       << "  dims subalgebra " << scalar_list_str(d.subalgebra_dims) << "\n"
       << "  dims model      " << scalar_list_str(d.model_dims) << "\n"
       << "  verdict: " << (d.verified ? "verified" : "MISMATCH") << "\n";
  if (d.conditional) text << "  conditional: " << d.conditional_reason << "\n";
  emit(cfg, payload, text.str());
  return d.verified ? kExitPass : kExitCheckFailed;
}

int cmd_mv_check(const Options& opt) {
  Timer timer;
  auto file = parse_presentation_file(read_file(opt.file));
  LiePresentation pres = resolve(file, opt, opt.algebra);
  RunConfig cfg = make_config(opt, pres, "mv-check");
  auto env = build_enveloping(pres, std::nullopt, opt.cap);
  MayerVietorisReport rep =
      mayer_vietoris_check(env, generator_span(pres, env, opt.part_a),
                           generator_span(pres, env, opt.part_b));
  json payload = report_base(cfg, timer.ms());
  payload["algebra"] = pres.name;
  payload["pass"] = rep.pass;
  payload["first_fail"] = rep.first_fail;
  nlohmann::json degs = nlohmann::json::array();
  for (const auto& d : rep.degrees)
    degs.push_back({{"n", d.n},
                    {"dim_u", d.dim_u},
                    {"dim_ind_a", d.dim_ind_a},
                    {"dim_ind_b", d.dim_ind_b},
                    {"exact", d.exact}});
  payload["degrees"] = degs;
  std::ostringstream text;
  text << "mayer-vietoris on " << pres.name << ": " << (rep.pass ? "pass" : "FAIL");
  if (!rep.pass) text << " at degree " << rep.first_fail;
  text << "\n";
  emit(cfg, payload, text.str());
  return rep.pass ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for bigraded cohomology of graded Lie algebras"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", opt.field_text, "ground field override (Q or F<p>)");
    sub->add_option("--truncation", opt.truncation, "truncation bound override");
    sub->add_option("--strategy", opt.strategy_text,
                    "exhaustive | coordinate | coordinate+random(k)");
    sub->add_option("--seed", opt.seed, "seed for sampled strategies");
    sub->add_option("--jobs", opt.jobs, "worker threads for enumerations");
    sub->add_option("--format", opt.format, "table | json")
        ->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--cap", opt.cap, "resource cap on word-space sizes");
  };

  CLI::App* betti = app.add_subcommand("betti", "Betti table of the trivial module");
  betti->add_option("file", opt.file)->required();
  betti->add_option("algebra", opt.algebra);
  add_common(betti);

  CLI::App* check = app.add_subcommand("check", "decide a graded property");
  check->add_option("which", opt.which)
      ->required()
      ->check(CLI::IsMember({"koszul", "universally-koszul", "bloch-kato", "free"}));
  check->add_option("file", opt.file)->required();
  check->add_option("algebra", opt.algebra);
  add_common(check);

  CLI::App* dual = app.add_subcommand("dual", "quadratic dual of the envelope");
  dual->add_option("file", opt.file)->required();
  dual->add_option("algebra", opt.algebra);
  add_common(dual);

  CLI::App* product =
      app.add_subcommand("product", "free product with MV and cohomology checks");
  product->add_option("file", opt.file)->required();
  product->add_option("a", opt.algebra)->required();
  product->add_option("b", opt.algebra_b)->required();
  add_common(product);

  CLI::App* kurosh = app.add_subcommand("kurosh", "verified Kurosh decomposition");
  kurosh->add_option("file", opt.file)->required();
  kurosh->add_option("a", opt.algebra)->required();
  kurosh->add_option("b", opt.algebra_b)->required();
  kurosh->add_option("--h1", opt.h1_text, "vectors in A_1+B_1, ';'-separated");
  kurosh->add_option("--h1-file", opt.h1_file, "file with one vector per line");
  add_common(kurosh);

  CLI::App* mv = app.add_subcommand("mv-check", "Mayer-Vietoris sequence check");
  mv->add_option("file", opt.file)->required();
  mv->add_option("algebra", opt.algebra)->required();
  mv->add_option("--part-a", opt.part_a, "generator names of the A part")->required();
  mv->add_option("--part-b", opt.part_b, "generator names of the B part")->required();
  add_common(mv);

  CLI11_PARSE(app, argc, argv);

  try {
    if (betti->parsed()) return cmd_betti(opt);
    if (check->parsed()) return cmd_check(opt);
    if (dual->parsed()) return cmd_dual(opt);
    if (product->parsed()) return cmd_product(opt);
    if (kurosh->parsed()) return cmd_kurosh(opt);
    if (mv->parsed()) return cmd_mv_check(opt);
  } catch (const std::ios_base::failure& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const CapError& e) {
    std::cerr << "resource cap: " << e.what() << " (raise with --cap)\n";
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

#include "cli.hpp"

#include <cstdlib>

#include <CLI11.hpp>

#include "schur/error.hpp"
#include "schur/reproduce.hpp"

namespace schur::cli {

namespace {

int max_degree() {
  const char* env = std::getenv("SCHUR_MAX_DEGREE");
  if (!env || !*env) return 10;
  try {
    return std::stoi(env);
  } catch (const std::exception&) {
    throw SchemaError(std::string("SCHUR_MAX_DEGREE is not an integer: ") + env);
  }
}

void check_degree(const Partition& p) {
  const int cap = max_degree();
  if (p.size() > cap)
    throw PreconditionError("|" + p.str() + "| = " + std::to_string(p.size()) +
                            " exceeds SCHUR_MAX_DEGREE = " + std::to_string(cap));
}

Partition partition_arg(const std::string& text) {
  Partition p = parse_partition_list(text);
  check_degree(p);
  return p;
}

AmbientElement tensor_arg(const std::string& path) {
  AmbientElement a = ambient_from_json(read_json_file(path));
  check_degree(a.lambda);
  return a;
}

void emit(std::ostream& out, Json j, std::uint64_t seed) {
  if (j.is_object()) {
    j["seed"] = seed;
    if (!j.contains("schema")) j["schema"] = kSchemaVersion;
  }
  out << dump(j) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schur apolarity toolkit"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for random choices")->capture_default_str();

  std::string lambda_s, mu_s, nu_s, input, g_input, points_path, emit_what = "matrix";
  int n = 0, k = 0;
  bool dual = false, no_iterate = false, solve_flag = false, list = false;
  std::string reproduce_id;

  auto* basis = app.add_subcommand("basis", "Schur module basis in ambient coordinates");
  basis->add_option("--lambda", lambda_s)->required();
  basis->add_option("--n", n)->required();
  basis->add_flag("--dual", dual);

  auto* apol = app.add_subcommand("apolarity", "Schur apolarity action of g on f");
  apol->add_option("--input", input, "primal tensor")->required();
  apol->add_option("--dual-input", g_input, "dual tensor")->required();

  auto* cat = app.add_subcommand("catalecticant", "catalecticant matrix of f");
  cat->add_option("--input", input)->required();
  cat->add_option("--mu", mu_s)->required();
  cat->add_option("--emit", emit_what)->check(CLI::IsMember({"matrix", "rank", "kernel"}));

  auto* ideal = app.add_subcommand("ideal", "ideal piece of a flag point");
  ideal->add_option("--point", input)->required();
  ideal->add_option("--nu", nu_s)->required();
  ideal->add_flag("--no-iterate", no_iterate);

  auto* lower = app.add_subcommand("lower-bound", "lower bound on the lambda-rank");
  lower->add_option("--input", input)->required();

  auto* sigma = app.add_subcommand("classify-sigma2", "rank on the second secant of F(1,k;n)");
  sigma->add_option("--k", k)->required();
  sigma->add_option("--n", n)->required();
  sigma->add_option("--input", input)->required();

  auto* check = app.add_subcommand("check-decomposition", "apolarity lemma membership test");
  check->add_option("--input", input)->required();
  check->add_option("--points", points_path)->required();
  check->add_flag("--solve", solve_flag);

  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient and tableaux");
  lr->add_option("--lambda", lambda_s)->required();
  lr->add_option("--mu", mu_s)->required();
  lr->add_option("--nu", nu_s)->required();

  auto* dim = app.add_subcommand("dimension", "dimension of S_lambda C^n");
  dim->add_option("--lambda", lambda_s)->required();
  dim->add_option("--n", n)->required();

  auto* rep = app.add_subcommand("reproduce", "recompute a table or example");
  rep->add_option("id", reproduce_id);
  rep->add_flag("--list", list);

  std::vector<std::string> argv_store{"schur"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : schema_error;
  }

  try {
    if (*basis) {
      Partition lambda = partition_arg(lambda_s);
      if (n < 1 || n > 255) throw SchemaError("--n must lie in 1..255");
      auto labels = enumerate_sstd(SkewShape(lambda), n);
      Json items = Json::array();
      for (const auto& t : labels)
        items.push_back({{"tableau", to_json(t)}, {"element", to_json(basis_element(lambda, t, n, dual))}});
      emit(out, {{"lambda", to_json(lambda)}, {"n", n}, {"dual", dual},
                 {"dimension", labels.size()}, {"basis", items}}, seed);
    } else if (*apol) {
      AmbientElement f = tensor_arg(input);
      AmbientElement g = tensor_arg(g_input);
      if (f.dual || !g.dual) throw SchemaError("--input must be primal and --dual-input dual");
      emit(out, to_json(schur_apolarity(f, g)), seed);
    } else if (*cat) {
      AmbientElement f = tensor_arg(input);
      Partition mu = partition_arg(mu_s);
      auto c = catalecticant(f, mu);
      if (emit_what == "rank") {
        out << rank(c.matrix) << "\n";
      } else if (emit_what == "kernel") {
        ApolarPiece piece = apolar_piece(f, mu);
        Json vs = Json::array();
        for (const auto& v : piece.kernel) {
          Json coords = Json::object();
          for (const auto& [i, x] : v) coords[piece.labels[i].str()] = to_json(x);
          vs.push_back({{"coordinates", coords}, {"element", to_json(piece.element(v))}});
        }
        emit(out, {{"lambda", to_json(f.lambda)}, {"mu", to_json(mu)}, {"n", f.n},
                   {"rank", rank(c.matrix)}, {"kernel", vs}}, seed);
      } else {
        emit(out, {{"lambda", to_json(f.lambda)}, {"mu", to_json(mu)}, {"n", f.n},
                   {"rank", rank(c.matrix)}, {"matrix", to_json(c.matrix)}}, seed);
      }
    } else if (*ideal) {
      auto pts = points_from_json(read_json_file(input));
      if (pts.size() != 1) throw SchemaError("--point expects exactly one flag point");
      check_degree(pts.front().lambda);
      Partition nu = partition_arg(nu_s);
      IdealPiece piece = ideal_piece(pts.front(), nu, !no_iterate);
      Json basis_json = Json::array();
      for (const auto& b : piece.basis) basis_json.push_back(to_json(b));
      emit(out, {{"nu", to_json(nu)}, {"n", piece.n}, {"iterate", !no_iterate},
                 {"dimension", piece.basis.size()}, {"basis", basis_json}}, seed);
    } else if (*lower) {
      emit(out, to_json(lambda_rank_lower_bound(tensor_arg(input))), seed);
    } else if (*sigma) {
      emit(out, to_json(classify_sigma2(tensor_arg(input), k, n)), seed);
    } else if (*check) {
      AmbientElement f = tensor_arg(input);
      auto pts = points_from_json(read_json_file(points_path));
      bool member = decomposition_membership(f, pts);
      Json j{{"membership", member}};
      if (solve_flag) {
        if (!member) throw PreconditionError("tensor is not in the span of the points");
        auto coeffs = solve_coefficients(f, pts);
        Json cs = Json::array();
        for (const auto& c : *coeffs) cs.push_back(to_json(c));
        j["coefficients"] = cs;
      }
      emit(out, j, seed);
    } else if (*lr) {
      Partition lambda = partition_arg(lambda_s), mu = partition_arg(mu_s), nu = partition_arg(nu_s);
      std::vector<Tableau> ts;
      if (nu.contains(lambda) && nu.size() == lambda.size() + mu.size())
        ts = lr_tableaux(SkewShape(nu, lambda), mu);
      Json tabs = Json::array();
      for (const auto& t : ts) tabs.push_back(to_json(t));
      emit(out, {{"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"nu", to_json(nu)},
                 {"coefficient", ts.size()}, {"tableaux", tabs}}, seed);
    } else if (*dim) {
      Partition lambda = partition_arg(lambda_s);
      if (n < 1) throw SchemaError("--n must be positive");
      emit(out, {{"lambda", to_json(lambda)}, {"n", n},
                 {"dimension", schur_dimension(lambda, n)}}, seed);
    } else if (*rep) {
      if (list || reproduce_id.empty()) {
        Json ids = Json::array();
        for (const auto& r : reproductions()) ids.push_back({{"id", r.id}, {"title", r.title}});
        emit(out, {{"reproductions", ids}}, seed);
      } else {
        emit(out, reproduce(reproduce_id, seed), seed);
      }
    }
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << "\n";
    return schema_error;
  } catch (const std::invalid_argument& e) {
    err << "precondition failed: " << e.what() << "\n";
    return precondition_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return failure;
  }
  return ok;
}

}  // namespace schur::cli

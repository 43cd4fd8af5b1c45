#include "schur/json_io.hpp"

#include <fstream>
#include <sstream>

#include "schur/error.hpp"

namespace schur {

namespace {

std::string where(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw SchemaError("expected an object");
  auto it = j.find(name);
  if (it == j.end()) throw SchemaError(std::string("missing field \"") + name + "\"");
  return *it;
}

int int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer())
    throw SchemaError(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> ints_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(int_from_json(x, what));
  return out;
}

Json labels_json(const Labels& labels) {
  Json out = Json::array();
  if (labels)
    for (const auto& s : *labels) out.push_back(s);
  return out;
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::string msg = e.what();
    auto pos = msg.find("syntax error");
    if (pos != std::string::npos) msg = msg.substr(pos);
    throw SchemaError(source + ":" + where(text, e.byte == 0 ? 0 : e.byte - 1) +
                      ": malformed JSON: " + msg);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

std::string dump(const Json& j) { return j.dump(2); }

Partition parse_partition_list(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      parts.push_back(v);
    } catch (const std::exception&) {
      throw SchemaError("bad partition \"" + text + "\"");
    }
  }
  try {
    return Partition(parts);
  } catch (const std::invalid_argument& e) {
    throw SchemaError("bad partition \"" + text + "\": " + e.what());
  }
}

Rational rational_from_json(const Json& j) {
  try {
    if (j.is_number_integer()) return Rational(j.dump());
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
  throw SchemaError("rational must be a string \"p/q\" or an integer, got " + j.dump());
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Partition& p) { return p.parts(); }

Json to_json(const SkewShape& s) {
  Json j{{"shape", to_json(s.outer())}};
  if (!s.is_straight()) j["inner"] = to_json(s.inner());
  return j;
}

Json to_json(const Tableau& t) {
  Json j = to_json(t.shape());
  j["rows"] = t.rows();
  return j;
}

Json to_json(const AmbientElement& a) {
  Json terms = Json::array();
  const auto lengths = a.column_lengths();
  for (const auto& [key, c] : a.terms)
    terms.push_back({{"coeff", to_json(c)}, {"columns", split_key(key, lengths)}});
  return {{"schema", kSchemaVersion}, {"lambda", to_json(a.lambda)},
          {"n", a.n},                {"dual", a.dual},
          {"terms", terms}};
}

Json to_json(const SkewAmbientElement& a) {
  Json terms = Json::array();
  const auto lengths = a.column_lengths();
  for (const auto& [key, c] : a.terms)
    terms.push_back({{"coeff", to_json(c)}, {"columns", split_key(key, lengths)}});
  Json j{{"schema", kSchemaVersion}, {"n", a.n}, {"terms", terms}};
  j["lambda"] = to_json(a.shape.outer());
  j["mu"] = to_json(a.shape.inner());
  return j;
}

Json to_json(const FlagPoint& f) {
  Json subs = Json::array();
  for (const auto& m : f.subspaces) {
    Json rows = Json::array();
    for (const auto& r : m) {
      Json row = Json::array();
      for (const auto& x : r) row.push_back(to_json(x));
      rows.push_back(row);
    }
    subs.push_back(rows);
  }
  return {{"schema", kSchemaVersion}, {"lambda", to_json(f.lambda)}, {"n", f.n},
          {"subspaces", subs}};
}

Json to_json(const RationalMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [j, v] : m.row(i)) entries.push_back({i, j, to_json(v)});
  return {{"rows", m.rows()},
          {"cols", m.cols()},
          {"row_labels", labels_json(m.row_labels())},
          {"col_labels", labels_json(m.col_labels())},
          {"entries", entries}};
}

Json to_json(const LabeledVector& v) {
  Json out = Json::object();
  for (const auto& [i, c] : v.entries)
    out[v.basis_labels ? (*v.basis_labels)[i] : std::to_string(i)] = to_json(c);
  return out;
}

Json to_json(const Sigma2Verdict& v) {
  Json j{{"schema", kSchemaVersion},
         {"border_rank_class", to_string(v.border_rank_class)},
         {"rank_triple", {v.r1, v.r2, v.r3}},
         {"caveat", v.caveat}};
  j["rank"] = v.rank ? Json(*v.rank) : Json(nullptr);
  j["orbit_data"] = v.orbit ? Json{{"h", v.orbit->h}, {"lines_equal", v.orbit->lines_equal}}
                            : Json(nullptr);
  return j;
}

Json to_json(const LowerBound& b) {
  Json mus = Json::array();
  for (const auto& m : b.stage_mu) mus.push_back(to_json(m));
  return {{"schema", kSchemaVersion},
          {"bound", b.bound},
          {"stage_ranks", b.stage_ranks},
          {"stage_mu", mus}};
}

Partition partition_from_json(const Json& j) {
  try {
    return Partition(ints_from_json(j, "partition"));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("bad partition: ") + e.what());
  }
}

Tableau tableau_from_json(const Json& j) {
  Partition outer = partition_from_json(field(j, "shape"));
  Partition inner = j.contains("inner") ? partition_from_json(j["inner"]) : Partition{};
  const Json& rows = field(j, "rows");
  if (!rows.is_array()) throw SchemaError("rows must be an array");
  std::vector<std::vector<int>> rs;
  for (const auto& r : rows) rs.push_back(ints_from_json(r, "tableau row"));
  try {
    return Tableau(SkewShape(outer, inner), rs);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("bad tableau: ") + e.what());
  }
}

AmbientElement ambient_from_json(const Json& j) {
  if (j.contains("schema") && j["schema"] != kSchemaVersion)
    throw SchemaError("unsupported schema version " + j["schema"].dump());
  Partition lambda = partition_from_json(field(j, "lambda"));
  int n = int_from_json(field(j, "n"), "n");
  if (n < 1 || n > 255) throw SchemaError("n must lie in 1..255");
  bool dual = false;
  if (j.contains("dual")) {
    if (!j["dual"].is_boolean()) throw SchemaError("dual must be a boolean");
    dual = j["dual"].get<bool>();
  }
  AmbientElement out{lambda, n, dual, {}};
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw SchemaError("terms must be an array");
  const auto lengths = out.column_lengths();
  for (const auto& t : terms) {
    Rational c = rational_from_json(field(t, "coeff"));
    const Json& cols = field(t, "columns");
    if (!cols.is_array() || cols.size() != lengths.size())
      throw SchemaError("term needs " + std::to_string(lengths.size()) + " columns");
    std::vector<std::vector<int>> columns;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      columns.push_back(ints_from_json(cols[i], "column"));
      if (static_cast<int>(columns.back().size()) != lengths[i])
        throw SchemaError("column " + std::to_string(i + 1) + " must have length " +
                          std::to_string(lengths[i]));
      for (int x : columns.back())
        if (x < 1 || x > n) throw SchemaError("index " + std::to_string(x) + " outside 1.." + std::to_string(n));
    }
    add_scaled(out.terms, monomial(lambda, n, columns, c, dual).terms, 1);
  }
  return out;
}

FlagPoint flag_point_from_json(const Json& j) {
  FlagPoint f;
  f.lambda = partition_from_json(field(j, "lambda"));
  f.n = int_from_json(field(j, "n"), "n");
  if (f.n < 1 || f.n > 255) throw SchemaError("n must lie in 1..255");
  const Json& subs = field(j, "subspaces");
  if (!subs.is_array()) throw SchemaError("subspaces must be an array");
  for (const auto& m : subs) {
    if (!m.is_array()) throw SchemaError("subspace must be an array of rows");
    Matrix rows;
    for (const auto& r : m) {
      if (!r.is_array() || static_cast<int>(r.size()) != f.n)
        throw SchemaError("subspace rows must have length n");
      std::vector<Rational> row;
      for (const auto& x : r) row.push_back(rational_from_json(x));
      rows.push_back(row);
    }
    f.subspaces.push_back(rows);
  }
  return f;
}

std::vector<FlagPoint> points_from_json(const Json& j) {
  const Json* list = &j;
  if (j.is_object()) {
    if (!j.contains("points")) return {flag_point_from_json(j)};
    list = &j["points"];
  }
  if (!list->is_array()) throw SchemaError("points must be an array");
  std::vector<FlagPoint> out;
  for (const auto& p : *list) out.push_back(flag_point_from_json(p));
  return out;
}

}  // namespace schur

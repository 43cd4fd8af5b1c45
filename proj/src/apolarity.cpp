#include "schur/apolarity.hpp"

#include <algorithm>

#include "schur/error.hpp"

namespace schur {

namespace {

// e_I contracted with x_J for sorted blocks; sign 0 when J is not in I.
int contract_block(const Index* i, int k, const Index* j, int h, Key& rest) {
  int moves = 0, matched = 0;
  for (int p = 0; p < k; ++p) {
    if (matched < h && i[p] == j[matched]) {
      moves += p - matched;
      ++matched;
    } else {
      rest.push_back(i[p]);
    }
  }
  if (matched < h) return 0;
  return moves % 2 ? -1 : 1;
}

}  // namespace

Terms skew_apolarity(const Terms& t, int k, const Terms& s, int h) {
  if (h > k) throw PreconditionError("skew apolarity needs h <= k");
  Terms out;
  for (const auto& [tk, tc] : t) {
    if (static_cast<int>(tk.size()) != k)
      throw PreconditionError("wedge term has the wrong degree");
    for (const auto& [sk, sc] : s) {
      if (static_cast<int>(sk.size()) != h)
        throw PreconditionError("dual wedge term has the wrong degree");
      Key rest;
      int sign = contract_block(tk.data(), k, sk.data(), h, rest);
      if (sign) add_term(out, rest, Rational(sign) * tc * sc);
    }
  }
  return out;
}

SkewAmbientElement schur_apolarity(const AmbientElement& f,
                                   const AmbientElement& g) {
  if (f.n != g.n) throw PreconditionError("apolarity needs a common n");
  if (f.dual || !g.dual)
    throw PreconditionError("apolarity pairs a primal element with a dual one");
  if (!f.lambda.contains(g.lambda)) return SkewAmbientElement{SkewShape(), f.n, {}};
  SkewAmbientElement out{SkewShape(f.lambda, g.lambda), f.n, {}};
  const auto fl = f.column_lengths();
  auto gl = g.column_lengths();
  gl.resize(fl.size(), 0);
  for (const auto& [fk, fc] : f.terms)
    for (const auto& [gk, gc] : g.terms) {
      Key rest;
      int sign = 1;
      std::size_t fs = 0, gs = 0;
      for (std::size_t c = 0; c < fl.size() && sign; ++c) {
        sign *= contract_block(fk.data() + fs, fl[c], gk.data() + gs, gl[c], rest);
        fs += fl[c];
        gs += gl[c];
      }
      if (sign) add_term(out.terms, rest, Rational(sign) * fc * gc);
    }
  return out;
}

std::string key_label(const Key& key, const std::vector<int>& lengths) {
  std::string s;
  std::size_t start = 0;
  for (int len : lengths) {
    s += "[";
    for (int i = 0; i < len; ++i) {
      if (i) s += ",";
      s += std::to_string(key[start + i]);
    }
    s += "]";
    start += len;
  }
  return s;
}

CatalecticantMatrix catalecticant(const AmbientElement& f, const Partition& mu) {
  if (f.is_zero()) throw PreconditionError("catalecticant of the zero tensor");
  if (f.dual) throw PreconditionError("catalecticant needs a primal tensor");
  if (!f.lambda.contains(mu))
    throw PreconditionError(mu.str() + " does not fit in " + f.lambda.str() +
                            "; the catalecticant is the zero map");
  CatalecticantMatrix out{f.lambda, mu, f.n, {}, {}};
  const SkewShape shape(f.lambda, mu);
  const AmbientIndexer ix = indexer(shape, f.n);
  out.column_tableaux = enumerate_sstd(SkewShape(mu), f.n);
  std::vector<SparseVector> columns;
  std::vector<std::string> col_labels;
  for (const auto& s : out.column_tableaux) {
    auto img = schur_apolarity(f, basis_element(mu, s, f.n, true));
    columns.push_back(to_vector(img));
    col_labels.push_back(s.str());
  }
  out.matrix = RationalMatrix::from_columns(ix.dimension(), columns);
  std::vector<std::string> row_labels;
  row_labels.reserve(ix.dimension());
  const auto lengths = shape.column_lengths();
  for (std::size_t i = 0; i < ix.dimension(); ++i)
    row_labels.push_back(key_label(ix.key(i), lengths));
  out.matrix.set_labels(make_labels(std::move(row_labels)),
                        make_labels(std::move(col_labels)));
  return out;
}

std::size_t catalecticant_rank(const AmbientElement& f, const Partition& mu) {
  return rank(catalecticant(f, mu).matrix);
}

RationalMatrix module_matrix(const CatalecticantMatrix& c) {
  const Subspace& module = skew_module(c.codomain(), c.n);
  const auto cols = c.matrix.columns();
  std::vector<SparseVector> coords;
  for (const auto& col : cols) coords.push_back(from_dense(module.coordinates(col)));
  RationalMatrix m = RationalMatrix::from_columns(module.dim(), coords);
  const auto lengths = c.codomain().column_lengths();
  std::vector<std::string> rows;
  for (auto p : module.pivots())
    rows.push_back(key_label(indexer(c.codomain(), c.n).key(p), lengths));
  m.set_labels(make_labels(std::move(rows)), c.matrix.col_labels());
  return m;
}

AmbientElement ApolarPiece::element(const SparseVector& v) const {
  AmbientElement out{mu, n, true, {}};
  for (const auto& [i, c] : v)
    add_scaled(out.terms, basis_element(mu, labels.at(i), n, true).terms, c);
  return out;
}

std::vector<AmbientElement> ApolarPiece::elements() const {
  std::vector<AmbientElement> out;
  for (const auto& v : kernel) out.push_back(element(v));
  return out;
}

Subspace ApolarPiece::label_space() const {
  return span(labels.size(), kernel);
}

ApolarPiece apolar_piece(const AmbientElement& f, const Partition& mu) {
  CatalecticantMatrix c = catalecticant(f, mu);
  return ApolarPiece{mu, f.n, c.column_tableaux, kernel_vectors(c.matrix)};
}

bool apolar_contains(const AmbientElement& f, const AmbientElement& g) {
  return schur_apolarity(f, g).is_zero();
}

SkewAmbientElement image_generator(const AmbientElement& f, const Partition& mu) {
  CatalecticantMatrix c = catalecticant(f, mu);
  if (rank(c.matrix) != 1)
    throw PreconditionError("image_generator needs a rank one catalecticant");
  for (const auto& col : c.matrix.columns())
    if (!col.empty()) return skew_from_vector(c.codomain(), c.n, primitive(col));
  throw PreconditionError("catalecticant has no nonzero column");
}

std::optional<AmbientElement> as_straight(const SkewAmbientElement& a) {
  const auto& outer = a.shape.outer();
  const auto& inner = a.shape.inner();
  if (inner.empty())
    return AmbientElement{outer, a.n, false, a.terms};
  const int e = inner.row(1);
  if (inner != rectangle(e, outer.length())) return std::nullopt;
  std::vector<int> parts;
  for (int p : outer.parts()) parts.push_back(p - e);
  return AmbientElement{Partition(parts), a.n, false, a.terms};
}

}  // namespace schur

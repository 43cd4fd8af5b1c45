#include "schur/ideals.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <tuple>

#include "schur/error.hpp"

namespace schur {

namespace {

// Positions of the cells of every row of the shape, under column_filling.
std::vector<std::vector<int>> row_positions(const SkewShape& shape) {
  Tableau t0 = column_filling(shape);
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= shape.outer().length(); ++i) {
    out.emplace_back();
    for (int j = shape.inner().row(i) + 1; j <= shape.outer().row(i); ++j)
      out.back().push_back(t0.at(i, j) - 1);
  }
  return out;
}

int position(const SkewShape& shape, const Cell& c) {
  return column_filling(shape).at(c) - 1;
}

void sort_rows(Key& w, const std::vector<std::vector<int>>& rows) {
  for (const auto& r : rows) {
    std::vector<Index> ls;
    for (int p : r) ls.push_back(w[p]);
    std::sort(ls.begin(), ls.end());
    for (std::size_t i = 0; i < r.size(); ++i) w[r[i]] = ls[i];
  }
}

Rational row_multiplicity(const Key& w, const std::vector<std::vector<int>>& rows) {
  Integer m = 1;
  for (const auto& r : rows) {
    std::map<Index, int> count;
    for (int p : r) ++count[w[p]];
    for (const auto& [x, c] : count)
      for (int i = 2; i <= c; ++i) m *= i;
  }
  return Rational(m);
}

// Calls visit on every distinct word obtained by rearranging rows of w.
void for_each_arrangement(const Key& w, const std::vector<std::vector<int>>& rows,
                          const std::function<void(const Key&)>& visit) {
  Key cur = w;
  std::function<void(std::size_t)> rec = [&](std::size_t r) {
    if (r == rows.size()) {
      visit(cur);
      return;
    }
    std::vector<Index> ls;
    for (int p : rows[r]) ls.push_back(w[p]);
    std::sort(ls.begin(), ls.end());
    do {
      for (std::size_t i = 0; i < ls.size(); ++i) cur[rows[r][i]] = ls[i];
      rec(r + 1);
    } while (std::next_permutation(ls.begin(), ls.end()));
  };
  rec(0);
}

void check_lr(const Partition& lambda, const Partition& mu, const Partition& nu,
              const Tableau& t) {
  if (t.shape() != SkewShape(nu, lambda) || !is_lr_tableau(t) ||
      Partition(t.content()) != mu)
    throw PreconditionError("tableau is not an LR tableau of shape " +
                            SkewShape(nu, lambda).str() + " and content " +
                            mu.str());
}

}  // namespace

SymTensor to_sym(const AmbientElement& g) {
  SymTensor out{SkewShape(g.lambda), g.n, {}};
  const auto rows = row_positions(out.shape);
  for (const auto& [w, c] : ambient_to_word(g).terms) {
    Key k = w;
    sort_rows(k, rows);
    add_term(out.terms, k, c);
  }
  return out;
}

SymTensor rearrange(const Tableau& t, const SymTensor& h) {
  const SkewShape& target = t.shape();
  const Partition mu(t.content());
  if (h.shape != SkewShape(mu))
    throw PreconditionError("rearrange: tensor shape does not match tableau content");
  const auto sigma = sigma_map(t);
  std::vector<std::pair<int, int>> moves;  // (target position, source position)
  for (const auto& [x, y] : sigma)
    moves.emplace_back(position(target, x), position(h.shape, y));
  const auto src_rows = row_positions(h.shape);
  const auto dst_rows = row_positions(target);
  SymTensor out{target, h.n, {}};
  for (const auto& [m, c] : h.terms) {
    const Rational weight = c * row_multiplicity(m, src_rows);
    for_each_arrangement(m, src_rows, [&](const Key& u) {
      Key w(u.size());
      for (const auto& [to, from] : moves) w[to] = u[from];
      sort_rows(w, dst_rows);
      add_term(out.terms, w, weight);
    });
  }
  return out;
}

SymTensor multiply_rows(const SymTensor& g, const SymTensor& h_skew) {
  if (!g.shape.is_straight() || h_skew.shape.inner() != g.shape.outer())
    throw PreconditionError("multiply_rows: shapes do not fit together");
  const SkewShape nu(h_skew.shape.outer());
  const auto g_rows = row_positions(g.shape);
  const auto h_rows = row_positions(h_skew.shape);
  const auto nu_rows = row_positions(nu);
  SymTensor out{nu, g.n, {}};
  for (const auto& [gk, gc] : g.terms)
    for (const auto& [hk, hc] : h_skew.terms) {
      Key w(nu.size());
      for (std::size_t i = 0; i < nu_rows.size(); ++i) {
        std::vector<Index> ls;
        if (i < g_rows.size())
          for (int p : g_rows[i]) ls.push_back(gk[p]);
        for (int p : h_rows[i]) ls.push_back(hk[p]);
        std::sort(ls.begin(), ls.end());
        for (std::size_t j = 0; j < ls.size(); ++j) w[nu_rows[i][j]] = ls[j];
      }
      add_term(out.terms, w, gc * hc);
    }
  return out;
}

AmbientElement antisymmetrize(const SymTensor& s, bool dual) {
  if (!s.shape.is_straight())
    throw PreconditionError("antisymmetrize needs a straight shape");
  AmbientElement out{s.shape.outer(), s.n, dual, {}};
  for (const auto& [m, c] : s.terms) {
    std::vector<int> letters(m.begin(), m.end());
    add_scaled(out.terms, symmetrize_word(s.shape, letters), c);
  }
  return out;
}

AmbientElement multiplication_map(const Partition& lambda, const Partition& mu,
                                  const Partition& nu, const Tableau& t,
                                  const AmbientElement& g,
                                  const AmbientElement& h) {
  check_lr(lambda, mu, nu, t);
  if (g.lambda != lambda || h.lambda != mu || g.n != h.n || g.dual != h.dual)
    throw PreconditionError("multiplication_map: factors do not match the shapes");
  SymTensor prod = multiply_rows(to_sym(g), rearrange(t, to_sym(h)));
  return antisymmetrize(prod, g.dual);
}

AmbientElement symmetric_product(const std::vector<std::vector<Rational>>& xs,
                                 int n) {
  const int m = static_cast<int>(xs.size());
  AmbientElement out{Partition(std::vector<int>{m}), n, true, {}};
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Terms partial{{Key(), Rational(1)}};
    for (int i : perm) {
      Terms next;
      for (const auto& [k, c] : partial)
        for (int j = 0; j < n; ++j) {
          if (is_zero(xs[i][j])) continue;
          Key nk = k;
          nk.push_back(static_cast<Index>(j + 1));
          add_term(next, nk, c * xs[i][j]);
        }
      partial = std::move(next);
    }
    add_scaled(out.terms, partial, 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<Generator> ideal_generators(const FlagPoint& f) {
  const auto chain = annihilator_chain(f);
  const auto heights = column_structure(f.lambda).heights;
  std::vector<Generator> out;
  for (std::size_t i = 0; i < chain.size(); ++i)
    out.push_back(Generator{f.lambda.row(heights[i] + 1) + 1, chain[i]});
  return out;
}

Subspace IdealPiece::subspace() const {
  Subspace s(indexer(nu, n).dimension());
  for (const auto& b : basis) s.insert(to_vector(b));
  return s;
}

namespace {

// Images of single ambient monomials under a fixed product with a dual basis
// element; shared across flags.
using OperatorId = std::tuple<Partition, Partition, Partition, int, int, bool, std::size_t>;

std::mutex operator_mutex;
std::map<OperatorId, std::map<Key, SparseVector>> operator_cache;

class Products {
 public:
  Products(const Partition& ideal_shape, const Partition& mu, const Partition& nu,
           int t_index, const Tableau& t, int n, bool ideal_left)
      : ideal_shape_(ideal_shape), mu_(mu), nu_(nu), t_(t), n_(n),
        ideal_left_(ideal_left), t_index_(t_index) {}

  SparseVector apply(const SparseVector& g, std::size_t s_index,
                     const AmbientElement& h) {
    const AmbientIndexer in = indexer(ideal_shape_, n_);
    const std::size_t dim = indexer(nu_, n_).dimension();
    std::vector<Rational> acc(dim);
    std::vector<bool> touched(dim, false);
    for (const auto& [i, c] : g) {
      const SparseVector& img = image(in.key(i), s_index, h);
      for (const auto& [j, x] : img) {
        acc[j] += c * x;
        touched[j] = true;
      }
    }
    SparseVector out;
    for (std::size_t j = 0; j < dim; ++j)
      if (touched[j] && !is_zero(acc[j])) out.emplace_back(j, acc[j]);
    return out;
  }

 private:
  const SparseVector& image(const Key& key, std::size_t s_index,
                            const AmbientElement& h) {
    OperatorId id{ideal_shape_, mu_, nu_, t_index_, n_, ideal_left_, s_index};
    {
      std::lock_guard<std::mutex> lock(operator_mutex);
      auto& m = operator_cache[id];
      auto it = m.find(key);
      if (it != m.end()) return it->second;
    }
    AmbientElement e{ideal_shape_, n_, true, {{key, Rational(1)}}};
    AmbientElement r = ideal_left_
                           ? multiplication_map(ideal_shape_, mu_, nu_, t_, e, h)
                           : multiplication_map(mu_, ideal_shape_, nu_, t_, h, e);
    SparseVector v = to_vector(r);
    std::lock_guard<std::mutex> lock(operator_mutex);
    return operator_cache[id].emplace(key, std::move(v)).first->second;
  }

  Partition ideal_shape_, mu_, nu_;
  Tableau t_;
  int n_;
  bool ideal_left_;
  int t_index_;
};

class IdealBuilder {
 public:
  IdealBuilder(const FlagPoint& f, bool iterate)
      : n_(f.n), iterate_(iterate) {
    for (const auto& g : ideal_generators(f)) {
      Partition shape(std::vector<int>{g.degree});
      Subspace s(indexer(shape, n_).dimension());
      if (!g.perp.empty()) {
        std::vector<int> idx(g.degree, 0);
        const int r = static_cast<int>(g.perp.size());
        std::function<void(int, int)> rec = [&](int pos, int lo) {
          if (pos == g.degree) {
            std::vector<std::vector<Rational>> xs;
            for (int i : idx) xs.push_back(g.perp[i]);
            s.insert(to_vector(symmetric_product(xs, n_)));
            return;
          }
          for (int v = lo; v < r; ++v) {
            idx[pos] = v;
            rec(pos + 1, v);
          }
        };
        rec(0, 0);
      }
      generators_.emplace(shape, std::move(s));
    }
  }

  const Subspace& piece(const Partition& nu) {
    auto it = memo_.find(nu);
    if (it != memo_.end()) return it->second;
    const std::size_t dim = indexer(nu, n_).dimension();
    const std::size_t cap = schur_dimension(nu, n_);
    Subspace s(dim);
    auto g = generators_.find(nu);
    if (g != generators_.end()) s = g->second;
    for (const auto& rho : subpartitions(nu)) {
      if (s.dim() == cap) break;
      if (rho.empty() || rho == nu) continue;
      const Subspace* ideal = nullptr;
      if (iterate_) {
        ideal = &piece(rho);
      } else {
        auto gi = generators_.find(rho);
        if (gi == generators_.end()) continue;
        ideal = &gi->second;
      }
      if (ideal->dim() == 0) continue;
      const auto ideal_basis = ideal->basis();
      for (const auto& mu : partitions_of(nu.size() - rho.size(), n_)) {
        if (!nu.contains(mu)) continue;
        const auto duals = schur_basis(mu, n_, true);
        const auto left = lr_tableaux(SkewShape(nu, rho), mu);
        for (std::size_t ti = 0; ti < left.size(); ++ti) {
          Products p(rho, mu, nu, static_cast<int>(ti), left[ti], n_, true);
          for (std::size_t si = 0; si < duals.size(); ++si)
            for (const auto& v : ideal_basis) s.insert(p.apply(v, si, duals[si]));
        }
        const auto right = lr_tableaux(SkewShape(nu, mu), rho);
        for (std::size_t ti = 0; ti < right.size(); ++ti) {
          Products p(rho, mu, nu, static_cast<int>(ti), right[ti], n_, false);
          for (std::size_t si = 0; si < duals.size(); ++si)
            for (const auto& v : ideal_basis) s.insert(p.apply(v, si, duals[si]));
        }
      }
    }
    return memo_.emplace(nu, std::move(s)).first->second;
  }

 private:
  int n_;
  bool iterate_;
  std::map<Partition, Subspace> generators_;
  std::map<Partition, Subspace> memo_;
};

IdealPiece make_piece(std::vector<FlagPoint> points, const Partition& nu, int n,
                      const Subspace& s) {
  IdealPiece out{std::move(points), nu, n, {}};
  for (const auto& v : s.basis())
    out.basis.push_back(ambient_from_vector(nu, n, true, primitive(v)));
  return out;
}

}  // namespace

IdealPiece ideal_piece(const FlagPoint& f, const Partition& nu, bool iterate) {
  validate(f);
  IdealBuilder b(f, iterate);
  return make_piece({f}, nu, f.n, b.piece(nu));
}

IdealPiece ideal_intersection(const std::vector<FlagPoint>& points,
                              const Partition& nu, bool iterate) {
  if (points.empty()) throw PreconditionError("ideal of an empty set of points");
  std::vector<Subspace> spaces;
  for (const auto& f : points) {
    if (f.n != points.front().n)
      throw PreconditionError("points live in different spaces");
    validate(f);
    IdealBuilder b(f, iterate);
    spaces.push_back(b.piece(nu));
  }
  return make_piece(points, nu, points.front().n, intersect(spaces));
}

bool verify_top_degree(const FlagPoint& f) {
  const AmbientElement p = flag_tensor(f);
  const ApolarPiece perp = apolar_piece(p, f.lambda);
  Subspace apolar(indexer(f.lambda, f.n).dimension());
  for (const auto& e : perp.elements()) apolar.insert(to_vector(e));
  const Subspace ideal = ideal_piece(f, f.lambda).subspace();
  return is_subspace(ideal, apolar) && is_subspace(apolar, ideal);
}

}  // namespace schur

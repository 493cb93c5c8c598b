// Copyright 2026 The OMG Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <numeric>

#include "omg/games.hpp"

namespace omg {

namespace {

double total(std::span<const double> x) { return std::accumulate(x.begin(), x.end(), 0.0); }

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// F_i = alpha_i - beta (s - x_i) / s^2 and its Jacobian (beta/s^2)(1 - 2 x_i/s + delta_ij).
Vec congested_field(double beta, std::span<const double> alpha, std::span<const double> x) {
  const double s = total(x);
  Vec f(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) f[i] = alpha[i] - beta * (s - x[i]) / (s * s);
  return f;
}

Matrix congested_jacobian(double beta, std::span<const double> x) {
  const double s = total(x);
  const std::size_t n = x.size();
  Matrix J(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) J(i, j) = beta / (s * s) * (1.0 - 2.0 * x[i] / s + (i == j ? 1.0 : 0.0));
  return J;
}

}  // namespace

GameMap make_counterexample() {
  GameMap m;
  m.name = "counterexample";
  m.dimension = 2;
  m.region = FeasibleRegion::cube(2, 0.0, 1.0);
  m.eval = [](std::span<const double> x) {
    const double r = x[0];
    const double c = x[1];
    return Vec{r * r + 2 * r * c + c * c, -2 * r * r + 2 * r * c + c * c};
  };
  m.jacobian_analytic = [](std::span<const double> x) {
    const double r = x[0];
    const double c = x[1];
    return Matrix{{2 * r + 2 * c, 2 * r + 2 * c}, {-4 * r + 2 * c, 2 * r + 2 * c}};
  };
  return m;
}

GameMap make_cournot(const CournotParams& p) {
  require(p.a > 0 && p.b > 0, "cournot: a and b must be positive");
  require(!p.kappa.empty(), "cournot: at least one firm is required");
  require(std::all_of(p.kappa.begin(), p.kappa.end(), [](double k) { return k >= 0; }),
          "cournot: cost curvatures kappa must be nonnegative");
  const std::size_t n = p.kappa.size();
  Matrix A(n, n, p.b);
  for (std::size_t i = 0; i < n; ++i) A(i, i) += p.b + p.kappa[i];
  GameMap m = make_affine_map("cournot", A, Vec(n, -p.a), FeasibleRegion::cube(n, 0.0, p.a / p.b));
  for (std::size_t i = 0; i < n; ++i) {
    m.players.push_back({i, i + 1, [p, i](std::span<const double> x) {
                           const double price = p.a - p.b * total(x);
                           return -(x[i] * price - 0.5 * p.kappa[i] * x[i] * x[i]);
                         }});
  }
  return m;
}

GameMap make_resource_alloc(const ResourceAllocParams& p) {
  require(p.beta > 0, "resource_alloc: beta must be positive");
  require(p.alpha.size() >= 2, "resource_alloc: at least two users are required");
  require(std::all_of(p.alpha.begin(), p.alpha.end(), [](double a) { return a > 0; }),
          "resource_alloc: alpha_i must be positive");
  require(p.epsilon > 0 && p.epsilon < 1, "resource_alloc: epsilon must lie in (0, 1)");
  const std::size_t n = p.alpha.size();
  GameMap m;
  m.name = "resource_alloc";
  m.dimension = n;
  m.region = FeasibleRegion::cube(n, p.epsilon, 1.0);
  m.eval = [p](std::span<const double> x) { return congested_field(p.beta, p.alpha, x); };
  m.jacobian_analytic = [beta = p.beta](std::span<const double> x) { return congested_jacobian(beta, x); };
  for (std::size_t i = 0; i < n; ++i) {
    m.players.push_back({i, i + 1, [p, i](std::span<const double> x) {
                           return -(p.beta * x[i] / total(x) - p.alpha[i] * x[i]);
                         }});
  }
  return m;
}

GameMap make_taildrop(const TailDropParams& p) {
  require(p.beta > 1, "taildrop: beta must exceed 1");
  require(p.N >= 2, "taildrop: at least two users are required");
  require(p.epsilon > 0 && p.epsilon < 1, "taildrop: epsilon must lie in (0, 1)");
  require(p.piece >= 0 && p.piece <= 2, "taildrop: piece must be 0, 1 or 2");
  const std::size_t n = p.N;
  const Vec alpha(n, p.beta - 1.0);
  const int piece = p.piece;
  const double beta = p.beta;
  auto congested = [piece](std::span<const double> x) { return piece == 2 || (piece == 0 && total(x) > 1.0); };

  GameMap m;
  m.name = piece == 0 ? "taildrop" : (piece == 1 ? "taildrop[linear]" : "taildrop[congested]");
  m.dimension = n;
  m.region = FeasibleRegion::cube(n, p.epsilon, 1.0);
  m.eval = [=](std::span<const double> x) {
    return congested(x) ? congested_field(beta, alpha, x) : Vec(x.size(), -1.0);
  };
  m.jacobian_analytic = [=](std::span<const double> x) {
    return congested(x) ? congested_jacobian(beta, x) : Matrix(x.size(), x.size());
  };
  for (std::size_t i = 0; i < n; ++i) {
    m.players.push_back({i, i + 1, [=](std::span<const double> x) {
                           return congested(x) ? -(beta * x[i] / total(x) - (beta - 1.0) * x[i]) : -x[i];
                         }});
  }
  if (piece == 0) {
    m.quadrature_segments = 8;
    m.kinks = [](std::span<const double> o, std::span<const double> x) {
      const double so = total(o);
      const double sx = total(x);
      std::vector<double> t;
      if (sx != so) t.push_back((1.0 - so) / (sx - so));
      return t;
    };
  }
  return m;
}

AffineForm gtd_affine(const GtdParams& p) {
  const std::size_t py = p.M.rows();
  require(p.M.square() && py > 0, "gtd: M must be square");
  require(p.A.rows() == py, "gtd: A must have as many rows as M");
  require(p.b.size() == py, "gtd: b must match M");
  for (std::size_t i = 0; i < py; ++i)
    for (std::size_t j = 0; j < py; ++j) require(p.M(i, j) == p.M(j, i), "gtd: M must be symmetric");
  require(symmetric_eigenvalues(p.M).front() > 0, "gtd: M must be positive definite");
  const std::size_t q = p.A.cols();
  Matrix J(py + q, py + q);
  Vec d(py + q, 0.0);
  for (std::size_t i = 0; i < py; ++i) {
    for (std::size_t j = 0; j < py; ++j) J(i, j) = p.M(i, j);
    for (std::size_t j = 0; j < q; ++j) {
      J(i, py + j) = p.A(i, j);
      J(py + j, i) = -p.A(i, j);
    }
    d[i] = -p.b[i];
  }
  return AffineForm::make(std::move(J), std::move(d));
}

GameMap make_gtd(const GtdParams& p) {
  AffineForm f = gtd_affine(p);
  const std::size_t n = f.A.rows();
  return make_affine_map("gtd", std::move(f.A), std::move(f.b), FeasibleRegion::l2_ball(n, p.radius));
}

std::pair<Vec, Vec> wgan_batch_means(const WganParams& p) {
  require(!p.x_batch.empty() && !p.z_batch.empty(), "wgan: batches must be nonempty");
  const std::size_t n = p.x_batch.front().size();
  const std::size_t m = p.z_batch.front().size();
  require(n > 0 && m > 0, "wgan: sample dimensions must be positive");
  Vec xbar(n, 0.0);
  Vec zbar(m, 0.0);
  for (const Vec& x : p.x_batch) {
    require(x.size() == n, "wgan: ragged data batch");
    for (std::size_t i = 0; i < n; ++i) xbar[i] += x[i] / static_cast<double>(p.x_batch.size());
  }
  for (const Vec& z : p.z_batch) {
    require(z.size() == m, "wgan: ragged noise batch");
    for (std::size_t j = 0; j < m; ++j) zbar[j] += z[j] / static_cast<double>(p.z_batch.size());
  }
  return {xbar, zbar};
}

GameMap make_wgan(const WganParams& p) {
  require(p.alpha >= 0, "wgan: regularization must be nonnegative");
  require(p.box > 0, "wgan: box half-width must be positive");
  const auto [xbar, zbar] = wgan_batch_means(p);
  const std::size_t n = xbar.size();
  const std::size_t m = zbar.size();
  const std::size_t g = n * m;
  Matrix J(g + n, g + n);
  Vec b(g + n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      J(i * m + j, g + i) = -zbar[j];
      J(g + i, i * m + j) = zbar[j];
    }
    b[g + i] = -xbar[i];
  }
  for (std::size_t k = 0; k < g + n; ++k) J(k, k) = p.alpha;
  return make_affine_map("wgan_affine", std::move(J), std::move(b), FeasibleRegion::cube(g + n, -p.box, p.box));
}

GameMap scale_players(const GameMap& map, std::span<const double> weights) {
  require_same_size(map.players.size(), weights.size(), "scale_players");
  Vec row_scale(map.dimension, 1.0);
  for (std::size_t i = 0; i < map.players.size(); ++i)
    for (std::size_t k = map.players[i].begin; k < map.players[i].end; ++k) row_scale[k] = weights[i];

  GameMap s = map;
  s.name = map.name + "[scaled]";
  s.affine.reset();
  s.lipschitz_hint.reset();
  s.eval = [f = map.eval, row_scale](std::span<const double> x) {
    Vec v = f(x);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] *= row_scale[k];
    return v;
  };
  if (map.jacobian_analytic) {
    s.jacobian_analytic = [jf = map.jacobian_analytic, row_scale](std::span<const double> x) {
      Matrix J = jf(x);
      for (std::size_t i = 0; i < J.rows(); ++i)
        for (std::size_t j = 0; j < J.cols(); ++j) J(i, j) *= row_scale[i];
      return J;
    };
  }
  for (std::size_t i = 0; i < s.players.size(); ++i) {
    s.players[i].cost = [c = map.players[i].cost, w = weights[i]](std::span<const double> x) { return w * c(x); };
  }
  return s;
}

std::vector<std::string> builtin_game_ids() {
  return {"counterexample", "cournot", "resource_alloc", "taildrop", "gtd", "wgan_affine", "mln",
          "venn_a", "venn_b", "venn_c", "venn_d", "venn_e", "venn_f", "venn_g", "venn_h", "venn_i", "affine"};
}

GameSpec default_spec(const std::string& id) {
  if (id == "counterexample") return {id, CounterexampleParams{}};
  if (id == "cournot") return {id, CournotParams{}};
  if (id == "resource_alloc") return {id, ResourceAllocParams{}};
  if (id == "taildrop") return {id, TailDropParams{}};
  if (id == "gtd") return {id, GtdParams{}};
  if (id == "wgan_affine" || id == "wgan") return {"wgan_affine", WganParams{}};
  if (id == "mln") return {id, MlnParams{}};
  if (id.size() == 6 && id.rfind("venn_", 0) == 0 && id[5] >= 'a' && id[5] <= 'i') {
    return {id, VennParams{id[5]}};
  }
  if (id == "affine") {
    return {id, AffineParams{Matrix::identity(2), Vec(2, 0.0), FeasibleRegion::cube(2, -1.0, 1.0)}};
  }
  throw std::invalid_argument("unknown game id '" + id + "'");
}

GameMap make_game(const GameSpec& spec) {
  return std::visit(
      [&spec](const auto& p) -> GameMap {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, CounterexampleParams>) {
          return make_counterexample();
        } else if constexpr (std::is_same_v<P, CournotParams>) {
          return make_cournot(p);
        } else if constexpr (std::is_same_v<P, ResourceAllocParams>) {
          return make_resource_alloc(p);
        } else if constexpr (std::is_same_v<P, TailDropParams>) {
          return make_taildrop(p);
        } else if constexpr (std::is_same_v<P, GtdParams>) {
          return make_gtd(p);
        } else if constexpr (std::is_same_v<P, WganParams>) {
          return make_wgan(p);
        } else if constexpr (std::is_same_v<P, MlnParams>) {
          return make_mln(p).map;
        } else if constexpr (std::is_same_v<P, VennParams>) {
          return make_venn_example(p.id).map;
        } else {
          require(p.A.square() && p.A.rows() == p.region.dimension(), "affine: A must be square and match the region");
          return make_affine_map(spec.id, p.A, p.b, p.region);
        }
      },
      spec.params);
}

}  // namespace omg
